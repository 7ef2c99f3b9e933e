//! Truncated formal power series in one variable `t`.
//!
//! Coefficients live in any commutative [`Algebra`] over [`Scalar`]: plain
//! scalars, symmetric functions, or central elements of a Hecke algebra.

use std::fmt::Debug;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::coeff::Scalar;
use crate::error::{Error, Result};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 8;

/// Minimal interface a coefficient algebra must provide.
pub trait Algebra: Clone + PartialEq + Debug {
    const NAME: &'static str;

    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &Scalar) -> Self;

    /// Multiplicative inverse, when one exists and is cheap to find.
    fn try_inverse(&self) -> Option<Self>;

    /// Whether two elements live in the same algebra (e.g. same strand count).
    fn compatible(&self, _other: &Self) -> bool {
        true
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    /// Division by a positive integer.
    fn div_int(&self, k: i64) -> Self {
        self.scale(&Scalar::from_int(k).inv().expect("nonzero integer"))
    }
}

impl Algebra for Scalar {
    const NAME: &'static str = "scalar";

    fn zero_like(&self) -> Self {
        Scalar::zero()
    }
    fn one_like(&self) -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Scalar) -> Self {
        self * c
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
}

/// `c_0 + c_1 t + ... + c_N t^N`, exact modulo `t^(N+1)`.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries<A: Algebra> {
    coeffs: Vec<A>,
}

impl<A: Algebra> TruncSeries<A> {
    /// Builds a series of order `order`, padding or truncating `coeffs`.
    pub fn new(coeffs: Vec<A>, order: usize) -> Result<Self> {
        let first = coeffs
            .first()
            .ok_or_else(|| Error::InvalidArgument("series needs a constant term".into()))?;
        if coeffs.iter().any(|c| !first.compatible(c)) {
            return Err(Error::AlgebraMismatch);
        }
        let zero = first.zero_like();
        let mut coeffs = coeffs;
        coeffs.resize(order + 1, zero);
        Ok(TruncSeries { coeffs })
    }

    pub fn constant(c: A, order: usize) -> Self {
        let zero = c.zero_like();
        let mut coeffs = vec![zero; order + 1];
        coeffs[0] = c;
        TruncSeries { coeffs }
    }

    /// The series `1` with coefficients in the algebra of `like`.
    pub fn one(like: &A, order: usize) -> Self {
        Self::constant(like.one_like(), order)
    }

    /// `1 + c t`.
    pub fn linear(c: A, order: usize) -> Self {
        let mut s = Self::one(&c, order);
        if order >= 1 {
            s.coeffs[1] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &A {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[A] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn check(&self, other: &Self) -> Result<usize> {
        if !self.coeffs[0].compatible(&other.coeffs[0]) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(self.order().min(other.order()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let n = self.check(other)?;
        Ok(TruncSeries {
            coeffs: (0..=n).map(|k| self.coeffs[k].add(&other.coeffs[k])).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let n = self.check(other)?;
        Ok(TruncSeries {
            coeffs: (0..=n).map(|k| self.coeffs[k].sub(&other.coeffs[k])).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(A::neg).collect(),
        }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let n = self.check(other)?;
        let mut out = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[0].zero_like();
            for i in 0..=k {
                let (a, b) = (&self.coeffs[i], &other.coeffs[k - i]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(b));
            }
            out.push(acc);
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Multiplies every coefficient by a scalar.
    pub fn scale(&self, c: &Scalar) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect(),
        }
    }

    /// Substitutes `t -> c t`.
    pub fn scale_t(&self, c: &Scalar) -> Self {
        let mut pow = Scalar::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            coeffs.push(x.scale(&pow));
            pow = &pow * c;
        }
        TruncSeries { coeffs }
    }

    /// Multiplicative inverse; needs an invertible constant term.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].try_inverse().ok_or(Error::NonInvertible)?;
        let n = self.order();
        let mut out: Vec<A> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = self.coeffs[0].zero_like();
            for i in 1..=k {
                let a = &self.coeffs[i];
                if a.is_zero() || out[k - i].is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(&out[k - i]));
            }
            out.push(acc.mul(&inv0).neg());
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// `self / other`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inverse()?)
    }

    /// Logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTerm { expected: "1" });
        }
        let n = self.order();
        let zero = self.coeffs[0].zero_like();
        let mut out: Vec<A> = vec![zero.clone()];
        // k L_k = k f_k - sum_{j=1}^{k-1} j L_j f_{k-j}
        for k in 1..=n {
            let mut acc = self.coeffs[k].scale(&Scalar::from_int(k as i64));
            for (j, l) in out.iter().enumerate().take(k).skip(1) {
                let f = &self.coeffs[k - j];
                if l.is_zero() || f.is_zero() {
                    continue;
                }
                acc = acc.sub(&l.mul(f).scale(&Scalar::from_int(j as i64)));
            }
            out.push(acc.div_int(k as i64));
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Exponential of a series with constant term 0.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm { expected: "0" });
        }
        let n = self.order();
        let mut out: Vec<A> = vec![self.coeffs[0].one_like()];
        // k E_k = sum_{j=1}^{k} j g_j E_{k-j}
        for k in 1..=n {
            let mut acc = self.coeffs[0].zero_like();
            for j in 1..=k {
                let (g, e) = (&self.coeffs[j], &out[k - j]);
                if g.is_zero() || e.is_zero() {
                    continue;
                }
                acc = acc.add(&g.mul(e).scale(&Scalar::from_int(j as i64)));
            }
            out.push(acc.div_int(k as i64));
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Degrees in which two series of the same algebra differ.
    pub fn mismatched_degrees(&self, other: &Self) -> Vec<usize> {
        let n = self.order().min(other.order());
        (0..=n).filter(|&k| self.coeffs[k] != other.coeffs[k]).collect()
    }
}

impl<A: Algebra + Serialize> Serialize for TruncSeries<A> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("TruncSeries", 3)?;
        st.serialize_field("algebra", A::NAME)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("coeffs", &self.coeffs)?;
        st.end()
    }
}
