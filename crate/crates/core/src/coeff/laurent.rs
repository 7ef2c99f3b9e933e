use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(e_v, e_s)`.
pub type Exp = (i32, i32);

/// Integer Laurent polynomial in `v` and `s`.
///
/// Terms are kept sorted lexicographically by `(e_v, e_s)` with no zero
/// coefficients, so equality is structural.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntLaurent {
    terms: Vec<(Exp, BigInt)>,
}

impl IntLaurent {
    pub fn zero() -> Self {
        IntLaurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(ev: i32, es: i32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            IntLaurent {
                terms: vec![((ev, es), c)],
            }
        }
    }

    pub fn v() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn s() -> Self {
        Self::monomial(0, 1, 1)
    }

    /// Builds a polynomial from arbitrary terms, merging repeats and dropping zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exp, BigInt)>,
    {
        let mut terms: Vec<(Exp, BigInt)> = terms.into_iter().collect();
        terms.sort_by_key(|t| t.0);
        let mut out: Vec<(Exp, BigInt)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        IntLaurent { terms: out }
    }

    pub fn terms(&self) -> &[(Exp, BigInt)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// The constant term, if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [((0, 0), c)] => Some(c.clone()),
            _ => None,
        }
    }

    /// Lexicographically greatest term.
    pub fn leading(&self) -> Option<&(Exp, BigInt)> {
        self.terms.last()
    }

    /// Componentwise minimum exponent; `(0, 0)` for zero.
    pub fn min_exp(&self) -> Exp {
        if self.is_zero() {
            return (0, 0);
        }
        self.terms.iter().fold((i32::MAX, i32::MAX), |(a, b), ((ev, es), _)| {
            (a.min(*ev), b.min(*es))
        })
    }

    /// Componentwise maximum exponent; `(0, 0)` for zero.
    pub fn max_exp(&self) -> Exp {
        if self.is_zero() {
            return (0, 0);
        }
        self.terms.iter().fold((i32::MIN, i32::MIN), |(a, b), ((ev, es), _)| {
            (a.max(*ev), b.max(*es))
        })
    }

    /// Multiplies by `v^dv s^ds`.
    pub fn shift(&self, dv: i32, ds: i32) -> Self {
        IntLaurent {
            terms: self
                .terms
                .iter()
                .map(|((ev, es), c)| ((ev + dv, es + ds), c.clone()))
                .collect(),
        }
    }

    /// Gcd of the integer coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        IntLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Exact division by an integer; `None` if some coefficient is not divisible.
    pub fn div_int(&self, k: &BigInt) -> Option<Self> {
        if k.is_zero() {
            return None;
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            terms.push((*e, q));
        }
        Some(IntLaurent { terms })
    }

    /// Substitutes `v -> v^-1`, `s -> s^-1`.
    pub fn mirror(&self) -> Self {
        let mut terms: Vec<(Exp, BigInt)> = self
            .terms
            .iter()
            .map(|((ev, es), c)| ((-ev, -es), c.clone()))
            .collect();
        terms.reverse();
        IntLaurent { terms }
    }

    /// Substitutes `s -> sign * s^k` for `k = ±1` (used for `s -> -s^-1`).
    pub fn substitute_s(&self, k: i32, negate: bool) -> Self {
        IntLaurent::from_terms(self.terms.iter().map(|((ev, es), c)| {
            let c = if negate && es.rem_euclid(2) == 1 {
                -c.clone()
            } else {
                c.clone()
            };
            ((*ev, es * k), c)
        }))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / d` in the Laurent ring, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &IntLaurent) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_monomial() {
            let ((dv, ds), dc) = &d.terms[0];
            return self.div_int(dc).map(|q| q.shift(-dv, -ds));
        }
        let (amin, amax) = (self.min_exp(), self.max_exp());
        let (bmin, bmax) = (d.min_exp(), d.max_exp());
        let lo = (amin.0 - bmin.0, amin.1 - bmin.1);
        let hi = (amax.0 - bmax.0, amax.1 - bmax.1);
        if lo.0 > hi.0 || lo.1 > hi.1 {
            return None;
        }
        let ((lv, ls), lc) = d.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot: Vec<(Exp, BigInt)> = Vec::new();
        while let Some(((rv, rs), rc)) = rem.leading().cloned() {
            let (qv, qs) = (rv - lv, rs - ls);
            if qv < lo.0 || qv > hi.0 || qs < lo.1 || qs > hi.1 {
                return None;
            }
            let (q, r) = rc.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            rem = &rem - &d.shift(qv, qs).scale(&q);
            quot.push(((qv, qs), q));
        }
        Some(IntLaurent::from_terms(quot))
    }

    /// Evaluates at rational points; `None` when a negative power hits zero.
    pub fn eval(&self, v0: &BigRational, s0: &BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for ((ev, es), c) in &self.terms {
            let pv = rational_pow(v0, *ev)?;
            let ps = rational_pow(s0, *es)?;
            acc += BigRational::from_integer(c.clone()) * pv * ps;
        }
        Some(acc)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for (e, c) in &b[j..] {
            out.push((*e, if negate { -c } else { c.clone() }));
        }
        IntLaurent { terms: out }
    }
}

fn rational_pow(x: &BigRational, e: i32) -> Option<BigRational> {
    if e < 0 && x.is_zero() {
        return None;
    }
    Some(num_traits::pow::Pow::pow(x, e))
}

impl<'a> Add<&'a IntLaurent> for &'a IntLaurent {
    type Output = IntLaurent;
    fn add(self, rhs: &IntLaurent) -> IntLaurent {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a IntLaurent> for &'a IntLaurent {
    type Output = IntLaurent;
    fn sub(self, rhs: &IntLaurent) -> IntLaurent {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a IntLaurent> for &'a IntLaurent {
    type Output = IntLaurent;
    fn mul(self, rhs: &IntLaurent) -> IntLaurent {
        if self.is_zero() || rhs.is_zero() {
            return IntLaurent::zero();
        }
        if rhs.is_monomial() {
            let ((dv, ds), c) = &rhs.terms[0];
            return self.shift(*dv, *ds).scale(c);
        }
        if self.is_monomial() {
            let ((dv, ds), c) = &self.terms[0];
            return rhs.shift(*dv, *ds).scale(c);
        }
        let mut prods = Vec::with_capacity(self.num_terms() * rhs.num_terms());
        for ((av, as_), ac) in &self.terms {
            for ((bv, bs), bc) in &rhs.terms {
                prods.push(((av + bv, as_ + bs), ac * bc));
            }
        }
        IntLaurent::from_terms(prods)
    }
}

impl Neg for &IntLaurent {
    type Output = IntLaurent;
    fn neg(self) -> IntLaurent {
        IntLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for IntLaurent {
    type Output = IntLaurent;
    fn neg(mut self) -> IntLaurent {
        for (_, c) in self.terms.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Add for IntLaurent {
    type Output = IntLaurent;
    fn add(self, rhs: IntLaurent) -> IntLaurent {
        &self + &rhs
    }
}

impl Sub for IntLaurent {
    type Output = IntLaurent;
    fn sub(self, rhs: IntLaurent) -> IntLaurent {
        &self - &rhs
    }
}

impl Mul for IntLaurent {
    type Output = IntLaurent;
    fn mul(self, rhs: IntLaurent) -> IntLaurent {
        &self * &rhs
    }
}

impl AddAssign<&IntLaurent> for IntLaurent {
    fn add_assign(&mut self, rhs: &IntLaurent) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        *self = self.merge(rhs, false);
    }
}

impl SubAssign<&IntLaurent> for IntLaurent {
    fn sub_assign(&mut self, rhs: &IntLaurent) {
        *self = self.merge(rhs, true);
    }
}

impl Zero for IntLaurent {
    fn zero() -> Self {
        IntLaurent::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for IntLaurent {
    fn one() -> Self {
        IntLaurent::one()
    }
}

impl From<i64> for IntLaurent {
    fn from(c: i64) -> Self {
        IntLaurent::constant(c)
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: &str, e: i32, first: &mut bool) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !*first {
        write!(f, "*")?;
    }
    *first = false;
    if e == 1 {
        write!(f, "{name}")
    } else {
        write!(f, "{name}^{e}")
    }
}

impl fmt::Display for IntLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest terms first reads more naturally
        for (idx, ((ev, es), c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut first = true;
            if !mag.is_one() || (*ev == 0 && *es == 0) {
                write!(f, "{mag}")?;
                first = false;
            }
            write_var(f, "v", *ev, &mut first)?;
            write_var(f, "s", *es, &mut first)?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i32, i32, i64)]) -> IntLaurent {
        IntLaurent::from_terms(terms.iter().map(|&(a, b, c)| ((a, b), BigInt::from(c))))
    }

    #[test]
    fn add_cancels_to_zero() {
        let a = p(&[(0, 1, 1), (0, -1, -1)]);
        assert!((&a - &a).is_zero());
        assert_eq!(&a + &(-&a), IntLaurent::zero());
    }

    #[test]
    fn product_of_binomials() {
        // (s - s^-1)(s + s^-1) = s^2 - s^-2
        let a = p(&[(0, 1, 1), (0, -1, -1)]);
        let b = p(&[(0, 1, 1), (0, -1, 1)]);
        assert_eq!(&a * &b, p(&[(0, 2, 1), (0, -2, -1)]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[(0, 2, 1), (0, -2, -1)]);
        let b = p(&[(0, 1, 1), (0, -1, -1)]);
        assert_eq!(a.div_exact(&b), Some(p(&[(0, 1, 1), (0, -1, 1)])));
        let c = p(&[(0, 1, 1), (1, 0, 1)]);
        assert_eq!(a.div_exact(&c), None);
        assert_eq!(p(&[(0, 0, 3)]).div_exact(&p(&[(0, 0, 2)])), None);
    }

    #[test]
    fn mirror_reverses_exponents() {
        let a = p(&[(1, 2, 3), (-1, 0, 1)]);
        assert_eq!(a.mirror(), p(&[(-1, -2, 3), (1, 0, 1)]));
        assert_eq!(a.mirror().mirror(), a);
    }

    #[test]
    fn display() {
        let a = p(&[(0, 1, 1), (0, -1, -1), (-1, 0, 2)]);
        assert_eq!(a.to_string(), "s - s^-1 + 2*v^-1");
        assert_eq!(IntLaurent::constant(-3).to_string(), "-3");
    }
}
