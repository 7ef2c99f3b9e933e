//! Symmetric functions over `Scalar`, the model of the positive annulus
//! skein. Elements are stored in the basis of complete monomials
//! `h_λ = h_{λ_1} h_{λ_2} ⋯`; Schur functions, power sums and elementary
//! functions are conversion layers on top.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::coeff::Scalar;
use crate::error::{Error, Result};
use crate::hecke::t_circle;
use crate::partition::{partitions, Partition};
use crate::repn::central_scalar;
use crate::series::{Algebra, TruncSeries};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFunc {
    terms: BTreeMap<Partition, Scalar>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(Partition::empty(), c)
    }

    /// `h_k`, with `h_0 = 1`.
    pub fn h(k: usize) -> Self {
        Self::monomial(Partition::row(k), Scalar::one())
    }

    /// `c · h_λ`.
    pub fn monomial(lambda: Partition, c: Scalar) -> Self {
        let mut f = Self::zero();
        f.add_term(lambda, c);
        f
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, Scalar)>,
    {
        let mut f = Self::zero();
        for (l, c) in terms {
            f.add_term(l, c);
        }
        f
    }

    fn add_term(&mut self, lambda: Partition, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Coefficients in the `h`-monomial basis.
    pub fn terms(&self) -> &BTreeMap<Partition, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> Scalar {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (l, c) = self.terms.iter().next().unwrap();
                l.is_empty().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn scale(&self, c: &Scalar) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc {
            terms: self.terms.iter().map(|(l, a)| (l.clone(), a * c)).collect(),
        }
    }

    fn mul_monomial(&self, lambda: &Partition, c: &Scalar) -> SymFunc {
        SymFunc {
            terms: self.terms.iter().map(|(l, a)| (l.union(lambda), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> SymFunc {
        (0..k).fold(SymFunc::one(), |acc, _| &acc * self)
    }

    /// The degree-`d` part.
    pub fn component(&self, d: usize) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.weight() == d)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// Whether every term has degree `d` (the zero function qualifies).
    pub fn is_homogeneous(&self, d: usize) -> bool {
        self.terms.keys().all(|l| l.weight() == d)
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Partition::weight).max().unwrap_or(0)
    }

    /// Fixes every `h_λ` and mirrors the coefficients.
    pub fn mirror(&self) -> SymFunc {
        SymFunc {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), c.mirror())).collect(),
        }
    }

    /// Coefficients in the requested basis.
    pub fn expand(&self, basis: Basis) -> Expansion {
        let terms = match basis {
            Basis::H => self.terms.clone(),
            Basis::Schur => to_schur(self),
            Basis::P => to_p(self),
        };
        Expansion {
            basis,
            terms: terms.into_iter().collect(),
        }
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;

    fn add(self, other: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;

    fn sub(self, other: &SymFunc) -> SymFunc {
        self + &-other
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;

    fn neg(self) -> SymFunc {
        SymFunc {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect(),
        }
    }
}

impl Mul for &SymFunc {
    type Output = SymFunc;

    fn mul(self, other: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (l, c) in &other.terms {
            for (k, a) in &self.terms {
                out.add_term(k.union(l), a * c);
            }
        }
        out
    }
}

impl Algebra for SymFunc {
    const NAME: &'static str = "symfun";

    fn zero_like(&self) -> Self {
        SymFunc::zero()
    }
    fn one_like(&self) -> Self {
        SymFunc::one()
    }
    fn is_zero(&self) -> bool {
        SymFunc::is_zero(self)
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
        SymFunc::scale(self, c)
    }
    fn try_inverse(&self) -> Option<Self> {
        Some(SymFunc::constant(self.as_constant()?.inv().ok()?))
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (l, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*h{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Basis tag for serialized expansions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Basis {
    #[serde(rename = "h")]
    H,
    #[serde(rename = "schur")]
    Schur,
    #[serde(rename = "p")]
    P,
}

/// A symmetric function written out in one basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Expansion {
    pub basis: Basis,
    pub terms: Vec<(Partition, Scalar)>,
}

#[derive(Serialize)]
struct TermJson<'a> {
    partition: &'a Partition,
    coeff: &'a Scalar,
}

impl Serialize for Expansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            basis: Basis,
            terms: Vec<TermJson<'a>>,
        }
        Out {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(partition, coeff)| TermJson { partition, coeff })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.expand(Basis::H).serialize(serializer)
    }
}

/// Jacobi–Trudi: `s_λ = det(h_{λ_i - i + j})`.
pub fn schur(lambda: &Partition) -> SymFunc {
    let parts = lambda.parts();
    let l = parts.len();
    let entry = |i: usize, j: usize| -> Option<usize> {
        let k = parts[i] as i64 - i as i64 + j as i64;
        (k >= 0).then_some(k as usize)
    };
    // Laplace expansion along rows, memoized on the set of used columns
    fn det(
        mask: u32,
        l: usize,
        entry: &dyn Fn(usize, usize) -> Option<usize>,
        memo: &mut HashMap<u32, SymFunc>,
    ) -> SymFunc {
        let row = mask.count_ones() as usize;
        if row == l {
            return SymFunc::one();
        }
        if let Some(f) = memo.get(&mask) {
            return f.clone();
        }
        let mut out = SymFunc::zero();
        let mut free_before = 0;
        for j in 0..l {
            if mask & (1 << j) != 0 {
                continue;
            }
            if let Some(k) = entry(row, j) {
                let minor = det(mask | (1 << j), l, entry, memo);
                let sign = if free_before % 2 == 0 { Scalar::one() } else { Scalar::from_int(-1) };
                out = &out + &minor.mul_monomial(&Partition::row(k), &sign);
            }
            free_before += 1;
        }
        memo.insert(mask, out.clone());
        out
    }
    det(0, l, &entry, &mut HashMap::new())
}

/// Schur coefficients, by triangular elimination: `s_λ = h_λ + (lex larger terms)`.
pub fn to_schur(f: &SymFunc) -> BTreeMap<Partition, Scalar> {
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some((lambda, c)) = rest.terms.iter().next().map(|(l, c)| (l.clone(), c.clone())) {
        rest = &rest - &schur(&lambda).scale(&c);
        out.insert(lambda, c);
    }
    out
}

pub fn from_schur(coeffs: &BTreeMap<Partition, Scalar>) -> SymFunc {
    coeffs
        .iter()
        .fold(SymFunc::zero(), |acc, (l, c)| &acc + &schur(l).scale(c))
}

/// `H(t) = 1 + Σ h_k t^k`.
pub fn h_series(order: usize) -> TruncSeries<SymFunc> {
    TruncSeries::new((0..=order).map(SymFunc::h).collect(), order).expect("nonempty")
}

/// `P_1, …, P_max` from `Σ P_m t^m / m = ln H(t)`; index 0 is unused.
pub fn power_sums(max: usize) -> Vec<SymFunc> {
    let log = h_series(max).log().expect("H(0) = 1");
    let mut out = vec![SymFunc::zero()];
    for m in 1..=max {
        out.push(log.coeff(m).scale(&Scalar::from_int(m as i64)));
    }
    out
}

/// The power sum `P_m`.
pub fn power_sum(m: usize) -> Result<SymFunc> {
    if m == 0 {
        return Err(crate::error::invalid("power sums need m >= 1"));
    }
    Ok(power_sums(m).swap_remove(m))
}

/// `e_0, …, e_max` from `E(-t) H(t) = 1`.
pub fn elementaries(max: usize) -> Vec<SymFunc> {
    let inv = h_series(max).inverse().expect("H(0) = 1");
    (0..=max)
        .map(|n| {
            let c = inv.coeff(n);
            if n % 2 == 0 {
                c.clone()
            } else {
                -c
            }
        })
        .collect()
}

pub fn elementary(n: usize) -> SymFunc {
    elementaries(n).swap_remove(n)
}

/// `E(t) = 1 + Σ e_k t^k`.
pub fn e_series(order: usize) -> TruncSeries<SymFunc> {
    TruncSeries::new(elementaries(order), order).expect("nonempty")
}

fn p_monomial(lambda: &Partition, ps: &[SymFunc]) -> SymFunc {
    lambda
        .parts()
        .iter()
        .fold(SymFunc::one(), |acc, &m| &acc * &ps[m])
}

/// Power-sum coefficients, eliminating from the lex-largest term, whose
/// `h`-leading coefficient in `p_λ` is `Π λ_i`.
pub fn to_p(f: &SymFunc) -> BTreeMap<Partition, Scalar> {
    let ps = power_sums(f.max_degree());
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some((lambda, c)) = rest.terms.iter().next_back().map(|(l, c)| (l.clone(), c.clone())) {
        let lead: i64 = lambda.parts().iter().map(|&x| x as i64).product();
        let coef = &c / &Scalar::from_int(lead);
        rest = &rest - &p_monomial(&lambda, &ps).scale(&coef);
        out.insert(lambda, coef);
    }
    out
}

pub fn from_p(coeffs: &BTreeMap<Partition, Scalar>) -> SymFunc {
    let max = coeffs.keys().map(Partition::weight).max().unwrap_or(0);
    let ps = power_sums(max);
    coeffs
        .iter()
        .fold(SymFunc::zero(), |acc, (l, c)| &acc + &p_monomial(l, &ps).scale(c))
}

/// `A(t) = H(st) E(-s^{-1}t) = 1 + z Σ A_m t^m`.
pub fn a_series(order: usize) -> TruncSeries<SymFunc> {
    let h = h_series(order).scale_t(&Scalar::s());
    let e = e_series(order).scale_t(&-Scalar::s_pow(-1));
    h.mul(&e).expect("same algebra")
}

/// `A_m`, the closure of the positive braid `σ_{m-1} ⋯ σ_1`.
pub fn closed_braid_a(m: usize) -> Result<SymFunc> {
    if m == 0 {
        return Err(crate::error::invalid("A_m needs m >= 1"));
    }
    let zi = Scalar::z().inv()?;
    Ok(a_series(m).coeff(m).scale(&zi))
}

/// The eigenvalue `t_λ` of the encircling loop on `s_λ`.
pub fn phi_eigenvalue(lambda: &Partition) -> Result<Scalar> {
    central_scalar(&t_circle(lambda.weight())?, lambda)
}

/// The loop-linking map on degree `n`: `s_λ ↦ t_λ s_λ`.
pub fn phi_apply(f: &SymFunc, n: usize) -> Result<SymFunc> {
    if !f.is_homogeneous(n) {
        return Err(Error::NotHomogeneous(n));
    }
    let mut eig = HashMap::new();
    for lambda in partitions(n) {
        let t = phi_eigenvalue(&lambda)?;
        eig.insert(lambda, t);
    }
    let scaled: BTreeMap<Partition, Scalar> = to_schur(f)
        .into_iter()
        .map(|(l, c)| {
            let t = &eig[&l];
            (l, &c * t)
        })
        .collect();
    Ok(from_schur(&scaled))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn hm(v: &[usize]) -> SymFunc {
        SymFunc::monomial(pt(v), Scalar::one())
    }

    fn int(c: i64) -> Scalar {
        Scalar::from_int(c)
    }

    #[test]
    fn products() {
        assert_eq!(&SymFunc::h(1) * &SymFunc::h(1), hm(&[1, 1]));
        assert_eq!(&SymFunc::h(2) * &SymFunc::h(1), hm(&[2, 1]));
        assert_eq!(&SymFunc::h(0) * &SymFunc::h(3), SymFunc::h(3));
    }

    #[test]
    fn jacobi_trudi() {
        assert_eq!(schur(&pt(&[3])), SymFunc::h(3));
        assert_eq!(schur(&pt(&[1, 1])), &hm(&[1, 1]) - &hm(&[2]));
        // s_(2,1) = h_2 h_1 - h_3
        assert_eq!(schur(&pt(&[2, 1])), &hm(&[2, 1]) - &hm(&[3]));
        assert_eq!(schur(&Partition::empty()), SymFunc::one());
        let mut want = BTreeMap::new();
        want.insert(pt(&[1, 1]), int(1));
        want.insert(pt(&[2]), int(1));
        assert_eq!(to_schur(&hm(&[1, 1])), want);
    }

    #[test]
    fn power_sum_expansions() {
        assert_eq!(power_sum(1).unwrap(), SymFunc::h(1));
        assert_eq!(power_sum(2).unwrap(), &hm(&[2]).scale(&int(2)) - &hm(&[1, 1]));
        let p3 = &(&hm(&[3]).scale(&int(3)) - &hm(&[2, 1]).scale(&int(3))) + &hm(&[1, 1, 1]);
        assert_eq!(power_sum(3).unwrap(), p3);
        let log2 = h_series(2).log().unwrap();
        assert_eq!(log2.coeff(2), &(&hm(&[2]) - &hm(&[1, 1]).scale(&(&int(1) / &int(2)))));
    }

    #[test]
    fn newton_against_classical_expansion() {
        // h_n = Σ_{|λ|=n} p_λ / z_λ
        for n in 1..=6 {
            let mut coeffs = BTreeMap::new();
            for l in partitions(n) {
                coeffs.insert(l.clone(), &int(1) / &int(l.z_factor() as i64));
            }
            assert_eq!(from_p(&coeffs), SymFunc::h(n));
            assert_eq!(to_p(&SymFunc::h(n)), coeffs);
        }
    }

    #[test]
    fn elementary_functions() {
        assert_eq!(elementary(0), SymFunc::one());
        assert_eq!(elementary(1), SymFunc::h(1));
        assert_eq!(elementary(2), &hm(&[1, 1]) - &hm(&[2]));
        for n in 1..=6 {
            assert_eq!(elementary(n), schur(&Partition::column(n)));
        }
    }

    #[test]
    fn closed_braids() {
        assert_eq!(closed_braid_a(1).unwrap(), SymFunc::h(1));
        let a2 = &schur(&pt(&[2])).scale(&Scalar::s()) - &schur(&pt(&[1, 1])).scale(&Scalar::s_pow(-1));
        assert_eq!(closed_braid_a(2).unwrap(), a2);
        assert!(closed_braid_a(0).is_err());
    }

    #[test]
    fn mirror_map() {
        assert_eq!(SymFunc::h(3).mirror(), SymFunc::h(3));
        let zh = SymFunc::h(1).scale(&Scalar::z());
        assert_eq!(zh.mirror(), -&zh);
    }

    #[test]
    fn phi_on_low_degrees() {
        let t1 = &Scalar::delta() + &(&Scalar::z() * &Scalar::v_pow(-1));
        assert_eq!(phi_apply(&SymFunc::h(1), 1).unwrap(), SymFunc::h(1).scale(&t1));
        assert_eq!(phi_apply(&SymFunc::h(2), 1), Err(Error::NotHomogeneous(1)));
        let s21 = schur(&pt(&[2, 1]));
        let t21 = phi_eigenvalue(&pt(&[2, 1])).unwrap();
        assert_eq!(phi_apply(&s21, 3).unwrap(), s21.scale(&t21));
    }

    #[test]
    fn json_bases() {
        let f = &hm(&[1, 1]) + &SymFunc::h(2).scale(&int(2));
        let js = serde_json::to_string(&f.expand(Basis::Schur)).unwrap();
        assert_eq!(
            js,
            r#"{"basis":"schur","terms":[{"partition":[1,1],"coeff":{"num":[[0,0,"1"]],"den":[[0,0,"1"]]}},{"partition":[2],"coeff":{"num":[[0,0,"3"]],"den":[[0,0,"1"]]}}]}"#
        );
        assert!(serde_json::to_string(&f).unwrap().starts_with(r#"{"basis":"h""#));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn symfunc(max_deg: usize) -> impl Strategy<Value = SymFunc> {
            let all: Vec<Partition> = (0..=max_deg).flat_map(partitions).collect();
            prop::collection::vec((0..all.len(), -3i64..=3, -1i32..=1), 0..5).prop_map(move |ts| {
                SymFunc::from_terms(ts.into_iter().map(|(k, c, e)| (all[k].clone(), Scalar::monomial(0, e, c))))
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]

            #[test]
            fn commutative_ring(f in symfunc(3), g in symfunc(3), h in symfunc(2)) {
                prop_assert_eq!(&f * &g, &g * &f);
                prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
                prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            }

            #[test]
            fn conversions_round_trip(f in symfunc(5)) {
                prop_assert_eq!(from_schur(&to_schur(&f)), f.clone());
                prop_assert_eq!(from_p(&to_p(&f)), f.clone());
                prop_assert_eq!(f.mirror().mirror(), f);
            }
        }
    }
}
