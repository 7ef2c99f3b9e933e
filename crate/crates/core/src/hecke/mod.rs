//! The Hecke algebra `H_n` in the basis of positive permutation braids `ω_π`,
//! with relations `σ_i² = zσ_i + 1` and the braid relations.
//!
//! Right multiplication by `σ_i` sends `ω_π` to `ω_{πs_i}` when the length
//! goes up, and to `ω_{πs_i} + zω_π` when it goes down.

pub(crate) mod kernel;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coeff::{lcm_denominators, IntLaurent, Scalar};
use crate::error::{invalid, Error, Result};
use crate::perm::{all_perms, Perm, DEFAULT_ENUM_BOUND, MAX_STRANDS};
use crate::series::{Algebra, TruncSeries};
use kernel::{Quadratic, Terms};

/// Finite `Scalar`-linear combination of the `ω_π`, `π ∈ S_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElt {
    n: usize,
    terms: BTreeMap<Perm, Scalar>,
}

impl HeckeElt {
    pub fn zero(n: usize) -> Self {
        HeckeElt {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Scalar::one())
    }

    /// `c · 1`.
    pub fn scalar(n: usize, c: Scalar) -> Self {
        let mut x = Self::zero(n);
        if !c.is_zero() {
            x.terms.insert(Perm::identity(n), c);
        }
        x
    }

    /// The basis element `ω_π`.
    pub fn basis(p: Perm) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(p, Scalar::one());
        HeckeElt { n: p.n(), terms }
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Perm, Scalar)>,
    {
        let mut x = Self::zero(n);
        for (p, c) in terms {
            if p.n() != n {
                return Err(Error::SizeMismatch {
                    left: n,
                    right: p.n(),
                });
            }
            x.add_term(p, c);
        }
        Ok(x)
    }

    /// `σ_i` in `H_n`.
    pub fn generator(i: usize, n: usize) -> Result<Self> {
        Ok(Self::basis(Perm::simple(i, n)?))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Perm, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, p: &Perm) -> Scalar {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient `c` when `self = c · 1`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (p, c) = self.terms.iter().next().unwrap();
                p.is_identity().then(|| c.clone())
            }
            _ => None,
        }
    }

    fn add_term(&mut self, p: Perm, c: Scalar) {
        kernel::accumulate(&mut self.terms, p, c);
    }

    fn check(&self, other: &HeckeElt) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &HeckeElt) -> Result<HeckeElt> {
        self.check(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(*p, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &HeckeElt) -> Result<HeckeElt> {
        self.checked_add(&-other)
    }

    pub fn scale(&self, c: &Scalar) -> HeckeElt {
        HeckeElt {
            n: self.n,
            terms: kernel::scale(&self.terms, c),
        }
    }

    /// Common denominator form: `self = X / D` with Laurent coefficients.
    pub(crate) fn cleared(&self) -> (Terms<IntLaurent>, IntLaurent) {
        let d = lcm_denominators(self.terms.values().map(Scalar::denom));
        let terms = self
            .terms
            .iter()
            .map(|(p, c)| {
                let k = if d.is_one() {
                    IntLaurent::one()
                } else {
                    d.div_exact(c.denom()).expect("lcm is a multiple")
                };
                (*p, c.numer() * &k)
            })
            .collect();
        (terms, d)
    }

    pub(crate) fn from_cleared(n: usize, terms: Terms<IntLaurent>, d: &IntLaurent) -> HeckeElt {
        let terms = terms
            .into_iter()
            .map(|(p, c)| {
                let c = if d.is_one() {
                    Scalar::from_laurent(c)
                } else {
                    Scalar::new(c, d.clone()).expect("nonzero denominator")
                };
                (p, c)
            })
            .collect();
        HeckeElt { n, terms }
    }

    /// Product in `H_n`.
    pub fn checked_mul(&self, other: &HeckeElt) -> Result<HeckeElt> {
        self.check(other)?;
        if let Some(c) = other.as_scalar() {
            return Ok(self.scale(&c));
        }
        if let Some(c) = self.as_scalar() {
            return Ok(other.scale(&c));
        }
        let (x, dx) = self.cleared();
        let (y, dy) = other.cleared();
        let prod = kernel::mul_along_words(&x, &y, &Quadratic::standard(), false);
        Ok(Self::from_cleared(self.n, prod, &(&dx * &dy)))
    }

    pub fn pow(&self, k: u32) -> HeckeElt {
        let mut acc = HeckeElt::identity(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn gen_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n {
            return Err(invalid(format!("generator index {i} out of range for H_{}", self.n)));
        }
        Ok(())
    }

    /// `self · σ_i^{±1}`.
    pub fn mul_gen(&self, i: usize, sign: i32) -> Result<HeckeElt> {
        self.gen_index(i)?;
        let (x, d) = self.cleared();
        let rel = Quadratic::standard();
        let y = if sign >= 0 {
            kernel::right_gen(&x, i, &rel)
        } else {
            kernel::right_gen_inv(&x, i, &rel)
        };
        Ok(Self::from_cleared(self.n, y, &d))
    }

    /// `σ_i · self`.
    pub fn gen_mul(&self, i: usize) -> Result<HeckeElt> {
        self.gen_index(i)?;
        let (x, d) = self.cleared();
        let y = kernel::left_gen(&x, i, &Quadratic::standard());
        Ok(Self::from_cleared(self.n, y, &d))
    }

    /// `ω_π · σ_i^{±1}`.
    pub fn mul_basis_by_gen(p: Perm, i: usize, sign: i32) -> Result<HeckeElt> {
        Self::basis(p).mul_gen(i, sign)
    }

    /// Ordered product of `σ_{|i|}^{sign i}` over a braid word.
    pub fn word_elt(n: usize, word: &[i32]) -> Result<HeckeElt> {
        if n > MAX_STRANDS {
            return Err(Error::BoundExceeded {
                what: "strands",
                value: n,
                bound: MAX_STRANDS,
            });
        }
        let rel = Quadratic::standard();
        let mut x: Terms<IntLaurent> = Terms::new();
        x.insert(Perm::identity(n), IntLaurent::one());
        for &g in word {
            let i = g.unsigned_abs() as usize;
            if i == 0 || i >= n {
                return Err(invalid(format!("braid generator {g} out of range for {n} strands")));
            }
            x = if g > 0 {
                kernel::right_gen(&x, i, &rel)
            } else {
                kernel::right_gen_inv(&x, i, &rel)
            };
        }
        Ok(Self::from_cleared(n, x, &IntLaurent::one()))
    }

    /// Standard inclusion `H_n ⊂ H_{n'}`.
    pub fn include(&self, n_new: usize) -> Result<HeckeElt> {
        if n_new < self.n {
            return Err(invalid(format!("cannot include H_{} into H_{n_new}", self.n)));
        }
        let mut terms = BTreeMap::new();
        for (p, c) in &self.terms {
            terms.insert(p.extend(n_new)?, c.clone());
        }
        Ok(HeckeElt { n: n_new, terms })
    }

    /// The one-dimensional evaluation `ω_π ↦ s^{l(π)}`.
    pub fn phi_s(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for (p, c) in &self.terms {
            acc += &(c * &Scalar::s_pow(p.length() as i32));
        }
        acc
    }

    /// Switches every crossing and inverts `v` and `s` in the coefficients.
    pub fn mirror(&self) -> HeckeElt {
        let (x, d) = self.cleared();
        let x: Terms<IntLaurent> = x.into_iter().map(|(p, c)| (p, c.mirror())).collect();
        let mut id = Terms::new();
        id.insert(Perm::identity(self.n), IntLaurent::one());
        let y = kernel::mul_along_words(&id, &x, &Quadratic::standard(), true);
        Self::from_cleared(self.n, y, &d.mirror())
    }

    /// Whether `self` commutes with every generator.
    pub fn is_central(&self) -> bool {
        let (x, _) = self.cleared();
        let rel = Quadratic::standard();
        (1..self.n).all(|i| kernel::right_gen(&x, i, &rel) == kernel::left_gen(&x, i, &rel))
    }

    /// `ω_π ↦ x^{l(π)} ω_π`.
    ///
    /// This is an algebra map onto the copy of `H_n` in which the generators
    /// satisfy `σ² = x^{-1}zσ + x^{-2}`.
    pub fn rescale(&self, x: &Scalar) -> HeckeElt {
        let mut pows = vec![Scalar::one()];
        let terms = self
            .terms
            .iter()
            .map(|(p, c)| {
                let l = p.length();
                while pows.len() <= l {
                    let next = pows.last().unwrap() * x;
                    pows.push(next);
                }
                (*p, c * &pows[l])
            })
            .filter(|(_, c)| !c.is_zero())
            .collect();
        HeckeElt { n: self.n, terms }
    }
}

/// Product in the algebra with generic quadratic relation `σ² = aσ + b`.
#[cfg(test)]
pub(crate) fn mul_with_quadratic(x: &HeckeElt, y: &HeckeElt, a: &Scalar, b: &Scalar) -> HeckeElt {
    let rel = Quadratic {
        a: a.clone(),
        b: b.clone(),
    };
    HeckeElt {
        n: x.n,
        terms: kernel::mul_along_words(&x.terms, &y.terms, &rel, false),
    }
}

/// `M(j) = Σ_{i<j} ω_{(i j)}`.
pub fn murphy_m(j: usize, n: usize) -> Result<HeckeElt> {
    if j < 2 || j > n {
        return Err(invalid(format!("Murphy element M({j}) needs 2 <= j <= n = {n}")));
    }
    let mut x = HeckeElt::zero(n);
    for i in 1..j {
        x.add_term(Perm::transposition(i, j, n)?, Scalar::one());
    }
    Ok(x)
}

/// `T(j) = (σ_{j-1} ⋯ σ_1)(σ_1 ⋯ σ_{j-1})`, strand `j` encircling strands `1..j-1`.
pub fn murphy_t(j: usize, n: usize) -> Result<HeckeElt> {
    if j < 1 || j > n {
        return Err(invalid(format!("T({j}) needs 1 <= j <= n = {n}")));
    }
    let mut word: Vec<i32> = (1..j as i32).rev().collect();
    word.extend(1..j as i32);
    HeckeElt::word_elt(n, &word)
}

/// Resolved form of the tangle with one loop around all `n` strands:
/// `δ + zv^{-1} Σ_j T(j)`.
pub fn t_circle(n: usize) -> Result<HeckeElt> {
    let mut x = HeckeElt::scalar(n, Scalar::delta());
    let c = &Scalar::z() * &Scalar::v_pow(-1);
    for j in 1..=n {
        x = &x + &murphy_t(j, n)?.scale(&c);
    }
    Ok(x)
}

/// `γ_n = 1 + sσ_{n-1} + s²σ_{n-1}σ_{n-2} + ⋯ + s^{n-1}σ_{n-1}⋯σ_1`.
pub fn gamma(n: usize) -> Result<HeckeElt> {
    if n == 0 {
        return Err(invalid("gamma needs n >= 1"));
    }
    let mut x = HeckeElt::identity(n);
    let mut p = Perm::identity(n);
    for k in 1..n {
        p = p.mul_simple_right(n - k);
        x.add_term(p, Scalar::s_pow(k as i32));
    }
    Ok(x)
}

/// `a_n = Σ_π s^{l(π)} ω_π`.
pub fn a_sym(n: usize) -> Result<HeckeElt> {
    weighted_sum(n, &Scalar::s())
}

/// `b_n = Σ_π (-s)^{-l(π)} ω_π`.
pub fn b_sym(n: usize) -> Result<HeckeElt> {
    weighted_sum(n, &-Scalar::s_pow(-1))
}

fn weighted_sum(n: usize, q: &Scalar) -> Result<HeckeElt> {
    let perms = all_perms(n)?;
    let max_len = n * n.saturating_sub(1) / 2;
    let mut pows = vec![Scalar::one()];
    for k in 1..=max_len {
        pows.push(&pows[k - 1] * q);
    }
    let terms = perms.into_iter().map(|p| (p, pows[p.length()].clone()));
    HeckeElt::from_terms(n, terms)
}

/// `Σ_π q^{2l(π)}`, the value of the matching one-dimensional evaluation
/// on `a_n` (or `b_n`).
fn poincare(n: usize, q: &Scalar) -> Result<Scalar> {
    if n > DEFAULT_ENUM_BOUND {
        return Err(Error::BoundExceeded {
            what: "n",
            value: n,
            bound: DEFAULT_ENUM_BOUND,
        });
    }
    let q2 = q * q;
    // Π_{k=1}^n (1 + q² + ⋯ + q^{2(k-1)})
    let mut acc = Scalar::one();
    for k in 1..=n {
        let mut f = Scalar::zero();
        let mut pw = Scalar::one();
        for _ in 0..k {
            f += &pw;
            pw = &pw * &q2;
        }
        acc = &acc * &f;
    }
    Ok(acc)
}

/// The row idempotent `h_n = a_n / φ_s(a_n)`.
pub fn h_idem(n: usize) -> Result<HeckeElt> {
    let norm = poincare(n, &Scalar::s())?;
    Ok(a_sym(n)?.scale(&norm.inv()?))
}

/// The column idempotent, `h_n` with `s` replaced by `-s^{-1}`.
pub fn e_idem(n: usize) -> Result<HeckeElt> {
    let norm = poincare(n, &-Scalar::s_pow(-1))?;
    Ok(b_sym(n)?.scale(&norm.inv()?))
}

/// `Σ_j T(j)^m`.
pub fn power_sum_t(m: u32, n: usize) -> Result<HeckeElt> {
    if m == 0 {
        return Err(invalid("power sums need m >= 1"));
    }
    let mut x = HeckeElt::zero(n);
    for j in 1..=n {
        x = &x + &murphy_t(j, n)?.pow(m);
    }
    Ok(x)
}

/// `HM(t) = Π_j (1 - T(j)t)^{-1}`.
pub fn murphy_series(n: usize, order: usize) -> Result<TruncSeries<HeckeElt>> {
    let mut acc = TruncSeries::one(&HeckeElt::identity(n), order);
    for j in 1..=n {
        let t = murphy_t(j, n)?;
        let mut coeffs = vec![HeckeElt::identity(n)];
        for k in 1..=order {
            coeffs.push(&coeffs[k - 1] * &t);
        }
        acc = acc.mul(&TruncSeries::new(coeffs, order)?)?;
    }
    Ok(acc)
}

/// `EM(t) = Π_j (1 + T(j)t)`.
pub fn elem_murphy_series(n: usize, order: usize) -> Result<TruncSeries<HeckeElt>> {
    let mut acc = TruncSeries::one(&HeckeElt::identity(n), order);
    for j in 1..=n {
        acc = acc.mul(&TruncSeries::linear(murphy_t(j, n)?, order))?;
    }
    Ok(acc)
}

impl Add for &HeckeElt {
    type Output = HeckeElt;

    /// Panics if the strand counts differ.
    fn add(self, other: &HeckeElt) -> HeckeElt {
        self.checked_add(other).expect("strand counts agree")
    }
}

impl Sub for &HeckeElt {
    type Output = HeckeElt;

    fn sub(self, other: &HeckeElt) -> HeckeElt {
        self.checked_sub(other).expect("strand counts agree")
    }
}

impl Mul for &HeckeElt {
    type Output = HeckeElt;

    fn mul(self, other: &HeckeElt) -> HeckeElt {
        self.checked_mul(other).expect("strand counts agree")
    }
}

impl Neg for &HeckeElt {
    type Output = HeckeElt;

    fn neg(self) -> HeckeElt {
        HeckeElt {
            n: self.n,
            terms: self.terms.iter().map(|(p, c)| (*p, -c)).collect(),
        }
    }
}

impl Algebra for HeckeElt {
    const NAME: &'static str = "hecke";

    fn zero_like(&self) -> Self {
        HeckeElt::zero(self.n)
    }
    fn one_like(&self) -> Self {
        HeckeElt::identity(self.n)
    }
    fn is_zero(&self) -> bool {
        HeckeElt::is_zero(self)
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
        HeckeElt::scale(self, c)
    }
    fn try_inverse(&self) -> Option<Self> {
        let c = self.as_scalar()?.inv().ok()?;
        Some(HeckeElt::scalar(self.n, c))
    }
    fn compatible(&self, other: &Self) -> bool {
        self.n == other.n
    }
}

impl fmt::Display for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*w{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H_{}[{self}]", self.n)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    perm: Perm,
    coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
struct EltJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for HeckeElt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        EltJson {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| TermJson {
                    perm: *p,
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HeckeElt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = EltJson::deserialize(deserializer)?;
        HeckeElt::from_terms(raw.n, raw.terms.into_iter().map(|t| (t.perm, t.coeff)))
            .map_err(D::Error::custom)
    }
}
