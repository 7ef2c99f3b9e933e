//! Sparse basis arithmetic shared by products, traces and mirror images.
//!
//! Elements are maps `Perm -> C` for a coefficient ring `C`. Most callers
//! clear denominators first and work over `IntLaurent`, which avoids a gcd
//! per addition.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::coeff::{z_laurent, IntLaurent, Scalar};
use crate::perm::Perm;

pub(crate) type Terms<C> = BTreeMap<Perm, C>;

pub(crate) trait Coef: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add_to(&mut self, other: &Self);
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
}

impl Coef for IntLaurent {
    fn is_zero(&self) -> bool {
        IntLaurent::is_zero(self)
    }
    fn is_one(&self) -> bool {
        IntLaurent::is_one(self)
    }
    fn add_to(&mut self, other: &Self) {
        *self += other;
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Coef for Scalar {
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Scalar::is_one(self)
    }
    fn add_to(&mut self, other: &Self) {
        *self += other;
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

/// Quadratic relation `σ² = aσ + b`.
#[derive(Clone)]
pub(crate) struct Quadratic<C> {
    pub a: C,
    pub b: C,
}

impl Quadratic<IntLaurent> {
    pub fn standard() -> Self {
        Quadratic {
            a: z_laurent(),
            b: IntLaurent::one(),
        }
    }
}

pub(crate) fn accumulate<C: Coef>(out: &mut Terms<C>, p: Perm, c: C) {
    if c.is_zero() {
        return;
    }
    match out.entry(p) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            e.get_mut().add_to(&c);
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

pub(crate) fn add_into<C: Coef>(out: &mut Terms<C>, x: Terms<C>) {
    if out.is_empty() {
        *out = x;
        return;
    }
    for (p, c) in x {
        accumulate(out, p, c);
    }
}

pub(crate) fn scale<C: Coef>(x: &Terms<C>, c: &C) -> Terms<C> {
    if c.is_zero() {
        return Terms::new();
    }
    if c.is_one() {
        return x.clone();
    }
    x.iter()
        .filter_map(|(p, a)| {
            let t = a.times(c);
            (!t.is_zero()).then_some((*p, t))
        })
        .collect()
}

/// `x · σ_i`.
pub(crate) fn right_gen<C: Coef>(x: &Terms<C>, i: usize, rel: &Quadratic<C>) -> Terms<C> {
    let mut out = Terms::new();
    for (p, c) in x {
        let q = p.mul_simple_right(i);
        if p.right_ascent(i) {
            accumulate(&mut out, q, c.clone());
        } else {
            accumulate(&mut out, q, c.times(&rel.b));
            accumulate(&mut out, *p, c.times(&rel.a));
        }
    }
    out
}

/// `x · σ_i^{-1}` for a relation with `b = 1`, where `σ^{-1} = σ - a`.
pub(crate) fn right_gen_inv<C: Coef>(x: &Terms<C>, i: usize, rel: &Quadratic<C>) -> Terms<C> {
    debug_assert!(rel.b.is_one());
    let mut out = Terms::new();
    for (p, c) in x {
        let q = p.mul_simple_right(i);
        accumulate(&mut out, q, c.clone());
        if p.right_ascent(i) {
            accumulate(&mut out, *p, c.times(&rel.a).negated());
        }
    }
    out
}

/// `σ_i · x`.
pub(crate) fn left_gen<C: Coef>(x: &Terms<C>, i: usize, rel: &Quadratic<C>) -> Terms<C> {
    let mut out = Terms::new();
    for (p, c) in x {
        let q = p.mul_simple_left(i);
        if p.left_ascent(i) {
            accumulate(&mut out, q, c.clone());
        } else {
            accumulate(&mut out, q, c.times(&rel.b));
            accumulate(&mut out, *p, c.times(&rel.a));
        }
    }
    out
}

/// `x · Φ(y)`, where `Φ(ω_ρ)` is the product of `σ_i` (or `σ_i^{-1}` when
/// `inverse` is set) along the canonical reduced word of `ρ`.
///
/// The words share prefixes through the coset decomposition, so `y` is split
/// by the position of its top strand and each part is handled one level down
/// before the descending tail `σ_{m-1} ⋯ σ_k` is applied once per part.
pub(crate) fn mul_along_words<C: Coef>(
    x: &Terms<C>,
    y: &Terms<C>,
    rel: &Quadratic<C>,
    inverse: bool,
) -> Terms<C> {
    let Some(first) = y.keys().next() else {
        return Terms::new();
    };
    let n = first.n();
    let parts: Vec<(Perm, C)> = y.iter().map(|(p, c)| (*p, c.clone())).collect();
    level(x, parts, n, rel, inverse)
}

fn level<C: Coef>(
    x: &Terms<C>,
    y: Vec<(Perm, C)>,
    m: usize,
    rel: &Quadratic<C>,
    inverse: bool,
) -> Terms<C> {
    if m <= 1 {
        debug_assert_eq!(y.len(), 1);
        return scale(x, &y[0].1);
    }
    let mut groups: BTreeMap<Option<usize>, Vec<(Perm, C)>> = BTreeMap::new();
    for (p, c) in y {
        let (u, k) = p.coset_at(m);
        groups.entry(k).or_default().push((u, c));
    }
    let mut out = Terms::new();
    for (k, part) in groups {
        let mut r = level(x, part, m - 1, rel, inverse);
        if let Some(k) = k {
            for i in (k..m).rev() {
                r = if inverse {
                    right_gen_inv(&r, i, rel)
                } else {
                    right_gen(&r, i, rel)
                };
            }
        }
        add_into(&mut out, r);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_perms;

    fn single(p: Perm) -> Terms<IntLaurent> {
        let mut t = Terms::new();
        t.insert(p, IntLaurent::one());
        t
    }

    #[test]
    fn words_multiply_to_basis_elements() {
        let rel = Quadratic::standard();
        for n in 1..=5 {
            let id = single(Perm::identity(n));
            for p in all_perms(n).unwrap() {
                assert_eq!(mul_along_words(&id, &single(p), &rel, false), single(p));
            }
        }
    }

    #[test]
    fn inverse_words_undo() {
        let rel = Quadratic::standard();
        for p in all_perms(4).unwrap() {
            let x = single(p);
            let mut back = mul_along_words(&single(Perm::identity(4)), &x, &rel, true);
            let mut w = p.reduced_word();
            w.reverse();
            for i in w {
                back = right_gen(&back, i, &rel);
            }
            assert_eq!(back, single(Perm::identity(4)));
        }
    }

    #[test]
    fn left_and_right_generators_agree_on_identity() {
        let rel = Quadratic::standard();
        let id = single(Perm::identity(3));
        for i in 1..3 {
            assert_eq!(left_gen(&id, i, &rel), right_gen(&id, i, &rel));
        }
    }
}
