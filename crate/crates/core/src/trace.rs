//! Plane evaluation of closures: the Markov trace on `H_n`, its multiplicative
//! counterpart on symmetric functions, and HOMFLY polynomials of closed braids.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use crate::coeff::{z_laurent, IntLaurent, Scalar};
use crate::error::{invalid, Result};
use crate::hecke::kernel::{self, accumulate, add_into, Quadratic, Terms};
use crate::hecke::{h_idem, HeckeElt};
use crate::perm::Perm;
use crate::symfun::SymFunc;

/// Value of the closure of `x`, with `δ` per free loop and `v^{-1}` per
/// positive curl.
///
/// Strands are closed from the top down. A basis element fixing the top
/// strand contributes a loop `δ`; otherwise `ω_π = ω_u σ_{m-1} σ_{m-2} ⋯ σ_k`
/// and the Markov property removes `σ_{m-1}` at the cost of `v^{-1}`. Every
/// level is scaled by `z` so the arithmetic stays in Laurent polynomials.
pub fn markov_ev(x: &HeckeElt) -> Scalar {
    let n = x.n();
    let (mut cur, d) = x.cleared();
    let rel = Quadratic::standard();
    let z = z_laurent();
    let loop_z = &IntLaurent::monomial(-1, 0, 1) - &IntLaurent::v();
    let curl_z = &z * &IntLaurent::monomial(-1, 0, 1);
    for m in (1..=n).rev() {
        let mut fixed: Terms<IntLaurent> = Terms::new();
        let mut moving: BTreeMap<usize, Terms<IntLaurent>> = BTreeMap::new();
        for (p, c) in cur {
            let (u, k) = p.coset_at(m);
            match k {
                None => accumulate(&mut fixed, u, &c * &loop_z),
                Some(k) => accumulate(moving.entry(k).or_default(), u, &c * &curl_z),
            }
        }
        let mut next = fixed;
        for (k, mut part) in moving {
            for i in (k..m - 1).rev() {
                part = kernel::right_gen(&part, i, &rel);
            }
            add_into(&mut next, part);
        }
        cur = next;
    }
    let top = cur.remove(&Perm::identity(n)).unwrap_or_default();
    let den = &d * &z.pow(n as u32);
    Scalar::new(top, den).expect("nonzero denominator")
}

fn h_value_cache() -> &'static Mutex<Vec<Scalar>> {
    static CACHE: OnceLock<Mutex<Vec<Scalar>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![Scalar::one()]))
}

/// `ev(h_k) = markov_ev(h_k idempotent)`, cached across calls.
pub fn ev_h(k: usize) -> Result<Scalar> {
    {
        let cache = h_value_cache().lock().expect("cache lock");
        if let Some(c) = cache.get(k) {
            return Ok(c.clone());
        }
    }
    let mut fresh = Vec::new();
    let start = h_value_cache().lock().expect("cache lock").len();
    for j in start..=k {
        fresh.push(markov_ev(&h_idem(j)?));
    }
    let mut cache = h_value_cache().lock().expect("cache lock");
    // another thread may have filled part of the range meanwhile
    for (off, val) in fresh.into_iter().enumerate() {
        if cache.len() == start + off {
            cache.push(val);
        }
    }
    Ok(cache[k].clone())
}

/// Plane evaluation on symmetric functions: the algebra map with
/// `h_k ↦ ev_h(k)`.
pub fn ev_sym(f: &SymFunc) -> Result<Scalar> {
    let mut acc = Scalar::zero();
    for (lambda, c) in f.terms() {
        let mut term = c.clone();
        for &k in lambda.parts() {
            term = &term * &ev_h(k)?;
        }
        acc += &term;
    }
    Ok(acc)
}

/// Framed-independent HOMFLY polynomial of the closure of a braid word,
/// normalized to `1` on the unknot.
pub fn homfly(n: usize, word: &[i32]) -> Result<Scalar> {
    if n == 0 {
        return Err(invalid("a braid needs at least one strand"));
    }
    let x = HeckeElt::word_elt(n, word)?;
    let w = writhe(word);
    let raw = markov_ev(&x);
    Ok(&(&raw * &Scalar::v_pow(w)) / &Scalar::delta())
}

pub fn writhe(word: &[i32]) -> i32 {
    word.iter().map(|g| g.signum()).sum()
}
