//! Gcd of bivariate integer polynomials.
//!
//! Polynomials are viewed as elements of `Z[v][s]`: an outer dense vector
//! indexed by the `s` degree whose entries are dense integer polynomials in
//! `v`. The gcd is computed by the primitive pseudo-remainder sequence, first
//! in `Z[v]` for contents and then in `Z[v][s]` for primitive parts. A
//! heuristic gcd by evaluation at large integers is tried first; the
//! sequence is the fallback when it gives up.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::IntLaurent;

type UPoly = Vec<BigInt>;
type BPoly = Vec<UPoly>;

fn u_trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn u_is_zero(p: &UPoly) -> bool {
    p.is_empty()
}

fn u_content(p: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn u_scale(p: &UPoly, k: &BigInt) -> UPoly {
    let mut out: UPoly = p.iter().map(|c| c * k).collect();
    u_trim(&mut out);
    out
}

fn u_div_int(p: &UPoly, k: &BigInt) -> UPoly {
    p.iter().map(|c| c / k).collect()
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(x - y);
    }
    u_trim(&mut out);
    out
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(&mut out);
    out
}

fn u_shift(p: &UPoly, d: usize) -> UPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); d];
    out.extend(p.iter().cloned());
    out
}

/// Pseudo-remainder of `a` by `b` (some power of `lc(b)` times `a`, reduced mod `b`).
fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.clone();
    while r.len() > db {
        let d = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        r = u_sub(&u_scale(&r, lc), &u_shift(&u_scale(b, &lr), d));
    }
    r
}

/// Exact quotient in `Z[v]`; the caller guarantees divisibility.
fn u_div_exact(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.len().saturating_sub(db).max(1)];
    while !r.is_empty() {
        debug_assert!(r.len() > db, "inexact division in Z[v]");
        let d = r.len() - 1 - db;
        let c = r.last().unwrap() / lc;
        r = u_sub(&r, &u_shift(&u_scale(b, &c), d));
        q[d] = c;
    }
    u_trim(&mut q);
    q
}

fn u_primitive(p: &UPoly) -> UPoly {
    let c = u_content(p);
    if c.is_zero() || c.is_one() {
        return p.clone();
    }
    u_div_int(p, &c)
}

fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if u_is_zero(a) {
        return b.clone();
    }
    if u_is_zero(b) {
        return a.clone();
    }
    let c = u_content(a).gcd(&u_content(b));
    let (mut p, mut q) = (u_primitive(a), u_primitive(b));
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    let g = loop {
        if q.len() == 1 {
            break vec![BigInt::one()];
        }
        let r = u_prem(&p, &q);
        if r.is_empty() {
            break q;
        }
        p = q;
        q = u_primitive(&r);
    };
    u_scale(&g, &c)
}

fn b_trim(p: &mut BPoly) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

fn b_content(p: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in p {
        g = u_gcd(&g, c);
        if g.len() == 1 && g[0].abs().is_one() {
            break;
        }
    }
    g
}

fn b_div_u(p: &BPoly, c: &UPoly) -> BPoly {
    p.iter().map(|x| u_div_exact(x, c)).collect()
}

fn b_primitive(p: &BPoly) -> BPoly {
    let c = b_content(p);
    if c.len() == 1 && c[0].is_one() {
        return p.clone();
    }
    b_div_u(p, &c)
}

fn b_prem(a: &BPoly, b: &BPoly) -> BPoly {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.clone();
    while r.len() > db {
        let d = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        let mut next: BPoly = r.iter().map(|x| u_mul(x, lc)).collect();
        for (i, y) in b.iter().enumerate() {
            next[i + d] = u_sub(&next[i + d], &u_mul(y, &lr));
        }
        b_trim(&mut next);
        r = next;
    }
    r
}

fn b_gcd(a: &BPoly, b: &BPoly) -> BPoly {
    let c = u_gcd(&b_content(a), &b_content(b));
    let (mut p, mut q) = (b_primitive(a), b_primitive(b));
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    let g = loop {
        if q.len() == 1 {
            break vec![vec![BigInt::one()]];
        }
        let r = b_prem(&p, &q);
        if r.is_empty() {
            break q;
        }
        p = q;
        q = b_primitive(&r);
    };
    g.iter().map(|x| u_mul(x, &c)).collect()
}

/// Exact quotient in `Z[v]`, or `None` when `b` does not divide `a`.
fn u_div_opt(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.len().saturating_sub(db).max(1)];
    while !r.is_empty() {
        if r.len() <= db {
            return None;
        }
        let d = r.len() - 1 - db;
        let (c, rem) = r.last().unwrap().div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        r = u_sub(&r, &u_shift(&u_scale(b, &c), d));
        q[d] = c;
    }
    u_trim(&mut q);
    Some(q)
}

fn u_eval(p: &UPoly, x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn u_norm(p: &UPoly) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_default()
}

/// Symmetric `x`-adic digits of `h`, as a polynomial.
fn lift_int(h: &BigInt, x: &BigInt) -> UPoly {
    let half = x / 2;
    let mut h = h.clone();
    let mut out = Vec::new();
    while !h.is_zero() {
        let mut g = h.mod_floor(x);
        if g > half {
            g -= x;
        }
        h = (&h - &g) / x;
        out.push(g);
    }
    out
}

/// Starting evaluation point of the heuristic gcd.
fn heu_point(norm_a: &BigInt, lc_a: &BigInt, norm_b: &BigInt, lc_b: &BigInt) -> BigInt {
    let b: BigInt = norm_a.min(norm_b) * 2 + 29;
    let cap = b.clone().min(b.sqrt() * 99);
    let low: BigInt = (norm_a / lc_a.abs()).min(norm_b / lc_b.abs()) * 2 + 2;
    cap.max(low)
}

fn next_point(x: &BigInt) -> BigInt {
    x * 73794 * x.sqrt().sqrt() / 27011
}

const HEU_ATTEMPTS: usize = 6;

/// Heuristic gcd in `Z[s]`: integer gcd of values at a large point, lifted
/// back and confirmed by division. `None` when every attempt fails.
fn u_heu_gcd(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    if a.is_empty() || b.is_empty() {
        return Some(if a.is_empty() { b.clone() } else { a.clone() });
    }
    let c = u_content(a).gcd(&u_content(b));
    if a.len() == 1 || b.len() == 1 {
        return Some(vec![c]);
    }
    let (a, b) = (u_primitive(a), u_primitive(b));
    let mut x = heu_point(&u_norm(&a), a.last().unwrap(), &u_norm(&b), b.last().unwrap());
    for _ in 0..HEU_ATTEMPTS {
        let h = u_eval(&a, &x).gcd(&u_eval(&b, &x));
        if !h.is_zero() {
            let g = u_primitive(&lift_int(&h, &x));
            if !g.is_empty() && u_div_opt(&a, &g).is_some() && u_div_opt(&b, &g).is_some() {
                return Some(u_scale(&g, &c));
            }
        }
        x = next_point(&x);
    }
    None
}

fn b_norm(p: &BPoly) -> BigInt {
    p.iter().map(u_norm).max().unwrap_or_default()
}

fn b_int_content(p: &BPoly) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, row| g.gcd(&u_content(row)))
}

fn b_lc_int(p: &BPoly) -> &BigInt {
    p.last().and_then(|row| row.last()).expect("nonzero polynomial")
}

/// Values at `v = x`, as a polynomial in `s`.
fn b_eval_v(p: &BPoly, x: &BigInt) -> UPoly {
    let mut out: UPoly = p.iter().map(|row| u_eval(row, x)).collect();
    u_trim(&mut out);
    out
}

fn b_divides(a: &BPoly, b: &BPoly) -> bool {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.clone();
    while !r.is_empty() {
        if r.len() <= db {
            return false;
        }
        let d = r.len() - 1 - db;
        let Some(q) = u_div_opt(r.last().unwrap(), lc) else {
            return false;
        };
        for (i, y) in b.iter().enumerate() {
            r[i + d] = u_sub(&r[i + d], &u_mul(y, &q));
        }
        b_trim(&mut r);
    }
    true
}

/// Heuristic gcd in `Z[v][s]`: evaluates `v` at a large integer, takes the
/// gcd in `Z[s]`, lifts the coefficients back and confirms by division.
fn b_heu_gcd(a: &BPoly, b: &BPoly) -> Option<BPoly> {
    let ca = b_int_content(a);
    let cb = b_int_content(b);
    let c = ca.gcd(&cb);
    let a: BPoly = a.iter().map(|row| u_div_int(row, &ca)).collect();
    let b: BPoly = b.iter().map(|row| u_div_int(row, &cb)).collect();
    let mut x = heu_point(&b_norm(&a), b_lc_int(&a), &b_norm(&b), b_lc_int(&b));
    for _ in 0..HEU_ATTEMPTS {
        let (ea, eb) = (b_eval_v(&a, &x), b_eval_v(&b, &x));
        if !ea.is_empty() && !eb.is_empty() {
            let h = u_heu_gcd(&ea, &eb)?;
            let mut g: BPoly = h.iter().map(|c| lift_int(c, &x)).collect();
            b_trim(&mut g);
            if !g.is_empty() {
                let gc = b_int_content(&g);
                let g: BPoly = g.iter().map(|row| u_div_int(row, &gc)).collect();
                if b_divides(&a, &g) && b_divides(&b, &g) {
                    return Some(g.iter().map(|row| u_scale(row, &c)).collect());
                }
            }
        }
        x = next_point(&x);
    }
    None
}

fn to_bpoly(p: &IntLaurent) -> BPoly {
    let (_, max_s) = p.max_exp();
    let mut out: BPoly = vec![Vec::new(); max_s as usize + 1];
    for ((ev, es), c) in p.terms() {
        debug_assert!(*ev >= 0 && *es >= 0);
        let row = &mut out[*es as usize];
        if row.len() <= *ev as usize {
            row.resize(*ev as usize + 1, BigInt::zero());
        }
        row[*ev as usize] = c.clone();
    }
    out
}

fn from_bpoly(p: &BPoly) -> IntLaurent {
    IntLaurent::from_terms(p.iter().enumerate().flat_map(|(es, row)| {
        row.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(ev, c)| ((ev as i32, es as i32), c.clone()))
    }))
}

/// Gcd of two polynomials with non-negative exponents and no monomial factor.
///
/// The result has a positive leading coefficient. `gcd(0, q) = q`.
pub(crate) fn poly_gcd(p: &IntLaurent, q: &IntLaurent) -> IntLaurent {
    if p.is_zero() {
        return normalize_sign(q.clone());
    }
    if q.is_zero() {
        return normalize_sign(p.clone());
    }
    if p.is_monomial() || q.is_monomial() || p.is_one() || q.is_one() {
        return IntLaurent::constant(p.content().gcd(&q.content()));
    }
    let (a, b) = (to_bpoly(p), to_bpoly(q));
    let g = from_bpoly(&b_heu_gcd(&a, &b).unwrap_or_else(|| b_gcd(&a, &b)));
    normalize_sign(g)
}

pub(crate) fn normalize_sign(p: IntLaurent) -> IntLaurent {
    match p.leading() {
        Some((_, c)) if c.is_negative() => -p,
        _ => p,
    }
}

/// Gcd in the Laurent ring, up to units `±v^a s^b`: monomial factors are stripped first.
pub(crate) fn laurent_gcd(p: &IntLaurent, q: &IntLaurent) -> IntLaurent {
    poly_gcd(&strip_monomial(p), &strip_monomial(q))
}

pub(crate) fn strip_monomial(p: &IntLaurent) -> IntLaurent {
    let (mv, ms) = p.min_exp();
    if mv == 0 && ms == 0 {
        p.clone()
    } else {
        p.shift(-mv, -ms)
    }
}
