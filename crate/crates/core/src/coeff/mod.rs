//! Exact coefficients: integer Laurent polynomials in `v, s` and their fractions.

mod gcd;
mod laurent;
mod scalar;

pub use laurent::{Exp, IntLaurent};
pub use scalar::Scalar;

pub(crate) use gcd::{normalize_sign, poly_gcd};
pub(crate) use scalar::z_laurent;

/// Least common multiple of canonical denominators.
pub(crate) fn lcm_denominators<'a, I>(dens: I) -> IntLaurent
where
    I: IntoIterator<Item = &'a IntLaurent>,
{
    let mut l = IntLaurent::one();
    let mut seen: Vec<&IntLaurent> = Vec::new();
    for d in dens {
        if d.is_one() || seen.contains(&d) {
            continue;
        }
        seen.push(d);
        let g = poly_gcd(&l, d);
        let q = d.div_exact(&g).expect("gcd divides");
        l = normalize_sign(&l * &q);
    }
    l
}
