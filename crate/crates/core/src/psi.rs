//! The homomorphism `ψ_n` from symmetric functions to the centre of `H_n`,
//! fixed on power sums by
//! `ψ_n(P_m) = ev(P_m) + (s^m - s^{-m}) v^{-m} Σ_j T(j)^m`,
//! and the generating-series identity relating it to the Murphy operators.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::coeff::Scalar;
use crate::error::Result;
use crate::hecke::{murphy_series, power_sum_t, HeckeElt};
use crate::partition::Partition;
use crate::repn::central_scalar;
use crate::series::TruncSeries;
use crate::symfun::{power_sums, to_p, SymFunc};
use crate::trace::{ev_h, ev_sym};

/// `(s^m - s^{-m}) v^{-m}`.
fn power_factor(m: usize) -> Scalar {
    &Scalar::s_diff(m as i32) * &Scalar::v_pow(-(m as i32))
}

/// Images of `P_1, …, P_max`; index 0 is unused.
fn psi_power_sums(n: usize, max: usize) -> Result<Vec<HeckeElt>> {
    let ps = power_sums(max);
    let mut out = vec![HeckeElt::identity(n)];
    for (m, p) in ps.iter().enumerate().skip(1) {
        let base = HeckeElt::scalar(n, ev_sym(p)?);
        let murphy = if n == 0 {
            HeckeElt::zero(0)
        } else {
            power_sum_t(m as u32, n)?.scale(&power_factor(m))
        };
        out.push(&base + &murphy);
    }
    Ok(out)
}

/// `ψ_n(f)`, central in `H_n`.
pub fn psi(n: usize, f: &SymFunc) -> Result<HeckeElt> {
    let coeffs = to_p(f);
    let max = coeffs.keys().map(Partition::weight).max().unwrap_or(0);
    let images = psi_power_sums(n, max)?;
    let mut cache: BTreeMap<Partition, HeckeElt> = BTreeMap::new();
    let mut out = HeckeElt::zero(n);
    for (lambda, c) in coeffs {
        let mono = match cache.get(&lambda) {
            Some(x) => x.clone(),
            None => {
                let x = lambda
                    .parts()
                    .iter()
                    .fold(HeckeElt::identity(n), |acc, &m| &acc * &images[m]);
                cache.insert(lambda, x.clone());
                x
            }
        };
        out = &out + &mono.scale(&c);
    }
    Ok(out)
}

/// Per-degree outcome of the Murphy-series comparison.
#[derive(Clone, Debug, Serialize)]
pub struct SeriesCheck {
    pub n: usize,
    pub order: usize,
    pub degrees: Vec<DegreeCheck>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeCheck {
    pub degree: usize,
    pub equal: bool,
}

/// Compares `ψ_n(H(t))` with `ψ_0(H(t)) · HM(sv^{-1}t) / HM(s^{-1}v^{-1}t)`
/// degree by degree.
pub fn verify_murphy_series(n: usize, order: usize) -> Result<SeriesCheck> {
    let id = HeckeElt::identity(n);
    let mut lhs = Vec::with_capacity(order + 1);
    let mut base = Vec::with_capacity(order + 1);
    for k in 0..=order {
        lhs.push(psi(n, &SymFunc::h(k))?);
        base.push(HeckeElt::scalar(n, ev_h(k)?));
    }
    let lhs = TruncSeries::new(lhs, order)?;
    let base = TruncSeries::new(base, order)?;
    let hm = if n == 0 {
        TruncSeries::one(&id, order)
    } else {
        murphy_series(n, order)?
    };
    let vi = Scalar::v_pow(-1);
    let up = hm.scale_t(&(&Scalar::s() * &vi));
    let down = hm.scale_t(&(&Scalar::s_pow(-1) * &vi));
    let rhs = base.mul(&up.div(&down)?)?;
    let degrees: Vec<DegreeCheck> = (0..=order)
        .map(|k| DegreeCheck {
            degree: k,
            equal: lhs.coeff(k) == rhs.coeff(k),
        })
        .collect();
    let passed = degrees.iter().all(|d| d.equal);
    Ok(SeriesCheck {
        n,
        order,
        degrees,
        passed,
    })
}

/// Whether `ψ_n(f)` acts on `V_λ` by the value of `f` under
/// `P_m ↦ ev(P_m) + (s^m - s^{-m}) v^{-m} Σ_cells s^{2m·content}`.
pub fn psi_eigen_check(n: usize, f: &SymFunc, lambda: &Partition) -> Result<bool> {
    if lambda.weight() != n {
        return Err(crate::error::Error::SizeMismatch {
            left: n,
            right: lambda.weight(),
        });
    }
    let coeffs = to_p(f);
    let max = coeffs.keys().map(Partition::weight).max().unwrap_or(0);
    let ps = power_sums(max);
    let contents = lambda.contents();
    let mut values = vec![Scalar::one()];
    for (m, p) in ps.iter().enumerate().skip(1) {
        let sum = contents.iter().fold(Scalar::zero(), |acc, &c| {
            &acc + &Scalar::s_pow((2 * m as i64 * c) as i32)
        });
        values.push(&ev_sym(p)? + &(&power_factor(m) * &sum));
    }
    let mut expected = Scalar::zero();
    for (l, c) in &coeffs {
        let term = l.parts().iter().fold(c.clone(), |acc, &m| &acc * &values[m]);
        expected += &term;
    }
    Ok(central_scalar(&psi(n, f)?, lambda)? == expected)
}
