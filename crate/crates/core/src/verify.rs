//! Named exact checks of the algebraic identities, with structured reports.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::coeff::Scalar;
use crate::error::{invalid, Error, Result};
use crate::hecke::{
    a_sym, b_sym, e_idem, gamma, h_idem, murphy_m, murphy_t, power_sum_t, t_circle, HeckeElt,
};
use crate::partition::{partitions, Partition};
use crate::perm::all_perms;
use crate::psi::{psi, verify_murphy_series};
use crate::repn::closure;
use crate::series::TruncSeries;
use crate::symfun::{a_series, closed_braid_a, h_series, power_sum, schur, SymFunc};
use crate::trace::{ev_sym, markov_ev};

/// Largest strand count accepted by the checks.
pub const MAX_N: usize = 6;
/// Largest series degree accepted by the checks.
pub const MAX_DEGREE: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    MurphyLinear,
    MurphyCommute,
    MurphySumCentral,
    PhiDistinct,
    RowIdem,
    EhInverse,
    Ah,
    AhMirrorInverse,
    MirrorH,
    ClosureConsistency,
    Power,
    MurphySeries,
    All,
}

impl Theorem {
    pub const EACH: [Theorem; 12] = [
        Theorem::MurphyLinear,
        Theorem::MurphyCommute,
        Theorem::MurphySumCentral,
        Theorem::PhiDistinct,
        Theorem::RowIdem,
        Theorem::EhInverse,
        Theorem::Ah,
        Theorem::AhMirrorInverse,
        Theorem::MirrorH,
        Theorem::ClosureConsistency,
        Theorem::Power,
        Theorem::MurphySeries,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::MurphyLinear => "murphy-linear",
            Theorem::MurphyCommute => "murphy-commute",
            Theorem::MurphySumCentral => "murphy-sum-central",
            Theorem::PhiDistinct => "phi-distinct",
            Theorem::RowIdem => "row-idem",
            Theorem::EhInverse => "eh-inverse",
            Theorem::Ah => "ah",
            Theorem::AhMirrorInverse => "ah-mirror-inverse",
            Theorem::MirrorH => "mirror-h",
            Theorem::ClosureConsistency => "closure-consistency",
            Theorem::Power => "power",
            Theorem::MurphySeries => "murphy-series",
            Theorem::All => "all",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::EACH
            .iter()
            .chain(std::iter::once(&Theorem::All))
            .find(|t| t.id() == s)
            .copied()
            .ok_or_else(|| invalid(format!("unknown theorem id `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<serde_json::Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub theorem: String,
    pub params: BTreeMap<String, usize>,
    pub status: Status,
    pub details: Vec<Case>,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Default)]
struct Cases(Vec<Case>);

impl Cases {
    fn check(&mut self, name: impl Into<String>, passed: bool) {
        self.0.push(Case {
            name: name.into(),
            passed,
            value: None,
        });
    }

    fn check_value(&mut self, name: impl Into<String>, passed: bool, value: &impl Serialize) {
        self.0.push(Case {
            name: name.into(),
            passed,
            value: serde_json::to_value(value).ok(),
        });
    }
}

/// Runs one named check (or all of them) for strand counts up to `n` and
/// series degrees up to `degree`.
pub fn run(theorem: Theorem, n: usize, degree: usize) -> Result<VerifyReport> {
    if n == 0 || n > MAX_N {
        return Err(Error::BoundExceeded {
            what: "n",
            value: n,
            bound: MAX_N,
        });
    }
    if degree == 0 || degree > MAX_DEGREE {
        return Err(Error::BoundExceeded {
            what: "degree",
            value: degree,
            bound: MAX_DEGREE,
        });
    }
    let start = Instant::now();
    let mut cases = Cases::default();
    let list: Vec<Theorem> = if theorem == Theorem::All {
        Theorem::EACH.to_vec()
    } else {
        vec![theorem]
    };
    for t in list {
        let mut sub = Cases::default();
        run_one(t, n, degree, &mut sub)?;
        for mut c in sub.0 {
            if theorem == Theorem::All {
                c.name = format!("{t}: {}", c.name);
            }
            cases.0.push(c);
        }
    }
    let status = if cases.0.iter().all(|c| c.passed) {
        Status::Pass
    } else {
        Status::Fail
    };
    let params = BTreeMap::from([("n".to_string(), n), ("degree".to_string(), degree)]);
    Ok(VerifyReport {
        theorem: theorem.id().to_string(),
        params,
        status,
        details: cases.0,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn run_one(t: Theorem, n: usize, degree: usize, cases: &mut Cases) -> Result<()> {
    match t {
        Theorem::MurphyLinear => murphy_linear(n, cases),
        Theorem::MurphyCommute => murphy_commute(n, cases),
        Theorem::MurphySumCentral => murphy_sum_central(n, degree, cases),
        Theorem::PhiDistinct => phi_distinct(n, cases),
        Theorem::RowIdem => row_idem(n, cases),
        Theorem::EhInverse => eh_inverse(degree, cases),
        Theorem::Ah => ah(degree, cases),
        Theorem::AhMirrorInverse => ah_mirror_inverse(degree, cases),
        Theorem::MirrorH => mirror_h(n, degree, cases),
        Theorem::ClosureConsistency => closure_consistency(n, cases),
        Theorem::Power => power(n, degree, cases),
        Theorem::MurphySeries => murphy_series_check(n, degree, cases),
        Theorem::All => unreachable!("expanded by the caller"),
    }
}

fn murphy_linear(n: usize, cases: &mut Cases) -> Result<()> {
    let z = Scalar::z();
    for k in 2..=n {
        for j in 2..=k {
            let lhs = murphy_t(j, k)?;
            let rhs = &HeckeElt::identity(k) + &murphy_m(j, k)?.scale(&z);
            cases.check(format!("T({j}) = 1 + zM({j}) in H_{k}"), lhs == rhs);
        }
    }
    Ok(())
}

fn murphy_commute(n: usize, cases: &mut Cases) -> Result<()> {
    for k in 2..=n {
        let ts: Vec<HeckeElt> = (1..=k).map(|j| murphy_t(j, k)).collect::<Result<_>>()?;
        let mut all = true;
        for i in 0..k {
            for j in i + 1..k {
                all &= &ts[i] * &ts[j] == &ts[j] * &ts[i];
            }
        }
        cases.check(format!("T(i)T(j) = T(j)T(i) in H_{k}"), all);
    }
    Ok(())
}

fn murphy_sum_central(n: usize, degree: usize, cases: &mut Cases) -> Result<()> {
    let zv = &Scalar::z() * &Scalar::v_pow(-1);
    for k in 1..=n {
        let tc = t_circle(k)?;
        let rec = &t_circle(k - 1)?.include(k)? + &murphy_t(k, k)?.scale(&zv);
        cases.check(format!("T^({k}) = T^({}) + zv^-1 T({k})", k - 1), tc == rec);
        cases.check(format!("T^({k}) central"), tc.is_central());
        for m in 1..=degree.min(4) as u32 {
            cases.check(format!("sum T(j)^{m} central in H_{k}"), power_sum_t(m, k)?.is_central());
        }
    }
    Ok(())
}

fn phi_distinct(n: usize, cases: &mut Cases) -> Result<()> {
    let mut values: Vec<(Partition, Scalar)> = Vec::new();
    for lambda in partitions(n) {
        let t = crate::symfun::phi_eigenvalue(&lambda)?;
        values.push((lambda, t));
    }
    for (lambda, t) in &values {
        cases.check_value(format!("t_{lambda}"), true, t);
    }
    let mut distinct = true;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            distinct &= values[i].1 != values[j].1;
        }
    }
    cases.check_value(format!("{} eigenvalues pairwise distinct", values.len()), distinct, &values.len());
    // the loop map is diagonal on Schur functions with these eigenvalues
    for (lambda, t) in &values {
        let s = schur(lambda);
        let image = crate::symfun::phi_apply(&s, n)?;
        cases.check(format!("phi(s_{lambda}) = t s_{lambda}"), image == s.scale(t));
    }
    Ok(())
}

fn row_idem(n: usize, cases: &mut Cases) -> Result<()> {
    let s = Scalar::s();
    let neg_si = -Scalar::s_pow(-1);
    for k in 1..=n.min(5) {
        let a = a_sym(k)?;
        let b = b_sym(k)?;
        let mut rowidem = true;
        for i in 1..k {
            rowidem &= a.mul_gen(i, 1)? == a.scale(&s);
            rowidem &= a.gen_mul(i)? == a.scale(&s);
            rowidem &= b.mul_gen(i, 1)? == b.scale(&neg_si);
        }
        cases.check(format!("a_{k} sigma = s a_{k} = sigma a_{k}, b_{k} sigma = -s^-1 b_{k}"), rowidem);
        if k >= 2 {
            let lhs = &a_sym(k - 1)?.include(k)? * &gamma(k)?;
            cases.check(format!("a_{k} = a_{} gamma_{k}", k - 1), a == lhs);
        }
        cases.check(format!("a_{k}^2 = phi_s(a_{k}) a_{k}"), &a * &a == a.scale(&a.phi_s()));
        let h = h_idem(k)?;
        cases.check(format!("h_{k}^2 = h_{k}"), &h * &h == h);
        let e = e_idem(k)?;
        cases.check(format!("e_{k}^2 = e_{k}"), &e * &e == e);
        if k >= 2 {
            let c = &Scalar::s_pow(k as i32 - 1) * &Scalar::quantum_int(k as i64)?;
            let rhs = &h_idem(k - 1)?.include(k)? * &gamma(k)?;
            cases.check(format!("s^{}[{k}] h_{k} = h_{} gamma_{k}", k - 1, k - 1), h.scale(&c) == rhs);
        }
    }
    Ok(())
}

fn eh_inverse(degree: usize, cases: &mut Cases) -> Result<()> {
    // E coefficients from Jacobi–Trudi, independent of the series inverse
    let e: Vec<SymFunc> = (0..=degree).map(|k| schur(&Partition::column(k))).collect();
    let e_neg = TruncSeries::new(e, degree)?.scale_t(&Scalar::from_int(-1));
    let prod = e_neg.mul(&h_series(degree))?;
    for k in 0..=degree {
        let want = if k == 0 { SymFunc::one() } else { SymFunc::zero() };
        cases.check(format!("[t^{k}] E(-t)H(t)"), prod.coeff(k) == &want);
    }
    Ok(())
}

/// `σ_{m-1} ⋯ σ_1`, or its mirror image with inverse crossings.
fn closed_braid_word(m: usize, sign: i32) -> Vec<i32> {
    (1..m as i32).rev().map(|i| sign * i).collect()
}

fn ah(degree: usize, cases: &mut Cases) -> Result<()> {
    for m in 1..=degree.min(5) {
        let gen = closed_braid_a(m)?;
        let oracle = closure(&HeckeElt::word_elt(m, &closed_braid_word(m, 1))?)?;
        cases.check(format!("A_{m} = closure(sigma_{}...sigma_1)", m.saturating_sub(1)), gen == oracle);
    }
    Ok(())
}

fn ah_mirror_inverse(degree: usize, cases: &mut Cases) -> Result<()> {
    let order = degree.min(5);
    let a = a_series(order);
    let zbar = Scalar::z().mirror();
    let mut coeffs = vec![SymFunc::one()];
    for m in 1..=order {
        let neg = closure(&HeckeElt::word_elt(m, &closed_braid_word(m, -1))?)?;
        coeffs.push(neg.scale(&zbar));
    }
    let abar = TruncSeries::new(coeffs, order)?;
    for m in 1..=order {
        cases.check(
            format!("closure of negative braid is the mirror of A_{m}"),
            abar.coeff(m) == &a.coeff(m).mirror(),
        );
    }
    let prod = a.mul(&abar)?;
    cases.check(format!("A(t) Abar(t) = 1 through degree {order}"), prod == TruncSeries::one(&SymFunc::one(), order));
    Ok(())
}

fn mirror_h(n: usize, degree: usize, cases: &mut Cases) -> Result<()> {
    for k in 1..=n.min(5) {
        let h = h_idem(k)?;
        cases.check(format!("mirror(h_{k}) = h_{k} in H_{k}"), h.mirror() == h);
    }
    for k in 1..=degree {
        let h = SymFunc::h(k);
        cases.check(format!("mirror(h_{k}) = h_{k} in C+"), h.mirror() == h);
    }
    Ok(())
}

fn closure_consistency(n: usize, cases: &mut Cases) -> Result<()> {
    for k in 1..=n.min(4) {
        let mut ok = true;
        for p in all_perms(k)? {
            let x = HeckeElt::basis(p);
            ok &= markov_ev(&x) == ev_sym(&closure(&x)?)?;
        }
        cases.check(format!("markov_ev = ev_sym . closure on the basis of H_{k}"), ok);
    }
    Ok(())
}

fn power(n: usize, degree: usize, cases: &mut Cases) -> Result<()> {
    for k in 1..=n.min(5) {
        cases.check(format!("psi_{k}(h_1) = T^({k})"), psi(k, &SymFunc::h(1))? == t_circle(k)?);
    }
    for k in 1..=n.min(4) {
        for m in 1..=degree.min(4) {
            let p = power_sum(m)?;
            let diff = &psi(k, &p)? - &psi(k - 1, &p)?.include(k)?;
            let factor = &Scalar::s_diff(m as i32) * &Scalar::v_pow(-(m as i32));
            let want = murphy_t(k, k)?.pow(m as u32).scale(&factor);
            cases.check(format!("psi_{k}(P_{m}) - psi_{}(P_{m}) telescopes", k - 1), diff == want);
        }
    }
    Ok(())
}

fn murphy_series_check(n: usize, degree: usize, cases: &mut Cases) -> Result<()> {
    for k in 1..=n.min(4) {
        let r = verify_murphy_series(k, degree.min(4))?;
        for d in r.degrees {
            cases.check(format!("psi_{k}(H(t)) at t^{}", d.degree), d.equal);
        }
    }
    Ok(())
}
