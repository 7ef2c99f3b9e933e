//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hecke_skein::hecke::{a_sym, gamma, h_idem, murphy_m, murphy_t, power_sum_t, t_circle};
use hecke_skein::partition::{partitions, Partition};
use hecke_skein::psi::{psi, verify_murphy_series};
use hecke_skein::repn::{central_scalar, closure, rep_of, SeminormalRep};
use hecke_skein::symfun::{a_series, closed_braid_a, h_series, power_sum, schur};
use hecke_skein::trace::{ev_sym, homfly, markov_ev};
use hecke_skein::{HeckeElt, Scalar, SymFunc, TruncSeries};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Check = fn() -> Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn w(n: usize, word: &[i32]) -> HeckeElt {
    HeckeElt::word_elt(n, word).unwrap()
}

fn hecke_relations() -> Result<(), String> {
    let z = Scalar::z();
    for n in 2..=6 {
        let one = HeckeElt::identity(n);
        for i in 1..n as i32 {
            ensure(w(n, &[i, i]) == &w(n, &[i]).scale(&z) + &one, || format!("quadratic, n={n} i={i}"))?;
            if i + 1 < n as i32 {
                ensure(w(n, &[i, i + 1, i]) == w(n, &[i + 1, i, i + 1]), || format!("braid, n={n} i={i}"))?;
            }
            for j in i + 2..n as i32 {
                ensure(w(n, &[i, j]) == w(n, &[j, i]), || format!("far commutation, n={n} {i},{j}"))?;
            }
        }
    }
    Ok(())
}

fn murphy_linear() -> Result<(), String> {
    let z = Scalar::z();
    for n in 2..=6 {
        for j in 2..=n {
            let rhs = &HeckeElt::identity(n) + &murphy_m(j, n).unwrap().scale(&z);
            ensure(murphy_t(j, n).unwrap() == rhs, || format!("j={j} n={n}"))?;
        }
    }
    Ok(())
}

fn murphy_commute_central() -> Result<(), String> {
    for n in 2..=5 {
        let ts: Vec<HeckeElt> = (1..=n).map(|j| murphy_t(j, n).unwrap()).collect();
        for i in 0..n {
            for j in i + 1..n {
                ensure(&ts[i] * &ts[j] == &ts[j] * &ts[i], || format!("T({})T({}) in H_{n}", i + 1, j + 1))?;
            }
        }
        for m in 1..=4 {
            ensure(power_sum_t(m, n).unwrap().is_central(), || format!("m={m} n={n}"))?;
        }
    }
    Ok(())
}

fn circle_recursion() -> Result<(), String> {
    let zv = &Scalar::z() * &Scalar::v_pow(-1);
    for n in 1..=5 {
        let tc = t_circle(n).unwrap();
        let rhs = &t_circle(n - 1).unwrap().include(n).unwrap() + &murphy_t(n, n).unwrap().scale(&zv);
        ensure(tc == rhs, || format!("recursion n={n}"))?;
        ensure(tc.is_central(), || format!("centrality n={n}"))?;
    }
    Ok(())
}

fn phi_distinct() -> Result<(), String> {
    let counts = [1, 1, 2, 3, 5, 7, 11];
    for (n, &count) in counts.iter().enumerate().skip(1) {
        let tc = t_circle(n).unwrap();
        let vals: Vec<Scalar> = partitions(n).iter().map(|l| central_scalar(&tc, l).unwrap()).collect();
        ensure(vals.len() == count, || format!("{} partitions of {n}", vals.len()))?;
        for i in 0..vals.len() {
            for j in i + 1..vals.len() {
                ensure(vals[i] != vals[j], || format!("coincidence at n={n}"))?;
            }
        }
    }
    Ok(())
}

fn idempotent_ladder() -> Result<(), String> {
    for n in 1..=5 {
        let a = a_sym(n).unwrap();
        let h = h_idem(n).unwrap();
        ensure(&a * &a == a.scale(&a.phi_s()), || format!("a^2, n={n}"))?;
        ensure(&h * &h == h, || format!("h^2, n={n}"))?;
        ensure(h.mirror() == h, || format!("mirror(h), n={n}"))?;
        if n >= 2 {
            let g = gamma(n).unwrap();
            ensure(a == &a_sym(n - 1).unwrap().include(n).unwrap() * &g, || format!("a ladder, n={n}"))?;
            let c = &Scalar::s_pow(n as i32 - 1) * &Scalar::quantum_int(n as i64).unwrap();
            let rhs = &h_idem(n - 1).unwrap().include(n).unwrap() * &g;
            ensure(h.scale(&c) == rhs, || format!("h ladder, n={n}"))?;
        }
    }
    Ok(())
}

fn eh_inverse() -> Result<(), String> {
    let order = 8;
    // E_k taken as the column Schur function from Jacobi–Trudi
    let e: Vec<SymFunc> = (0..=order).map(|k| schur(&Partition::column(k))).collect();
    let e_neg = TruncSeries::new(e, order).unwrap().scale_t(&Scalar::from_int(-1));
    let prod = e_neg.mul(&h_series(order)).unwrap();
    ensure(prod == TruncSeries::one(&SymFunc::one(), order), || "E(-t)H(t) != 1".into())
}

fn ah() -> Result<(), String> {
    for m in 1..=5 {
        let word: Vec<i32> = (1..m as i32).rev().collect();
        ensure(closed_braid_a(m).unwrap() == closure(&w(m, &word)).unwrap(), || format!("A_{m}"))?;
    }
    let order = 5;
    let zbar = Scalar::z().mirror();
    let mut coeffs = vec![SymFunc::one()];
    for m in 1..=order {
        let word: Vec<i32> = (1..m as i32).rev().map(|i| -i).collect();
        coeffs.push(closure(&w(m, &word)).unwrap().scale(&zbar));
    }
    let abar = TruncSeries::new(coeffs, order).unwrap();
    let prod = a_series(order).mul(&abar).unwrap();
    ensure(prod == TruncSeries::one(&SymFunc::one(), order), || "A(t)Abar(t) != 1".into())
}

fn power() -> Result<(), String> {
    for n in 1..=4 {
        for m in 1..=4 {
            let p = power_sum(m).unwrap();
            let diff = &psi(n, &p).unwrap() - &psi(n - 1, &p).unwrap().include(n).unwrap();
            let factor = &Scalar::s_diff(m as i32) * &Scalar::v_pow(-(m as i32));
            let want = murphy_t(n, n).unwrap().pow(m as u32).scale(&factor);
            ensure(diff == want, || format!("telescoping n={n} m={m}"))?;
        }
    }
    for n in 1..=5 {
        ensure(psi(n, &SymFunc::h(1)).unwrap() == t_circle(n).unwrap(), || format!("psi(h1), n={n}"))?;
    }
    Ok(())
}

fn murphy_series() -> Result<(), String> {
    for n in 1..=4 {
        let r = verify_murphy_series(n, 4).unwrap();
        let bad: Vec<usize> = r.degrees.iter().filter(|d| !d.equal).map(|d| d.degree).collect();
        ensure(r.passed, || format!("n={n}, degrees {bad:?}"))?;
    }
    Ok(())
}

fn trace_coherence() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for k in 0..100 {
        let n = 1 + k % 4;
        let x = common::random_hecke(&mut rng, n, 4);
        let y = common::random_hecke(&mut rng, n, 4);
        ensure(markov_ev(&(&x * &y)) == markov_ev(&(&y * &x)), || format!("trace property, sample {k}"))?;
        ensure(markov_ev(&x) == ev_sym(&closure(&x).unwrap()).unwrap(), || format!("closure, sample {k}"))?;
    }
    Ok(())
}

fn homfly_regression() -> Result<(), String> {
    let z = Scalar::z();
    let z2 = &z * &z;
    let mono = |a, c| Scalar::monomial(a, 0, c);
    let trefoil = &(&mono(2, 2) - &mono(4, 1)) + &(&mono(2, 1) * &z2);
    let fig8 = &(&(&mono(-2, 1) - &mono(0, 1)) + &mono(2, 1)) - &z2;
    ensure(homfly(1, &[]).unwrap().is_one(), || "unknot".into())?;
    let t = homfly(2, &[1, 1, 1]).unwrap();
    ensure(t == trefoil, || format!("trefoil gave {t}"))?;
    let f = homfly(3, &[1, -2, 1, -2]).unwrap();
    ensure(f == fig8, || format!("figure-eight gave {f}"))
}

fn seminormal_pinning() -> Result<(), String> {
    for n in 1..=5 {
        for lambda in partitions(n) {
            let rep = SeminormalRep::new(&lambda).unwrap();
            for j in 1..=n {
                let m = rep_of(&murphy_t(j, n).unwrap(), &lambda).unwrap();
                ensure(m.is_diagonal(), || format!("T({j}) on {lambda} not diagonal"))?;
                for (t, d) in rep.tableaux().iter().zip(m.diagonal()) {
                    let want = Scalar::s_pow(2 * t.content_of(j) as i32);
                    ensure(d == want, || format!("T({j}) on {lambda}"))?;
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria: [(&str, Option<Duration>, Check); 13] = [
        ("Hecke braid and quadratic relations, n <= 6", Some(secs(10)), hecke_relations),
        ("T(j) = 1 + z M(j), 2 <= j <= n <= 6", Some(secs(30)), murphy_linear),
        ("Murphy operators commute, power sums central, n <= 5", Some(secs(120)), murphy_commute_central),
        ("T^(n) recursion and centrality, n <= 5", None, circle_recursion),
        ("t_lambda pairwise distinct, n <= 6", None, phi_distinct),
        ("idempotent ladder and mirror(h_n) = h_n, n <= 5", None, idempotent_ladder),
        ("E(-t)H(t) = 1 through degree 8", None, eh_inverse),
        ("A_m closures, m <= 5, and A(t)Abar(t) = 1 through degree 5", None, ah),
        ("power-sum telescoping and psi(h_1) = T^(n)", None, power),
        ("Murphy series identity, n <= 4, degree 4", Some(secs(300)), murphy_series),
        ("trace coherence on 100 random elements, n <= 4", None, trace_coherence),
        ("HOMFLY of unknot, trefoil, figure-eight", None, homfly_regression),
        ("seminormal Murphy eigenvalues s^(2 content), n <= 5", None, seminormal_pinning),
    ];
    let mut failures = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|e| Err(e.downcast_ref::<String>().cloned().unwrap_or_else(|| "panic".into())));
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(()), Some(l)) if elapsed > *l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(()) => println!("PASS criterion {}: {name} ({elapsed:.2?})", i + 1),
            Err(msg) => {
                failures += 1;
                println!("FAIL criterion {}: {name} ({elapsed:.2?}): {msg}", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
