//! Acceptance checks, one line per criterion. Exits nonzero if any fails.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::Instant;

use critloc::exactmath::{pvar, sym, MPoly, QuadraticNumber, Rational, UniPoly};
use critloc::genus2::{self, BranchPoint, CurveParams, HFormulaVariant, PhasePoint, QuadDiff, SolveOptions};
use critloc::kummer;
use critloc::localhiggs::{self, Direction, MatPoly2, ZeroType};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn rand_q(rng: &mut ChaCha8Rng, span: i64) -> Rational {
    Rational::new(rng.gen_range(-span..=span), rng.gen_range(1..=5i64))
}

fn rand_poly(rng: &mut ChaCha8Rng, deg: usize) -> UniPoly<Rational> {
    UniPoly::new((0..=deg).map(|_| rand_q(rng, 9)).collect())
}

fn rand_mat(rng: &mut ChaCha8Rng, deg: usize, n: usize) -> MatPoly2 {
    MatPoly2::new(rand_poly(rng, deg), rand_poly(rng, deg), rand_poly(rng, deg), n)
}

/// Random `phi` with `phi(0) != 0`; nilpotent `phi(0)` when asked.
fn rand_phi(rng: &mut ChaCha8Rng, deg: usize, n: usize, nilpotent: bool) -> MatPoly2 {
    loop {
        let m = rand_mat(rng, deg, n);
        let (a, b, _) = m.at_zero();
        if nilpotent {
            if b.is_zero() {
                continue;
            }
            let mut cs = m.c.coeffs().to_vec();
            cs.resize(cs.len().max(1), Rational::zero());
            cs[0] = -(&(&a * &a) / &b);
            return MatPoly2::new(m.a.clone(), m.b.clone(), UniPoly::new(cs), n);
        }
        if m.order() == Some(0) {
            return m;
        }
    }
}

fn ac1() -> Outcome {
    let reports: Vec<_> = HFormulaVariant::ALL.iter().map(|v| genus2::commutation_report(*v)).collect();
    let winners: Vec<_> = reports.iter().filter(|r| r.all_zero).map(|r| r.variant).collect();
    let summary: Vec<String> = reports
        .iter()
        .map(|r| {
            let nz = r.pairs.iter().filter(|p| !p.is_zero()).count();
            format!("{}: {nz} nonzero", r.variant)
        })
        .collect();
    let pass = winners.len() == 1 && winners[0] == HFormulaVariant::CANONICAL;
    outcome(
        pass,
        format!("commuting variants {:?} ({})", winners.iter().map(|v| v.name()).collect::<Vec<_>>(), summary.join(", ")),
    )
}

fn ac2() -> Outcome {
    let id = kummer::c2_discriminant_identity();
    let vals = HashMap::from([(sym("s"), Rational::from(3)), (sym("t"), Rational::from(5))]);
    let l = id.lhs.eval(&vals).unwrap();
    let r = id.rhs.eval(&vals).unwrap();
    let target = Rational::from(235_929_600);
    outcome(
        id.equal && l == target && r == target,
        format!("symbolic equal={}, value at (3,5): lhs={l} rhs={r}", id.equal),
    )
}

fn ac3() -> Outcome {
    let rep = kummer::pencil_check();
    outcome(
        rep.degree_in_r == 1 && rep.reconstructs,
        format!("degree in r = {}, Q0 + r Q1 reconstructs = {}", rep.degree_in_r, rep.reconstructs),
    )
}

fn ac4() -> Outcome {
    let subs: HashMap<_, _> = ["u1", "u2", "eta1", "eta2"].iter().map(|n| (sym(n), MPoly::zero())).collect();
    let [h0, h1, h2] = genus2::h_polynomials(HFormulaVariant::CANONICAL)
        .clone()
        .map(|h| h.substitute(&subs));
    let h2_zero = h2.is_zero();
    let eps_plus = (&(&pvar("r") * &h1) + &h0).is_zero();
    let eps_minus = (&(&pvar("r") * &h1) - &h0).is_zero();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut ranks = Vec::new();
    while ranks.len() < 20 {
        let curve = match CurveParams::new(rand_q(&mut rng, 12), rand_q(&mut rng, 12), rand_q(&mut rng, 12)) {
            Ok(c) => c,
            Err(_) => continue,
        };
        let e0 = rand_q(&mut rng, 9);
        let p = PhasePoint::new([rand_q(&mut rng, 9), Rational::zero(), Rational::zero()], [e0, Rational::zero(), Rational::zero()]);
        // generic: eta0 != 0 and u0 off the zeros of the fixed-locus bracket
        let f = genus2::eval_f(&curve, &p, HFormulaVariant::CANONICAL).unwrap();
        if f.a[0].is_zero() {
            continue;
        }
        ranks.push(genus2::jacobian_rank(&curve, &p, HFormulaVariant::CANONICAL).unwrap().rank);
    }
    let all_one = ranks.iter().all(|r| *r == 1);
    outcome(
        h2_zero && eps_plus && !eps_minus && all_one,
        format!(
            "h2 = 0: {h2_zero}; r h1 + eps h0 = 0 with eps = {}; exact rank 1 at {}/20 points",
            if eps_plus { "+1" } else if eps_minus { "-1" } else { "none" },
            ranks.iter().filter(|r| **r == 1).count()
        ),
    )
}

fn ac5() -> Outcome {
    let curve = CurveParams::from_i64(2, 3, 5).unwrap();
    // (z - 7) z
    let target = QuadDiff { a: [0.0, -7.0, 1.0] };
    let opts = SolveOptions {
        seeds: 200,
        tol: 1e-9,
        seed: 5,
        critical_at: Some(BranchPoint::Finite(Rational::zero())),
        ..Default::default()
    };
    let start = Instant::now();
    let pts = genus2::fiber_solve(&curve, &target, &opts);
    let elapsed = start.elapsed().as_secs_f64();
    let corank_one = pts
        .iter()
        .filter(|p| {
            genus2::jacobian_rank_f64(&curve, &p.x, HFormulaVariant::CANONICAL, 1e-6)
                .map(|r| r.d == 1)
                .unwrap_or(false)
        })
        .count();
    outcome(
        corank_one >= 1 && elapsed < 60.0,
        format!(
            "{} fiber points from 200 seeds, {corank_one} with corank 1 at tol 1e-6, {elapsed:.1}s",
            pts.len()
        ),
    )
}

fn ac6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut failures = 0;
    let mut counts = Vec::new();
    for k in 1..=3 {
        let mut cartan = 0;
        for i in 0..200 {
            let phi = rand_phi(&mut rng, 3, 2 * k + 2, i % 2 == 1);
            let (a, b, c) = phi.at_zero();
            let det0 = -(&a * &a) - &b * &c;
            let r = localhiggs::nondegeneracy_check(&phi, k).unwrap();
            if r.cartan != (k == 1 && !det0.is_zero()) {
                failures += 1;
            }
            cartan += r.cartan as usize;
        }
        counts.push(format!("k={k}: {cartan}/200 cartan"));
    }
    outcome(failures == 0, format!("{failures} mismatches; {}", counts.join(", ")))
}

fn ac7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut trace_ok, mut crit_ok, mut crit_total) = (0, 0, 0);
    let mut fields = 0;
    while fields < 200 {
        let phi = rand_phi(&mut rng, 3, 6, false);
        let big = phi.shift_up(1);
        let alpha = Direction {
            u: rand_q(&mut rng, 9),
            v: rand_q(&mut rng, 9),
        };
        if alpha.u.is_zero() && alpha.v.is_zero() {
            continue;
        }
        fields += 1;
        let t = localhiggs::hecke_transform(&big, &alpha).unwrap();
        trace_ok += (localhiggs::trace_square(&t) == localhiggs::trace_square(&big)) as usize;
        let Ok(crit) = localhiggs::hecke_critical_alphas(&phi) else {
            continue;
        };
        let lifted = big.lift::<QuadraticNumber>();
        for root in &crit.roots {
            crit_total += 1;
            let t = localhiggs::hecke_transform(&lifted, root).unwrap();
            let c = localhiggs::classify_zero(&t).unwrap();
            if c.order == 1
                && c.derivative_type == Some(ZeroType::Semisimple)
                && localhiggs::trace_square(&t) == localhiggs::trace_square(&lifted)
            {
                crit_ok += 1;
            }
        }
    }
    outcome(
        trace_ok == 200 && crit_ok == crit_total && crit_total >= 2,
        format!("tr Phi'^2 = tr Phi^2 on {trace_ok}/200; order-1 semisimple at {crit_ok}/{crit_total} critical roots"),
    )
}

fn ac8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut ok = 0;
    for trial in 0..200 {
        let k = 1 + trial % 3;
        let n = 2 * k + 2;
        let phi = rand_phi(&mut rng, 3, n, false);
        let big = phi.shift_up(k);
        let (x, y, chi) = (rand_mat(&mut rng, 3, n), rand_mat(&mut rng, 3, n), rand_mat(&mut rng, 4, n));
        let d1 = phi.bracket(&x);
        let d2 = phi.bracket(&y);
        let shifted = d1.add(&chi.bracket(&big));
        let same = (0..k).all(|i| {
            localhiggs::hessian_residue_of_variations(&shifted, &d2, i, k)
                == localhiggs::hessian_residue_of_variations(&d1, &d2, i, k)
        });
        ok += same as usize;
    }
    outcome(ok == 200, format!("residues unchanged for {ok}/200 gauge shifts"))
}

fn ac9() -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for g in 2..=6u32 {
        let gi = g as i64;
        for d in 0..=2 * g {
            // every split of d simple zeros into semisimple and nilpotent
            for nil in 0..=d {
                let data: Vec<(u32, ZeroType)> = (0..d)
                    .map(|i| (1, if i < nil { ZeroType::Nilpotent } else { ZeroType::Semisimple }))
                    .collect();
                let r = localhiggs::validate_zero_data(g, &data).unwrap();
                let di = d as i64;
                let expect_ok = 1 <= di && di <= 2 * gi - 2 && 4 * gi - 4 >= 2 * di + nil as i64;
                let good = r.deg_d == di
                    && r.rank == 3 * gi - 3 - di
                    && r.dim_ker == 3 * gi - 3 + di
                    && r.dim_critical_locus == 6 * gi - 6 - 2 * di
                    && r.ok == expect_ok;
                cases += 1;
                if !good {
                    bad.push(format!("g={g},d={d},nil={nil}"));
                }
            }
            // a single zero of order d
            if d >= 1 {
                let r = localhiggs::validate_zero_data(g, &[(d, ZeroType::Semisimple)]).unwrap();
                cases += 1;
                if r.ok != (d as i64 <= 2 * gi - 2) {
                    bad.push(format!("g={g},m={d}"));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{} of {cases} cases disagree {:?}", bad.len(), bad))
}

fn ac10() -> Outcome {
    let h_inv = genus2::invariance_check(HFormulaVariant::CANONICAL);
    let k_inv = kummer::kummer_sign_flip_invariance();
    let pullback_q = genus2::involution_pullback(kummer::kummer_polynomial()) == *kummer::kummer_polynomial();
    outcome(
        h_inv && k_inv.iter().all(|b| *b) && pullback_q,
        format!("h_i o sigma = h_i: {h_inv}; Kummer flips (u1,u2),(u0,u1),(u0,u2): {k_inv:?}; Q o sigma = Q: {pullback_q}"),
    )
}

fn main() -> ExitCode {
    let checks: [(&str, &str, fn() -> Outcome); 10] = [
        ("AC1", "Poisson commutation oracle", ac1),
        ("AC2", "discriminant identity", ac2),
        ("AC3", "Kummer pencil linear in r", ac3),
        ("AC4", "fixed-locus structure", ac4),
        ("AC5", "critical-locus probe d=1", ac5),
        ("AC6", "nondegeneracy theorem", ac6),
        ("AC7", "Hecke invariants", ac7),
        ("AC8", "Hessian gauge invariance", ac8),
        ("AC9", "dimension bookkeeping", ac9),
        ("AC10", "involution invariance", ac10),
    ];
    let mut failed = 0;
    for (id, name, check) in checks {
        let start = Instant::now();
        let o = check();
        let status = if o.pass { "PASS" } else { "FAIL" };
        failed += !o.pass as usize;
        println!("{id:<5} {status} {name}: {} [{:.2}s]", o.detail, start.elapsed().as_secs_f64());
    }
    println!("acceptance: {}/10 passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
