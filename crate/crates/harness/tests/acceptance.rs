//! Acceptance gate: one line per criterion, nonzero exit on any failure.

use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use gorenstein_core::homology::{
    dual_star, ext_dim, ext_dims, ext_vanishing_certificate, syzygy, stable_hom_dim, ExtContext,
    Resolution, Verdict,
};
use gorenstein_core::nakayama::enumerate_indecomposables;
use gorenstein_core::{is_isomorphic, BoundQuiverAlgebra, Isomorphism, Representation, Side};
use gorenstein_harness::checks::analyze;
use gorenstein_harness::generators::{cyclic_radical_square_zero, linear_path_algebra, semisimple};
use gorenstein_harness::{
    fuzz, gpc_check, projectivity_equivalence_check, self_orthogonal_closure_check,
    symmetry_check, verify_cyclic_simples, Options, Status,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn cyclic(n: usize) -> Arc<BoundQuiverAlgebra> {
    cyclic_radical_square_zero(n, 2).expect("n >= 3")
}

fn a2() -> Arc<BoundQuiverAlgebra> {
    linear_path_algebra(2, 2).expect("valid quiver")
}

fn modules(alg: &Arc<BoundQuiverAlgebra>) -> Vec<Representation> {
    enumerate_indecomposables(alg)
        .expect("Nakayama")
        .into_iter()
        .map(|i| i.module)
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn check_status(what: &str, status: Status) -> Result<(), String> {
    ensure(status == Status::Pass, || format!("{what}: {status:?}"))
}

fn cyclic_simples() -> Outcome {
    let start = Instant::now();
    let opts = Options::default();
    for (n, t) in [(4, 2), (5, 3), (8, 6)] {
        let report = verify_cyclic_simples(n, t, 2, &opts).map_err(|e| e.to_string())?;
        check_status(&format!("n = {n}, t = {t}"), report.status())?;
        // first nonzero degree from the Hom complex of a length n+1 resolution
        let alg = cyclic(n);
        for j in 0..n {
            let s = Representation::simple(&alg, j).unwrap();
            let dims = ext_dims(&s, &s, n + 1).unwrap();
            let mut expected = vec![0; n + 1];
            expected[n - 1] = 1;
            ensure(dims == expected, || format!("n = {n}, S({}) self-ext {dims:?}", j + 1))?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("3 parameter pairs in {:.2}s", elapsed.as_secs_f64()))
}

fn conjecture_sweep() -> Outcome {
    let start = Instant::now();
    let opts = Options::default();
    let mut modules_checked = 0;
    for n in 3..=8 {
        let report = gpc_check(&format!("cyclic {n}"), &cyclic(n), &opts).map_err(|e| e.to_string())?;
        check_status(&format!("cyclic {n}"), report.status())?;
        modules_checked += report.modules.len();
    }
    let report = fuzz(1, 100, 6, 2, &opts).map_err(|e| e.to_string())?;
    check_status("fuzz seed 1", report.status())?;
    let t = &report.theorems["gorenstein_projective_conjecture"];
    ensure(t.summary["algebras"] == 100, || "fewer than 100 algebras".into())?;
    ensure(t.witnesses.is_empty(), || format!("{} violations", t.witnesses.len()))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "6 cyclic algebras ({modules_checked} modules) and 100 fuzzed algebras ({} modules), 0 violations, {:.2}s",
        t.summary["indecomposables"],
        elapsed.as_secs_f64()
    ))
}

fn syzygy_stable_hom() -> Outcome {
    let mut comparisons = 0;
    for alg in [cyclic(4), cyclic(5), a2()] {
        let corpus = modules(&alg);
        let lambda = Representation::regular(&alg, Side::Left);
        for m in &corpus {
            let cert = ext_vanishing_certificate(m, &lambda, 64, ExtContext::AgainstRegular)
                .map_err(|e| e.to_string())?;
            if !cert.verdict.is_certified() {
                continue;
            }
            let mut res = Resolution::new(m);
            for n in &corpus {
                let dims = ext_dims(m, n, 6).unwrap();
                for i in 1..=6 {
                    let rhs = stable_hom_dim(res.syzygy(i), n).unwrap();
                    ensure(dims[i - 1] == rhs, || format!("{:?} vs {:?} at {i}", m.dims(), n.dims()))?;
                    comparisons += 1;
                }
            }
        }
    }
    Ok(format!("{comparisons} integer equalities"))
}

fn star_symmetry() -> Outcome {
    let opts = Options::default();
    for n in [4, 5, 8] {
        let report = symmetry_check(&format!("cyclic {n}"), &cyclic(n), &opts).map_err(|e| e.to_string())?;
        check_status(&format!("cyclic {n}"), report.status())?;
        ensure(report.modules.len() == 2 * n, || format!("cyclic {n}: {} GP modules", report.modules.len()))?;
    }
    Ok("cyclic 4, 5, 8".into())
}

fn stable_category_invariants() -> Outcome {
    let mut pairs = 0;
    let mut duals = 0;
    for alg in [cyclic(4), cyclic(5)] {
        let gp: Vec<Representation> = analyze(&alg, 64)
            .map_err(|e| e.to_string())?
            .into_iter()
            .filter(|a| a.is_gp())
            .map(|a| a.module)
            .collect();
        let omegas: Vec<Representation> = gp.iter().map(|m| syzygy(m, 1)).collect();
        for (m, om) in gp.iter().zip(&omegas) {
            for (n, on) in gp.iter().zip(&omegas) {
                let lhs = stable_hom_dim(m, n).unwrap();
                let rhs = stable_hom_dim(om, on).unwrap();
                ensure(lhs == rhs, || format!("{:?}, {:?}: {lhs} vs {rhs}", m.dims(), n.dims()))?;
                pairs += 1;
            }
            let mss = dual_star(&dual_star(m));
            match is_isomorphic(&mss, m).unwrap() {
                Isomorphism::Yes(w) if w.verify() => duals += 1,
                other => return Err(format!("M** vs M for {:?}: {other:?}", m.dims())),
            }
        }
    }
    Ok(format!("{pairs} stable Hom pairs, {duals} double duals with verified witnesses"))
}

fn closure_and_equivalence() -> Outcome {
    let opts = Options::default();
    let algebras = [
        ("cyclic 4", cyclic(4)),
        ("cyclic 5", cyclic(5)),
        ("A2", a2()),
        ("semisimple 3", semisimple(3, 2).unwrap()),
    ];
    for (name, alg) in &algebras {
        let r = self_orthogonal_closure_check(name, alg, &opts).map_err(|e| e.to_string())?;
        check_status(&format!("closure on {name}"), r.status())?;
        let r = projectivity_equivalence_check(name, alg, &opts).map_err(|e| e.to_string())?;
        check_status(&format!("equivalence on {name}"), r.status())?;
    }
    Ok("4 algebras, 0 failures, 0 inconclusive".into())
}

fn certificate_audit() -> Outcome {
    let mut certified = Vec::new();
    for alg in [cyclic(4), cyclic(5), a2()] {
        let corpus = modules(&alg);
        let lambda = Representation::regular(&alg, Side::Left);
        let mut targets = corpus.clone();
        targets.push(lambda);
        for m in &corpus {
            for n in &targets {
                let c = ext_vanishing_certificate(m, n, 64, ExtContext::Against("corpus".into()))
                    .map_err(|e| e.to_string())?;
                if let Verdict::CertifiedVanishing { repeat: (_, b) } = c.verdict {
                    certified.push((m.clone(), n.clone(), b));
                }
            }
        }
    }
    ensure(!certified.is_empty(), || "no certificates".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let (m, n, b) = &certified[rng.gen_range(0..certified.len())];
        for k in b + 1..=b + 3 {
            let d = ext_dim(m, n, k).unwrap();
            ensure(d == 0, || format!("{:?} against {:?}: Ext^{k} = {d}", m.dims(), n.dims()))?;
        }
    }
    Ok(format!("50 samples from {} certificates", certified.len()))
}

fn deterministic_report() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_gpc"))
            .args(["example25", "--n", "5", "--t", "3", "--json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.success() && b.status.success(), || "nonzero exit".into())?;
    ensure(a.stdout == b.stdout, || "outputs differ".into())?;
    let report: serde_json::Value = serde_json::from_slice(&a.stdout).map_err(|e| e.to_string())?;
    for key in ["algebra", "modules", "theorems", "timing"] {
        ensure(report.get(key).is_some(), || format!("missing key {key}"))?;
    }
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("cyclic simples: GP, not projective, vanishing range, first nonzero degree", cyclic_simples),
        ("conjecture sweep: cyclic n = 3..8 and 100 fuzzed algebras", conjecture_sweep),
        ("Ext equals stable Hom from syzygies, i = 1..6", syzygy_stable_hom),
        ("star duality and opposite symmetry", star_symmetry),
        ("stable Hom under syzygy, double star dual", stable_category_invariants),
        ("syzygy/transpose closure and projectivity equivalence sweeps", closure_and_equivalence),
        ("certificate soundness audit", certificate_audit),
        ("byte-identical JSON reports", deterministic_report),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS [{}] {name} ({detail}; {secs:.2}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
