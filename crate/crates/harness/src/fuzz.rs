//! Seeded search for counterexamples among random Nakayama algebras.

use std::collections::BTreeMap;
use std::sync::Arc;

use gorenstein_core::format::{write_algebra, write_module};
use gorenstein_core::BoundQuiverAlgebra;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::checks::{analyze, gpc_theorem};
use crate::generators::nakayama_from_kupisch;
use crate::report::{AlgebraSection, Status, TheoremResult, Timer, VerificationReport};
use crate::{HarnessError, Options};

/// Longest indecomposable projective the generator will ask for.
pub const MAX_PROJECTIVE_LENGTH: usize = 5;
const MAX_ATTEMPTS: usize = 32;

#[derive(Clone, Debug)]
pub struct FuzzAlgebra {
    pub index: usize,
    pub cyclic: bool,
    pub kupisch: Vec<usize>,
    pub algebra: Arc<BoundQuiverAlgebra>,
}

impl FuzzAlgebra {
    pub fn file_name(&self, seed: u64) -> String {
        format!("fuzz-{seed}-{}.alg", self.index)
    }
}

/// A random admissible Kupisch series on `n` vertices.
pub fn random_kupisch(rng: &mut ChaCha8Rng, n: usize, cyclic: bool) -> Vec<usize> {
    let mut c: Vec<usize> = (0..n).map(|_| rng.gen_range(2..=MAX_PROJECTIVE_LENGTH)).collect();
    if cyclic {
        loop {
            let mut changed = false;
            for i in 0..n {
                let bound = c[(i + 1) % n] + 1;
                if c[i] > bound {
                    c[i] = bound;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
    } else {
        c[n - 1] = 1;
        for i in (0..n - 1).rev() {
            c[i] = c[i].min(c[i + 1] + 1);
        }
    }
    c
}

/// Deterministic in `seed`: the `k`-th algebra depends only on the first
/// `k` draws.
pub fn generate(seed: u64, count: usize, max_vertices: usize, p: u32) -> Result<Vec<FuzzAlgebra>, HarnessError> {
    if count == 0 || max_vertices == 0 {
        return Err(HarnessError::Precondition("count and max_vertices must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for index in 0..count {
        let mut attempts = 0;
        loop {
            attempts += 1;
            let n = rng.gen_range(1..=max_vertices);
            let cyclic = rng.gen_bool(0.5);
            let kupisch = random_kupisch(&mut rng, n, cyclic);
            match nakayama_from_kupisch(&kupisch, cyclic, p) {
                Ok(algebra) => {
                    out.push(FuzzAlgebra {
                        index,
                        cyclic,
                        kupisch,
                        algebra,
                    });
                    break;
                }
                Err(_) if attempts < MAX_ATTEMPTS => continue,
                Err(_) => return Err(HarnessError::GenerationExhausted(attempts)),
            }
        }
    }
    Ok(out)
}

pub fn fuzz(
    seed: u64,
    count: usize,
    max_vertices: usize,
    p: u32,
    opts: &Options,
) -> Result<VerificationReport, HarnessError> {
    let mut timer = Timer::new(opts.timing);
    let algebras = timer.time("generate", || generate(seed, count, max_vertices, p))?;
    let results: Vec<_> = timer.time("certificates", || {
        algebras
            .par_iter()
            .map(|f| analyze(&f.algebra, opts.bound).map(|a| (gpc_theorem(&a), a)))
            .collect()
    });

    let mut theorem = TheoremResult::new();
    let mut summaries = Vec::new();
    let (mut indecomposables, mut gp, mut cyclic) = (0usize, 0usize, 0usize);
    for (f, result) in algebras.iter().zip(results) {
        let (t, analyses) = result?;
        indecomposables += analyses.len();
        gp += analyses.iter().filter(|a| a.is_gp()).count();
        cyclic += usize::from(f.cyclic);
        summaries.push(json!({
            "index": f.index,
            "quiver": if f.cyclic { "cyclic" } else { "linear" },
            "kupisch": f.kupisch,
            "dim": f.algebra.dim(),
            "indecomposables": analyses.len(),
            "verdict": t.verdict,
        }));
        if t.verdict == Status::Pass {
            continue;
        }
        let file = f.file_name(seed);
        for w in &t.witnesses {
            let module = analyses
                .iter()
                .find(|a| w.get("module").and_then(|m| m.as_str()) == Some(a.name.as_str()));
            let entry = json!({
                "algebra_index": f.index,
                "algebra_file": file,
                "algebra_text": write_algebra(&f.algebra),
                "module": w.get("module"),
                "module_text": module.map(|a| write_module(&a.module, &file)),
                "reason": w.get("reason"),
            });
            if t.verdict == Status::Fail {
                theorem.fail(entry);
            } else {
                theorem.inconclusive(entry);
            }
        }
    }
    theorem.note("algebras", algebras.len());
    theorem.note("cyclic", cyclic);
    theorem.note("linear", algebras.len() - cyclic);
    theorem.note("indecomposables", indecomposables);
    theorem.note("gorenstein_projective", gp);
    theorem.note("violations", theorem.witnesses.len());
    theorem.note("per_algebra", summaries);

    let mut parameters = BTreeMap::new();
    parameters.insert("seed".to_string(), json!(seed));
    parameters.insert("count".to_string(), json!(count));
    parameters.insert("max_vertices".to_string(), json!(max_vertices));
    parameters.insert("characteristic".to_string(), json!(p));
    parameters.insert("bound".to_string(), json!(opts.bound));
    let mut report = VerificationReport::new(AlgebraSection::Family {
        family: "random Nakayama algebras".into(),
        parameters,
    });
    report
        .theorems
        .insert("gorenstein_projective_conjecture".into(), theorem);
    report.timing = timer.finish();
    Ok(report)
}
