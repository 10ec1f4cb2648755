//! Theorem sweeps over the indecomposables of a Nakayama algebra.

use std::sync::Arc;

use gorenstein_core::homology::{
    dual_star, ext_dims, ext_vanishing_certificate, is_gorenstein_projective, is_projective,
    is_self_orthogonal, syzygy, transpose, Certificate, ExtContext, GpCertificate, GpVerdict,
    Verdict,
};
use gorenstein_core::nakayama::{enumerate_indecomposables, is_nakayama};
use gorenstein_core::{BoundQuiverAlgebra, HomologyError, RepError, Representation, Side};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::generators::cyclic_radical_square_zero;
use crate::report::{
    AlgebraRecord, AlgebraSection, CertificateRecord, GpRecord, ModuleRecord, Status,
    TheoremResult, Timer, VerificationReport,
};
use crate::{HarnessError, Options};

const SWEEP_NOTE: &str = "sweep restricted to Nakayama algebras, where the indecomposable list is complete";

/// Certificates gathered for one indecomposable.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub name: String,
    pub module: Representation,
    pub projective: bool,
    pub gp: Result<GpCertificate, HomologyError>,
    /// Present when `gp` is certified.
    pub self_orthogonality: Option<Result<Certificate, HomologyError>>,
}

impl Analysis {
    pub fn gp_verdict(&self) -> Option<GpVerdict> {
        self.gp.as_ref().ok().map(|g| g.verdict)
    }

    pub fn is_gp(&self) -> bool {
        self.gp_verdict() == Some(GpVerdict::Certified)
    }

    pub fn is_self_orthogonal(&self) -> bool {
        matches!(&self.self_orthogonality, Some(Ok(c)) if c.verdict.is_certified())
    }

    pub fn record(&self, opts: &Options) -> ModuleRecord {
        let orbit = match &self.gp {
            Ok(g) => g.module.syzygy_dims.clone(),
            Err(_) => vec![self.module.dims().to_vec()],
        };
        ModuleRecord {
            name: self.name.clone(),
            dims: self.module.dims().to_vec(),
            projective: self.projective,
            gorenstein_projective: Some(GpRecord::from_result(&self.gp, opts.bound, opts.verbose)),
            self_orthogonality: self
                .self_orthogonality
                .as_ref()
                .map(|r| CertificateRecord::from_result(r, opts.bound, opts.verbose)),
            syzygy_orbit: orbit,
            extra: Default::default(),
        }
    }
}

fn require_nakayama(alg: &Arc<BoundQuiverAlgebra>) -> Result<(), HarnessError> {
    if is_nakayama(alg) {
        Ok(())
    } else {
        Err(RepError::NotNakayama.into())
    }
}

pub fn analyze(alg: &Arc<BoundQuiverAlgebra>, bound: usize) -> Result<Vec<Analysis>, HarnessError> {
    let indecomposables = enumerate_indecomposables(alg)?;
    Ok(indecomposables
        .into_par_iter()
        .map(|ind| {
            let module = ind.module;
            let gp = is_gorenstein_projective(&module, bound);
            let certified = matches!(&gp, Ok(g) if g.verdict == GpVerdict::Certified);
            let self_orthogonality = certified.then(|| is_self_orthogonal(&module, bound));
            Analysis {
                name: ind.name,
                projective: is_projective(&module),
                module,
                gp,
                self_orthogonality,
            }
        })
        .collect())
}

fn module_witness(a: &Analysis, reason: &str) -> Value {
    json!({ "module": a.name, "dims": a.module.dims(), "reason": reason })
}

/// Self-orthogonal Gorenstein projective indecomposables must be projective.
pub fn gpc_theorem(analyses: &[Analysis]) -> TheoremResult {
    let mut t = TheoremResult::new();
    let mut gp = 0;
    let mut gp_so = 0;
    for a in analyses {
        match &a.gp {
            Err(e) => {
                t.inconclusive(module_witness(a, &e.to_string()));
                continue;
            }
            Ok(g) if g.verdict == GpVerdict::Unknown => {
                t.inconclusive(module_witness(a, "Gorenstein projectivity undecided within bound"));
                continue;
            }
            Ok(g) if g.verdict == GpVerdict::NotGorensteinProjective => continue,
            Ok(_) => gp += 1,
        }
        match a.self_orthogonality.as_ref().expect("computed for GP modules") {
            Err(e) => t.inconclusive(module_witness(a, &e.to_string())),
            Ok(c) => match c.verdict {
                Verdict::CertifiedVanishing { .. } => {
                    gp_so += 1;
                    if !a.projective {
                        t.fail(module_witness(a, "self-orthogonal Gorenstein projective but not projective"));
                    }
                }
                Verdict::NonzeroAt { .. } => {}
                Verdict::UnknownBeyond { .. } => {
                    t.inconclusive(module_witness(a, "self-orthogonality undecided within bound"))
                }
            },
        }
    }
    t.note("indecomposables", analyses.len());
    t.note("gorenstein_projective", gp);
    t.note("gorenstein_projective_self_orthogonal", gp_so);
    t.note("projective", analyses.iter().filter(|a| a.projective).count());
    t.note("scope", SWEEP_NOTE);
    t
}

fn base_report(name: &str, alg: &Arc<BoundQuiverAlgebra>) -> VerificationReport {
    VerificationReport::new(AlgebraSection::Single(AlgebraRecord::new(name, alg)))
}

pub fn gpc_check(
    name: &str,
    alg: &Arc<BoundQuiverAlgebra>,
    opts: &Options,
) -> Result<VerificationReport, HarnessError> {
    require_nakayama(alg)?;
    let mut timer = Timer::new(opts.timing);
    let analyses = timer.time("certificates", || analyze(alg, opts.bound))?;
    let mut report = base_report(name, alg);
    report.modules = analyses.iter().map(|a| a.record(opts)).collect();
    report
        .theorems
        .insert("gorenstein_projective_conjecture".into(), gpc_theorem(&analyses));
    report.timing = timer.finish();
    Ok(report)
}

fn verdict_class(r: &Result<Certificate, HomologyError>) -> Value {
    match r {
        Ok(c) => match c.verdict {
            Verdict::CertifiedVanishing { .. } => json!("certified"),
            Verdict::NonzeroAt { degree, .. } => json!({ "nonzero": degree }),
            Verdict::UnknownBeyond { .. } => json!("unknown"),
        },
        Err(_) => json!("undetermined"),
    }
}

fn decisive(r: &Result<Certificate, HomologyError>) -> bool {
    matches!(r, Ok(c) if c.verdict.is_decisive())
}

const TABLE_DEGREES: usize = 6;

/// Self-orthogonality and Ext tables agree for `M` and `M*`; the
/// conjecture's verdict agrees for the algebra and its opposite.
pub fn symmetry_check(
    name: &str,
    alg: &Arc<BoundQuiverAlgebra>,
    opts: &Options,
) -> Result<VerificationReport, HarnessError> {
    require_nakayama(alg)?;
    let mut timer = Timer::new(opts.timing);
    let analyses = timer.time("certificates", || analyze(alg, opts.bound))?;
    let op = alg.opposite();
    let op_analyses = timer.time("opposite certificates", || analyze(&op, opts.bound))?;

    let mut star_so = TheoremResult::new();
    let mut tables = TheoremResult::new();
    let mut records = Vec::new();
    let gp: Vec<&Analysis> = analyses.iter().filter(|a| a.is_gp()).collect();
    let per_module: Vec<_> = timer.time("duals", || {
        gp.par_iter()
            .map(|a| {
                let dual = dual_star(&a.module);
                let dual_so = is_self_orthogonal(&dual, opts.bound);
                let m_table = ext_dims(&a.module, &a.module, TABLE_DEGREES);
                let d_table = ext_dims(&dual, &dual, TABLE_DEGREES);
                (dual, dual_so, m_table, d_table)
            })
            .collect()
    });
    for (a, (dual, dual_so, m_table, d_table)) in gp.iter().zip(per_module) {
        let m_so = a.self_orthogonality.as_ref().expect("computed for GP modules");
        let (lhs, rhs) = (verdict_class(m_so), verdict_class(&dual_so));
        if !decisive(m_so) || !decisive(&dual_so) {
            star_so.inconclusive(json!({ "module": a.name, "module_verdict": lhs, "dual_verdict": rhs }));
        } else if lhs != rhs {
            star_so.fail(json!({ "module": a.name, "module_verdict": lhs, "dual_verdict": rhs }));
        }
        let (m_table, d_table) = (m_table?, d_table?);
        if m_table != d_table {
            tables.fail(json!({ "module": a.name, "module_table": m_table, "dual_table": d_table }));
        }
        let mut record = a.record(opts);
        record.extra.insert("dual_dims".into(), json!(dual.dims()));
        record.extra.insert("self_ext_dims".into(), json!(m_table));
        record.extra.insert("dual_self_ext_dims".into(), json!(d_table));
        record.extra.insert(
            "dual_self_orthogonality".into(),
            serde_json::to_value(CertificateRecord::from_result(&dual_so, opts.bound, opts.verbose))
                .expect("serializable"),
        );
        records.push(record);
    }
    star_so.note("gorenstein_projective_modules", gp.len());
    tables.note("degrees", TABLE_DEGREES);
    tables.note("gorenstein_projective_modules", gp.len());

    let here = gpc_theorem(&analyses);
    let there = gpc_theorem(&op_analyses);
    let mut opposite = TheoremResult::new();
    opposite.note("algebra", json!(here.verdict));
    opposite.note("opposite", json!(there.verdict));
    if here.verdict == Status::Inconclusive || there.verdict == Status::Inconclusive {
        opposite.inconclusive(json!("conjecture check inconclusive on one side"));
    } else if here.verdict != there.verdict {
        opposite.fail(json!({ "algebra": here.witnesses, "opposite": there.witnesses }));
    }

    let mut report = base_report(name, alg);
    report.modules = records;
    report.theorems.insert("star_preserves_self_orthogonality".into(), star_so);
    report.theorems.insert("star_preserves_self_ext".into(), tables);
    report.theorems.insert("conjecture_symmetric_under_opposite".into(), opposite);
    report.timing = timer.finish();
    Ok(report)
}

const SYZYGY_DEGREES: usize = 4;

fn judge(t: &mut TheoremResult, what: Value, r: &Result<Certificate, HomologyError>) {
    match r {
        Ok(c) if c.verdict.is_certified() => {}
        Ok(c) if c.verdict.is_nonzero() => t.fail(json!({ "object": what, "verdict": verdict_class(r) })),
        Ok(_) => t.inconclusive(json!({ "object": what, "verdict": "unknown" })),
        Err(e) => t.inconclusive(json!({ "object": what, "error": e.to_string() })),
    }
}

/// For self-orthogonal Gorenstein projective `M`: `Ω^i M` (`i = 1..4`) and
/// `Tr M` are self-orthogonal.
pub fn self_orthogonal_closure_check(
    name: &str,
    alg: &Arc<BoundQuiverAlgebra>,
    opts: &Options,
) -> Result<VerificationReport, HarnessError> {
    require_nakayama(alg)?;
    let mut timer = Timer::new(opts.timing);
    let analyses = timer.time("certificates", || analyze(alg, opts.bound))?;
    let mut syz = TheoremResult::new();
    let mut tr = TheoremResult::new();
    let mut qualifying = 0;
    let mut records = Vec::new();
    for a in &analyses {
        if !(a.is_gp() && a.is_self_orthogonal()) {
            continue;
        }
        qualifying += 1;
        let (syz_certs, tr_cert) = timer.time("closure", || {
            let certs: Vec<_> = (1..=SYZYGY_DEGREES)
                .into_par_iter()
                .map(|i| is_self_orthogonal(&syzygy(&a.module, i), opts.bound))
                .collect();
            (certs, is_self_orthogonal(&transpose(&a.module), opts.bound))
        });
        for (i, c) in syz_certs.iter().enumerate() {
            judge(&mut syz, json!(format!("Ω^{} {}", i + 1, a.name)), c);
        }
        judge(&mut tr, json!(format!("Tr {}", a.name)), &tr_cert);
        records.push(a.record(opts));
    }
    syz.note("qualifying_modules", qualifying);
    syz.note("degrees", SYZYGY_DEGREES);
    tr.note("qualifying_modules", qualifying);
    let mut report = base_report(name, alg);
    report.modules = records;
    report.theorems.insert("self_orthogonal_syzygies".into(), syz);
    report.theorems.insert("self_orthogonal_transpose".into(), tr);
    report.timing = timer.finish();
    Ok(report)
}

/// For `M` with `Ext^i(M, M ⊕ Λ) = 0` for all `i >= 1`: `M` is projective
/// exactly when it is Gorenstein projective.
pub fn projectivity_equivalence_check(
    name: &str,
    alg: &Arc<BoundQuiverAlgebra>,
    opts: &Options,
) -> Result<VerificationReport, HarnessError> {
    require_nakayama(alg)?;
    let mut timer = Timer::new(opts.timing);
    let analyses = timer.time("certificates", || analyze(alg, opts.bound))?;
    let lambda = Representation::regular(alg, Side::Left);
    let certs: Vec<_> = timer.time("ext against M ⊕ Λ", || {
        analyses
            .par_iter()
            .map(|a| {
                let target = a.module.direct_sum(&lambda)?;
                Ok::<_, HarnessError>(ext_vanishing_certificate(
                    &a.module,
                    &target,
                    opts.bound,
                    ExtContext::Against("M ⊕ Λ".into()),
                ))
            })
            .collect()
    });
    let mut t = TheoremResult::new();
    let mut qualifying = 0;
    let mut records = Vec::new();
    for (a, cert) in analyses.iter().zip(certs) {
        let cert = cert?;
        let mut record = a.record(opts);
        record.extra.insert(
            "ext_against_self_and_regular".into(),
            serde_json::to_value(CertificateRecord::from_result(&cert, opts.bound, opts.verbose))
                .expect("serializable"),
        );
        records.push(record);
        match &cert {
            Ok(c) if c.verdict.is_certified() => {}
            Ok(c) if c.verdict.is_nonzero() => continue,
            Ok(_) => {
                t.inconclusive(module_witness(a, "Ext against M ⊕ Λ undecided within bound"));
                continue;
            }
            Err(e) => {
                t.inconclusive(module_witness(a, &e.to_string()));
                continue;
            }
        }
        qualifying += 1;
        match a.gp_verdict() {
            Some(GpVerdict::Unknown) | None => {
                t.inconclusive(module_witness(a, "Gorenstein projectivity undecided"))
            }
            Some(v) => {
                if a.projective != (v == GpVerdict::Certified) {
                    t.fail(module_witness(a, "projective and Gorenstein projective disagree"));
                }
            }
        }
    }
    t.note("qualifying_modules", qualifying);
    t.note("indecomposables", analyses.len());
    let mut report = base_report(name, alg);
    report.modules = records;
    report
        .theorems
        .insert("projective_iff_gorenstein_projective".into(), t);
    report.timing = timer.finish();
    Ok(report)
}

/// Simples of the cyclic radical-square-zero algebra on `n` vertices:
/// Gorenstein projective, not projective, `Ext^i(S, S) = 0` for `1 <= i <= t`,
/// and first nonzero self-extension in degree `n` with dimension 1.
pub fn verify_cyclic_simples(
    n: usize,
    t: usize,
    p: u32,
    opts: &Options,
) -> Result<VerificationReport, HarnessError> {
    if t < 1 || n <= t + 1 {
        return Err(HarnessError::Precondition(format!(
            "need n > t + 1 >= 2, got n = {n}, t = {t}"
        )));
    }
    let mut timer = Timer::new(opts.timing);
    let alg = timer.time("build", || cyclic_radical_square_zero(n, p))?;
    let name = format!("cyclic radical square zero, n = {n}");
    let mut report = base_report(&name, &alg);

    let mut structure = TheoremResult::new();
    if let AlgebraSection::Single(a) = &report.algebra {
        if !a.nakayama {
            structure.fail(json!("not Nakayama"));
        }
        if !a.self_injective {
            structure.fail(json!("not self-injective"));
        }
        if a.dim != 2 * n {
            structure.fail(json!({ "dim": a.dim, "expected": 2 * n }));
        }
    }

    let per_simple: Vec<_> = timer.time("simples", || {
        (0..n)
            .into_par_iter()
            .map(|j| {
                let s = Representation::simple(&alg, j).expect("vertex in range");
                let gp = is_gorenstein_projective(&s, opts.bound);
                let so = is_self_orthogonal(&s, opts.bound);
                let dims = ext_dims(&s, &s, n + 1);
                (s, gp, so, dims)
            })
            .collect()
    });

    let mut gp_theorem = TheoremResult::new();
    let mut vanishing = TheoremResult::new();
    let mut first = TheoremResult::new();
    for (j, (s, gp, so, dims)) in per_simple.into_iter().enumerate() {
        let label = format!("S({})", alg.quiver().vertex_name(j));
        let dims = dims?;
        let projective = is_projective(&s);
        match &gp {
            Ok(g) if g.verdict == GpVerdict::Certified => {}
            Ok(g) if g.verdict == GpVerdict::NotGorensteinProjective => {
                gp_theorem.fail(json!({ "module": label, "reason": "not Gorenstein projective" }))
            }
            Ok(_) => gp_theorem.inconclusive(json!({ "module": label, "reason": "undecided" })),
            Err(e) => gp_theorem.inconclusive(json!({ "module": label, "error": e.to_string() })),
        }
        if projective {
            gp_theorem.fail(json!({ "module": label, "reason": "projective" }));
        }
        if dims[..t].iter().any(|&d| d != 0) {
            vanishing.fail(json!({ "module": label, "ext_dims": &dims[..t] }));
        }
        let first_nonzero = dims.iter().position(|&d| d != 0).map(|i| (i + 1, dims[i]));
        if first_nonzero != Some((n, 1)) {
            first.fail(json!({ "module": label, "first_nonzero": first_nonzero }));
        }
        let orbit = match &gp {
            Ok(g) => g.module.syzygy_dims.clone(),
            Err(_) => vec![s.dims().to_vec()],
        };
        let mut extra = std::collections::BTreeMap::new();
        extra.insert("self_ext_dims".into(), json!(dims));
        extra.insert(
            "first_nonzero_self_ext".into(),
            json!(first_nonzero.map(|(d, k)| json!({ "degree": d, "dim": k }))),
        );
        report.modules.push(ModuleRecord {
            name: label,
            dims: s.dims().to_vec(),
            projective,
            gorenstein_projective: Some(GpRecord::from_result(&gp, opts.bound, opts.verbose)),
            self_orthogonality: Some(CertificateRecord::from_result(&so, opts.bound, opts.verbose)),
            syzygy_orbit: orbit,
            extra,
        });
    }
    gp_theorem.note("simples", n);
    vanishing.note("t", t);
    first.note("expected_degree", n);
    first.note("expected_dim", 1);
    report.theorems.insert("nakayama_self_injective".into(), structure);
    report.theorems.insert("simples_gorenstein_projective_not_projective".into(), gp_theorem);
    report.theorems.insert("simples_self_ext_vanishing".into(), vanishing);
    report.theorems.insert("simples_first_nonzero_self_ext".into(), first);
    report.timing = timer.finish();
    Ok(report)
}
