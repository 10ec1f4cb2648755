//! Machine-readable verification reports.

use std::collections::BTreeMap;
use std::time::Instant;

use gorenstein_core::homology::{Certificate, GpCertificate, GpVerdict, Verdict};
use gorenstein_core::nakayama::is_nakayama;
use gorenstein_core::homology::is_self_injective;
use gorenstein_core::{BoundQuiverAlgebra, HomologyError, IsoWitness, Matrix, Morphism};
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Inconclusive,
    Fail,
}

impl Status {
    /// The worse of the two.
    pub fn and(self, other: Status) -> Status {
        self.max(other)
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 2,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremResult {
    pub verdict: Status,
    /// Offending or undecided objects.
    pub witnesses: Vec<Value>,
    pub summary: BTreeMap<String, Value>,
}

impl TheoremResult {
    pub fn new() -> Self {
        TheoremResult {
            verdict: Status::Pass,
            witnesses: Vec::new(),
            summary: BTreeMap::new(),
        }
    }

    pub fn fail(&mut self, witness: Value) {
        self.verdict = self.verdict.and(Status::Fail);
        self.witnesses.push(witness);
    }

    pub fn inconclusive(&mut self, witness: Value) {
        self.verdict = self.verdict.and(Status::Inconclusive);
        self.witnesses.push(witness);
    }

    pub fn note(&mut self, key: &str, value: impl Into<Value>) {
        self.summary.insert(key.to_string(), value.into());
    }
}

impl Default for TheoremResult {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraRecord {
    pub name: String,
    pub characteristic: u32,
    pub vertices: Vec<String>,
    pub arrows: Vec<String>,
    pub relations: Vec<String>,
    pub dim: usize,
    pub dims: Vec<usize>,
    pub loewy_length: usize,
    pub nakayama: bool,
    pub self_injective: bool,
}

impl AlgebraRecord {
    pub fn new(name: &str, alg: &std::sync::Arc<BoundQuiverAlgebra>) -> Self {
        let q = alg.quiver();
        AlgebraRecord {
            name: name.to_string(),
            characteristic: alg.characteristic(),
            vertices: q.vertices().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| format!("{}: {} -> {}", a.label, q.vertex_name(a.source), q.vertex_name(a.target)))
                .collect(),
            relations: alg.relations().iter().map(|r| r.display(q)).collect(),
            dim: alg.dim(),
            dims: (0..alg.vertex_count()).map(|v| alg.paths_from(v).len()).collect(),
            loewy_length: alg.loewy_length(),
            nakayama: is_nakayama(alg),
            self_injective: is_self_injective(alg),
        }
    }
}

/// Either one algebra or a generated family of them.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum AlgebraSection {
    Single(AlgebraRecord),
    Family {
        family: String,
        parameters: BTreeMap<String, Value>,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessRecord {
    pub forward: Vec<Vec<Vec<u32>>>,
    pub inverse: Vec<Vec<Vec<u32>>>,
}

fn blocks(m: &Morphism) -> Vec<Vec<Vec<u32>>> {
    m.blocks().iter().map(Matrix::to_rows).collect()
}

impl From<&IsoWitness> for WitnessRecord {
    fn from(w: &IsoWitness) -> Self {
        WitnessRecord {
            forward: blocks(&w.forward),
            inverse: blocks(&w.inverse),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateRecord {
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub repeat: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    pub bound: usize,
    pub ext_dims: Vec<usize>,
    pub vanishing_range: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CertificateRecord {
    pub fn from_certificate(c: &Certificate, verbose: bool) -> Self {
        let (verdict, repeat, degree, dim) = match c.verdict {
            Verdict::CertifiedVanishing { repeat: (a, b) } => ("certified", Some([a, b]), None, None),
            Verdict::NonzeroAt { degree, dim } => ("nonzero", None, Some(degree), Some(dim)),
            Verdict::UnknownBeyond { .. } => ("unknown", None, None, None),
        };
        CertificateRecord {
            verdict,
            repeat,
            degree,
            dim,
            bound: c.bound,
            ext_dims: c.ext_dims.clone(),
            vanishing_range: c.vanishing_range(),
            witness: if verbose { c.witness.as_ref().map(WitnessRecord::from) } else { None },
            error: None,
        }
    }

    pub fn from_result(r: &Result<Certificate, HomologyError>, bound: usize, verbose: bool) -> Self {
        match r {
            Ok(c) => Self::from_certificate(c, verbose),
            Err(e) => CertificateRecord {
                verdict: "undetermined",
                repeat: None,
                degree: None,
                dim: None,
                bound,
                ext_dims: Vec::new(),
                vanishing_range: 0,
                witness: None,
                error: Some(e.to_string()),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GpRecord {
    pub verdict: &'static str,
    pub module: CertificateRecord,
    pub transpose: CertificateRecord,
}

pub fn gp_label(v: GpVerdict) -> &'static str {
    match v {
        GpVerdict::Certified => "certified",
        GpVerdict::NotGorensteinProjective => "not-gp",
        GpVerdict::Unknown => "unknown",
    }
}

impl GpRecord {
    pub fn from_result(r: &Result<GpCertificate, HomologyError>, bound: usize, verbose: bool) -> Self {
        match r {
            Ok(c) => GpRecord {
                verdict: gp_label(c.verdict),
                module: CertificateRecord::from_certificate(&c.module, verbose),
                transpose: CertificateRecord::from_certificate(&c.transpose, verbose),
            },
            Err(e) => {
                let failed = CertificateRecord::from_result(&Err(e.clone()), bound, false);
                GpRecord {
                    verdict: "undetermined",
                    module: failed.clone(),
                    transpose: failed,
                }
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleRecord {
    pub name: String,
    pub dims: Vec<usize>,
    pub projective: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gorenstein_projective: Option<GpRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub self_orthogonality: Option<CertificateRecord>,
    /// Dimension vectors of `Ω^0 M, Ω^1 M, ...` until the orbit repeats.
    pub syzygy_orbit: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub extra: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub algebra: AlgebraSection,
    pub modules: Vec<ModuleRecord>,
    pub theorems: BTreeMap<String, TheoremResult>,
    /// Seconds per phase; empty unless timing was requested.
    pub timing: BTreeMap<String, f64>,
}

impl VerificationReport {
    pub fn new(algebra: AlgebraSection) -> Self {
        VerificationReport {
            algebra,
            modules: Vec::new(),
            theorems: BTreeMap::new(),
            timing: BTreeMap::new(),
        }
    }

    pub fn status(&self) -> Status {
        self.theorems
            .values()
            .fold(Status::Pass, |acc, t| acc.and(t.verdict))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        match &self.algebra {
            AlgebraSection::Single(a) => {
                out.push_str(&format!(
                    "algebra {}: dim {} over F_{}, {} vertices, {} arrows, Loewy length {}\n",
                    a.name,
                    a.dim,
                    a.characteristic,
                    a.vertices.len(),
                    a.arrows.len(),
                    a.loewy_length
                ));
                out.push_str(&format!("  nakayama: {}  self-injective: {}\n", a.nakayama, a.self_injective));
            }
            AlgebraSection::Family { family, parameters } => {
                let params: Vec<String> = parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
                out.push_str(&format!("family {family} ({})\n", params.join(", ")));
            }
        }
        if !self.modules.is_empty() {
            let width = self.modules.iter().map(|m| m.name.len()).max().unwrap_or(0).max(6);
            out.push_str(&format!(
                "\n{:<width$}  {:<16} {:<5} {:<13} {}\n",
                "module", "dims", "proj", "gp", "self-orth"
            ));
            for m in &self.modules {
                let dims: Vec<String> = m.dims.iter().map(usize::to_string).collect();
                let gp = m.gorenstein_projective.as_ref().map_or("-", |g| g.verdict);
                let so = m.self_orthogonality.as_ref().map_or("-".to_string(), describe_certificate);
                out.push_str(&format!(
                    "{:<width$}  {:<16} {:<5} {:<13} {}\n",
                    m.name,
                    format!("({})", dims.join(",")),
                    m.projective,
                    gp,
                    so
                ));
            }
        }
        if !self.theorems.is_empty() {
            out.push('\n');
            for (name, t) in &self.theorems {
                let label = match t.verdict {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Inconclusive => "INCONCLUSIVE",
                };
                out.push_str(&format!("{label:<13} {name}\n"));
                for (k, v) in &t.summary {
                    if !v.is_array() && !v.is_object() {
                        out.push_str(&format!("              {k}: {v}\n"));
                    }
                }
                for w in &t.witnesses {
                    out.push_str(&format!("              witness: {w}\n"));
                }
            }
        }
        for (phase, secs) in &self.timing {
            out.push_str(&format!("time {phase}: {secs:.3}s\n"));
        }
        out
    }
}

pub fn describe_certificate(c: &CertificateRecord) -> String {
    match c.verdict {
        "certified" => {
            let [a, b] = c.repeat.unwrap_or_default();
            format!("certified (Ω^{a} ≅ Ω^{b})")
        }
        "nonzero" => format!("nonzero at {} (dim {})", c.degree.unwrap_or(0), c.dim.unwrap_or(0)),
        "unknown" => format!("unknown beyond {} (vanishing 1..{})", c.bound, c.vanishing_range),
        other => other.to_string(),
    }
}

/// Records wall-clock time per phase when enabled.
#[derive(Debug)]
pub struct Timer {
    enabled: bool,
    phases: BTreeMap<String, f64>,
}

impl Timer {
    pub fn new(enabled: bool) -> Self {
        Timer {
            enabled,
            phases: BTreeMap::new(),
        }
    }

    pub fn time<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            *self.phases.entry(phase.to_string()).or_insert(0.0) += start.elapsed().as_secs_f64();
        }
        out
    }

    pub fn finish(self) -> BTreeMap<String, f64> {
        self.phases
    }
}
