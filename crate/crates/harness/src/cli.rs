//! The `gpc` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};
use gorenstein_core::format::{parse_algebra_spec, parse_module_spec, write_algebra, write_module};
use gorenstein_core::homology::{
    dual_star, ext_dims, is_gorenstein_projective, is_projective, is_self_orthogonal, transpose,
    GpVerdict, Resolution, DEFAULT_BOUND,
};
use gorenstein_core::{BoundQuiverAlgebra, Representation};
use serde_json::json;

use crate::checks::{
    gpc_check, projectivity_equivalence_check, self_orthogonal_closure_check, symmetry_check,
    verify_cyclic_simples,
};
use crate::fuzz::fuzz;
use crate::report::{
    describe_certificate, AlgebraRecord, AlgebraSection, CertificateRecord, GpRecord, ModuleRecord,
    VerificationReport,
};
use crate::{HarnessError, Options};

#[derive(Debug, Parser)]
#[command(name = "gpc", version, about = "Exact Ext, syzygy and Gorenstein projectivity checks over bound quiver algebras")]
pub struct Cli {
    /// Characteristic of the ground field; overrides `char:` in algebra files.
    #[arg(long = "char", global = true, value_name = "P")]
    pub characteristic: Option<u32>,
    /// Print a JSON report instead of tables.
    #[arg(long, global = true)]
    pub json: bool,
    /// Orbit search and vanishing bound.
    #[arg(long, global = true, default_value_t = DEFAULT_BOUND)]
    pub bound: usize,
    /// Include isomorphism witnesses.
    #[arg(long, global = true)]
    pub verbose: bool,
    /// Record wall-clock time per phase.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build an algebra and print its basis and structural flags.
    Build { algebra: PathBuf },
    /// Minimal projective resolution of a module.
    Resolve {
        algebra: PathBuf,
        module: PathBuf,
        #[arg(long, default_value_t = 6)]
        length: usize,
    },
    /// Dimensions of Ext^i(M, N).
    Ext {
        algebra: PathBuf,
        m: PathBuf,
        n: PathBuf,
        #[arg(long, default_value_t = 6)]
        upto: usize,
    },
    /// Gorenstein projectivity certificate.
    Gp { algebra: PathBuf, module: PathBuf },
    /// Self-orthogonality certificate.
    Selforth { algebra: PathBuf, module: PathBuf },
    /// Auslander transpose, over the opposite algebra.
    Transpose { algebra: PathBuf, module: PathBuf },
    /// Hom(-, Λ) dual, over the opposite algebra.
    Star { algebra: PathBuf, module: PathBuf },
    /// Simples of the cyclic radical-square-zero algebra on n vertices.
    Example25 {
        #[arg(long)]
        n: usize,
        /// Vanishing range to check; defaults to n - 2.
        #[arg(long)]
        t: Option<usize>,
    },
    /// Self-orthogonal Gorenstein projective indecomposables are projective.
    GpcCheck { algebra: PathBuf },
    /// Agreement under Hom(-, Λ) and under passing to the opposite algebra.
    Symmetry { algebra: PathBuf },
    /// Syzygies and transposes of self-orthogonal Gorenstein projectives.
    #[command(alias = "closure")]
    Prop34 { algebra: PathBuf },
    /// Projective iff Gorenstein projective, given Ext(M, M ⊕ Λ) = 0.
    #[command(alias = "equivalence")]
    Prop37 { algebra: PathBuf },
    /// Run the conjecture check on random Nakayama algebras.
    Fuzz {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long = "max-vertices", default_value_t = 6)]
        max_vertices: usize,
        /// Write each violation as an algebra file and a module file here.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

pub struct Output {
    pub stdout: String,
    pub code: i32,
}

fn read(path: &Path) -> Result<String, HarnessError> {
    std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn display_name(path: &Path) -> String {
    path.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

struct Context {
    characteristic: Option<u32>,
    json: bool,
    opts: Options,
}

impl Context {
    fn algebra(&self, path: &Path) -> Result<Arc<BoundQuiverAlgebra>, HarnessError> {
        Ok(parse_algebra_spec(&read(path)?)
            .map_err(gorenstein_core::FormatError::from)?
            .build(self.characteristic)?)
    }

    fn module(&self, alg: &Arc<BoundQuiverAlgebra>, path: &Path) -> Result<Representation, HarnessError> {
        let spec = parse_module_spec(&read(path)?).map_err(gorenstein_core::FormatError::from)?;
        Ok(spec.build(alg)?)
    }

    fn emit_report(&self, report: &VerificationReport) -> Output {
        let stdout = if self.json {
            report.to_json() + "\n"
        } else {
            report.render_text()
        };
        Output {
            stdout,
            code: report.status().exit_code(),
        }
    }

    fn single(&self, name: &str, alg: &Arc<BoundQuiverAlgebra>) -> VerificationReport {
        VerificationReport::new(AlgebraSection::Single(AlgebraRecord::new(name, alg)))
    }
}

fn module_record(name: &str, m: &Representation) -> ModuleRecord {
    ModuleRecord {
        name: name.to_string(),
        dims: m.dims().to_vec(),
        projective: is_projective(m),
        gorenstein_projective: None,
        self_orthogonality: None,
        syzygy_orbit: vec![m.dims().to_vec()],
        extra: Default::default(),
    }
}

fn opposite_text(m: &Representation, algebra_name: &str) -> String {
    let op = m.algebra();
    let op_file = format!("{algebra_name}.op");
    format!(
        "# opposite algebra ({op_file})\n{}\n# module\n{}",
        write_algebra(op),
        write_module(m, &op_file)
    )
}

fn run_command(cli: &Cli) -> Result<Output, HarnessError> {
    let ctx = Context {
        characteristic: cli.characteristic,
        json: cli.json,
        opts: Options {
            bound: cli.bound,
            verbose: cli.verbose,
            timing: cli.timing,
        },
    };
    if cli.bound == 0 {
        return Err(HarnessError::Precondition("--bound must be at least 1".into()));
    }
    let opts = &ctx.opts;
    match &cli.command {
        Command::Build { algebra } => {
            let alg = ctx.algebra(algebra)?;
            let report = ctx.single(&display_name(algebra), &alg);
            if ctx.json {
                let mut value = serde_json::to_value(&report).expect("serializable");
                value["algebra"]["basis"] = json!(alg.describe_basis());
                return Ok(Output {
                    stdout: serde_json::to_string_pretty(&value).expect("serializable") + "\n",
                    code: 0,
                });
            }
            let mut out = report.render_text();
            out.push_str(&format!("basis ({}): {}\n", alg.dim(), alg.describe_basis().join(" ")));
            Ok(Output { stdout: out, code: 0 })
        }
        Command::Resolve { algebra, module, length } => {
            let alg = ctx.algebra(algebra)?;
            let m = ctx.module(&alg, module)?;
            let mut res = Resolution::with_length(&m, *length);
            let q = alg.quiver();
            let mut report = ctx.single(&display_name(algebra), &alg);
            let mut record = module_record(&display_name(module), &m);
            let mut terms = Vec::new();
            let mut syzygies = Vec::new();
            for k in 0..=*length {
                let names: Vec<String> = res
                    .term(k)
                    .vertices
                    .iter()
                    .map(|&v| format!("P({})", q.vertex_name(v)))
                    .collect();
                terms.push(names);
                syzygies.push(res.syzygy(k + 1).dims().to_vec());
            }
            record.syzygy_orbit = std::iter::once(m.dims().to_vec()).chain(syzygies.iter().cloned()).collect();
            record.extra.insert("terms".into(), json!(terms));
            record.extra.insert("exact_and_minimal".into(), json!(res.verify()));
            report.modules.push(record);
            if ctx.json {
                return Ok(ctx.emit_report(&report));
            }
            let mut out = String::new();
            for (k, names) in terms.iter().enumerate() {
                let t = if names.is_empty() { "0".to_string() } else { names.join(" ⊕ ") };
                out.push_str(&format!("P_{k} = {t}    Ω^{} dims {:?}\n", k + 1, syzygies[k]));
            }
            out.push_str(&format!("exact and minimal: {}\n", res.verify()));
            Ok(Output { stdout: out, code: 0 })
        }
        Command::Ext { algebra, m, n, upto } => {
            let alg = ctx.algebra(algebra)?;
            let mm = ctx.module(&alg, m)?;
            let nn = ctx.module(&alg, n)?;
            let dims = ext_dims(&mm, &nn, *upto)?;
            if ctx.json {
                let mut report = ctx.single(&display_name(algebra), &alg);
                let mut record = module_record(&display_name(m), &mm);
                record.extra.insert("against".into(), json!(display_name(n)));
                record.extra.insert("ext_dims".into(), json!(dims));
                report.modules.push(record);
                return Ok(ctx.emit_report(&report));
            }
            let out: String = dims
                .iter()
                .enumerate()
                .map(|(i, d)| format!("Ext^{}: {d}\n", i + 1))
                .collect();
            Ok(Output { stdout: out, code: 0 })
        }
        Command::Gp { algebra, module } => {
            let alg = ctx.algebra(algebra)?;
            let m = ctx.module(&alg, module)?;
            let gp = is_gorenstein_projective(&m, opts.bound)?;
            let mut report = ctx.single(&display_name(algebra), &alg);
            let mut record = module_record(&display_name(module), &m);
            record.syzygy_orbit = gp.module.syzygy_dims.clone();
            let gp_record = GpRecord::from_result(&Ok(gp.clone()), opts.bound, opts.verbose);
            let text = format!(
                "gorenstein projective: {}\n  Ext(M, Λ):     {}\n  Ext(Tr M, Λ):  {}\n",
                gp_record.verdict,
                describe_certificate(&gp_record.module),
                describe_certificate(&gp_record.transpose)
            );
            record.gorenstein_projective = Some(gp_record);
            report.modules.push(record);
            let code = if gp.verdict == GpVerdict::Unknown { 2 } else { 0 };
            let stdout = if ctx.json { report.to_json() + "\n" } else { text };
            Ok(Output { stdout, code })
        }
        Command::Selforth { algebra, module } => {
            let alg = ctx.algebra(algebra)?;
            let m = ctx.module(&alg, module)?;
            let cert = is_self_orthogonal(&m, opts.bound)?;
            let mut report = ctx.single(&display_name(algebra), &alg);
            let mut record = module_record(&display_name(module), &m);
            record.syzygy_orbit = cert.syzygy_dims.clone();
            let c = CertificateRecord::from_certificate(&cert, opts.verbose);
            let text = format!("self-orthogonality: {}\n", describe_certificate(&c));
            record.self_orthogonality = Some(c);
            report.modules.push(record);
            let code = if cert.verdict.is_decisive() { 0 } else { 2 };
            let stdout = if ctx.json { report.to_json() + "\n" } else { text };
            Ok(Output { stdout, code })
        }
        Command::Transpose { algebra, module } | Command::Star { algebra, module } => {
            let alg = ctx.algebra(algebra)?;
            let m = ctx.module(&alg, module)?;
            let is_tr = matches!(cli.command, Command::Transpose { .. });
            let image = if is_tr { transpose(&m) } else { dual_star(&m) };
            let name = display_name(algebra);
            if ctx.json {
                let value = json!({
                    "algebra": AlgebraRecord::new(&format!("{name} (opposite)"), image.algebra()),
                    "modules": [module_record(if is_tr { "Tr M" } else { "M*" }, &image)],
                    "theorems": {},
                    "timing": {},
                    "module_text": write_module(&image, &format!("{name}.op")),
                });
                return Ok(Output {
                    stdout: serde_json::to_string_pretty(&value).expect("serializable") + "\n",
                    code: 0,
                });
            }
            Ok(Output {
                stdout: opposite_text(&image, &name),
                code: 0,
            })
        }
        Command::Example25 { n, t } => {
            let t = match t {
                Some(t) => *t,
                None => n.checked_sub(2).ok_or_else(|| HarnessError::Precondition("n must be at least 3".into()))?,
            };
            let p = ctx.characteristic.unwrap_or(gorenstein_core::format::DEFAULT_CHARACTERISTIC);
            Ok(ctx.emit_report(&verify_cyclic_simples(*n, t, p, opts)?))
        }
        Command::GpcCheck { algebra } => {
            let alg = ctx.algebra(algebra)?;
            Ok(ctx.emit_report(&gpc_check(&display_name(algebra), &alg, opts)?))
        }
        Command::Symmetry { algebra } => {
            let alg = ctx.algebra(algebra)?;
            Ok(ctx.emit_report(&symmetry_check(&display_name(algebra), &alg, opts)?))
        }
        Command::Prop34 { algebra } => {
            let alg = ctx.algebra(algebra)?;
            Ok(ctx.emit_report(&self_orthogonal_closure_check(&display_name(algebra), &alg, opts)?))
        }
        Command::Prop37 { algebra } => {
            let alg = ctx.algebra(algebra)?;
            Ok(ctx.emit_report(&projectivity_equivalence_check(&display_name(algebra), &alg, opts)?))
        }
        Command::Fuzz {
            seed,
            count,
            max_vertices,
            out_dir,
        } => {
            let p = ctx.characteristic.unwrap_or(gorenstein_core::format::DEFAULT_CHARACTERISTIC);
            let report = fuzz(*seed, *count, *max_vertices, p, opts)?;
            if let Some(dir) = out_dir {
                write_violations(dir, &report)?;
            }
            Ok(ctx.emit_report(&report))
        }
    }
}

fn write_violations(dir: &Path, report: &VerificationReport) -> Result<(), HarnessError> {
    let io = |path: &Path| {
        let path = path.display().to_string();
        move |source| HarnessError::Io { path, source }
    };
    std::fs::create_dir_all(dir).map_err(io(dir))?;
    for t in report.theorems.values() {
        for (k, w) in t.witnesses.iter().enumerate() {
            let (Some(file), Some(text)) = (w["algebra_file"].as_str(), w["algebra_text"].as_str()) else {
                continue;
            };
            let alg_path = dir.join(file);
            std::fs::write(&alg_path, text).map_err(io(&alg_path))?;
            if let Some(module) = w["module_text"].as_str() {
                let mod_path = dir.join(format!("{}.{k}.mod", file.trim_end_matches(".alg")));
                std::fs::write(&mod_path, module).map_err(io(&mod_path))?;
            }
        }
    }
    Ok(())
}

/// Parses arguments, runs the command and returns the exit code. Output
/// goes to the given writers.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match run_command(&cli) {
        Ok(output) => {
            let _ = write!(out, "{}", output.stdout);
            output.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
