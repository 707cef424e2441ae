//! The `uce` command line: builtin families and coefficient algebras, JSON
//! algebra and system files, and one JSON or text report per invocation.
//!
//! Exit codes: 0 on success, 1 when a checked property fails, 2 on usage or
//! input errors.

pub mod format;
pub mod report;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::cyclic::hc1;
use crate::limits::{limit_u, sl_chain, theorem_verify, validate_system, DirectedSystem};
use crate::matrices::{coeff, family, h_iso_check, psq, steinberg_check, tau_cocycle, FamilyKind, SlCase};
use crate::superalg::{centre, derived_subalgebra, validate_assoc, validate_lie, LieSuperalgebra, ValidationReport};
use crate::uce::{build_uce, validate_cocycle};
use crate::{Error, Result};

use format::{AlgebraFile, AlgebraKind, SystemFile};
use report::{basis_value, digest, emit, CommandEcho, Format, Report, Timing};

const AFTER_HELP: &str = "\
Coefficient algebras (--coeff, whitespace ignored):
  Q                 the rationals
  Q[t]/(t^N)        truncated polynomials, 2 <= N <= 6
  Q[x,y]/(x,y)^2    basis 1, x, y with all products of x, y zero
  Grassmann(r)      exterior algebra on r odd generators, 1 <= r <= 3
  Mat(2,0;Q)        2x2 rational matrices
Families (--family): gl, sl, osp, p, sq, and psq (sq modulo its centre).
  p and sq take --m only (n = m) and need --coeff Q; osp needs even --n.
Chains (--chain a..b): sl(a,n;A) -> ... -> sl(b,n;A) by corner embeddings.
Exit codes: 0 success, 1 a checked property failed, 2 usage or input error.
UCE_THREADS caps internal parallelism.";

#[derive(Parser, Debug)]
#[command(name = "uce", version, about = "Universal central extensions of Lie superalgebras", after_help = AFTER_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Check the axioms of an algebra file or builtin algebra.
    Validate(Inputs),
    /// Build uce(L) and the canonical map u.
    Uce(Inputs),
    /// H2(L) = Ker u.
    H2(Inputs),
    /// HC1(A) of a coefficient algebra.
    Hc1(Inputs),
    /// Centre of L.
    Centre(Inputs),
    /// Whether L = [L, L].
    Perfect(Inputs),
    /// Emit a builtin family or coefficient algebra as an algebra file.
    Construct(Inputs),
    /// Check the cocycle tau_mn on sl(m,n;A).
    CocycleCheck(Inputs),
    /// Check the Steinberg relations inside uce(sl(m,n;A)).
    SteinbergCheck(Inputs),
    /// Check h_mn : uce(sl(m,n;A)) -> sl(m,n;A) + HC1(A).
    HIsoCheck(Inputs),
    /// Compare colim uce(L_i) with uce(colim L_i) for a directed system.
    LimitCheck(Inputs),
}

#[derive(Args, Debug, Clone, Default)]
pub struct Inputs {
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub coeff: Option<String>,
    /// Algebra file (JSON).
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Directed system file (JSON).
    #[arg(long)]
    pub system: Option<PathBuf>,
    /// Range `a..b` of even sizes for an sl chain.
    #[arg(long)]
    pub chain: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate(_) => "validate",
            Command::Uce(_) => "uce",
            Command::H2(_) => "h2",
            Command::Hc1(_) => "hc1",
            Command::Centre(_) => "centre",
            Command::Perfect(_) => "perfect",
            Command::Construct(_) => "construct",
            Command::CocycleCheck(_) => "cocycle-check",
            Command::SteinbergCheck(_) => "steinberg-check",
            Command::HIsoCheck(_) => "h-iso-check",
            Command::LimitCheck(_) => "limit-check",
        }
    }

    pub fn inputs(&self) -> &Inputs {
        match self {
            Command::Validate(i)
            | Command::Uce(i)
            | Command::H2(i)
            | Command::Hc1(i)
            | Command::Centre(i)
            | Command::Perfect(i)
            | Command::Construct(i)
            | Command::CocycleCheck(i)
            | Command::SteinbergCheck(i)
            | Command::HIsoCheck(i)
            | Command::LimitCheck(i) => i,
        }
    }
}

/// Results of one command; `passed` is set by commands that check a property.
struct Outcome {
    results: Map<String, Value>,
    passed: Option<bool>,
}

impl Outcome {
    fn new(results: Value, passed: Option<bool>) -> Self {
        match results {
            Value::Object(results) => Self { results, passed },
            _ => unreachable!("results are objects"),
        }
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

/// Input bytes that determine the report, for the digest.
struct Sources {
    files: Vec<Vec<u8>>,
}

impl Inputs {
    fn coeff_name(&self) -> &str {
        self.coeff.as_deref().unwrap_or("Q")
    }

    fn kind(&self) -> Result<String> {
        self.family.clone().ok_or_else(|| usage("--family or --file is required"))
    }

    fn m(&self) -> Result<usize> {
        self.m.ok_or_else(|| usage("--m is required"))
    }

    fn n_for(&self, kind: &str) -> Result<usize> {
        let m = self.m()?;
        match kind {
            "p" | "sq" | "psq" => match self.n {
                Some(n) if n != m => Err(usage(format!("{kind} needs n = m"))),
                _ => Ok(m),
            },
            _ => Ok(self.n.unwrap_or(0)),
        }
    }

    fn canonical(&self) -> String {
        format!(
            "family={:?};m={:?};n={:?};coeff={:?};chain={:?};file={};system={}",
            self.family,
            self.m,
            self.n,
            self.coeff.as_ref().map(|c| c.chars().filter(|c| !c.is_whitespace()).collect::<String>()),
            self.chain,
            self.file.is_some(),
            self.system.is_some()
        )
    }

    fn read(path: &PathBuf, sources: &mut Sources) -> Result<String> {
        let bytes = std::fs::read(path)?;
        let text = String::from_utf8(bytes.clone())
            .map_err(|e| Error::Parse { location: path.display().to_string(), message: e.to_string() })?;
        sources.files.push(bytes);
        Ok(text)
    }

    fn algebra_file(&self, sources: &mut Sources) -> Result<Option<(AlgebraFile, String)>> {
        let Some(path) = &self.file else { return Ok(None) };
        let text = Self::read(path, sources)?;
        let origin = path.display().to_string();
        let file = serde_json::from_str(&text).map_err(|e| Error::Parse {
            location: format!("{origin}:{}:{}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        Ok(Some((file, origin)))
    }

    fn lie(&self, sources: &mut Sources) -> Result<LieSuperalgebra> {
        if let Some((file, origin)) = self.algebra_file(sources)? {
            return file.to_lie(&origin);
        }
        let kind = self.kind()?;
        let m = self.m()?;
        let n = self.n_for(&kind)?;
        if kind == "psq" {
            if self.coeff_name() != "Q" {
                return Err(usage("psq needs --coeff Q"));
            }
            return Ok(psq(m)?.0);
        }
        let a = coeff::coefficient_by_name(self.coeff_name())?;
        Ok(family(kind.parse()?, m, n, &a)?.algebra().clone())
    }

    fn assoc(&self, sources: &mut Sources) -> Result<crate::superalg::AssocSuperalgebra> {
        if let Some((file, origin)) = self.algebra_file(sources)? {
            return file.to_assoc(&origin);
        }
        coeff::coefficient_by_name(self.coeff_name())
    }

    fn sl_case(&self) -> Result<SlCase> {
        let kind = self.family.as_deref().unwrap_or("sl");
        if kind != "sl" {
            return Err(usage("this check is defined for --family sl only"));
        }
        let a = coeff::coefficient_by_name(self.coeff_name())?;
        SlCase::new(self.m()?, self.n.unwrap_or(0), &a)
    }

    fn system(&self, sources: &mut Sources) -> Result<DirectedSystem> {
        if let Some(path) = &self.system {
            let text = Self::read(path, sources)?;
            let origin = path.display().to_string();
            let file: SystemFile = serde_json::from_str(&text).map_err(|e| Error::Parse {
                location: format!("{origin}:{}:{}", e.line(), e.column()),
                message: e.to_string(),
            })?;
            return file.to_system(&origin);
        }
        let chain = self.chain.as_deref().ok_or_else(|| usage("--system or --chain is required"))?;
        let (a, b) = chain.split_once("..").ok_or_else(|| usage(format!("bad --chain `{chain}`, expected a..b")))?;
        let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| usage(format!("bad --chain `{chain}`")));
        let (a, b) = (parse(a)?, parse(b)?);
        if a > b {
            return Err(usage(format!("empty --chain `{chain}`")));
        }
        if self.family.as_deref().unwrap_or("sl") != "sl" {
            return Err(usage("--chain builds sl chains only"));
        }
        let coeff = coeff::coefficient_by_name(self.coeff_name())?;
        Ok(sl_chain(&coeff, a..=b, self.n.unwrap_or(0))?.0)
    }
}

fn violations(r: &ValidationReport) -> Value {
    serde_json::to_value(&r.violations).expect("violations serialize")
}

fn labels(l: &LieSuperalgebra) -> Value {
    json!(l.basis().labels())
}

fn execute(cmd: &Command, sources: &mut Sources) -> Result<Outcome> {
    let inp = cmd.inputs();
    match cmd {
        Command::Validate(_) => {
            let (kind, dim, report) = if let Some((file, origin)) = inp.algebra_file(sources)? {
                let basis = file.graded_basis(&origin)?;
                let dim = basis.dim();
                let report = match file.to_algebra(&origin) {
                    Ok(_) => ValidationReport::default(),
                    Err(Error::Invalid(r)) => r,
                    Err(e) => return Err(e),
                };
                (if file.kind == AlgebraKind::Lie { "lie" } else { "assoc" }, dim, report)
            } else if inp.family.is_some() {
                let l = inp.lie(sources)?;
                ("lie", l.dim(), validate_lie(l.basis(), l.table()))
            } else {
                let a = inp.assoc(sources)?;
                ("assoc", a.dim(), validate_assoc(a.basis(), a.table(), a.unit()))
            };
            let ok = report.is_ok();
            Ok(Outcome::new(json!({"kind": kind, "dim": dim, "valid": ok, "violations": violations(&report)}), Some(ok)))
        }
        Command::Uce(_) | Command::H2(_) => {
            let l = inp.lie(sources)?;
            let perfect = derived_subalgebra(&l).1;
            let u = build_uce(&l)?;
            let h2 = u.h2();
            let mut r = json!({
                "dim": l.dim(),
                "perfect": perfect,
                "dim_uce": u.dim(),
                "dim_h2": h2.dim(),
                "h2_basis": basis_value(h2.basis(), u.dim()),
            });
            if matches!(cmd, Command::Uce(_)) {
                r["uce_basis"] = labels(u.algebra());
                r["centrally_closed"] = json!(perfect && u.dim() == l.dim());
            }
            Ok(Outcome::new(r, None))
        }
        Command::Hc1(_) => {
            let a = inp.assoc(sources)?;
            let (cp, h) = hc1(&a)?;
            Ok(Outcome::new(
                json!({
                    "dim": a.dim(),
                    "supercommutative": a.is_supercommutative(),
                    "dim_pairs": cp.dim(),
                    "pairs_basis": cp.basis().labels(),
                    "dim_hc1": h.dim(),
                    "hc1_basis": basis_value(h.basis(), cp.dim()),
                }),
                None,
            ))
        }
        Command::Centre(_) => {
            let l = inp.lie(sources)?;
            let z = centre(&l);
            Ok(Outcome::new(
                json!({"dim": l.dim(), "dim_centre": z.dim(), "centre_basis": basis_value(z.basis(), l.dim())}),
                None,
            ))
        }
        Command::Perfect(_) => {
            let l = inp.lie(sources)?;
            let (d, perfect) = derived_subalgebra(&l);
            Ok(Outcome::new(json!({"dim": l.dim(), "dim_derived": d.dim(), "perfect": perfect}), Some(perfect)))
        }
        Command::Construct(_) => {
            if inp.family.is_none() && inp.file.is_none() {
                let a = inp.assoc(sources)?;
                let file = AlgebraFile::from_assoc(&a);
                return Ok(Outcome::new(json!({"coeff": inp.coeff_name(), "dim": a.dim(), "algebra": file}), None));
            }
            let l = inp.lie(sources)?;
            let even = l.basis().count(crate::superalg::Parity::Even);
            Ok(Outcome::new(
                json!({
                    "family": inp.family,
                    "m": inp.m,
                    "n": inp.family.as_deref().map(|k| inp.n_for(k)).transpose()?,
                    "coeff": inp.coeff_name(),
                    "dim": l.dim(),
                    "dim_even": even,
                    "dim_odd": l.dim() - even,
                    "algebra": AlgebraFile::from_lie(&l),
                }),
                None,
            ))
        }
        Command::CocycleCheck(_) => {
            let kind = inp.family.as_deref().unwrap_or("sl");
            if kind != "sl" {
                return Err(usage("cocycle-check uses tau_mn on --family sl"));
            }
            let a = coeff::coefficient_by_name(inp.coeff_name())?;
            let f = family(FamilyKind::Sl, inp.m()?, inp.n.unwrap_or(0), &a)?;
            let cp = crate::cyclic::cyclic_pairs(&a)?;
            let tau = tau_cocycle(&f, &cp)?;
            let report = validate_cocycle(&tau, f.algebra())?;
            let ok = report.is_ok();
            Ok(Outcome::new(
                json!({"dim_sl": f.dim(), "dim_target": cp.dim(), "valid": ok, "violations": violations(&report)}),
                Some(ok),
            ))
        }
        Command::SteinbergCheck(_) => {
            let r = steinberg_check(&inp.sl_case()?)?;
            let passed = r.passed();
            let mut v = serde_json::to_value(&r).expect("serializable");
            v["passed"] = json!(passed);
            Ok(Outcome::new(v, Some(passed)))
        }
        Command::HIsoCheck(_) => {
            let r = h_iso_check(&inp.sl_case()?)?;
            let passed = r.passed();
            let mut v = serde_json::to_value(&r).expect("serializable");
            v["passed"] = json!(passed);
            Ok(Outcome::new(v, Some(passed)))
        }
        Command::LimitCheck(_) => {
            let s = inp.system(sources)?;
            validate_system(&s).into_result(())?;
            let lu = limit_u(&s)?;
            let mut v = json!({
                "indices": s.len(),
                "dims": s.algebras().iter().map(|l| l.dim()).collect::<Vec<_>>(),
                "all_perfect": lu.all_perfect,
                "limit_u_kernel_dim": lu.kernel.dim(),
                "limit_u_kernel_central": lu.kernel_central,
                "limit_u_surjective": lu.surjective,
            });
            let mut passed = lu.kernel_central && (!lu.all_perfect || lu.surjective);
            if lu.all_perfect {
                let t = theorem_verify(&s)?;
                passed &= t.passed();
                v["phi_bijective"] = json!(t.phi_bijective);
                v["h2_dims"] = json!(t.h2_dims);
                v["h2_stable"] = json!(t.h2_stable());
                v["theorem"] = serde_json::to_value(&t).expect("serializable");
            }
            v["passed"] = json!(passed);
            Ok(Outcome::new(v, Some(passed)))
        }
    }
}

/// Runs one parsed invocation. Returns the report and the exit code.
pub fn run(cli: &Cli, args: &[String]) -> Result<(Report, i32)> {
    let start = Instant::now();
    let cmd = &cli.command;
    let mut sources = Sources { files: Vec::new() };
    let outcome = execute(cmd, &mut sources)?;
    let canonical = cmd.inputs().canonical();
    let mut parts: Vec<&[u8]> = vec![cmd.name().as_bytes(), canonical.as_bytes()];
    parts.extend(sources.files.iter().map(Vec::as_slice));
    let report = Report {
        command: CommandEcho { name: cmd.name().to_string(), args: args.to_vec() },
        input_digest: digest(&parts),
        results: outcome.results,
        timing: Timing { elapsed_ms: start.elapsed().as_millis() as u64 },
    };
    let code = if outcome.passed == Some(false) { 1 } else { 0 };
    Ok((report, code))
}

/// Parses `argv` (program name first) and runs it, returning the exit code
/// and what would be written to stdout and stderr.
pub fn execute_args<I, T>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (2, String::new(), text) };
        }
    };
    let args: Vec<String> = argv.iter().skip(2).map(|a| a.to_string_lossy().into_owned()).collect();
    match run(&cli, &args) {
        Ok((report, code)) => (code, emit(&report, cli.command.inputs().format), String::new()),
        Err(e) => (2, String::new(), format!("error: {e}\n")),
    }
}

/// Configures the thread pool from `UCE_THREADS`.
pub fn configure_threads() -> std::result::Result<(), String> {
    let Ok(value) = std::env::var("UCE_THREADS") else { return Ok(()) };
    let n: usize = value.trim().parse().map_err(|_| format!("UCE_THREADS must be a positive integer, got `{value}`"))?;
    if n == 0 {
        return Err("UCE_THREADS must be a positive integer, got 0".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

/// Entry point used by the `uce` binary.
pub fn main_from_env() -> i32 {
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return 2;
    }
    let (code, out, err) = execute_args(std::env::args_os());
    print!("{out}");
    eprint!("{err}");
    code
}

