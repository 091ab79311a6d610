//! `torus-quant`: adapted bases, BKS intertwiners, Maslov indices and
//! representation matrices for quantized symplectic tori.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails, 2 on invalid
//! input. Payloads go to stdout and diagnostics to stderr.

mod output;

use std::fmt;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use torus_quant::exact_algebra::{IntMatrix, Rational, UnitPhase};
use torus_quant::maslov::{mp_generators, mu, tau, tau_transverse, LagLift, MpGenerator};
use torus_quant::quantization::{bks_matrix, corrected_intertwiner, HilbertSpace, Intertwiner};
use torus_quant::representations::{heisenberg_matrix, u_mp, u_sp, HeisenbergElement, RepMatrix};
use torus_quant::symplectic_lattice::{adapted_basis, Lagrangian, SymplecticSpace};
use torus_quant::verify::{run_suite, SuiteReport, VerifyConfig, DEFAULT_SEED, DEFAULT_TOLERANCE, SUITES};

#[derive(Parser)]
#[command(name = "torus-quant", version, about = "Quantization of symplectic tori with rational real polarizations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Adapted symplectic basis of an isotropic sublattice.
    Basis(Common),
    /// BKS intertwiner from the first polarization to the second.
    Bks(BksArgs),
    /// Maslov–Kashiwara index of three Lagrangians, and μ of their lifts.
    Maslov(MaslovArgs),
    /// Matrix of a Heisenberg, Sp(ℤ) or Mp(ℤ) element.
    Rep(RepArgs),
    /// Run the randomized property suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Common {
    /// Genus: the lattice is ℤ^{2g}.
    #[arg(long, default_value_t = 1)]
    g: usize,
    /// Level k (even, at least 2).
    #[arg(long, default_value_t = 2)]
    k: i64,
    /// Generator rows, e.g. "1 0 0 0; 0 1 0 0". Repeat for several Lagrangians.
    #[arg(long = "lagrangian", allow_hyphen_values = true)]
    lagrangians: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct BksArgs {
    #[command(flatten)]
    common: Common,
    /// Cover levels λ₁ λ₂ (mod 8); adds the Maslov phase.
    #[arg(long, num_args = 2, allow_negative_numbers = true)]
    lift: Option<Vec<i64>>,
    /// Base Lagrangian of the lifts.
    #[arg(long, allow_hyphen_values = true)]
    base: Option<String>,
}

#[derive(Args)]
struct MaslovArgs {
    #[command(flatten)]
    common: Common,
    /// One cover level per Lagrangian.
    #[arg(long, num_args = 1.., allow_negative_numbers = true)]
    lift: Option<Vec<i64>>,
    #[arg(long, allow_hyphen_values = true)]
    base: Option<String>,
    /// Covering degree: μ takes values mod 2q.
    #[arg(long, default_value_t = 4)]
    q: i64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Generator {
    Alpha,
    Beta,
    Gamma,
    GammaEpsilon,
    Epsilon,
    Heisenberg,
}

#[derive(Args)]
struct RepArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum)]
    generator: Generator,
    /// The g×g block A (alpha) or B (beta), rows separated by ';'.
    #[arg(long, allow_hyphen_values = true)]
    block: Option<String>,
    /// Include the metaplectic phase e^{πiz/4}.
    #[arg(long)]
    mp: bool,
    /// Heisenberg frame coordinates (a₁…a_g b₁…b_g) of k·v.
    #[arg(long, allow_hyphen_values = true)]
    n: Option<String>,
    /// Heisenberg central phase t in e^{iπt}, as "p/q".
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    phase: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suites to run (default: all).
    #[arg(long = "suite", value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
    suites: Vec<String>,
    /// Seed for instance generation; QUANT_SEED takes precedence.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

enum CliError {
    Core(torus_quant::Error),
    Input(String),
}

impl From<torus_quant::Error> for CliError {
    fn from(e: torus_quant::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn kind(&self) -> String {
        match self {
            CliError::Core(e) => e.to_string().split(':').next().unwrap_or("Error").to_string(),
            CliError::Input(_) => "InvalidInput".to_string(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Input(m) => write!(f, "InvalidInput: {m}"),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn input<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Input(msg.into()))
}

fn parse_rows(text: &str, width: usize) -> CliResult<IntMatrix> {
    let mut rows = Vec::new();
    for row in text.split(';').map(str::trim).filter(|r| !r.is_empty()) {
        let entries: Vec<i64> = row
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>().map_err(|_| CliError::Input(format!("not an integer: {t:?}"))))
            .collect::<CliResult<_>>()?;
        if entries.len() != width {
            return Err(torus_quant::Error::DimensionMismatch(format!(
                "row {row:?} has {} entries, expected {width}",
                entries.len()
            ))
            .into());
        }
        rows.push(entries);
    }
    Ok(IntMatrix::from_row_vecs(&rows, width))
}

fn parse_lagrangian(space: &SymplecticSpace, text: &str) -> CliResult<Lagrangian> {
    Ok(Lagrangian::new(space, parse_rows(text, space.dim())?)?)
}

fn parse_ratio(text: &str) -> CliResult<Rational> {
    let bad = || CliError::Input(format!("not a ratio: {text:?}"));
    let (n, d) = text.split_once('/').unwrap_or((text, "1"));
    let (n, d) = (n.trim().parse::<i128>().map_err(|_| bad())?, d.trim().parse::<i128>().map_err(|_| bad())?);
    if d == 0 {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

fn space_of(c: &Common) -> CliResult<SymplecticSpace> {
    if c.g == 0 {
        return input("g must be positive");
    }
    Ok(SymplecticSpace::standard(c.g))
}

fn lagrangians(c: &Common, space: &SymplecticSpace, count: usize) -> CliResult<Vec<Lagrangian>> {
    if c.lagrangians.len() != count {
        return input(format!("expected {count} --lagrangian values, got {}", c.lagrangians.len()));
    }
    c.lagrangians.iter().map(|t| parse_lagrangian(space, t)).collect()
}

/// A closed stdout (e.g. piping into `head`) is not an error.
fn emit(format: Format, value: &Value, text: String) {
    let body = match format {
        Format::Json => serde_json::to_string_pretty(value).expect("serializable"),
        Format::Text => text,
    };
    let _ = writeln!(std::io::stdout().lock(), "{body}");
}

fn cmd_basis(c: &Common) -> CliResult<()> {
    let space = space_of(c)?;
    let [l] = <[Lagrangian; 1]>::try_from(lagrangians(c, &space, 1)?).map_err(|_| CliError::Input("one Lagrangian".into()))?;
    let b = adapted_basis(&l)?;
    let f = b.frame();
    let symplectic = space.pairing(&f, &f) == *space.gram();
    let unimodular = f.det()?.abs() == 1;
    let spans = b.w().submatrix(0, l.rank(), 0, space.dim()) == *l.gens()
        || Lagrangian::from_span(&space, &b.w().submatrix(0, l.rank(), 0, space.dim()))? == l;
    let value = json!({
        "meta": { "g": c.g, "rank": l.rank() },
        "lagrangian": output::int_rows(l.gens()),
        "w": output::int_rows(b.w()),
        "wperp": output::int_rows(b.wperp()),
        "invariants": { "symplectic": symplectic, "unimodular": unimodular, "spans_lagrangian": spans },
    });
    let text = format!(
        "W:\n{}\nWperp:\n{}\nsymplectic: {symplectic}\nunimodular: {unimodular}\nspans_lagrangian: {spans}",
        output::rows_text(b.w()),
        output::rows_text(b.wperp())
    );
    emit(c.format, &value, text);
    Ok(())
}

fn intertwiner_value(c: &Common, f: &Intertwiner, extra: Value) -> (Value, String) {
    let n = f.matrix.dim();
    let mut meta = json!({
        "g": c.g,
        "k": c.k,
        "frames": { "source": output::frame(&f.source_frame), "target": output::frame(&f.target_frame) },
        "rows": "target labels",
        "columns": "source labels",
        "labels": f.source.labels(),
        "exact_available": f.exact.is_some(),
    });
    if let (Value::Object(m), Value::Object(e)) = (&mut meta, extra) {
        m.extend(e);
    }
    let mut value = json!({ "meta": meta, "matrix": output::matrix(&f.matrix) });
    if let Some(e) = &f.exact {
        value["exact"] = output::exact(e, n);
    }
    let text = format!(
        "g={} k={} rows=target labels, columns=source labels\n{}",
        c.g,
        c.k,
        output::matrix_text(&f.matrix)
    );
    (value, text)
}

fn cmd_bks(a: &BksArgs) -> CliResult<()> {
    let c = &a.common;
    let space = space_of(c)?;
    let ls = lagrangians(c, &space, 2)?;
    let (f, extra) = match (&a.lift, &a.base) {
        (Some(lift), Some(base)) => {
            let base = parse_lagrangian(&space, base)?;
            let l1 = LagLift::new(&base, &ls[0], lift[0], 4)?;
            let l2 = LagLift::new(&base, &ls[1], lift[1], 4)?;
            let m = mu(&l2, &l1, 4)?;
            let extra = json!({ "lifts": { "base": output::int_rows(base.gens()), "lambda": [l1.lambda(), l2.lambda()], "mu8": m } });
            (corrected_intertwiner(&l1, &l2, c.k)?, extra)
        }
        (None, None) => {
            let h1 = HilbertSpace::from_lagrangian(&ls[0], c.k)?;
            let h2 = HilbertSpace::from_lagrangian(&ls[1], c.k)?;
            (bks_matrix(&h1, &h2)?, json!({}))
        }
        _ => return input("--lift and --base go together"),
    };
    let (value, text) = intertwiner_value(c, &f, extra);
    emit(c.format, &value, text);
    Ok(())
}

fn cmd_maslov(a: &MaslovArgs) -> CliResult<()> {
    let c = &a.common;
    let space = space_of(c)?;
    let ls = lagrangians(c, &space, 3)?;
    let t = tau(&ls[0], &ls[1], &ls[2])?;
    let t_tr = tau_transverse(&ls[0], &ls[1], &ls[2]).ok();
    let mut value = json!({ "meta": { "g": c.g }, "tau": t, "tau_transverse": t_tr });
    let mut text = format!("tau = {t}");
    match (&a.lift, &a.base) {
        (Some(lift), Some(base)) => {
            if lift.len() != 3 {
                return input("--lift needs one level per Lagrangian");
            }
            let base = parse_lagrangian(&space, base)?;
            let lifts: Vec<LagLift> =
                ls.iter().zip(lift).map(|(l, &x)| LagLift::new(&base, l, x, a.q)).collect::<Result<_, _>>()?;
            let mut pairs = Vec::new();
            for (i, j) in [(0, 1), (1, 2), (0, 2)] {
                let m = mu(&lifts[i], &lifts[j], a.q)?;
                text.push_str(&format!("\nmu({i},{j}) = {m} (mod {})", 2 * a.q));
                pairs.push(json!({ "pair": [i, j], "value": m }));
            }
            value["mu"] = json!({ "modulus": 2 * a.q, "pairs": pairs });
        }
        (None, None) => {}
        _ => return input("--lift and --base go together"),
    }
    emit(c.format, &value, text);
    Ok(())
}

fn cmd_rep(a: &RepArgs) -> CliResult<()> {
    let c = &a.common;
    let space = space_of(c)?;
    let l = match c.lagrangians.len() {
        0 => Lagrangian::standard(&space),
        1 => parse_lagrangian(&space, &c.lagrangians[0])?,
        n => return input(format!("expected at most one --lagrangian, got {n}")),
    };
    let h = HilbertSpace::from_lagrangian(&l, c.k)?;
    let block = || -> CliResult<IntMatrix> {
        match &a.block {
            Some(b) => {
                let m = parse_rows(b, c.g)?;
                if m.rows() != c.g {
                    return Err(torus_quant::Error::DimensionMismatch(format!("block needs {} rows", c.g)).into());
                }
                Ok(m)
            }
            None => input("--block is required for alpha and beta"),
        }
    };
    let kind = match a.generator {
        Generator::Alpha => Some(MpGenerator::Alpha(block()?)),
        Generator::Beta => Some(MpGenerator::Beta(block()?)),
        Generator::Gamma => Some(MpGenerator::Gamma),
        Generator::GammaEpsilon => Some(MpGenerator::GammaEpsilon),
        Generator::Epsilon => Some(MpGenerator::Epsilon),
        Generator::Heisenberg => None,
    };
    let (rep, extra): (RepMatrix, Value) = match kind {
        Some(kind) => {
            let x = mp_generators(&l, &kind)?;
            let z = x.z();
            if a.mp {
                (u_mp(&x, &h)?, json!({ "group": "Mp", "z": z }))
            } else {
                (u_sp(x.sp(), &h)?, json!({ "group": "Sp" }))
            }
        }
        None => {
            let n = match &a.n {
                Some(n) => parse_rows(n, 2 * c.g)?,
                None => return input("--n is required for heisenberg"),
            };
            if n.rows() != 1 {
                return input("--n takes a single row");
            }
            let phase = UnitPhase::new(parse_ratio(&a.phase)?);
            let el = HeisenbergElement::new(h.polarization().basis(), c.k, phase, n.row(0))?;
            let extra = json!({ "group": "Heisenberg", "n": el.n(), "phase": output::ratio(el.phase().t()) });
            (heisenberg_matrix(&el, &h)?, extra)
        }
    };
    let basis = h.polarization().basis();
    let f = Intertwiner {
        source: h.clone(),
        target: h.clone(),
        source_frame: basis.clone(),
        target_frame: basis.clone(),
        matrix: rep.matrix,
        exact: rep.exact,
    };
    let (value, text) = intertwiner_value(c, &f, extra);
    emit(c.format, &value, text);
    Ok(())
}

/// Returns whether every suite passed.
fn cmd_verify(a: &VerifyArgs) -> CliResult<bool> {
    let seed = match std::env::var("QUANT_SEED") {
        Ok(s) => s.trim().parse::<u64>().map_err(|_| CliError::Input(format!("QUANT_SEED={s:?} is not a u64")))?,
        Err(_) => a.seed,
    };
    if !(a.tolerance > 0.0) {
        return input("tolerance must be positive");
    }
    let cfg = VerifyConfig { seed, tolerance: a.tolerance };
    let names: Vec<&str> = if a.suites.is_empty() { SUITES.to_vec() } else { a.suites.iter().map(String::as_str).collect() };
    let reports: Vec<SuiteReport> = names.iter().map(|s| run_suite(s, &cfg)).collect::<Result<_, _>>()?;
    let ok = reports.iter().all(SuiteReport::passed);
    let value = json!({
        "seed": seed,
        "tolerance": a.tolerance,
        "passed": ok,
        "reports": reports.iter().map(|r| json!({
            "suite": r.suite,
            "cases": r.cases,
            "failures": r.failures,
            "max_error": r.max_error,
            "notes": r.notes,
        })).collect::<Vec<_>>(),
    });
    let mut text = format!("seed {seed}, tolerance {:e}\n{:<12} {:>6} {:>9} {:>12}", a.tolerance, "suite", "cases", "failures", "max_error");
    for r in &reports {
        text.push_str(&format!("\n{:<12} {:>6} {:>9} {:>12.3e}", r.suite, r.cases, r.failures, r.max_error));
        for n in &r.notes {
            text.push_str(&format!("\n    {n}"));
        }
    }
    emit(a.format, &value, text);
    Ok(ok)
}

fn format_of(cmd: &Command) -> Format {
    match cmd {
        Command::Basis(c) => c.format,
        Command::Bks(a) => a.common.format,
        Command::Maslov(a) => a.common.format,
        Command::Rep(a) => a.common.format,
        Command::Verify(a) => a.format,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Basis(c) => cmd_basis(c).map(|_| true),
        Command::Bks(a) => cmd_bks(a).map(|_| true),
        Command::Maslov(a) => cmd_maslov(a).map(|_| true),
        Command::Rep(a) => cmd_rep(a).map(|_| true),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            match format_of(&cli.command) {
                Format::Json => eprintln!("{}", json!({ "error": { "kind": e.kind(), "message": e.to_string() } })),
                Format::Text => eprintln!("error: {e}"),
            }
            ExitCode::from(2)
        }
    }
}
