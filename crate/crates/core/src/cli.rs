//! Command-line interface.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{AlgebraLiteral, NakayamaAlgebra, VertexId};
use crate::counting::{self, count_tau_tilt_linear};
use crate::error::Error;
use crate::format::{flip_graph_dot, hasse_dot, module_text, pair_text, parse_module, step_text, StepRecord};
use crate::geometry::{
    enumerate_restricted, enumerate_signed, flip_graph, parse_arcs, tau_tilt_to_triangulation,
    triangulation_to_tau_tilt, Triangulation,
};
use crate::poset::{hasse_direct, hasse_rejection_with, HasseQuiver, QChoice};
use crate::sequences::{in_z_restricted, parse_seq, top_of_triangulation, x_of_sequence};
use crate::tautilt::SttPair;
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "nakayama-tilt",
    version,
    about = "Support τ-tilting modules over Nakayama algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List τ-tilting, proper or support τ-tilting modules.
    Enumerate {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value_t = Which::Stt)]
        which: Which,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Hasse quiver of the support τ-tilting pairs.
    Hasse {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value_t = HasseMethod::Direct)]
        method: HasseMethod,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        /// Print the rejection steps.
        #[arg(long)]
        trace: bool,
        /// Vertices to reject at, in order, e.g. `1,2,3`.
        #[arg(long, value_delimiter = ',')]
        q_sequence: Vec<u32>,
    },
    /// Translate between modules, triangulations and sequences.
    Translate {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum)]
        from: Model,
        #[arg(long, value_enum)]
        to: Model,
        /// `2/1/3 + 3`, `<*,1> <2,1>` or `(2,1,0)`.
        #[arg(long)]
        payload: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List triangulations of the punctured polygon.
    Triangulate {
        /// Number of boundary points.
        #[arg(long)]
        n: u32,
        /// Largest admissible inner-arc length ending at each point.
        #[arg(long, value_delimiter = ',')]
        bounds: Vec<u32>,
        /// List signed triangulations instead.
        #[arg(long)]
        signed: bool,
        /// `dot` prints the flip graph.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count τ-tilting, proper and support τ-tilting modules.
    Count {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification bundle.
    Verify {
        /// Every entry of the reference tables.
        #[arg(long)]
        tables: bool,
        /// Module, triangulation and sequence bijections up to this size.
        #[arg(long, value_name = "N_MAX")]
        bijections: Option<u32>,
        /// Proper pairs against τ-tilting modules up to this size.
        #[arg(long, value_name = "N_MAX")]
        lift_drop: Option<u32>,
        /// Rejection against the direct Hasse quiver.
        #[arg(long, num_args = 2, value_names = ["N_MAX", "R_MAX"])]
        rejection: Vec<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug, Clone, Default)]
struct AlgebraArgs {
    /// Self-injective cyclic algebra on N vertices (use with `--r`).
    #[arg(long, value_name = "N")]
    cyclic: Option<u32>,
    /// Linear algebra on N vertices (use with `--r`).
    #[arg(long, value_name = "N")]
    gamma: Option<u32>,
    /// Loewy length for `--cyclic` and `--gamma`.
    #[arg(long)]
    r: Option<u32>,
    /// Loewy lengths of the projectives in label order.
    #[arg(long, value_delimiter = ',')]
    kupisch: Vec<u32>,
    /// Read `--kupisch` as a linear series.
    #[arg(long)]
    linear: bool,
    /// JSON algebra literal.
    #[arg(long)]
    algebra: Option<String>,
    /// The zero algebra.
    #[arg(long)]
    zero: bool,
}

impl AlgebraArgs {
    fn build(&self) -> Result<NakayamaAlgebra, Failure> {
        let chosen = [
            self.cyclic.is_some(),
            self.gamma.is_some(),
            !self.kupisch.is_empty(),
            self.algebra.is_some(),
            self.zero,
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        if chosen != 1 {
            return Err(Failure::Usage(
                "give exactly one of --cyclic, --gamma, --kupisch, --algebra, --zero".into(),
            ));
        }
        let need_r = || self.r.ok_or_else(|| Failure::Usage("--r is required here".into()));
        let alg = if let Some(n) = self.cyclic {
            NakayamaAlgebra::cyclic(n, need_r()?)?
        } else if let Some(n) = self.gamma {
            NakayamaAlgebra::gamma(n, need_r()?)?
        } else if !self.kupisch.is_empty() {
            if self.linear {
                NakayamaAlgebra::linear(&self.kupisch)?
            } else {
                NakayamaAlgebra::cyclic_kupisch(&self.kupisch)?
            }
        } else if let Some(text) = &self.algebra {
            AlgebraLiteral::parse(text)?
        } else {
            NakayamaAlgebra::zero()
        };
        Ok(alg)
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Which {
    Stt,
    Tau,
    Proper,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum HasseMethod {
    Direct,
    Rejection,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Model {
    Module,
    Arcs,
    Seq,
}

enum Failure {
    Usage(String),
    Mismatch(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

/// Runs the CLI on `args` (program name first), writing to `out` and `err`,
/// and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Mismatch(msg)) => {
            let _ = writeln!(err, "mismatch: {msg}");
            EXIT_MISMATCH
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Enumerate { algebra, which, format } => enumerate(&algebra.build()?, which, format, out),
        Command::Hasse {
            algebra,
            method,
            format,
            trace,
            q_sequence,
        } => hasse(&algebra.build()?, method, format, trace, q_sequence, out),
        Command::Translate {
            algebra,
            from,
            to,
            payload,
            format,
        } => translate(&algebra.build()?, from, to, &payload, format, out),
        Command::Triangulate {
            n,
            bounds,
            signed,
            format,
        } => triangulate(n, bounds, signed, format, out),
        Command::Count { algebra, format } => count(&algebra.build()?, format, out),
        Command::Verify {
            tables,
            bijections,
            lift_drop,
            rejection,
            format,
        } => run_verify(tables, bijections, lift_drop, rejection, format, out),
    }
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn no_dot(format: Format) -> Result<(), Failure> {
    if format == Format::Dot {
        return Err(Failure::Usage("dot output is not available for this command".into()));
    }
    Ok(())
}

fn enumerate(alg: &NakayamaAlgebra, which: Which, format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    no_dot(format)?;
    let pairs: Vec<SttPair> = match which {
        Which::Stt => alg.enumerate_stt(),
        Which::Tau => alg.enumerate_tau_tilt(),
        Which::Proper => alg.enumerate_ps_tau_tilt(),
    };
    match format {
        Format::Json => json_line(out, &pairs)?,
        _ => {
            for p in &pairs {
                writeln!(out, "{}", pair_text(alg, p))?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct HasseJson<'a> {
    algebra: AlgebraLiteral,
    #[serde(skip_serializing_if = "Option::is_none")]
    steps: Option<Vec<StepRecord>>,
    hasse: &'a HasseQuiver<SttPair>,
}

fn hasse(
    alg: &NakayamaAlgebra,
    method: HasseMethod,
    format: Format,
    trace: bool,
    q_sequence: Vec<u32>,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let choice = if q_sequence.is_empty() {
        QChoice::SmallestLabel
    } else {
        QChoice::Sequence(q_sequence.into_iter().map(VertexId).collect())
    };
    let run = match method {
        HasseMethod::Direct => None,
        _ => Some(hasse_rejection_with(alg, &choice)?),
    };
    let h = match (&run, method) {
        (Some(r), HasseMethod::Both) => {
            let direct = hasse_direct(alg);
            if direct != r.hasse {
                return Err(Failure::Mismatch(format!(
                    "{alg}: rejection and direct Hasse quivers differ"
                )));
            }
            direct
        }
        (Some(r), _) => r.hasse.clone(),
        (None, _) => hasse_direct(alg),
    };
    let steps = if trace {
        run.as_ref().map(|r| r.steps.as_slice())
    } else {
        None
    };
    if trace && steps.is_none() {
        return Err(Failure::Usage("--trace needs --method rejection or both".into()));
    }
    match format {
        Format::Json => json_line(
            out,
            &HasseJson {
                algebra: AlgebraLiteral::from(alg),
                steps: steps.map(|s| s.iter().map(StepRecord::from).collect()),
                hasse: &h,
            },
        )?,
        Format::Dot => {
            for s in steps.unwrap_or_default() {
                writeln!(out, "// {}", step_text(s))?;
            }
            out.write_all(hasse_dot(&h, |p| pair_text(alg, p)).as_bytes())?;
        }
        Format::Text => {
            for s in steps.unwrap_or_default() {
                writeln!(out, "{}", step_text(s))?;
            }
            for &(a, b) in &h.arrows {
                writeln!(
                    out,
                    "{}  ->  {}",
                    pair_text(alg, &h.vertices[a]),
                    pair_text(alg, &h.vertices[b])
                )?;
            }
        }
    }
    Ok(())
}

fn polygon_bounds(alg: &NakayamaAlgebra) -> Result<(u32, Vec<u32>), Failure> {
    let n = alg.num_vertices() as u32;
    if n == 0 {
        return Err(Failure::Usage("the zero algebra has no polygon".into()));
    }
    Ok((n, alg.kupisch_series()))
}

fn translate(
    alg: &NakayamaAlgebra,
    from: Model,
    to: Model,
    payload: &str,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    no_dot(format)?;
    let (n, bounds) = polygon_bounds(alg)?;
    let tri: Triangulation = match from {
        Model::Module => {
            let m = parse_module(alg, payload)?;
            let pair = alg
                .is_support_tau_tilting(&m)
                .filter(SttPair::is_tau_tilting)
                .ok_or_else(|| Error::NotInDomain(format!("{payload} is not a τ-tilting module of {alg}")))?;
            tau_tilt_to_triangulation(&pair, alg)?
        }
        Model::Arcs => {
            let x = Triangulation::new(n, parse_arcs(payload)?)?;
            triangulation_to_tau_tilt(&x, alg)?;
            x
        }
        Model::Seq => {
            let a = parse_seq(payload)?;
            if a.n() != n || !in_z_restricted(&a, &bounds) {
                return Err(Error::NotInDomain(format!("{a} is not admissible for {alg}")).into());
            }
            x_of_sequence(&a)
        }
    };
    match to {
        Model::Module => {
            let pair = triangulation_to_tau_tilt(&tri, alg)?;
            match format {
                Format::Json => json_line(out, &pair.summands)?,
                _ => writeln!(out, "{}", module_text(alg, &pair.summands))?,
            }
        }
        Model::Arcs => match format {
            Format::Json => json_line(out, &tri)?,
            _ => writeln!(out, "{tri}")?,
        },
        Model::Seq => {
            let a = top_of_triangulation(&tri);
            match format {
                Format::Json => json_line(out, &a)?,
                _ => writeln!(out, "{a}")?,
            }
        }
    }
    Ok(())
}

fn triangulate(n: u32, bounds: Vec<u32>, signed: bool, format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Usage("--n must be positive".into()));
    }
    let bounds = if bounds.is_empty() { vec![n; n as usize] } else { bounds };
    if bounds.len() != n as usize {
        return Err(Failure::Usage(format!("--bounds needs {n} entries")));
    }
    if signed {
        if bounds.iter().any(|&b| b < n) {
            return Err(Failure::Usage("signed triangulations are listed without bounds".into()));
        }
        let sx = enumerate_signed(n);
        match format {
            Format::Json => json_line(out, &sx)?,
            Format::Dot => return Err(Failure::Usage("dot output lists unsigned flip graphs".into())),
            Format::Text => {
                for s in &sx {
                    writeln!(out, "{s}")?;
                }
            }
        }
        return Ok(());
    }
    let tris = enumerate_restricted(n, &bounds);
    match format {
        Format::Json => json_line(out, &tris)?,
        Format::Dot => out.write_all(flip_graph_dot(&tris, &flip_graph(&tris)).as_bytes())?,
        Format::Text => {
            for t in &tris {
                writeln!(out, "{t}")?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CountJson {
    algebra: String,
    tau: usize,
    proper: usize,
    stt: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    recurrence: Option<String>,
}

fn count(alg: &NakayamaAlgebra, format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    no_dot(format)?;
    let stt = alg.enumerate_stt();
    let tau = stt.iter().filter(|p| p.is_tau_tilting()).count();
    let linear = alg.components().iter().all(|c| c.linear_source().is_ok());
    let recurrence = if linear {
        Some(count_tau_tilt_linear(alg)?)
    } else {
        None
    };
    if let Some(rec) = &recurrence {
        if *rec != num_bigint::BigUint::from(tau) {
            return Err(Failure::Mismatch(format!("recurrence gives {rec}, enumeration {tau}")));
        }
    }
    let report = CountJson {
        algebra: alg.to_string(),
        tau,
        proper: stt.len() - tau,
        stt: stt.len(),
        recurrence: recurrence.map(|r| r.to_string()),
    };
    match format {
        Format::Json => json_line(out, &report)?,
        _ => {
            writeln!(out, "algebra: {}", report.algebra)?;
            writeln!(out, "tau-tilting: {}", report.tau)?;
            writeln!(out, "proper support tau-tilting: {}", report.proper)?;
            writeln!(out, "support tau-tilting: {}", report.stt)?;
            if let Some(r) = &report.recurrence {
                writeln!(out, "recurrence: {r}")?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyJson {
    tables: Vec<counting::CountReport>,
    checks: Vec<verify::Outcome>,
}

fn run_verify(
    tables: bool,
    bijections: Option<u32>,
    lift_drop: Option<u32>,
    rejection: Vec<u32>,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    no_dot(format)?;
    if !tables && bijections.is_none() && lift_drop.is_none() && rejection.is_empty() {
        return Err(Failure::Usage(
            "choose --tables, --bijections, --lift-drop or --rejection".into(),
        ));
    }
    let reports = if tables { counting::verify_tables() } else { Vec::new() };
    let mut checks = Vec::new();
    if let Some(n) = bijections {
        checks.push(verify::verify_bijections(n));
    }
    if let Some(n) = lift_drop {
        checks.push(verify::verify_lift_drop(n));
    }
    if let [n, r] = rejection[..] {
        checks.push(verify::verify_rejection(n, r));
    }
    let mut failures: Vec<String> = reports.iter().flat_map(|r| r.mismatches()).collect();
    failures.extend(
        checks
            .iter()
            .flat_map(|c| c.failures.iter().map(|f| format!("{}: {f}", c.name))),
    );
    match format {
        Format::Json => json_line(
            out,
            &VerifyJson {
                tables: reports,
                checks,
            },
        )?,
        _ => {
            if tables {
                writeln!(out, "family  n  r  tau  proper  stt  expected")?;
                for r in &reports {
                    let status = if r.is_ok() { "ok" } else { "MISMATCH" };
                    writeln!(
                        out,
                        "{:<7} {:>2} {:>2} {:>4} {:>7} {:>4}  {}/{} {status}",
                        r.family.to_string(),
                        r.n,
                        r.r,
                        r.tau,
                        r.proper,
                        r.stt,
                        r.expected_tau.map_or("-".into(), |v| v.to_string()),
                        r.expected_stt.map_or("-".into(), |v| v.to_string()),
                    )?;
                }
            }
            for c in &checks {
                let status = if c.is_ok() { "ok" } else { "MISMATCH" };
                writeln!(out, "{}: {} cases {status}", c.name, c.cases)?;
            }
            for f in &failures {
                writeln!(out, "  {f}")?;
            }
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!("{} failures", failures.len())))
    }
}
