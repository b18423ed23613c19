//! Command-line front end: machine runs, branch statistics, circuit
//! simulation and decisions, promise-problem classification, enumeration
//! browsing, gap-language queries and diagonalization runs.

mod config;
mod report;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use promisekit::enumeration::{Enumeration, Family, HarderMode, OracleSeries, Polynomial, ReductionSeries};
use promisekit::field::decimal;
use promisekit::gap::{
    diagonalize, gap_member, interval_limits, ladner, limits, Affine, DiagInstance, DiagResult, Mode, Side,
};
use promisekit::promise::registry::builtin;
use promisekit::promise::{
    differences, karp_check, karp_to_cook, marked_union, ReductionFn, Thresholds, TotalDecider,
};
use promisekit::ptm::{enumerate_branches, enumerate_branches_clocked, BranchStats, PtmDesc};
use promisekit::qcircuit::{
    circuit_bqp, circuit_qcma, circuit_qma, classify_bqp, classify_qcma, classify_qma, p_acc, parse_circuit, Circuit,
};
use promisekit::tm::{decode_godel, run, RunResult};
use promisekit::{FieldElem, Rational, Word};

use config::Config;
use report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Tsv,
}

#[derive(Debug)]
pub enum CliError {
    Domain(promisekit::Error),
    Io(String, io::Error),
    Usage(String),
}

impl From<promisekit::Error> for CliError {
    fn from(e: promisekit::Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(name = "promisekit", version, about = "Exact deciders for promise problems and delayed diagonalization")]
struct Cli {
    /// Flat key=value file (keys: c, s, fuel, bound, search-cap, format).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Completeness threshold c, e.g. 2/3.
    #[arg(long, global = true)]
    completeness: Option<Rational>,
    /// Soundness threshold s, e.g. 1/3.
    #[arg(long, global = true)]
    soundness: Option<Rational>,
    /// Step budget for machine runs.
    #[arg(long, global = true)]
    fuel: Option<u64>,
    /// Word-length bound for tables and checks.
    #[arg(long, global = true)]
    bound: Option<usize>,
    /// Longest word length scanned for contradictions.
    #[arg(long, global = true)]
    search_cap: Option<usize>,
    /// Clock polynomial of machine-backed problems, coefficients constant
    /// term first (`1,1` is n + 1); defaults to the fuel.
    #[arg(long, global = true)]
    clock: Option<Polynomial>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a deterministic machine.
    Run {
        #[arg(long)]
        machine: PathBuf,
        /// Input word; repeat for several blank-separated inputs.
        #[arg(long = "input", value_parser = parse_word)]
        inputs: Vec<Word>,
    },
    /// Enumerate the computation branches of a probabilistic machine.
    Branches {
        #[arg(long)]
        machine: PathBuf,
        #[arg(long = "input", value_parser = parse_word)]
        inputs: Vec<Word>,
        /// Count branches cut off by the fuel as rejecting.
        #[arg(long)]
        clocked: bool,
    },
    /// Simulate a circuit exactly.
    Simulate {
        #[arg(long)]
        circuit: PathBuf,
        /// The encoding starts with a witness-register header.
        #[arg(long)]
        witness_header: bool,
        /// Basis input for the whole register; all zeros by default.
        #[arg(long, value_parser = parse_word)]
        input: Option<Word>,
    },
    /// Extremal verdict of a circuit or circuit generator.
    Decide {
        #[arg(value_enum)]
        class: QuantumClass,
        #[arg(long, required_unless_present = "circuit", conflicts_with = "circuit")]
        gen: Option<PathBuf>,
        #[arg(long)]
        circuit: Option<PathBuf>,
        #[arg(long, default_value = "", value_parser = parse_word)]
        input: Word,
        /// Generator runtime polynomial; defaults to the fuel.
        #[arg(long)]
        runtime: Option<Polynomial>,
    },
    /// Classify words with a total decider.
    Classify {
        /// builtin:<name> or machine:<file>
        #[arg(long)]
        problem: String,
        #[command(flatten)]
        query: Query,
        /// Report the difference sets against a second problem.
        #[arg(long)]
        against: Option<String>,
    },
    /// Inspect the i-th decider of a class presentation.
    Enumerate {
        family: Family,
        index: u64,
        #[command(flatten)]
        query: Query,
    },
    /// Gap-language membership and interval limits.
    Gaplang {
        /// succ, double or affine:a:b (r(n) = a·n + b)
        #[arg(long)]
        r: String,
        #[arg(long, required_unless_present = "limits", conflicts_with = "limits", value_parser = parse_word)]
        member: Option<Word>,
        /// Print the interval limits covering lengths up to this value.
        #[arg(long)]
        limits: Option<u64>,
    },
    /// Mix A and A′ so that the result escapes both presentations.
    Diagonalize {
        #[arg(long)]
        a: String,
        #[arg(long)]
        a_prime: String,
        /// Presentation of C: comma-separated problems, family:<token> or
        /// closure:<problem>.
        #[arg(long)]
        c: String,
        #[arg(long)]
        c_prime: String,
        #[arg(long, value_enum, default_value = "representable")]
        c_mode: ModeArg,
        #[arg(long, value_enum, default_value = "representable")]
        c_prime_mode: ModeArg,
        /// Presented machines per side in the witness log.
        #[arg(long, default_value_t = 3)]
        verify: u64,
    },
    /// Ladner-style intermediate problem below A.
    Ladner {
        #[arg(long)]
        a: String,
        #[arg(long)]
        c: String,
        #[arg(long, value_enum, default_value = "representable")]
        c_mode: ModeArg,
        /// Base presentation of the harder-set construction.
        #[arg(long)]
        harder_base: String,
        #[arg(long, value_enum, default_value = "t")]
        harder_mode: HarderArg,
        /// Reductions tried by the harder set: the identity only, or the
        /// full indexed series.
        #[arg(long, value_enum, default_value = "identity")]
        harder_series: SeriesArg,
    },
}

#[derive(Args)]
struct Query {
    /// Classify a single word; otherwise tabulate all words up to the bound.
    #[arg(long, value_parser = parse_word)]
    input: Option<Word>,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuantumClass {
    Bqp,
    Qcma,
    Qma,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Representable,
    Presentable,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Representable => Mode::Representable,
            ModeArg::Presentable => Mode::Presentable,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum HarderArg {
    M,
    T,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesArg {
    Identity,
    Indexed,
}

fn parse_word(s: &str) -> Result<Word, promisekit::Error> {
    s.parse()
}

struct Ctx {
    cfg: Config,
    th: Thresholds,
    clock: Polynomial,
}

fn settings(cli: &Cli) -> CliResult<Ctx> {
    let mut cfg = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    if let Some(c) = &cli.completeness {
        cfg.c = c.clone();
    }
    if let Some(s) = &cli.soundness {
        cfg.s = s.clone();
    }
    cfg.fuel = cli.fuel.unwrap_or(cfg.fuel);
    cfg.bound = cli.bound.unwrap_or(cfg.bound);
    cfg.search_cap = cli.search_cap.unwrap_or(cfg.search_cap);
    cfg.format = cli.format.unwrap_or(cfg.format);
    let th = cfg.thresholds()?;
    let clock = cli.clock.clone().unwrap_or_else(|| Polynomial::constant(cfg.fuel));
    Ok(Ctx { cfg, th, clock })
}

/// Reads a bit file; whitespace is ignored so spaced listings work.
fn read_bits(path: &PathBuf) -> CliResult<Word> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    let bits: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    Ok(bits.parse()?)
}

fn fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// `p/q` (or `p/q + p/q*r` with r = 1/√2) followed by a 12-digit decimal.
fn exact(x: &FieldElem) -> CliResult<String> {
    let dec = decimal(x, 12)?;
    if x.b.is_zero() {
        Ok(format!("{} ({dec})", fraction(&x.a)))
    } else {
        Ok(format!("{} + {}*r ({dec})", fraction(&x.a), fraction(&x.b)))
    }
}

fn exact_rational(r: &Rational) -> CliResult<String> {
    exact(&FieldElem::from_rational(r.clone()))
}

fn problem(spec: &str, ctx: &Ctx) -> CliResult<TotalDecider> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return Ok(builtin(name)?);
    }
    if let Some(file) = spec.strip_prefix("machine:") {
        let m = decode_godel(&read_bits(&PathBuf::from(file))?);
        return Ok(TotalDecider::machine(spec, m, ctx.clock.clone()));
    }
    Err(CliError::Usage(format!("problem {spec:?}: expected builtin:<name> or machine:<file>")))
}

fn presentation(spec: &str, ctx: &Ctx) -> CliResult<Enumeration> {
    if let Some(token) = spec.strip_prefix("family:") {
        return Ok(Enumeration::Family(token.parse()?, ctx.th.clone()));
    }
    if let Some(p) = spec.strip_prefix("closure:") {
        return Ok(Enumeration::ReductionClosure(problem(p, ctx)?));
    }
    let list = spec.split(',').map(|p| problem(p.trim(), ctx)).collect::<CliResult<Vec<_>>>()?;
    Ok(Enumeration::Explicit(list))
}

fn gap_function(spec: &str) -> CliResult<Affine> {
    match spec {
        "succ" => Ok(Affine::succ()),
        "double" => Ok(Affine::double()),
        _ => {
            let bad = || CliError::Usage(format!("--r {spec:?}: expected succ, double or affine:a:b"));
            let rest = spec.strip_prefix("affine:").ok_or_else(bad)?;
            let (a, b) = rest.split_once(':').ok_or_else(bad)?;
            Ok(Affine {
                a: a.parse().map_err(|_| bad())?,
                b: b.parse().map_err(|_| bad())?,
            })
        }
    }
}

fn verdict_table(report: &mut Report, d: &TotalDecider, q: &Query, bound: usize) -> CliResult<()> {
    if let Some(x) = &q.input {
        report.line(d.classify(x)?.token());
        return Ok(());
    }
    let rows = Word::all_up_to(bound)
        .map(|x| Ok(vec![x.to_string(), d.classify(&x)?.token().to_string()]))
        .collect::<CliResult<Vec<_>>>()?;
    report.field("problem", d.name()).table(&["x", "verdict"], rows);
    Ok(())
}

fn words(ws: &[Word]) -> String {
    if ws.is_empty() {
        return "-".into();
    }
    ws.iter().map(Word::to_string).collect::<Vec<_>>().join(" ")
}

fn stats(report: &mut Report, s: &BranchStats) -> CliResult<()> {
    report
        .field("accepting", s.accepting)
        .field("rejecting", s.rejecting)
        .field("total", s.total)
        .field("p_acc", exact_rational(&s.p_acc)?)
        .field("p_rej", exact_rational(&s.p_rej)?);
    Ok(())
}

fn circuit_report(report: &mut Report, c: &Circuit, input: Option<&Word>) -> CliResult<()> {
    let zeros = Word::zeros(c.total_qubits());
    let input = input.unwrap_or(&zeros);
    report
        .field("circuit", if c.is_trivial() { "trivial".to_string() } else { c.to_string() })
        .field("gates", c.gates().len())
        .field("qubits", c.total_qubits())
        .field("witness_qubits", c.witness_qubits())
        .field("input", input)
        .field("p_acc", exact(&p_acc::<Rational>(c, input)?)?);
    Ok(())
}

fn diag_report(report: &mut Report, res: &DiagResult, target: &TotalDecider, bound: usize) -> CliResult<()> {
    let rows = limits(res, bound as u64)?
        .into_iter()
        .map(|n| {
            let row = res.r.row(n)?;
            Ok(vec![n.to_string(), row.q.to_string(), row.q_prime.to_string(), row.r.to_string(), row.r_cost.to_string()])
        })
        .collect::<CliResult<Vec<_>>>()?;
    report.field("r", res.r.r.describe()).table(&["n", "q", "q'", "r", "cost"], rows);
    let wrows = res
        .witnesses
        .iter()
        .map(|w| {
            vec![
                w.side.to_string(),
                w.machine.to_string(),
                w.machine_name.clone(),
                w.interval.to_string(),
                w.n.to_string(),
                w.r_n.to_string(),
                w.z.to_string(),
                w.b.token().to_string(),
                w.presented.token().to_string(),
                w.verified.to_string(),
            ]
        })
        .collect();
    report.table(&["side", "i", "machine", "interval", "n", "r(n)", "z", "B(z)", "M(z)", "verified"], wrows);
    let k = karp_check(&res.reduction, &res.b, target, bound)?;
    report
        .field("reduction_target", target.name())
        .field("karp_checked", k.checked)
        .field("karp_violations", k.violations.len());
    Ok(())
}

fn dispatch(cli: &Cli) -> CliResult<(Report, Format)> {
    let ctx = settings(cli)?;
    let bound = ctx.cfg.bound;
    let mut report = Report::default();
    match &cli.command {
        Command::Run { machine, inputs } => {
            let m = decode_godel(&read_bits(machine)?);
            match run(&m, inputs, ctx.cfg.fuel) {
                RunResult::Halted { output, steps } => {
                    report.field("outcome", "halted").field("output", output).field("steps", steps);
                }
                RunResult::FuelExhausted { steps } => {
                    report.field("outcome", "fuel-exhausted").field("steps", steps);
                }
            }
        }
        Command::Branches { machine, inputs, clocked } => {
            let m = PtmDesc::decode(&read_bits(machine)?);
            let s = if *clocked {
                enumerate_branches_clocked(&m, inputs, ctx.cfg.fuel)?
            } else {
                enumerate_branches(&m, inputs, ctx.cfg.fuel)?
            };
            stats(&mut report, &s)?;
        }
        Command::Simulate { circuit, witness_header, input } => {
            let c = parse_circuit(&read_bits(circuit)?, *witness_header);
            circuit_report(&mut report, &c, input.as_ref())?;
        }
        Command::Decide { class, gen, circuit, input, runtime } => {
            let header = !matches!(class, QuantumClass::Bqp);
            let v = match (gen, circuit) {
                (_, Some(file)) => {
                    let c = parse_circuit(&read_bits(file)?, header);
                    match class {
                        QuantumClass::Bqp => circuit_bqp(&c, &ctx.th)?,
                        QuantumClass::Qcma => circuit_qcma(&c, &ctx.th)?,
                        QuantumClass::Qma => circuit_qma(&c, &ctx.th)?,
                    }
                }
                (Some(file), None) => {
                    let g = decode_godel(&read_bits(file)?);
                    let rt = runtime.clone().unwrap_or_else(|| Polynomial::constant(ctx.cfg.fuel));
                    match class {
                        QuantumClass::Bqp => classify_bqp(&g, &rt, input, &ctx.th)?,
                        QuantumClass::Qcma => classify_qcma(&g, &rt, input, &ctx.th)?,
                        QuantumClass::Qma => classify_qma(&g, &rt, input, &ctx.th)?,
                    }
                }
                (None, None) => return Err(CliError::Usage("decide needs --gen or --circuit".into())),
            };
            report.line(v.token());
        }
        Command::Classify { problem: p, query, against } => {
            let d = problem(p, &ctx)?;
            match against {
                Some(other) => {
                    let e = problem(other, &ctx)?;
                    let diff = differences(&d, &e, bound)?;
                    report
                        .field("a", d.name())
                        .field("b", e.name())
                        .field("bound", bound)
                        .field("conflict", words(&diff.conflict))
                        .field("a_minus_b", words(&diff.a_minus_b))
                        .field("b_minus_a", words(&diff.b_minus_a))
                        .field("symmetric", words(&diff.symmetric));
                }
                None => verdict_table(&mut report, &d, query, bound)?,
            }
        }
        Command::Enumerate { family, index, query } => {
            let d = Enumeration::Family(*family, ctx.th.clone()).get(*index)?;
            verdict_table(&mut report, &d, query, bound)?;
        }
        Command::Gaplang { r, member, limits } => {
            let f = gap_function(r)?;
            match (member, limits) {
                (Some(x), _) => {
                    report.line(gap_member(&f, x)?.to_string());
                }
                (None, Some(max)) => {
                    let l = interval_limits(&f, *max)?;
                    report.line(l.iter().map(u64::to_string).collect::<Vec<_>>().join(" "));
                }
                (None, None) => return Err(CliError::Usage("gaplang needs --member or --limits".into())),
            }
        }
        Command::Diagonalize { a, a_prime, c, c_prime, c_mode, c_prime_mode, verify } => {
            let (a, a2) = (problem(a, &ctx)?, problem(a_prime, &ctx)?);
            let mut inst = DiagInstance::new(
                Side {
                    problem: a.clone(),
                    presentation: presentation(c, &ctx)?,
                    mode: (*c_mode).into(),
                },
                Side {
                    problem: a2.clone(),
                    presentation: presentation(c_prime, &ctx)?,
                    mode: (*c_prime_mode).into(),
                },
            );
            inst.search_cap = ctx.cfg.search_cap;
            inst.verify_machines = *verify;
            let res = diagonalize(&inst)?;
            diag_report(&mut report, &res, &marked_union(&a, &a2), bound)?;
        }
        Command::Ladner { a, c, c_mode, harder_base, harder_mode, harder_series } => {
            let a = problem(a, &ctx)?;
            let base = Box::new(presentation(harder_base, &ctx)?);
            let mode = match (harder_mode, harder_series) {
                (HarderArg::M, SeriesArg::Identity) => {
                    HarderMode::M(ReductionSeries::Explicit(vec![ReductionFn::identity()]))
                }
                (HarderArg::M, SeriesArg::Indexed) => HarderMode::M(ReductionSeries::Indexed),
                (HarderArg::T, SeriesArg::Identity) => {
                    let echo = karp_to_cook(&ReductionFn::identity()).expect("identity is machine-backed");
                    HarderMode::T(OracleSeries::Explicit(vec![echo]))
                }
                (HarderArg::T, SeriesArg::Indexed) => HarderMode::T(OracleSeries::Indexed),
            };
            let harder = Enumeration::HarderSet { a: a.clone(), base, mode };
            let res = ladner(&a, presentation(c, &ctx)?, (*c_mode).into(), harder, ctx.cfg.search_cap)?;
            diag_report(&mut report, &res, &a, bound)?;
            let start = limits(&res, 0)?[1] as usize;
            let mut hole = None;
            for x in Word::all_of_len(start).take(1 << 12) {
                if a.classify(&x)? != res.b.classify(&x)? {
                    hole = Some(x);
                    break;
                }
            }
            report.field("first_odd_interval", start);
            report.field("hole", hole.map_or("-".to_string(), |w| w.to_string()));
        }
    }
    Ok((report, ctx.cfg.format))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match dispatch(&cli) {
        Ok((report, format)) => {
            let mut out = io::stdout().lock();
            let _ = out.write_all(report.render(format).as_bytes());
            ExitCode::SUCCESS
        }
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(CliError::Io(path, e)) => {
            eprintln!("error: Io: {path}: {e}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
