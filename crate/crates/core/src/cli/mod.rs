//! Command-line front end.
//!
//! Every command prints one JSON report on standard output (or a plain text
//! rendering with `--pretty`). Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | conjugate / verified / success |
//! | 1 | not conjugate / rejected |
//! | 2 | inconclusive |
//! | 3 | unreadable file, parse error, unsupported backend |
//! | 4 | missing constant |
//! | 5 | input is not a conjugator |
//! | 6 | parabolic oracle failure |

mod bench;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::gcp::{
    compress_parabolic_components, search, shorten_to_fixpoint, solve, theorem4_bound,
    verify_conjugator, Bounds, ConjugacyInstance, ConstantsProfile, Decision, GcpError,
    InstanceFile, Mode, SearchConfig, SyllableCase, Verdict,
};
use crate::groups::{Group, GroupError, Parallelism, DEFAULT_MAX_ELEMENTS};
use crate::oracles::{calibrate_chi_with, OracleError, ParabolicOracles};
use crate::relative::{relative_length, RelativeWord};

pub use report::render_text;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub mod exit {
    pub const CONJUGATE: i32 = 0;
    pub const NOT_CONJUGATE: i32 = 1;
    pub const INCONCLUSIVE: i32 = 2;
    pub const INPUT: i32 = 3;
    pub const MISSING_CONSTANT: i32 = 4;
    pub const NOT_A_CONJUGATOR: i32 = 5;
    pub const ORACLE_FAILURE: i32 = 6;
}

#[derive(Debug, Parser)]
#[command(name = "relconj", version, about = "Conjugacy of element lists in free products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Heuristic,
    Certified,
}

#[derive(Debug, Args)]
struct Output {
    /// Plain text instead of JSON.
    #[arg(long)]
    pretty: bool,
    /// Include wall-clock times (reports are then no longer reproducible).
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long, value_enum, default_value = "heuristic")]
    mode: ModeArg,
    #[arg(long, default_value_t = 8)]
    max_radius: usize,
    #[arg(long, env = "RELCONJ_MAX_ELEMENTS", default_value_t = DEFAULT_MAX_ELEMENTS)]
    max_elements: usize,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Accepted for uniformity; the search itself is deterministic.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            max_elements: self.max_elements,
            max_radius: self.max_radius,
            parallelism: Parallelism::with_workers(self.workers),
            mode: match self.mode {
                ModeArg::Heuristic => Mode::Heuristic,
                ModeArg::Certified => Mode::Certified,
            },
        }
    }
}

#[derive(Debug, Args)]
struct InstanceArgs {
    /// Group specification (JSON).
    #[arg(long)]
    group: PathBuf,
    /// Instance file `{"a":[...],"b":[...]}`.
    #[arg(long)]
    instance: PathBuf,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Search for a conjugator.
    Solve {
        #[command(flatten)]
        input: InstanceArgs,
        /// Constants profile; without it the search runs to `--max-radius`.
        #[arg(long)]
        constants: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Check a candidate conjugator.
    Verify {
        #[command(flatten)]
        input: InstanceArgs,
        conjugator: String,
        #[command(flatten)]
        output: Output,
    },
    /// Shorten a conjugator by removing repeated trace tuples.
    Shorten {
        #[command(flatten)]
        input: InstanceArgs,
        conjugator: String,
        #[command(flatten)]
        output: Output,
    },
    /// Replace parabolic syllables by oracle witnesses.
    Compress {
        #[command(flatten)]
        input: InstanceArgs,
        conjugator: String,
        #[command(flatten)]
        output: Output,
    },
    /// Evaluate the bounds for given `mu` and alphabet size.
    Bound {
        #[arg(long)]
        mu: u64,
        #[arg(long)]
        alphabet_size: u64,
        #[arg(long)]
        constants: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Sample a lower estimate for `chi(k)`.
    Calibrate {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Run a suite of instances.
    Bench {
        /// Default group for entries without their own `group`.
        #[arg(long)]
        group: Option<PathBuf>,
        #[arg(long)]
        suite: PathBuf,
        #[arg(long)]
        constants: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        output: Output,
    },
}

/// A failed command: message and exit code.
#[derive(Debug)]
pub(crate) struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: exit::INPUT,
            message: message.into(),
        }
    }
}

impl From<GcpError> for Failure {
    fn from(e: GcpError) -> Self {
        let code = match &e {
            GcpError::MissingConstant(_) => exit::MISSING_CONSTANT,
            GcpError::NotAConjugator => exit::NOT_A_CONJUGATOR,
            GcpError::OracleFailure { .. } | GcpError::WitnessTooLong { .. } => exit::ORACLE_FAILURE,
            _ => exit::INPUT,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        Self::input(e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Self::input(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

pub(crate) fn load_group(path: &Path) -> Result<Group, Failure> {
    Group::from_json(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

pub(crate) fn load_instance_file(path: &Path) -> Result<InstanceFile, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

pub(crate) fn load_profile(path: &Path) -> Result<ConstantsProfile, Failure> {
    ConstantsProfile::from_json(&read(path)?)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

/// Outcome of building an instance: inconsistent duplicates are a definite
/// negative rather than an error.
pub(crate) enum Loaded {
    Instance(ConjugacyInstance),
    Inconsistent { first: usize, second: usize },
}

pub(crate) fn load_instance(group: &Group, file: &InstanceFile) -> Result<Loaded, Failure> {
    match ConjugacyInstance::from_file(group, file) {
        Ok(i) => Ok(Loaded::Instance(i)),
        Err(GcpError::InconsistentDuplicates { first, second }) => {
            Ok(Loaded::Inconsistent { first, second })
        }
        Err(e) => Err(e.into()),
    }
}

fn parse_conjugator(group: &Group, text: &str) -> Result<crate::groups::Elem, Failure> {
    group
        .parse_elem(text)
        .map_err(|e| Failure::input(format!("conjugator: {e}")))
}

pub(crate) fn bounds_json(mu: u64, size: u64, bounds: &Bounds) -> Value {
    json!({
        "mu": mu,
        "alphabet_size": size,
        "relative": bounds.relative.to_string(),
        "g": bounds.g,
        "radius": bounds.radius.to_string(),
    })
}

pub(crate) fn stats_json(d: &Decision, timing: bool) -> Value {
    let s = &d.stats;
    let mut v = json!({
        "elements_enumerated": s.elements_enumerated,
        "candidates_checked": s.candidates_checked,
        "radius_reached": s.radius_reached,
        "truncated": s.truncated,
    });
    if timing {
        v["wall_time_ms"] = json!(s.wall_time.as_secs_f64() * 1e3);
    }
    v
}

pub(crate) fn decision_json(group: &Group, d: &Decision) -> Value {
    match &d.verdict {
        Verdict::Conjugate { witness } => json!({
            "verdict": "conjugate",
            "witness": group.format(witness),
            "witness_length": group.x_length(witness),
            "witness_relative_length": relative_length(group, witness).ok(),
        }),
        Verdict::NotConjugate { radius } => json!({
            "verdict": "not_conjugate",
            "radius": radius.to_string(),
        }),
        Verdict::Inconclusive { radius } => json!({
            "verdict": "inconclusive",
            "radius": radius.to_string(),
        }),
    }
}

pub(crate) fn verdict_code(v: &Verdict) -> i32 {
    match v {
        Verdict::Conjugate { .. } => exit::CONJUGATE,
        Verdict::NotConjugate { .. } => exit::NOT_CONJUGATE,
        Verdict::Inconclusive { .. } => exit::INCONCLUSIVE,
    }
}

/// Bounds for the instance when a profile is given; `Ok(None)` when the
/// bound does not fit in memory.
pub(crate) fn instance_bounds(
    inst: &ConjugacyInstance,
    profile: Option<&ConstantsProfile>,
) -> Result<Value, Failure> {
    let Some(profile) = profile else {
        return Ok(Value::Null);
    };
    let mu = inst.mu() as u64;
    let size = inst.group().alphabet().len() as u64;
    match theorem4_bound(mu, size, profile) {
        Ok(b) => Ok(bounds_json(mu, size, &b)),
        Err(GcpError::BoundOverflow) => Ok(json!({"mu": mu, "alphabet_size": size, "overflow": true})),
        Err(e) => Err(e.into()),
    }
}

/// Runs the solver on a loaded instance.
pub(crate) fn run_solve(
    inst: &ConjugacyInstance,
    profile: Option<&ConstantsProfile>,
    config: &SearchConfig,
) -> Result<Decision, Failure> {
    Ok(match profile {
        Some(p) => solve(inst, p, config)?,
        None => search(inst, config)?,
    })
}

struct Report {
    command: &'static str,
    arguments: Vec<String>,
    result: Value,
    bounds: Value,
    stats: Value,
}

impl Report {
    fn new(command: &'static str, arguments: &[String]) -> Self {
        Self {
            command,
            arguments: arguments.to_vec(),
            result: Value::Null,
            bounds: Value::Null,
            stats: Value::Null,
        }
    }

    fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "arguments": self.arguments,
            "result": self.result,
            "bounds": self.bounds,
            "stats": self.stats,
            "version": VERSION,
        })
    }
}

fn emit(out: &mut dyn Write, report: &Report, pretty: bool) {
    let v = report.to_json();
    let text = if pretty {
        render_text(&v)
    } else {
        serde_json::to_string(&v).expect("json") + "\n"
    };
    // a closed stdout is not worth a panic
    let _ = out.write_all(text.as_bytes());
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let echo: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                exit::INPUT
            } else {
                let _ = out.write_all(text.as_bytes());
                0
            };
        }
    };
    match dispatch(cli.command, &echo, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, echo: &[String], out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Solve {
            input,
            constants,
            search,
            output,
        } => {
            let group = load_group(&input.group)?;
            let file = load_instance_file(&input.instance)?;
            let profile = constants.as_deref().map(load_profile).transpose()?;
            let mut report = Report::new("solve", echo);
            let code = match load_instance(&group, &file)? {
                Loaded::Inconsistent { first, second } => {
                    report.result = json!({
                        "verdict": "not_conjugate",
                        "reason": format!("a[{first}] = a[{second}] with different b entries"),
                    });
                    exit::NOT_CONJUGATE
                }
                Loaded::Instance(inst) => {
                    report.bounds = instance_bounds(&inst, profile.as_ref())?;
                    let d = run_solve(&inst, profile.as_ref(), &search.config())?;
                    report.result = decision_json(&group, &d);
                    report.stats = stats_json(&d, output.timing);
                    verdict_code(&d.verdict)
                }
            };
            emit(out, &report, output.pretty);
            Ok(code)
        }
        Command::Verify {
            input,
            conjugator,
            output,
        } => {
            let group = load_group(&input.group)?;
            let file = load_instance_file(&input.instance)?;
            let x = parse_conjugator(&group, &conjugator)?;
            let ok = match load_instance(&group, &file)? {
                Loaded::Inconsistent { .. } => false,
                Loaded::Instance(inst) => verify_conjugator(&inst, &x)?,
            };
            let mut report = Report::new("verify", echo);
            report.result = json!({
                "conjugator": group.format(&x),
                "verified": ok,
            });
            emit(out, &report, output.pretty);
            Ok(if ok { exit::CONJUGATE } else { exit::NOT_CONJUGATE })
        }
        Command::Shorten {
            input,
            conjugator,
            output,
        } => {
            let (group, inst, word) = load_conjugator_input(&input, &conjugator)?;
            let fix = shorten_to_fixpoint(&word, &inst)?;
            let mut report = Report::new("shorten", echo);
            let steps: Vec<Value> = fix
                .steps
                .iter()
                .map(|(s, t, len)| json!({"s": s, "t": t, "length_after": len}))
                .collect();
            let result = fix.word.evaluate(&group);
            report.result = json!({
                "input": group.format(&word.evaluate(&group)),
                "output": group.format(&result),
                "syllables": fix.word.display(&group),
                "relative_length_before": word.len(),
                "relative_length_after": fix.word.len(),
                "steps": steps,
            });
            emit(out, &report, output.pretty);
            Ok(exit::CONJUGATE)
        }
        Command::Compress {
            input,
            conjugator,
            output,
        } => {
            let (group, inst, word) = load_conjugator_input(&input, &conjugator)?;
            let oracles = ParabolicOracles::for_group(&group);
            let c = compress_parabolic_components(&word, &inst, &oracles)?;
            let rows: Vec<Value> = c
                .reports
                .iter()
                .map(|r| {
                    let factor = &group.factors()[r.factor];
                    json!({
                        "position": r.position,
                        "factor": crate::relative::factor_name(r.factor),
                        "case": match r.case {
                            SyllableCase::Unlinked => "unlinked",
                            SyllableCase::Linked => "linked",
                        },
                        "original": factor.format(&r.original),
                        "replacement": r.replacement.as_ref().map(|e| factor.format(e)),
                        "connector_mu": r.connector_mu,
                        "theta_bound": r.theta_bound,
                    })
                })
                .collect();
            let mut report = Report::new("compress", echo);
            report.result = json!({
                "input": group.format(&word.evaluate(&group)),
                "output": group.format(&c.word.evaluate(&group)),
                "syllables": c.word.display(&group),
                "relative_length_before": word.len(),
                "relative_length_after": c.word.len(),
                "components": rows,
            });
            emit(out, &report, output.pretty);
            Ok(exit::CONJUGATE)
        }
        Command::Bound {
            mu,
            alphabet_size,
            constants,
            output,
        } => {
            let profile = load_profile(&constants)?;
            let b = theorem4_bound(mu, alphabet_size, &profile)?;
            let mut report = Report::new("bound", echo);
            report.bounds = bounds_json(mu, alphabet_size, &b);
            report.result = json!({"relative": b.relative.to_string(), "radius": b.radius.to_string()});
            emit(out, &report, output.pretty);
            Ok(0)
        }
        Command::Calibrate {
            group,
            k,
            samples,
            seed,
            workers,
            output,
        } => {
            let group = load_group(&group)?;
            let r = calibrate_chi_with(&group, k, samples, seed, &Parallelism::with_workers(workers))?;
            let mut report = Report::new("calibrate", echo);
            report.result = serde_json::to_value(&r).expect("json");
            emit(out, &report, output.pretty);
            Ok(0)
        }
        Command::Bench {
            group,
            suite,
            constants,
            search,
            output,
        } => {
            let profile = constants.as_deref().map(load_profile).transpose()?;
            let (result, code) = bench::run(
                group.as_deref(),
                &suite,
                profile.as_ref(),
                &search.config(),
                output.timing,
            )?;
            let mut report = Report::new("bench", echo);
            report.result = result;
            emit(out, &report, output.pretty);
            Ok(code)
        }
    }
}

fn load_conjugator_input(
    input: &InstanceArgs,
    conjugator: &str,
) -> Result<(Group, ConjugacyInstance, RelativeWord), Failure> {
    let group = load_group(&input.group)?;
    let file = load_instance_file(&input.instance)?;
    let x = parse_conjugator(&group, conjugator)?;
    let inst = match load_instance(&group, &file)? {
        Loaded::Instance(i) => i,
        // no element conjugates an inconsistent instance
        Loaded::Inconsistent { .. } => return Err(GcpError::NotAConjugator.into()),
    };
    let word = RelativeWord::of(&group, &x).map_err(|e| Failure::input(e.to_string()))?;
    Ok((group, inst, word))
}
