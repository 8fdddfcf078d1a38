//! The `fillcheck` command line. [`run`] does all the work and returns what
//! would be printed, so the binary is a thin shell around it.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::braid::alexander_of_closure;
use crate::catalog::{ln_delta_closed_form, KnotFamily, LinkFamily, Subject};
use crate::floer::{d_knot_surgery_from_alexander, d_link_surgery, HFunction};
use crate::obstruct::{tags, verdict, verdict_knot_at};
use crate::reproduce::{run_scope, Grid, Scope};
use crate::ring::ExactRational;
use crate::slopes::{sfc_known, slope_invariants, SfcValue};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DISAGREE: i32 = 2;
pub const EXIT_REPRODUCE_FAILED: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "fillcheck",
    version,
    about = "Exact surgery invariants and fillability obstructions"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Alexander polynomial: closed form against the Burau computation.
    Alex { subject: String },
    /// d-invariants of integral surgery, one slope per component.
    Dinv {
        subject: String,
        #[arg(required = true, num_args = 1..=2, allow_negative_numbers = true)]
        slopes: Vec<String>,
    },
    /// Fillability verdict.
    Check {
        subject: String,
        /// Knot slope to classify, integer or `a/b`.
        #[arg(long, allow_negative_numbers = true)]
        slope: Option<String>,
        #[arg(long)]
        p1: Option<u64>,
        #[arg(long)]
        p2: Option<u64>,
    },
    /// Continued fraction, m(K) and the Stein fillable coefficient.
    Slopes { subject: String },
    /// Recompute every catalog claim.
    Reproduce {
        #[arg(long, default_value = "all")]
        scope: String,
        /// e.g. `n=2..8,m=1..5,l=1..6`
        #[arg(long)]
        grid: Option<String>,
        /// Worker threads; defaults to the number of cores.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

struct Output {
    code: i32,
    text: String,
    json: serde_json::Value,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Alex { subject } => cmd_alex(subject),
        Command::Dinv { subject, slopes } => cmd_dinv(subject, slopes),
        Command::Check { subject, slope, p1, p2 } => cmd_check(subject, slope.as_deref(), *p1, *p2),
        Command::Slopes { subject } => cmd_slopes(subject),
        Command::Reproduce { scope, grid, jobs } => cmd_reproduce(scope, grid.as_deref(), *jobs),
    };
    let output = match result {
        Ok(output) => output,
        Err(e) => return Outcome::usage(e),
    };
    let mut payload = match cli.format {
        Format::Text => output.text,
        Format::Json => serde_json::to_string_pretty(&output.json).expect("json renders"),
    };
    if !payload.ends_with('\n') {
        payload.push('\n');
    }
    match &cli.out {
        Some(path) => match std::fs::write(path, &payload) {
            Ok(()) => Outcome {
                code: output.code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => Outcome::usage(format!("cannot write {}: {e}", path.display())),
        },
        None => Outcome {
            code: output.code,
            stdout: payload,
            stderr: String::new(),
        },
    }
}

fn agree(flag: bool) -> &'static str {
    if flag {
        "AGREE"
    } else {
        "DISAGREE"
    }
}

fn cmd_alex(subject: &str) -> Result<Output, Error> {
    match subject.parse::<Subject>()? {
        Subject::Knot(knot) => {
            let closed = knot.alexander_closed_form();
            let word = knot.braid_word();
            let burau = alexander_of_closure(&word)?;
            let same = burau == closed;
            let text = format!(
                "closed form: {closed}\nbraid: {word}\nburau: {burau}\n{}\n",
                agree(same)
            );
            Ok(Output {
                code: if same { EXIT_OK } else { EXIT_DISAGREE },
                text,
                json: json!({
                    "subject": knot.to_string(),
                    "closed_form": closed.to_string(),
                    "braid": word.to_string(),
                    "burau": burau.to_string(),
                    "agree": same,
                }),
            })
        }
        Subject::Link(link) => {
            let data = link.alexander()?;
            let mut text = format!(
                "delta: {}\ncomponent 1: {}\ncomponent 2: {}\n",
                data.delta, data.component1, data.component2
            );
            let mut json = json!({
                "subject": link.to_string(),
                "delta": data.delta.to_string(),
                "component1": data.component1.to_string(),
                "component2": data.component2.to_string(),
            });
            let mut code = EXIT_OK;
            if let LinkFamily::Ln(n) = link {
                let same = ln_delta_closed_form(n) == data.delta;
                let _ = writeln!(text, "recursion vs closed form: {}", agree(same));
                json["agree"] = json!(same);
                if !same {
                    code = EXIT_DISAGREE;
                }
            }
            Ok(Output { code, text, json })
        }
    }
}

fn parse_integral_slope(text: &str) -> Result<u64, Error> {
    let slope: ExactRational = text.parse()?;
    let pointer = || format!("use `fillcheck check <subject> --slope {text}` for non-integral slopes");
    let value = slope
        .to_integer()
        .ok_or_else(|| Error::Usage(format!("slope {slope} is not an integer; {}", pointer())))?;
    u64::try_from(value)
        .ok()
        .filter(|&p| p >= 1)
        .ok_or_else(|| Error::Usage(format!("slope {slope} must be at least 1")))
}

fn cmd_dinv(subject: &str, slopes: &[String]) -> Result<Output, Error> {
    let subject: Subject = subject.parse()?;
    let slopes = slopes
        .iter()
        .map(|s| parse_integral_slope(s))
        .collect::<Result<Vec<_>, _>>()?;
    match (subject, slopes.as_slice()) {
        (Subject::Knot(knot), &[p]) => {
            let table = d_knot_surgery_from_alexander(&knot.alexander_closed_form(), p)?;
            let mut text = format!("d-invariants of {p}-surgery on {knot}\n");
            for (i, d) in table.entries().iter().enumerate() {
                let mark = if i as u64 == table.argmax() { "  <- max" } else { "" };
                let _ = writeln!(text, "i = {i}: {d}{mark}");
            }
            let _ = writeln!(text, "max d = {}", table.max());
            let mut json = table.to_json();
            json["subject"] = json!(knot.to_string());
            json["max"] = json!(table.max());
            Ok(Output {
                code: EXIT_OK,
                text,
                json,
            })
        }
        (Subject::Link(link), &[p1, p2]) => {
            let table = d_link_surgery(&HFunction::new(&link.alexander()?)?, p1, p2)?;
            let argmax = table.argmax();
            let mut text = format!("d-invariants of ({p1},{p2})-surgery on {link}\n");
            for ((i1, i2), d) in table.iter() {
                let mark = if (i1, i2) == argmax { "  <- max" } else { "" };
                let _ = writeln!(text, "({i1},{i2}): {d}{mark}");
            }
            let _ = writeln!(text, "max d = {}", table.max());
            let mut json = table.to_json();
            json["subject"] = json!(link.to_string());
            json["max"] = json!(table.max());
            Ok(Output {
                code: EXIT_OK,
                text,
                json,
            })
        }
        (Subject::Knot(_), _) => Err(Error::Usage("a knot takes exactly one slope".into())),
        (Subject::Link(_), _) => Err(Error::Usage("a link takes two slopes, one per component".into())),
    }
}

fn cmd_check(subject: &str, slope: Option<&str>, p1: Option<u64>, p2: Option<u64>) -> Result<Output, Error> {
    let subject: Subject = subject.parse()?;
    let report = match (&subject, slope, p1, p2) {
        (Subject::Knot(knot), Some(slope), None, None) => verdict_knot_at(knot, &slope.parse()?)?,
        (Subject::Knot(_), _, None, None) => verdict(&subject, None)?,
        (Subject::Knot(_), _, _, _) => {
            return Err(Error::Usage("--p1/--p2 apply to links; use --slope for knots".into()))
        }
        (Subject::Link(_), None, Some(p1), Some(p2)) => verdict(&subject, Some((p1, p2)))?,
        (Subject::Link(_), Some(_), _, _) => {
            return Err(Error::Usage("--slope applies to knots; use --p1/--p2 for links".into()))
        }
        (Subject::Link(_), None, _, _) => return Err(Error::Usage("links need both --p1 and --p2".into())),
    };
    Ok(Output {
        code: EXIT_OK,
        text: report.to_text(),
        json: report.to_json(),
    })
}

fn sfc_tag(knot: &KnotFamily) -> &'static str {
    match knot {
        KnotFamily::NegTorus { .. } => tags::NEG_TORUS_SFC,
        KnotFamily::Unknot => tags::UNKNOT_SFC,
        KnotFamily::Knm { n, .. } | KnotFamily::Kpnm { n, .. } if *n >= 3 => tags::TB_STEIN,
        _ => tags::TORUS_SFC,
    }
}

fn cmd_slopes(subject: &str) -> Result<Output, Error> {
    let knot = match subject.parse::<Subject>()? {
        Subject::Knot(knot) => knot,
        Subject::Link(link) => return Err(Error::Usage(format!("`slopes` takes a knot, got {link}"))),
    };
    let mut text = String::new();
    let mut json = json!({ "subject": knot.to_string() });
    if let KnotFamily::Torus { p, q } = knot {
        let inv = slope_invariants(p as u64, q as u64)?;
        let digits: Vec<String> = inv.cf.iter().map(u64::to_string).collect();
        let _ = writeln!(text, "q* = {} (q q* = 1 mod p)", inv.q_star);
        let _ = writeln!(text, "p* = {} (p p* = 1 mod q)", inv.p_star);
        let _ = writeln!(text, "p/q = [{}]", digits.join(", "));
        let _ = writeln!(text, "m = {}", inv.m_value);
        json["invariants"] = serde_json::to_value(&inv).expect("serializes");
    } else {
        let _ = writeln!(text, "m is only computed for positive torus knots");
    }
    let sfc = sfc_known(&knot);
    let tag = sfc_tag(&knot);
    match &sfc {
        SfcValue::Unknown => {
            let _ = writeln!(text, "{sfc}");
        }
        _ => {
            let _ = writeln!(text, "{sfc} [{tag}]");
        }
    }
    json["sfc"] = serde_json::to_value(&sfc).expect("serializes");
    json["citation"] = json!(tag);
    Ok(Output {
        code: EXIT_OK,
        text,
        json,
    })
}

fn cmd_reproduce(scope: &str, grid: Option<&str>, jobs: Option<usize>) -> Result<Output, Error> {
    let scope: Scope = scope.parse().map_err(Error::Usage)?;
    let grid: Grid = match grid {
        Some(g) => g.parse().map_err(Error::Usage)?,
        None => Grid::default(),
    };
    let outcomes = match jobs {
        Some(0) => return Err(Error::Usage("--jobs must be positive".into())),
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::Usage(e.to_string()))?
            .install(|| run_scope(scope, &grid)),
        None => run_scope(scope, &grid),
    };
    let all_passed = outcomes.iter().all(|o| o.passed);
    let mut text = String::new();
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(text, "{status} {:<18} {} checks", o.scope.name(), o.checked);
        for line in &o.echo {
            let _ = writeln!(text, "    {line}");
        }
        for line in &o.failures {
            let _ = writeln!(text, "    failed: {line}");
        }
    }
    if outcomes.len() > 1 {
        let passed = outcomes.iter().filter(|o| o.passed).count();
        let _ = writeln!(text, "{passed}/{} scopes passed", outcomes.len());
    }
    Ok(Output {
        code: if all_passed { EXIT_OK } else { EXIT_REPRODUCE_FAILED },
        text,
        json: json!({ "passed": all_passed, "scopes": outcomes }),
    })
}
