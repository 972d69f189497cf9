//! The `ptorus` command line.

pub mod syntax;

use std::ffi::OsString;
use std::fmt::Display;

use clap::{Parser, Subcommand};
use ptorus::bgroup::{is_in_kernel, parse_bword, FiberConfig};
use ptorus::dcat::{form_kernel, hom_total, in_restriction_lattice, MultiDegree, ObjTag};
use ptorus::mcg::MappingClassGroup;
use ptorus::report::{Entry, Report};
use ptorus::suites::{self, SuiteOptions};
use ptorus::surface::{counting_word, intersection_number, CurveOnSurface, SurfaceError};
use serde_json::json;

use syntax::{build_curve, parse_curve, parse_word};

#[derive(Parser, Debug)]
#[command(name = "ptorus", version, about = "Curves and mapping classes on the n-punctured torus")]
pub struct Cli {
    /// Number of punctures.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Component counts of the fibers, comma separated.
    #[arg(long, global = true)]
    pub fibers: Option<String>,
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Cap on tightening steps per curve.
    #[arg(long, global = true, default_value_t = 10_000)]
    pub max_iterations: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Geometric intersection number of two curves.
    Intersect { alpha: String, beta: String },
    /// Image of a curve under a word: its crossing word and intersections
    /// with the standard curves.
    Act { word: String, curve: String },
    /// Whether two words give the same mapping class.
    Equal { left: String, right: String },
    /// Tabulated total dimension of Hom(E, F).
    Hom { e: String, f: String },
    /// Kernel of the fiber's intersection form, or membership of a
    /// multidegree such as `1,-2,1` in its row lattice.
    Lattice { vector: Option<String> },
    /// Whether a word in fiber twists acts trivially on every torus.
    Kernel { word: String },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

/// What a run printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: 0 }
    }

    fn usage(msg: impl Display) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {msg}\n"), code: 2 }
    }
}

pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            }
        }
    }
}

enum Failure {
    Usage(String),
    Compute(String),
}

fn usage(e: impl Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn compute(e: impl Display) -> Failure {
    Failure::Compute(e.to_string())
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Intersect { .. } => "intersect",
        Command::Act { .. } => "act",
        Command::Equal { .. } => "equal",
        Command::Hom { .. } => "hom",
        Command::Lattice { .. } => "lattice",
        Command::Kernel { .. } => "kernel",
        Command::Verify { .. } => "verify",
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let name = command_name(&cli.command);
    match execute(cli) {
        Ok(out) => out,
        Err(Failure::Usage(msg)) => Outcome::usage(msg),
        Err(Failure::Compute(msg)) => {
            let report = Report::new(name, vec![Entry::failed(name, "a result", &msg, "")]);
            Outcome { stdout: render_report(&report, cli.json), stderr: format!("error: {msg}\n"), code: 1 }
        }
    }
}

fn render_report(report: &Report, json: bool) -> String {
    if json {
        report.to_json() + "\n"
    } else {
        format!("{report}\n")
    }
}

fn need_n(cli: &Cli) -> Result<usize, Failure> {
    match cli.n {
        Some(n) if n >= 2 => Ok(n),
        Some(n) => Err(usage(format!("--n must be at least 2, got {n}"))),
        None => Err(usage("this command needs --n")),
    }
}

fn emit(cli: &Cli, text: String, value: serde_json::Value) -> Outcome {
    if cli.json {
        Outcome::ok(serde_json::to_string_pretty(&value).expect("json values serialize") + "\n")
    } else {
        Outcome::ok(text + "\n")
    }
}

/// `i(x, y)`, with identical polylines meeting zero times.
fn meet(group: &MappingClassGroup, x: &CurveOnSurface, y: &CurveOnSurface) -> Result<u64, Failure> {
    match intersection_number(group.model(), x, y) {
        Err(SurfaceError::EqualCurves) => Ok(0),
        other => other.map_err(compute),
    }
}

fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    let cap = cli.max_iterations;
    match &cli.command {
        Command::Intersect { alpha, beta } => {
            let n = need_n(cli)?;
            let (ea, eb) = (parse_curve(alpha, n).map_err(usage)?, parse_curve(beta, n).map_err(usage)?);
            let group = MappingClassGroup::shared(n).map_err(compute)?;
            let ca = build_curve(&group, &ea, cap).map_err(compute)?;
            let cb = build_curve(&group, &eb, cap).map_err(compute)?;
            let i = meet(&group, &ca, &cb)?;
            Ok(emit(cli, i.to_string(), json!({ "command": "intersect", "n": n, "result": i })))
        }
        Command::Act { word, curve } => {
            let n = need_n(cli)?;
            let w = parse_word(word, n).map_err(usage)?;
            let ex = parse_curve(curve, n).map_err(usage)?;
            let group = MappingClassGroup::shared(n).map_err(compute)?;
            let x = build_curve(&group, &ex, cap).map_err(compute)?;
            let image = group.class(w).and_then(|c| c.act(&x, cap)).map_err(compute)?;
            let m = group.model();
            let traced = counting_word(m, &image).map_err(compute)?;
            let traced = m.alphabet().format(traced.letters());
            let mut refs = vec![("A".to_string(), m.curve_a())];
            for i in 1..=n {
                refs.push((format!("B{i}"), m.curve_b(i).map_err(compute)?));
            }
            for i in 1..=n {
                refs.push((format!("G{i}[-1]"), m.base_arc(i).map_err(compute)?));
            }
            let mut profile = Vec::new();
            for (label, c) in &refs {
                profile.push((label.clone(), meet(&group, &image, c)?));
            }
            let text = format!(
                "word: {traced}\nprofile: {}",
                profile.iter().map(|(l, v)| format!("{l}={v}")).collect::<Vec<_>>().join(" ")
            );
            let entries: Vec<_> = profile.iter().map(|(l, v)| json!({ "curve": l, "intersection": v })).collect();
            Ok(emit(cli, text, json!({ "command": "act", "n": n, "word": traced, "profile": entries })))
        }
        Command::Equal { left, right } => {
            let n = need_n(cli)?;
            let (wl, wr) = (parse_word(left, n).map_err(usage)?, parse_word(right, n).map_err(usage)?);
            let group = MappingClassGroup::shared(n).map_err(compute)?;
            let eq = group
                .class(wl)
                .and_then(|l| group.class(wr).and_then(|r| l.equal(&r)))
                .map_err(compute)?;
            Ok(emit(cli, eq.to_string(), json!({ "command": "equal", "n": n, "result": eq })))
        }
        Command::Hom { e, f } => {
            let n = need_n(cli)?;
            let (te, tf) = (e.parse::<ObjTag>().map_err(usage)?, f.parse::<ObjTag>().map_err(usage)?);
            let total = hom_total(n, te, tf).map_err(compute)?;
            Ok(emit(cli, total.to_string(), json!({ "command": "hom", "n": n, "result": total })))
        }
        Command::Lattice { vector: Some(v) } => {
            let entries: Result<Vec<i64>, _> = v.split(',').map(|s| s.trim().parse::<i64>()).collect();
            let entries = entries.map_err(|_| usage(format!("cannot parse multidegree {v:?}")))?;
            if let Some(n) = cli.n.filter(|&n| n != entries.len()) {
                return Err(usage(format!("multidegree has {} entries, --n is {n}", entries.len())));
            }
            let member = in_restriction_lattice(&MultiDegree(entries.clone()));
            Ok(emit(cli, member.to_string(), json!({ "command": "lattice", "vector": entries, "result": member })))
        }
        Command::Lattice { vector: None } => {
            let n = need_n(cli)?;
            let basis: Vec<Vec<String>> =
                form_kernel(n).iter().map(|v| v.iter().map(ToString::to_string).collect()).collect();
            let text = basis.iter().map(|v| format!("({})", v.join(", "))).collect::<Vec<_>>().join("\n");
            Ok(emit(cli, text, json!({ "command": "lattice", "n": n, "kernel": basis })))
        }
        Command::Kernel { word } => {
            let cfg = match (&cli.fibers, cli.n) {
                (Some(f), _) => f.parse::<FiberConfig>().map_err(usage)?,
                (None, Some(n)) => FiberConfig::new(vec![n]).map_err(usage)?,
                (None, None) => return Err(usage("kernel needs --fibers or --n")),
            };
            let w = parse_bword(word, &cfg).map_err(usage)?;
            let inside = is_in_kernel(&w, &cfg).map_err(compute)?;
            Ok(emit(
                cli,
                inside.to_string(),
                json!({ "command": "kernel", "fibers": cfg.sizes(), "word": w.to_string(), "result": inside }),
            ))
        }
        Command::Verify { suite } => {
            if cli.n.is_some_and(|n| n < 2) {
                return Err(usage("--n must be at least 2"));
            }
            let fibers = cli.fibers.as_deref().map(str::parse::<FiberConfig>).transpose().map_err(usage)?;
            let opts = SuiteOptions { n: cli.n, fibers, max_iterations: cap };
            let report = suites::run(suite, &opts)
                .ok_or_else(|| usage(format!("unknown suite {suite:?}; expected one of {}", suites::SUITES.join(", "))))?;
            let code = if report.all_passed() { 0 } else { 1 };
            Ok(Outcome { stdout: render_report(&report, cli.json), stderr: String::new(), code })
        }
    }
}
