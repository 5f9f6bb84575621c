//! The `vknot` command line front end. Commands return their output and exit
//! status instead of printing, so they can be tested in-process.

use std::fmt::Write as _;
use std::io::BufRead;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use crate::codec::GaussCode;
use crate::corpus;
use crate::lfpoly::{self, InvariantBundle};
use crate::moves;
use crate::report::{BundleJson, CompareJson, CosmeticJson};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "vknot", version, about = "Index polynomials of virtual knots from signed Gauss codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full invariant report. A code of the form @name refers to a fixture.
    Report {
        code: Option<String>,
        #[arg(long)]
        json: bool,
        /// Read one code per line from stdin.
        #[arg(long, conflicts_with = "code")]
        batch: bool,
    },
    /// Try to tell two knots apart.
    Compare {
        first: String,
        second: String,
        #[arg(long)]
        json: bool,
    },
    /// Non-cosmetic crossing test for every crossing.
    Cosmetic {
        code: Option<String>,
        #[arg(long)]
        json: bool,
        #[arg(long, conflicts_with = "code")]
        batch: bool,
    },
    /// Random Reidemeister walks that must leave every invariant unchanged.
    Fuzz {
        code: String,
        #[arg(long, default_value_t = 50)]
        moves: usize,
        #[arg(long, default_value_t = 100)]
        walks: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        max_crossings: usize,
        #[arg(long)]
        json: bool,
    },
    /// Gauss code of the twist family K_n or its mutant MK_n.
    Family {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mutant: bool,
    },
    /// Print a stored example with its expected values.
    Fixture {
        #[arg(long, required_unless_present = "list")]
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub status: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, stderr: String::new(), status: EXIT_OK }
    }

    fn input_error(e: &Error) -> Self {
        Output { stdout: String::new(), stderr: format!("error: {}: {e}\n", e.kind()), status: EXIT_INPUT }
    }
}

/// Parses a code argument; `@name` loads a fixture.
pub fn resolve_code(arg: &str) -> Result<GaussCode, Error> {
    match arg.trim().strip_prefix('@') {
        Some(name) => Ok(corpus::fixture(name)?.code),
        None => Ok(arg.parse()?),
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("report types serialize")
}

fn set_text<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let v: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", v.join(", "))
}

pub fn render_bundle(b: &InvariantBundle) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "code: {}", b.code);
    let _ = writeln!(s, "canonical: {}", b.code.serialize());
    let _ = writeln!(s, "crossings: {}  writhe: {}", b.crossings.len(), b.writhes.writhe);
    if !b.crossings.is_empty() {
        let _ = writeln!(s, "  label  sign  index");
        for c in &b.crossings {
            let _ = writeln!(s, "  {:>5}  {:>4}  {:>5}", c.label, if c.sign > 0 { "+" } else { "-" }, c.index);
        }
    }
    let d: Vec<String> = b.writhes.dwrithe.iter().map(|(n, v)| format!("{n}:{v}")).collect();
    let _ = writeln!(s, "dwrithe: {}", set_text(d));
    let _ = writeln!(s, "nset: {}", set_text(&b.nset));
    let _ = writeln!(s, "P = {}", b.p);
    let _ = writeln!(s, "W = {}", b.w);
    for n in &b.nset {
        let _ = writeln!(s, "L^{n} = {}", b.l[n]);
    }
    for n in &b.nset {
        let _ = writeln!(s, "F^{n} = {}", b.f[n]);
    }
    for n in &b.nset {
        let _ = writeln!(s, "T_{n} = {}", set_text(&b.t[n]));
    }
    let _ = writeln!(s, "for n outside the nset, L^n = F^n = P");
    for (c, v) in &b.cosmetic {
        let _ = writeln!(s, "crossing {c}: {v}");
    }
    s
}

fn render_cosmetic(b: &InvariantBundle) -> String {
    let mut s = format!("code: {}\n", b.code);
    for (c, v) in &b.cosmetic {
        let _ = writeln!(s, "crossing {c}: {v}");
    }
    s
}

/// Runs `f` on one code or on every stdin line, keeping input order.
fn per_code(
    code: Option<String>,
    batch: bool,
    stdin: &mut dyn BufRead,
    json: bool,
    f: impl Fn(&InvariantBundle, bool) -> String + Sync,
) -> Output {
    let lines: Vec<String> = if batch {
        let mut v = Vec::new();
        for line in stdin.lines() {
            match line {
                Ok(l) => v.push(l),
                Err(e) => {
                    return Output { stderr: format!("error: reading stdin: {e}\n"), status: EXIT_INPUT, ..Default::default() }
                }
            }
        }
        v
    } else {
        vec![code.unwrap_or_default()]
    };
    let results: Vec<Result<String, Error>> = lines
        .par_iter()
        .map(|l| resolve_code(l).map(|c| f(&lfpoly::bundle(&c), json)))
        .collect();
    let mut out = Output::default();
    for (k, r) in results.into_iter().enumerate() {
        match r {
            Ok(text) => {
                out.stdout.push_str(&text);
                if batch && !json {
                    out.stdout.push('\n');
                }
            }
            Err(e) => {
                let prefix = if batch { format!("line {}: ", k + 1) } else { String::new() };
                let _ = writeln!(out.stderr, "error: {prefix}{}: {e}", e.kind());
                out.status = EXIT_INPUT;
            }
        }
    }
    out
}

pub fn execute(cmd: Command, stdin: &mut dyn BufRead) -> Output {
    match cmd {
        Command::Report { code, json, batch } => per_code(code, batch, stdin, json, |b, json| {
            if json {
                to_json(&BundleJson::from(b)) + "\n"
            } else {
                render_bundle(b)
            }
        }),
        Command::Cosmetic { code, json, batch } => per_code(code, batch, stdin, json, |b, json| {
            if json {
                to_json(&CosmeticJson { code: b.code.to_string(), crossings: b.cosmetic.clone() }) + "\n"
            } else {
                render_cosmetic(b)
            }
        }),
        Command::Compare { first, second, json } => {
            let (a, b) = match (resolve_code(&first), resolve_code(&second)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => return Output::input_error(&e),
            };
            let (ba, bb) = rayon::join(|| lfpoly::bundle(&a), || lfpoly::bundle(&b));
            let verdict = lfpoly::distinguish(&ba, &bb);
            if json {
                Output::ok(to_json(&CompareJson::new(a.serialize(), b.serialize(), verdict)) + "\n")
            } else {
                Output::ok(format!("{verdict}\n"))
            }
        }
        Command::Fuzz { code, moves: steps, walks, seed, max_crossings, json } => {
            let c = match resolve_code(&code) {
                Ok(c) => c,
                Err(e) => return Output::input_error(&e),
            };
            let summary = moves::fuzz(&c, walks, steps, seed, max_crossings);
            let status = if summary.violations.is_empty() { EXIT_OK } else { EXIT_VIOLATION };
            let stdout = if json {
                to_json(&summary) + "\n"
            } else {
                let mut s = format!(
                    "start: {}\nwalks: {}  moves per walk: {}  moves applied: {}  largest diagram: {} crossings\nviolations: {}\n",
                    summary.start,
                    summary.walks,
                    summary.moves_per_walk,
                    summary.moves_applied,
                    summary.max_crossings_seen,
                    summary.violations.len()
                );
                for v in &summary.violations {
                    let _ = writeln!(
                        s,
                        "walk {} seed {} step {}: {}\n  before: {}\n  after:  {}\n  trace: {}",
                        v.walk,
                        v.seed,
                        v.step,
                        v.difference,
                        v.before,
                        v.after,
                        v.trace.join("; ")
                    );
                }
                s
            };
            Output { stdout, stderr: String::new(), status }
        }
        Command::Family { n, mutant } => {
            if n == 0 {
                return Output { stderr: "error: --n must be at least 1\n".into(), status: EXIT_INPUT, ..Default::default() };
            }
            Output::ok(format!("{}\n", corpus::family_kn(n, mutant)))
        }
        Command::Fixture { name, list } => {
            if list {
                return Output::ok(corpus::fixture_names().join("\n") + "\n");
            }
            match corpus::fixture(name.as_deref().unwrap_or_default()) {
                Ok(f) => Output::ok(format!("{}\n{}\n", f.code, to_json(&f.expected))),
                Err(e) => Output::input_error(&e),
            }
        }
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command, stdin),
        Err(e) => {
            let status = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if status == EXIT_OK {
                Output::ok(text)
            } else {
                Output { stderr: text, status, ..Default::default() }
            }
        }
    }
}
