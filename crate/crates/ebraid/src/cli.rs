//! Command-line front end.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use ebraid_core::covering::{build_cov_complex, specialize_pi};
use ebraid_core::cube::build_cube;
use ebraid_core::homology::{forget_tau, forget_tau_mod2, homology, homology_mod2, tqft_complex};
use ebraid_core::{oracle, skein, BraidWord, TauLaurent};
use serde_json::json;

use crate::corpus;
use crate::error::{AppError, Result};
use crate::format::{cube_to_json, pi_complex_to_json, poly_text, poly_to_json, Table};
use crate::verify::{self, Suite};

const DEFAULT_CORPUS: &str = "corpus.jsonl";

#[derive(Parser, Debug)]
#[command(
    name = "ebraid",
    version,
    about = "osp(1|2) link invariant and e-graded Khovanov homology of braid closures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the invariant Ĵ of the braid closure.
    Jhat(JhatArgs),
    /// Print the e-graded Khovanov homology.
    Homology(HomologyArgs),
    /// Print the homology of the covering complex at π = ±1.
    Covering(CoveringArgs),
    /// Run a randomized property suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct BraidInput {
    /// Number of strands.
    #[arg(long)]
    strands: usize,
    /// Letters separated by spaces: `i` is σ_i, `-i` its inverse.
    #[arg(allow_hyphen_values = true)]
    word: String,
}

impl BraidInput {
    fn braid(&self) -> Result<BraidWord> {
        Ok(BraidWord::parse(&self.word, self.strands)?)
    }
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Method {
    #[default]
    Statesum,
    Tl,
    Oracle,
    All,
}

#[derive(Args, Debug)]
struct JhatArgs {
    #[command(flatten)]
    input: BraidInput,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    #[arg(long, value_enum, default_value_t)]
    method: Method,
}

#[derive(Args, Debug)]
struct HomologyArgs {
    #[command(flatten)]
    input: BraidInput,
    /// Collapse the τ-grading.
    #[arg(long)]
    forget_tau: bool,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Write the cube of resolutions as JSON to this file.
    #[arg(long, value_name = "FILE")]
    dump_cube: Option<PathBuf>,
}

fn parse_pi(s: &str) -> std::result::Result<i64, String> {
    match s {
        "1" | "+1" => Ok(1),
        "-1" => Ok(-1),
        _ => Err(format!("π specializes to 1 or -1, not {s}")),
    }
}

#[derive(Args, Debug)]
struct CoveringArgs {
    #[command(flatten)]
    input: BraidInput,
    /// Value of π: 1 or -1.
    #[arg(long, value_parser = parse_pi, allow_hyphen_values = true)]
    pi: i64,
    /// Report F₂ dimensions instead of integral groups.
    #[arg(long)]
    mod2: bool,
    #[arg(long)]
    forget_tau: bool,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Write the covering complex over Z[π] as JSON to this file.
    #[arg(long, value_name = "FILE")]
    dump_complex: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Markov,
    Euler,
    Oracle,
    Signs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: SuiteArg,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 4)]
    max_strands: usize,
    #[arg(long, default_value_t = 6)]
    max_crossings: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Corpus file to include. Defaults to `corpus.jsonl` in the working
    /// directory, then to the built-in corpus.
    #[arg(long, value_name = "FILE")]
    corpus: Option<PathBuf>,
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Jhat(a) => cmd_jhat(&a, out),
        Command::Homology(a) => cmd_homology(&a, out),
        Command::Covering(a) => cmd_covering(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
    }
}

fn print_poly(p: &TauLaurent, f: Format, out: &mut dyn Write) -> Result<()> {
    match f {
        Format::Text => writeln!(out, "{}", poly_text(p))?,
        Format::Json => writeln!(out, "{}", poly_to_json(p))?,
    }
    Ok(())
}

fn cmd_jhat(a: &JhatArgs, out: &mut dyn Write) -> Result<i32> {
    let b = a.input.braid()?;
    let value = match a.method {
        Method::Statesum => skein::jhat(&b)?,
        Method::Tl => skein::jhat_via_tl(&b),
        Method::Oracle => oracle::jhat_oracle(&b)?,
        Method::All => {
            let s = skein::jhat(&b)?;
            let t = skein::jhat_via_tl(&b);
            let o = oracle::jhat_oracle(&b)?;
            if s != t || s != o {
                return Err(AppError::MethodDisagreement(format!(
                    "statesum: {s}\ntl: {t}\noracle: {o}"
                )));
            }
            s
        }
    };
    print_poly(&value, a.format, out)?;
    Ok(0)
}

fn print_table(t: &Table, f: Format, pi: Option<i64>, out: &mut dyn Write) -> Result<()> {
    match (f, pi) {
        (Format::Text, _) => write!(out, "{}", t.to_text())?,
        (Format::Json, None) => writeln!(out, "{}", t.to_json())?,
        (Format::Json, Some(pi)) => {
            let key = if matches!(t, Table::GradedMod2(_) | Table::FlatMod2(_)) {
                "mod2"
            } else {
                "homology"
            };
            writeln!(out, "{}", json!({ "pi": pi, key: t.to_json() }))?
        }
    }
    Ok(())
}

fn cmd_homology(a: &HomologyArgs, out: &mut dyn Write) -> Result<i32> {
    let b = a.input.braid()?;
    let cube = build_cube(&b)?;
    if let Some(path) = &a.dump_cube {
        std::fs::write(path, format!("{}\n", cube_to_json(&cube)))?;
    }
    let h = homology(&tqft_complex(&cube)?);
    let table = if a.forget_tau {
        Table::Flat(forget_tau(&h))
    } else {
        Table::Graded(h)
    };
    print_table(&table, a.format, None, out)?;
    Ok(0)
}

fn cmd_covering(a: &CoveringArgs, out: &mut dyn Write) -> Result<i32> {
    let b = a.input.braid()?;
    let cov = build_cov_complex(&b)?;
    if let Some(path) = &a.dump_complex {
        std::fs::write(path, format!("{}\n", pi_complex_to_json(&cov)))?;
    }
    let c = specialize_pi(&cov, a.pi);
    let table = match (a.mod2, a.forget_tau) {
        (false, false) => Table::Graded(homology(&c)),
        (false, true) => Table::Flat(forget_tau(&homology(&c))),
        (true, false) => Table::GradedMod2(homology_mod2(&c)),
        (true, true) => Table::FlatMod2(forget_tau_mod2(&homology_mod2(&c))),
    };
    print_table(&table, a.format, Some(a.pi), out)?;
    Ok(0)
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let suite = match a.suite {
        SuiteArg::Markov => Suite::Markov,
        SuiteArg::Euler => Suite::Euler,
        SuiteArg::Oracle => Suite::Oracle,
        SuiteArg::Signs => Suite::Signs,
    };
    let entries = match &a.corpus {
        Some(p) => corpus::load(p)?,
        None if Path::new(DEFAULT_CORPUS).is_file() => corpus::load(Path::new(DEFAULT_CORPUS))?,
        None => corpus::embedded(),
    };
    let opts = verify::Options {
        trials: a.trials,
        max_strands: a.max_strands,
        max_crossings: a.max_crossings,
        seed: a.seed,
    };
    let report = verify::run(suite, &opts, &entries);
    for f in &report.failures {
        writeln!(out, "FAIL {f}")?;
    }
    writeln!(
        out,
        "{}: {} passed, {} failed",
        suite.name(),
        report.passed,
        report.failures.len()
    )?;
    Ok(if report.ok() { 0 } else { 1 })
}
