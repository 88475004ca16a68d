//! The `jointex` command line.
//!
//! [`run`] takes the arguments and two writers and returns the process exit
//! status, so the binary is a thin wrapper and tests can drive it in
//! process.

pub mod csv;

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use jointex_core::cointoss::{render_kv, render_text, simulate_with_workers};
use jointex_core::parser::FormulaFile;
use jointex_core::verify::Coverage;
use jointex_core::{
    exact_probs, family, k_way_report, parse_file, render, verify_theorem, witness, Dnf, Error,
    Mode, RowCap, TheoremReport, VerifyOptions, DEFAULT_MAX_VARS,
};

pub use csv::{Conjunctions, CsvTable};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "jointex",
    version,
    about = "Joint mutual exclusion without pairwise exclusion"
)]
pub struct Cli {
    #[command(flatten)]
    pub limits: Limits,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Limits {
    /// Largest variable count for anything that walks all 2^n rows.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_VARS)]
    pub max_n: usize,
    /// Confirms a --max-n above the default. Memory grows as 2^n.
    #[arg(long, global = true)]
    pub allow_large: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the family P_1..P_n as formulas or as a truth table.
    Build {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = BuildFormat::Dnf)]
        format: BuildFormat,
    },
    /// Truth table of the family with conjunction columns, as CSV.
    Table {
        #[arg(long)]
        n: usize,
        /// `all`, or `k=<k>` for the singles plus every k-subset.
        #[arg(long, default_value = "k=1")]
        conjunctions: Conjunctions,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that all n propositions exclude jointly and no fewer do.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "both")]
        mode: Mode,
        /// Enumerate every subset conjunction even when it is implied.
        #[arg(long)]
        full_scan: bool,
    },
    /// Decide every k-subset conjunction of the formulas in the files.
    Check {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Exit 1 unless every subset has this status.
        #[arg(long, value_enum)]
        expect: Option<Expect>,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Exact and simulated probabilities for the coin-toss reading.
    Cointoss {
        #[arg(long)]
        n: usize,
        /// Zero skips the simulation.
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        exact_only: bool,
        #[arg(long, value_enum, default_value_t = ProbFormat::Text)]
        format: ProbFormat,
        /// Worker threads; results do not depend on it.
        #[arg(long)]
        workers: Option<usize>,
    },
    /// First row satisfying every formula in the files, or `none`.
    Witness {
        #[arg(long)]
        n: usize,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BuildFormat {
    Dnf,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Expect {
    Zero,
    Nonzero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProbFormat {
    Text,
    Kv,
}

/// Failure of a command, with the exit status it maps to.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Capacity(String),
    Io(String),
    Internal(String),
}

impl Failure {
    fn status(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Capacity(_) => EXIT_CAPACITY,
            Failure::Io(_) | Failure::Internal(_) => EXIT_FAILURE,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Capacity(m) | Failure::Io(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Capacity { .. } => Failure::Capacity(e.to_string()),
            Error::Invariant(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Io(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return e.exit_code();
        }
    };
    match execute(&cli, out, err) {
        Ok(status) => status,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.status()
        }
    }
}

fn row_cap(limits: &Limits) -> Result<RowCap, Failure> {
    if limits.max_n > DEFAULT_MAX_VARS && !limits.allow_large {
        return Err(Failure::Usage(format!(
            "--max-n {} is above the default {DEFAULT_MAX_VARS}; pass --allow-large to confirm",
            limits.max_n
        )));
    }
    Ok(RowCap::new(limits.max_n)?)
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let cap = row_cap(&cli.limits)?;
    match &cli.command {
        Command::Build { n, format } => {
            let fam = family(*n)?;
            match format {
                BuildFormat::Dnf => {
                    let mut text = format!("vars={n}\n");
                    for p in &fam.propositions {
                        text.push_str(&render(p));
                        text.push('\n');
                    }
                    out.write_all(text.as_bytes())?;
                }
                BuildFormat::Csv => {
                    let table = CsvTable::build(&fam, Conjunctions::Size(1), cap)?;
                    out.write_all(table.render().as_bytes())?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Table {
            n,
            conjunctions,
            out: path,
        } => {
            let fam = family(*n)?;
            let text = CsvTable::build(&fam, *conjunctions, cap)?.render();
            match path {
                Some(p) => std::fs::write(p, text)
                    .map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { n, mode, full_scan } => {
            let opts = VerifyOptions {
                full_scan: *full_scan,
                cap,
            };
            let report = verify_theorem(*n, *mode, &opts)?;
            out.write_all(render_theorem(&report).as_bytes())?;
            Ok(if report.verified() {
                EXIT_OK
            } else {
                EXIT_FAILURE
            })
        }
        Command::Check {
            k,
            n,
            expect,
            files,
        } => {
            let formulas = load(files, err)?;
            let report = k_way_report(&formulas, *k, *n, cap)?;
            let mut text = format!("check: k={k} n={n} formulas={}\n", formulas.len());
            for e in &report.entries {
                let label: String = e.members.iter().map(|m| format!("P_{m}")).collect();
                match &e.witness {
                    Some(w) => writeln!(text, "{label}: nonzero witness={w}"),
                    None => writeln!(text, "{label}: zero"),
                }
                .expect("writing to a String");
            }
            let zero = report.entries.iter().filter(|e| e.zero).count();
            let _ = writeln!(
                text,
                "summary: {zero} zero, {} nonzero",
                report.entries.len() - zero
            );
            out.write_all(text.as_bytes())?;
            let met = match expect {
                None => true,
                Some(Expect::Zero) => report.all_zero(),
                Some(Expect::Nonzero) => report.all_nonzero(),
            };
            Ok(if met { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Cointoss {
            n,
            samples,
            seed,
            exact_only,
            format,
            workers,
        } => {
            let exact = exact_probs(*n, cap)?;
            let sim = if *exact_only || *samples == 0 {
                None
            } else {
                let workers = workers
                    .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |w| w.get()));
                Some(simulate_with_workers(*n, *samples, *seed, workers)?)
            };
            let text = match format {
                ProbFormat::Text => render_text(&exact, sim.as_ref()),
                ProbFormat::Kv => render_kv(&exact, sim.as_ref()),
            };
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Witness { n, files } => {
            let formulas = load(files, err)?;
            let text = match witness(&formulas, *n)? {
                Some(w) => format!("{w}\n"),
                None => "none\n".to_string(),
            };
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}

/// All formulas of all files, in order. Dropped contradictory terms are
/// reported on `err`.
fn load(files: &[PathBuf], err: &mut dyn Write) -> Result<Vec<Dnf>, Failure> {
    let mut formulas = Vec::new();
    for path in files {
        let file = read_formula_file(path)?;
        for f in &file.formulas {
            for t in &f.parsed.dropped_terms {
                let _ = writeln!(
                    err,
                    "warning: {}:{}: term {} is contradictory and was dropped",
                    path.display(),
                    f.line,
                    t + 1
                );
            }
        }
        formulas.extend(file.dnfs());
    }
    Ok(formulas)
}

fn read_formula_file(path: &Path) -> Result<FormulaFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    parse_file(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Plain-text verification report, one fact per line.
pub fn render_theorem(r: &TheoremReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "verify: n={} mode={}", r.n, r.mode);
    if let Some(below) = r.implied_below {
        if below > 2 {
            let _ = writeln!(s, "k=2..{}: implied by the {below}-way products", below - 1);
        }
    }
    for c in &r.scan {
        let _ = writeln!(s, "k={}: {}/{} nonzero", c.k, c.nonzero, c.subsets);
    }
    for d in &r.details {
        let _ = write!(s, "without P_{}:", d.j);
        if let Some(ok) = d.symbolic_ok {
            match &d.cube {
                Some(c) => write!(s, " cube {c}"),
                None => write!(s, " not a single cube"),
            }
            .expect("writing to a String");
            let _ = write!(s, " ({})", if ok { "expected" } else { "unexpected" });
        }
        if let Some(rows) = d.rows {
            let _ = write!(s, " rows={rows}");
        }
        if let Some(w) = &d.witness {
            let _ = write!(s, " witness={w}");
        }
        if let Some(a) = d.agrees {
            let _ = write!(s, " agrees={}", if a { "yes" } else { "no" });
        }
        s.push('\n');
    }
    if r.disjoint_pairs > 0 {
        let _ = writeln!(
            s,
            "pairwise conflicting products: {} pairs checked",
            r.disjoint_pairs
        );
    }
    if let Some(o) = &r.observations {
        let scope = match &o.coverage {
            Coverage::AllTuples => "all index tuples".to_string(),
            Coverage::Indices(ix) => format!(
                "indices {}",
                ix.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        };
        let _ = writeln!(
            s,
            "observations over {scope}: same column {} ({} pairs), cross column {} ({} pairs), mirrored {} ({} pairs, {} extensions)",
            pass(o.obs1_ok),
            o.obs1_pairs,
            pass(o.obs2_ok),
            o.obs2_pairs,
            pass(o.obs3_ok),
            o.obs3_pairs,
            o.obs3_extensions
        );
        for f in o.failures.iter().take(10) {
            let _ = writeln!(
                s,
                "  failure {}: entries {:?} product {}",
                f.observation, f.entries, f.product
            );
        }
    }
    let _ = writeln!(s, "components nonzero: {}", yes_no(r.component_ok));
    let _ = writeln!(s, "joint conjunction zero: {}", yes_no(r.joint_zero));
    let _ = writeln!(
        s,
        "result: {}",
        if r.verified() { "verified" } else { "VIOLATED" }
    );
    s
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
