//! Command-line driver.
//!
//! Exit codes: 0 success (or "true" for `check`), 1 "false", 2 input error,
//! 3 unmet precondition or capacity limit, 4 internal invariant breach.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use twindom_core::constructive::{half_witness, tds_order8};
use twindom_core::domination::{gamma_star_with_cap, sink_source_tds, DEFAULT_EXACT_CAP};
use twindom_core::enumeration::{
    generate_tournaments, search_gamma_at_least, Mode, DEFAULT_EXTREMAL_CAP, DEFAULT_SEARCH_BUDGET,
};
use twindom_core::generators::random_tournament;
use twindom_core::{is_twin_dominating, Error, TdsCertificate, Tournament, VertexSet, MAX_ORDER};

use crate::{matrix, parallel, report, trn};

#[derive(Debug, Parser)]
#[command(name = "twindom", version, about = "Twin domination in tournaments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact twin domination number and the smallest minimum witness.
    Gamma {
        file: PathBuf,
        /// Largest order accepted by the exact solver.
        #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
        cap: usize,
    },
    /// Is SET (comma-separated vertices) twin dominating? Exit 0 if so, 1 if not.
    Check { file: PathBuf, set: String },
    /// Constructive twin dominating set, re-verified before printing.
    Witness {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
        cap: usize,
    },
    /// DOM*(K_n) over all isomorphism classes of order n (n ≤ 8).
    Domstar {
        n: usize,
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_EXTREMAL_CAP)]
        extremal_cap: usize,
    },
    /// Stream tournaments of order n as consecutive trn documents.
    Enumerate {
        n: usize,
        /// All labeled orientations (n ≤ 6) instead of one per class (n ≤ 8).
        #[arg(long)]
        labeled: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded random tournament in trn format.
    Random {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convert between trn and adjacency-matrix text (input format is detected).
    Convert {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Local search for a tournament with gamma* >= TARGET.
    Search {
        n: usize,
        target: usize,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Exact,
    Order8,
    Half,
    Sinksource,
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Trn,
    Matrix,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Precondition(String),
    Defect(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Precondition(_) => 3,
            Failure::Defect(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Precondition(m) | Failure::Defect(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::FallthroughReached { .. } | Error::VerificationFailed { .. } => {
                Failure::Defect(msg)
            }
            Error::OutOfRangeVertex { .. }
            | Error::SetNotSubsetOfVertices
            | Error::SelfLoop { .. }
            | Error::DuplicateOrConflictingArc { .. }
            | Error::IncompleteOrientation { .. }
            | Error::EmptyKeepSet
            | Error::NotABijection => Failure::Input(msg),
            _ => Failure::Precondition(msg),
        }
    }
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure::Input(format!("{}: {e}", path.display()))
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| io_failure(path, e))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| io_failure(path, e))
    }
}

fn read_trn(path: &Path) -> Result<Tournament, Failure> {
    let text = read_text(path)?;
    trn::decode(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Tries trn first, then matrix; no text is valid in both formats.
fn read_any(path: &Path) -> Result<Tournament, Failure> {
    let text = read_text(path)?;
    trn::decode(&text)
        .or_else(|trn_err| {
            matrix::decode(&text)
                .map_err(|m_err| format!("neither trn ({trn_err}) nor matrix ({m_err})"))
        })
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parse_set(t: &Tournament, text: &str) -> Result<VertexSet, Failure> {
    let mut set = VertexSet::EMPTY;
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part
            .parse()
            .map_err(|_| Failure::Input(format!("{part:?} is not a vertex index")))?;
        t.check_vertex(v)?;
        set.insert(v);
    }
    Ok(set)
}

fn emit(out: Option<&Path>, stdout: &mut dyn Write, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| io_failure(path, e)),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Input(format!("stdout: {e}"))),
    }
}

/// Re-runs the checker on a certificate before anything is printed.
fn reverified(t: &Tournament, cert: TdsCertificate) -> Result<TdsCertificate, Failure> {
    match is_twin_dominating(t, cert.set) {
        Ok(true) if cert.size == cert.set.len() => Ok(cert),
        _ => Err(Failure::Defect(format!(
            "certificate {} ({}) failed re-verification",
            cert.set, cert.branch
        ))),
    }
}

fn jobs_or_default(jobs: Option<usize>) -> usize {
    jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1)
}

fn execute(cmd: Command, stdout: &mut dyn Write) -> Result<u8, Failure> {
    let w = |stdout: &mut dyn Write, line: String| -> Result<(), Failure> {
        writeln!(stdout, "{line}").map_err(|e| Failure::Input(format!("stdout: {e}")))
    };
    match cmd {
        Command::Gamma { file, cap } => {
            let t = read_trn(&file)?;
            let cert = reverified(&t, gamma_star_with_cap(&t, cap)?)?;
            w(stdout, format!("gamma_star={} set={}", cert.size, cert.set))?;
            Ok(0)
        }
        Command::Check { file, set } => {
            let t = read_trn(&file)?;
            let s = parse_set(&t, &set)?;
            let ok = is_twin_dominating(&t, s)?;
            w(stdout, ok.to_string())?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::Witness { file, method, cap } => {
            let t = read_trn(&file)?;
            let n = t.order();
            let has_source_or_sink = !t.sources().union(t.sinks()).is_empty();
            let method = match method {
                MethodArg::Auto if n == 8 => MethodArg::Order8,
                MethodArg::Auto if n >= 8 && n % 2 == 0 => MethodArg::Half,
                MethodArg::Auto if has_source_or_sink && n >= 2 => MethodArg::Sinksource,
                MethodArg::Auto => MethodArg::Exact,
                m => m,
            };
            let cert = match method {
                MethodArg::Exact => gamma_star_with_cap(&t, cap)?,
                MethodArg::Order8 => tds_order8(&t)?,
                MethodArg::Half => half_witness(&t)?,
                MethodArg::Sinksource => sink_source_tds(&t)?,
                MethodArg::Auto => unreachable!("resolved above"),
            };
            let cert = reverified(&t, cert)?;
            w(
                stdout,
                format!(
                    "method={} branch={} size={} set={} verified=true",
                    cert.method, cert.branch, cert.size, cert.set
                ),
            )?;
            Ok(0)
        }
        Command::Domstar {
            n,
            jobs,
            out,
            extremal_cap,
        } => {
            let report = parallel::dom_star(n, jobs_or_default(jobs), extremal_cap)?;
            w(
                stdout,
                format!(
                    "DOM*(K_{n})={} classes={}",
                    report.dom_star, report.class_count
                ),
            )?;
            emit(out.as_deref(), stdout, &report::to_json(&report))?;
            Ok(0)
        }
        Command::Enumerate {
            n,
            labeled,
            jobs,
            out,
        } => {
            let tournaments: Box<dyn Iterator<Item = Tournament>> = if labeled {
                generate_tournaments(n, Mode::Labeled)?
            } else {
                let keys = parallel::canonical_classes(n, jobs_or_default(jobs))?;
                Box::new(keys.into_iter().map(|k| k.to_tournament()))
            };
            let mut text = String::new();
            for t in tournaments {
                text.push_str(&trn::encode(&t));
                text.push('\n');
            }
            emit(out.as_deref(), stdout, &text)?;
            Ok(0)
        }
        Command::Random { n, seed, out } => {
            if n == 0 || n > MAX_ORDER {
                return Err(Failure::Precondition(format!(
                    "order {n} outside 1..={MAX_ORDER}"
                )));
            }
            let t = random_tournament(n, seed)?;
            emit(out.as_deref(), stdout, &(trn::encode(&t) + "\n"))?;
            Ok(0)
        }
        Command::Convert { file, to, out } => {
            let t = read_any(&file)?;
            let text = match to {
                Format::Trn => trn::encode(&t) + "\n",
                Format::Matrix => matrix::encode(&t),
            };
            emit(out.as_deref(), stdout, &text)?;
            Ok(0)
        }
        Command::Search {
            n,
            target,
            budget,
            seed,
            out,
        } => match search_gamma_at_least(n, target, budget, seed) {
            Ok((t, cert)) => {
                let cert = reverified(&t, cert)?;
                w(stdout, format!("gamma_star={} set={}", cert.size, cert.set))?;
                emit(out.as_deref(), stdout, &(trn::encode(&t) + "\n"))?;
                Ok(0)
            }
            Err(e @ Error::NotFoundWithinBudget { .. }) => {
                w(stdout, format!("not found: {e}"))?;
                Ok(1)
            }
            Err(e) => Err(e.into()),
        },
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message());
            f.code()
        }
    }
}
