use clap::{Args, Parser, Subcommand, ValueEnum};
use qharm_cli::commands::{self as cmd, Rendered};
use qharm_cli::probe::DEFAULT_SEED;
use qharm_cli::suites::{self, Config};
use qharm_cli::SuiteReport;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qharm", version, about = "Quasiharmonic polynomials for Coxeter groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Args, Clone)]
struct Param {
    /// `symbolic` (one indeterminate per class), `const`, or a rational value.
    #[arg(long)]
    c: Option<String>,
    #[arg(long)]
    c1: Option<String>,
    #[arg(long)]
    c2: Option<String>,
}

impl Param {
    fn value(&self) -> anyhow::Result<qharm_core::dunkl::ParamValue> {
        cmd::param(self.c.as_deref(), self.c1.as_deref(), self.c2.as_deref())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Harmonic, quasiharmonic and truncated spaces.
    Qh {
        #[command(subcommand)]
        op: QhOp,
    },
    /// Deformed invariants.
    Invariants {
        #[command(subcommand)]
        op: InvOp,
    },
    /// Explicit dihedral families.
    Dihedral {
        #[command(subcommand)]
        op: DihOp,
    },
    /// Standard Frobenius algebras and characteristic polynomials.
    Frobenius {
        #[command(subcommand)]
        op: FrobOp,
    },
    /// Singular vectors at a given parameter.
    Singular {
        #[command(subcommand)]
        op: SingOp,
    },
    /// Run a verification suite (or `all`).
    Verify {
        suite: String,
        /// Dihedral orders to examine, e.g. `3..5` or `4`.
        #[arg(long)]
        m: Option<String>,
        #[arg(long)]
        workers: Option<usize>,
        /// Keep wall-clock times in structured output (breaks byte stability).
        #[arg(long)]
        timing: bool,
        /// List every check, not only failures.
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Subcommand)]
enum QhOp {
    Dims {
        #[arg(long)]
        group: String,
        #[arg(long)]
        degmax: u32,
        #[arg(long, default_value = "quasiharmonic")]
        kind: String,
        #[command(flatten)]
        param: Param,
    },
    Basis {
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "quasiharmonic")]
        kind: String,
        #[command(flatten)]
        param: Param,
    },
    /// Generic dimension and exceptional values of c.
    Locus {
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "quasiharmonic")]
        kind: String,
    },
}

#[derive(Subcommand)]
enum InvOp {
    Deformed {
        #[arg(long)]
        group: String,
        #[arg(long)]
        d: u32,
        #[command(flatten)]
        param: Param,
    },
}

#[derive(Subcommand)]
enum DihOp {
    Rho {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
    S {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
    Charpoly {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        /// Rational c; the closed form over Q[c] is printed when absent.
        #[arg(long)]
        c: Option<String>,
        #[arg(long)]
        check_minors: bool,
    },
    Quotient {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        param: Param,
    },
}

#[derive(Subcommand)]
enum FrobOp {
    Charpoly {
        #[arg(long)]
        gens: std::path::PathBuf,
        /// Degree bound for the finiteness search.
        #[arg(long, default_value_t = 40)]
        cap: u32,
    },
    Dims {
        #[arg(long)]
        charpoly: std::path::PathBuf,
    },
    Coinvariants {
        #[arg(long)]
        group: String,
    },
}

#[derive(Subcommand)]
enum SingOp {
    Scan {
        #[arg(long)]
        group: String,
        #[arg(long)]
        degmax: u32,
        #[command(flatten)]
        param: Param,
    },
}

enum Outcome {
    Rendered(Rendered),
    Reports(Vec<SuiteReport>, bool, bool),
}

fn parse_range(s: &str) -> anyhow::Result<(u32, u32)> {
    match s.split_once("..") {
        Some((a, b)) => Ok((a.trim().parse()?, b.trim().trim_start_matches('=').parse()?)),
        None => {
            let m = s.trim().parse()?;
            Ok((m, m))
        }
    }
}

fn read(path: &std::path::Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
}

fn dispatch(cli: &Cli) -> anyhow::Result<Outcome> {
    let r = match &cli.command {
        Command::Qh { op } => match op {
            QhOp::Dims { group, degmax, kind, param } => {
                cmd::qh_dims(cmd::group(group)?, &param.value()?, cmd::kind(kind)?, *degmax)?
            }
            QhOp::Basis { group, n, kind, param } => cmd::qh_basis(cmd::group(group)?, &param.value()?, cmd::kind(kind)?, *n)?,
            QhOp::Locus { group, n, kind } => cmd::qh_locus(cmd::group(group)?, cmd::kind(kind)?, *n, cli.common.seed)?,
        },
        Command::Invariants { op: InvOp::Deformed { group, d, param } } => {
            cmd::invariants_deformed(cmd::group(group)?, &param.value()?, *d)?
        }
        Command::Dihedral { op } => match op {
            DihOp::Rho { m, n } => cmd::dihedral_rho(*m, *n)?,
            DihOp::S { m, n } => cmd::dihedral_s(*m, *n)?,
            DihOp::Charpoly { m, n, c, check_minors } => {
                let c = c.as_deref().map(str::parse).transpose()?;
                cmd::dihedral_charpoly(*m, *n, c.as_ref(), *check_minors)?
            }
            DihOp::Quotient { m, n, param } => cmd::dihedral_quotient(*m, *n, &cmd::rational_param(&param.value()?)?)?,
        },
        Command::Frobenius { op } => match op {
            FrobOp::Charpoly { gens, cap } => cmd::frobenius_charpoly(&read(gens)?, *cap)?,
            FrobOp::Dims { charpoly } => cmd::frobenius_dims(&read(charpoly)?)?,
            FrobOp::Coinvariants { group } => cmd::frobenius_coinvariants(cmd::group(group)?)?,
        },
        Command::Singular { op: SingOp::Scan { group, degmax, param } } => {
            cmd::singular_scan(cmd::group(group)?, &cmd::rational_param(&param.value()?)?, *degmax)?
        }
        Command::Verify { suite, m, workers, timing, verbose } => {
            let defs = suites::resolve(suite)
                .ok_or_else(|| anyhow::anyhow!("unknown suite {suite:?}; known: {}", suites::suite_names().join(", ")))?;
            let mut cfg = Config { seed: cli.common.seed, ..Config::default() };
            cfg.m_range = m.as_deref().map(parse_range).transpose()?;
            if let Some(w) = workers {
                cfg.workers = *w;
            }
            return Ok(Outcome::Reports(suites::run_suites(&defs, &cfg), *timing, *verbose));
        }
    };
    Ok(Outcome::Rendered(r))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match dispatch(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let structured = cli.common.format == Format::Structured;
    let (body, ok) = match outcome {
        Outcome::Rendered(r) => {
            let body = if structured { format!("{}\n", serde_json::to_string_pretty(&r.json).unwrap_or_default()) } else { r.text };
            (body, r.ok)
        }
        Outcome::Reports(reports, timing, verbose) => {
            let ok = reports.iter().all(SuiteReport::passed);
            let body = if structured {
                let parts: Vec<String> = reports.iter().map(|r| if timing { r.json() } else { r.stable_json() }).collect();
                format!("[\n{}\n]\n", parts.join(",\n"))
            } else {
                reports.iter().map(|r| r.text(verbose)).collect()
            };
            (body, ok)
        }
    };
    match &cli.common.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &body) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{body}"),
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
