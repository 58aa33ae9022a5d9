//! `opdet`: exact determinants via ordered partitions, plus the combinatorics around them.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 parse error,
//! 4 size-cap error, 5 verification failure.

mod bench;
mod export;
mod verify;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use opdet::permutahedron::FaceSet;
use opdet::{
    coefficient_table, det_bareiss, det_cofactor, det_leibniz, det_terrible, det_terrible_parallel,
    enumerate_ordered_partitions, gamma_f, perm_brute, perm_ryser, EndoFunction, ExactMatrix, Limits,
};

use crate::export::Direction;

/// Fixed seed for sampled suites and benchmarks unless `--seed` is given.
const DEFAULT_SEED: u64 = 1729;

#[derive(Parser, Debug)]
#[command(name = "opdet", version, about = "Exact determinants through ordered set partitions")]
struct Cli {
    /// Replace every size cap with this value.
    #[arg(long, global = true, env = "OPDET_MAX_N", value_parser = clap::value_parser!(u32).range(1..))]
    max_n: Option<u32>,

    /// Worker threads for parallel routines (1 = sequential).
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Determinant of a matrix file (text or JSON).
    Det {
        #[arg(long, value_enum, default_value_t = DetMethod::Terrible)]
        method: DetMethod,
        file: PathBuf,
    },
    /// Permanent of a matrix file.
    Perm {
        #[arg(long, value_enum, default_value_t = PermMethod::Ryser)]
        method: PermMethod,
        file: PathBuf,
    },
    /// Coefficient c_f of every function on {1..n}.
    Coeffs {
        n: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// List or count the ordered partitions of {1..n}.
    Partitions {
        n: usize,
        /// Print only the number of partitions.
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// Hasse diagram of the ordered-partition poset.
    Poset {
        n: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        #[arg(long, value_enum, default_value_t = Direction::Up)]
        direction: Direction,
    },
    /// Faces of the permutahedron lying in S_f, with their Euler characteristic.
    Polytope {
        /// Function as `n: f(1) .. f(n)`, e.g. "3: 1 1 1".
        #[arg(long)]
        function: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
    },
    /// Run self-check suites.
    Verify {
        #[arg(long, value_enum, default_value_t = verify::Suite::All)]
        suite: verify::Suite,
        #[arg(long)]
        n_max: Option<usize>,
        /// Random matrices per size for sampled suites.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Random functions drawn one size above `--n-max`.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Time each method on seeded random matrices; CSV output.
    Bench {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long, value_enum, num_args = 1.., value_delimiter = ',')]
        methods: Option<Vec<bench::Method>>,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DetMethod {
    Terrible,
    Leibniz,
    Cofactor,
    Bareiss,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PermMethod {
    Ryser,
    Brute,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ListFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug)]
enum Failure {
    Io(String),
    Usage(String),
    Parse(String),
    Size(String),
    Verification,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Parse(_) => 3,
            Failure::Size(_) => 4,
            Failure::Verification => 5,
        }
    }
}

impl From<opdet::Error> for Failure {
    fn from(e: opdet::Error) -> Self {
        use opdet::Error;
        match e {
            Error::Size { .. } => Failure::Size(e.to_string()),
            Error::Parse(_) | Error::Dimension { .. } | Error::Domain(_) => Failure::Parse(e.to_string()),
            Error::OutOfRange { .. } | Error::Position { .. } | Error::Argument(_) => Failure::Usage(e.to_string()),
        }
    }
}

fn read_matrix(path: &PathBuf) -> Result<ExactMatrix, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    Ok(ExactMatrix::parse_any(&text)?)
}

fn execute(cli: Cli) -> Result<String, Failure> {
    let limits = cli.max_n.map_or_else(Limits::default, |cap| Limits::uniform(cap as usize));
    if cli.workers == 0 {
        return Err(Failure::Usage("--workers must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.workers)
        .build_global()
        .map_err(|e| Failure::Usage(e.to_string()))?;

    match cli.command {
        Command::Det { method, file } => {
            let a = read_matrix(&file)?;
            let det = match method {
                DetMethod::Terrible if cli.workers > 1 => det_terrible_parallel(&a, &limits)?,
                DetMethod::Terrible => det_terrible(&a, &limits)?,
                DetMethod::Leibniz => det_leibniz(&a, &limits)?,
                DetMethod::Cofactor => det_cofactor(&a, &limits)?,
                DetMethod::Bareiss => det_bareiss(&a),
            };
            Ok(format!("{det}\n"))
        }
        Command::Perm { method, file } => {
            let a = read_matrix(&file)?;
            let perm = match method {
                PermMethod::Ryser => perm_ryser(&a, &limits)?,
                PermMethod::Brute => perm_brute(&a, &limits)?,
            };
            Ok(format!("{perm}\n"))
        }
        Command::Coeffs { n, format } => {
            let table = coefficient_table(n, &limits)?;
            Ok(match format {
                TableFormat::Csv => export::coeffs_csv(&table),
                TableFormat::Json => export::coeffs_json(&table),
            })
        }
        Command::Partitions { n, count, format } => {
            let stream = enumerate_ordered_partitions(n, &limits)?;
            if count {
                return Ok(format!("{}\n", stream.count()));
            }
            let all: Vec<_> = stream.collect();
            Ok(match format {
                ListFormat::Text => export::partitions_text(&all),
                ListFormat::Json => export::partitions_json(n, &all),
            })
        }
        Command::Poset { n, format, direction } => {
            let all: Vec<_> = enumerate_ordered_partitions(n, &limits)?.collect();
            Ok(match format {
                GraphFormat::Dot => export::poset_dot(n, &all, direction),
                GraphFormat::Json => export::poset_json(n, &all, direction),
            })
        }
        Command::Polytope { function, format } => {
            let f: EndoFunction = function.parse()?;
            let gamma = gamma_f(&f, &limits)?;
            let all = FaceSet::all(f.n(), &limits)?;
            Ok(match format {
                GraphFormat::Dot => export::polytope_dot(&f, &all, &gamma),
                GraphFormat::Json => export::polytope_json(&f, &all, &gamma),
            })
        }
        Command::Verify { suite, n_max, trials, samples, seed } => {
            let params = verify::Params { n_max, trials, samples, seed };
            let reports = verify::run(suite, &params, &limits);
            let mut out = String::new();
            for r in &reports {
                out.push_str(&format!("{r}\n"));
            }
            let failed = reports.iter().filter(|r| !r.passed).count();
            out.push_str(&format!("{} suites, {} failed\n", reports.len(), failed));
            print!("{out}");
            if failed > 0 {
                Err(Failure::Verification)
            } else {
                Ok(String::new())
            }
        }
        Command::Bench { n_max, methods, repeats, seed } => {
            let methods = methods.unwrap_or_else(|| bench::Method::ALL.to_vec());
            Ok(bench::run(&methods, n_max, repeats, seed, &limits)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            match &failure {
                Failure::Io(m) | Failure::Usage(m) | Failure::Parse(m) | Failure::Size(m) => {
                    eprintln!("opdet: {m}")
                }
                Failure::Verification => eprintln!("opdet: verification failed"),
            }
            ExitCode::from(failure.code())
        }
    }
}
