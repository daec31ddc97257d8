use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hoeffspecht::characters::{character_table, dimension};
use hoeffspecht::combinatorics::{binomial, standard_tableaux};
use hoeffspecht::format::{parse_decomposition, parse_module_vector, write_decomposition, write_module_vector};
use hoeffspecht::hoeffding::{decompose, DEFAULT_ORACLE_CEILING};
use hoeffspecht::specht::polytabloid;
use hoeffspecht::verify::{bench, run_suites, RunConfig, Suite};

#[derive(Parser)]
#[command(name = "hoeffspecht", version, about = "Exact Hoeffding decompositions and two-row Specht modules")]
struct Cli {
    /// Largest n for which sums over the whole symmetric group are attempted.
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_CEILING)]
    ceiling: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the dimensions C(n,l) - C(n,l-1) for l = 0..n/2.
    Dims {
        #[arg(long)]
        n: usize,
    },
    /// Export the two-row character table as CSV.
    Chartable {
        #[arg(long)]
        n: usize,
        #[arg(long = "max-l")]
        max_l: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decompose a module vector file into its Hoeffding components.
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sum the components of a decomposition file back into a module vector.
    Reconstruct {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the standard polytabloids of shape (n-l, l), one file each.
    Specht {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the verification suites.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value = "all", value_parser = ["all", "decomp", "equiv", "shift", "specht"])]
        suite: String,
        /// Also write the reports as JSON.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Time the kernel route against the character-sum route.
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Failure classes mapped to exit codes.
enum Failure {
    Usage(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Dims { n } => {
            let mut text = String::from("l\tC(n,l)\tdimension\n");
            for l in 0..=n / 2 {
                text += &format!("{l}\t{}\t{}\n", binomial(n, l), dimension(n, l)?);
            }
            emit(None, &text)
        }
        Command::Chartable { n, max_l, out } => {
            let table = character_table(n, max_l.unwrap_or(n / 2))?;
            emit(out.as_deref(), &table.to_csv())
        }
        Command::Decompose { n, m, input, out } => {
            let text = read(&input)?;
            let h = parse_module_vector(&text).map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
            if h.n() != n || h.l() != m {
                return Err(Failure::Usage(format!(
                    "{} holds a vector with n = {}, l = {}, but --n {n} --m {m} was given",
                    input.display(),
                    h.n(),
                    h.l()
                )));
            }
            emit(out.as_deref(), &write_decomposition(&decompose(&h)?))
        }
        Command::Reconstruct { input, out } => {
            let text = read(&input)?;
            let d = parse_decomposition(&text).map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
            emit(out.as_deref(), &write_module_vector(&d.reconstruct()))
        }
        Command::Specht { n, l, out } => {
            fs::create_dir_all(&out).map_err(|e| Failure::Usage(format!("{}: {e}", out.display())))?;
            let tableaux = standard_tableaux(n, l)?;
            for t in &tableaux {
                let path = out.join(format!("{}.txt", t.tabloid().bottom_block()));
                let body = format!("# polytabloid of {t}\n{}", write_module_vector(&polytabloid(t)));
                emit(Some(&path), &body)?;
            }
            println!("wrote {} basis vectors of shape ({}, {l}) to {}", tableaux.len(), n - l, out.display());
            Ok(())
        }
        Command::Verify {
            n,
            m,
            seed,
            trials,
            suite,
            report,
        } => {
            let cfg = RunConfig::new(n, m, seed, trials)?.with_ceiling(cli.ceiling);
            let suite: Suite = suite.parse()?;
            let reports = run_suites(&cfg, suite)?;
            for r in &reports {
                print!("{}", r.render());
            }
            if let Some(path) = report {
                let json = serde_json::to_string_pretty(&reports)?;
                emit(Some(&path), &(json + "\n"))?;
            }
            if reports.iter().all(|r| r.passed()) {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Bench { n, m, seed } => {
            let b = bench(n, m, seed, cli.ceiling)?;
            println!("n = {n}, m = {m}, subsets = {}", binomial(n, m));
            println!("kernel route: {:.6} s", b.kernel.as_secs_f64());
            match b.oracle {
                Some(o) => println!("oracle route: {:.6} s", o.as_secs_f64()),
                None => println!("oracle route: skipped (n = {n} exceeds ceiling {})", cli.ceiling),
            }
            if b.agree == Some(false) {
                eprintln!("error: the two routes disagree");
                return Err(Failure::Verification);
            }
            match b.kernel_faster() {
                Some(true) => {
                    println!("kernel route faster: yes");
                    Ok(())
                }
                Some(false) => {
                    eprintln!("error: kernel route was not faster than the oracle route");
                    Err(Failure::Verification)
                }
                None => Ok(()),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
