use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use majority::harness::{
    emit_figure, read_csv, render_csv, render_json, run_experiment, validate_report,
    ExperimentConfig, FigureKind, ReportFormat, Thresholds,
};
use majority::predictors::{
    expected_zeros_exact, majority_probability, majority_proportion_rho, predict,
};
use majority::streams::{brute_force_majority, enumerate_streams};
use majority::{run, Algorithm, Error};

#[derive(Parser)]
#[command(name = "majority", version, about = "Comparison counts of majority algorithms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expected comparisons for one algorithm at (m, n).
    Predict {
        #[arg(long)]
        algorithm: Algorithm,
        #[arg(long, alias = "colors")]
        colours: u32,
        #[arg(long)]
        length: u64,
        /// Print the prediction as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Run a Monte-Carlo experiment grid.
    Run(RunArgs),
    /// Check a report against its predictions.
    Validate {
        #[arg(long = "in")]
        input: PathBuf,
        /// Largest allowed mean relative error per group, in percent.
        #[arg(long)]
        max_rel_err: Option<f64>,
        /// Smallest allowed fraction of cells whose CI covers the prediction.
        #[arg(long)]
        min_ci_frac: Option<f64>,
        /// Ignore cells shorter than this.
        #[arg(long)]
        min_length: Option<u64>,
    },
    /// Exact quantities computed without sampling.
    Oracle {
        #[arg(value_enum)]
        quantity: OracleKind,
        #[arg(long, alias = "colors")]
        colours: u32,
        #[arg(long)]
        length: u64,
        /// With `enumerate`: run every algorithm on every stream against brute force.
        #[arg(long)]
        check_all: bool,
    },
    /// Draw a report as an SVG (plus a CSV of the plotted points).
    Figures {
        #[arg(long = "in")]
        input: PathBuf,
        /// per_algorithm, cross_algorithm or by_colours.
        #[arg(long)]
        kind: FigureKind,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Flat `key = value` file; flags given alongside override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Comma-separated algorithm names.
    #[arg(long)]
    algorithms: Option<String>,
    /// Comma-separated colour counts.
    #[arg(long, alias = "colors")]
    colours: Option<String>,
    /// start:stop:step, inclusive.
    #[arg(long)]
    lengths: Option<String>,
    #[arg(long)]
    trials: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    /// Report path; the report goes to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    format: Option<String>,
    /// Normal quantile for the confidence interval.
    #[arg(long)]
    z: Option<String>,
    /// Worker threads (1 = sequential, 0 = all cores).
    #[arg(long)]
    workers: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    Zeros,
    Enumerate,
    Rho,
    Pmaj,
}

enum Failure {
    Validation,
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation) => ExitCode::from(1),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::Io { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn dispatch(command: Command) -> Result<(), Failure> {
    match command {
        Command::Predict { algorithm, colours, length, json } => {
            let p = predict(algorithm, length, colours)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&p).expect("prediction serializes"));
            } else {
                println!("{} m={} n={}", p.algorithm, p.m, p.n);
                for (name, v) in p.terms.iter().chain(&p.parameters) {
                    println!("  {name:<18} {v:.6}");
                }
                println!("  {:<18} {:.6}", "expected_total", p.expected_total);
            }
        }
        Command::Run(args) => run_grid(args)?,
        Command::Validate { input, max_rel_err, min_ci_frac, min_length } => {
            let report = read_csv(&input)?;
            let d = Thresholds::default();
            let thresholds = Thresholds {
                max_rel_err_pct: max_rel_err.unwrap_or(d.max_rel_err_pct),
                min_ci_fraction: min_ci_frac.unwrap_or(d.min_ci_fraction),
                min_length: min_length.unwrap_or(d.min_length),
            };
            let verdict = validate_report(&report, thresholds);
            println!("{verdict}");
            if !verdict.passed {
                return Err(Failure::Validation);
            }
        }
        Command::Oracle { quantity, colours, length, check_all } => {
            oracle(quantity, colours, length, check_all)?
        }
        Command::Figures { input, kind, out } => {
            let report = read_csv(&input)?;
            let sidecar = emit_figure(&report, kind, &out)?;
            println!("wrote {} and {}", out.display(), sidecar.display());
        }
    }
    Ok(())
}

fn run_grid(args: RunArgs) -> Result<(), Error> {
    let mut cfg = match &args.config {
        Some(path) => ExperimentConfig::load(path)?,
        None => ExperimentConfig::default(),
    };
    let overrides = [
        ("algorithms", args.algorithms),
        ("colours", args.colours),
        ("lengths", args.lengths),
        ("trials", args.trials),
        ("seed", args.seed),
        ("format", args.format),
        ("z", args.z),
        ("workers", args.workers),
    ];
    for (key, value) in overrides {
        if let Some(v) = value {
            cfg.set(key, &v)?;
        }
    }
    if let Some(out) = args.out {
        cfg.output_path = Some(out);
    }
    let report = run_experiment(&cfg)?;
    match &cfg.output_path {
        Some(path) => eprintln!("wrote {} rows to {}", report.rows.len(), path.display()),
        None => match cfg.format {
            ReportFormat::Csv => print!("{}", render_csv(&report)),
            ReportFormat::Json => println!("{}", render_json(&report)),
        },
    }
    Ok(())
}

fn oracle(kind: OracleKind, m: u32, n: u64, check_all: bool) -> Result<(), Failure> {
    match kind {
        OracleKind::Zeros => println!("{:.12}", expected_zeros_exact(n, m)?),
        OracleKind::Rho => println!("{:.12}", majority_proportion_rho(n, m)?),
        OracleKind::Pmaj => println!("{:.12}", majority_probability(n, m)?),
        OracleKind::Enumerate => {
            let len = usize::try_from(n).map_err(|_| Error::InvalidArgument("length too large".into()))?;
            let mut total = 0u64;
            let mut with_majority = 0u64;
            let mut mismatches = 0u64;
            let mut worst = [0u64; 3];
            for stream in enumerate_streams(len, m)? {
                total += 1;
                let truth = brute_force_majority(&stream);
                with_majority += u64::from(truth.colour().is_some());
                if check_all {
                    for (slot, a) in Algorithm::ALL.into_iter().enumerate() {
                        let r = run(a, &stream);
                        mismatches += u64::from(r.outcome != truth);
                        worst[slot] = worst[slot].max(r.tally.total());
                    }
                }
            }
            println!("streams {total}, with majority {with_majority}");
            if check_all {
                for (slot, a) in Algorithm::ALL.into_iter().enumerate() {
                    println!("{a}: max comparisons {}", worst[slot]);
                }
                println!("mismatches {mismatches}");
                if mismatches > 0 {
                    return Err(Failure::Validation);
                }
            }
        }
    }
    Ok(())
}
