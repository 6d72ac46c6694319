use clap::{Parser, Subcommand};
use entlaser::cli::{
    render_svg, run_evolve, run_fig2, run_oracle_check, run_sweep, run_thresholds, OracleCheckOptions,
    OracleSuite, ScenarioConfig, Series, SweepConfig,
};
use entlaser::{Error, Tolerances};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "entlaser", version, about = "Polarization-entangled light: Gaussian simulation and Fock-space checks")]
struct Cli {
    /// RK4 step, replacing the one in the config.
    #[arg(long, global = true)]
    step: Option<f64>,
    /// Largest truncated Fock dimension the oracle may build.
    #[arg(long, global = true)]
    max_fock_dim: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integrate one scenario and write its time series.
    Evolve {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Also plot every column against t.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        log_y: bool,
    },
    /// Run a Cartesian-product parameter sweep.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        workers: Option<usize>,
        /// Overrides the budget in the config.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Run property suites against the Fock-space oracle.
    OracleCheck {
        /// engine_vs_oracle, separability, j_bound, loss_law or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        cutoff: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        tau: Option<f64>,
    },
    /// Print the imperfection tolerances for a target photon number.
    Thresholds {
        #[arg(long)]
        n: f64,
        #[arg(long, default_value_t = 1.0)]
        kappa: f64,
        #[arg(long)]
        csv: bool,
    },
    /// Reproduce the three loss-imbalance curves.
    Fig2 {
        #[arg(long)]
        out_dir: PathBuf,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Numerical(_) => 2,
        _ => 1,
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<u8, Error> {
    let mut tol = Tolerances::default();
    if let Some(d) = cli.max_fock_dim {
        tol.max_fock_dim = d;
    }
    let with_step = |mut c: ScenarioConfig| {
        if let Some(s) = cli.step {
            c.step = s;
        }
        c
    };
    match cli.command {
        Command::Evolve { config, out, svg, log_y } => {
            let text = read(&config)?;
            let scenario = with_step(ScenarioConfig::from_json(&text)?);
            scenario.validate()?;
            let ts = run_evolve(&scenario, &tol)?;
            std::fs::write(&out, ts.to_csv_string())?;
            if let Some(path) = svg {
                let series: Vec<Series> = ts
                    .columns
                    .iter()
                    .map(|(name, col)| Series { label: name, x: &ts.times, y: col })
                    .collect();
                std::fs::write(path, render_svg("entlaser evolve", "t (passes)", "value", &series, log_y))?;
            }
        }
        Command::Sweep { config, out, workers, budget } => {
            let text = read(&config)?;
            let mut sweep = SweepConfig::from_json(&text)?;
            sweep.base = with_step(sweep.base);
            if budget.is_some() {
                sweep.budget = budget;
            }
            std::fs::write(&out, run_sweep(&sweep, workers, &tol)?.to_csv_string())?;
        }
        Command::OracleCheck { suite, seed, cutoff, samples, tau } => {
            let suite = OracleSuite::parse(&suite)
                .ok_or_else(|| Error::Config(format!("unknown suite {suite:?}")))?;
            let report = run_oracle_check(suite, &OracleCheckOptions { seed, cutoff, samples, tau }, &tol)?;
            print!("{report}");
            if !report.passed() {
                return Ok(3);
            }
        }
        Command::Thresholds { n, kappa, csv } => {
            let (_, text, table) = run_thresholds(n, kappa)?;
            print!("{}", if csv { table } else { text });
        }
        Command::Fig2 { out_dir } => {
            for file in run_fig2(Some(&out_dir), &tol)?.files {
                println!("{}", file.display());
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
