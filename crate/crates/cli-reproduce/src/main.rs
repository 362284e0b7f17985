//! `reproduce`: computes the data behind every numerical figure as CSV.
//!
//! Each subcommand writes its main table to `--out` and any companion
//! tables next to it as `<stem>_<name>.csv`; `figure N` writes the preset
//! bundle `figN_<name>.csv` into the `--out` directory.  The worker count
//! is `--threads`, else the `REPRODUCE_THREADS` environment variable, else
//! the number of cores.

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use cli_reproduce::{
    bundle_paths, command_paths, describe, excitation_model, excitations, figure, linspace, pseudovacuum, series,
    solve, trajectory, write_all, x_of_phi, ConfigName, ExcitationMethod, ExcitedState, Table, TrajectoryName, FIGURES,
};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "reproduce",
    version,
    about = "Energies of twisted XXX chains: finite-length solutions, series and excitations"
)]
struct Cli {
    /// Worker threads (overrides REPRODUCE_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PhiGrid {
    /// Smallest twist φ.
    #[arg(long, default_value_t = 0.0)]
    phi_min: f64,
    /// Largest twist φ.
    #[arg(long, default_value_t = 2.0)]
    phi_max: f64,
    /// Number of grid points.
    #[arg(long, default_value_t = 21)]
    phi_steps: usize,
}

impl PhiGrid {
    fn points(&self) -> Result<Vec<f64>> {
        linspace(self.phi_min, self.phi_max, self.phi_steps)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Finite-length energies from the twisted Bethe equations.
    Solve {
        #[arg(long = "L")]
        length: usize,
        #[arg(long)]
        m: f64,
        #[arg(long, value_enum, default_value = "standard")]
        config: ConfigName,
        #[command(flatten)]
        grid: PhiGrid,
        #[arg(long)]
        out: PathBuf,
    },
    /// Large-twist series of the energy in e^{−2φ}.
    Series {
        #[arg(long)]
        m: f64,
        #[arg(long, value_enum, default_value = "standard")]
        config: ConfigName,
        /// Highest power of e^{−2φ}.
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[command(flatten)]
        grid: PhiGrid,
        #[arg(long)]
        out: PathBuf,
    },
    /// Taylor coefficients in m + 1 about the second pseudo-vacuum.
    Pseudovacuum {
        #[arg(long, default_value_t = 12)]
        order: usize,
        #[command(flatten)]
        grid: PhiGrid,
        #[arg(long)]
        out: PathBuf,
    },
    /// Energy along a trajectory of fillings at fixed twist.
    Trajectory {
        #[arg(long, value_enum, default_value = "traj1")]
        trajectory: TrajectoryName,
        /// Twist φ.
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
        /// Highest power of ξ (default: the trajectory's default depth).
        #[arg(long)]
        order: Option<usize>,
        /// Points ξ for partial sums and fits.
        #[arg(long, value_delimiter = ',', default_value = "0.5")]
        xi: Vec<f64>,
        /// Smallest number of terms entering each extrapolation.
        #[arg(long, value_delimiter = ',', default_value = "5,6")]
        kmin: Vec<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Single-root excitation curve ∂_ηF(z) and paired particle–hole gaps.
    Excitations {
        #[arg(long, value_enum, default_value = "ground")]
        state: ExcitedState,
        #[arg(long, default_value_t = 1.5)]
        phi: f64,
        #[arg(long, value_enum, default_value = "auto")]
        method: ExcitationMethod,
        /// Series depth (large-twist order, or trajectory terms).
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, default_value_t = -0.5)]
        z_min: f64,
        #[arg(long, default_value_t = 0.5)]
        z_max: f64,
        #[arg(long, default_value_t = 101)]
        z_steps: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Data preset of one figure, written into a directory.
    Figure {
        /// Figure number.
        number: usize,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Lists the figure presets.
    Figures,
}

fn thread_count(flag: Option<usize>) -> Result<Option<usize>> {
    if let Some(n) = flag {
        return Ok(Some(n));
    }
    match std::env::var("REPRODUCE_THREADS") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .with_context(|| format!("REPRODUCE_THREADS must be a positive integer, got {v:?}")),
        Err(_) => Ok(None),
    }
}

fn emit(tables: Vec<Table>, primary: &std::path::Path) -> Result<()> {
    let paths = command_paths(primary, &tables);
    write_all(&tables, &paths)?;
    for p in &paths {
        eprintln!("wrote {}", p.display());
    }
    Ok(())
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Solve {
            length,
            m,
            config,
            grid,
            out,
        } => emit(vec![solve(config, m, length, &grid.points()?)?], &out),
        Command::Series {
            m,
            config,
            order,
            grid,
            out,
        } => emit(series(config, m, order, &grid.points()?)?, &out),
        Command::Pseudovacuum { order, grid, out } => emit(pseudovacuum(&grid.points()?, order)?, &out),
        Command::Trajectory {
            trajectory: name,
            phi,
            order,
            xi,
            kmin,
            out,
        } => emit(trajectory(name, x_of_phi(phi), order, &xi, &kmin)?, &out),
        Command::Excitations {
            state,
            phi,
            method,
            order,
            z_min,
            z_max,
            z_steps,
            out,
        } => {
            let x = x_of_phi(phi);
            let model = excitation_model(state, x, method, order)?;
            emit(excitations(&model, x, &linspace(z_min, z_max, z_steps)?)?, &out)
        }
        Command::Figure { number, out } => {
            let tables = figure(number)?;
            std::fs::create_dir_all(&out).with_context(|| format!("creating {}", out.display()))?;
            let paths = bundle_paths(&out, &format!("fig{number}"), &tables);
            write_all(&tables, &paths)?;
            for p in &paths {
                eprintln!("wrote {}", p.display());
            }
            Ok(())
        }
        Command::Figures => {
            for n in FIGURES {
                println!("{n:>2}  {}", describe(n).unwrap_or_default());
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = (|| -> Result<()> {
        let mut builder = rayon::ThreadPoolBuilder::new();
        match thread_count(cli.threads)? {
            Some(0) => bail!("the thread count must be positive"),
            Some(n) => builder = builder.num_threads(n),
            None => {}
        }
        let pool = builder.build().context("starting the worker pool")?;
        pool.install(|| run(cli.command))
    })();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
