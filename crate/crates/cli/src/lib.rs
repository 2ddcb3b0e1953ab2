//! Command-line front end for `qzeno`.
//!
//! Every subcommand resolves a flat configuration (defaults, then
//! `--config`, then flags), validates it, runs, and emits a table as CSV or
//! JSON. CSV output embeds the resolved configuration so it can be passed
//! back through `--config`.

pub mod commands;
pub mod config;
pub mod error;
pub mod table;

use clap::{Args, Parser, Subcommand, ValueEnum};
use commands::Command;
use config::RunConfig;
use error::{CliError, CliResult};
use std::path::PathBuf;
use table::ResultTable;

/// Environment variable naming a directory for output files when `--out`
/// is not given.
pub const OUTPUT_DIR_ENV: &str = "QZENO_OUTPUT_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Flat key=value file; an earlier CSV output also works.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output file. Defaults to $QZENO_OUTPUT_DIR/<command>.<ext>, else stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Evaluate independent rows on all cores. Output is unchanged.
    #[arg(long)]
    pub parallel: bool,
}

macro_rules! flags {
    ($(#[$doc:meta])* $name:ident { $($field:ident),* $(,)? }) => {
        $(#[$doc])*
        #[derive(Debug, Clone, Args)]
        pub struct $name {
            #[command(flatten)]
            pub common: Common,
            $(
                #[arg(long, allow_hyphen_values = true)]
                pub $field: Option<String>,
            )*
        }

        impl $name {
            pub fn overrides(&self) -> Vec<(String, String)> {
                let mut out = Vec::new();
                $(
                    if let Some(v) = &self.$field {
                        out.push((stringify!($field).to_string(), v.clone()));
                    }
                )*
                out
            }
        }
    };
}

flags!(
    /// Two-level system: decomposition terms and decoherence functional.
    TwoStateArgs { omega, hbar, t_list, n_zeno, n_quad, unity_n }
);
flags!(
    /// Survival under n projections and the approach to the Zeno limit.
    ZenoArgs { omega, hbar, t, n_list }
);
flags!(
    /// Convergence ladder of the path decomposition residual.
    PdxArgs {
        system, t, hbar, omega, n_zeno, quad_ladder, quad_divisor, beta, compare_beta, length,
        grid_ladder, x0, p0, sigma, mass,
    }
);
flags!(
    /// Consistency of same-side versus crossing histories on the line.
    HistoriesArgs { x0, p0, sigma, family, beta, length, n, t_list, mass, hbar, tol }
);
flags!(
    /// Kijowski arrival-time density and probability current at the origin.
    ArrivalArgs {
        x0, p0, sigma, mass, hbar, p_max, p_points, t_centre, half_width, dt, max_doublings, t0, mirror,
    }
);

#[derive(Debug, Clone, Subcommand)]
pub enum Commands {
    Twostate(TwoStateArgs),
    ZenoConverge(ZenoArgs),
    PdxVerify(PdxArgs),
    Histories(HistoriesArgs),
    Arrival(ArrivalArgs),
}

#[derive(Debug, Clone, Parser)]
#[command(name = "qzeno", version, about = "Restricted propagators, decoherence functionals and arrival times")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Commands,
}

impl Commands {
    fn parts(&self) -> (Command, &Common, Vec<(String, String)>) {
        match self {
            Commands::Twostate(a) => (Command::TwoState, &a.common, a.overrides()),
            Commands::ZenoConverge(a) => (Command::ZenoConverge, &a.common, a.overrides()),
            Commands::PdxVerify(a) => (Command::PdxVerify, &a.common, a.overrides()),
            Commands::Histories(a) => (Command::Histories, &a.common, a.overrides()),
            Commands::Arrival(a) => (Command::Arrival, &a.common, a.overrides()),
        }
    }
}

/// Resolves the configuration and runs the command.
pub fn execute(cli: &Cli) -> CliResult<(ResultTable, Common)> {
    let (command, common, overrides) = cli.command.parts();
    let mut cfg = RunConfig::resolve(command.name(), command.schema(), common.config.as_deref(), &overrides)?;
    let table = command.run(&mut cfg, common.parallel)?;
    Ok((table, common.clone()))
}

pub fn render(table: &ResultTable, format: Format) -> String {
    match format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    }
}

/// Where output goes: `--out`, else the output directory variable, else
/// `None` for stdout.
pub fn output_path(common: &Common, command: &str) -> Option<PathBuf> {
    if let Some(p) = &common.out {
        return Some(p.clone());
    }
    let dir = std::env::var_os(OUTPUT_DIR_ENV).filter(|d| !d.is_empty())?;
    Some(PathBuf::from(dir).join(format!("{command}.{}", common.format.extension())))
}

pub fn write_output(text: &str, path: Option<PathBuf>) -> CliResult<()> {
    match path {
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Config(format!("cannot write to stdout: {e}")))
        }
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir)
                    .map_err(|e| CliError::Config(format!("cannot create {}: {e}", dir.display())))?;
            }
            std::fs::write(&p, text).map_err(|e| CliError::Config(format!("cannot write {}: {e}", p.display())))
        }
    }
}
