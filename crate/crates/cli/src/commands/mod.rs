//! One module per subcommand: a parameter schema plus a runner that turns a
//! resolved [`RunConfig`] into a [`ResultTable`].

pub mod arrival;
pub mod histories;
pub mod pdx;
pub mod twostate;
pub mod zeno;

use crate::config::{Field, RunConfig};
use crate::error::{CliError, CliResult};
use crate::table::ResultTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    TwoState,
    ZenoConverge,
    PdxVerify,
    Histories,
    Arrival,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::TwoState => "twostate",
            Command::ZenoConverge => "zeno-converge",
            Command::PdxVerify => "pdx-verify",
            Command::Histories => "histories",
            Command::Arrival => "arrival",
        }
    }

    pub fn schema(self) -> &'static [Field] {
        match self {
            Command::TwoState => twostate::SCHEMA,
            Command::ZenoConverge => zeno::SCHEMA,
            Command::PdxVerify => pdx::SCHEMA,
            Command::Histories => histories::SCHEMA,
            Command::Arrival => arrival::SCHEMA,
        }
    }

    pub fn run(self, cfg: &mut RunConfig, parallel: bool) -> CliResult<ResultTable> {
        match self {
            Command::TwoState => twostate::run(cfg, parallel),
            Command::ZenoConverge => zeno::run(cfg, parallel),
            Command::PdxVerify => pdx::run(cfg, parallel),
            Command::Histories => histories::run(cfg, parallel),
            Command::Arrival => arrival::run(cfg, parallel),
        }
    }
}

pub(crate) fn require(ok: bool, msg: impl Into<String>) -> CliResult<()> {
    if ok {
        Ok(())
    } else {
        Err(CliError::Numeric(msg.into()))
    }
}

pub(crate) fn positive(cfg: &RunConfig, keys: &[&str]) -> CliResult<()> {
    for k in keys {
        let v = cfg.f64(k);
        require(v > 0.0, format!("{k} must be positive, got {v}"))?;
    }
    Ok(())
}

/// Maps `f` over `items`, in parallel when asked. Order is preserved.
pub(crate) fn map_rows<T: Sync, R: Send>(
    items: &[T],
    parallel: bool,
    f: impl Fn(&T) -> CliResult<R> + Sync + Send,
) -> CliResult<Vec<R>> {
    use rayon::prelude::*;
    if parallel {
        items.par_iter().map(f).collect()
    } else {
        items.iter().map(f).collect()
    }
}
