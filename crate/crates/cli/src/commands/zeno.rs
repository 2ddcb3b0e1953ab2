//! Survival of `|↓⟩` under `n` equally spaced projections, and the `1/n`
//! approach to the Zeno limit.

use super::{map_rows, positive, require};
use crate::config::{field, Field, Kind, RunConfig};
use crate::error::CliResult;
use crate::table::{ResultTable, Value};
use qzeno::qcore::{zeno_product, ZenoSchedule};
use qzeno::TwoStateSystem;

pub static SCHEMA: &[Field] = &[
    field("omega", "1", Kind::Float),
    field("hbar", "1", Kind::Float),
    field("t", "1.5707963267948966", Kind::Float),
    field("n_list", "1,2,10,100,1000,10000,100000", Kind::IntList),
];

const COLUMNS: &[&str] = &[
    "n",
    "survival",
    "closed_form",
    "error",
    "error_times_n",
    "bound",
    "within_bound",
    "operator_distance",
];

pub fn run(cfg: &mut RunConfig, parallel: bool) -> CliResult<ResultTable> {
    positive(cfg, &["omega", "hbar"])?;
    let t = cfg.f64("t");
    require(t >= 0.0, format!("t must be >= 0, got {t}"))?;
    let ns = cfg.usize_list("n_list");
    require(ns.iter().all(|&n| n >= 1), "every n in n_list must be >= 1")?;
    let sys = TwoStateSystem::with_hbar(cfg.f64("omega"), cfg.f64("hbar"));
    let h = sys.hamiltonian();
    let q = sys.q();
    let wt = sys.omega * t;
    let rows = map_rows(&ns, parallel, |&n| -> CliResult<Vec<Value>> {
        let z = zeno_product(&h, &q, ZenoSchedule::new(t, n as u64)?)?;
        let survival = z.get(1, 1).norm_sqr();
        let error = 1.0 - survival;
        let bound = wt * wt / n as f64;
        Ok(vec![
            n.into(),
            survival.into(),
            sys.survival(t, n as u64).into(),
            error.into(),
            (error * n as f64).into(),
            bound.into(),
            (error <= bound * (1.0 + 1e-12)).into(),
            z.distance(&q).into(),
        ])
    })?;
    let mut table = ResultTable::new(cfg.clone(), COLUMNS);
    for r in rows {
        table.push(r);
    }
    table.note("asymptotic_error_times_n", wt * wt);
    Ok(table)
}
