//! Kijowski arrival-time density at the origin and the probability current,
//! on a window widened until the captured probability settles.

use super::{positive, require};
use crate::config::{field, Field, Kind, RunConfig};
use crate::error::{CliError, CliResult};
use crate::table::ResultTable;
use qzeno::arrival::{
    arrival_moments, classical_arrival, converged_window, current_density_at_origin, l1_distance,
    MomentumState,
};
use qzeno::tolerance;

pub static SCHEMA: &[Field] = &[
    field("x0", "-10", Kind::Float),
    field("p0", "2", Kind::Float),
    field("sigma", "2", Kind::Float),
    field("mass", "1", Kind::Float),
    field("hbar", "1", Kind::Float),
    field("p_max", "auto", Kind::FloatOrAuto),
    field("p_points", "2000", Kind::Int),
    field("t_centre", "auto", Kind::FloatOrAuto),
    field("half_width", "5", Kind::Float),
    field("dt", "0.01", Kind::Float),
    field("max_doublings", "4", Kind::Int),
    field("t0", "0", Kind::Float),
    field("mirror", "false", Kind::Bool),
];

pub fn run(cfg: &mut RunConfig, _parallel: bool) -> CliResult<ResultTable> {
    positive(cfg, &["sigma", "mass", "hbar", "half_width", "dt"])?;
    let (x0, p0, sigma, mass, hbar) =
        (cfg.f64("x0"), cfg.f64("p0"), cfg.f64("sigma"), cfg.f64("mass"), cfg.f64("hbar"));
    require(p0 != 0.0, "p0 must be non-zero so the packet moves towards the origin")?;
    require(x0 * p0 < 0.0, format!("a packet at x0 = {x0} with p0 = {p0} moves away from the origin"))?;
    if cfg.is_auto("p_max") {
        // Twelve momentum standard deviations beyond the mean.
        let p_max = p0.abs() + 12.0 * hbar / (2.0 * sigma);
        cfg.set("p_max", &p_max.to_string())?;
    }
    if cfg.is_auto("t_centre") {
        cfg.set("t_centre", &classical_arrival(x0, p0, mass).to_string())?;
    }
    let half = cfg.usize("p_points");
    let mut state = MomentumState::gaussian(x0, p0, sigma, cfg.f64("p_max"), half, mass, hbar)?;
    if cfg.bool("mirror") {
        state = state.mirrored();
    }
    state = state.time_translated(cfg.f64("t0"));
    let centre = cfg.f64("t_centre") + cfg.f64("t0");

    let dist = converged_window(&state, centre, cfg.f64("half_width"), cfg.f64("dt"), cfg.usize("max_doublings"))?;
    let current = current_density_at_origin(&state, &dist.t)?;
    let mean = arrival_moments(&dist, 1).map_err(|e| CliError::Convergence(e.to_string()))?;
    let variance = arrival_moments(&dist, 2)?;

    let mut table = ResultTable::new(cfg.clone(), &["t", "pi_k", "right_part", "left_part", "current"]);
    table.tolerance("window_mass_change", tolerance::WINDOW_MASS_CHANGE);
    table.tolerance("min_captured_mass", tolerance::MIN_CAPTURED_MASS);
    for (k, j) in current.iter().enumerate() {
        table.push(vec![
            dist.t[k].into(),
            dist.density[k].into(),
            dist.right_part[k].into(),
            dist.left_part[k].into(),
            (*j).into(),
        ]);
    }
    table.note("captured_mass", dist.captured_mass());
    table.note("mean", mean);
    table.note("variance", variance);
    table.note("peak_time", dist.peak_time());
    table.note("min_density", dist.min_density());
    table.note("min_current", current.iter().cloned().fold(f64::INFINITY, f64::min));
    table.note("l1_density_current", l1_distance(&dist.t, &dist.density, &current));
    Ok(table)
}
