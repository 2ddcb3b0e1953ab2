//! Convergence ladders for the path decomposition residual, either for the
//! two-level system or for a packet on the line with a half-line wall.

use super::{positive, require};
use crate::config::{field, Field, Kind, RunConfig};
use crate::error::{CliError, CliResult};
use crate::table::ResultTable;
use qzeno::halfline::{line_grid, line_pdx, GaussianPacket, HalfLineSystem};
use qzeno::qcore::pdx_assemble;
use qzeno::TwoStateSystem;

pub static SCHEMA: &[Field] = &[
    field("system", "twostate", Kind::Choice(&["twostate", "line"])),
    field("t", "auto", Kind::FloatOrAuto),
    field("hbar", "1", Kind::Float),
    field("omega", "1", Kind::Float),
    field("n_zeno", "4096", Kind::Int),
    field("quad_ladder", "51,101,201", Kind::IntList),
    field("quad_divisor", "5", Kind::Int),
    field("beta", "0", Kind::Boundary),
    field("compare_beta", "neumann", Kind::Boundary),
    field("length", "20", Kind::Float),
    field("grid_ladder", "512,1024,2048", Kind::IntList),
    field("x0", "6", Kind::Float),
    field("p0", "-1.5", Kind::Float),
    field("sigma", "1", Kind::Float),
    field("mass", "1", Kind::Float),
];

/// Least-squares slope of `ln r` against `ln h`.
pub fn fitted_order(steps: &[f64], residuals: &[f64]) -> f64 {
    let pts: Vec<(f64, f64)> = steps
        .iter()
        .zip(residuals)
        .filter(|(_, r)| **r > 0.0)
        .map(|(h, r)| (h.ln(), r.ln()))
        .collect();
    if pts.len() < 2 {
        return f64::NAN;
    }
    let n = pts.len() as f64;
    let (mx, my) = (pts.iter().map(|p| p.0).sum::<f64>() / n, pts.iter().map(|p| p.1).sum::<f64>() / n);
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

pub fn run(cfg: &mut RunConfig, parallel: bool) -> CliResult<ResultTable> {
    positive(cfg, &["hbar", "omega", "length", "sigma", "mass"])?;
    let _ = parallel;
    match cfg.raw("system") {
        "twostate" => two_state(cfg),
        _ => line(cfg),
    }
}

fn resolve_t(cfg: &mut RunConfig, default: f64) -> CliResult<f64> {
    if cfg.is_auto("t") {
        cfg.set("t", &default.to_string())?;
    }
    let t = cfg.f64("t");
    require(t > 0.0, format!("t must be positive, got {t}"))?;
    Ok(t)
}

fn push_ladder(table: &mut ResultTable, steps: &[f64], residuals: &[f64]) {
    let order = fitted_order(steps, residuals);
    let monotone = residuals.windows(2).all(|w| w[1] < w[0]);
    table.note("fitted_order", order);
    table.note("finest_residual", *residuals.last().unwrap());
    table.note("monotone", monotone);
}

fn two_state(cfg: &mut RunConfig) -> CliResult<ResultTable> {
    let t = resolve_t(cfg, std::f64::consts::FRAC_PI_2)?;
    let n_zeno = cfg.usize("n_zeno") as u64;
    require(n_zeno >= 1, "n_zeno must be >= 1")?;
    let sys = TwoStateSystem::with_hbar(cfg.f64("omega"), cfg.f64("hbar"));
    let h = sys.hamiltonian();
    let exact = sys.evolution(t);
    let ladder = cfg.usize_list("quad_ladder");
    require(ladder.iter().all(|&n| n >= 3 && n % 2 == 1), "quad_ladder entries must be odd and >= 3")?;
    let mut table = ResultTable::new(
        cfg.clone(),
        &["level", "n_quad", "step", "residual", "crossing_err", "non_decreasing"],
    );
    let (mut steps, mut res) = (Vec::new(), Vec::new());
    for (level, &nq) in ladder.iter().enumerate() {
        let terms = pdx_assemble(&h, &sys.p(), t, n_zeno, nq)?;
        let r = terms.residual(&exact);
        let step = t / (nq - 1) as f64;
        let flagged = res.last().is_some_and(|&prev| r >= prev);
        table.push(vec![
            level.into(),
            nq.into(),
            step.into(),
            r.into(),
            terms.crossing.distance(&sys.crossing_term(t)).into(),
            flagged.into(),
        ]);
        steps.push(step);
        res.push(r);
    }
    push_ladder(&mut table, &steps, &res);
    Ok(table)
}

fn line(cfg: &mut RunConfig) -> CliResult<ResultTable> {
    let t = resolve_t(cfg, 4.0)?;
    let grids = cfg.usize_list("grid_ladder");
    require(grids.iter().all(|&n| n >= 8), "every grid in grid_ladder needs at least 8 points")?;
    let (length, mass, hbar) = (cfg.f64("length"), cfg.f64("mass"), cfg.f64("hbar"));
    let packet = GaussianPacket::new(cfg.f64("x0"), cfg.f64("p0"), cfg.f64("sigma"))?;
    let divisor = cfg.usize("quad_divisor");
    require(divisor >= 1, "quad_divisor must be >= 1")?;
    let (beta, other) = (cfg.boundary("beta"), cfg.boundary("compare_beta"));
    let mut table = ResultTable::new(
        cfg.clone(),
        &["level", "n_grid", "n_quad", "dx", "residual", "crossing_norm", "beta_difference", "non_decreasing"],
    );
    let (mut steps, mut res) = (Vec::new(), Vec::new());
    for (level, &n) in grids.iter().enumerate() {
        let nq = (n / divisor).max(2);
        let sys = HalfLineSystem::with_units(length, n, beta, mass, hbar)?;
        let alt = HalfLineSystem::with_units(length, n, other, mass, hbar)?;
        let psi = packet.sample(line_grid(&sys), hbar);
        let main = line_pdx(&psi, &sys, t, nq).map_err(precondition)?;
        let cmp = line_pdx(&psi, &alt, t, nq)?;
        let r = main.residual();
        let flagged = res.last().is_some_and(|&prev| r >= prev);
        table.push(vec![
            level.into(),
            n.into(),
            nq.into(),
            sys.dx().into(),
            r.into(),
            main.crossing.norm().into(),
            main.crossing.distance(&cmp.crossing).into(),
            flagged.into(),
        ]);
        steps.push(sys.dx());
        res.push(r);
    }
    push_ladder(&mut table, &steps, &res);
    Ok(table)
}

fn precondition(e: qzeno::Error) -> CliError {
    CliError::Numeric(format!("{e} (the packet must start inside x >= 0)"))
}
