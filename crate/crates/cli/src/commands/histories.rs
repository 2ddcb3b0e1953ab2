//! Consistency of "stayed on one side" versus "crossed the origin" for a
//! packet on the line, with boundary-condition persistence diagnostics.

use super::{positive, require};
use crate::config::{field, Field, Kind, RunConfig};
use crate::error::CliResult;
use crate::table::{ResultTable, Value};
use qzeno::halfline::{GaussianPacket, SpatialGrid};
use qzeno::histories::{beta_condition_scan, reflection_safe_horizon, FamilyKind, StateFamily};

pub static SCHEMA: &[Field] = &[
    field("x0", "-5", Kind::Float),
    field("p0", "2", Kind::Float),
    field("sigma", "1", Kind::Float),
    field("family", "plain", Kind::Choice(&["plain", "odd", "even", "corrected"])),
    field("beta", "0", Kind::Boundary),
    field("length", "20", Kind::Float),
    field("n", "4096", Kind::Int),
    field("t_list", "0.5,1,1.5,2,2.5,3", Kind::FloatList),
    field("mass", "1", Kind::Float),
    field("hbar", "1", Kind::Float),
    field("tol", "0.001", Kind::Float),
];

const COLUMNS: &[&str] = &[
    "t",
    "rejected",
    "p_same",
    "p_cross",
    "re_d12",
    "im_d12",
    "consistent",
    "initial_residual",
    "residual",
    "residual_right",
    "residual_left",
    "flux",
    "direct_sum_distance",
    "coarse_grid",
];

pub fn run(cfg: &mut RunConfig, parallel: bool) -> CliResult<ResultTable> {
    positive(cfg, &["sigma", "length", "mass", "hbar", "tol"])?;
    let n = cfg.usize("n");
    require(n >= 16 && n.is_multiple_of(2), format!("n must be even and >= 16, got {n}"))?;
    let times = cfg.f64_list("t_list");
    require(times.iter().all(|&t| t >= 0.0), "every t in t_list must be >= 0")?;
    let kind = match cfg.raw("family") {
        "odd" => FamilyKind::Odd,
        "even" => FamilyKind::Even,
        "corrected" => FamilyKind::Corrected,
        _ => FamilyKind::Plain,
    };
    let packet = GaussianPacket::new(cfg.f64("x0"), cfg.f64("p0"), cfg.f64("sigma"))?;
    let family = StateFamily {
        kind,
        packet,
        grid: SpatialGrid::symmetric(cfg.f64("length"), n)?,
        mass: cfg.f64("mass"),
        hbar: cfg.f64("hbar"),
    };
    let rows = beta_condition_scan(&family, &[cfg.boundary("beta")], &times, cfg.f64("tol"), parallel)?;

    let mut table = ResultTable::new(cfg.clone(), COLUMNS);
    table.tolerance("consistency", cfg.f64("tol"));
    let nan = Value::Float(f64::NAN);
    let (mut any_inconsistent, mut all_consistent) = (false, true);
    for r in &rows {
        let v = r.verdict.as_ref();
        if let Some(v) = v {
            any_inconsistent |= !v.consistent;
            all_consistent &= v.consistent;
        }
        table.push(vec![
            r.t.into(),
            r.rejected().into(),
            v.map_or(nan.clone(), |v| v.p_same.into()),
            v.map_or(nan.clone(), |v| v.p_cross.into()),
            v.map_or(nan.clone(), |v| v.re_d12.into()),
            v.map_or(nan.clone(), |v| v.im_d12.into()),
            v.map_or(Value::Text("rejected".into()), |v| v.consistent.into()),
            r.initial_residual.into(),
            r.residual.into(),
            r.residual_right.into(),
            r.residual_left.into(),
            r.flux.into(),
            r.direct_sum_distance.into(),
            r.coarse_grid.into(),
        ]);
    }
    table.note("any_inconsistent", any_inconsistent);
    table.note("all_consistent", all_consistent && rows.iter().all(|r| !r.rejected()));
    table.note(
        "reflection_safe_horizon",
        reflection_safe_horizon(&packet, cfg.f64("length"), cfg.f64("mass"), cfg.f64("hbar")),
    );
    Ok(table)
}
