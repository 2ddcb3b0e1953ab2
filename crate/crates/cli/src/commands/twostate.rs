//! Two-level system `H = ħωσ₁`, `P = |↑⟩⟨↑|`: numerical decomposition terms
//! and decoherence functional against their closed forms.

use super::{map_rows, positive, require};
use crate::config::{field, Field, Kind, RunConfig};
use crate::error::CliResult;
use crate::table::{ResultTable, Value};
use qzeno::qcore::{pdx_assemble, zeno_product, decomposition_of_unity_residual, ZenoSchedule};
use qzeno::{decoherence_functional, TwoStateSystem};
use qzeno::tolerance;

pub static SCHEMA: &[Field] = &[
    field("omega", "1", Kind::Float),
    field("hbar", "1", Kind::Float),
    field("t_list", "0,0.5,1,1.5707963267948966,2,3.141592653589793", Kind::FloatList),
    field("n_zeno", "4096", Kind::Int),
    field("n_quad", "201", Kind::Int),
    field("unity_n", "16", Kind::Int),
];

const COLUMNS: &[&str] = &[
    "t",
    "evolution_err",
    "boundary_err",
    "crossing_err",
    "restricted_err",
    "pdx_residual",
    "unity_residual",
    "zeno_product_err",
    "p_same",
    "p_cross",
    "re_d12",
    "im_d12",
    "d_sum",
    "closed_p_cross",
    "closed_re_d12",
    "consistent",
];

pub fn run(cfg: &mut RunConfig, parallel: bool) -> CliResult<ResultTable> {
    positive(cfg, &["omega", "hbar"])?;
    let times = cfg.f64_list("t_list");
    require(times.iter().all(|&t| t >= 0.0), "every t in t_list must be >= 0")?;
    let n_zeno = cfg.usize("n_zeno") as u64;
    let n_quad = cfg.usize("n_quad");
    let unity_n = cfg.usize("unity_n") as u64;
    require(n_zeno >= 1, "n_zeno must be >= 1")?;
    require(n_quad >= 3 && n_quad % 2 == 1, "n_quad must be odd and >= 3")?;

    let sys = TwoStateSystem::with_hbar(cfg.f64("omega"), cfg.f64("hbar"));
    let h = sys.hamiltonian();
    let (p, q) = (sys.p(), sys.q());
    let rows = map_rows(&times, parallel, |&t| -> CliResult<Vec<Value>> {
        let exact = sys.evolution(t);
        let terms = pdx_assemble(&h, &p, t, n_zeno, n_quad)?;
        let zp = zeno_product(&h, &q, ZenoSchedule::new(t, n_zeno)?)?;
        let unity = decomposition_of_unity_residual(&h, &p, ZenoSchedule::new(t, unity_n)?)?;
        let d = decoherence_functional(&h, &q, &sys.down_state(), t, n_zeno)?;
        let (_, closed_cross, closed_d12) = sys.decoherence(t);
        Ok(vec![
            t.into(),
            h.evolve(t).distance(&exact).into(),
            terms.boundary.distance(&sys.boundary_term(t)).into(),
            terms.crossing.distance(&sys.crossing_term(t)).into(),
            terms.restricted.distance(&q).into(),
            terms.residual(&exact).into(),
            unity.into(),
            zp.distance(&sys.zeno_product(t, n_zeno)).into(),
            d.probability(0).into(),
            d.probability(1).into(),
            d.off_diagonal().re.into(),
            d.off_diagonal().im.into(),
            d.total().re.into(),
            closed_cross.into(),
            closed_d12.into(),
            d.is_consistent(tolerance::CONSISTENCY_ALGEBRAIC).into(),
        ])
    })?;
    let mut table = ResultTable::new(cfg.clone(), COLUMNS);
    table.tolerance("algebraic", tolerance::ALGEBRAIC);
    table.tolerance("consistency", tolerance::CONSISTENCY_ALGEBRAIC);
    for r in rows {
        table.push(r);
    }
    let worst = |name: &str| {
        table.column(name).unwrap().iter().filter_map(|v| v.as_f64()).fold(0.0, f64::max)
    };
    let max_res = worst("pdx_residual");
    let max_unity = worst("unity_residual");
    table.note("max_pdx_residual", max_res);
    table.note("max_unity_residual", max_unity);
    Ok(table)
}
