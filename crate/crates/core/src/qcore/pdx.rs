use super::evolution::Hamiltonian;
use super::operator::Operator;
use super::zeno::{restricted_estimate_unchecked, ZenoSchedule};
use crate::error::{argument, Result};
use crate::quadrature::simpson_weights;

/// Richardson levels used when a restricted propagator is needed as a
/// limit rather than at a fixed number of projections.
pub const DEFAULT_RICHARDSON_LEVELS: usize = 3;

/// The three pieces of `U(t) = U(t)P + ∫₀ᵗ U(t-s) Ṗ U_r(s) ds + U_r(t)`.
#[derive(Debug, Clone)]
pub struct PdxTerms {
    pub boundary: Operator,
    pub crossing: Operator,
    pub restricted: Operator,
    pub quad_points: usize,
}

impl PdxTerms {
    pub fn sum(&self) -> Operator {
        &(&self.boundary + &self.crossing) + &self.restricted
    }

    /// `‖U(t) - (boundary + crossing + restricted)‖` in operator norm.
    pub fn residual(&self, exact: &Operator) -> f64 {
        self.sum().distance(exact)
    }
}

/// Assembles the operator path decomposition on `[0, t]`.
///
/// The convolution is integrated with composite Simpson on `n_quad`
/// uniform nodes. At each node `s` the restricted propagator is the
/// Richardson-extrapolated Zeno product with `⌈n_zeno·s/t⌉` projections, so
/// the projection spacing is the same across the integration range.
pub fn pdx_assemble(
    h: &Hamiltonian,
    p: &Operator,
    t: f64,
    n_zeno: u64,
    n_quad: usize,
) -> Result<PdxTerms> {
    h.operator().check_same_dim(p, "P")?;
    p.require_projector("P")?;
    if n_quad < 2 {
        return argument(format!("n_quad must be >= 2, got {n_quad}"));
    }
    if n_zeno == 0 {
        return argument("n_zeno must be >= 1");
    }
    if !(t >= 0.0 && t.is_finite()) {
        return argument(format!("t must be finite and >= 0, got {t}"));
    }
    let q = p.complement();
    let dim = p.dim();
    let restricted_at = |s: f64| -> Operator {
        if s == 0.0 {
            return q.clone();
        }
        let n = ((n_zeno as f64) * s / t).ceil().max(1.0) as u64;
        let sched = ZenoSchedule::new(s, n).expect("s within [0, t]");
        restricted_estimate_unchecked(h, &q, sched, DEFAULT_RICHARDSON_LEVELS)
    };

    let boundary = &h.evolve(t) * p;
    let restricted = restricted_at(t);
    if t == 0.0 {
        return Ok(PdxTerms { boundary, crossing: Operator::zeros(dim), restricted, quad_points: n_quad });
    }

    let pdot = h.pdot(p)?;
    let step = t / (n_quad - 1) as f64;
    let weights = simpson_weights(n_quad, step);
    let mut crossing = Operator::zeros(dim);
    for (k, w) in weights.iter().enumerate() {
        let s = if k == n_quad - 1 { t } else { k as f64 * step };
        let integrand = &(&h.evolve(t - s) * &pdot) * &restricted_at(s);
        crossing = &crossing + &integrand.scale_re(*w);
    }
    Ok(PdxTerms { boundary, crossing, restricted, quad_points: n_quad })
}
