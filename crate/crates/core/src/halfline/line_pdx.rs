use super::grid::SpatialGrid;
use super::propagate::HalfLinePropagator;
use super::spectral::spectral_evolve_line;
use super::system::{Boundary, HalfLineSystem};
use super::wavefunction::{Measure, Representation, WaveFunction};
use crate::error::{argument, domain, Result};
use crate::qcore::C64;
use crate::quadrature::filon_linear_weights;
use crate::tolerance;
use rayon::prelude::*;
use std::f64::consts::PI;

/// The path decomposition of `U(t)ψ` on the line for `ψ` supported in
/// `x ≥ 0`: `U(t)ψ = crossing + U_r^β(t)ψ`, all sampled on the full grid.
#[derive(Debug, Clone)]
pub struct LinePdx {
    pub exact: WaveFunction,
    pub crossing: WaveFunction,
    pub restricted: WaveFunction,
    pub quad_points: usize,
}

impl LinePdx {
    pub fn residual(&self) -> f64 {
        let sum = self.crossing.map_samples(|j, z| z + self.restricted.samples[j]);
        self.exact.distance(&sum)
    }
}

/// Full-line grid sharing nodes with the half-line grid of `sys`:
/// `[-L, L)` with `2n` points.
pub fn line_grid(sys: &HalfLineSystem) -> SpatialGrid {
    SpatialGrid::symmetric(sys.length, 2 * sys.n).expect("validated system")
}

/// `(χ(0,s), ∂ₓχ(0,s))` from the first three nodes, consistent with the
/// discrete boundary condition.
fn boundary_data(nodes: &[C64; 3], boundary: Boundary, dx: f64) -> (C64, C64) {
    let one_sided = (nodes[1] * 4.0 - nodes[0] * 3.0 - nodes[2]) / (2.0 * dx);
    match boundary {
        Boundary::Neumann => (nodes[0], C64::new(0.0, 0.0)),
        Boundary::Robin(0.0) => (C64::new(0.0, 0.0), (nodes[1] * 4.0 - nodes[2]) / (2.0 * dx)),
        Boundary::Robin(b) if b.abs() >= dx => (nodes[0], nodes[0] / b),
        Boundary::Robin(b) => (one_sided * b, one_sided),
    }
}

/// `S(x) = θ(-x) e^{κx} (c0 + c1 x)`: `S(0⁻) = c0`, `S'(0⁻) = κ c0 + c1`.
struct JumpCarrier {
    c0: C64,
    c1: C64,
    kappa: f64,
}

impl JumpCarrier {
    fn new(value_jump: C64, slope_jump: C64, kappa: f64) -> Self {
        Self { c0: value_jump, c1: slope_jump - value_jump * kappa, kappa }
    }

    fn value(&self, x: f64) -> C64 {
        if x < 0.0 {
            (self.c0 + self.c1 * x) * (self.kappa * x).exp()
        } else {
            C64::new(0.0, 0.0)
        }
    }

    /// `∫ dx/√(2πħ) e^{-ipx/ħ} S(x)`.
    fn fourier(&self, p: f64, hbar: f64) -> C64 {
        let d = C64::new(self.kappa, -p / hbar);
        (self.c0 / d - self.c1 / (d * d)) / (2.0 * PI * hbar).sqrt()
    }
}

/// Assembles the three pieces of the line decomposition.
///
/// The restricted term is `exp(-iH_β t/ħ)` on the half-line grid. The
/// crossing term `(iħ/2m)∫₀ᵗ ds [g(x,0,t-s) χ'(0,s) - ∂_ξ g(x,ξ,t-s)|₀ χ(0,s)]`
/// with `χ = U_r^β(s)ψ` is evaluated mode by mode in momentum space, where
/// the time integral `∫₀ᵗ e^{-iω(t-s)} f(s) ds` is done by Filon weights on
/// `n_quad` uniform nodes; the `1/√(t-s)` endpoint behaviour of the
/// position-space kernel never appears.
pub fn line_pdx(psi: &WaveFunction, sys: &HalfLineSystem, t: f64, n_quad: usize) -> Result<LinePdx> {
    if !(t > 0.0 && t.is_finite()) {
        return argument(format!("line decomposition needs t > 0, got {t}"));
    }
    if n_quad < 2 {
        return argument(format!("n_quad must be >= 2, got {n_quad}"));
    }
    if psi.representation != Representation::Position {
        return argument("line decomposition needs the position representation");
    }
    let grid = line_grid(sys);
    if psi.grid != grid {
        return argument("wave function must live on the line grid of the half-line system");
    }
    let o = grid.origin_index().expect("symmetric grid");
    let left_mass: f64 = psi.samples[..o].iter().map(|z| z.norm_sqr()).sum::<f64>() * grid.dx();
    if left_mass > tolerance::NORMALIZATION {
        return domain(format!("initial state has weight {left_mass:e} in x < 0"));
    }

    let (m, hbar) = (sys.mass, sys.hbar);
    let prop = HalfLinePropagator::new(sys)?;
    let half = &psi.samples[o..];
    let restricted_half = prop.evolve_signed(half, t);
    let mut restricted = psi.clone();
    restricted.samples.iter_mut().for_each(|z| *z = C64::new(0.0, 0.0));
    restricted.samples[o..].copy_from_slice(&restricted_half);
    restricted.measure = Measure::Uniform;

    let h = t / (n_quad - 1) as f64;
    let times: Vec<f64> = (0..n_quad).map(|k| if k + 1 == n_quad { t } else { k as f64 * h }).collect();
    let (a, b): (Vec<C64>, Vec<C64>) = prop
        .boundary_trace(half, &times)
        .iter()
        .map(|nodes| boundary_data(nodes, sys.boundary, sys.dx()))
        .unzip();

    let prefactor = C64::new(0.0, hbar / (2.0 * m)) / (2.0 * PI * hbar).sqrt();
    let momenta = grid.momenta(hbar);
    let spectrum: Vec<C64> = momenta
        .par_iter()
        .map(|&p| {
            let omega = p * p / (2.0 * m * hbar);
            let w = filon_linear_weights(n_quad, h, omega);
            let big_a: C64 = w.iter().zip(&a).map(|(w, v)| w * v).sum();
            let big_b: C64 = w.iter().zip(&b).map(|(w, v)| w * v).sum();
            prefactor * C64::from_polar(1.0, -omega * t) * (big_b + C64::new(0.0, p / hbar) * big_a)
        })
        .collect();
    // The crossing term jumps by χ(0,t) and kinks by χ'(0,t) across x = 0.
    // A closed-form function with the same jumps is split off before the
    // inverse transform and added back pointwise, so no Gibbs ringing.
    let jump = JumpCarrier::new(a[n_quad - 1], b[n_quad - 1], 20.0 / sys.length);
    let smooth: Vec<C64> = spectrum
        .iter()
        .zip(&momenta)
        .map(|(z, &p)| z - jump.fourier(p, hbar))
        .collect();
    let mut crossing = WaveFunction {
        grid,
        samples: smooth,
        representation: Representation::Momentum,
        measure: Measure::Uniform,
        hbar,
    }
    .to_position();
    for (z, x) in crossing.samples.iter_mut().zip(grid.points()) {
        *z += jump.value(x);
    }

    let exact = spectral_evolve_line(psi, t, m);
    Ok(LinePdx { exact, crossing, restricted, quad_points: n_quad })
}

/// `‖U(t)ψ - [crossing + U_r^β(t)ψ]‖` on the full-line grid.
pub fn line_pdx_residual(psi: &WaveFunction, sys: &HalfLineSystem, t: f64, n_quad: usize) -> Result<f64> {
    Ok(line_pdx(psi, sys, t, n_quad)?.residual())
}
