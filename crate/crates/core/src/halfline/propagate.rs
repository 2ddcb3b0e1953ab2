use super::spectrum::{spectrum, Spectrum};
use super::system::{Boundary, HalfLineSystem};
use super::wavefunction::{Measure, Representation, WaveFunction};
use crate::error::{argument, Result};
use crate::qcore::C64;
use rayon::prelude::*;
use std::f64::consts::FRAC_1_SQRT_2;
use std::sync::Arc;

/// `exp(-i H_β t/ħ)` on the half-line grid via the cached spectrum.
#[derive(Debug, Clone)]
pub struct HalfLinePropagator {
    sys: HalfLineSystem,
    spectrum: Arc<Spectrum>,
}

impl HalfLinePropagator {
    pub fn new(sys: &HalfLineSystem) -> Result<Self> {
        Ok(Self { sys: *sys, spectrum: spectrum(sys)? })
    }

    pub fn system(&self) -> &HalfLineSystem {
        &self.sys
    }

    pub fn energies(&self) -> &[f64] {
        &self.spectrum.energies
    }

    /// Symmetrizing weight of node `first + i`.
    fn weight(&self, i: usize) -> f64 {
        if i == 0 && self.sys.first_node() == 0 {
            FRAC_1_SQRT_2
        } else {
            1.0
        }
    }

    /// Eigen-coefficients of the half-line samples `psi` (length `n`).
    pub fn coefficients(&self, psi: &[C64]) -> Vec<C64> {
        let first = self.sys.first_node();
        let phi: Vec<C64> = (0..self.spectrum.dim).map(|i| psi[first + i] * self.weight(i)).collect();
        (0..self.spectrum.dim)
            .into_par_iter()
            .map(|k| self.spectrum.vector(k).iter().zip(&phi).map(|(v, z)| z * v).sum())
            .collect()
    }

    /// Half-line samples (length `n`) from eigen-coefficients.
    pub fn synthesize(&self, coeffs: &[C64]) -> Vec<C64> {
        let dim = self.spectrum.dim;
        let mut phi = vec![C64::new(0.0, 0.0); dim];
        for (k, c) in coeffs.iter().enumerate() {
            if c.re == 0.0 && c.im == 0.0 {
                continue;
            }
            for (p, v) in phi.iter_mut().zip(self.spectrum.vector(k)) {
                *p += c * v;
            }
        }
        let first = self.sys.first_node();
        let mut out = vec![C64::new(0.0, 0.0); self.sys.n];
        for (i, p) in phi.into_iter().enumerate() {
            out[first + i] = p / self.weight(i);
        }
        out
    }

    fn phases(&self, coeffs: &[C64], t: f64) -> Vec<C64> {
        let hbar = self.sys.hbar;
        coeffs
            .iter()
            .zip(&self.spectrum.energies)
            .map(|(c, e)| c * C64::from_polar(1.0, -e * t / hbar))
            .collect()
    }

    /// Evolution by any real `t`; negative `t` runs the dynamics backward.
    pub fn evolve_signed(&self, psi: &[C64], t: f64) -> Vec<C64> {
        if t == 0.0 {
            let mut out = psi.to_vec();
            if self.sys.first_node() == 1 {
                out[0] = C64::new(0.0, 0.0);
            }
            return out;
        }
        self.synthesize(&self.phases(&self.coefficients(psi), t))
    }

    /// Values at the nodes `x = 0, dx, 2dx` of the evolved state at each time,
    /// without synthesizing the full state.
    pub fn boundary_trace(&self, psi: &[C64], times: &[f64]) -> Vec<[C64; 3]> {
        let coeffs = self.coefficients(psi);
        let first = self.sys.first_node();
        let rows: Vec<Vec<f64>> = (0..3)
            .map(|node| {
                (0..self.spectrum.dim)
                    .map(|k| if node < first { 0.0 } else { self.spectrum.vector(k)[node - first] / self.weight(node - first) })
                    .collect()
            })
            .collect();
        times
            .par_iter()
            .map(|&t| {
                let evolved = self.phases(&coeffs, t);
                let mut out = [C64::new(0.0, 0.0); 3];
                for (o, row) in out.iter_mut().zip(&rows) {
                    *o = evolved.iter().zip(row).map(|(c, r)| c * r).sum();
                }
                out
            })
            .collect()
    }
}

fn check_half_line(psi: &WaveFunction, sys: &HalfLineSystem) -> Result<()> {
    if psi.representation != Representation::Position {
        return argument("restricted propagation needs the position representation");
    }
    let g = sys.grid();
    if psi.grid.n() != g.n() || (psi.grid.x_min() - g.x_min()).abs() > 0.0 || (psi.grid.x_max() - g.x_max()).abs() > 1e-12 * g.len() {
        return argument("wave function grid does not match the half-line system");
    }
    Ok(())
}

/// `U_r^β(t)ψ = exp(-i H_β t/ħ)ψ` on `[0, L]`.
pub fn restricted_propagate(psi_half: &WaveFunction, sys: &HalfLineSystem, t: f64) -> Result<WaveFunction> {
    if !(t >= 0.0 && t.is_finite()) {
        return argument(format!("restricted propagation needs finite t >= 0, got {t}; use evolve_signed for backward runs"));
    }
    check_half_line(psi_half, sys)?;
    let prop = HalfLinePropagator::new(sys)?;
    Ok(WaveFunction {
        samples: prop.evolve_signed(&psi_half.samples, t),
        measure: Measure::HalfLine,
        ..psi_half.clone()
    })
}

/// Discrete probability flux `(ħ/m) Im(ψ̄₀ ψ'(0))` through the wall, with
/// `ψ'(0)` taken from the boundary condition that defines the ghost node.
pub fn wall_flux(psi: &[C64], sys: &HalfLineSystem) -> f64 {
    let derivative = match sys.boundary {
        Boundary::Neumann => C64::new(0.0, 0.0),
        Boundary::Robin(0.0) => (psi[1] * 4.0 - psi[2]) / (2.0 * sys.dx()),
        Boundary::Robin(b) => psi[0] / b,
    };
    sys.hbar / sys.mass * (psi[0].conj() * derivative).im
}
