use super::propagate::HalfLinePropagator;
use super::system::{Boundary, HalfLineSystem};
use super::wavefunction::WaveFunction;
use super::grid::SpatialGrid;
use crate::error::{argument, Result};
use crate::qcore::C64;

/// Finite-difference free evolution on `[-L, L]` with hard walls at `±L`,
/// on the grid `SpatialGrid::symmetric(L, 2n)`.
///
/// The three-point Laplacian commutes with parity, so the even part evolves
/// with the Neumann half-line operator and the odd part with the Dirichlet
/// one; both are diagonalized once and cached.
#[derive(Debug, Clone)]
pub struct FdLine {
    grid: SpatialGrid,
    even: HalfLinePropagator,
    odd: HalfLinePropagator,
}

impl FdLine {
    pub fn new(half_width: f64, n_half: usize, mass: f64, hbar: f64) -> Result<Self> {
        let even = HalfLinePropagator::new(&HalfLineSystem::with_units(half_width, n_half, Boundary::Neumann, mass, hbar)?)?;
        let odd = HalfLinePropagator::new(&HalfLineSystem::with_units(half_width, n_half, Boundary::DIRICHLET, mass, hbar)?)?;
        Ok(Self { grid: SpatialGrid::symmetric(half_width, 2 * n_half)?, even, odd })
    }

    pub fn grid(&self) -> SpatialGrid {
        self.grid
    }

    pub fn n_half(&self) -> usize {
        self.grid.n() / 2
    }

    /// Signed-time evolution of full-line samples. Node 0 (`x = -L`) is the
    /// wall and is returned as zero.
    pub fn evolve_samples(&self, psi: &[C64], t: f64) -> Vec<C64> {
        let n = self.n_half();
        let o = n;
        let mut even = vec![C64::new(0.0, 0.0); n];
        let mut odd = vec![C64::new(0.0, 0.0); n];
        even[0] = psi[o];
        for j in 1..n {
            even[j] = (psi[o + j] + psi[o - j]) * 0.5;
            odd[j] = (psi[o + j] - psi[o - j]) * 0.5;
        }
        let e = self.even.evolve_signed(&even, t);
        let d = self.odd.evolve_signed(&odd, t);
        let mut out = vec![C64::new(0.0, 0.0); 2 * n];
        out[o] = e[0];
        for j in 1..n {
            out[o + j] = e[j] + d[j];
            out[o - j] = e[j] - d[j];
        }
        out
    }

    pub fn evolve(&self, psi: &WaveFunction, t: f64) -> Result<WaveFunction> {
        if psi.grid != self.grid {
            return argument("wave function grid does not match the finite-difference line");
        }
        Ok(WaveFunction { samples: self.evolve_samples(&psi.samples, t), ..psi.clone() })
    }
}
