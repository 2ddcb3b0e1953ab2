use super::wavefunction::{Representation, WaveFunction};
use crate::error::{argument, Result};
use crate::qcore::C64;
use rayon::prelude::*;
use std::f64::consts::PI;

/// `g(x,y,t) = √(m/(2πiħt)) exp(i m (x-y)²/(2ħt))`.
pub fn free_kernel(x: f64, y: f64, t: f64, m: f64, hbar: f64) -> Result<C64> {
    if t.is_nan() || t <= 0.0 {
        return argument(format!("free kernel needs t > 0, got {t}"));
    }
    Ok(kernel_unchecked(x, y, t, m, hbar))
}

fn kernel_unchecked(x: f64, y: f64, t: f64, m: f64, hbar: f64) -> C64 {
    let prefactor = C64::new(0.0, 2.0 * PI * hbar * t / m).sqrt().inv();
    let d = x - y;
    prefactor * C64::from_polar(1.0, m * d * d / (2.0 * hbar * t))
}

/// Which combination of direct and mirror kernels to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Images {
    /// `g(x,y,t)` on the whole grid.
    None,
    /// `g(x,y,t) - g(x,-y,t)`: Dirichlet wall at the origin.
    Dirichlet,
    /// `g(x,y,t) + g(x,-y,t)`: Neumann wall at the origin.
    Neumann,
}

/// `∫ K(x,y,t) ψ(y) dy` by quadrature over the grid of `psi`, evaluated at
/// the same nodes. With images the grid is treated as the half-line and
/// the quadrature weights of `psi` are used.
pub fn kernel_evolve(psi: &WaveFunction, t: f64, m: f64, images: Images) -> Result<WaveFunction> {
    if psi.representation != Representation::Position {
        return argument("kernel evolution needs the position representation");
    }
    if t.is_nan() || t <= 0.0 {
        return argument(format!("kernel evolution needs t > 0, got {t}"));
    }
    let hbar = psi.hbar;
    let xs = psi.coordinates();
    let weighted: Vec<C64> = psi.samples.iter().enumerate().map(|(j, z)| z * psi.weight(j)).collect();
    let samples: Vec<C64> = xs
        .par_iter()
        .map(|&x| {
            xs.iter()
                .zip(&weighted)
                .map(|(&y, w)| {
                    let k = kernel_unchecked(x, y, t, m, hbar);
                    let k = match images {
                        Images::None => k,
                        Images::Dirichlet => k - kernel_unchecked(x, -y, t, m, hbar),
                        Images::Neumann => k + kernel_unchecked(x, -y, t, m, hbar),
                    };
                    k * w
                })
                .sum()
        })
        .collect();
    Ok(WaveFunction { samples, ..psi.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halfline::{GaussianPacket, SpatialGrid};

    #[test]
    fn symmetric_and_modulus() {
        let a = free_kernel(0.3, -1.7, 0.8, 1.0, 1.0).unwrap();
        let b = free_kernel(-1.7, 0.3, 0.8, 1.0, 1.0).unwrap();
        assert_eq!(a, b);
        let g = free_kernel(2.0, 2.0, 0.5, 2.0, 1.0).unwrap();
        assert!((g.norm() - (2.0 / (2.0 * PI * 0.5)).sqrt()).abs() < 1e-14);
        assert!(free_kernel(0.0, 0.0, 0.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn quadrature_reproduces_spreading_gaussian() {
        let grid = SpatialGrid::symmetric(20.0, 800).unwrap();
        let g = GaussianPacket::new(-1.0, 0.7, 1.0).unwrap();
        let out = kernel_evolve(&g.sample(grid, 1.0), 1.5, 1.0, Images::None).unwrap();
        let exact = g.sample_evolved(grid, 1.5, 1.0, 1.0);
        assert!(out.sup_distance(&exact) < 1e-6, "{}", out.sup_distance(&exact));
    }
}
