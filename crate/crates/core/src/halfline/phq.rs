use super::wavefunction::{Representation, WaveFunction};
use crate::error::{argument, Result};
use crate::qcore::C64;

/// `‖PHQψ‖` on the grid, with `(PHQψ)(x) = -(ħ²/2m)(1-θ(x)) ∂²ₓ(θ(x)ψ(x))`,
/// `Q = θ` the projector onto `x ≥ 0` and `P = 1 - θ`.
///
/// Uses the three-point second difference; values beyond the grid ends are
/// taken as zero. The result is concentrated on the first node left of the
/// cut and grows as the grid is refined: `PHQ` has `δ`/`δ'` content.
pub fn phq_nonzero_check(psi: &WaveFunction, mass: f64) -> Result<f64> {
    if psi.representation != Representation::Position {
        return argument("PHQ check needs the position representation");
    }
    let xs = psi.coordinates();
    let dx = psi.step();
    let theta_psi: Vec<C64> = psi
        .samples
        .iter()
        .zip(&xs)
        .map(|(z, &x)| if x >= 0.0 { *z } else { C64::new(0.0, 0.0) })
        .collect();
    let zero = C64::new(0.0, 0.0);
    let c = psi.hbar * psi.hbar / (2.0 * mass * dx * dx);
    let n = xs.len();
    let norm_sqr: f64 = (0..n)
        .filter(|&j| xs[j] < 0.0)
        .map(|j| {
            let left = if j > 0 { theta_psi[j - 1] } else { zero };
            let right = if j + 1 < n { theta_psi[j + 1] } else { zero };
            ((left + right - theta_psi[j] * 2.0) * c).norm_sqr()
        })
        .sum();
    Ok((norm_sqr * dx).sqrt())
}
