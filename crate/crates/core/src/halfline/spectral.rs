use super::wavefunction::{Representation, WaveFunction};
use crate::qcore::C64;

/// Exact free evolution on the periodic grid: momentum samples are
/// multiplied by `exp(-i p² t/(2mħ))`. The result comes back in the
/// representation of the input.
pub fn spectral_evolve_line(psi: &WaveFunction, t: f64, m: f64) -> WaveFunction {
    if t == 0.0 {
        return psi.clone();
    }
    let hbar = psi.hbar;
    let mut phi = psi.to_momentum();
    for (z, p) in phi.samples.iter_mut().zip(psi.grid.momenta(hbar)) {
        *z *= C64::from_polar(1.0, -p * p * t / (2.0 * m * hbar));
    }
    match psi.representation {
        Representation::Position => phi.to_position(),
        Representation::Momentum => phi,
    }
}

/// `⟨x⟩` of a position-space state.
pub fn mean_position(psi: &WaveFunction) -> f64 {
    let xs = psi.coordinates();
    psi.samples.iter().zip(&xs).map(|(z, x)| z.norm_sqr() * x).sum::<f64>() * psi.step() / psi.norm_sqr()
}
