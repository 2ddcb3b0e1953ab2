use super::grid::SpatialGrid;
use super::wavefunction::WaveFunction;
use crate::error::{argument, domain, Result};
use crate::qcore::C64;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    None,
    Even,
    Odd,
}

/// `ψ(x) = (2πσ²)^{-1/4} exp(-(x-x0)²/(4σ²) + i p0 x/ħ)`, optionally
/// (anti)symmetrized about `x = 0` and renormalized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianPacket {
    pub x0: f64,
    pub p0: f64,
    pub sigma: f64,
    pub parity: Parity,
}

impl GaussianPacket {
    pub fn new(x0: f64, p0: f64, sigma: f64) -> Result<Self> {
        Self::with_parity(x0, p0, sigma, Parity::None)
    }

    pub fn with_parity(x0: f64, p0: f64, sigma: f64, parity: Parity) -> Result<Self> {
        if !(sigma > 0.0 && sigma.is_finite()) {
            return argument(format!("sigma must be positive, got {sigma}"));
        }
        if !(x0.is_finite() && p0.is_finite()) {
            return argument("packet centre and momentum must be finite");
        }
        let packet = Self { x0, p0, sigma, parity };
        if parity != Parity::None && packet.symmetrized_norm_sqr(1.0) < 1e-12 {
            return domain("antisymmetrized packet vanishes identically");
        }
        Ok(packet)
    }

    /// `⟨G(-x)|G(x)⟩ = exp(-x0²/(2σ²) - 2p0²σ²/ħ²)`, real.
    fn mirror_overlap(&self, hbar: f64) -> f64 {
        let s2 = self.sigma * self.sigma;
        (-self.x0 * self.x0 / (2.0 * s2) - 2.0 * self.p0 * self.p0 * s2 / (hbar * hbar)).exp()
    }

    fn symmetrized_norm_sqr(&self, hbar: f64) -> f64 {
        match self.parity {
            Parity::None => 1.0,
            Parity::Even => 2.0 + 2.0 * self.mirror_overlap(hbar),
            Parity::Odd => 2.0 - 2.0 * self.mirror_overlap(hbar),
        }
    }

    /// Freely evolved single Gaussian (no symmetrization) at time `t`.
    fn bare(x: f64, x0: f64, p0: f64, sigma: f64, t: f64, m: f64, hbar: f64) -> C64 {
        let tau = hbar * t / (2.0 * m * sigma * sigma);
        let spread = C64::new(1.0, tau);
        let shift = x - x0 - p0 * t / m;
        let exponent = -C64::new(shift * shift, 0.0) / (spread * 4.0 * sigma * sigma)
            + C64::new(0.0, p0 * x / hbar - p0 * p0 * t / (2.0 * m * hbar));
        (2.0 * PI * sigma * sigma).powf(-0.25) * exponent.exp() / spread.sqrt()
    }

    /// Closed-form free evolution `(U(t)ψ)(x)`.
    pub fn amplitude(&self, x: f64, t: f64, m: f64, hbar: f64) -> C64 {
        let g = Self::bare(x, self.x0, self.p0, self.sigma, t, m, hbar);
        let sign = match self.parity {
            Parity::None => return g,
            Parity::Even => 1.0,
            Parity::Odd => -1.0,
        };
        let mirrored = Self::bare(x, -self.x0, -self.p0, self.sigma, t, m, hbar);
        (g + mirrored * sign) / self.symmetrized_norm_sqr(hbar).sqrt()
    }

    /// Samples the packet at `t = 0` on `grid`.
    pub fn sample(&self, grid: SpatialGrid, hbar: f64) -> WaveFunction {
        self.sample_evolved(grid, 0.0, 1.0, hbar)
    }

    pub fn sample_evolved(&self, grid: SpatialGrid, t: f64, m: f64, hbar: f64) -> WaveFunction {
        WaveFunction::from_fn(grid, |x| self.amplitude(x, t, m, hbar)).with_hbar(hbar)
    }

    /// `ψ̂(p) = (2σ²/(πħ²))^{1/4} exp(-σ²(p-p0)²/ħ² - i(p-p0)x0/ħ)` for the
    /// unsymmetrized packet.
    pub fn momentum_amplitude(&self, p: f64, hbar: f64) -> C64 {
        let s2 = self.sigma * self.sigma;
        let dp = p - self.p0;
        let modulus = (2.0 * s2 / (PI * hbar * hbar)).powf(0.25) * (-s2 * dp * dp / (hbar * hbar)).exp();
        C64::from_polar(modulus, -dp * self.x0 / hbar)
    }
}
