//! Kijowski's time-of-arrival density at `x = 0` for a free particle,
//!
//! `Π_K(t) = |∫₀^∞ dp √(p/2πmħ) e^{-ip²t/2mħ} ψ(p)|² + |∫_{-∞}^0 dp √(-p/2πmħ) e^{-ip²t/2mħ} ψ(p)|²`,
//!
//! the probability current at the origin, and window-converged moments.

use crate::error::{argument, domain, Error, Result};
use crate::qcore::C64;
use crate::tolerance;
use rayon::prelude::*;
use std::f64::consts::PI;

/// Momentum amplitudes on the midpoint grid `p_j = -P + (j + ½)Δp`,
/// `j = 0..2M`, which is symmetric and never contains `p = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentumState {
    p_max: f64,
    half: usize,
    psi: Vec<C64>,
    pub mass: f64,
    pub hbar: f64,
}

impl MomentumState {
    /// Samples `f` on the grid with `2·half` points covering `[-p_max, p_max]`.
    pub fn from_fn(p_max: f64, half: usize, mass: f64, hbar: f64, f: impl Fn(f64) -> C64) -> Result<Self> {
        if !(p_max > 0.0 && p_max.is_finite()) || half == 0 {
            return argument(format!("momentum grid needs p_max > 0 and at least one point per side, got {p_max}, {half}"));
        }
        if !(mass > 0.0 && hbar > 0.0) {
            return argument("mass and hbar must be positive");
        }
        let mut s = Self { p_max, half, psi: Vec::new(), mass, hbar };
        s.psi = s.momenta().into_iter().map(f).collect();
        let norm = s.norm_sqr();
        if (norm - 1.0).abs() > tolerance::NORMALIZATION {
            return domain(format!("momentum state has norm² {norm}, widen or refine the momentum grid"));
        }
        Ok(s)
    }

    /// `ψ(p) = (2σ²/(πħ²))^{1/4} exp(-σ²(p-p0)²/ħ² - i p x0/ħ)`: a packet of
    /// position width `σ` centred at `x0` with mean momentum `p0`.
    pub fn gaussian(x0: f64, p0: f64, sigma: f64, p_max: f64, half: usize, mass: f64, hbar: f64) -> Result<Self> {
        if sigma.is_nan() || sigma <= 0.0 {
            return argument(format!("sigma must be positive, got {sigma}"));
        }
        let s2 = sigma * sigma;
        let c = (2.0 * s2 / (PI * hbar * hbar)).powf(0.25);
        Self::from_fn(p_max, half, mass, hbar, |p| {
            C64::from_polar(c * (-s2 * (p - p0).powi(2) / (hbar * hbar)).exp(), -p * x0 / hbar)
        })
    }

    pub fn dp(&self) -> f64 {
        self.p_max / self.half as f64
    }

    pub fn p_max(&self) -> f64 {
        self.p_max
    }

    /// Built as `±(k + ½)Δp` so that `p_{2M-1-j} = -p_j` holds bit for bit.
    pub fn momenta(&self) -> Vec<f64> {
        let dp = self.dp();
        let m = self.half;
        (0..2 * m)
            .map(|j| if j < m { -((m - 1 - j) as f64 + 0.5) * dp } else { ((j - m) as f64 + 0.5) * dp })
            .collect()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.psi
    }

    pub fn norm_sqr(&self) -> f64 {
        self.psi.iter().map(|z| z.norm_sqr()).sum::<f64>() * self.dp()
    }

    /// Normalized superposition `a·self + b·other` on the same grid.
    pub fn superpose(&self, a: C64, other: &Self, b: C64) -> Result<Self> {
        if self.p_max != other.p_max || self.half != other.half {
            return argument("superposed states must share the momentum grid");
        }
        let mut out = self.clone();
        for (z, w) in out.psi.iter_mut().zip(&other.psi) {
            *z = *z * a + w * b;
        }
        let n = out.norm_sqr().sqrt();
        out.psi.iter_mut().for_each(|z| *z /= n);
        Ok(out)
    }

    /// The state whose arrival is delayed by `t0`: `U(-t0)ψ`, i.e.
    /// `e^{+ip²t0/2mħ}ψ(p)`, so that `Π_K(t)` becomes `Π_K(t - t0)`.
    pub fn time_translated(&self, t0: f64) -> Self {
        let mut out = self.clone();
        let k = t0 / (2.0 * self.mass * self.hbar);
        for (z, p) in out.psi.iter_mut().zip(self.momenta()) {
            *z *= C64::from_polar(1.0, p * p * k);
        }
        out
    }

    /// Moves the detector to `x_a` by the translation phase `e^{-ipx_a/ħ}`
    /// (equivalently the state by `-x_a`).
    pub fn relative_to(&self, x_a: f64) -> Self {
        let mut out = self.clone();
        for (z, p) in out.psi.iter_mut().zip(self.momenta()) {
            *z *= C64::from_polar(1.0, p * x_a / self.hbar);
        }
        out
    }

    /// `ψ(p) → ψ(-p)`.
    pub fn mirrored(&self) -> Self {
        let mut out = self.clone();
        out.psi.reverse();
        out
    }
}

/// Sampled arrival density with its two momentum-sign components.
#[derive(Debug, Clone, PartialEq)]
pub struct ArrivalDistribution {
    pub t: Vec<f64>,
    pub density: Vec<f64>,
    pub right_part: Vec<f64>,
    pub left_part: Vec<f64>,
    /// Momentum nodes used per time sample.
    pub quad_points: usize,
}

/// Trapezoid rule on a possibly non-uniform abscissa.
pub fn trapezoid_on(t: &[f64], f: &[f64]) -> f64 {
    t.windows(2).zip(f.windows(2)).map(|(t, f)| 0.5 * (t[1] - t[0]) * (f[0] + f[1])).sum()
}

impl ArrivalDistribution {
    pub fn captured_mass(&self) -> f64 {
        trapezoid_on(&self.t, &self.density)
    }

    pub fn peak_time(&self) -> f64 {
        let (k, _) = self
            .density
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |acc, (k, &v)| if v > acc.1 { (k, v) } else { acc });
        self.t[k]
    }

    pub fn min_density(&self) -> f64 {
        self.density.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

fn check_times(t_grid: &[f64]) -> Result<()> {
    if t_grid.is_empty() {
        return argument("time grid is empty");
    }
    if t_grid.iter().any(|t| !t.is_finite()) || t_grid.windows(2).any(|w| w[1] <= w[0]) {
        return argument("time grid must be finite and strictly increasing");
    }
    Ok(())
}

/// Uniform grid of `n` times on `[t0, t1]`.
pub fn time_grid(t0: f64, t1: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![t0];
    }
    let h = (t1 - t0) / (n - 1) as f64;
    (0..n).map(|k| if k + 1 == n { t1 } else { t0 + k as f64 * h }).collect()
}

/// Right and left integrands share their order of summation (increasing
/// `|p|`), so mirroring the state swaps the two parts bit for bit.
fn kijowski_at(state: &MomentumState, p: &[f64], t: f64) -> (f64, f64) {
    let m = state.half;
    let k = t / (2.0 * state.mass * state.hbar);
    let norm = 1.0 / (2.0 * PI * state.mass * state.hbar);
    let term = |j: usize| {
        let pj = p[j];
        state.psi[j] * C64::from_polar((pj.abs() * norm).sqrt(), -pj * pj * k)
    };
    let right: C64 = (m..2 * m).map(term).sum::<C64>() * state.dp();
    let left: C64 = (0..m).rev().map(term).sum::<C64>() * state.dp();
    (right.norm_sqr(), left.norm_sqr())
}

/// `Π_K(t)` at each time by direct momentum quadrature.
pub fn kijowski_density(state: &MomentumState, t_grid: &[f64]) -> Result<ArrivalDistribution> {
    check_times(t_grid)?;
    let p = state.momenta();
    let parts: Vec<(f64, f64)> = t_grid.par_iter().map(|&t| kijowski_at(state, &p, t)).collect();
    let (right_part, left_part): (Vec<f64>, Vec<f64>) = parts.into_iter().unzip();
    let density = right_part.iter().zip(&left_part).map(|(r, l)| r + l).collect();
    Ok(ArrivalDistribution { t: t_grid.to_vec(), density, right_part, left_part, quad_points: p.len() })
}

/// `J(0,t) = (ħ/m) Im[ψ̄(0,t) ∂ₓψ(0,t)]` with `ψ(0,t)` and `∂ₓψ(0,t)` from
/// momentum quadrature. Not a probability density: it can be negative.
pub fn current_density_at_origin(state: &MomentumState, t_grid: &[f64]) -> Result<Vec<f64>> {
    check_times(t_grid)?;
    let p = state.momenta();
    let (m, hbar) = (state.mass, state.hbar);
    let scale = state.dp() / (2.0 * PI * hbar).sqrt();
    Ok(t_grid
        .par_iter()
        .map(|&t| {
            let k = t / (2.0 * m * hbar);
            let (mut psi, mut dpsi) = (C64::new(0.0, 0.0), C64::new(0.0, 0.0));
            for (z, &pj) in state.psi.iter().zip(&p) {
                let v = z * C64::from_polar(1.0, -pj * pj * k);
                psi += v;
                dpsi += v * C64::new(0.0, pj / hbar);
            }
            hbar / m * (psi.conj() * dpsi).im * scale * scale
        })
        .collect())
}

/// Classical arrival time `m|x0|/p0` at the origin for a packet at `x0`
/// moving towards it.
pub fn classical_arrival(x0: f64, p0: f64, mass: f64) -> f64 {
    mass * x0.abs() / p0.abs()
}

/// Evaluates `Π_K` on `[centre - w, centre + w]` with step `dt`, doubling
/// `w` until the captured mass changes by less than the window tolerance.
pub fn converged_window(
    state: &MomentumState,
    centre: f64,
    half_width: f64,
    dt: f64,
    max_doublings: usize,
) -> Result<ArrivalDistribution> {
    if !(half_width > 0.0 && dt > 0.0) {
        return argument("window half-width and step must be positive");
    }
    let build = |w: f64| {
        let n = (2.0 * w / dt).round() as usize + 1;
        kijowski_density(state, &time_grid(centre - w, centre + w, n))
    };
    let mut w = half_width;
    let mut dist = build(w)?;
    let mut mass = dist.captured_mass();
    for _ in 0..max_doublings {
        w *= 2.0;
        let wider = build(w)?;
        let wider_mass = wider.captured_mass();
        let change = (wider_mass - mass).abs();
        dist = wider;
        mass = wider_mass;
        if change < tolerance::WINDOW_MASS_CHANGE {
            return Ok(dist);
        }
    }
    Err(Error::Convergence(format!(
        "captured mass still changing after {max_doublings} doublings (half-width {w}, mass {mass})"
    )))
}

/// `order = 0`: captured mass; `1`: mean; `2`: variance, all over the
/// window of `dist`.
pub fn arrival_moments(dist: &ArrivalDistribution, order: u32) -> Result<f64> {
    let mass = dist.captured_mass();
    if order > 2 {
        return argument(format!("moments up to order 2 are supported, got {order}"));
    }
    if order == 0 {
        return Ok(mass);
    }
    if mass < tolerance::MIN_CAPTURED_MASS {
        return Err(Error::Convergence(format!(
            "window captures only {mass:.6} of the arrival probability; widen the time window"
        )));
    }
    let weighted = |f: &dyn Fn(f64) -> f64| {
        let v: Vec<f64> = dist.t.iter().zip(&dist.density).map(|(&t, &d)| f(t) * d).collect();
        trapezoid_on(&dist.t, &v) / mass
    };
    let mean = weighted(&|t| t);
    if order == 1 {
        return Ok(mean);
    }
    Ok(weighted(&|t| (t - mean) * (t - mean)))
}

/// `∫|a - b| dt` by the trapezoid rule.
pub fn l1_distance(t: &[f64], a: &[f64], b: &[f64]) -> f64 {
    let d: Vec<f64> = a.iter().zip(b).map(|(x, y)| (x - y).abs()).collect();
    trapezoid_on(t, &d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn packet() -> MomentumState {
        MomentumState::gaussian(-10.0, 2.0, 2.0, 4.0, 1600, 1.0, 1.0).unwrap()
    }

    #[test]
    fn grid_excludes_zero() {
        let s = packet();
        let p = s.momenta();
        assert!(p.iter().all(|&x| x != 0.0));
        assert!((p[1599] + p[1600]).abs() < 1e-15);
    }

    #[test]
    fn truncated_grid_rejected() {
        assert!(matches!(
            MomentumState::gaussian(0.0, 2.0, 2.0, 1.0, 100, 1.0, 1.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn right_mover_has_no_left_part() {
        let s = packet();
        let d = kijowski_density(&s, &time_grid(0.0, 10.0, 101)).unwrap();
        assert!(d.left_part.iter().all(|&l| l < 1e-14));
        assert!(d.min_density() >= 0.0);
    }

    #[test]
    fn mirror_swaps_parts_exactly() {
        let s = packet();
        let t = time_grid(2.0, 8.0, 31);
        let a = kijowski_density(&s, &t).unwrap();
        let b = kijowski_density(&s.mirrored(), &t).unwrap();
        assert_eq!(a.right_part, b.left_part);
        assert_eq!(a.left_part, b.right_part);
    }

    #[test]
    fn empty_time_grid_rejected() {
        assert!(kijowski_density(&packet(), &[]).is_err());
    }

    #[test]
    fn moments_need_captured_mass() {
        let d = kijowski_density(&packet(), &time_grid(4.5, 5.5, 11)).unwrap();
        assert!(matches!(arrival_moments(&d, 1), Err(Error::Convergence(_))));
    }
}
