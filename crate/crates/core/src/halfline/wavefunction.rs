use super::grid::SpatialGrid;
use crate::error::{argument, Result};
use crate::qcore::C64;
use rustfft::FftPlanner;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    Position,
    Momentum,
}

/// Quadrature measure of the inner product on the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measure {
    /// Every node carries weight `Δ` (periodic line, momentum space).
    Uniform,
    /// Trapezoid on `[0, L]`: node 0 carries `Δ/2`, the wall node is absent.
    HalfLine,
}

/// Complex samples on a uniform grid.
///
/// In the momentum representation sample `k` belongs to `grid.momenta(ħ)[k]`
/// and the weight is `dp`.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveFunction {
    pub grid: SpatialGrid,
    pub samples: Vec<C64>,
    pub representation: Representation,
    pub measure: Measure,
    pub hbar: f64,
}

impl WaveFunction {
    pub fn position(grid: SpatialGrid, samples: Vec<C64>) -> Result<Self> {
        Self::with_measure(grid, samples, Measure::Uniform)
    }

    pub fn half_line(grid: SpatialGrid, samples: Vec<C64>) -> Result<Self> {
        Self::with_measure(grid, samples, Measure::HalfLine)
    }

    fn with_measure(grid: SpatialGrid, samples: Vec<C64>, measure: Measure) -> Result<Self> {
        if samples.len() != grid.n() {
            return argument(format!("{} samples for a grid of {} points", samples.len(), grid.n()));
        }
        Ok(Self { grid, samples, representation: Representation::Position, measure, hbar: 1.0 })
    }

    pub fn from_fn(grid: SpatialGrid, f: impl Fn(f64) -> C64) -> Self {
        let samples = grid.points().into_iter().map(f).collect();
        Self { grid, samples, representation: Representation::Position, measure: Measure::Uniform, hbar: 1.0 }
    }

    pub fn with_hbar(mut self, hbar: f64) -> Self {
        self.hbar = hbar;
        self
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Grid spacing of the current representation.
    pub fn step(&self) -> f64 {
        match self.representation {
            Representation::Position => self.grid.dx(),
            Representation::Momentum => self.grid.dp(self.hbar),
        }
    }

    /// Coordinates of the samples in the current representation.
    pub fn coordinates(&self) -> Vec<f64> {
        match self.representation {
            Representation::Position => self.grid.points(),
            Representation::Momentum => self.grid.momenta(self.hbar),
        }
    }

    pub fn weight(&self, j: usize) -> f64 {
        match (self.measure, j) {
            (Measure::HalfLine, 0) => 0.5 * self.step(),
            _ => self.step(),
        }
    }

    pub fn inner(&self, other: &Self) -> C64 {
        self.samples
            .iter()
            .zip(&other.samples)
            .enumerate()
            .map(|(j, (a, b))| a.conj() * b * self.weight(j))
            .sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.samples.iter().enumerate().map(|(j, z)| z.norm_sqr() * self.weight(j)).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn normalized(mut self) -> Self {
        let n = self.norm();
        if n > 0.0 {
            self.samples.iter_mut().for_each(|z| *z /= n);
        }
        self
    }

    /// `‖self - other‖` in the quadrature norm.
    pub fn distance(&self, other: &Self) -> f64 {
        self.samples
            .iter()
            .zip(&other.samples)
            .enumerate()
            .map(|(j, (a, b))| (a - b).norm_sqr() * self.weight(j))
            .sum::<f64>()
            .sqrt()
    }

    pub fn sup_distance(&self, other: &Self) -> f64 {
        self.samples.iter().zip(&other.samples).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn conj(&self) -> Self {
        let mut out = self.clone();
        out.samples.iter_mut().for_each(|z| *z = z.conj());
        out
    }

    pub fn map_samples(&self, f: impl Fn(usize, C64) -> C64) -> Self {
        let mut out = self.clone();
        for (j, z) in out.samples.iter_mut().enumerate() {
            *z = f(j, *z);
        }
        out
    }

    /// Discrete Fourier transform normalized as
    /// `ψ̂(p_k) = dx/√(2πħ) Σ_j ψ_j e^{-i p_k x_j/ħ}`; unitary between the
    /// `dx` and `dp` measures.
    pub fn to_momentum(&self) -> Self {
        if self.representation == Representation::Momentum {
            return self.clone();
        }
        let mut out = self.clone();
        transform(&mut out.samples, &self.grid, self.hbar, false);
        out.representation = Representation::Momentum;
        out.measure = Measure::Uniform;
        out
    }

    pub fn to_position(&self) -> Self {
        if self.representation == Representation::Position {
            return self.clone();
        }
        let mut out = self.clone();
        transform(&mut out.samples, &self.grid, self.hbar, true);
        out.representation = Representation::Position;
        out
    }
}

fn transform(buf: &mut [C64], grid: &SpatialGrid, hbar: f64, inverse: bool) {
    let n = grid.n();
    let momenta = grid.momenta(hbar);
    let x_min = grid.x_min();
    // e^{∓i p_k x_j/ħ} = e^{∓i p_k x_min/ħ} (-1)^j e^{∓2πi k j/n}
    let alternating = |j: usize| if j.is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut planner = FftPlanner::<f64>::new();
    if !inverse {
        for (j, z) in buf.iter_mut().enumerate() {
            *z *= alternating(j);
        }
        planner.plan_fft_forward(n).process(buf);
        let scale = grid.dx() / (2.0 * PI * hbar).sqrt();
        for (k, z) in buf.iter_mut().enumerate() {
            *z *= C64::from_polar(scale, -momenta[k] * x_min / hbar);
        }
    } else {
        let scale = grid.dp(hbar) / (2.0 * PI * hbar).sqrt();
        for (k, z) in buf.iter_mut().enumerate() {
            *z *= C64::from_polar(scale, momenta[k] * x_min / hbar);
        }
        planner.plan_fft_inverse(n).process(buf);
        for (j, z) in buf.iter_mut().enumerate() {
            *z *= alternating(j);
        }
    }
}
