use crate::error::{argument, Result};

/// Uniform grid `x_j = x_min + j·dx`, `j = 0..n`, `dx = (x_max - x_min)/n`.
///
/// `x_max` itself is not a node: on the line it is the periodic image of
/// `x_min`, on the half-line it is the outer Dirichlet wall.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpatialGrid {
    x_min: f64,
    x_max: f64,
    n: usize,
}

impl SpatialGrid {
    pub fn new(x_min: f64, x_max: f64, n: usize) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite() && x_min < x_max) {
            return argument(format!("grid needs finite x_min < x_max, got [{x_min}, {x_max}]"));
        }
        if n < 8 {
            return argument(format!("grid needs at least 8 points, got {n}"));
        }
        Ok(Self { x_min, x_max, n })
    }

    /// Symmetric line grid `[-half_width, half_width)` with `n` (even) points;
    /// node `n/2` sits exactly at the origin.
    pub fn symmetric(half_width: f64, n: usize) -> Result<Self> {
        if !n.is_multiple_of(2) {
            return argument(format!("symmetric grid needs an even point count, got {n}"));
        }
        Self::new(-half_width, half_width, n)
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> f64 {
        self.x_max - self.x_min
    }

    pub fn dx(&self) -> f64 {
        self.len() / self.n as f64
    }

    pub fn x(&self, j: usize) -> f64 {
        self.x_min + j as f64 * self.dx()
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n).map(|j| self.x(j)).collect()
    }

    /// Index of the node at `x = 0`, if there is one.
    pub fn origin_index(&self) -> Option<usize> {
        let k = (-self.x_min / self.dx()).round();
        if k < 0.0 || k >= self.n as f64 {
            return None;
        }
        let k = k as usize;
        (self.x(k).abs() <= 1e-9 * self.dx()).then_some(k)
    }

    /// Momentum step of the discrete Fourier dual, `2πħ/(n·dx)`.
    pub fn dp(&self, hbar: f64) -> f64 {
        2.0 * std::f64::consts::PI * hbar / self.len()
    }

    /// Dual momenta in ascending order, `p_k = (k - n/2)·dp`.
    pub fn momenta(&self, hbar: f64) -> Vec<f64> {
        let dp = self.dp(hbar);
        let half = (self.n / 2) as f64;
        (0..self.n).map(|k| (k as f64 - half) * dp).collect()
    }
}
