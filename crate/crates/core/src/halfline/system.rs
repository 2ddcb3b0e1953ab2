use super::grid::SpatialGrid;
use crate::error::{argument, Result};
use crate::qcore::{Operator, C64};
use nalgebra::DMatrix;
use std::fmt;
use std::str::FromStr;

/// Boundary condition at the origin, `ψ(0) = βψ'(0)`.
///
/// `Robin(0.0)` is the hard wall; Neumann (`β = ∞`) is its own variant so
/// the ghost-point formula never divides by a huge number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Boundary {
    Robin(f64),
    Neumann,
}

impl Boundary {
    pub const DIRICHLET: Boundary = Boundary::Robin(0.0);

    pub fn validate(self) -> Result<Self> {
        match self {
            Boundary::Robin(b) if !b.is_finite() => {
                argument(format!("Robin parameter must be finite (use Neumann for β = ∞), got {b}"))
            }
            other => Ok(other),
        }
    }

    /// The same physical condition seen from the left half-line in its
    /// outward coordinate `y = -x`: `β → -β`.
    pub fn mirrored(self) -> Self {
        match self {
            Boundary::Robin(b) => Boundary::Robin(-b),
            Boundary::Neumann => Boundary::Neumann,
        }
    }

    pub fn is_dirichlet(self) -> bool {
        self == Boundary::DIRICHLET
    }

    pub fn cache_bits(self) -> u64 {
        match self {
            Boundary::Robin(b) => b.to_bits(),
            Boundary::Neumann => u64::MAX,
        }
    }
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Boundary::Robin(b) => write!(f, "{b}"),
            Boundary::Neumann => f.write_str("neumann"),
        }
    }
}

impl FromStr for Boundary {
    type Err = crate::Error;

    /// Accepts a number, `dirichlet`, or `neumann`/`inf`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "neumann" | "inf" | "infinity" => Ok(Boundary::Neumann),
            "dirichlet" => Ok(Boundary::DIRICHLET),
            other => match other.parse::<f64>() {
                Ok(b) => Boundary::Robin(b).validate(),
                Err(_) => argument(format!("cannot parse boundary parameter {s:?}")),
            },
        }
    }
}

/// Free particle on `[0, L]` with `ψ(0) = βψ'(0)` and `ψ(L) = 0`,
/// discretized on the nodes `x_j = j·L/n`, `j = 0..n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfLineSystem {
    pub length: f64,
    pub n: usize,
    pub boundary: Boundary,
    pub mass: f64,
    pub hbar: f64,
}

/// Symmetric tridiagonal matrix acting on nodes `first..n`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
    pub first: usize,
}

impl SymTridiagonal {
    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let n = self.dim();
        let mut m = DMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = self.diag[i];
        }
        for (i, &e) in self.off.iter().enumerate() {
            m[(i, i + 1)] = e;
            m[(i + 1, i)] = e;
        }
        m
    }

    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut acc = v[i] * self.diag[i];
                if i > 0 {
                    acc += v[i - 1] * self.off[i - 1];
                }
                if i + 1 < n {
                    acc += v[i + 1] * self.off[i];
                }
                acc
            })
            .collect()
    }
}

impl HalfLineSystem {
    pub fn new(length: f64, n: usize, boundary: Boundary) -> Result<Self> {
        Self::with_units(length, n, boundary, 1.0, 1.0)
    }

    pub fn with_units(length: f64, n: usize, boundary: Boundary, mass: f64, hbar: f64) -> Result<Self> {
        if !(length > 0.0 && length.is_finite()) {
            return argument(format!("half-line length must be positive, got {length}"));
        }
        if n < 8 {
            return argument(format!("half-line grid needs at least 8 points, got {n}"));
        }
        if !(mass > 0.0 && hbar > 0.0 && mass.is_finite() && hbar.is_finite()) {
            return argument("mass and hbar must be positive");
        }
        Ok(Self { length, n, boundary: boundary.validate()?, mass, hbar })
    }

    pub fn grid(&self) -> SpatialGrid {
        SpatialGrid::new(0.0, self.length, self.n).expect("validated")
    }

    pub fn dx(&self) -> f64 {
        self.length / self.n as f64
    }

    pub fn mirrored(&self) -> Self {
        Self { boundary: self.boundary.mirrored(), ..*self }
    }

    /// First grid node carrying an unknown: 1 for the hard wall (ψ₀ = 0),
    /// 0 otherwise.
    pub fn first_node(&self) -> usize {
        usize::from(self.boundary.is_dirichlet())
    }

    /// `-ħ²/(2m) ∂²` with the ghost node `ψ₋₁ = ψ₁ - 2dx ψ₀/β` eliminated,
    /// symmetrized by the half weight of node 0.
    pub fn tridiagonal(&self) -> SymTridiagonal {
        let c = self.hbar * self.hbar / (2.0 * self.mass * self.dx() * self.dx());
        let first = self.first_node();
        let dim = self.n - first;
        let mut diag = vec![2.0 * c; dim];
        let mut off = vec![-c; dim - 1];
        match self.boundary {
            Boundary::Robin(b) if b != 0.0 => {
                diag[0] = 2.0 * c + 2.0 * c * self.dx() / b;
                off[0] = -std::f64::consts::SQRT_2 * c;
            }
            Boundary::Neumann => off[0] = -std::f64::consts::SQRT_2 * c,
            Boundary::Robin(_) => {}
        }
        SymTridiagonal { diag, off, first }
    }
}

/// Dense form of [`HalfLineSystem::tridiagonal`]. Acts on the nodes that
/// carry unknowns: all `n` nodes, or `n - 1` for the hard wall.
pub fn build_halfline_hamiltonian(sys: &HalfLineSystem) -> Result<Operator> {
    let sys = HalfLineSystem::with_units(sys.length, sys.n, sys.boundary, sys.mass, sys.hbar)?;
    Operator::new(sys.tridiagonal().to_dense().map(|x| C64::new(x, 0.0)))
}
