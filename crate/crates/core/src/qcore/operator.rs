use std::ops::{Add, Mul, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{argument, domain, Result};

pub type C64 = Complex64;

pub(crate) const I: C64 = C64 { re: 0.0, im: 1.0 };

/// A dense complex square matrix: Hamiltonians, projectors, propagators,
/// class operators and density matrices all share this representation.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator(DMatrix<C64>);

impl Operator {
    /// Wraps a matrix, rejecting non-square or non-finite input.
    pub fn new(m: DMatrix<C64>) -> Result<Self> {
        if m.nrows() != m.ncols() || m.nrows() == 0 {
            return argument(format!(
                "operator must be a non-empty square matrix, got {}x{}",
                m.nrows(),
                m.ncols()
            ));
        }
        if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return domain("operator has non-finite entries");
        }
        Ok(Self(m))
    }

    /// Row-major construction from a slice of `dim * dim` entries.
    pub fn from_rows(dim: usize, entries: &[C64]) -> Result<Self> {
        if entries.len() != dim * dim {
            return argument(format!("expected {} entries, got {}", dim * dim, entries.len()));
        }
        Self::new(DMatrix::from_row_slice(dim, dim, entries))
    }

    pub fn from_real_rows(dim: usize, entries: &[f64]) -> Result<Self> {
        let c: Vec<C64> = entries.iter().map(|&x| C64::new(x, 0.0)).collect();
        Self::from_rows(dim, &c)
    }

    pub fn identity(dim: usize) -> Self {
        Self(DMatrix::identity(dim, dim))
    }

    pub fn zeros(dim: usize) -> Self {
        Self(DMatrix::zeros(dim, dim))
    }

    /// Projector onto the span of the given computational basis indices.
    pub fn basis_projector(dim: usize, indices: &[usize]) -> Self {
        let mut m = DMatrix::zeros(dim, dim);
        for &i in indices {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        Self(m)
    }

    /// `|v><v|` for a (not necessarily normalized) vector.
    pub fn outer(v: &[C64]) -> Self {
        let n = v.len();
        Self(DMatrix::from_fn(n, n, |i, j| v[i] * v[j].conj()))
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.0
    }

    pub fn into_matrix(self) -> DMatrix<C64> {
        self.0
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.0[(row, col)]
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn trace(&self) -> C64 {
        self.0.trace()
    }

    pub fn scale(&self, z: C64) -> Self {
        Self(&self.0 * z)
    }

    pub fn scale_re(&self, x: f64) -> Self {
        self.scale(C64::new(x, 0.0))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0 - &other.0 * &self.0)
    }

    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| self.0[(i, j)] * v[j]).sum())
            .collect()
    }

    /// Largest singular value.
    pub fn op_norm(&self) -> f64 {
        self.0
            .clone()
            .svd(false, false)
            .singular_values
            .iter()
            .fold(0.0_f64, |a, &b| a.max(b))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.norm()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0_f64, |a, z| a.max(z.norm()))
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (self - other).op_norm()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        (&self.0 - self.0.adjoint()).iter().all(|z| z.norm() <= tol)
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        let n = self.dim();
        let g = self.0.adjoint() * &self.0 - DMatrix::<C64>::identity(n, n);
        g.iter().all(|z| z.norm() <= tol)
    }

    /// `A^2 = A` and `A^† = A` within `tol`, entrywise.
    pub fn is_projector(&self, tol: f64) -> bool {
        self.is_hermitian(tol) && (&self.0 * &self.0 - &self.0).iter().all(|z| z.norm() <= tol)
    }

    /// `1 - self`.
    pub fn complement(&self) -> Self {
        Self(DMatrix::identity(self.dim(), self.dim()) - &self.0)
    }

    /// Integer power by repeated squaring.
    pub fn pow(&self, mut n: u64) -> Self {
        let dim = self.dim();
        let mut base = self.0.clone();
        let mut acc = DMatrix::<C64>::identity(dim, dim);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        Self(acc)
    }

    pub(crate) fn check_same_dim(&self, other: &Self, what: &str) -> Result<()> {
        if self.dim() != other.dim() {
            return argument(format!(
                "{what}: dimension mismatch ({} vs {})",
                self.dim(),
                other.dim()
            ));
        }
        Ok(())
    }

    pub(crate) fn require_hermitian(&self, what: &str) -> Result<()> {
        if !self.is_hermitian(crate::tolerance::OPERATOR_CHECK * self.max_abs().max(1.0)) {
            return domain(format!("{what} is not hermitian"));
        }
        Ok(())
    }

    pub(crate) fn require_projector(&self, what: &str) -> Result<()> {
        if !self.is_projector(crate::tolerance::OPERATOR_CHECK) {
            return domain(format!("{what} is not an orthogonal projector"));
        }
        Ok(())
    }
}

impl<'a> Add<&'a Operator> for &'a Operator {
    type Output = Operator;
    fn add(self, rhs: &'a Operator) -> Operator {
        Operator(&self.0 + &rhs.0)
    }
}

impl<'a> Sub<&'a Operator> for &'a Operator {
    type Output = Operator;
    fn sub(self, rhs: &'a Operator) -> Operator {
        Operator(&self.0 - &rhs.0)
    }
}

impl<'a> Mul<&'a Operator> for &'a Operator {
    type Output = Operator;
    fn mul(self, rhs: &'a Operator) -> Operator {
        Operator(&self.0 * &rhs.0)
    }
}

impl Add for Operator {
    type Output = Operator;
    fn add(self, rhs: Operator) -> Operator {
        Operator(self.0 + rhs.0)
    }
}

impl Sub for Operator {
    type Output = Operator;
    fn sub(self, rhs: Operator) -> Operator {
        Operator(self.0 - rhs.0)
    }
}

impl Mul for Operator {
    type Output = Operator;
    fn mul(self, rhs: Operator) -> Operator {
        Operator(self.0 * rhs.0)
    }
}

/// Pauli matrices `σ₁, σ₂, σ₃`.
pub fn pauli() -> [Operator; 3] {
    let z = C64::new(0.0, 0.0);
    let o = C64::new(1.0, 0.0);
    [
        Operator(DMatrix::from_row_slice(2, 2, &[z, o, o, z])),
        Operator(DMatrix::from_row_slice(2, 2, &[z, -I, I, z])),
        Operator(DMatrix::from_row_slice(2, 2, &[o, z, z, -o])),
    ]
}
