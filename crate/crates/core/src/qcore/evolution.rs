use nalgebra::DMatrix;

use super::operator::{Operator, C64, I};
use crate::error::{argument, Result};

/// A hermitian Hamiltonian together with its spectral decomposition.
///
/// Every propagator is assembled as `V exp(-iΛt/ħ) V†`, which keeps
/// `U(t)` unitary to roundoff for any `t`.
#[derive(Debug, Clone)]
pub struct Hamiltonian {
    op: Operator,
    hbar: f64,
    energies: Vec<f64>,
    vectors: DMatrix<C64>,
}

impl Hamiltonian {
    pub fn new(op: Operator, hbar: f64) -> Result<Self> {
        if !(hbar > 0.0 && hbar.is_finite()) {
            return argument(format!("hbar must be positive and finite, got {hbar}"));
        }
        op.require_hermitian("hamiltonian")?;
        let sym = (op.matrix() + op.matrix().adjoint()) * C64::new(0.5, 0.0);
        let eig = sym.symmetric_eigen();
        Ok(Self {
            op,
            hbar,
            energies: eig.eigenvalues.iter().copied().collect(),
            vectors: eig.eigenvectors,
        })
    }

    pub fn operator(&self) -> &Operator {
        &self.op
    }

    pub fn dim(&self) -> usize {
        self.op.dim()
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    /// `U(t) = exp(-iHt/ħ)`.
    pub fn evolve(&self, t: f64) -> Operator {
        if t == 0.0 {
            return Operator::identity(self.dim());
        }
        let phases: Vec<C64> = self
            .energies
            .iter()
            .map(|&e| C64::from_polar(1.0, -e * t / self.hbar))
            .collect();
        let mut scaled = self.vectors.clone();
        for (j, ph) in phases.iter().enumerate() {
            for x in scaled.column_mut(j).iter_mut() {
                *x *= ph;
            }
        }
        Operator::new(scaled * self.vectors.adjoint()).expect("finite propagator")
    }

    /// Heisenberg picture `A(t) = U†(t) A U(t)`.
    pub fn heisenberg(&self, a: &Operator, t: f64) -> Operator {
        let u = self.evolve(t);
        &(&u.adjoint() * a) * &u
    }

    /// `Ṗ = (i/ħ)[H, P]`.
    pub fn pdot(&self, p: &Operator) -> Result<Operator> {
        self.op.check_same_dim(p, "pdot")?;
        Ok(self.op.commutator(p).scale(I / self.hbar))
    }
}

/// `exp(-iHt/ħ)` for a hermitian `H`.
pub fn evolve(h: &Operator, t: f64, hbar: f64) -> Result<Operator> {
    Ok(Hamiltonian::new(h.clone(), hbar)?.evolve(t))
}

/// `(i/ħ)[H, P]` after validating `H` hermitian and `P` a projector.
pub fn pdot(h: &Operator, p: &Operator, hbar: f64) -> Result<Operator> {
    h.check_same_dim(p, "pdot")?;
    p.require_projector("P")?;
    Hamiltonian::new(h.clone(), hbar)?.pdot(p)
}
