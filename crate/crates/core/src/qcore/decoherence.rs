use super::evolution::Hamiltonian;
use super::operator::{Operator, C64};
use super::pdx::DEFAULT_RICHARDSON_LEVELS;
use super::zeno::{restricted_estimate, ZenoSchedule};
use crate::error::{domain, Result};
use crate::tolerance;

/// `d(i,j) = Tr(C_i ρ C_j†)` for a two-element coarse graining.
#[derive(Debug, Clone, PartialEq)]
pub struct DecoherenceMatrix {
    pub d: [[C64; 2]; 2],
    pub labels: (String, String),
}

impl DecoherenceMatrix {
    pub fn from_class_operators(
        c1: &Operator,
        c2: &Operator,
        rho: &Operator,
        labels: (String, String),
    ) -> Self {
        let cs = [c1, c2];
        let mut d = [[C64::new(0.0, 0.0); 2]; 2];
        for (i, ci) in cs.iter().enumerate() {
            let left = *ci * rho;
            for (j, cj) in cs.iter().enumerate() {
                d[i][j] = (&left * &cj.adjoint()).trace();
            }
        }
        Self { d, labels }
    }

    /// Pure-state form `d(i,j) = ⟨C_j ψ | C_i ψ⟩` from the two branch
    /// amplitudes and a quadrature weight for the inner product.
    pub fn from_amplitudes(a1: &[C64], a2: &[C64], weight: f64, labels: (String, String)) -> Self {
        let ip = |a: &[C64], b: &[C64]| -> C64 {
            a.iter().zip(b).map(|(x, y)| x.conj() * y).sum::<C64>() * weight
        };
        let amps = [a1, a2];
        let mut d = [[C64::new(0.0, 0.0); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                d[i][j] = ip(amps[j], amps[i]);
            }
        }
        Self { d, labels }
    }

    pub fn probability(&self, i: usize) -> f64 {
        self.d[i][i].re
    }

    pub fn off_diagonal(&self) -> C64 {
        self.d[0][1]
    }

    pub fn total(&self) -> C64 {
        self.d.iter().flatten().sum()
    }

    pub fn hermiticity_defect(&self) -> f64 {
        (self.d[0][1] - self.d[1][0].conj()).norm()
            .max(self.d[0][0].im.abs())
            .max(self.d[1][1].im.abs())
    }

    /// `|Re d(1,2)| ≤ rel_tol · max(d(1,1), d(2,2), floor)`.
    pub fn is_consistent(&self, rel_tol: f64) -> bool {
        let scale = self
            .probability(0)
            .max(self.probability(1))
            .max(tolerance::CONSISTENCY_FLOOR);
        self.off_diagonal().re.abs() <= rel_tol * scale
    }
}

/// Decoherence functional for "always in the Q subspace during [0, t]"
/// versus its complement.
///
/// `C₁ = U†(t) U_r(t)` with `U_r` the Richardson-extrapolated Zeno product
/// built from `n_zeno` projections, and `C₂ = 1 - C₁`.
pub fn decoherence_functional(
    h: &Hamiltonian,
    q: &Operator,
    rho: &Operator,
    t: f64,
    n_zeno: u64,
) -> Result<DecoherenceMatrix> {
    h.operator().check_same_dim(rho, "rho")?;
    rho.require_hermitian("rho")?;
    let tr = rho.trace();
    if (tr - C64::new(1.0, 0.0)).norm() > tolerance::TRACE {
        return domain(format!("density matrix trace is {tr}, expected 1"));
    }
    let sched = ZenoSchedule::new(t, n_zeno)?;
    let ur = restricted_estimate(h, q, sched, DEFAULT_RICHARDSON_LEVELS)?;
    let c1 = &h.evolve(t).adjoint() * &ur;
    let c2 = c1.complement();
    Ok(DecoherenceMatrix::from_class_operators(
        &c1,
        &c2,
        rho,
        ("always in Q".to_string(), "left Q at least once".to_string()),
    ))
}
