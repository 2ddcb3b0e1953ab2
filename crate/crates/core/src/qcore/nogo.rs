//! No operator `T` on a finite-dimensional space is canonically conjugate to
//! a Hamiltonian: `Tr[H,T] = 0` while `Tr(iħ·1) = iħ·dim`.

use super::operator::{Operator, C64, I};
use crate::error::{argument, Result};
use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

#[derive(Debug, Clone, PartialEq)]
pub struct NoGoReport {
    pub dim: usize,
    pub hbar: f64,
    pub trials: usize,
    /// Largest `|Tr[H,T]|` seen over the sampled `T`.
    pub max_trace_commutator: f64,
    /// `Tr(iħ·1)`, what canonical conjugacy would demand.
    pub required_trace: C64,
    /// Smallest `‖[H,T] - iħ·1‖_F` over the sampled `T`.
    pub min_distance: f64,
    /// `ħ√dim`: `[H,T]` is traceless and therefore Frobenius-orthogonal to
    /// the identity, so no `T` gets closer than this.
    pub floor: f64,
}

impl NoGoReport {
    /// Every sample obeys the floor and the trace obstruction is visible.
    pub fn obstruction_holds(&self, tol: f64) -> bool {
        self.max_trace_commutator <= tol
            && self.required_trace.norm() > tol
            && self.min_distance >= self.floor - tol
    }
}

/// Random hermitian matrix with independent standard normal entries.
pub fn random_hermitian(dim: usize, rng: &mut ChaCha8Rng) -> Operator {
    let mut m = DMatrix::<C64>::zeros(dim, dim);
    for i in 0..dim {
        let d: f64 = StandardNormal.sample(rng);
        m[(i, i)] = C64::new(d, 0.0);
        for j in i + 1..dim {
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = StandardNormal.sample(rng);
            m[(i, j)] = C64::new(re, im);
            m[(j, i)] = C64::new(re, -im);
        }
    }
    Operator::new(m).expect("finite samples")
}

/// Samples `trials` random hermitian `T` and reports the trace obstruction
/// and the closest approach of `[H,T]` to `iħ·1`.
pub fn conjugate_time_no_go(h: &Operator, trials: usize, seed: u64, hbar: f64) -> Result<NoGoReport> {
    let dim = h.dim();
    if dim < 2 {
        return argument(format!("dimension must be >= 2, got {dim}"));
    }
    h.require_hermitian("H")?;
    let target = Operator::identity(dim).scale(I * hbar);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_trace: f64 = 0.0;
    let mut min_distance = f64::INFINITY;
    for _ in 0..trials {
        let t = random_hermitian(dim, &mut rng);
        let c = h.commutator(&t);
        max_trace = max_trace.max(c.trace().norm());
        min_distance = min_distance.min((&c - &target).frobenius_norm());
    }
    Ok(NoGoReport {
        dim,
        hbar,
        trials,
        max_trace_commutator: max_trace,
        required_trace: I * hbar * dim as f64,
        min_distance,
        floor: hbar * (dim as f64).sqrt(),
    })
}

/// `‖[H,T] - iħ·1‖_F` for `H = ħωσ₁` and `T = α + β₁σ₁ + β₂σ₂ + β₃σ₃`,
/// in closed form: `√(8ħ²ω²(β₂² + β₃²) + 2ħ²)`.
///
/// Independent of `α` and `β₁`; minimized at `β₂ = β₃ = 0` with value `√2·ħ`.
pub fn two_state_commutator_gap(omega: f64, hbar: f64, beta: [f64; 3]) -> f64 {
    let w = hbar * omega;
    (8.0 * w * w * (beta[1] * beta[1] + beta[2] * beta[2]) + 2.0 * hbar * hbar).sqrt()
}
