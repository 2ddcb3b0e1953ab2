//! The two-level system `H = ħω σ₁` with `P = |↑⟩⟨↑|`, and the closed
//! forms every numerical route is checked against.

use super::evolution::Hamiltonian;
use super::operator::{Operator, C64};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoStateSystem {
    pub omega: f64,
    pub hbar: f64,
}

impl TwoStateSystem {
    pub fn new(omega: f64) -> Self {
        Self { omega, hbar: 1.0 }
    }

    pub fn with_hbar(omega: f64, hbar: f64) -> Self {
        Self { omega, hbar }
    }

    /// `ħω [[0,1],[1,0]]`.
    pub fn hamiltonian_operator(&self) -> Operator {
        let w = self.hbar * self.omega;
        Operator::from_real_rows(2, &[0.0, w, w, 0.0]).expect("finite omega")
    }

    pub fn hamiltonian(&self) -> Hamiltonian {
        Hamiltonian::new(self.hamiltonian_operator(), self.hbar).expect("hermitian by construction")
    }

    /// Projector onto `|↑⟩ = (1, 0)`.
    pub fn p(&self) -> Operator {
        Operator::basis_projector(2, &[0])
    }

    /// Projector onto `|↓⟩ = (0, 1)`.
    pub fn q(&self) -> Operator {
        Operator::basis_projector(2, &[1])
    }

    pub fn down_state(&self) -> Operator {
        self.q()
    }

    /// `[[cos ωt, -i sin ωt], [-i sin ωt, cos ωt]]`.
    pub fn evolution(&self, t: f64) -> Operator {
        let (s, c) = (self.omega * t).sin_cos();
        Operator::from_rows(2, &[re(c), im(-s), im(-s), re(c)]).unwrap()
    }

    /// `U(t)P = [[cos ωt, 0], [-i sin ωt, 0]]`.
    pub fn boundary_term(&self, t: f64) -> Operator {
        let (s, c) = (self.omega * t).sin_cos();
        Operator::from_rows(2, &[re(c), re(0.0), im(-s), re(0.0)]).unwrap()
    }

    /// `∫₀ᵗ U(t-s) Ṗ U_r(s) ds = [[0, -i sin ωt], [0, cos ωt - 1]]`.
    pub fn crossing_term(&self, t: f64) -> Operator {
        let (s, c) = (self.omega * t).sin_cos();
        Operator::from_rows(2, &[re(0.0), im(-s), re(0.0), re(c - 1.0)]).unwrap()
    }

    /// `ω [[0, -i], [i, 0]]`.
    pub fn pdot(&self) -> Operator {
        Operator::from_rows(2, &[re(0.0), im(-self.omega), im(self.omega), re(0.0)]).unwrap()
    }

    /// `Q [U(t/n) Q]^n = cosⁿ(ωt/n) Q`.
    pub fn zeno_product(&self, t: f64, n: u64) -> Operator {
        if n == 0 {
            return self.q();
        }
        let c = (self.omega * t / n as f64).cos();
        self.q().scale_re(c.powi(n as i32))
    }

    /// Survival probability of `|↓⟩` under `n` projections, `cos^{2n}(ωt/n)`.
    pub fn survival(&self, t: f64, n: u64) -> f64 {
        if n == 0 {
            return 1.0;
        }
        (self.omega * t / n as f64).cos().powi(2 * n as i32)
    }

    /// `(d(1,1), d(2,2), d(1,2))` for `ρ = |↓⟩⟨↓|` in the Zeno limit:
    /// `1`, `2 - 2cos ωt`, `cos ωt - 1`.
    pub fn decoherence(&self, t: f64) -> (f64, f64, f64) {
        let c = (self.omega * t).cos();
        (1.0, 2.0 - 2.0 * c, c - 1.0)
    }
}

fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn im(x: f64) -> C64 {
    C64::new(0.0, x)
}
