//! Interleaved evolution and projection: the generalized decomposition of
//! unity, finite-`n` Zeno products and their extrapolation in `1/n`.

use super::evolution::Hamiltonian;
use super::operator::Operator;
use crate::error::{argument, Result};

/// Equally spaced projection instants `t_k = k·δt`, `δt = t/n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZenoSchedule {
    t: f64,
    n: u64,
}

impl ZenoSchedule {
    /// `n = 0` is accepted and denotes "no projections after the initial one".
    pub fn new(t: f64, n: u64) -> Result<Self> {
        if !(t >= 0.0 && t.is_finite()) {
            return argument(format!("schedule time must be finite and >= 0, got {t}"));
        }
        Ok(Self { t, n })
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn dt(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            self.t / self.n as f64
        }
    }

    pub fn time(&self, k: u64) -> f64 {
        k as f64 * self.dt()
    }
}

fn check_pair(h: &Hamiltonian, p: &Operator, what: &str) -> Result<()> {
    h.operator().check_same_dim(p, what)?;
    p.require_projector(what)
}

/// Operator-norm distance between the identity and
/// `P + Σ_k P(t_k)Q(t_{k-1})…Q(t_1)Q + Q(t_n)…Q(t_1)Q`.
///
/// The identity holds exactly for every schedule; the returned value is
/// pure roundoff.
pub fn decomposition_of_unity_residual(
    h: &Hamiltonian,
    p: &Operator,
    schedule: ZenoSchedule,
) -> Result<f64> {
    check_pair(h, p, "P")?;
    let q = p.complement();
    let mut chain = q.clone();
    let mut sum = p.clone();
    for k in 1..=schedule.n() {
        let tk = schedule.time(k);
        let pk = h.heisenberg(p, tk);
        sum = &sum + &(&pk * &chain);
        let qk = pk.complement();
        chain = &qk * &chain;
    }
    let total = &sum + &chain;
    Ok(total.distance(&Operator::identity(p.dim())))
}

/// `U(nδt)Q(nδt)Q((n-1)δt)…Q`, evaluated in the telescoped form
/// `Q[U(δt)Q]^n`. `n = 0` returns `Q`.
pub fn zeno_product(h: &Hamiltonian, q: &Operator, schedule: ZenoSchedule) -> Result<Operator> {
    check_pair(h, q, "Q")?;
    Ok(zeno_product_unchecked(h, q, schedule))
}

pub(crate) fn zeno_product_unchecked(h: &Hamiltonian, q: &Operator, schedule: ZenoSchedule) -> Operator {
    if schedule.n() == 0 {
        return q.clone();
    }
    let step = &h.evolve(schedule.dt()) * q;
    q * &step.pow(schedule.n())
}

/// The same product written out factor by factor with Heisenberg-picture
/// projectors. O(n) matrix products; used to cross-check the telescoping.
pub fn zeno_product_direct(h: &Hamiltonian, q: &Operator, schedule: ZenoSchedule) -> Result<Operator> {
    check_pair(h, q, "Q")?;
    let chain = class_operator_product(h, q, schedule)?;
    Ok(&h.evolve(schedule.t()) * &chain)
}

/// History operator `Q(t_n)Q(t_{n-1})…Q(t_1)Q` ("always in the Q subspace").
pub fn class_operator_product(h: &Hamiltonian, q: &Operator, schedule: ZenoSchedule) -> Result<Operator> {
    check_pair(h, q, "Q")?;
    let mut chain = q.clone();
    for k in 1..=schedule.n() {
        chain = &h.heisenberg(q, schedule.time(k)) * &chain;
    }
    Ok(chain)
}

/// Richardson extrapolation of Zeno products in `1/n`.
///
/// Evaluates the products at `n, 2n, …, 2^levels·n` and eliminates the
/// leading `levels` powers of `1/n` from the error expansion. `levels = 0`
/// is the plain finite-`n` product.
pub fn restricted_estimate(
    h: &Hamiltonian,
    q: &Operator,
    schedule: ZenoSchedule,
    levels: usize,
) -> Result<Operator> {
    check_pair(h, q, "Q")?;
    Ok(restricted_estimate_unchecked(h, q, schedule, levels))
}

pub(crate) fn restricted_estimate_unchecked(
    h: &Hamiltonian,
    q: &Operator,
    schedule: ZenoSchedule,
    levels: usize,
) -> Operator {
    if schedule.n() == 0 || schedule.t() == 0.0 {
        return zeno_product_unchecked(h, q, schedule);
    }
    let mut table: Vec<Operator> = (0..=levels)
        .map(|j| {
            let s = ZenoSchedule { t: schedule.t(), n: schedule.n() << j };
            zeno_product_unchecked(h, q, s)
        })
        .collect();
    // Neville table for h_j = 1/(2^j n); after pass `k` the entry `j`
    // combines levels j-k..=j.
    for k in 1..=levels {
        let factor = 1.0 / ((1u64 << k) as f64 - 1.0);
        for j in (k..=levels).rev() {
            let diff = &table[j] - &table[j - 1];
            table[j] = &table[j] + &diff.scale_re(factor);
        }
    }
    table.swap_remove(levels)
}
