//! Space-time coarse graining on the line: "stays on the same side of
//! `x = 0` during `[0, t]`" versus "crosses at least once".
//!
//! `C₁ψ = U†(t)[U_R^β(t) ⊕ U_L^β(t)]ψ` and `C₂ψ = ψ - C₁ψ`. The full-line
//! `U(t)` is the finite-difference propagator on the same grid, so that the
//! parity identities (odd states under the hard wall, even states under
//! Neumann) hold to roundoff rather than to discretization error.

use crate::error::{argument, Result};
use crate::halfline::{Boundary, FdLine, GaussianPacket, HalfLinePropagator, HalfLineSystem, SpatialGrid, WaveFunction};
use crate::qcore::{DecoherenceMatrix, C64};
use crate::tolerance;
use rayon::prelude::*;

#[derive(Debug, Clone, PartialEq)]
pub struct HistoryPair {
    pub t: f64,
    pub boundary: Boundary,
    pub mass: f64,
    pub labels: (String, String),
}

impl HistoryPair {
    pub fn new(t: f64, boundary: Boundary) -> Result<Self> {
        if !(t >= 0.0 && t.is_finite()) {
            return argument(format!("history duration must be finite and >= 0, got {t}"));
        }
        Ok(Self {
            t,
            boundary: boundary.validate()?,
            mass: 1.0,
            labels: ("stays always to the same side".into(), "crosses x = 0 at least once".into()),
        })
    }

    pub fn with_mass(mut self, mass: f64) -> Self {
        self.mass = mass;
        self
    }
}

#[derive(Debug, Clone)]
pub struct ClassAmplitudes {
    pub same_side: WaveFunction,
    pub crossing: WaveFunction,
    /// `|ψ(dx)|` and `|ψ(-dx)|` differ by more than 20%: the grid does not
    /// resolve the state at the cut.
    pub coarse_grid: bool,
}

/// Propagators for one `(grid, β, m, ħ)`; construction hits the spectrum
/// cache after the first call.
#[derive(Debug, Clone)]
pub struct LineEvolution {
    line: FdLine,
    right: HalfLinePropagator,
    left: HalfLinePropagator,
}

impl LineEvolution {
    pub fn new(grid: SpatialGrid, boundary: Boundary, mass: f64, hbar: f64) -> Result<Self> {
        let o = grid
            .origin_index()
            .filter(|&o| 2 * o == grid.n())
            .ok_or_else(|| crate::Error::Argument("histories need a symmetric grid with a node at x = 0".into()))?;
        let half = -grid.x_min();
        let sys = HalfLineSystem::with_units(half, o, boundary, mass, hbar)?;
        Ok(Self {
            line: FdLine::new(half, o, mass, hbar)?,
            right: HalfLinePropagator::new(&sys)?,
            left: HalfLinePropagator::new(&sys.mirrored())?,
        })
    }

    fn origin(&self) -> usize {
        self.line.n_half()
    }

    pub fn full(&self, psi: &[C64], t: f64) -> Vec<C64> {
        self.line.evolve_samples(psi, t)
    }

    /// `J†(U_R ⊕ U_L)J ψ`: both halves copy node 0, the result averages it.
    pub fn direct_sum(&self, psi: &[C64], t: f64) -> Vec<C64> {
        let o = self.origin();
        let right = &psi[o..];
        let left: Vec<C64> = (0..o).map(|j| psi[o - j]).collect();
        let r = self.right.evolve_signed(right, t);
        let l = self.left.evolve_signed(&left, t);
        let mut out = vec![C64::new(0.0, 0.0); psi.len()];
        out[o] = (r[0] + l[0]) * 0.5;
        for j in 1..o {
            out[o + j] = r[j];
            out[o - j] = l[j];
        }
        out
    }

    pub fn class_amplitudes(&self, psi: &WaveFunction, t: f64) -> ClassAmplitudes {
        let restricted = self.direct_sum(&psi.samples, t);
        let c1 = self.full(&restricted, -t);
        let c2: Vec<C64> = psi.samples.iter().zip(&c1).map(|(a, b)| a - b).collect();
        let o = self.origin();
        let (a, b) = (psi.samples[o + 1].norm(), psi.samples[o - 1].norm());
        let scale = psi.samples.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let coarse_grid = a.max(b) > 1e-6 * scale && (a - b).abs() > 0.2 * a.max(b);
        ClassAmplitudes {
            same_side: WaveFunction { samples: c1, ..psi.clone() },
            crossing: WaveFunction { samples: c2, ..psi.clone() },
            coarse_grid,
        }
    }
}

fn check_state(psi: &WaveFunction) -> Result<()> {
    if psi.representation != crate::halfline::Representation::Position {
        return argument("histories need the position representation");
    }
    Ok(())
}

/// `(C₁ψ, C₂ψ)` for the pair; `C₁ψ + C₂ψ = ψ` by construction.
pub fn class_amplitudes(psi: &WaveFunction, pair: &HistoryPair) -> Result<ClassAmplitudes> {
    check_state(psi)?;
    let evo = LineEvolution::new(psi.grid, pair.boundary, pair.mass, psi.hbar)?;
    Ok(evo.class_amplitudes(psi, pair.t))
}

fn matrix_from(amps: &ClassAmplitudes, pair: &HistoryPair) -> DecoherenceMatrix {
    DecoherenceMatrix::from_amplitudes(
        &amps.same_side.samples,
        &amps.crossing.samples,
        amps.same_side.step(),
        pair.labels.clone(),
    )
}

/// `d(i,j) = ⟨C_jψ|C_iψ⟩`.
pub fn decoherence_line(psi: &WaveFunction, pair: &HistoryPair) -> Result<DecoherenceMatrix> {
    Ok(matrix_from(&class_amplitudes(psi, pair)?, pair))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConsistencyVerdict {
    pub p_same: f64,
    pub p_cross: f64,
    pub re_d12: f64,
    pub im_d12: f64,
    pub tol: f64,
    pub consistent: bool,
}

impl ConsistencyVerdict {
    pub fn from_matrix(d: &DecoherenceMatrix, tol: f64) -> Self {
        let off = d.off_diagonal();
        Self {
            p_same: d.probability(0),
            p_cross: d.probability(1),
            re_d12: off.re,
            im_d12: off.im,
            tol,
            consistent: d.is_consistent(tol),
        }
    }

    /// `p_same + p_cross + 2 Re d(1,2) - 1`.
    pub fn sum_defect(&self) -> f64 {
        self.p_same + self.p_cross + 2.0 * self.re_d12 - 1.0
    }
}

/// Boundary-condition residual `|ψ₀ - β(ψ₁ - ψ₋₁)/(2dx)|` with the central
/// difference, or `|ψ₁ - ψ₋₁|/(2dx)` for Neumann.
pub fn boundary_residual(psi: &[C64], origin: usize, dx: f64, boundary: Boundary) -> f64 {
    let d = (psi[origin + 1] - psi[origin - 1]) / (2.0 * dx);
    match boundary {
        Boundary::Neumann => d.norm(),
        Boundary::Robin(b) => (psi[origin] - d * b).norm(),
    }
}

/// One-sided residuals `(right, left)` with second-order differences taken
/// from within each half-line.
pub fn one_sided_residuals(psi: &[C64], o: usize, dx: f64, boundary: Boundary) -> (f64, f64) {
    let right = (psi[o + 1] * 4.0 - psi[o] * 3.0 - psi[o + 2]) / (2.0 * dx);
    let left = (psi[o] * 3.0 - psi[o - 1] * 4.0 + psi[o - 2]) / (2.0 * dx);
    let r = |d: C64| match boundary {
        Boundary::Neumann => d.norm(),
        Boundary::Robin(b) => (psi[o] - d * b).norm(),
    };
    (r(right), r(left))
}

/// Discrete flux `(ħ/m) Im(ψ̄₀ (ψ₁ - ψ₋₁)/(2dx))` through the origin.
pub fn origin_flux(psi: &[C64], origin: usize, dx: f64, mass: f64, hbar: f64) -> f64 {
    let d = (psi[origin + 1] - psi[origin - 1]) / (2.0 * dx);
    hbar / mass * (psi[origin].conj() * d).im
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// `G(x) - G(-x)`: satisfies the hard-wall condition.
    Odd,
    /// `G(x) + G(-x)`: satisfies the Neumann condition.
    Even,
    /// `G(x) + c·B(x)` with a bump `B` chosen so the requested condition
    /// holds exactly on the grid (even bump for finite β, odd for Neumann).
    Corrected,
    /// `G(x)` as is. Not built to satisfy any condition, so scan rows are
    /// never rejected.
    Plain,
}

/// Builds normalized line states meant to satisfy `ψ(0) = βψ'(0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateFamily {
    pub kind: FamilyKind,
    pub packet: GaussianPacket,
    pub grid: SpatialGrid,
    pub mass: f64,
    pub hbar: f64,
}

impl StateFamily {
    pub fn build(&self, boundary: Boundary) -> Result<WaveFunction> {
        use crate::halfline::Parity;
        let GaussianPacket { x0, p0, sigma, .. } = self.packet;
        let parity = match self.kind {
            FamilyKind::Odd => Parity::Odd,
            FamilyKind::Even => Parity::Even,
            FamilyKind::Corrected | FamilyKind::Plain => Parity::None,
        };
        let g = GaussianPacket::with_parity(x0, p0, sigma, parity)?.sample(self.grid, self.hbar);
        if self.kind != FamilyKind::Corrected {
            return Ok(g);
        }
        let o = self.grid.origin_index().ok_or_else(|| crate::Error::Argument("grid has no node at x = 0".into()))?;
        let dx = self.grid.dx();
        let width = sigma;
        let bump = |x: f64| match boundary {
            Boundary::Neumann => x * (-x * x / (2.0 * width * width)).exp(),
            Boundary::Robin(_) => (-x * x / (2.0 * width * width)).exp(),
        };
        let b: Vec<C64> = self.grid.points().into_iter().map(|x| C64::new(bump(x), 0.0)).collect();
        let d = |v: &[C64]| (v[o + 1] - v[o - 1]) / (2.0 * dx);
        let c = match boundary {
            Boundary::Neumann => -d(&g.samples) / d(&b),
            Boundary::Robin(beta) => d(&g.samples) * beta - g.samples[o],
        };
        Ok(g.map_samples(|j, z| z + b[j] * c).normalized())
    }
}

/// One `(β, t)` entry of a scan.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub boundary: Boundary,
    pub t: f64,
    /// `None` when the initial state violates the condition by more than
    /// the builder tolerance.
    pub verdict: Option<ConsistencyVerdict>,
    pub initial_residual: f64,
    /// Central-difference residual of the full-line evolved state.
    pub residual: f64,
    pub residual_right: f64,
    pub residual_left: f64,
    pub flux: f64,
    /// Sup-norm distance between direct-sum and full-line evolution.
    pub direct_sum_distance: f64,
    pub coarse_grid: bool,
}

impl ScanRow {
    pub fn rejected(&self) -> bool {
        self.verdict.is_none()
    }

    /// Direct-sum and full-line evolution agree to the scan tolerance.
    pub fn evolutions_agree(&self) -> bool {
        self.direct_sum_distance <= 1e-3
    }
}

/// Consistency verdicts and boundary-condition persistence over a
/// `(β, t)` grid. Rows are independent and evaluated in parallel when
/// `parallel` is set; the output is sorted by `(β list order, t)`.
pub fn beta_condition_scan(
    family: &StateFamily,
    betas: &[Boundary],
    times: &[f64],
    tol: f64,
    parallel: bool,
) -> Result<Vec<ScanRow>> {
    for &t in times {
        HistoryPair::new(t, Boundary::DIRICHLET)?;
    }
    let o = family.grid.origin_index().ok_or_else(|| crate::Error::Argument("grid has no node at x = 0".into()))?;
    let dx = family.grid.dx();
    let mut jobs = Vec::new();
    for (bi, &b) in betas.iter().enumerate() {
        let psi = family.build(b)?;
        let evo = LineEvolution::new(family.grid, b, family.mass, family.hbar)?;
        let r0 = boundary_residual(&psi.samples, o, dx, b);
        for (ti, &t) in times.iter().enumerate() {
            jobs.push((bi, ti, b, t, psi.clone(), evo.clone(), r0));
        }
    }
    let run = |(bi, ti, b, t, psi, evo, r0): (usize, usize, Boundary, f64, WaveFunction, LineEvolution, f64)| {
        let full = evo.full(&psi.samples, t);
        let ds = evo.direct_sum(&psi.samples, t);
        let distance = full.iter().zip(&ds).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        let (rr, rl) = one_sided_residuals(&full, o, dx, b);
        let (verdict, coarse) = if family.kind == FamilyKind::Plain || r0 <= tolerance::STATE_BUILDER_BC {
            let pair = HistoryPair::new(t, b).expect("validated").with_mass(family.mass);
            let amps = evo.class_amplitudes(&psi, t);
            (Some(ConsistencyVerdict::from_matrix(&matrix_from(&amps, &pair), tol)), amps.coarse_grid)
        } else {
            (None, false)
        };
        (
            (bi, ti),
            ScanRow {
                boundary: b,
                t,
                verdict,
                initial_residual: r0,
                residual: boundary_residual(&full, o, dx, b),
                residual_right: rr,
                residual_left: rl,
                flux: origin_flux(&full, o, dx, family.mass, family.hbar),
                direct_sum_distance: distance,
                coarse_grid: coarse,
            },
        )
    };
    let mut rows: Vec<((usize, usize), ScanRow)> =
        if parallel { jobs.into_par_iter().map(run).collect() } else { jobs.into_iter().map(run).collect() };
    rows.sort_by_key(|(k, _)| *k);
    Ok(rows.into_iter().map(|(_, r)| r).collect())
}

/// Latest time before a packet at `x0` with momentum `p0` and width `σ`
/// reaches the walls at `±half_width`, keeping a six-σ margin.
pub fn reflection_safe_horizon(packet: &GaussianPacket, half_width: f64, mass: f64, hbar: f64) -> f64 {
    let room = half_width - packet.x0.abs() - 6.0 * packet.sigma;
    let speed = packet.p0.abs() / mass + hbar / (mass * packet.sigma);
    (room / speed).max(0.0)
}
