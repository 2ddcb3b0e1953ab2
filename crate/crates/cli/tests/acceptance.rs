//! Acceptance suite: one PASS/FAIL line per criterion, each with its
//! runtime budget. Run with `cargo test -p qzeno-cli --test acceptance -- --nocapture`.

use qzeno::arrival::{
    arrival_moments, classical_arrival, converged_window, current_density_at_origin, kijowski_density, l1_distance,
    time_grid, MomentumState,
};
use qzeno::halfline::{
    line_grid, line_pdx, restricted_propagate, spectrum, Boundary, GaussianPacket, HalfLineSystem, Parity,
    SpatialGrid, WaveFunction,
};
use qzeno::histories::{beta_condition_scan, reflection_safe_horizon, FamilyKind, StateFamily};
use qzeno::qcore::{
    conjugate_time_no_go, pauli, random_hermitian, two_state_commutator_gap, zeno_product, ZenoSchedule,
};
use qzeno::{
    decoherence_functional, decomposition_of_unity_residual, pdx_assemble, Hamiltonian, Operator, TwoStateSystem,
    C64,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{FRAC_PI_2, PI};
use std::process::Command;
use std::time::{Duration, Instant};

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: String) -> Verdict {
    Verdict { pass, detail }
}

fn run(id: u32, name: &str, budget: Duration, f: impl FnOnce() -> Verdict) -> bool {
    let start = Instant::now();
    let v = f();
    let elapsed = start.elapsed();
    let in_budget = elapsed <= budget;
    let pass = v.pass && in_budget;
    println!(
        "{} {:>2} {name}: {} [{:.2} s of {} s{}]",
        if pass { "PASS" } else { "FAIL" },
        id,
        v.detail,
        elapsed.as_secs_f64(),
        budget.as_secs(),
        if in_budget { "" } else { ", over budget" },
    );
    pass
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn two_state_decomposition() -> Verdict {
    let sys = TwoStateSystem::new(1.0);
    let h = sys.hamiltonian();
    let (mut cross, mut bound) = (0.0f64, 0.0f64);
    for t in [0.3, FRAC_PI_2, 2.0] {
        let terms = pdx_assemble(&h, &sys.p(), t, 4096, 201).unwrap();
        let (s, c) = f64::sin_cos(t);
        cross = cross
            .max((terms.crossing.get(0, 1) - C64::new(0.0, -s)).norm())
            .max((terms.crossing.get(1, 1) - C64::new(c - 1.0, 0.0)).norm());
        bound = bound.max(terms.boundary.distance(&(&sys.evolution(t) * &sys.p())));
    }
    verdict(cross <= 1e-6 && bound <= 1e-14, format!("crossing element error {cross:.2e}, boundary error {bound:.2e}"))
}

fn unity_residual() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let dim = rng.random_range(2..=6);
        let h = Hamiltonian::new(random_hermitian(dim, &mut rng), 1.0).unwrap();
        let rot = Hamiltonian::new(random_hermitian(dim, &mut rng), 1.0).unwrap().evolve(1.0);
        let rank = rng.random_range(1..dim);
        let p = &(&rot * &Operator::basis_projector(dim, &(0..rank).collect::<Vec<_>>())) * &rot.adjoint();
        let p = &(&p + &p.adjoint()).scale_re(0.5);
        let sched = ZenoSchedule::new(rng.random_range(0.1..3.0), rng.random_range(1..=20)).unwrap();
        worst = worst.max(decomposition_of_unity_residual(&h, p, sched).unwrap());
    }
    verdict(worst <= 1e-10, format!("worst residual {worst:.2e} over 50 instances"))
}

fn zeno_convergence() -> Verdict {
    let sys = TwoStateSystem::new(1.0);
    let (h, q) = (sys.hamiltonian(), sys.q());
    let wt = FRAC_PI_2;
    let mut ok = true;
    let mut ratio = 0.0f64;
    let mut dist_1e4 = f64::NAN;
    for n in [100u64, 1_000, 10_000, 100_000] {
        let z = zeno_product(&h, &q, ZenoSchedule::new(wt, n).unwrap()).unwrap();
        let err = 1.0 - z.get(1, 1).norm_sqr();
        let bound = wt * wt / n as f64;
        ok &= err <= bound;
        ratio = ratio.max(err / bound);
        if n == 10_000 {
            dist_1e4 = z.distance(&q);
        }
    }
    verdict(
        ok && dist_1e4 <= 1e-3,
        format!("max error/bound {ratio:.4}, distance to Q at n=1e4 {dist_1e4:.2e}"),
    )
}

fn decoherence_closed_form() -> Verdict {
    let sys = TwoStateSystem::new(1.0);
    let (h, q, rho) = (sys.hamiltonian(), sys.q(), sys.down_state());
    let mut worst = 0.0f64;
    for k in 1..=50 {
        let t = 2.0 * PI * k as f64 / 50.0;
        let d = decoherence_functional(&h, &q, &rho, t, 4096).unwrap();
        let (d11, d22, d12) = sys.decoherence(t);
        worst = worst
            .max((d.probability(0) - d11).abs())
            .max((d.probability(1) - d22).abs())
            .max((d.off_diagonal().re - d12).abs())
            .max((d.total() - C64::new(1.0, 0.0)).norm());
    }
    verdict(worst <= 1e-8, format!("worst deviation {worst:.2e} over 50 values of ωt"))
}

fn half_line_extensions() -> Verdict {
    let mut worst = 0.0f64;
    for (b, parity) in [(Boundary::DIRICHLET, Parity::Odd), (Boundary::Neumann, Parity::Even)] {
        let sys = HalfLineSystem::new(20.0, 2048, b).unwrap();
        let g = GaussianPacket::with_parity(5.0, -1.0, 1.0, parity).unwrap();
        let psi = WaveFunction::half_line(sys.grid(), g.sample(sys.grid(), 1.0).samples).unwrap();
        let out = restricted_propagate(&psi, &sys, 5.0).unwrap();
        let images = g.sample_evolved(sys.grid(), 5.0, 1.0, 1.0);
        worst = worst.max(out.sup_distance(&images));
    }
    let sys = HalfLineSystem::new(20.0, 2048, Boundary::Robin(-1.0)).unwrap();
    let e0 = spectrum(&sys).unwrap().energies[0];
    verdict(
        worst <= 1e-4 && (e0 + 0.5).abs() <= 1e-3,
        format!("image-method sup error {worst:.2e}, bound state {e0:.6}"),
    )
}

fn line_decomposition() -> Verdict {
    let packet = GaussianPacket::new(6.0, -1.5, 1.0).unwrap();
    let mut residuals = Vec::new();
    let mut beta_gap = 0.0;
    for n in [512usize, 1024, 2048] {
        let sys = HalfLineSystem::new(20.0, n, Boundary::DIRICHLET).unwrap();
        let psi = packet.sample(line_grid(&sys), 1.0);
        let hard = line_pdx(&psi, &sys, 4.0, n / 5).unwrap();
        residuals.push(hard.residual());
        if n == 2048 {
            let neu = HalfLineSystem::new(20.0, n, Boundary::Neumann).unwrap();
            beta_gap = hard.crossing.distance(&line_pdx(&psi, &neu, 4.0, n / 5).unwrap().crossing);
        }
    }
    let monotone = residuals.windows(2).all(|w| w[1] < w[0]);
    let finest = *residuals.last().unwrap();
    verdict(
        finest <= 5e-3 && monotone && beta_gap > 1e-3,
        format!("residuals {}, β=0 vs Neumann crossing difference {beta_gap:.3}",
            residuals.iter().map(|r| format!("{r:.2e}")).collect::<Vec<_>>().join(" > ")),
    )
}

fn consistent_histories() -> Verdict {
    let packet = GaussianPacket::new(-5.0, 2.0, 1.0).unwrap();
    let grid = SpatialGrid::symmetric(20.0, 4096).unwrap();
    let horizon = reflection_safe_horizon(&packet, 20.0, 1.0, 1.0);
    let times: Vec<f64> = (1..=12).map(|k| horizon * k as f64 / 12.0).collect();
    let family = |kind| StateFamily { kind, packet, grid, mass: 1.0, hbar: 1.0 };
    let check = |kind, b: Boundary, tol: f64| -> (bool, f64, f64) {
        let rows = beta_condition_scan(&family(kind), &[b], &times, tol, true).unwrap();
        let (mut same, mut off) = (1.0f64, 0.0f64);
        for r in &rows {
            let v = r.verdict.as_ref().expect("parity states satisfy their condition");
            same = same.min(v.p_same);
            off = off.max(v.re_d12.abs());
        }
        (same >= 1.0 - 1e-3 && off <= tol, same, off)
    };
    let (odd_ok, odd_same, odd_off) = check(FamilyKind::Odd, Boundary::DIRICHLET, 1e-4);
    let (even_ok, even_same, even_off) = check(FamilyKind::Even, Boundary::Neumann, 1e-3);
    let generic = beta_condition_scan(&family(FamilyKind::Plain), &[Boundary::DIRICHLET], &times, 1e-3, true).unwrap();
    let generic_off = generic.iter().filter_map(|r| r.verdict.as_ref()).map(|v| v.re_d12.abs()).fold(0.0, f64::max);
    verdict(
        odd_ok && even_ok && generic_off > 1e-2,
        format!(
            "odd min p_same {odd_same:.6} max |Re d12| {odd_off:.1e}; even {even_same:.6} / {even_off:.1e}; \
             generic max |Re d12| {generic_off:.3} (t ≤ {horizon:.2})"
        ),
    )
}

fn arrival_density() -> Verdict {
    let state = MomentumState::gaussian(-10.0, 2.0, 2.0, 8.0, 2000, 1.0, 1.0).unwrap();
    let dist = converged_window(&state, classical_arrival(-10.0, 2.0, 1.0), 5.0, 0.01, 4).unwrap();
    let positive = dist.min_density() >= 0.0;
    let norm = dist.captured_mass();
    let mean = arrival_moments(&dist, 1).unwrap();

    let t0 = 1.5;
    let grid = time_grid(0.0, 12.0, 601);
    let shifted: Vec<f64> = grid.iter().map(|t| t - t0).collect();
    let a = kijowski_density(&state.time_translated(t0), &grid).unwrap();
    let b = kijowski_density(&state, &shifted).unwrap();
    let cov = a.density.iter().zip(&b.density).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);

    let fast = MomentumState::gaussian(-10.0, 5.0, 2.0, 10.0, 2000, 1.0, 1.0).unwrap();
    let qd = converged_window(&fast, classical_arrival(-10.0, 5.0, 1.0), 5.0, 0.005, 4).unwrap();
    let j = current_density_at_origin(&fast, &qd.t).unwrap();
    let l1 = l1_distance(&qd.t, &qd.density, &j);
    verdict(
        positive && (norm - 1.0).abs() <= 1e-3 && (mean - 5.0).abs() <= 0.2 && cov <= 1e-8 && l1 <= 0.05,
        format!("min Π {:.1e}, mass {norm:.8}, mean {mean:.4}, covariance error {cov:.1e}, L1(Π, J) {l1:.2e}", dist.min_density()),
    )
}

fn finite_dimensional_no_go() -> Verdict {
    let hbar = 1.0;
    let sys = TwoStateSystem::with_hbar(1.0, hbar);
    let h = sys.hamiltonian_operator();
    let report = conjugate_time_no_go(&h, 500, 11, hbar).unwrap();
    let exact_trace = report.required_trace == C64::new(0.0, 2.0 * hbar);
    // Grid search over T = α + β₁σ₁ + β₂σ₂ + β₃σ₃.
    let [s1, s2, s3] = pauli();
    let target = Operator::identity(2).scale(C64::new(0.0, hbar));
    let axis: Vec<f64> = (-8..=8).map(|k| k as f64 * 0.25).collect();
    let mut min_gap = f64::INFINITY;
    let mut closed_form_err = 0.0f64;
    for &a in &axis {
        for &b1 in &axis {
            for &b2 in &axis {
                for &b3 in &axis {
                    let t = &(&(&Operator::identity(2).scale_re(a) + &s1.scale_re(b1)) + &s2.scale_re(b2))
                        + &s3.scale_re(b3);
                    let gap = (&h.commutator(&t) - &target).frobenius_norm();
                    min_gap = min_gap.min(gap);
                    closed_form_err = closed_form_err.max((gap - two_state_commutator_gap(1.0, hbar, [b1, b2, b3])).abs());
                }
            }
        }
    }
    verdict(
        report.max_trace_commutator <= 1e-12
            && exact_trace
            && min_gap >= 2f64.sqrt() * hbar - 1e-12
            && closed_form_err <= 1e-12,
        format!(
            "max |Tr[H,T]| {:.1e} vs Tr(iħ) = {}, min ‖[H,T] - iħ‖ {min_gap:.6} over {} candidates",
            report.max_trace_commutator,
            report.required_trace,
            axis.len().pow(4)
        ),
    )
}

fn cli_determinism() -> Verdict {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("histories.cfg");
    std::fs::write(&cfg, "# small grid\nn=1024\nt_list=0.5,1.5\nfamily=odd\n").unwrap();
    let cfg = cfg.to_str().unwrap().to_string();
    let runs: Vec<Vec<&str>> = vec![
        vec!["twostate"],
        vec!["zeno-converge"],
        vec!["pdx-verify"],
        vec!["pdx-verify", "--system", "line", "--grid-ladder", "256,512"],
        vec!["histories", "--config", &cfg],
        vec!["arrival", "--p-points", "800"],
    ];
    let bin = env!("CARGO_BIN_EXE_qzeno");
    let mut failures = Vec::new();
    for args in &runs {
        let once = |extra: &[&str]| {
            let out = Command::new(bin).args(args).args(extra).env_remove("QZENO_OUTPUT_DIR").output().unwrap();
            assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
            out.stdout
        };
        let first = once(&[]);
        if first != once(&[]) || first != once(&["--parallel"]) {
            failures.push(args.join(" "));
        }
    }
    verdict(
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} commands byte-identical across repeated and parallel runs", runs.len())
        } else {
            format!("differing output: {failures:?}")
        },
    )
}

#[test]
fn acceptance() {
    let results = [
        run(1, "two-state decomposition", secs(1), two_state_decomposition),
        run(2, "decomposition of unity", secs(5), unity_residual),
        run(3, "Zeno convergence", secs(5), zeno_convergence),
        run(4, "two-state decoherence functional", secs(1), decoherence_closed_form),
        run(5, "half-line extensions", secs(30), half_line_extensions),
        run(6, "line decomposition", secs(120), line_decomposition),
        run(7, "consistent histories", secs(60), consistent_histories),
        run(8, "arrival-time density", secs(30), arrival_density),
        run(9, "finite-dimensional no-go", secs(1), finite_dimensional_no_go),
        run(10, "CLI determinism", secs(60), cli_determinism),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("{passed}/{} criteria passed", results.len());
    assert_eq!(passed, results.len());
}
