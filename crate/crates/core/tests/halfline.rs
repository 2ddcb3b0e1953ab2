use qzeno::halfline::*;
use qzeno::C64;
use std::f64::consts::PI;

fn fd_level(c: f64, theta: f64) -> f64 {
    2.0 * c * (1.0 - theta.cos())
}

#[test]
fn hard_wall_box_levels() {
    // Nodes 1..n-1 between two hard walls: 2c(1 - cos(kπ/n)).
    let (l, n) = (10.0, 200);
    let sys = HalfLineSystem::new(l, n, Boundary::DIRICHLET).unwrap();
    let c = 1.0 / (2.0 * sys.dx() * sys.dx());
    let s = spectrum(&sys).unwrap();
    assert_eq!(s.energies.len(), n - 1);
    for k in 0..10 {
        let expected = fd_level(c, (k + 1) as f64 * PI / n as f64);
        assert!((s.energies[k] - expected).abs() < 1e-10 * expected.max(1.0), "k={k}");
    }
    // Continuum limit (kπ/L)²/2 for low levels.
    assert!((s.energies[0] - (PI / l).powi(2) / 2.0).abs() < 1e-4);
}

#[test]
fn neumann_levels_and_positive_ground() {
    // Ghost-node Neumann at 0, hard wall at L: 2c(1 - cos((k+½)π/n)).
    let (l, n) = (10.0, 200);
    let sys = HalfLineSystem::new(l, n, Boundary::Neumann).unwrap();
    let c = 1.0 / (2.0 * sys.dx() * sys.dx());
    let s = spectrum(&sys).unwrap();
    for k in 0..10 {
        let expected = fd_level(c, (k as f64 + 0.5) * PI / n as f64);
        assert!((s.energies[k] - expected).abs() < 1e-10 * expected.max(1.0), "k={k}");
    }
    assert!(s.energies[0] > 0.0 && s.energies[0] < 0.02);
}

#[test]
fn attractive_robin_bound_state() {
    let sys = HalfLineSystem::new(20.0, 2048, Boundary::Robin(-1.0)).unwrap();
    let e = &spectrum(&sys).unwrap().energies;
    assert!((e[0] + 0.5).abs() < 1e-3, "{}", e[0]);
    assert!(e[1] > 0.0);
}

#[test]
fn negative_level_iff_beta_negative() {
    for beta in [-2.0, -1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 1.0, 2.0] {
        let sys = HalfLineSystem::new(20.0, 1024, Boundary::Robin(beta)).unwrap();
        let negatives = spectrum(&sys).unwrap().energies.iter().filter(|&&e| e < 0.0).count();
        assert_eq!(negatives, usize::from(beta < 0.0), "beta={beta}");
        if beta < 0.0 {
            let e0 = spectrum(&sys).unwrap().energies[0];
            let exact = -1.0 / (2.0 * beta * beta);
            assert!((e0 - exact).abs() < 0.02 * exact.abs(), "beta={beta}: {e0} vs {exact}");
        }
    }
    let neumann = HalfLineSystem::new(20.0, 1024, Boundary::Neumann).unwrap();
    assert!(spectrum(&neumann).unwrap().energies[0] > 0.0);
}

#[test]
fn hamiltonian_matrix_is_symmetric_and_sized() {
    for b in [Boundary::DIRICHLET, Boundary::Neumann, Boundary::Robin(0.3)] {
        let sys = HalfLineSystem::new(5.0, 32, b).unwrap();
        let h = build_halfline_hamiltonian(&sys).unwrap();
        assert_eq!(h.dim(), 32 - sys.first_node());
        assert!(h.is_hermitian(0.0));
    }
}

#[test]
fn images_match_restricted_propagation() {
    for (b, parity) in [(Boundary::DIRICHLET, Parity::Odd), (Boundary::Neumann, Parity::Even)] {
        let sys = HalfLineSystem::new(20.0, 2048, b).unwrap();
        let g = GaussianPacket::with_parity(5.0, -1.0, 1.0, parity).unwrap();
        let psi = WaveFunction::half_line(sys.grid(), g.sample(sys.grid(), 1.0).samples).unwrap();
        let out = restricted_propagate(&psi, &sys, 5.0).unwrap();
        let exact = g.sample_evolved(sys.grid(), 5.0, 1.0, 1.0);
        assert!(out.sup_distance(&exact) < 1e-4, "{b}: {}", out.sup_distance(&exact));
    }
}

#[test]
fn image_kernel_quadrature_matches_closed_form() {
    let grid = SpatialGrid::new(0.0, 25.0, 2048).unwrap();
    for (images, parity) in [(Images::Dirichlet, Parity::Odd), (Images::Neumann, Parity::Even)] {
        let g = GaussianPacket::with_parity(6.0, -1.0, 1.0, parity).unwrap();
        let psi = WaveFunction::half_line(grid, g.sample(grid, 1.0).samples).unwrap();
        let out = kernel_evolve(&psi, 3.0, 1.0, images).unwrap();
        let exact = g.sample_evolved(grid, 3.0, 1.0, 1.0);
        let near: f64 = out.samples[..1200]
            .iter()
            .zip(&exact.samples)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(near < 1e-5, "{images:?}: {near}");
    }
}

#[test]
fn free_kernel_semigroup() {
    let grid = SpatialGrid::symmetric(30.0, 2048).unwrap();
    let g = GaussianPacket::new(-2.0, 1.0, 1.0).unwrap();
    let psi = g.sample(grid, 1.0);
    let twice = kernel_evolve(&kernel_evolve(&psi, 1.0, 1.0, Images::None).unwrap(), 1.0, 1.0, Images::None).unwrap();
    let once = kernel_evolve(&psi, 2.0, 1.0, Images::None).unwrap();
    let exact = g.sample_evolved(grid, 2.0, 1.0, 1.0);
    let inner = |a: &WaveFunction, b: &WaveFunction| {
        (512..1536).map(|j| (a.samples[j] - b.samples[j]).norm()).fold(0.0, f64::max)
    };
    assert!(inner(&twice, &once) < 1e-5);
    assert!(inner(&once, &exact) < 1e-5);
}

#[test]
fn free_kernel_rejects_non_positive_time() {
    assert!(free_kernel(0.0, 1.0, 0.0, 1.0, 1.0).is_err());
    assert!(free_kernel(0.0, 1.0, -1.0, 1.0, 1.0).is_err());
}

fn fitted_exponent(hs: &[f64], vs: &[f64]) -> f64 {
    let n = hs.len() - 1;
    (vs[n] / vs[0]).ln() / (hs[n] / hs[0]).ln()
}

#[test]
fn phq_scales_with_parity_at_the_cut() {
    // Nodes straddle x = 0 at ±dx/2.
    let (mut hs, mut odd, mut even) = (Vec::new(), Vec::new(), Vec::new());
    for n in [256usize, 512, 1024, 2048] {
        let dx = 20.0 / n as f64;
        let grid = SpatialGrid::new(-10.0 + dx / 2.0, 10.0 + dx / 2.0, n).unwrap();
        hs.push(dx);
        let o = GaussianPacket::with_parity(1.5, 0.5, 1.0, Parity::Odd).unwrap().sample(grid, 1.0);
        let e = GaussianPacket::with_parity(1.5, 0.5, 1.0, Parity::Even).unwrap().sample(grid, 1.0);
        odd.push(phq_nonzero_check(&o, 1.0).unwrap());
        even.push(phq_nonzero_check(&e, 1.0).unwrap());
    }
    assert!((fitted_exponent(&hs, &odd) + 0.5).abs() < 0.05, "{}", fitted_exponent(&hs, &odd));
    assert!((fitted_exponent(&hs, &even) + 1.5).abs() < 0.05, "{}", fitted_exponent(&hs, &even));
}

#[test]
fn no_flux_through_self_adjoint_walls() {
    for b in [Boundary::DIRICHLET, Boundary::Neumann, Boundary::Robin(0.7), Boundary::Robin(-0.4)] {
        let sys = HalfLineSystem::new(16.0, 512, b).unwrap();
        let prop = HalfLinePropagator::new(&sys).unwrap();
        let g = GaussianPacket::new(5.0, -2.0, 0.8).unwrap();
        let mut psi = g.sample(sys.grid(), 1.0).samples;
        if b.is_dirichlet() {
            psi[0] = C64::new(0.0, 0.0);
        }
        let weight = |v: &[C64]| -> f64 {
            v.iter().enumerate().map(|(j, z)| if j == 0 { 0.5 } else { 1.0 } * z.norm_sqr()).sum::<f64>()
        };
        let n0 = weight(&psi);
        for t in [0.5, 2.5, 4.0] {
            let out = prop.evolve_signed(&psi, t);
            assert!((weight(&out) - n0).abs() < 1e-10 * n0, "{b} t={t}");
            assert!(wall_flux(&out, &sys).abs() < 1e-12, "{b} t={t}");
        }
    }
}

#[test]
fn grid_zeno_limit_is_the_hard_wall() {
    // Projecting a full-line lattice evolution onto x > 0 after each step
    // converges to the hard-wall half-line evolution.
    let (l, n_half, t) = (12.0, 256, 1.5);
    let line = FdLine::new(l, n_half, 1.0, 1.0).unwrap();
    let grid = line.grid();
    let o = grid.origin_index().unwrap();
    let g = GaussianPacket::new(3.0, -1.5, 0.7).unwrap();
    let mut start = g.sample(grid, 1.0).samples;
    for z in start.iter_mut().take(o + 1) {
        *z = C64::new(0.0, 0.0);
    }
    let sys = HalfLineSystem::new(l, n_half, Boundary::DIRICHLET).unwrap();
    let wall = HalfLinePropagator::new(&sys).unwrap().evolve_signed(&start[o..], t);
    let mut errors = Vec::new();
    for steps in [32usize, 128, 512, 2048] {
        let mut psi = start.clone();
        for _ in 0..steps {
            psi = line.evolve_samples(&psi, t / steps as f64);
            for z in psi.iter_mut().take(o + 1) {
                *z = C64::new(0.0, 0.0);
            }
        }
        let err = psi[o..].iter().zip(&wall).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        errors.push(err);
    }
    assert!(errors.windows(2).all(|w| w[1] < w[0]), "{errors:?}");
    // First order in 1/n once ‖H‖δt is small.
    assert!(errors[2] / errors[3] > 3.5 && errors[3] < 0.01, "{errors:?}");
}

#[test]
fn spectral_evolution_preserves_parity() {
    let grid = SpatialGrid::symmetric(15.0, 1024).unwrap();
    let o = grid.origin_index().unwrap();
    for (parity, sign) in [(Parity::Odd, -1.0), (Parity::Even, 1.0)] {
        let psi = GaussianPacket::with_parity(3.0, 1.2, 1.0, parity).unwrap().sample(grid, 1.0);
        let out = spectral_evolve_line(&psi, 2.0, 1.0);
        let defect = (1..grid.n())
            .map(|k| (out.samples[k] - out.samples[2 * o - k] * sign).norm())
            .fold(0.0, f64::max);
        assert!(defect < 1e-10, "{parity:?}: {defect}");
    }
}

#[test]
fn momentum_round_trip() {
    let grid = SpatialGrid::symmetric(15.0, 512).unwrap();
    let psi = GaussianPacket::new(1.0, 0.7, 1.2).unwrap().sample(grid, 1.0);
    let back = psi.to_momentum().to_position();
    assert!(psi.sup_distance(&back) < 1e-12);
    assert!((psi.to_momentum().norm_sqr() - psi.norm_sqr()).abs() < 1e-10);
}
