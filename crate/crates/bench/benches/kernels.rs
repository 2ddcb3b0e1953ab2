use criterion::{criterion_group, criterion_main, Criterion};
use qzeno::arrival::{kijowski_density, time_grid, MomentumState};
use qzeno::halfline::{line_grid, line_pdx, tridiagonal_eigen, Boundary, GaussianPacket, HalfLineSystem};
use qzeno::qcore::random_hermitian;
use qzeno::{pdx_assemble, zeno_product, Hamiltonian, Operator, TwoStateSystem, ZenoSchedule};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

fn qcore(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let h = Hamiltonian::new(random_hermitian(6, &mut rng), 1.0).unwrap();
    let q = Operator::basis_projector(6, &[0, 1, 2]);
    c.bench_function("zeno_product dim 6, n 1e5", |b| {
        b.iter(|| zeno_product(&h, &q, ZenoSchedule::new(black_box(1.0), 100_000).unwrap()).unwrap())
    });
    let sys = TwoStateSystem::new(1.0);
    let h2 = sys.hamiltonian();
    c.bench_function("pdx_assemble two-state, 201 nodes", |b| {
        b.iter(|| pdx_assemble(&h2, &sys.p(), black_box(1.0), 4096, 201).unwrap())
    });
}

fn halfline(c: &mut Criterion) {
    let sys = HalfLineSystem::new(20.0, 1024, Boundary::Robin(0.5)).unwrap();
    let tri = sys.tridiagonal();
    c.bench_function("tridiagonal_eigen n 1024", |b| b.iter(|| tridiagonal_eigen(black_box(&tri)).unwrap()));

    let sys = HalfLineSystem::new(20.0, 512, Boundary::DIRICHLET).unwrap();
    let psi = GaussianPacket::new(6.0, -1.5, 1.0).unwrap().sample(line_grid(&sys), 1.0);
    let mut group = c.benchmark_group("line");
    group.sample_size(10);
    group.bench_function("line_pdx n 512, 100 nodes", |b| b.iter(|| line_pdx(&psi, &sys, black_box(4.0), 100).unwrap()));
    group.finish();
}

fn arrival(c: &mut Criterion) {
    let state = MomentumState::gaussian(-10.0, 2.0, 2.0, 8.0, 2000, 1.0, 1.0).unwrap();
    let t = time_grid(0.0, 10.0, 200);
    c.bench_function("kijowski_density 4000 momenta x 200 times", |b| {
        b.iter(|| kijowski_density(black_box(&state), &t).unwrap())
    });
}

criterion_group!(benches, qcore, halfline, arrival);
criterion_main!(benches);
