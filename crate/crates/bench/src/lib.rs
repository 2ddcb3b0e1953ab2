//! Criterion benchmarks for the `qzeno` numerical kernels live in `benches/`.
