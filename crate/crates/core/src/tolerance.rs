//! Default tolerances shared by the library, the CLI and the test suites.

/// Algebraic identities evaluated in floating point (decomposition of
/// unity, telescoping, hermiticity of constructed operators).
pub const ALGEBRAIC: f64 = 1e-10;

/// Predicate tolerance for `is_hermitian`, `is_unitary`, `is_projector`
/// on user-supplied operators.
pub const OPERATOR_CHECK: f64 = 1e-9;

/// Relative threshold on `|Re d(1,2)|` for finite-dimensional
/// consistency verdicts.
pub const CONSISTENCY_ALGEBRAIC: f64 = 1e-6;

/// Relative threshold on `|Re d(1,2)|` for grid-based verdicts on the line.
pub const CONSISTENCY_GRID: f64 = 1e-3;

/// Floor for the scale of relative consistency checks.
pub const CONSISTENCY_FLOOR: f64 = 1e-30;

/// Normalization tolerance for wave functions built on a grid.
pub const NORMALIZATION: f64 = 1e-8;

/// Trace tolerance for density matrices.
pub const TRACE: f64 = 1e-9;

/// Captured-mass change that stops window widening for arrival densities.
pub const WINDOW_MASS_CHANGE: f64 = 1e-4;

/// Minimal captured mass accepted by `arrival_moments`.
pub const MIN_CAPTURED_MASS: f64 = 0.99;

/// Maximum violation of the boundary condition accepted from a state builder.
pub const STATE_BUILDER_BC: f64 = 1e-6;
