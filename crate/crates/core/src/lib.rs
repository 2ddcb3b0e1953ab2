//! Quantum Zeno restricted propagators, path decomposition expansions,
//! decoherence functionals for space-time histories, and Kijowski's
//! time-of-arrival density for the free particle.
//!
//! Units: `ħ` is a parameter everywhere it appears (default 1).

// Links the system OpenBLAS/LAPACK used by the half-line eigensolver.
extern crate openblas_src;

pub mod arrival;
pub mod error;
pub mod halfline;
pub mod histories;
pub mod quadrature;
pub mod qcore;
pub mod tolerance;

pub use error::{Error, Result};
pub use qcore::{
    decoherence_functional, decomposition_of_unity_residual, pdx_assemble, zeno_product, DecoherenceMatrix,
    Hamiltonian, Operator, PdxTerms, TwoStateSystem, ZenoSchedule, C64,
};
