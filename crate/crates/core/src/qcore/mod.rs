//! Finite-dimensional quantum kernel: operators, unitary evolution, Zeno
//! products, the operator path decomposition and decoherence functionals.

pub mod decoherence;
pub mod evolution;
pub mod nogo;
pub mod operator;
pub mod pdx;
pub mod two_state;
pub mod zeno;

pub use decoherence::{decoherence_functional, DecoherenceMatrix};
pub use evolution::{evolve, pdot, Hamiltonian};
pub use nogo::{conjugate_time_no_go, random_hermitian, two_state_commutator_gap, NoGoReport};
pub use operator::{pauli, Operator, C64};
pub use pdx::{pdx_assemble, PdxTerms, DEFAULT_RICHARDSON_LEVELS};
pub use two_state::TwoStateSystem;
pub use zeno::{
    class_operator_product, decomposition_of_unity_residual, restricted_estimate, zeno_product,
    zeno_product_direct, ZenoSchedule,
};
