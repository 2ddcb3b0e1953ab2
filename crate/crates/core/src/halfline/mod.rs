//! The free particle on the line and on the half-line: grids, wave
//! functions, the free kernel, Robin self-adjoint extensions `H_β`, their
//! propagators, and the boundary-convolution decomposition on the line.

pub mod fd_line;
pub mod grid;
pub mod kernel;
pub mod line_pdx;
pub mod packet;
pub mod phq;
pub mod propagate;
pub mod spectral;
pub mod spectrum;
pub mod system;
pub mod wavefunction;

pub use fd_line::FdLine;
pub use grid::SpatialGrid;
pub use kernel::{free_kernel, kernel_evolve, Images};
pub use line_pdx::{line_grid, line_pdx, line_pdx_residual, LinePdx};
pub use packet::{GaussianPacket, Parity};
pub use phq::phq_nonzero_check;
pub use propagate::{restricted_propagate, wall_flux, HalfLinePropagator};
pub use spectral::{mean_position, spectral_evolve_line};
pub use spectrum::{spectrum, tridiagonal_eigen, Spectrum};
pub use system::{build_halfline_hamiltonian, Boundary, HalfLineSystem, SymTridiagonal};
pub use wavefunction::{Measure, Representation, WaveFunction};
