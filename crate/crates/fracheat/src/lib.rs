//! Pseudospectral workbench for the nonlinear fractional heat equation
//!
//! ```text
//! du/dt = k(t) Delta_alpha u - h(t) phi(u),    u(0) = u0,
//! ```
//!
//! on a large periodic box standing in for R^d (d = 1 or 2), where
//! Delta_alpha = -(-Delta)^{alpha/2} is the fractional Laplacian with
//! 0 < alpha < 2, k and h are nonnegative time-dependent coefficients and
//! phi is a convex absorbing nonlinearity.
//!
//! The crate builds the alpha-stable kernel spectrally, integrates the
//! mild-solution (variation of constants) form of the equation by
//! time-marching with Picard iteration inside each step, and verifies the
//! quantitative properties the solution is supposed to satisfy: kernel
//! normalization and decay exponents, positivity, mass identities and
//! lower bounds, persistence of mass, L^p convergence diagnostics and the
//! comparison principle. Checks report margins; they never abort a run.

pub mod error;
pub mod fft;
pub mod grid;
pub mod kernel;
pub mod quad;
pub mod report;

pub use error::{Error, Result};
pub use grid::{Field, Grid};
pub use kernel::{fractional_laplacian_spectral, make_kernel, KernelHandle};
pub use report::{Check, TheoremReport, Verdict};
