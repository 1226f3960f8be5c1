//! Exact computation of the distance-dependent two-point functions of
//! vertex-bicolored planar maps.
//!
//! Every generating function lives in [`MSeries`], a truncated formal power
//! series in the vertex weights `(t•, t∘)` (or `(t•, t∘, t⊙)` for the
//! tricolored system) with exact rational coefficients. Four independent
//! routes produce the slice generating functions `B_i`, `W_i`:
//!
//! - [`slices`]: perturbative solution of the nonlinear slice recursions,
//! - [`hankel`]: continued-fraction extraction from Hankel determinants of `F_n`,
//! - [`closedform`]: series evaluation of the explicit parametrized solutions,
//! - [`dimers`]: hard-dimer / LGV reconstruction of the Hankel determinants.
//!
//! [`paths`] holds the weighted lattice path enumerators they all share and
//! [`extensions`] the ternary, binary and tricolored integrable systems.

pub mod closedform;
pub mod dimers;
pub mod error;
pub mod extensions;
pub mod hankel;
pub mod paths;
pub mod qseries;
pub mod slices;

pub use error::{Error, Result};
pub use qseries::{MSeries, Rat, Ring};
