//! Schur multiple zeta values over skew Young tableaux.
//!
//! The crate is split along the lines of the computation:
//!
//! - [`shapes`]: partitions, skew diagrams, tableaux, gluings and the
//!   checkerboard families (primitive ribbons, hooks, anti-hooks, stairs).
//! - [`exact`]: truncated sums in exact rational arithmetic, the Jacobi–Trudi
//!   determinants, ribbon decomposition and the stair determinant identities.
//! - [`numerics`]: fixed-point high precision reals, `π`, Bernoulli numbers,
//!   `ζ(s)` at integers, Newton identities and extrapolated numeric SMZVs.
//! - [`closed_forms`]: symbolic expressions in odd zeta values and `π`, the
//!   closed forms for checkerboard families and the stair/Hankel evaluators.
//!
//! Every truncated sum uses the same convention: all summation variables are
//! positive integers strictly below the cutoff `M`.

pub mod algebra;
pub mod closed_forms;
pub mod error;
pub mod exact;
pub mod expr;
pub mod numerics;
pub mod report;
pub mod shapes;
pub mod suites;

pub use error::{Error, Result};
