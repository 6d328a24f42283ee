//! Lambert series Σ aₙ xⁿ/(1 − xⁿ): evaluation engines, the classical
//! closed-form identities, asymptotic expansions as executable residual
//! checks, and the associated prime-number constants.
//!
//! The crate is organised bottom-up:
//!
//! - [`arith`]: sieved tables of d, μ, φ, λ, Ω, Λ and the Chebyshev sums.
//! - [`special`]: Bernoulli numbers, real ζ, prime ζ, exponential integrals,
//!   the cotangent expansion with its remainder bound.
//! - [`lambert`]: the evaluation engines and identity residuals.
//! - [`asymptotics`]: Wigert/Schlömilch expansions, the Voronoi Ei-form,
//!   tauberian residuals and the partition-function bounds.
//! - [`mertens`]: Mertens' constant by two routes and both Mertens theorems.
//!
//! Grid-shaped work (scans, probes, chunked prime sums) goes through [`par`],
//! which uses rayon when the `parallel` feature is on and plain iterators
//! otherwise. Results never depend on the thread count.

#![warn(clippy::all)]

pub mod arith;
pub mod asymptotics;
pub mod consts;
pub mod ddouble;
pub mod error;
pub mod lambert;
pub mod mertens;
pub mod par;
pub mod special;

pub use arith::ArithTable;
pub use error::{Error, Result};
pub use lambert::{EvalReport, StopReason};
