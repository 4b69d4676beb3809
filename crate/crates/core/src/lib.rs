//! Exact and floating-point evaluation of the PAC-Bayes complexity sums
//!
//! ```text
//! ξ(m)  = Σ_k C(m,k) (k/m)^k (1-k/m)^(m-k)
//! ξ₂(m) = Σ_{j,k} C(m,j) C(m-j,k) (j/m)^j (k/m)^k (1-j/m-k/m)^(m-j-k)
//! ```
//!
//! together with the Abel and Hurwitz sums that reduce them to single
//! sums, and a checker for `ξ₂(m) = ξ(m) + m`.
//!
//! * [`exact`]: big-integer `γ(m) = m^m ξ(m)` and `γ₂(m) = m^m ξ₂(m)` by
//!   both the defining sums and the simplified single sums.
//! * [`abel_hurwitz`]: `A_m(x, y; p, q)`, `B_m(x_1..x_n; p_1..p_n)`, the
//!   composition iterator and the closed right-hand sides.
//! * [`float_eval`]: overflow-free `f64` series for `ξ` and `ξ₂` at large `m`.
//! * [`cli`]: the `xi` command-line tool.
//!
//! The crate's `examples/` directory has one runnable program per area.

pub mod abel_hurwitz;
pub mod cli;
pub mod error;
pub mod exact;
pub mod float_eval;
pub mod rational;

pub use abel_hurwitz::{
    abel_sum, alpha, compositions, hurwitz_sum, riordan_binomial_rhs, riordan_multinomial_rhs,
    AbelSpec, Composition, Compositions, HurwitzSpec,
};
pub use error::{Error, Result};
pub use exact::{
    gamma2_defn, gamma2_simplified, gamma_defn, gamma_simplified, identity_gap, telescope_sum,
    verify_identity, verify_identity_with, xi2_exact, xi_exact, BigNat, VerifyLimits, VerifyReport,
};
pub use float_eval::{
    identity_residual, xi2_float, xi_float, xi_float_naive, SeriesEval, SeriesMode,
    DEFAULT_REL_CUTOFF,
};
pub use rational::ExactRational;
