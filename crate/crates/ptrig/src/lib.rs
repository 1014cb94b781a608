//! Generalized p-trigonometric and p-hyperbolic functions with a
//! verification harness.
//!
//! The inverse family (arcsin_p, arccos_p, arctan_p, arsinh_p, artanh_p)
//! is evaluated through Gaussian hypergeometric series; the forward family
//! (sin_p, cos_p, tan_p, sinh_p, tanh_p) by bracketed inversion. An
//! independent adaptive quadrature of the defining integrals cross-checks
//! every series evaluation, and the `verify` module sweeps parameter grids
//! to certify the convexity, monotonicity and bound inequalities the
//! family satisfies, emitting deterministic CSV reports.
//!
//! All evaluation is pure and reentrant; nothing here caches or mutates
//! shared state.

// frozen oracle values keep their full printed precision
#![allow(clippy::excessive_precision)]
// `!(x >= 0.0)` style domain guards intentionally reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod eval;
pub mod gamma;
pub mod hypergeom;
pub mod means;
mod num;
pub mod pfun;
pub mod quad;
pub mod verify;

pub use error::{Error, Result};
pub use eval::{Evaluation, Method};
pub use means::{power_mean, MeanOrder};
pub use pfun::{
    arc_fn, arc_fn_deriv, arc_fn_pq, constant, eigenpair, fwd_fn, fwd_fn_deriv, lemma_fn, n_pq,
    pi_p, pi_pq, pi_slope_weight, ConstName, EigenPair, ForwardKind, InverseKind, LemmaFamily,
    PExponent, PQExponents, PqKind,
};
pub use quad::{arc_integral, integrate, IntegralSpec};

/// Default series/quadrature tolerance used by the CLI and the harness.
pub const DEFAULT_TOL: f64 = 1e-14;
