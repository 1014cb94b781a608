//! The p-trigonometric core: domain types, constants, inverse and forward
//! functions, derivatives, the two-parameter family, eigenpairs, and the
//! auxiliary monotone functions used by the verification harness.

mod constants;
mod eigen;
mod forward;
mod inverse;
mod lemma;

pub use constants::{constant, n_pq, pi_p, pi_pq, ConstName};
pub use eigen::{eigenpair, EigenPair};
pub use forward::{fwd_fn, fwd_fn_deriv};
pub use inverse::{arc_fn, arc_fn_deriv, arc_fn_pq, PqKind};
pub use lemma::{lemma_fn, pi_slope_weight, LemmaFamily};

use crate::error::{Error, Result};

/// Exponent p of the generalized function family, restricted to
/// (1 + 1e-9, 1e6).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PExponent(f64);

impl PExponent {
    pub const MIN: f64 = 1.0 + 1e-9;
    pub const MAX: f64 = 1e6;

    pub fn new(p: f64) -> Result<Self> {
        if p.is_finite() && p > Self::MIN && p < Self::MAX {
            Ok(PExponent(p))
        } else {
            Err(Error::Parameter(format!(
                "exponent p = {p} outside ({}, {})",
                Self::MIN,
                Self::MAX
            )))
        }
    }

    #[inline]
    pub fn get(&self) -> f64 {
        self.0
    }
}

/// Exponent pair (p, q) of the two-parameter family.
#[derive(Debug, Clone, Copy)]
pub struct PQExponents {
    pub p: PExponent,
    pub q: PExponent,
}

impl PQExponents {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        Ok(PQExponents {
            p: PExponent::new(p)?,
            q: PExponent::new(q)?,
        })
    }

    pub fn new_from(p: PExponent, q: PExponent) -> Self {
        PQExponents { p, q }
    }
}

/// Inverse-family selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InverseKind {
    ArcSin,
    ArcCos,
    ArcTan,
    ArSinh,
    ArTanh,
}

/// Forward-family selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ForwardKind {
    Sin,
    Cos,
    Tan,
    Sinh,
    Tanh,
}

impl InverseKind {
    /// The forward function this kind inverts.
    pub fn forward(self) -> ForwardKind {
        match self {
            InverseKind::ArcSin => ForwardKind::Sin,
            InverseKind::ArcCos => ForwardKind::Cos,
            InverseKind::ArcTan => ForwardKind::Tan,
            InverseKind::ArSinh => ForwardKind::Sinh,
            InverseKind::ArTanh => ForwardKind::Tanh,
        }
    }

    pub const ALL: [InverseKind; 5] = [
        InverseKind::ArcSin,
        InverseKind::ArcCos,
        InverseKind::ArcTan,
        InverseKind::ArSinh,
        InverseKind::ArTanh,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InverseKind::ArcSin => "arcsin_p",
            InverseKind::ArcCos => "arccos_p",
            InverseKind::ArcTan => "arctan_p",
            InverseKind::ArSinh => "arsinh_p",
            InverseKind::ArTanh => "artanh_p",
        }
    }
}

impl ForwardKind {
    /// The inverse function this kind inverts.
    pub fn inverse(self) -> InverseKind {
        match self {
            ForwardKind::Sin => InverseKind::ArcSin,
            ForwardKind::Cos => InverseKind::ArcCos,
            ForwardKind::Tan => InverseKind::ArcTan,
            ForwardKind::Sinh => InverseKind::ArSinh,
            ForwardKind::Tanh => InverseKind::ArTanh,
        }
    }

    pub const ALL: [ForwardKind; 5] = [
        ForwardKind::Sin,
        ForwardKind::Cos,
        ForwardKind::Tan,
        ForwardKind::Sinh,
        ForwardKind::Tanh,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ForwardKind::Sin => "sin_p",
            ForwardKind::Cos => "cos_p",
            ForwardKind::Tan => "tan_p",
            ForwardKind::Sinh => "sinh_p",
            ForwardKind::Tanh => "tanh_p",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_range() {
        assert!(PExponent::new(1.0).is_err());
        assert!(PExponent::new(1.0 + 1e-10).is_err());
        assert!(PExponent::new(1e7).is_err());
        assert!(PExponent::new(f64::NAN).is_err());
        assert!(PExponent::new(2.0).is_ok());
    }

    #[test]
    fn kinds_pair_bijectively() {
        for k in InverseKind::ALL {
            assert_eq!(k.forward().inverse(), k);
        }
        for k in ForwardKind::ALL {
            assert_eq!(k.inverse().forward(), k);
        }
    }
}
