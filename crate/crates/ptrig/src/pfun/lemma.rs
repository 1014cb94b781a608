//! Auxiliary monotone functions behind the power-mean inequalities.
//!
//! The f-family weights an inverse function: f(x) = (g(x)/x)^m g'(x);
//! the h-family weights a forward function: h(x) = (G(x)/x)^{m-1} G'(x).

use super::forward::{fwd_fn, fwd_fn_deriv};
use super::inverse::{arc_fn, arc_fn_deriv};
use super::{constants::pi_p, ForwardKind, InverseKind, PExponent};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaFamily {
    F1,
    F2,
    F3,
    F4,
    H1,
    H2,
    H3,
    H4,
    H5,
}

impl LemmaFamily {
    pub const ALL: [LemmaFamily; 9] = [
        LemmaFamily::F1,
        LemmaFamily::F2,
        LemmaFamily::F3,
        LemmaFamily::F4,
        LemmaFamily::H1,
        LemmaFamily::H2,
        LemmaFamily::H3,
        LemmaFamily::H4,
        LemmaFamily::H5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaFamily::F1 => "f1",
            LemmaFamily::F2 => "f2",
            LemmaFamily::F3 => "f3",
            LemmaFamily::F4 => "f4",
            LemmaFamily::H1 => "h1",
            LemmaFamily::H2 => "h2",
            LemmaFamily::H3 => "h3",
            LemmaFamily::H4 => "h4",
            LemmaFamily::H5 => "h5",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name() == s)
    }

    pub fn is_f_family(self) -> bool {
        matches!(
            self,
            LemmaFamily::F1 | LemmaFamily::F2 | LemmaFamily::F3 | LemmaFamily::F4
        )
    }

    /// Direction claimed for the family: true = increasing in x.
    pub fn claimed_increasing(self) -> bool {
        matches!(
            self,
            LemmaFamily::F1 | LemmaFamily::F2 | LemmaFamily::H3 | LemmaFamily::H4 | LemmaFamily::H5
        )
    }

    fn inverse_kind(self) -> Option<InverseKind> {
        match self {
            LemmaFamily::F1 => Some(InverseKind::ArcSin),
            LemmaFamily::F2 => Some(InverseKind::ArTanh),
            LemmaFamily::F3 => Some(InverseKind::ArcTan),
            LemmaFamily::F4 => Some(InverseKind::ArSinh),
            _ => None,
        }
    }

    fn forward_kind(self) -> Option<ForwardKind> {
        match self {
            LemmaFamily::H1 => Some(ForwardKind::Sin),
            LemmaFamily::H2 => Some(ForwardKind::Tanh),
            LemmaFamily::H3 => Some(ForwardKind::Cos),
            LemmaFamily::H4 => Some(ForwardKind::Tan),
            LemmaFamily::H5 => Some(ForwardKind::Sinh),
            _ => None,
        }
    }
}

/// f_i(x) = (g_i(x)/x)^m g_i'(x) for the inverse families (m >= -1) and
/// h_j(x) = (G_j(x)/x)^{m-1} G_j'(x) for the forward families (m >= 1),
/// on x in (0,1).
pub fn lemma_fn(family: LemmaFamily, m: f64, p: PExponent, x: f64, tol: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain(format!(
            "lemma families are defined on (0,1), got {x}"
        )));
    }
    let v = if let Some(kind) = family.inverse_kind() {
        if m < -1.0 {
            return Err(Error::Parameter(format!("f-family needs m >= -1, got {m}")));
        }
        let g = arc_fn(kind, p, x, tol)?.value;
        let d = arc_fn_deriv(kind, p, x)?;
        (g / x).powf(m) * d
    } else {
        if m < 1.0 {
            return Err(Error::Parameter(format!("h-family needs m >= 1, got {m}")));
        }
        let kind = family.forward_kind().expect("h family");
        let g = fwd_fn(kind, p, x, tol)?.value;
        let d = fwd_fn_deriv(kind, p, x, tol)?;
        (g / x).powf(m - 1.0) * d
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Range(format!(
            "{} not finite at x = {x}",
            family.name()
        )))
    }
}

/// (pi_p/p)^{-s} (p - pi cot(pi/p)) csc(pi/p) / p^3: the p-derivative
/// weight of pi_p that drives the power-mean comparison of half-periods.
pub fn pi_slope_weight(p: PExponent, s: f64) -> f64 {
    let pf = p.get();
    let phi = std::f64::consts::PI / pf;
    let csc = 1.0 / phi.sin();
    let cot = phi.cos() * csc;
    (pi_p(p).value / pf).powf(-s) * (pf - std::f64::consts::PI * cot) * csc / pf.powi(3)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pex(p: f64) -> PExponent {
        PExponent::new(p).unwrap()
    }

    #[test]
    fn f1_zero_exponent_is_integrand() {
        let v = lemma_fn(LemmaFamily::F1, 0.0, pex(3.0), 0.5, 1e-13).unwrap();
        assert!((v - 1.045_515_917_149_420_4).abs() < 1e-12);
    }

    #[test]
    fn f3_limit_at_zero() {
        let v = lemma_fn(LemmaFamily::F3, 1.7, pex(2.5), 1e-6, 1e-13).unwrap();
        assert!((v - 1.0).abs() < 1e-5);
    }

    #[test]
    fn h4_classical_reduction() {
        // (tan(0.5)/0.5) * sec^2(0.5)
        let v = lemma_fn(LemmaFamily::H4, 2.0, pex(2.0), 0.5, 1e-13).unwrap();
        let want = (0.5_f64.tan() / 0.5) * (1.0 + 0.5_f64.tan().powi(2));
        assert!((v - want).abs() < 1e-11);
        assert!((v - 1.418_689_013_870_911_4).abs() < 1e-11);
    }

    #[test]
    fn parameter_ranges() {
        assert!(lemma_fn(LemmaFamily::F1, -1.5, pex(2.0), 0.5, 1e-13).is_err());
        assert!(lemma_fn(LemmaFamily::H1, 0.5, pex(2.0), 0.5, 1e-13).is_err());
        assert!(lemma_fn(LemmaFamily::F1, 0.0, pex(2.0), 1.0, 1e-13).is_err());
    }

    #[test]
    fn pi_slope_weight_values() {
        // At p = 2 the cotangent term vanishes: weight = (pi/2)^{-s} / 4.
        let v = pi_slope_weight(pex(2.0), 0.5);
        let want = (std::f64::consts::FRAC_PI_2).powf(-0.5) * 2.0 / 8.0;
        assert!((v - want).abs() < 1e-14);
    }
}
