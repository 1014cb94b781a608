//! Dirichlet eigenpairs of the one-dimensional p-Laplacian on (0,1).
//!
//! The n-th eigenfunction is sin_p(n pi_p t) with eigenvalue
//! (p-1)(n pi_p)^p. Values beyond the principal branch [0, pi_p/2] come
//! from the half-period reflection sin_p(pi_p - th) = sin_p(th) together
//! with the odd 2 pi_p-periodic extension, which gives the eigenfunction
//! n-1 interior zeros.

use super::constants::pi_p;
use super::forward::fwd_fn;
use super::{ForwardKind, PExponent};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct EigenPair {
    pub n: u32,
    pub p: PExponent,
    pub lambda: f64,
}

/// Mode index n >= 1 with lambda = (p-1)(n pi_p)^p.
pub fn eigenpair(n: u32, p: PExponent) -> Result<EigenPair> {
    if n < 1 {
        return Err(Error::Parameter("mode index n must be >= 1".to_string()));
    }
    let pf = p.get();
    let lambda = (pf - 1.0) * (n as f64 * pi_p(p).value).powf(pf);
    if !lambda.is_finite() {
        return Err(Error::Range(format!(
            "eigenvalue overflows for n = {n}, p = {pf}"
        )));
    }
    Ok(EigenPair { n, p, lambda })
}

impl EigenPair {
    /// u(t) = sin_p(n pi_p t), extended over the whole line.
    pub fn eigenfunction(&self, t: f64, tol: f64) -> Result<f64> {
        let pi = pi_p(self.p).value;
        let theta = self.n as f64 * pi * t;
        let (theta, sign) = reduce(theta, pi);
        Ok(sign * fwd_fn(ForwardKind::Sin, self.p, theta, tol)?.value)
    }
}

/// Reduces theta to the principal branch [0, pi_p/2] and the sign of
/// sin_p there.
fn reduce(theta: f64, pi: f64) -> (f64, f64) {
    let mut th = theta.rem_euclid(2.0 * pi);
    let mut sign = 1.0;
    if th > pi {
        th = 2.0 * pi - th;
        sign = -1.0;
    }
    if th > pi / 2.0 {
        th = pi - th;
    }
    (th.clamp(0.0, pi / 2.0), sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pex(p: f64) -> PExponent {
        PExponent::new(p).unwrap()
    }

    #[test]
    fn classical_eigenvalues() {
        let e = eigenpair(1, pex(2.0)).unwrap();
        assert!((e.lambda - std::f64::consts::PI.powi(2)).abs() < 1e-12);
        let e = eigenpair(2, pex(2.0)).unwrap();
        assert!((e.lambda - 4.0 * std::f64::consts::PI.powi(2)).abs() < 1e-11);
    }

    #[test]
    fn p3_eigenvalue_closed_form() {
        // lambda_1 = 2 pi_3^3 with pi_3 = 2 pi / (3 sin(pi/3)).
        let e = eigenpair(1, pex(3.0)).unwrap();
        assert!((e.lambda - 28.288_761_976_002_555).abs() < 1e-11);
    }

    #[test]
    fn rejects_zero_mode() {
        assert!(eigenpair(0, pex(2.0)).is_err());
    }

    #[test]
    fn classical_eigenfunction_values() {
        let e = eigenpair(2, pex(2.0)).unwrap();
        for &t in &[0.1, 0.3, 0.6, 0.9] {
            let u = e.eigenfunction(t, 1e-13).unwrap();
            let want = (2.0 * std::f64::consts::PI * t).sin();
            assert!((u - want).abs() < 1e-12, "t={t}: {u} vs {want}");
        }
    }

    #[test]
    fn interior_zeros_and_symmetry() {
        let e = eigenpair(2, pex(3.0)).unwrap();
        // zero at the interior node t = 1/2
        assert!(e.eigenfunction(0.5, 1e-13).unwrap().abs() < 1e-12);
        // odd around the node
        let a = e.eigenfunction(0.4, 1e-13).unwrap();
        let b = e.eigenfunction(0.6, 1e-13).unwrap();
        assert!((a + b).abs() < 1e-11);
        // half-period reflection inside the first lobe
        let c = e.eigenfunction(0.1, 1e-13).unwrap();
        let d = e.eigenfunction(0.4, 1e-13).unwrap();
        assert!((c - d).abs() < 1e-11);
    }
}
