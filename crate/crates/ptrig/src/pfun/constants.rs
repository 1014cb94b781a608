//! Generalized half-period and homeomorphism-endpoint constants.

use super::{PExponent, PQExponents};
use crate::error::Result;
use crate::eval::{ulps, Evaluation, Method};
use crate::hypergeom::{gauss_2f1, HyperParams};

/// Named endpoint constants of the principal homeomorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstName {
    /// a_p = pi_p / 2, the right endpoint of the sin_p branch.
    Ap,
    /// b_p = arctan_p(1).
    Bp,
    /// c_p = arsinh_p(1).
    Cp,
}

/// pi_p = 2 pi / (p sin(pi/p)); pi_2 = pi.
pub fn pi_p(p: PExponent) -> Evaluation {
    let pf = p.get();
    let v = 2.0 * std::f64::consts::PI / (pf * (std::f64::consts::PI / pf).sin());
    Evaluation {
        value: v,
        abs_err: ulps(v, 4.0),
        method: Method::ClosedForm,
    }
}

/// a_p, b_p or c_p.
///
/// c_p is computed as arsinh_p(1) = 2^{-1/p} F(1, 1/p; 1+1/p; 1/2): the
/// hypergeometric form with unit argument, F(1, 1/p; 1+1/p; 1), has
/// c-a-b = 0 and diverges, so it cannot define a finite endpoint; the
/// inverse-function value at 1 is the one consistent with
/// sinh_p: (0, c_p) -> (0, 1).
pub fn constant(name: ConstName, p: PExponent, tol: f64) -> Result<Evaluation> {
    let pf = p.get();
    match name {
        ConstName::Ap => {
            let e = pi_p(p);
            Evaluation::new(e.value / 2.0, e.abs_err / 2.0, Method::ClosedForm)
        }
        ConstName::Bp => {
            let f = gauss_2f1(
                HyperParams::new(1.0 / pf, 1.0 / pf, 1.0 + 1.0 / pf, 0.5)?,
                tol,
            )?;
            let scale = 2.0_f64.powf(-1.0 / pf);
            Evaluation::new(scale * f.value, scale * f.abs_err, Method::Series)
        }
        ConstName::Cp => {
            let f = gauss_2f1(HyperParams::new(1.0, 1.0 / pf, 1.0 + 1.0 / pf, 0.5)?, tol)?;
            let scale = 2.0_f64.powf(-1.0 / pf);
            Evaluation::new(scale * f.value, scale * f.abs_err, Method::Series)
        }
    }
}

/// n_{p,q} = 2^{-1/p} F(1, 1/p; 1+1/q; 1/2), the sinh_{p,q} domain endpoint.
pub fn n_pq(pq: PQExponents, tol: f64) -> Result<Evaluation> {
    let p = pq.p.get();
    let q = pq.q.get();
    let f = gauss_2f1(HyperParams::new(1.0, 1.0 / p, 1.0 + 1.0 / q, 0.5)?, tol)?;
    let scale = 2.0_f64.powf(-1.0 / p);
    Evaluation::new(scale * f.value, scale * f.abs_err, Method::Series)
}

/// pi_{p,q} := 2 arcsin_{p,q}(1), defined by analogy with pi_p = 2 arcsin_p(1);
/// the two-parameter half-period is not pinned down by a closed form here.
pub fn pi_pq(pq: PQExponents, tol: f64) -> Result<Evaluation> {
    let e = super::arc_fn_pq(super::PqKind::ArcSinPQ, pq, 1.0, tol)?;
    Evaluation::new(2.0 * e.value, 2.0 * e.abs_err, e.method)
}
