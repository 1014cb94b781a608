//! Inverse p-functions through their hypergeometric representations.
//!
//! Base representations on x in [0,1]:
//!
//! ```text
//! arcsin_p x = x F(1/p, 1/p; 1+1/p; x^p)
//! arctan_p x = x F(1, 1/p; 1+1/p; -x^p)
//! arsinh_p x = x F(1/p, 1/p; 1+1/p; -x^p)
//! artanh_p x = x F(1, 1/p; 1+1/p; x^p)
//! arccos_p x = arcsin_p((1 - x^p)^{1/p})
//! ```
//!
//! Outside the fast-converging range each function switches to an
//! equivalent series with a small argument:
//!
//! - arcsin_p for x^p > 1/2 integrates the kernel from x to 1 instead:
//!   `arcsin_p x = pi_p/2 - w^{p-1}/(p-1) F(1-1/p, 1-1/p; 2-1/p; w^p)`
//!   with `w = (1-x^p)^{1/p}`, keeping the argument at most 1/2.
//! - arctan_p for x > 1 uses the complementary tail
//!   `arctan_p x = pi_p/2 - x^{1-p}/(p-1) F(1-1/p, 1; 2-1/p; -x^{-p})`.
//! - arsinh_p for x > 1 and artanh_p for x^p > 1/2 split their shared
//!   incomplete-Beta form `(1/p) int_0^Z u^{1/p-1}(1-u)^{-1} du` at 1/2:
//!   `c_p + (ln(1/2 / v) + sum_{k>=1} (1-1/p,k)/(k! k) ((1/2)^k - v^k))/p`
//!   with `v = 1 - Z < 1/2`, which converges geometrically all the way to
//!   the domain boundary (`Z = x^p/(1+x^p)` for arsinh, `Z = x^p` for
//!   artanh; both pieces meet at the same constant c_p).

use super::constants::{constant, pi_p, ConstName};
use super::{InverseKind, PExponent, PQExponents};
use crate::error::{Error, Result};
use crate::eval::{ulps, Evaluation, Method};
use crate::hypergeom::{gauss_2f1, validate_tol, HyperParams};
use crate::num::one_minus_xp;
use crate::quad::{arc_integral, IntegralSpec};

/// Inverse p-function value by the hypergeometric route.
pub fn arc_fn(kind: InverseKind, p: PExponent, x: f64, tol: f64) -> Result<Evaluation> {
    validate_tol(tol)?;
    let pf = p.get();
    match kind {
        InverseKind::ArcSin => {
            if !(0.0..=1.0).contains(&x) {
                return Err(Error::Domain(format!("arcsin_p needs x in [0,1], got {x}")));
            }
            arcsin_impl(pf, x, tol)
        }
        InverseKind::ArcCos => {
            if !(0.0..=1.0).contains(&x) {
                return Err(Error::Domain(format!("arccos_p needs x in [0,1], got {x}")));
            }
            let w = one_minus_xp(x, pf).powf(1.0 / pf);
            arcsin_impl(pf, w, tol)
        }
        InverseKind::ArcTan => {
            if !(x >= 0.0) {
                return Err(Error::Domain(format!("arctan_p needs x >= 0, got {x}")));
            }
            arctan_impl(pf, x, tol)
        }
        InverseKind::ArSinh => {
            if !(x >= 0.0) {
                return Err(Error::Domain(format!("arsinh_p needs x >= 0, got {x}")));
            }
            arsinh_impl(p, x, tol)
        }
        InverseKind::ArTanh => {
            if !(0.0..1.0).contains(&x) {
                return Err(Error::Domain(format!("artanh_p needs x in [0,1), got {x}")));
            }
            artanh_impl(p, x, tol)
        }
    }
}

fn arcsin_impl(p: f64, x: f64, tol: f64) -> Result<Evaluation> {
    if x == 0.0 {
        return Evaluation::exact(0.0, Method::Series);
    }
    let z = x.powf(p);
    if z <= 0.5 {
        let f = gauss_2f1(HyperParams::new(1.0 / p, 1.0 / p, 1.0 + 1.0 / p, z)?, tol)?;
        return Evaluation::new(
            x * f.value,
            x * f.abs_err + ulps(x * f.value, 2.0),
            f.method,
        );
    }
    // Complementary branch: integrate the kernel over [x, 1].
    let wp = one_minus_xp(x, p); // stable near x = 1
    let a_p = pi_p(PExponent::new(p)?);
    if wp == 0.0 {
        return Evaluation::new(a_p.value / 2.0, a_p.abs_err, Method::Series);
    }
    let f = gauss_2f1(
        HyperParams::new(1.0 - 1.0 / p, 1.0 - 1.0 / p, 2.0 - 1.0 / p, wp)?,
        tol,
    )?;
    let coeff = wp.powf((p - 1.0) / p) / (p - 1.0);
    let v = a_p.value / 2.0 - coeff * f.value;
    Evaluation::new(
        v,
        coeff * f.abs_err + a_p.abs_err + ulps(v, 4.0),
        Method::Series,
    )
}

fn arctan_impl(p: f64, x: f64, tol: f64) -> Result<Evaluation> {
    if x == 0.0 {
        return Evaluation::exact(0.0, Method::Series);
    }
    if x <= 1.0 {
        let z = -x.powf(p);
        let f = gauss_2f1(HyperParams::new(1.0, 1.0 / p, 1.0 + 1.0 / p, z)?, tol)?;
        return Evaluation::new(
            x * f.value,
            x * f.abs_err + ulps(x * f.value, 2.0),
            f.method,
        );
    }
    let a_p = pi_p(PExponent::new(p)?);
    let z = -x.powf(-p);
    let f = gauss_2f1(HyperParams::new(1.0 - 1.0 / p, 1.0, 2.0 - 1.0 / p, z)?, tol)?;
    let coeff = x.powf(1.0 - p) / (p - 1.0);
    let v = a_p.value / 2.0 - coeff * f.value;
    Evaluation::new(
        v,
        coeff * f.abs_err + a_p.abs_err + ulps(v, 4.0),
        Method::Series,
    )
}

fn arsinh_impl(p: PExponent, x: f64, tol: f64) -> Result<Evaluation> {
    if x == 0.0 {
        return Evaluation::exact(0.0, Method::Series);
    }
    let pf = p.get();
    if x <= 1.0 {
        let z = -x.powf(pf);
        let f = gauss_2f1(
            HyperParams::new(1.0 / pf, 1.0 / pf, 1.0 + 1.0 / pf, z)?,
            tol,
        )?;
        return Evaluation::new(
            x * f.value,
            x * f.abs_err + ulps(x * f.value, 2.0),
            f.method,
        );
    }
    // v = 1 - x^p/(1+x^p) = 1/(1+x^p) < 1/2 for x > 1.
    let v0 = 1.0 / (1.0 + x.powf(pf));
    log_split_eval(p, v0, tol)
}

fn artanh_impl(p: PExponent, x: f64, tol: f64) -> Result<Evaluation> {
    if x == 0.0 {
        return Evaluation::exact(0.0, Method::Series);
    }
    let pf = p.get();
    let z = x.powf(pf);
    if z <= 0.5 {
        let f = gauss_2f1(HyperParams::new(1.0, 1.0 / pf, 1.0 + 1.0 / pf, z)?, tol)?;
        return Evaluation::new(
            x * f.value,
            x * f.abs_err + ulps(x * f.value, 2.0),
            f.method,
        );
    }
    // v = 1 - x^p < 1/2; stable arbitrarily close to x = 1, where the raw
    // series would need ~1/(1-z) terms.
    let v0 = one_minus_xp(x, pf);
    log_split_eval(p, v0, tol)
}

/// `c_p + (ln(1/2 / v) + sum_{k>=1} (1-1/p,k)/(k! k) ((1/2)^k - v^k)) / p`
/// for `v` in (0, 1/2]: the incomplete-Beta tail shared by arsinh_p (x > 1)
/// and artanh_p (x^p > 1/2).
fn log_split_eval(p: PExponent, v0: f64, tol: f64) -> Result<Evaluation> {
    let pf = p.get();
    let c_p = constant(ConstName::Cp, p, tol)?;
    let mut sum = 0.0_f64;
    let mut pre = 1.0_f64; // (1-1/p, k) / k!
    let mut half_k = 1.0_f64;
    let mut v_k = 1.0_f64;
    for k in 1..10_000 {
        let kf = k as f64;
        pre *= (1.0 - 1.0 / pf + (kf - 1.0)) / kf;
        half_k *= 0.5;
        v_k *= v0;
        let term = pre / kf * (half_k - v_k);
        sum += term;
        if half_k * pre <= 0.25 * tol * sum.abs().max(1e-300) {
            break;
        }
    }
    let bracket = (0.5 / v0).ln() + sum;
    let v = c_p.value + bracket / pf;
    Evaluation::new(
        v,
        c_p.abs_err + tol * bracket.abs() / pf + ulps(v, 4.0),
        Method::Series,
    )
}

/// Derivative of the inverse function (its defining integrand).
pub fn arc_fn_deriv(kind: InverseKind, p: PExponent, x: f64) -> Result<f64> {
    let pf = p.get();
    let v = match kind {
        InverseKind::ArcSin => {
            if !(0.0..1.0).contains(&x) {
                return Err(Error::Domain(format!(
                    "arcsin_p' needs x in [0,1), got {x}"
                )));
            }
            one_minus_xp(x, pf).powf(-1.0 / pf)
        }
        InverseKind::ArcCos => {
            if !(0.0..=1.0).contains(&x) || x == 0.0 && pf < 2.0 || x == 1.0 {
                return Err(Error::Domain(format!(
                    "arccos_p' singular or undefined at x = {x}"
                )));
            }
            -x.powf(pf - 2.0) * (1.0 - x.powf(pf)).powf((1.0 - pf) / pf)
        }
        InverseKind::ArcTan => {
            if !(x >= 0.0) {
                return Err(Error::Domain(format!("arctan_p' needs x >= 0, got {x}")));
            }
            1.0 / (1.0 + x.powf(pf))
        }
        InverseKind::ArSinh => {
            if !(x >= 0.0) {
                return Err(Error::Domain(format!("arsinh_p' needs x >= 0, got {x}")));
            }
            (1.0 + x.powf(pf)).powf(-1.0 / pf)
        }
        InverseKind::ArTanh => {
            if !(0.0..1.0).contains(&x) {
                return Err(Error::Domain(format!(
                    "artanh_p' needs x in [0,1), got {x}"
                )));
            }
            1.0 / (1.0 - x.powf(pf))
        }
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain(format!(
            "derivative of {kind:?} not finite at x = {x}"
        )))
    }
}

/// Two-parameter inverse selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PqKind {
    ArcSinPQ,
    ArcCosPQ,
    ArSinhPQ,
}

/// Two-parameter inverse functions.
///
/// The series forms are evaluated as printed alongside quadrature of the
/// defining integrals; the integral is authoritative when the two disagree
/// beyond the combined error budget, and the returned method tag switches
/// to `Quadrature` so the override is visible. (For arcsin_{p,q} with
/// p != q the printed series parameters are inconsistent with the
/// integral, so the override fires; see the `printed_series_disagrees`
/// test.)
pub fn arc_fn_pq(kind: PqKind, pq: PQExponents, x: f64, tol: f64) -> Result<Evaluation> {
    validate_tol(tol)?;
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!(
            "two-parameter inverses need x in [0,1], got {x}"
        )));
    }
    let p = pq.p.get();
    let q = pq.q.get();
    match kind {
        PqKind::ArcCosPQ => {
            let w = one_minus_xp(x, p).powf(1.0 / q);
            arc_fn_pq(PqKind::ArcSinPQ, pq, w, tol)
        }
        PqKind::ArcSinPQ => {
            if x == 0.0 {
                return Evaluation::exact(0.0, Method::Series);
            }
            let z = x.powf(q);
            let f = gauss_2f1(HyperParams::new(1.0 / p, 1.0 / q, 1.0 + 1.0 / p, z)?, tol)?;
            let series = Evaluation::new(
                x * f.value,
                x * f.abs_err + ulps(x * f.value, 2.0),
                Method::Series,
            )?;
            cross_checked(
                series,
                IntegralSpec::two_param(InverseKind::ArcSin, pq, x)?,
                tol,
            )
        }
        PqKind::ArSinhPQ => {
            if x == 0.0 {
                return Evaluation::exact(0.0, Method::Series);
            }
            let z = -x.powf(q);
            let f = gauss_2f1(HyperParams::new(1.0 / p, 1.0 / q, 1.0 + 1.0 / q, z)?, tol)?;
            let series = Evaluation::new(
                x * f.value,
                x * f.abs_err + ulps(x * f.value, 2.0),
                Method::Series,
            )?;
            cross_checked(
                series,
                IntegralSpec::two_param(InverseKind::ArSinh, pq, x)?,
                tol,
            )
        }
    }
}

fn cross_checked(series: Evaluation, spec: IntegralSpec, tol: f64) -> Result<Evaluation> {
    let quad_tol = (tol * series.value.abs().max(1.0)).clamp(1e-13, 1e-6);
    let q = arc_integral(spec, quad_tol)?;
    let budget = series.abs_err + q.abs_err + 1e-12;
    if (series.value - q.value).abs() <= budget {
        Ok(series)
    } else {
        Ok(q)
    }
}
