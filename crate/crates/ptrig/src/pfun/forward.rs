//! Forward p-functions by bracketed inversion of the inverse family.
//!
//! Each forward value solves `arc(y) = x` with a guarded Newton iteration
//! inside a monotone bracket; any step leaving the bracket falls back to
//! bisection. Brackets are seeded from the elementary bounds
//! `2x/pi_p < sin_p-argument < x` where available, and by doubling for the
//! unbounded kinds.
//!
//! tan_p is extended beyond its principal interval (0, arctan_p(1)) to all
//! of (0, pi_p/2) through the inverse of arctan_p on (0, inf); sinh_p is
//! likewise extended to (0, inf). Both agree with the principal branches
//! on their original intervals.

use super::constants::pi_p;
use super::inverse::{arc_fn, arc_fn_deriv};
use super::{ForwardKind, InverseKind, PExponent};
use crate::error::{Error, Result};
use crate::eval::{ulps, Evaluation, Method};
use crate::num::one_minus_xp;

const MAX_ITER: usize = 200;

/// Forward function value: the unique y with `arc_fn(kind.inverse(), y) = x`.
pub fn fwd_fn(kind: ForwardKind, p: PExponent, x: f64, tol: f64) -> Result<Evaluation> {
    let pf = p.get();
    let a_p = pi_p(p).value / 2.0;
    match kind {
        ForwardKind::Sin => {
            check_domain(x, a_p, true, "sin_p", a_p)?;
            sin_impl(p, x, tol)
        }
        ForwardKind::Cos => {
            check_domain(x, a_p, true, "cos_p", a_p)?;
            let s = sin_impl(p, x, tol)?;
            let c = one_minus_xp(s.value, pf).powf(1.0 / pf);
            // |dc/ds| = s^{p-1} c^{1-p}
            let dcds = if c > 0.0 {
                s.value.powf(pf - 1.0) * c.powf(1.0 - pf)
            } else {
                0.0
            };
            Evaluation::new(c, s.abs_err * dcds + ulps(c, 4.0), Method::Inversion)
        }
        ForwardKind::Tan => {
            check_domain(x, a_p, false, "tan_p", a_p)?;
            if x == 0.0 {
                return Evaluation::exact(0.0, Method::Inversion);
            }
            let hi = grow_bracket(InverseKind::ArcTan, p, x, tol)?;
            invert(InverseKind::ArcTan, p, x, 0.0, hi, tol)
        }
        ForwardKind::Sinh => {
            if !(x >= 0.0) {
                return Err(Error::Domain(format!("sinh_p needs x >= 0, got {x}")));
            }
            if x == 0.0 {
                return Evaluation::exact(0.0, Method::Inversion);
            }
            let hi = grow_bracket(InverseKind::ArSinh, p, x, tol)?;
            invert(InverseKind::ArSinh, p, x, 0.0, hi, tol)
        }
        ForwardKind::Tanh => {
            if !(x >= 0.0) {
                return Err(Error::Domain(format!("tanh_p needs x >= 0, got {x}")));
            }
            if x == 0.0 {
                return Evaluation::exact(0.0, Method::Inversion);
            }
            let hi = 1.0 - f64::EPSILON;
            let at_hi = arc_fn(InverseKind::ArTanh, p, hi, tol)?;
            if at_hi.value < x {
                // Saturated: the root lies between hi and 1. The kernel bound
                // 1/(1-t^p) <= 1/(1-t) gives artanh_p(y) <= -ln(1-y), so
                // 1 - y* <= exp(-x).
                let err = (1.0 - hi).max((-x).exp());
                return Evaluation::new(hi, err, Method::Inversion);
            }
            invert(InverseKind::ArTanh, p, x, 0.0, hi, tol)
        }
    }
}

fn check_domain(x: f64, d: f64, closed: bool, name: &str, a_p: f64) -> Result<()> {
    let ok = if closed {
        (0.0..=d).contains(&x)
    } else {
        (0.0..d).contains(&x)
    };
    if ok {
        Ok(())
    } else {
        let close = if closed { "]" } else { ")" };
        Err(Error::Domain(format!(
            "{name} needs x in [0, {d}{close} (pi_p/2 = {a_p}), got {x}"
        )))
    }
}

fn sin_impl(p: PExponent, x: f64, tol: f64) -> Result<Evaluation> {
    if x == 0.0 {
        return Evaluation::exact(0.0, Method::Inversion);
    }
    let a_p = pi_p(p).value / 2.0;
    if x >= a_p {
        return Evaluation::new(1.0, ulps(1.0, 4.0), Method::Inversion);
    }
    // arcsin_p y < (pi_p/2) y  and  arcsin_p y > y  bracket the root.
    let lo = (x / a_p) * (1.0 - 4.0 * f64::EPSILON);
    let hi = x.min(1.0);
    invert(InverseKind::ArcSin, p, x, lo.max(0.0), hi, tol)
}

fn grow_bracket(kind: InverseKind, p: PExponent, x: f64, tol: f64) -> Result<f64> {
    let mut hi = 1.0_f64;
    for _ in 0..1100 {
        if arc_fn(kind, p, hi, tol)?.value >= x {
            return Ok(hi);
        }
        hi *= 2.0;
        if hi > 1e300 {
            break;
        }
    }
    Err(Error::Convergence {
        value: hi,
        abs_err: f64::INFINITY,
        context: format!("no finite bracket for {kind:?} inverse at x = {x}"),
    })
}

/// Guarded Newton/bisection solve of `arc(y) = x` on a monotone bracket.
fn invert(
    kind: InverseKind,
    p: PExponent,
    x: f64,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
) -> Result<Evaluation> {
    let inner_tol = (0.1 * tol).clamp(1e-15, 1e-4);
    let eval = |y: f64| -> Result<f64> { Ok(arc_fn(kind, p, y, inner_tol)?.value) };
    let mut y = 0.5 * (lo + hi);
    for _ in 0..MAX_ITER {
        let fy = eval(y)?;
        if fy == x {
            return Evaluation::new(y, ulps(y, 2.0), Method::Inversion);
        }
        if fy < x {
            lo = y;
        } else {
            hi = y;
        }
        let width = hi - lo;
        if width <= 4.0 * f64::EPSILON * hi.abs().max(f64::MIN_POSITIVE) {
            let mid = 0.5 * (lo + hi);
            return Evaluation::new(mid, width.max(ulps(mid, 1.0)), Method::Inversion);
        }
        // Newton step from the current iterate, bisection fallback.
        let next = match arc_fn_deriv(kind, p, y) {
            Ok(d) if d > 0.0 => {
                let cand = y + (x - fy) / d;
                if cand > lo && cand < hi {
                    cand
                } else {
                    0.5 * (lo + hi)
                }
            }
            _ => 0.5 * (lo + hi),
        };
        y = next;
    }
    Err(Error::Convergence {
        value: 0.5 * (lo + hi),
        abs_err: hi - lo,
        context: format!("{kind:?} inversion did not converge at x = {x}"),
    })
}

/// Derivative of the forward function via the inverse-function theorem,
/// in closed form through the forward value itself.
pub fn fwd_fn_deriv(kind: ForwardKind, p: PExponent, x: f64, tol: f64) -> Result<f64> {
    let pf = p.get();
    let v = match kind {
        ForwardKind::Sin => {
            let s = fwd_fn(ForwardKind::Sin, p, x, tol)?.value;
            one_minus_xp(s, pf).powf(1.0 / pf)
        }
        ForwardKind::Cos => {
            let s = fwd_fn(ForwardKind::Sin, p, x, tol)?.value;
            let c = one_minus_xp(s, pf).powf(1.0 / pf);
            -s.powf(pf - 1.0) * c.powf(2.0 - pf)
        }
        ForwardKind::Tan => {
            let t = fwd_fn(ForwardKind::Tan, p, x, tol)?.value;
            1.0 + t.powf(pf)
        }
        ForwardKind::Sinh => {
            let s = fwd_fn(ForwardKind::Sinh, p, x, tol)?.value;
            (1.0 + s.powf(pf)).powf(1.0 / pf)
        }
        ForwardKind::Tanh => {
            let t = fwd_fn(ForwardKind::Tanh, p, x, tol)?.value;
            one_minus_xp(t, pf)
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
