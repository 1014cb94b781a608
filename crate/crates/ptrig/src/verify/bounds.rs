//! Elementary two-sided bounds for the five inverse functions, with
//! cancellation-aware margins.
//!
//! Every lower bound is tangent to its function at x = 0 (they share the
//! constant and first-order series coefficients in z = x^p), so a literal
//! `function - bound` underflows to rounding noise when z is tiny: at
//! p = 10, x = 0.05 the true margin is ~1e-30 while the operands are ~0.05.
//! Where that happens the margin is evaluated as the series of coefficient
//! differences, whose low orders cancel exactly and whose remainder is the
//! margin itself.

use crate::error::Result;
use crate::hypergeom::series_2f1_tail;
use crate::num::one_minus_xp;
use crate::pfun::{arc_fn, constant, ConstName, InverseKind, PExponent};

/// One bound check: identifier, bound value, function value, margin
/// (function minus bound for lower bounds, bound minus function for upper),
/// oriented so positive means the bound holds strictly.
pub(crate) struct BoundMargin {
    pub id: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
}

/// Below this z = x^p the tangent bounds are evaluated by their
/// coefficient-difference series.
const Z_STABLE: f64 = 1e-4;

/// The ten one-sided bounds at a single (p, x), x in (0,1).
pub(crate) fn bound_margins(p: PExponent, x: f64, tol: f64) -> Result<Vec<BoundMargin>> {
    let pf = p.get();
    let z = x.powf(pf);
    let a_p = constant(ConstName::Ap, p, tol)?.value;
    let b_p = constant(ConstName::Bp, p, tol)?.value;

    let arcsin = arc_fn(InverseKind::ArcSin, p, x, tol)?.value;
    let arccos = arc_fn(InverseKind::ArcCos, p, x, tol)?.value;
    let arctan = arc_fn(InverseKind::ArcTan, p, x, tol)?.value;
    let arsinh = arc_fn(InverseKind::ArSinh, p, x, tol)?.value;
    let artanh = arc_fn(InverseKind::ArTanh, p, x, tol)?.value;

    let mut out = Vec::with_capacity(10);

    // (1) (1 + z/(p(1+p))) x < arcsin_p x < (pi_p/2) x
    let b1l = (1.0 + z / (pf * (1.0 + pf))) * x;
    out.push(BoundMargin {
        id: "bounds1_lower",
        lhs: b1l,
        rhs: arcsin,
        margin: arcsin_lower_margin(pf, x, z, tol),
    });
    out.push(BoundMargin {
        id: "bounds1_upper",
        lhs: arcsin,
        rhs: a_p * x,
        margin: a_p * x - arcsin,
    });

    // (2) the same bounds at w = (1-x^p)^{1/p}, through the arccos identity
    let w = one_minus_xp(x, pf).powf(1.0 / pf);
    let zw = one_minus_xp(x, pf);
    let b2l = (1.0 + zw / (pf * (1.0 + pf))) * w;
    out.push(BoundMargin {
        id: "bounds2_lower",
        lhs: b2l,
        rhs: arccos,
        margin: arcsin_lower_margin(pf, w, zw, tol),
    });
    out.push(BoundMargin {
        id: "bounds2_upper",
        lhs: arccos,
        rhs: a_p * w,
        margin: a_p * w - arccos,
    });

    // (3) (p(1+p)(1+z)+z) x / (p(1+p)(1+z)^{1+1/p}) < arctan_p x
    //     < 2^{1/p} b_p (z/(1+z))^{1/p}
    let b3l =
        (pf * (1.0 + pf) * (1.0 + z) + z) * x / (pf * (1.0 + pf) * (1.0 + z).powf(1.0 + 1.0 / pf));
    let m3l = if z < Z_STABLE {
        x * arctan_lower_tail(pf, z)
    } else {
        arctan - b3l
    };
    out.push(BoundMargin {
        id: "bounds3_lower",
        lhs: b3l,
        rhs: arctan,
        margin: m3l,
    });
    let b3u = 2.0_f64.powf(1.0 / pf) * b_p * (z / (1.0 + z)).powf(1.0 / pf);
    out.push(BoundMargin {
        id: "bounds3_upper",
        lhs: arctan,
        rhs: b3u,
        margin: b3u - arctan,
    });

    // (4) zb (1 + ln(1+z)/(1+p)) < arsinh_p x < zb (1 + ln(1+z)/p),
    //     zb = (z/(1+z))^{1/p}
    let zb = (z / (1.0 + z)).powf(1.0 / pf);
    let l1p = (1.0 + z).ln();
    let b4l = zb * (1.0 + l1p / (1.0 + pf));
    let b4u = zb * (1.0 + l1p / pf);
    let (m4l, m4u) = if z < Z_STABLE {
        (
            x * arsinh_bound_tail(pf, z, 1.0 + pf, true),
            x * arsinh_bound_tail(pf, z, pf, false),
        )
    } else {
        (arsinh - b4l, b4u - arsinh)
    };
    out.push(BoundMargin {
        id: "bounds4_lower",
        lhs: b4l,
        rhs: arsinh,
        margin: m4l,
    });
    out.push(BoundMargin {
        id: "bounds4_upper",
        lhs: arsinh,
        rhs: b4u,
        margin: m4u,
    });

    // (5) x (1 - ln(1-z)/(1+p)) < artanh_p x < x (1 - ln(1-z)/p)
    let lm = f64::ln_1p(-z);
    let b5l = x * (1.0 - lm / (1.0 + pf));
    let b5u = x * (1.0 - lm / pf);
    out.push(BoundMargin {
        id: "bounds5_lower",
        lhs: b5l,
        rhs: artanh,
        margin: x * artanh_lower_tail(pf, z, tol),
    });
    out.push(BoundMargin {
        id: "bounds5_upper",
        lhs: artanh,
        rhs: b5u,
        margin: x * artanh_upper_tail(pf, z, tol),
    });

    Ok(out)
}

/// arcsin_p x - (1 + z/(p(1+p))) x = x * sum_{n>=2} of its own series:
/// the bound coefficient equals the n = 1 series coefficient exactly.
fn arcsin_lower_margin(p: f64, x: f64, z: f64, tol: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    x * series_2f1_tail(1.0 / p, 1.0 / p, 1.0 + 1.0 / p, z, 2, tol)
}

/// Coefficient-difference series for the arctan lower bound; valid for
/// small z (a few terms suffice).
fn arctan_lower_tail(p: f64, z: f64) -> f64 {
    // arctan series:  c_n = (-1)^n / (1 + n p)
    // bound series:   (1 + alpha z)(1+z)^{-beta},
    //                 alpha = 1 + 1/(p(1+p)), beta = 1 + 1/p
    let alpha = 1.0 + 1.0 / (p * (1.0 + p));
    let beta = 1.0 + 1.0 / p;
    let mut g_prev = beta; // (beta, n)/n! at n = 1
    let mut zn = z * z;
    let mut sum = 0.0;
    for n in 2..40 {
        let nf = n as f64;
        let g_n = g_prev * (beta + nf - 1.0) / nf;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let c_n = sign / (1.0 + nf * p);
        let b_n = sign * (g_n - alpha * g_prev);
        sum += (c_n - b_n) * zn;
        zn *= z;
        g_prev = g_n;
        if zn < 1e-30 {
            break;
        }
    }
    sum
}

/// Coefficient-difference series for the arsinh bounds. `lower` selects
/// the (1+p) (lower) or p (upper) log divisor; the sign convention returns
/// a positive value when the bound holds.
fn arsinh_bound_tail(p: f64, z: f64, divisor: f64, lower: bool) -> f64 {
    const N: usize = 24;
    // B: binomial (1+z)^{-1/p}; L: 1 + ln(1+z)/divisor; F: arsinh series
    let mut b = [0.0_f64; N];
    let mut l = [0.0_f64; N];
    let mut c = [0.0_f64; N];
    b[0] = 1.0;
    l[0] = 1.0;
    c[0] = 1.0;
    for n in 1..N {
        let nf = n as f64;
        b[n] = -b[n - 1] * (1.0 / p + nf - 1.0) / nf;
        l[n] = -(-1.0_f64).powi(n as i32) / (divisor * nf);
        let prev = c[n - 1];
        c[n] =
            -prev * (1.0 / p + nf - 1.0) * (1.0 / p + nf - 1.0) / ((1.0 + 1.0 / p + nf - 1.0) * nf);
    }
    let mut sum = 0.0;
    let mut zn = z * z;
    for n in 2..N {
        let mut b_n = 0.0;
        for j in 0..=n {
            b_n += b[j] * l[n - j];
        }
        let diff = if lower { c[n] - b_n } else { b_n - c[n] };
        sum += diff * zn;
        zn *= z;
        if zn < 1e-30 {
            break;
        }
    }
    // first orders cancel for the lower bound; the upper bound keeps a
    // positive first-order term
    if !lower {
        let b_1 = b[0] * l[1] + b[1] * l[0];
        sum += (b_1 - c[1]) * z;
    }
    sum
}

/// artanh_p x / x - (1 - ln(1-z)/(1+p)) = sum_{n>=2} (n-1) z^n /
/// ((1+np) n (1+p)): every coefficient is positive.
fn artanh_lower_tail(p: f64, z: f64, tol: f64) -> f64 {
    let mut sum = 0.0;
    let mut zn = z * z;
    for n in 2..crate::hypergeom::TERM_CAP {
        let nf = n as f64;
        let term = (nf - 1.0) / ((1.0 + nf * p) * nf * (1.0 + p)) * zn;
        sum += term;
        zn *= z;
        if term <= 0.25 * tol * sum.max(1e-300) && n > 4 {
            break;
        }
    }
    sum
}

/// x (1 - ln(1-z)/p) - artanh_p x = x sum_{n>=1} z^n / (n p (1+np)):
/// positive termwise.
fn artanh_upper_tail(p: f64, z: f64, tol: f64) -> f64 {
    let mut sum = 0.0;
    let mut zn = z;
    for n in 1..crate::hypergeom::TERM_CAP {
        let nf = n as f64;
        let term = zn / (nf * p * (1.0 + nf * p));
        sum += term;
        zn *= z;
        if term <= 0.25 * tol * sum.max(1e-300) && n > 4 {
            break;
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pex(p: f64) -> PExponent {
        PExponent::new(p).unwrap()
    }

    #[test]
    fn classical_spot_check() {
        // p=2, x=0.5, item (1): 0.52083 < 0.52360 < 0.78540
        let ms = bound_margins(pex(2.0), 0.5, 1e-13).unwrap();
        let b1l = ms.iter().find(|m| m.id == "bounds1_lower").unwrap();
        assert!((b1l.lhs - 0.520_833_333_333_333_3).abs() < 1e-12);
        assert!((b1l.rhs - 0.523_598_775_598_298_8).abs() < 1e-12);
        assert!((b1l.margin - (b1l.rhs - b1l.lhs)).abs() < 1e-13);
        let b1u = ms.iter().find(|m| m.id == "bounds1_upper").unwrap();
        assert!((b1u.rhs - std::f64::consts::FRAC_PI_4).abs() < 1e-12);
    }

    #[test]
    fn all_margins_strictly_positive_on_sample() {
        for p in [1.25, 2.0, 5.0, 10.0] {
            for x in [0.05, 0.5, 0.95] {
                for m in bound_margins(pex(p), x, 1e-13).unwrap() {
                    assert!(
                        m.margin > 0.0,
                        "{} at p={p}, x={x}: margin {}",
                        m.id,
                        m.margin
                    );
                }
            }
        }
    }

    #[test]
    fn stable_route_matches_direct_at_moderate_z() {
        // where the direct difference is well-conditioned the two margin
        // routes must agree
        let p = 2.0;
        let x: f64 = 0.3;
        let z = x.powf(p);
        let ms = bound_margins(pex(p), x, 1e-13).unwrap();
        let b5l = ms.iter().find(|m| m.id == "bounds5_lower").unwrap();
        let direct = b5l.rhs - b5l.lhs;
        assert!(
            (b5l.margin - direct).abs() < 1e-9 * direct.abs().max(1e-6),
            "{} vs {direct}",
            b5l.margin
        );
        let b3l = ms.iter().find(|m| m.id == "bounds3_lower").unwrap();
        let t = x * arctan_lower_tail(p, z);
        let d = b3l.rhs - b3l.lhs;
        assert!((t - d).abs() < 1e-9 * d.abs().max(1e-8), "{t} vs {d}");
    }

    #[test]
    fn tangent_corner_is_resolved() {
        // p=10, x=0.05: direct differences collapse to rounding noise but
        // the series margins stay positive and tiny.
        let ms = bound_margins(pex(10.0), 0.05, 1e-13).unwrap();
        for id in ["bounds1_lower", "bounds4_lower", "bounds5_lower"] {
            let m = ms.iter().find(|m| m.id == id).unwrap();
            assert!(m.margin > 0.0 && m.margin < 1e-20, "{id}: {}", m.margin);
        }
    }
}
