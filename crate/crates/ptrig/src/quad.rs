//! Adaptive numerical integration used as the independent cross-validation
//! oracle for the hypergeometric route.
//!
//! Each interval is evaluated with a nested 15-point/7-point Gauss-Kronrod
//! pair; the difference of the two rules is a free local error estimate.
//! The worst interval is bisected until the summed estimates fall below the
//! requested tolerance.

use crate::error::{Error, Result};
use crate::eval::{Evaluation, Method};
use crate::num::{one_minus_pow_1m, one_minus_xp};
use crate::pfun::{InverseKind, PExponent, PQExponents};
use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// Subdivision limit across the whole call.
pub const MAX_INTERVALS: usize = 100_000;

// 15-point Kronrod abscissae on [-1,1] (positive half) and weights,
// with the embedded 7-point Gauss weights.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<(f64, f64)> {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fmid = f(mid);
    check_finite(fmid, mid)?;
    let mut k = WGK[7] * fmid;
    let mut g = WG[3] * fmid;
    for i in 0..7 {
        let dx = half * XGK[i];
        let v1 = f(mid - dx);
        let v2 = f(mid + dx);
        check_finite(v1, mid - dx)?;
        check_finite(v2, mid + dx)?;
        k += WGK[i] * (v1 + v2);
        if i % 2 == 1 {
            // Kronrod nodes with odd index are the embedded Gauss nodes.
            g += WG[i / 2] * (v1 + v2);
        }
    }
    Ok((k * half, (k - g).abs() * half))
}

fn check_finite(v: f64, x: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "integrand non-finite at interior node x = {x}"
        )))
    }
}

/// Adaptive integral of `f` over `[a, b]` to absolute tolerance `tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<Evaluation> {
    if !(a < b) {
        return Err(Error::Domain(format!("invalid interval [{a}, {b}]")));
    }
    if !(tol > 0.0) {
        return Err(Error::Parameter(format!("tolerance {tol} must be > 0")));
    }
    let (v0, e0) = gk15(&f, a, b)?;
    let mut heap = BinaryHeap::new();
    heap.push(Segment {
        a,
        b,
        value: v0,
        err: e0,
    });
    let mut total_val = v0;
    let mut total_err = e0;
    let mut count = 1usize;
    while total_err > tol {
        let worst = heap.pop().expect("heap never empty");
        if count >= MAX_INTERVALS {
            return Err(Error::Convergence {
                value: total_val,
                abs_err: total_err,
                context: format!("subdivision limit {MAX_INTERVALS} reached"),
            });
        }
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Interval at floating-point resolution; keep its estimate.
            // Removing it from the heap would under-report the error, so
            // stop refining and report what we have.
            return Evaluation::new(total_val, total_err, Method::Quadrature);
        }
        let (v1, e1) = gk15(&f, worst.a, mid)?;
        let (v2, e2) = gk15(&f, mid, worst.b)?;
        total_val += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.err;
        heap.push(Segment {
            a: worst.a,
            b: mid,
            value: v1,
            err: e1,
        });
        heap.push(Segment {
            a: mid,
            b: worst.b,
            value: v2,
            err: e2,
        });
        count += 1;
    }
    Evaluation::new(total_val, total_err.max(0.0), Method::Quadrature)
}

/// Which defining integral to evaluate and up to where.
///
/// `q` equals `p` in one-parameter use; the ArcSin and ArSinh kernels use
/// the exponent pair `(1 -+ t^q)^{-1/p}`.
#[derive(Debug, Clone, Copy)]
pub struct IntegralSpec {
    pub kind: InverseKind,
    pub p: PExponent,
    pub q: PExponent,
    pub upper: f64,
}

impl IntegralSpec {
    pub fn one_param(kind: InverseKind, p: PExponent, upper: f64) -> Result<Self> {
        Self::two_param(kind, PQExponents::new_from(p, p), upper)
    }

    pub fn two_param(kind: InverseKind, pq: PQExponents, upper: f64) -> Result<Self> {
        let spec = IntegralSpec {
            kind,
            p: pq.p,
            q: pq.q,
            upper,
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        let u = self.upper;
        if !u.is_finite() || u < 0.0 {
            return Err(Error::Domain(format!("upper limit {u} invalid")));
        }
        let ok = match self.kind {
            InverseKind::ArcSin | InverseKind::ArcCos => u <= 1.0,
            InverseKind::ArTanh => u < 1.0,
            InverseKind::ArcTan | InverseKind::ArSinh => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "upper limit {u} outside the domain of {:?}",
                self.kind
            )))
        }
    }
}

/// Value of the defining integral of the selected inverse function.
///
/// The ArcSin kernel at `upper = 1` is singular; the substitution
/// `t = 1 - u^{p/(p-1)}` removes it before integrating.
pub fn arc_integral(spec: IntegralSpec, tol: f64) -> Result<Evaluation> {
    let p = spec.p.get();
    let q = spec.q.get();
    let u = spec.upper;
    if u == 0.0 && spec.kind != InverseKind::ArcCos {
        return Evaluation::exact(0.0, Method::Quadrature);
    }
    match spec.kind {
        InverseKind::ArcSin => arcsin_kernel_integral(p, q, u, tol),
        InverseKind::ArcCos => {
            // arccos via the inverse-function identity: integrate the
            // ArcSin kernel up to (1 - x^p)^{1/q}.
            let w = one_minus_xp(u, p).powf(1.0 / q);
            arcsin_kernel_integral(p, q, w, tol)
        }
        InverseKind::ArcTan => integrate(|t| 1.0 / (1.0 + t.powf(p)), 0.0, u, tol),
        InverseKind::ArSinh => integrate(|t| (1.0 + t.powf(q)).powf(-1.0 / p), 0.0, u, tol),
        InverseKind::ArTanh => integrate(|t| 1.0 / (1.0 - t.powf(p)), 0.0, u, tol),
    }
}

fn arcsin_kernel_integral(p: f64, q: f64, upper: f64, tol: f64) -> Result<Evaluation> {
    if upper == 0.0 {
        return Evaluation::exact(0.0, Method::Quadrature);
    }
    if upper < 1.0 {
        return integrate(|t| (1.0 - t.powf(q)).powf(-1.0 / p), 0.0, upper, tol);
    }
    // upper == 1: substitute t = 1 - u^beta, beta = p/(p-1), which makes the
    // integrand bounded: beta * u^{beta-1} * (1 - (1-u^beta)^q)^{-1/p}.
    let beta = p / (p - 1.0);
    integrate(
        |u| {
            let ub = u.powf(beta);
            beta * u.powf(beta - 1.0) * one_minus_pow_1m(ub, q).powf(-1.0 / p)
        },
        0.0,
        1.0,
        tol,
    )
}
