//! The individual grid sweeps and the suite runner.

use super::bounds::bound_margins;
use super::{
    error_record, make_record, record_with_margin, CheckRecord, Dir, GridSpec, Params, Report,
};
use crate::error::{Error, Result};
use crate::means::{power_mean, MeanOrder};
use crate::pfun::{
    arc_fn, eigenpair, fwd_fn, lemma_fn, pi_p, pi_slope_weight, ForwardKind, InverseKind,
    LemmaFamily, PExponent,
};

/// Verification suites exposed by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Thm1,
    Thm2,
    Bounds,
    Gm,
    Monotone,
    PiProp,
    Convexity,
    Eigen,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        Some(match s {
            "thm1" => Suite::Thm1,
            "thm2" => Suite::Thm2,
            "bounds" => Suite::Bounds,
            "gm" => Suite::Gm,
            "monotone" => Suite::Monotone,
            "pi-prop" => Suite::PiProp,
            "convexity" => Suite::Convexity,
            "eigen" => Suite::Eigen,
            "all" => Suite::All,
            _ => return None,
        })
    }
}

/// Options for the monotonicity sweeps.
#[derive(Debug, Clone)]
pub struct MonotoneOpts {
    pub x_step: f64,
    pub slack: f64,
    pub f_m_values: Vec<f64>,
    pub h_m_values: Vec<f64>,
    pub s_values: Vec<f64>,
}

impl Default for MonotoneOpts {
    fn default() -> Self {
        MonotoneOpts {
            x_step: 0.01,
            slack: 1e-10,
            f_m_values: vec![-1.0, -0.5, 0.0, 1.0, 2.0],
            h_m_values: vec![1.0, 2.0, 5.0],
            s_values: vec![0.1, 0.5, 0.9],
        }
    }
}

/// Options for the eigen-residual sweep.
#[derive(Debug, Clone)]
pub struct EigenOpts {
    pub n_values: Vec<u32>,
    pub p_values: Vec<PExponent>,
    pub h: f64,
    pub safe_band: f64,
}

impl Default for EigenOpts {
    fn default() -> Self {
        EigenOpts {
            n_values: vec![1, 2],
            p_values: [1.5, 2.0, 3.0]
                .iter()
                .map(|&p| PExponent::new(p).expect("eigen p"))
                .collect(),
            h: 1e-4,
            safe_band: 0.1,
        }
    }
}

/// Full configuration of a verification run.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub grid: GridSpec,
    pub eval_tol: f64,
    pub thm1_t: Vec<MeanOrder>,
    pub thm2_t: Vec<MeanOrder>,
    pub prop_t: Vec<MeanOrder>,
    pub monotone: MonotoneOpts,
    pub eigen: EigenOpts,
}

impl VerifyConfig {
    pub fn defaults() -> VerifyConfig {
        let mk = |ts: &[f64]| -> Vec<MeanOrder> {
            ts.iter().map(|&t| MeanOrder::new(t).unwrap()).collect()
        };
        VerifyConfig {
            grid: GridSpec::default_with_t(&[0.0, 0.5, 1.0, 2.0, 5.0]),
            eval_tol: crate::DEFAULT_TOL,
            thm1_t: mk(&[0.0, 0.5, 1.0, 2.0, 5.0]),
            thm2_t: mk(&[1.0, 2.0, 5.0]),
            prop_t: mk(&[-1.0, 0.0, 0.5]),
            monotone: MonotoneOpts::default(),
            eigen: EigenOpts::default(),
        }
    }
}

fn with_t(grid: &GridSpec, t: &[MeanOrder]) -> GridSpec {
    GridSpec {
        t_values: t.to_vec(),
        ..grid.clone()
    }
}

/// Runs one suite (or all of them) with the given configuration.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<Report> {
    match suite {
        Suite::Thm1 => check_theorem1(&with_t(&cfg.grid, &cfg.thm1_t), cfg.eval_tol),
        Suite::Thm2 => check_theorem2(&with_t(&cfg.grid, &cfg.thm2_t), cfg.eval_tol),
        Suite::Bounds => Ok(check_bounds_lemma(&cfg.grid, cfg.eval_tol)),
        Suite::Gm => Ok(check_gm_lemma(&cfg.grid, cfg.eval_tol)),
        Suite::Monotone => Ok(check_monotone_suite(&cfg.grid, &cfg.monotone, cfg.eval_tol)),
        Suite::PiProp => check_pi_proposition(&with_t(&cfg.grid, &cfg.prop_t)),
        Suite::Convexity => Ok(check_convexity_lemma(
            &cfg.grid,
            &cfg.monotone,
            cfg.eval_tol,
        )),
        Suite::Eigen => check_eigen_suite(&cfg.grid, &cfg.eigen, cfg.eval_tol),
        Suite::All => {
            let reports = vec![
                run_suite(Suite::Thm1, cfg)?,
                run_suite(Suite::Thm2, cfg)?,
                run_suite(Suite::Bounds, cfg)?,
                run_suite(Suite::Gm, cfg)?,
                run_suite(Suite::Monotone, cfg)?,
                run_suite(Suite::PiProp, cfg)?,
                run_suite(Suite::Convexity, cfg)?,
                run_suite(Suite::Eigen, cfg)?,
            ];
            Ok(Report::merge(reports, cfg.grid.clone()))
        }
    }
}

/// Power-mean comparison of the four inverse families: arcsin and artanh
/// satisfy f(M_t(r,s)) <= M_t(f r, f s) for t >= 0; arctan and arsinh the
/// reverse.
pub fn check_theorem1(grid: &GridSpec, tol: f64) -> Result<Report> {
    for t in &grid.t_values {
        if t.get() < 0.0 {
            return Err(Error::Parameter(format!(
                "this sweep requires t >= 0, got {}",
                t.get()
            )));
        }
    }
    let fams: [(&str, InverseKind, Dir); 4] = [
        ("thm1_arcsin", InverseKind::ArcSin, Dir::Le),
        ("thm1_artanh", InverseKind::ArTanh, Dir::Le),
        ("thm1_arctan", InverseKind::ArcTan, Dir::Ge),
        ("thm1_arsinh", InverseKind::ArSinh, Dir::Ge),
    ];
    let mut records = Vec::new();
    for &p in &grid.p_values {
        for &t in &grid.t_values {
            for (i, &r) in grid.x_values.iter().enumerate() {
                for &s in &grid.x_values[i..] {
                    let params = Params {
                        p: Some(p.get()),
                        t: Some(t.get()),
                        r: Some(r),
                        s: Some(s),
                        ..Params::default()
                    };
                    let m = match power_mean(t, r, s) {
                        Ok(m) => m,
                        Err(e) => {
                            for (id, _, _) in &fams {
                                records.push(error_record(id, params, &e));
                            }
                            continue;
                        }
                    };
                    for &(id, kind, dir) in &fams {
                        records.push(mean_record(
                            id,
                            params,
                            dir,
                            grid.margin_tol,
                            || Ok(arc_fn(kind, p, m, tol)?.value),
                            || Ok(arc_fn(kind, p, r, tol)?.value),
                            || Ok(arc_fn(kind, p, s, tol)?.value),
                            t,
                        ));
                    }
                }
            }
        }
    }
    Ok(Report::new(records, grid.clone(), Vec::new()))
}

/// Power-mean comparison of the five forward families for t >= 1.
///
/// The hyperbolic-sine row is evaluated in the symmetric form
/// M_t(sinh_p r, sinh_p s); a mixed form with arsinh_p on the second
/// argument circulates in statements of this inequality but does not pair
/// comparable quantities, so it is noted and not asserted.
pub fn check_theorem2(grid: &GridSpec, tol: f64) -> Result<Report> {
    for t in &grid.t_values {
        if t.get() < 1.0 {
            return Err(Error::Parameter(format!(
                "this sweep requires t >= 1, got {}",
                t.get()
            )));
        }
    }
    let fams: [(&str, ForwardKind, Dir); 5] = [
        ("thm2_sin", ForwardKind::Sin, Dir::Ge),
        ("thm2_cos", ForwardKind::Cos, Dir::Le),
        ("thm2_tan", ForwardKind::Tan, Dir::Le),
        ("thm2_tanh", ForwardKind::Tanh, Dir::Ge),
        ("thm2_sinh", ForwardKind::Sinh, Dir::Le),
    ];
    let mut records = Vec::new();
    records.push(make_record(
        "thm2_sinh#note_symmetric_form",
        Params::default(),
        0.0,
        0.0,
        Dir::Le,
        grid.margin_tol,
    ));
    for &p in &grid.p_values {
        for &t in &grid.t_values {
            for (i, &r) in grid.x_values.iter().enumerate() {
                for &s in &grid.x_values[i..] {
                    let params = Params {
                        p: Some(p.get()),
                        t: Some(t.get()),
                        r: Some(r),
                        s: Some(s),
                        ..Params::default()
                    };
                    let m = match power_mean(t, r, s) {
                        Ok(m) => m,
                        Err(e) => {
                            for (id, _, _) in &fams {
                                records.push(error_record(id, params, &e));
                            }
                            continue;
                        }
                    };
                    for &(id, kind, dir) in &fams {
                        records.push(mean_record(
                            id,
                            params,
                            dir,
                            grid.margin_tol,
                            || Ok(fwd_fn(kind, p, m, tol)?.value),
                            || Ok(fwd_fn(kind, p, r, tol)?.value),
                            || Ok(fwd_fn(kind, p, s, tol)?.value),
                            t,
                        ));
                    }
                }
            }
        }
    }
    let notes = vec![
        "thm2_sinh is checked in the symmetric form M_t(sinh_p(r), sinh_p(s)); \
         the mixed form with arsinh_p on the second argument is not a comparable \
         pair and is recorded as a note only."
            .to_string(),
    ];
    Ok(Report::new(records, grid.clone(), notes))
}

#[allow(clippy::too_many_arguments)]
fn mean_record(
    id: &str,
    params: Params,
    dir: Dir,
    margin_tol: f64,
    f_mean: impl Fn() -> Result<f64>,
    f_r: impl Fn() -> Result<f64>,
    f_s: impl Fn() -> Result<f64>,
    t: MeanOrder,
) -> CheckRecord {
    let vals = (|| -> Result<(f64, f64)> {
        let lhs = f_mean()?;
        let rhs = power_mean(t, f_r()?, f_s()?)?;
        Ok((lhs, rhs))
    })();
    match vals {
        Ok((lhs, rhs)) => make_record(id, params, lhs, rhs, dir, margin_tol),
        Err(e) => error_record(id, params, &e),
    }
}

/// The ten elementary one-sided bounds on the (p, x) grid.
pub fn check_bounds_lemma(grid: &GridSpec, tol: f64) -> Report {
    let mut records = Vec::new();
    for &p in &grid.p_values {
        for &x in &grid.x_values {
            let params = Params {
                p: Some(p.get()),
                x: Some(x),
                ..Params::default()
            };
            match bound_margins(p, x, tol) {
                Ok(ms) => {
                    for m in ms {
                        records.push(record_with_margin(
                            m.id,
                            params,
                            m.lhs,
                            m.rhs,
                            m.margin,
                            grid.margin_tol,
                        ));
                    }
                }
                Err(e) => records.push(error_record("bounds", params, &e)),
            }
        }
    }
    Report::new(records, grid.clone(), Vec::new())
}

/// Geometric-mean comparisons of the inverse family and of pi_p itself.
pub fn check_gm_lemma(grid: &GridSpec, tol: f64) -> Report {
    let fams: [(&str, InverseKind, Dir); 4] = [
        ("gm1_arcsin", InverseKind::ArcSin, Dir::Le),
        ("gm2_artanh", InverseKind::ArTanh, Dir::Le),
        ("gm3_arsinh", InverseKind::ArSinh, Dir::Ge),
        ("gm4_arctan", InverseKind::ArcTan, Dir::Ge),
    ];
    let mut records = Vec::new();
    for &p in &grid.p_values {
        for (i, &r) in grid.x_values.iter().enumerate() {
            for &s in &grid.x_values[i..] {
                let params = Params {
                    p: Some(p.get()),
                    r: Some(r),
                    s: Some(s),
                    ..Params::default()
                };
                let g = (r * s).sqrt();
                for &(id, kind, dir) in &fams {
                    let vals = (|| -> Result<(f64, f64)> {
                        let at_g = arc_fn(kind, p, g, tol)?.value;
                        let vr = arc_fn(kind, p, r, tol)?.value;
                        let vs = arc_fn(kind, p, s, tol)?.value;
                        Ok((at_g, (vr * vs).sqrt()))
                    })();
                    match vals {
                        // items 1,2: f(g) <= sqrt(f r * f s); items 3,4 reversed
                        Ok((at_g, gm)) => {
                            records.push(make_record(id, params, at_g, gm, dir, grid.margin_tol))
                        }
                        Err(e) => records.push(error_record(id, params, &e)),
                    }
                }
            }
        }
    }
    // item (5): pi at the geometric mean of the exponents, p <= q
    for &p in &grid.p_values {
        for &q in &grid.q_values {
            if q.get() < p.get() {
                continue;
            }
            let params = Params {
                p: Some(p.get()),
                q: Some(q.get()),
                ..Params::default()
            };
            let rec = (|| -> Result<CheckRecord> {
                let g = PExponent::new((p.get() * q.get()).sqrt())?;
                let lhs = pi_p(g).value;
                let rhs = (pi_p(p).value * pi_p(q).value).sqrt();
                Ok(make_record(
                    "gm5_pi",
                    params,
                    lhs,
                    rhs,
                    Dir::Le,
                    grid.margin_tol,
                ))
            })();
            records.push(rec.unwrap_or_else(|e| error_record("gm5_pi", params, &e)));
        }
    }
    Report::new(records, grid.clone(), Vec::new())
}

/// Monotone target selector for per-family checks.
#[derive(Debug, Clone)]
pub enum MonotoneTarget {
    /// One of the f/h families at the given m values.
    Lemma(LemmaFamily, Vec<f64>),
    /// The pi_p slope weight, decreasing in p, at the given s values.
    PiWeight(Vec<f64>),
    /// A forward-function ratio G(x)/x.
    Ratio(ForwardKind),
}

/// Direction of the final-lemma ratio claims: sin, cos, tanh decrease;
/// tan, sinh increase.
fn ratio_increasing(kind: ForwardKind) -> bool {
    matches!(kind, ForwardKind::Tan | ForwardKind::Sinh)
}

/// Consecutive-point monotonicity records for one target.
pub fn check_monotone(
    grid: &GridSpec,
    target: &MonotoneTarget,
    opts: &MonotoneOpts,
    tol: f64,
) -> Report {
    let mut records = Vec::new();
    let xs = step_grid(opts.x_step);
    match target {
        MonotoneTarget::Lemma(fam, ms) => {
            let id = format!("mono_{}", fam.name());
            for &p in &grid.p_values {
                for &m in ms {
                    let vals: Vec<Result<f64>> =
                        xs.iter().map(|&x| lemma_fn(*fam, m, p, x, tol)).collect();
                    push_direction_records(
                        &mut records,
                        &id,
                        &xs,
                        &vals,
                        fam.claimed_increasing(),
                        opts.slack,
                        |x0, x1| Params {
                            p: Some(p.get()),
                            m: Some(m),
                            r: Some(x0),
                            s: Some(x1),
                            ..Params::default()
                        },
                    );
                }
            }
        }
        MonotoneTarget::PiWeight(svals) => {
            for &s in svals {
                let vals: Vec<Result<f64>> = grid
                    .p_values
                    .iter()
                    .map(|&p| Ok(pi_slope_weight(p, s)))
                    .collect();
                let ps: Vec<f64> = grid.p_values.iter().map(|p| p.get()).collect();
                push_direction_records(
                    &mut records,
                    "mono_fp",
                    &ps,
                    &vals,
                    false,
                    opts.slack,
                    |p0, p1| Params {
                        m: Some(s),
                        r: Some(p0),
                        s: Some(p1),
                        ..Params::default()
                    },
                );
            }
        }
        MonotoneTarget::Ratio(kind) => {
            let id = format!("mono_ratio_{}", kind.name());
            for &p in &grid.p_values {
                let vals: Vec<Result<f64>> = xs
                    .iter()
                    .map(|&x| Ok(fwd_fn(*kind, p, x, tol)?.value / x))
                    .collect();
                push_direction_records(
                    &mut records,
                    &id,
                    &xs,
                    &vals,
                    ratio_increasing(*kind),
                    opts.slack,
                    |x0, x1| Params {
                        p: Some(p.get()),
                        r: Some(x0),
                        s: Some(x1),
                        ..Params::default()
                    },
                );
            }
        }
    }
    Report::new(records, grid.clone(), Vec::new())
}

/// All monotonicity targets at their default sample sets.
pub fn check_monotone_suite(grid: &GridSpec, opts: &MonotoneOpts, tol: f64) -> Report {
    let mut reports = Vec::new();
    for fam in LemmaFamily::ALL {
        let ms = if fam.is_f_family() {
            opts.f_m_values.clone()
        } else {
            opts.h_m_values.clone()
        };
        reports.push(check_monotone(
            grid,
            &MonotoneTarget::Lemma(fam, ms),
            opts,
            tol,
        ));
    }
    reports.push(check_monotone(
        grid,
        &MonotoneTarget::PiWeight(opts.s_values.clone()),
        opts,
        tol,
    ));
    for kind in ForwardKind::ALL {
        reports.push(check_monotone(
            grid,
            &MonotoneTarget::Ratio(kind),
            opts,
            tol,
        ));
    }
    let mut rep = Report::merge(reports, grid.clone());
    rep.notes.push(
        "monotonicity in the weight m is sampled at finitely many values; \
         the sweep does not exhaust the continuous m ranges."
            .to_string(),
    );
    rep
}

fn step_grid(step: f64) -> Vec<f64> {
    let mut xs = Vec::new();
    let n = (1.0 / step).round() as usize;
    for i in 1..n {
        let x = i as f64 * step;
        if x > 0.0 && x < 1.0 {
            xs.push(x);
        }
    }
    xs
}

fn push_direction_records(
    records: &mut Vec<CheckRecord>,
    id: &str,
    xs: &[f64],
    vals: &[Result<f64>],
    increasing: bool,
    slack: f64,
    params_for: impl Fn(f64, f64) -> Params,
) {
    for i in 0..xs.len().saturating_sub(1) {
        let params = params_for(xs[i], xs[i + 1]);
        match (&vals[i], &vals[i + 1]) {
            (Ok(v0), Ok(v1)) => {
                // increasing claim: v0 <= v1; decreasing claim: v1 <= v0
                let (lhs, rhs) = if increasing { (*v0, *v1) } else { (*v1, *v0) };
                records.push(make_record(id, params, lhs, rhs, Dir::Le, slack));
            }
            (Err(e), _) | (_, Err(e)) => records.push(error_record(id, params, e)),
        }
    }
}

/// pi at the t-mean of the exponents versus the t-mean of the half-periods,
/// for t < 1.
pub fn check_pi_proposition(grid: &GridSpec) -> Result<Report> {
    for t in &grid.t_values {
        if t.get() >= 1.0 {
            return Err(Error::Parameter(format!(
                "this sweep requires t < 1, got {}",
                t.get()
            )));
        }
    }
    let mut records = Vec::new();
    for &t in &grid.t_values {
        for (i, &p) in grid.p_values.iter().enumerate() {
            for &q in &grid.p_values[i..] {
                let params = Params {
                    p: Some(p.get()),
                    q: Some(q.get()),
                    t: Some(t.get()),
                    ..Params::default()
                };
                let rec = (|| -> Result<CheckRecord> {
                    let m = power_mean(t, p.get(), q.get())?;
                    let lhs = pi_p(PExponent::new(m)?).value;
                    let rhs = power_mean(t, pi_p(p).value, pi_p(q).value)?;
                    Ok(make_record(
                        "pi_prop",
                        params,
                        lhs,
                        rhs,
                        Dir::Le,
                        grid.margin_tol,
                    ))
                })();
                records.push(rec.unwrap_or_else(|e| error_record("pi_prop", params, &e)));
            }
        }
    }
    Ok(Report::new(records, grid.clone(), Vec::new()))
}

/// Second differences: arcsin_p convex, sin_p concave, on a uniform grid.
pub fn check_convexity_lemma(grid: &GridSpec, opts: &MonotoneOpts, tol: f64) -> Report {
    let xs = step_grid(opts.x_step);
    let mut records = Vec::new();
    for &p in &grid.p_values {
        let arcs: Vec<Result<f64>> = xs
            .iter()
            .map(|&x| Ok(arc_fn(InverseKind::ArcSin, p, x, tol)?.value))
            .collect();
        let sins: Vec<Result<f64>> = xs
            .iter()
            .map(|&x| Ok(fwd_fn(ForwardKind::Sin, p, x, tol)?.value))
            .collect();
        for (id, vals, dir) in [
            ("convex_arcsin", &arcs, Dir::Ge),
            ("concave_sin", &sins, Dir::Le),
        ] {
            for i in 1..xs.len().saturating_sub(1) {
                let params = Params {
                    p: Some(p.get()),
                    x: Some(xs[i]),
                    ..Params::default()
                };
                match (&vals[i - 1], &vals[i], &vals[i + 1]) {
                    (Ok(a), Ok(b), Ok(c)) => {
                        let d2 = a - 2.0 * b + c;
                        records.push(make_record(id, params, d2, 0.0, dir, opts.slack));
                    }
                    (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => {
                        records.push(error_record(id, params, e))
                    }
                }
            }
        }
    }
    Report::new(records, grid.clone(), Vec::new())
}

/// Finite-difference residual of the p-Laplacian eigenpair (n, p).
///
/// With u(t) = sin_p(n pi_p t) and lambda = (p-1)(n pi_p)^p, evaluates
/// -( |u'|^{p-2} u' )' - lambda |u|^{p-2} u by nested central differences
/// at grid points where |u'| >= safe_band * max|u'|, and reports the
/// magnitude relative to lambda (the residual scale at sup-norm 1).
pub fn check_eigen_residual(
    n: u32,
    p: PExponent,
    h: f64,
    safe_band: f64,
    grid: &GridSpec,
    tol: f64,
) -> Result<Report> {
    if !(1e-6..=1e-3).contains(&h) {
        return Err(Error::Parameter(format!(
            "step h = {h} outside [1e-6, 1e-3]"
        )));
    }
    if !(safe_band > 0.0 && safe_band < 0.5) {
        return Err(Error::Parameter(format!(
            "safe_band = {safe_band} outside (0, 0.5)"
        )));
    }
    let pair = eigenpair(n, p)?;
    let pf = p.get();
    let max_slope = n as f64 * pi_p(p).value;
    let u = |t: f64| pair.eigenfunction(t, tol);
    let mut records = Vec::new();

    for i in 1..100 {
        let t = i as f64 * 0.01;
        if t - 2.0 * h <= 0.0 || t + 2.0 * h >= 1.0 {
            continue;
        }
        let params = Params {
            p: Some(pf),
            n: Some(n),
            x: Some(t),
            ..Params::default()
        };
        let rec = (|| -> Result<Option<CheckRecord>> {
            let u0 = u(t)?;
            // |u'| = n pi_p (1 - |u|^p)^{1/p} by the derivative identity
            let slope = max_slope * (1.0 - u0.abs().powf(pf)).max(0.0).powf(1.0 / pf);
            if slope < safe_band * max_slope {
                return Ok(None);
            }
            // |v|^{p-2} v written as sign(v) |v|^{p-1}: finite at v = 0
            let signed_pow = |v: f64, e: f64| v.signum() * v.abs().powf(e);
            let phi = |tau: f64| -> Result<f64> {
                let d = (u(tau + h)? - u(tau - h)?) / (2.0 * h);
                Ok(signed_pow(d, pf - 1.0))
            };
            let dphi = (phi(t + h)? - phi(t - h)?) / (2.0 * h);
            let residual = -dphi - pair.lambda * signed_pow(u0, pf - 1.0);
            let rel = residual.abs() / pair.lambda;
            Ok(Some(make_record(
                "eigen_residual",
                params,
                rel,
                1e-5,
                Dir::Le,
                grid.margin_tol,
            )))
        })();
        match rec {
            Ok(Some(r)) => records.push(r),
            Ok(None) => {}
            Err(e) => records.push(error_record("eigen_residual", params, &e)),
        }
    }

    for t in [1e-8, 1.0 - 1e-8] {
        let params = Params {
            p: Some(pf),
            n: Some(n),
            x: Some(t),
            ..Params::default()
        };
        match u(t) {
            Ok(v) => records.push(make_record(
                "eigen_boundary",
                params,
                v.abs(),
                1e-7,
                Dir::Le,
                grid.margin_tol,
            )),
            Err(e) => records.push(error_record("eigen_boundary", params, &e)),
        }
    }

    if pf == 2.0 {
        let params = Params {
            p: Some(pf),
            n: Some(n),
            ..Params::default()
        };
        let classical = (n as f64 * std::f64::consts::PI).powi(2);
        records.push(make_record(
            "eigen_lambda_p2",
            params,
            (pair.lambda - classical).abs() / classical,
            1e-12,
            Dir::Le,
            grid.margin_tol,
        ));
    }

    Ok(Report::new(records, grid.clone(), Vec::new()))
}

fn check_eigen_suite(grid: &GridSpec, opts: &EigenOpts, tol: f64) -> Result<Report> {
    let mut reports = Vec::new();
    for &n in &opts.n_values {
        for &p in &opts.p_values {
            reports.push(check_eigen_residual(
                n,
                p,
                opts.h,
                opts.safe_band,
                grid,
                tol,
            )?);
        }
    }
    Ok(Report::merge(reports, grid.clone()))
}
