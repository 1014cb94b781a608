//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line with the measured quantity and its limit.
//!
//! Three criteria (05, 08, 09) assert inequality families that genuinely
//! reverse on part of the stated parameter range (the cos_p power-mean row
//! for small t, the h3 weight at small m, and the half-period proposition
//! at t = -1), and criterion 03 includes one composition that f64 cannot
//! carry to the stated tolerance. The sweeps report those cases as failing
//! records and the corresponding tests stay red; see README.

use ptrig::verify::{
    check_bounds_lemma, check_convexity_lemma, check_eigen_residual, check_gm_lemma,
    check_monotone_suite, check_pi_proposition, check_theorem1, check_theorem2, GridSpec,
    MonotoneOpts, Report,
};
use ptrig::{
    arc_fn, arc_integral, fwd_fn, pi_p, ForwardKind, IntegralSpec, InverseKind, PExponent,
};
use std::time::Instant;

const P_GRID: [f64; 6] = [1.25, 1.5, 2.0, 3.0, 5.0, 10.0];

fn pex(p: f64) -> PExponent {
    PExponent::new(p).unwrap()
}

fn x_grid() -> Vec<f64> {
    (1..=19).map(|i| i as f64 * 0.05).collect()
}

fn report_line(id: &str, ok: bool, detail: &str) {
    println!(
        "criterion {id}: {} — {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
}

fn assert_runtime(id: &str, started: Instant, limit_s: f64) {
    let elapsed = started.elapsed().as_secs_f64();
    println!("criterion {id}: runtime {elapsed:.2}s (limit {limit_s}s)");
    assert!(elapsed < limit_s, "criterion {id} exceeded {limit_s}s");
}

#[test]
fn c01_classical_reduction_at_p2() {
    let start = Instant::now();
    let p = pex(2.0);
    let tol = 1e-14;
    let mut max_dev: f64 = 0.0;
    for x in x_grid() {
        let pairs: [(f64, f64); 5] = [
            (
                arc_fn(InverseKind::ArcSin, p, x, tol).unwrap().value,
                x.asin(),
            ),
            (
                arc_fn(InverseKind::ArcCos, p, x, tol).unwrap().value,
                x.acos(),
            ),
            (
                arc_fn(InverseKind::ArcTan, p, x, tol).unwrap().value,
                x.atan(),
            ),
            (
                arc_fn(InverseKind::ArSinh, p, x, tol).unwrap().value,
                x.asinh(),
            ),
            (
                arc_fn(InverseKind::ArTanh, p, x, tol).unwrap().value,
                x.atanh(),
            ),
        ];
        for (got, want) in pairs {
            max_dev = max_dev.max((got - want).abs());
        }
    }
    for f in x_grid() {
        let half_pi = std::f64::consts::FRAC_PI_2;
        let pairs: [(f64, f64); 5] = [
            (
                fwd_fn(ForwardKind::Sin, p, f * half_pi, tol).unwrap().value,
                (f * half_pi).sin(),
            ),
            (
                fwd_fn(ForwardKind::Cos, p, f * half_pi, tol).unwrap().value,
                (f * half_pi).cos(),
            ),
            (
                fwd_fn(ForwardKind::Tan, p, f * half_pi, tol).unwrap().value,
                (f * half_pi).tan(),
            ),
            (
                fwd_fn(ForwardKind::Sinh, p, f * 2.0, tol).unwrap().value,
                (f * 2.0).sinh(),
            ),
            (
                fwd_fn(ForwardKind::Tanh, p, f * 2.0, tol).unwrap().value,
                (f * 2.0).tanh(),
            ),
        ];
        for (got, want) in pairs {
            max_dev = max_dev.max((got - want).abs());
        }
    }
    let ok = max_dev <= 1e-12;
    report_line(
        "01",
        ok,
        &format!("max |p=2 - classical| = {max_dev:.3e} (limit 1e-12)"),
    );
    assert_runtime("01", start, 1.0);
    assert!(ok);
}

#[test]
fn c02_series_quadrature_cross_validation() {
    let start = Instant::now();
    let tol = 1e-11;
    let mut worst: f64 = f64::NEG_INFINITY;
    let mut checked = 0usize;
    for &pv in &P_GRID {
        let p = pex(pv);
        for kind in InverseKind::ALL {
            for x in x_grid() {
                let s = arc_fn(kind, p, x, tol).unwrap();
                let spec = IntegralSpec::one_param(kind, p, x).unwrap();
                let q = arc_integral(spec, tol).unwrap();
                let excess = (s.value - q.value).abs() - (s.abs_err + q.abs_err + 1e-12);
                worst = worst.max(excess);
                checked += 1;
            }
        }
    }
    let ok = worst <= 0.0;
    report_line(
        "02",
        ok,
        &format!("{checked} series/quadrature pairs, worst budget excess {worst:.3e} (limit 0)"),
    );
    assert_runtime("02", start, 10.0);
    assert!(ok);
}

#[test]
fn c03_roundtrip_identities() {
    let start = Instant::now();
    let tol = 1e-13;
    let mut fwd_arc_dev: f64 = 0.0;
    let mut arc_fwd: Vec<(ForwardKind, f64)> = ForwardKind::ALL.iter().map(|&k| (k, 0.0)).collect();
    for &pv in &P_GRID {
        let p = pex(pv);
        // fwd(arc(x)) = x on the inverse-domain grid
        for x in x_grid() {
            for kind in InverseKind::ALL {
                let theta = arc_fn(kind, p, x, tol).unwrap().value;
                let back = fwd_fn(kind.forward(), p, theta, tol).unwrap().value;
                fwd_arc_dev = fwd_arc_dev.max((back - x).abs());
            }
        }
        // arc(fwd(y)) = y on scaled forward-domain grids
        let a_p = pi_p(p).value / 2.0;
        for f in x_grid() {
            for entry in arc_fwd.iter_mut() {
                let scale = match entry.0 {
                    ForwardKind::Sin | ForwardKind::Cos | ForwardKind::Tan => a_p,
                    _ => 2.0,
                };
                let y = f * scale;
                let v = fwd_fn(entry.0, p, y, tol).unwrap().value;
                let back = arc_fn(entry.0.inverse(), p, v, tol).unwrap().value;
                entry.1 = entry.1.max((back - y).abs());
            }
        }
    }
    let max_dev = arc_fwd.iter().map(|e| e.1).fold(fwd_arc_dev, f64::max);
    let breakdown: Vec<String> = arc_fwd
        .iter()
        .map(|(k, d)| format!("{k:?} {d:.2e}"))
        .collect();
    let ok = max_dev <= 1e-10;
    report_line(
        "03",
        ok,
        &format!(
            "max deviation {max_dev:.3e} (limit 1e-10); fwd(arc) {fwd_arc_dev:.2e}, arc(fwd) by kind: {}",
            breakdown.join(", ")
        ),
    );
    assert_runtime("03", start, 5.0);
    // The cos pair cannot meet 1e-10 in f64 at large p and small argument:
    // cos_p(y) = 1 - y^p/p + ... collapses onto a few ulps below 1, so the
    // stored value no longer determines y to 1e-10 (at p=10, y~0.05 one ulp
    // of cos_p corresponds to a 6e-5 step in y). Every other composition
    // meets the limit; see the roundtrip test in tests/properties.rs.
    assert!(ok);
}

fn grid_with_t(t: &[f64]) -> GridSpec {
    GridSpec::default_with_t(t)
}

fn summarize(rep: &Report) -> String {
    format!("{} records, {} failed", rep.total, rep.failed)
}

#[test]
fn c04_inverse_family_power_mean_sweep() {
    let start = Instant::now();
    let rep = check_theorem1(&grid_with_t(&[0.0, 0.5, 1.0, 2.0, 5.0]), 1e-12).unwrap();
    let ok = rep.failed == 0;
    report_line("04", ok, &summarize(&rep));
    assert_runtime("04", start, 60.0);
    assert!(ok, "failing records: {}", rep.failed);
}

#[test]
fn c05_forward_family_power_mean_sweep() {
    let start = Instant::now();
    let rep = check_theorem2(&grid_with_t(&[1.0, 2.0, 5.0]), 1e-12).unwrap();
    let ok = rep.failed == 0;
    let cos_fails = rep
        .records
        .iter()
        .filter(|r| r.check_id == "thm2_cos" && !r.pass)
        .count();
    let other_fails = rep.failed - cos_fails;
    report_line(
        "05",
        ok,
        &format!(
            "{} ({} cos-row reversals, {} other failures)",
            summarize(&rep),
            cos_fails,
            other_fails
        ),
    );
    assert_runtime("05", start, 90.0);
    // The cos_p row genuinely reverses for small t (it is midpoint-concave
    // at t = 1 for every p, and stays reversed at t = 2, 5 for large p),
    // so this criterion cannot reach zero failures as stated.
    assert!(ok, "failing records: {}", rep.failed);
}

#[test]
fn c06_elementary_bounds_strict() {
    let start = Instant::now();
    let rep = check_bounds_lemma(&grid_with_t(&[1.0]), 1e-12);
    let strict = rep.records.iter().all(|r| r.margin > 0.0);
    let ok = rep.failed == 0 && strict;
    let min_margin = rep
        .records
        .iter()
        .map(|r| r.margin)
        .fold(f64::INFINITY, f64::min);
    report_line(
        "06",
        ok,
        &format!(
            "{}, min margin {min_margin:.3e} (must be > 0)",
            summarize(&rep)
        ),
    );
    assert_runtime("06", start, 5.0);
    assert!(ok);
}

#[test]
fn c07_geometric_mean_inequalities() {
    let start = Instant::now();
    let rep = check_gm_lemma(&grid_with_t(&[1.0]), 1e-12);
    let ok = rep.failed == 0;
    report_line("07", ok, &summarize(&rep));
    assert_runtime("07", start, 5.0);
    assert!(ok);
}

#[test]
fn c08_monotonicity_sweeps() {
    let start = Instant::now();
    let rep = check_monotone_suite(&grid_with_t(&[1.0]), &MonotoneOpts::default(), 1e-12);
    let ok = rep.failed == 0;
    let h3_fails = rep
        .records
        .iter()
        .filter(|r| r.check_id == "mono_h3" && !r.pass)
        .count();
    report_line(
        "08",
        ok,
        &format!(
            "{} ({} h3 reversals, {} other failures)",
            summarize(&rep),
            h3_fails,
            rep.failed - h3_fails
        ),
    );
    assert_runtime("08", start, 60.0);
    // h3 = (cos_p/x)^{m-1} d/dx cos_p is decreasing at m = 1 (it equals
    // d/dx cos_p there, and cos_p is concave), so the claimed increase
    // fails at the sampled m = 1 and for large p at m = 2, 5.
    assert!(ok, "failing records: {}", rep.failed);
}

#[test]
fn c09_half_period_power_mean_proposition() {
    let start = Instant::now();
    let grid = grid_with_t(&[-1.0, 0.0, 0.5]);
    let rep = check_pi_proposition(&grid).unwrap();
    let ok = rep.failed == 0;
    let detail: Vec<String> = rep
        .records
        .iter()
        .filter(|r| !r.pass)
        .map(|r| {
            format!(
                "t={} p={} q={} margin={:.3e}",
                r.params.t.unwrap_or(f64::NAN),
                r.params.p.unwrap_or(f64::NAN),
                r.params.q.unwrap_or(f64::NAN),
                r.margin
            )
        })
        .collect();
    report_line(
        "09",
        ok,
        &format!("{}; reversals: [{}]", summarize(&rep), detail.join(", ")),
    );
    assert_runtime("09", start, 1.0);
    // pi_{M_t(p,q)} <= M_t(pi_p, pi_q) reverses at t = -1 for
    // (p, q) = (1.25, 1.5): the harmonic-mean case lies outside the range
    // the slope-weight argument covers.
    assert!(ok, "failing records: {}", rep.failed);
}

#[test]
fn c10_eigen_residuals() {
    let start = Instant::now();
    let grid = grid_with_t(&[1.0]);
    let mut reports = Vec::new();
    for n in [1u32, 2] {
        for pv in [1.5, 2.0, 3.0] {
            reports.push(check_eigen_residual(n, pex(pv), 1e-4, 0.1, &grid, 1e-13).unwrap());
        }
    }
    let rep = Report::merge(reports, grid);
    let ok = rep.failed == 0;
    let worst_res = rep
        .records
        .iter()
        .filter(|r| r.check_id == "eigen_residual")
        .map(|r| r.lhs)
        .fold(0.0_f64, f64::max);
    report_line(
        "10",
        ok,
        &format!(
            "{}, worst relative residual {worst_res:.3e} (limit 1e-5)",
            summarize(&rep)
        ),
    );
    assert_runtime("10", start, 10.0);
    assert!(ok);
}

#[test]
fn c11_convexity_spot_checks() {
    let start = Instant::now();
    let rep = check_convexity_lemma(&grid_with_t(&[1.0]), &MonotoneOpts::default(), 1e-12);
    let ok = rep.failed == 0;
    report_line("11", ok, &summarize(&rep));
    assert_runtime("11", start, 5.0);
    assert!(ok);
}

#[test]
fn c12_deterministic_reports() {
    let start = Instant::now();
    let bin = env!("CARGO_BIN_EXE_ptrig");
    let dir = std::env::temp_dir();
    let out1 = dir.join("ptrig_det_1.csv");
    let out2 = dir.join("ptrig_det_2.csv");
    for out in [&out1, &out2] {
        let status = std::process::Command::new(bin)
            .args(["check", "--suite", "all", "--out", out.to_str().unwrap()])
            .output()
            .expect("run check");
        // exit code 1 is expected: the sweep contains the documented
        // reversal rows; anything else is a harness failure
        let code = status.status.code().unwrap_or(-1);
        assert!(code == 0 || code == 1, "unexpected exit code {code}");
    }
    let b1 = std::fs::read(&out1).unwrap();
    let b2 = std::fs::read(&out2).unwrap();
    let ok = b1 == b2 && !b1.is_empty();
    report_line(
        "12",
        ok,
        &format!(
            "two runs, {} bytes each, byte-identical: {}",
            b1.len(),
            b1 == b2
        ),
    );
    assert_runtime("12", start, 300.0);
    assert!(ok);
    let _ = std::fs::remove_file(out1);
    let _ = std::fs::remove_file(out2);
}
