//! Grid-sweep verification of the inequality and monotonicity claims.
//!
//! Every check emits `CheckRecord`s with a uniform margin convention:
//! the checker orients each claim so that `pass <=> margin >= -tol`,
//! where `tol = margin_tol * max(|lhs|, |rhs|, 1)`. Evaluation errors
//! become failed records tagged in the check id, never skipped rows.

mod bounds;
mod checks;

pub use checks::{
    check_bounds_lemma, check_convexity_lemma, check_eigen_residual, check_gm_lemma,
    check_monotone, check_monotone_suite, check_pi_proposition, check_theorem1, check_theorem2,
    run_suite, EigenOpts, MonotoneOpts, MonotoneTarget, Suite, VerifyConfig,
};

use crate::error::{Error, Result};
use crate::means::MeanOrder;
use crate::pfun::PExponent;
use std::fmt::Write as _;

/// Cartesian sampling specification for the sweeps.
#[derive(Debug, Clone)]
pub struct GridSpec {
    pub p_values: Vec<PExponent>,
    pub q_values: Vec<PExponent>,
    pub t_values: Vec<MeanOrder>,
    pub x_values: Vec<f64>,
    pub margin_tol: f64,
}

impl GridSpec {
    /// Grid lists are sorted ascending: pair sweeps canonicalize to
    /// r <= s and the p-monotonicity checks walk consecutive exponents.
    pub fn new(
        mut p_values: Vec<PExponent>,
        mut q_values: Vec<PExponent>,
        mut t_values: Vec<MeanOrder>,
        mut x_values: Vec<f64>,
        margin_tol: f64,
    ) -> Result<Self> {
        if p_values.is_empty() || q_values.is_empty() || t_values.is_empty() || x_values.is_empty()
        {
            return Err(Error::Parameter("grid lists must be nonempty".to_string()));
        }
        if !(margin_tol > 0.0) {
            return Err(Error::Parameter(format!(
                "margin_tol {margin_tol} must be > 0"
            )));
        }
        for &x in &x_values {
            if !(0.01..=0.99).contains(&x) {
                return Err(Error::Parameter(format!(
                    "grid x = {x} outside [0.01, 0.99]"
                )));
            }
        }
        p_values.sort_by(|a, b| a.get().total_cmp(&b.get()));
        q_values.sort_by(|a, b| a.get().total_cmp(&b.get()));
        t_values.sort_by(|a, b| a.get().total_cmp(&b.get()));
        x_values.sort_by(f64::total_cmp);
        Ok(GridSpec {
            p_values,
            q_values,
            t_values,
            x_values,
            margin_tol,
        })
    }

    /// p, q in {1.25, 1.5, 2, 3, 5, 10}; x in {0.05, ..., 0.95};
    /// t as supplied; margin_tol 1e-9.
    pub fn default_with_t(t: &[f64]) -> GridSpec {
        let ps: Vec<PExponent> = [1.25, 1.5, 2.0, 3.0, 5.0, 10.0]
            .iter()
            .map(|&p| PExponent::new(p).expect("default p"))
            .collect();
        let ts: Vec<MeanOrder> = t
            .iter()
            .map(|&t| MeanOrder::new(t).expect("default t"))
            .collect();
        let xs: Vec<f64> = (1..=19).map(|i| i as f64 * 0.05).collect();
        GridSpec::new(ps.clone(), ps, ts, xs, 1e-9).expect("default grid")
    }
}

/// Parameter columns of a record; absent entries serialize as empty CSV
/// fields.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Params {
    pub p: Option<f64>,
    pub q: Option<f64>,
    pub t: Option<f64>,
    pub r: Option<f64>,
    pub s: Option<f64>,
    pub x: Option<f64>,
    pub m: Option<f64>,
    pub n: Option<u32>,
}

impl Params {
    fn key(&self) -> [u64; 8] {
        fn k(v: Option<f64>) -> u64 {
            // order-preserving map of f64 to u64 (None sorts first)
            match v {
                None => 0,
                Some(f) => {
                    let b = f.to_bits() as i64;
                    let m = if b < 0 {
                        (!b) as u64
                    } else {
                        b as u64 | (1 << 63)
                    };
                    m.max(1)
                }
            }
        }
        [
            k(self.p),
            k(self.q),
            k(self.t),
            k(self.r),
            k(self.s),
            k(self.x),
            k(self.m),
            self.n.map(|n| n as u64 + 1).unwrap_or(0),
        ]
    }
}

/// One inequality/monotonicity verdict.
#[derive(Debug, Clone)]
pub struct CheckRecord {
    pub check_id: String,
    pub params: Params,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub pass: bool,
}

/// Claim orientation used when forming margins.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Dir {
    /// claim: lhs <= rhs
    Le,
    /// claim: lhs >= rhs
    Ge,
}

pub(crate) fn make_record(
    check_id: &str,
    params: Params,
    lhs: f64,
    rhs: f64,
    dir: Dir,
    margin_tol: f64,
) -> CheckRecord {
    let margin = match dir {
        Dir::Le => rhs - lhs,
        Dir::Ge => lhs - rhs,
    };
    record_with_margin(check_id, params, lhs, rhs, margin, margin_tol)
}

/// Record whose margin was computed by a dedicated (cancellation-aware)
/// route rather than as a literal difference of the stored sides.
pub(crate) fn record_with_margin(
    check_id: &str,
    params: Params,
    lhs: f64,
    rhs: f64,
    margin: f64,
    margin_tol: f64,
) -> CheckRecord {
    let scale = lhs.abs().max(rhs.abs()).max(1.0);
    // NaN margin compares false: non-finite intermediates fail, never skip.
    let pass = margin >= -margin_tol * scale;
    CheckRecord {
        check_id: check_id.to_string(),
        params,
        lhs,
        rhs,
        margin,
        pass,
    }
}

pub(crate) fn error_record(check_id: &str, params: Params, err: &Error) -> CheckRecord {
    CheckRecord {
        check_id: format!("{check_id}#error:{}", error_tag(err)),
        params,
        lhs: f64::NAN,
        rhs: f64::NAN,
        margin: f64::NAN,
        pass: false,
    }
}

fn error_tag(err: &Error) -> &'static str {
    match err {
        Error::Domain(_) => "domain",
        Error::Parameter(_) => "parameter",
        Error::Divergence(_) => "divergence",
        Error::Convergence { .. } => "convergence",
        Error::Range(_) => "range",
    }
}

/// Ordered collection of records with summary counts.
#[derive(Debug, Clone)]
pub struct Report {
    pub records: Vec<CheckRecord>,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub config: GridSpec,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(mut records: Vec<CheckRecord>, config: GridSpec, notes: Vec<String>) -> Report {
        records.sort_by(|a, b| {
            a.check_id
                .cmp(&b.check_id)
                .then_with(|| a.params.key().cmp(&b.params.key()))
        });
        let passed = records.iter().filter(|r| r.pass).count();
        let total = records.len();
        Report {
            passed,
            failed: total - passed,
            total,
            records,
            config,
            notes,
        }
    }

    pub fn merge(reports: Vec<Report>, config: GridSpec) -> Report {
        let mut records = Vec::new();
        let mut notes = Vec::new();
        for r in reports {
            records.extend(r.records);
            notes.extend(r.notes);
        }
        Report::new(records, config, notes)
    }

    /// Fixed-schema CSV: header `check_id,p,q,t,r,s,x,m,n,lhs,rhs,margin,pass`,
    /// 17 significant digits, LF line endings.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(64 * (self.records.len() + 1));
        out.push_str("check_id,p,q,t,r,s,x,m,n,lhs,rhs,margin,pass\n");
        for r in &self.records {
            let p = &r.params;
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{},{},{}",
                r.check_id,
                opt17(p.p),
                opt17(p.q),
                opt17(p.t),
                opt17(p.r),
                opt17(p.s),
                opt17(p.x),
                opt17(p.m),
                p.n.map(|n| n.to_string()).unwrap_or_default(),
                fmt_sig(r.lhs, 17),
                fmt_sig(r.rhs, 17),
                fmt_sig(r.margin, 17),
                r.pass
            );
        }
        out
    }
}

fn opt17(v: Option<f64>) -> String {
    v.map(|v| fmt_sig(v, 17)).unwrap_or_default()
}

/// Decimal formatting with `sig` significant digits and trailing zeros
/// trimmed; extreme magnitudes fall back to scientific notation.
pub fn fmt_sig(v: f64, sig: usize) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if !(-5..18).contains(&exp) {
        return format!("{:.*e}", sig.saturating_sub(1), v);
    }
    let decimals = (sig as i32 - 1 - exp).max(0) as usize;
    let s = format!("{v:.decimals$}");
    if s.contains('.') {
        let t = s.trim_end_matches('0').trim_end_matches('.');
        t.to_string()
    } else {
        s
    }
}
