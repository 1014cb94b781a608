//! Command-line interface: point evaluation, constants, verification
//! sweeps and series/quadrature diffing.
//!
//! Exit codes: 0 success (all checks pass), 1 verification failures,
//! 2 usage errors, 3 evaluation errors, 4 I/O errors.

// `!(x > 0.0)` style flag guards intentionally reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use clap::{Args, Parser, Subcommand};
use ptrig::verify::{fmt_sig, run_suite, GridSpec, Report, Suite, VerifyConfig};
use ptrig::{
    arc_fn, arc_fn_pq, arc_integral, constant, eigenpair, fwd_fn, lemma_fn, n_pq, pi_p, power_mean,
    ConstName, Evaluation, ForwardKind, IntegralSpec, InverseKind, LemmaFamily, MeanOrder,
    PExponent, PQExponents, PqKind,
};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ptrig",
    about = "Generalized p-trigonometric functions and an inequality verification harness",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at a point
    Eval(EvalArgs),
    /// Print a named constant
    Const(ConstArgs),
    /// Run a verification sweep and write a CSV report
    Check(CheckArgs),
    /// Compare series and quadrature evaluations over a grid
    OracleDiff(OracleArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Function name: arcsin_p, arccos_p, arctan_p, arsinh_p, artanh_p,
    /// sin_p, cos_p, tan_p, sinh_p, tanh_p, arcsin_pq, arccos_pq,
    /// arsinh_pq, lemma_fn, power_mean
    #[arg(long = "fn")]
    function: String,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    q: Option<f64>,
    #[arg(long)]
    x: Option<f64>,
    #[arg(long)]
    y: Option<f64>,
    #[arg(long)]
    t: Option<f64>,
    #[arg(long)]
    m: Option<f64>,
    /// Lemma family for --fn lemma_fn: f1..f4, h1..h5
    #[arg(long)]
    family: Option<String>,
    #[arg(long, default_value_t = ptrig::DEFAULT_TOL)]
    tol: f64,
}

#[derive(Args)]
struct ConstArgs {
    /// One of: pi_p, a_p, b_p, c_p, n_pq, lambda_n
    #[arg(long)]
    name: String,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    q: Option<f64>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, default_value_t = ptrig::DEFAULT_TOL)]
    tol: f64,
}

#[derive(Args)]
struct CheckArgs {
    /// One of: thm1, thm2, bounds, gm, monotone, pi-prop, convexity,
    /// eigen, all
    #[arg(long)]
    suite: String,
    /// Output CSV path
    #[arg(long, default_value = "report.csv")]
    out: String,
    /// Override the p grid (repeatable)
    #[arg(long = "p")]
    p_values: Vec<f64>,
    /// Override the q grid (repeatable)
    #[arg(long = "q")]
    q_values: Vec<f64>,
    /// Override the t grid of the selected suite (repeatable)
    #[arg(long = "t")]
    t_values: Vec<f64>,
    /// Override the x grid (repeatable)
    #[arg(long = "x")]
    x_values: Vec<f64>,
    #[arg(long, default_value_t = 1e-9)]
    margin_tol: f64,
    #[arg(long, default_value_t = ptrig::DEFAULT_TOL)]
    tol: f64,
    /// Eigen sweep finite-difference step
    #[arg(long, default_value_t = 1e-4)]
    h: f64,
    /// Eigen sweep safe band as a fraction of max |u'|
    #[arg(long, default_value_t = 0.1)]
    safe_band: f64,
}

#[derive(Args)]
struct OracleArgs {
    /// p values of the cross-check grid (repeatable)
    #[arg(long = "p")]
    p_values: Vec<f64>,
    /// x values of the cross-check grid (repeatable)
    #[arg(long = "x")]
    x_values: Vec<f64>,
    #[arg(long, default_value_t = 1e-11)]
    tol: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Eval(a) => cmd_eval(&a),
        Command::Const(a) => cmd_const(&a),
        Command::Check(a) => cmd_check(&a),
        Command::OracleDiff(a) => cmd_oracle_diff(&a),
    };
    match code {
        Ok(c) => c,
        Err(CmdError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CmdError::Eval(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(CmdError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(4)
        }
    }
}

enum CmdError {
    Usage(String),
    Eval(String),
    Io(String),
}

impl From<ptrig::Error> for CmdError {
    fn from(e: ptrig::Error) -> Self {
        CmdError::Eval(e.to_string())
    }
}

type CmdResult = Result<ExitCode, CmdError>;

fn need(v: Option<f64>, flag: &str) -> Result<f64, CmdError> {
    v.ok_or_else(|| CmdError::Usage(format!("missing required flag --{flag}")))
}

fn pexp(p: f64) -> Result<PExponent, CmdError> {
    PExponent::new(p).map_err(|e| CmdError::Usage(e.to_string()))
}

fn cmd_eval(a: &EvalArgs) -> CmdResult {
    if !(a.tol > 0.0 && a.tol <= 1e-3) {
        return Err(CmdError::Usage(format!(
            "--tol {} outside (0, 1e-3]",
            a.tol
        )));
    }
    let inverse = [
        ("arcsin_p", InverseKind::ArcSin),
        ("arccos_p", InverseKind::ArcCos),
        ("arctan_p", InverseKind::ArcTan),
        ("arsinh_p", InverseKind::ArSinh),
        ("artanh_p", InverseKind::ArTanh),
    ];
    let forward = [
        ("sin_p", ForwardKind::Sin),
        ("cos_p", ForwardKind::Cos),
        ("tan_p", ForwardKind::Tan),
        ("sinh_p", ForwardKind::Sinh),
        ("tanh_p", ForwardKind::Tanh),
    ];
    let two_param = [
        ("arcsin_pq", PqKind::ArcSinPQ),
        ("arccos_pq", PqKind::ArcCosPQ),
        ("arsinh_pq", PqKind::ArSinhPQ),
    ];
    let name = a.function.as_str();

    if let Some((_, kind)) = inverse.iter().find(|(n, _)| *n == name) {
        let p = pexp(need(a.p, "p")?)?;
        let x = need(a.x, "x")?;
        let e = arc_fn(*kind, p, x, a.tol)?;
        println!("{name} p={} x={} {}", f15(p.get()), f15(x), eval_str(&e));
        return Ok(ExitCode::SUCCESS);
    }
    if let Some((_, kind)) = forward.iter().find(|(n, _)| *n == name) {
        let p = pexp(need(a.p, "p")?)?;
        let x = need(a.x, "x")?;
        let e = fwd_fn(*kind, p, x, a.tol)?;
        println!("{name} p={} x={} {}", f15(p.get()), f15(x), eval_str(&e));
        return Ok(ExitCode::SUCCESS);
    }
    if let Some((_, kind)) = two_param.iter().find(|(n, _)| *n == name) {
        let pq = PQExponents::new(need(a.p, "p")?, need(a.q, "q")?)
            .map_err(|e| CmdError::Usage(e.to_string()))?;
        let x = need(a.x, "x")?;
        let e = arc_fn_pq(*kind, pq, x, a.tol)?;
        println!(
            "{name} p={} q={} x={} {}",
            f15(pq.p.get()),
            f15(pq.q.get()),
            f15(x),
            eval_str(&e)
        );
        return Ok(ExitCode::SUCCESS);
    }
    match name {
        "lemma_fn" => {
            let family = a
                .family
                .as_deref()
                .and_then(LemmaFamily::parse)
                .ok_or_else(|| {
                    CmdError::Usage("--fn lemma_fn needs --family f1..f4|h1..h5".to_string())
                })?;
            let p = pexp(need(a.p, "p")?)?;
            let m = need(a.m, "m")?;
            let x = need(a.x, "x")?;
            let v = lemma_fn(family, m, p, x, a.tol)?;
            println!(
                "lemma_fn family={} m={} p={} x={} value={} abs_err={} method=closed-form",
                family.name(),
                f15(m),
                f15(p.get()),
                f15(x),
                f15(v),
                f15(a.tol * v.abs().max(1.0)),
            );
            Ok(ExitCode::SUCCESS)
        }
        "power_mean" => {
            let t = MeanOrder::new(need(a.t, "t")?).map_err(|e| CmdError::Usage(e.to_string()))?;
            let x = need(a.x, "x")?;
            let y = need(a.y, "y")?;
            let v = power_mean(t, x, y)?;
            println!(
                "power_mean t={} x={} y={} value={} abs_err=0 method=closed-form",
                f15(t.get()),
                f15(x),
                f15(y),
                f15(v)
            );
            Ok(ExitCode::SUCCESS)
        }
        other => Err(CmdError::Usage(format!("unknown function '{other}'"))),
    }
}

fn eval_str(e: &Evaluation) -> String {
    format!(
        "value={} abs_err={} method={}",
        f15(e.value),
        f15(e.abs_err),
        e.method
    )
}

fn f15(v: f64) -> String {
    fmt_sig(v, 15)
}

fn cmd_const(a: &ConstArgs) -> CmdResult {
    match a.name.as_str() {
        "pi_p" => {
            let p = pexp(need(a.p, "p")?)?;
            println!("{}", f15(pi_p(p).value));
        }
        "a_p" | "b_p" | "c_p" => {
            let p = pexp(need(a.p, "p")?)?;
            let which = match a.name.as_str() {
                "a_p" => ConstName::Ap,
                "b_p" => ConstName::Bp,
                _ => ConstName::Cp,
            };
            let e = constant(which, p, a.tol)?;
            println!("{}", f15(e.value));
            if a.name == "c_p" {
                println!(
                    "note: c_p is computed as arsinh_p(1) = 2^(-1/p) F(1,1/p;1+1/p;1/2); \
                     the unit-argument hypergeometric form F(1,1/p;1+1/p;1) has c-a-b = 0 \
                     and diverges, so it cannot define this endpoint."
                );
            }
        }
        "n_pq" => {
            let pq = PQExponents::new(need(a.p, "p")?, need(a.q, "q")?)
                .map_err(|e| CmdError::Usage(e.to_string()))?;
            println!("{}", f15(n_pq(pq, a.tol)?.value));
        }
        "lambda_n" => {
            let p = pexp(need(a.p, "p")?)?;
            let n =
                a.n.ok_or_else(|| CmdError::Usage("missing required flag --n".to_string()))?;
            let e = eigenpair(n, p)?;
            println!("{}", f15(e.lambda));
        }
        other => return Err(CmdError::Usage(format!("unknown constant '{other}'"))),
    }
    Ok(ExitCode::SUCCESS)
}

fn build_config(a: &CheckArgs, suite: Suite) -> Result<VerifyConfig, CmdError> {
    if !(a.tol > 0.0 && a.tol <= 1e-3) {
        return Err(CmdError::Usage(format!(
            "--tol {} outside (0, 1e-3]",
            a.tol
        )));
    }
    if !(1e-6..=1e-3).contains(&a.h) {
        return Err(CmdError::Usage(format!("--h {} outside [1e-6, 1e-3]", a.h)));
    }
    if !(a.safe_band > 0.0 && a.safe_band < 0.5) {
        return Err(CmdError::Usage(format!(
            "--safe-band {} outside (0, 0.5)",
            a.safe_band
        )));
    }
    let mut cfg = VerifyConfig::defaults();
    cfg.eval_tol = a.tol;
    cfg.eigen.h = a.h;
    cfg.eigen.safe_band = a.safe_band;
    let map_p =
        |vs: &[f64]| -> Result<Vec<PExponent>, CmdError> { vs.iter().map(|&p| pexp(p)).collect() };
    let mut p_values = cfg.grid.p_values.clone();
    let mut q_values = cfg.grid.q_values.clone();
    let mut x_values = cfg.grid.x_values.clone();
    if !a.p_values.is_empty() {
        p_values = map_p(&a.p_values)?;
        cfg.eigen.p_values = p_values.clone();
        if a.q_values.is_empty() {
            q_values = p_values.clone();
        }
    }
    if !a.q_values.is_empty() {
        q_values = map_p(&a.q_values)?;
    }
    if !a.x_values.is_empty() {
        x_values = a.x_values.clone();
    }
    cfg.grid = GridSpec::new(
        p_values,
        q_values,
        cfg.grid.t_values.clone(),
        x_values,
        a.margin_tol,
    )
    .map_err(|e| CmdError::Usage(e.to_string()))?;
    if !a.t_values.is_empty() {
        let ts: Result<Vec<MeanOrder>, CmdError> = a
            .t_values
            .iter()
            .map(|&t| MeanOrder::new(t).map_err(|e| CmdError::Usage(e.to_string())))
            .collect();
        let ts = ts?;
        // validate against the selected suite's admissible range
        let ok = match suite {
            Suite::Thm1 => ts.iter().all(|t| t.get() >= 0.0),
            Suite::Thm2 => ts.iter().all(|t| t.get() >= 1.0),
            Suite::PiProp => ts.iter().all(|t| t.get() < 1.0),
            _ => true,
        };
        if !ok {
            return Err(CmdError::Usage(format!(
                "--t values incompatible with suite '{:?}': thm1 needs t >= 0, thm2 t >= 1, pi-prop t < 1",
                suite
            )));
        }
        match suite {
            Suite::Thm1 => cfg.thm1_t = ts,
            Suite::Thm2 => cfg.thm2_t = ts,
            Suite::PiProp => cfg.prop_t = ts,
            _ => {
                return Err(CmdError::Usage(
                    "--t only applies to suites thm1, thm2 and pi-prop".to_string(),
                ))
            }
        }
    }
    Ok(cfg)
}

fn cmd_check(a: &CheckArgs) -> CmdResult {
    let suite = Suite::parse(&a.suite)
        .ok_or_else(|| CmdError::Usage(format!("unknown suite '{}'", a.suite)))?;
    let cfg = build_config(a, suite)?;
    let report = run_suite(suite, &cfg).map_err(|e| CmdError::Eval(e.to_string()))?;
    std::fs::write(&a.out, report.to_csv())
        .map_err(|e| CmdError::Io(format!("writing {}: {e}", a.out)))?;
    print_summary(&report);
    if report.failed == 0 {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn print_summary(report: &Report) {
    for note in &report.notes {
        println!("# note: {note}");
    }
    println!(
        "checks={} passed={} failed={}",
        report.total, report.passed, report.failed
    );
}

fn cmd_oracle_diff(a: &OracleArgs) -> CmdResult {
    let p_values = if a.p_values.is_empty() {
        vec![1.25, 1.5, 2.0, 3.0, 5.0, 10.0]
    } else {
        a.p_values.clone()
    };
    let x_values = if a.x_values.is_empty() {
        (1..=19).map(|i| i as f64 * 0.05).collect()
    } else {
        a.x_values.clone()
    };
    if !(a.tol > 0.0 && a.tol <= 1e-3) {
        return Err(CmdError::Usage(format!(
            "--tol {} outside (0, 1e-3]",
            a.tol
        )));
    }
    let mut all_ok = true;
    for &pv in &p_values {
        let p = pexp(pv)?;
        for kind in InverseKind::ALL {
            for &x in &x_values {
                let series = arc_fn(kind, p, x, a.tol)?;
                let spec = IntegralSpec::one_param(kind, p, x).map_err(CmdError::from)?;
                let quad = arc_integral(spec, a.tol)?;
                let diff = (series.value - quad.value).abs();
                let budget = series.abs_err + quad.abs_err + 1e-12;
                let ok = diff <= budget;
                all_ok &= ok;
                println!(
                    "kind={} p={} x={} series={} quad={} diff={} budget={} ok={}",
                    kind.name(),
                    f15(pv),
                    f15(x),
                    f15(series.value),
                    f15(quad.value),
                    f15(diff),
                    f15(budget),
                    ok
                );
            }
        }
    }
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
