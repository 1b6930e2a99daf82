//! Command-line front end: every pipeline behind one reproducible interface.
//!
//! Each subcommand prints a single JSON record (CSV for `walk`) to stdout or
//! to `--out`. The record carries the fully resolved configuration, so a run
//! is replayable from its own output; with a fixed seed the stdout bytes are
//! identical across runs. Wall-clock timings go to stderr by default and are
//! embedded in the JSON only on request (`--timings`), since embedding them
//! would break byte-determinism.
//!
//! Exit codes: 0 success, 1 domain error (message on stderr), 2 usage error.

use crate::angle::wrap_angle;
use crate::chars::{DirichletChar, MultChar};
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::gauss::{self, Estimator, GaussSumResult};
use crate::qsim::{self, EstimateStrategy};
use crate::reductions::{self, GaussOracle, WalkOrdering};
use crate::selftest;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::f64::consts::TAU;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

/// Exactly reproducible Gauss-sum computations: finite-field and ring Gauss
/// and Jacobi sums, simulated quantum phase estimation, and the classical
/// reductions built on Gauss-sum phases.
#[derive(Parser)]
#[command(name = "gauss-sums", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Write the record to this path instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Embed wall-clock timings in the JSON (breaks byte-determinism).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderingArg {
    Sequential,
    Generator,
}

impl From<OrderingArg> for WalkOrdering {
    fn from(o: OrderingArg) -> WalkOrdering {
        match o {
            OrderingArg::Sequential => WalkOrdering::Sequential,
            OrderingArg::Generator => WalkOrdering::Generator,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    TwoBasis,
    Adaptive,
}

impl From<StrategyArg> for EstimateStrategy {
    fn from(s: StrategyArg) -> EstimateStrategy {
        match s {
            StrategyArg::TwoBasis => EstimateStrategy::TwoBasis,
            StrategyArg::Adaptive => EstimateStrategy::Adaptive,
        }
    }
}

fn strategy_name(s: StrategyArg) -> &'static str {
    match s {
        StrategyArg::TwoBasis => "two-basis",
        StrategyArg::Adaptive => "adaptive",
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleModeArg {
    Exact,
    Noisy,
}

#[derive(Clone, Copy, ValueEnum)]
enum EstimatorArg {
    Exact,
    Quantum,
}

#[derive(Subcommand)]
enum Cmd {
    /// Gauss sum G(F_{p^r}, χ_α, β) with method dispatch.
    FieldGauss {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        r: u32,
        /// Character index: χ(g^j) = ζ_{p^r−1}^{αj}.
        #[arg(long)]
        alpha: u64,
        /// Generator override (canonical element index); defaults to the
        /// smallest generator.
        #[arg(long)]
        g: Option<u64>,
        /// Additive-character index β (canonical element index).
        #[arg(long)]
        beta: u64,
    },
    /// Gauss sum G(Z/nZ, χ, β) via the reduction pipeline, with the direct
    /// sum cross-checked.
    RingGauss {
        #[arg(long)]
        n: u64,
        /// Two-power component index α₀ (sign part).
        #[arg(long, default_value_t = 0)]
        alpha0: u64,
        /// Two-power component index α₀′ (cyclic part).
        #[arg(long, default_value_t = 0)]
        alpha0_prime: u64,
        /// Odd-component indices, comma-separated, ascending prime order.
        #[arg(long, default_value = "", value_name = "A,B,...")]
        alphas: String,
        #[arg(long)]
        beta: u64,
        #[arg(long, value_enum, default_value_t = EstimatorArg::Exact)]
        estimator: EstimatorArg,
        /// Sample budget for the quantum estimator.
        #[arg(long, default_value_t = 10_000)]
        t: u64,
        #[arg(long, value_enum, default_value_t = StrategyArg::TwoBasis)]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Jacobi sum J(χ,ψ) directly and, when defined, as a Gauss-sum quotient.
    Jacobi {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long)]
        alpha: u64,
        /// Index of the second character ψ.
        #[arg(long)]
        psi_alpha: u64,
        #[arg(long)]
        g: Option<u64>,
    },
    /// Eigenphase of |χ⟩ under the transform χ²∘F_β (statevector simulation).
    Eigenphase {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long)]
        alpha: u64,
        #[arg(long)]
        g: Option<u64>,
        #[arg(long)]
        beta: u64,
    },
    /// Sampling-based estimate of the Gauss-sum phase γ.
    PhaseEstimate {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long)]
        alpha: u64,
        #[arg(long)]
        g: Option<u64>,
        #[arg(long)]
        beta: u64,
        /// Total one-bit samples.
        #[arg(long, default_value_t = 10_000)]
        t: u64,
        #[arg(long, value_enum, default_value_t = StrategyArg::TwoBasis)]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Recover log_g(x) from Gauss-sum phase queries alone.
    DlogReduce {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        r: u32,
        /// Character index; must be invertible mod p^r − 1.
        #[arg(long, default_value_t = 1)]
        alpha: u64,
        #[arg(long)]
        g: Option<u64>,
        /// Target element (canonical element index).
        #[arg(long)]
        x: u64,
        #[arg(long, value_enum, default_value_t = OracleModeArg::Exact)]
        mode: OracleModeArg,
        /// Noise bound in radians for the noisy oracle.
        #[arg(long, default_value_t = TAU / 64.0)]
        epsilon: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Partial sums of χ(x)e(x) over F_p as CSV (t,re,im).
    Walk {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        alpha: u64,
        #[arg(long)]
        g: Option<u64>,
        #[arg(long, value_enum, default_value_t = OrderingArg::Sequential)]
        ordering: OrderingArg,
    },
    /// Shifted autocorrelation of the walk sequence, with closed forms.
    Autocorr {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        alpha: u64,
        #[arg(long)]
        g: Option<u64>,
        #[arg(long, value_enum, default_value_t = OrderingArg::Sequential)]
        ordering: OrderingArg,
        /// Shift s with 0 < s < p−1.
        #[arg(long)]
        shift: u64,
    },
    /// Run the small-scale invariant suite and report pass/fail counts.
    Selftest,
}

/// Parses argv and runs; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // Clap prints help/usage itself: 0 for --help/--version, 2 otherwise.
        Err(e) => return e.exit_code_compat(),
    };
    let started = Instant::now();
    match dispatch(&cli.cmd) {
        Ok(Output { record, mut json_config }) => {
            let elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
            let text = match record {
                Record::Json(result) => {
                    let mut doc = serde_json::Map::new();
                    doc.insert("config".into(), json_config.take().expect("config"));
                    doc.insert("result".into(), result);
                    if cli.timings {
                        doc.insert("timings".into(), json!({ "total_ms": elapsed_ms }));
                    }
                    let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("json");
                    s.push('\n');
                    s
                }
                Record::Csv(csv) => csv,
            };
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 1;
                }
            } else {
                print!("{text}");
            }
            if !cli.timings {
                eprintln!("timings: total {elapsed_ms:.3} ms");
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

trait ExitCodeCompat {
    fn exit_code_compat(&self) -> i32;
}

impl ExitCodeCompat for clap::Error {
    fn exit_code_compat(&self) -> i32 {
        use clap::error::ErrorKind;
        let _ = self.print();
        match self.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
            _ => 2,
        }
    }
}

enum Record {
    Json(Value),
    Csv(String),
}

struct Output {
    record: Record,
    json_config: Option<Value>,
}

fn out(config: Value, result: Value) -> Output {
    Output { record: Record::Json(result), json_config: Some(config) }
}

fn make_field(p: u64, r: u32, g: Option<u64>) -> Result<Arc<FieldCtx>> {
    Ok(Arc::new(match g {
        Some(g) => FieldCtx::with_generator(p, r, g)?,
        None => FieldCtx::new(p, r)?,
    }))
}

fn field_config(sub: &str, ctx: &FieldCtx, alpha: u64, beta: Option<u64>) -> Value {
    let mut cfg = json!({
        "subcommand": sub,
        "p": ctx.p(),
        "r": ctx.degree(),
        "alpha": alpha,
        "g": ctx.generator().index(),
        "modulus_poly": ctx.modpoly_string(),
    });
    if let Some(b) = beta {
        cfg["beta"] = json!(b);
    }
    cfg
}

fn gauss_result_json(r: &GaussSumResult) -> Value {
    json!({
        "value_re": r.value.re,
        "value_im": r.value.im,
        "norm": r.norm,
        "gamma_rad": r.gamma,
        "gamma_turns": r.gamma_turns(),
        "method": r.method.as_str(),
        "error_bound": r.error_bound,
        "is_zero": r.is_zero,
    })
}

fn parse_alphas(raw: &str) -> Result<Vec<u64>> {
    if raw.trim().is_empty() {
        return Ok(Vec::new());
    }
    raw.split(',')
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| Error::InvalidArgument(format!("bad character index '{s}'")))
        })
        .collect()
}

fn dispatch(cmd: &Cmd) -> Result<Output> {
    match cmd {
        Cmd::FieldGauss { p, r, alpha, g, beta } => {
            let ctx = make_field(*p, *r, *g)?;
            let chi = MultChar::new(ctx.clone(), *alpha);
            let result = gauss::gauss_sum_field(&chi, ctx.element(*beta)?)?;
            Ok(out(field_config("field-gauss", &ctx, *alpha, Some(*beta)), gauss_result_json(&result)))
        }
        Cmd::RingGauss { n, alpha0, alpha0_prime, alphas, beta, estimator, t, strategy, seed } => {
            let odd = parse_alphas(alphas)?;
            let chi = DirichletChar::new(*n, *alpha0, *alpha0_prime, &odd)?;
            let est = match estimator {
                EstimatorArg::Exact => Estimator::Exact,
                EstimatorArg::Quantum => {
                    Estimator::Quantum { t: *t, strategy: (*strategy).into(), seed: *seed }
                }
            };
            let result = gauss::ring_gauss_pipeline(&chi, *beta, est)?;
            let mut res = gauss_result_json(&result);
            // Cross-check against the direct oracle whenever it is exact.
            if matches!(estimator, EstimatorArg::Exact) {
                let direct = gauss::gauss_sum_direct_ring(&chi, *beta)?;
                res["direct_re"] = json!(direct.re);
                res["direct_im"] = json!(direct.im);
                res["agrees_with_direct"] = json!((result.value - direct).norm() < 1e-9);
            }
            let mut cfg = json!({
                "subcommand": "ring-gauss",
                "n": n,
                "alpha0": alpha0,
                "alpha0_prime": alpha0_prime,
                "alphas": odd,
                "beta": beta,
                "estimator": match estimator { EstimatorArg::Exact => "exact", EstimatorArg::Quantum => "quantum" },
                "conductor": chi.conductor(),
            });
            if matches!(estimator, EstimatorArg::Quantum) {
                cfg["t"] = json!(t);
                cfg["strategy"] = json!(strategy_name(*strategy));
                cfg["seed"] = json!(seed);
            }
            Ok(out(cfg, res))
        }
        Cmd::Jacobi { p, r, alpha, psi_alpha, g } => {
            let ctx = make_field(*p, *r, *g)?;
            let chi = MultChar::new(ctx.clone(), *alpha);
            let psi = MultChar::new(ctx.clone(), *psi_alpha);
            let direct = gauss::jacobi_direct(&chi, &psi)?;
            let quotient_defined = !chi.is_trivial()
                && !psi.is_trivial()
                && !chi.mul(&psi)?.is_trivial();
            let mut res = json!({
                "value_re": direct.re,
                "value_im": direct.im,
                "norm": direct.norm(),
                "quotient_defined": quotient_defined,
            });
            if quotient_defined {
                let via = gauss::jacobi_via_gauss(&chi, &psi)?;
                res["via_gauss_re"] = json!(via.re);
                res["via_gauss_im"] = json!(via.im);
                res["agreement"] = json!((direct - via).norm() < 1e-9);
            }
            let mut cfg = field_config("jacobi", &ctx, *alpha, None);
            cfg["psi_alpha"] = json!(psi_alpha);
            Ok(out(cfg, res))
        }
        Cmd::Eigenphase { p, r, alpha, g, beta } => {
            let ctx = make_field(*p, *r, *g)?;
            let chi = MultChar::new(ctx.clone(), *alpha);
            let gamma = qsim::eigenphase_gauss_field(&chi, ctx.element(*beta)?)?;
            Ok(out(
                field_config("eigenphase", &ctx, *alpha, Some(*beta)),
                json!({
                    "gamma_rad": gamma,
                    "gamma_turns": gamma / TAU,
                    "residual_bound": 1e-9,
                }),
            ))
        }
        Cmd::PhaseEstimate { p, r, alpha, g, beta, t, strategy, seed } => {
            let ctx = make_field(*p, *r, *g)?;
            let chi = MultChar::new(ctx.clone(), *alpha);
            let beta_el = ctx.element(*beta)?;
            // The measured phase: the simulated eigenphase procedure at desk
            // scale, the direct sum's argument beyond statevector reach.
            let gamma = if ctx.order() as usize <= qsim::MAX_STATE_DIM {
                qsim::eigenphase_gauss_field(&chi, beta_el)?
            } else {
                wrap_angle(gauss::gauss_sum_direct_field(&chi, beta_el)?.arg())
            };
            let est = qsim::estimate_phase_of(gamma, *t, (*strategy).into(), *seed)?;
            let counts: Vec<Value> = est
                .per_basis_counts
                .iter()
                .map(|(phi, hits, total)| json!({ "phi": phi, "hits": hits, "samples": total }))
                .collect();
            let mut cfg = field_config("phase-estimate", &ctx, *alpha, Some(*beta));
            cfg["t"] = json!(t);
            cfg["strategy"] = json!(strategy_name(*strategy));
            cfg["seed"] = json!(seed);
            Ok(out(
                cfg,
                json!({
                    "gamma_hat_rad": est.gamma_hat,
                    "gamma_hat_turns": est.gamma_hat / TAU,
                    "samples_used": est.samples_used,
                    "per_basis_counts": counts,
                }),
            ))
        }
        Cmd::DlogReduce { p, r, alpha, g, x, mode, epsilon, seed } => {
            let ctx = make_field(*p, *r, *g)?;
            let chi = MultChar::new(ctx.clone(), *alpha);
            let x_el = ctx.element(*x)?;
            let mut oracle = match mode {
                OracleModeArg::Exact => GaussOracle::exact(chi)?,
                OracleModeArg::Noisy => GaussOracle::noisy(chi, *epsilon, *seed)?,
            };
            let ell = reductions::dlog_via_gauss_oracle(&mut oracle, x_el)?;
            let mut cfg = field_config("dlog-reduce", &ctx, *alpha, None);
            cfg["x"] = json!(x);
            cfg["mode"] = json!(match mode { OracleModeArg::Exact => "exact", OracleModeArg::Noisy => "noisy" });
            if matches!(mode, OracleModeArg::Noisy) {
                cfg["epsilon"] = json!(epsilon);
                cfg["seed"] = json!(seed);
            }
            Ok(out(
                cfg,
                json!({
                    "x": x,
                    "ell": ell,
                    "oracle_calls": oracle.calls(),
                    "mode": match mode { OracleModeArg::Exact => "exact", OracleModeArg::Noisy => "noisy" },
                    "verified": true,
                }),
            ))
        }
        Cmd::Walk { p, alpha, g, ordering } => {
            let ctx = make_field(*p, 1, *g)?;
            let chi = MultChar::new(ctx.clone(), *alpha);
            let trace = reductions::walk_trace(&chi, (*ordering).into())?;
            Ok(Output { record: Record::Csv(reductions::walk_csv(&trace)), json_config: None })
        }
        Cmd::Autocorr { p, alpha, g, ordering, shift } => {
            let ctx = make_field(*p, 1, *g)?;
            let chi = MultChar::new(ctx.clone(), *alpha);
            let report = reductions::autocorrelation_report(&chi, (*ordering).into(), *shift)?;
            let mut res = json!({
                "empirical_re": report.empirical.re,
                "empirical_im": report.empirical.im,
                "empirical_norm": report.empirical.norm(),
            });
            if let Some(c) = report.sequential_closed {
                res["closed_re"] = json!(c.re);
                res["closed_im"] = json!(c.im);
                res["matches_closed"] = json!((report.empirical - c).norm() < 1e-9);
            }
            if let Some(c) = report.exponent_reading {
                res["exponent_reading_re"] = json!(c.re);
                res["exponent_reading_im"] = json!(c.im);
                res["matches_exponent_reading"] = json!(report.matches_exponent.unwrap());
            }
            if let Some(c) = report.field_reading {
                res["field_reading_re"] = json!(c.re);
                res["field_reading_im"] = json!(c.im);
                res["matches_field_reading"] = json!(report.matches_field.unwrap());
            }
            let mut cfg = field_config("autocorr", &ctx, *alpha, None);
            cfg["ordering"] = json!(report.ordering.as_str());
            cfg["shift"] = json!(shift);
            Ok(out(cfg, res))
        }
        Cmd::Selftest => {
            let checks = selftest::run_all();
            let passed = checks.iter().filter(|c| c.pass).count();
            let failed = checks.len() - passed;
            let list: Vec<Value> = checks
                .iter()
                .map(|c| json!({ "name": c.name, "pass": c.pass, "detail": c.detail }))
                .collect();
            let result = json!({
                "total": checks.len(),
                "passed": passed,
                "failed": failed,
                "checks": list,
            });
            if failed > 0 {
                // Report the record on stdout, then fail via the error path.
                let doc = json!({ "config": { "subcommand": "selftest" }, "result": result });
                println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
                return Err(Error::InvalidArgument(format!("{failed} selftest checks failed")));
            }
            Ok(out(json!({ "subcommand": "selftest" }), result))
        }
    }
}
