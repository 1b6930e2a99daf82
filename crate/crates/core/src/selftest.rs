//! Small-scale invariant suite behind the CLI `selftest` subcommand.
//!
//! Each check exercises one published invariant end to end at sizes that
//! complete in milliseconds; the full acceptance sweep lives in the
//! integration tests. A check reports a name, pass/fail, and a short detail
//! (case counts or the offending value).

use crate::angle::{angle_distance, wrap_angle, TurnAngle};
use crate::chars::{DirichletChar, MultChar};
use crate::field::FieldCtx;
use crate::gauss::{self, Estimator};
use crate::qsim::{self, EstimateStrategy, StateVector};
use crate::reductions::{self, GaussOracle, WalkOrdering};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use std::sync::Arc;

/// Outcome of one selftest check.
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &'static str, result: std::result::Result<String, String>) -> Check {
    match result {
        Ok(detail) => Check { name, pass: true, detail },
        Err(detail) => Check { name, pass: false, detail },
    }
}

fn f(p: u64, r: u32) -> Arc<FieldCtx> {
    Arc::new(FieldCtx::new(p, r).unwrap())
}

/// Runs every check; order is fixed.
pub fn run_all() -> Vec<Check> {
    vec![
        check("field_arithmetic_roundtrip", field_arithmetic_roundtrip()),
        check("discrete_log_roundtrip", discrete_log_roundtrip()),
        check("character_multiplicativity", character_multiplicativity()),
        check("character_orthogonality", character_orthogonality()),
        check("conductor_closed_form", conductor_closed_form()),
        check("gauss_norm_law", gauss_norm_law()),
        check("quadratic_closed_form", quadratic_closed_form()),
        check("jacobi_quotient", jacobi_quotient()),
        check("ring_pipeline_oracle_equivalence", ring_pipeline_oracle_equivalence()),
        check("qft_unitarity", qft_unitarity()),
        check("eigenphase_residual", eigenphase_residual()),
        check("state_preparation_fidelity", state_preparation_fidelity()),
        check("dlog_reduction_exact", dlog_reduction_exact()),
        check("walk_endpoint", walk_endpoint()),
        check("sequential_autocorrelation", sequential_autocorrelation()),
        check("phase_estimation_reproducible", phase_estimation_reproducible()),
    ]
}

fn field_arithmetic_roundtrip() -> std::result::Result<String, String> {
    let mut cases = 0u64;
    for (p, r) in [(2u64, 3u32), (3, 2), (7, 2), (13, 1)] {
        let ctx = f(p, r);
        for xi in 1..ctx.order() {
            let x = ctx.element(xi).unwrap();
            let inv = ctx.inv(x).map_err(|e| e.to_string())?;
            if ctx.mul(x, inv) != ctx.one() {
                return Err(format!("inverse failed in F_{}^{} at {}", p, r, xi));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} inverses verified"))
}

fn discrete_log_roundtrip() -> std::result::Result<String, String> {
    let ctx = f(2, 7);
    for xi in 1..ctx.order() {
        let x = ctx.element(xi).unwrap();
        let j = ctx.discrete_log(x).map_err(|e| e.to_string())?;
        if ctx.pow(ctx.generator(), j) != x {
            return Err(format!("log roundtrip failed at index {xi}"));
        }
    }
    Ok("127 logs round-tripped in F_128".into())
}

fn character_multiplicativity() -> std::result::Result<String, String> {
    let mut cases = 0u64;
    for n in [16u64, 45] {
        for chi in DirichletChar::enumerate(n).map_err(|e| e.to_string())? {
            for x in 0..n {
                for y in 0..n {
                    let lhs = chi.value(x * y % n);
                    let rhs = chi.value(x) * chi.value(y);
                    if (lhs - rhs).norm() > 1e-12 {
                        return Err(format!(
                            "mod {n} χ{:?} not multiplicative at ({x},{y})",
                            chi.indices()
                        ));
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} products checked"))
}

fn character_orthogonality() -> std::result::Result<String, String> {
    let n = 24u64;
    for chi in DirichletChar::enumerate(n).map_err(|e| e.to_string())? {
        let total: Complex64 = (0..n).map(|x| chi.value(x)).sum();
        let expect = if chi.is_trivial() { 8.0 } else { 0.0 };
        if (total - Complex64::new(expect, 0.0)).norm() > 1e-10 {
            return Err(format!("column sum off for χ{:?}: {total}", chi.indices()));
        }
    }
    Ok("column sums mod 24 all correct".into())
}

fn conductor_closed_form() -> std::result::Result<String, String> {
    let mut cases = 0u64;
    for (p, r) in [(3u64, 3u32), (5, 2), (7, 1), (11, 1)] {
        let q = p.pow(r);
        for alpha in 0..crate::chars::euler_phi(q) {
            let chi = DirichletChar::new(q, 0, 0, &[alpha]).map_err(|e| e.to_string())?;
            let want = if alpha == 0 {
                1
            } else {
                let mut s = 0u32;
                let mut a = alpha;
                while a % p == 0 {
                    a /= p;
                    s += 1;
                }
                q / p.pow(s)
            };
            if chi.conductor() != want {
                return Err(format!("conductor mod {q} α={alpha}: got {}", chi.conductor()));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} conductors match p^(r−s)"))
}

fn gauss_norm_law() -> std::result::Result<String, String> {
    let mut cases = 0u64;
    for (p, r) in [(7u64, 1u32), (2, 3), (5, 2)] {
        let ctx = f(p, r);
        let q = ctx.order() as f64;
        for chi in MultChar::enumerate(&ctx).into_iter().skip(1) {
            for b in 1..ctx.order() {
                let g = gauss::gauss_sum_direct_field(&chi, ctx.element(b).unwrap())
                    .map_err(|e| e.to_string())?;
                if (g.norm() - q.sqrt()).abs() > 1e-9 {
                    return Err(format!("|G| off in F_{}^{} α={} β={b}", p, r, chi.alpha()));
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} sums at norm √q"))
}

fn quadratic_closed_form() -> std::result::Result<String, String> {
    let mut cases = 0u64;
    for (p, r) in [(3u64, 1u32), (3, 2), (5, 1), (7, 1), (11, 1), (13, 1), (3, 4), (7, 2)] {
        let ctx = f(p, r);
        let chi = MultChar::quadratic(ctx.clone()).map_err(|e| e.to_string())?;
        let direct =
            gauss::gauss_sum_direct_field(&chi, ctx.one()).map_err(|e| e.to_string())?;
        let closed = gauss::quadratic_gauss_closed(p, r).map_err(|e| e.to_string())?;
        if (direct - closed).norm() > 1e-9 {
            return Err(format!("closed form off at p={p} r={r}"));
        }
        cases += 1;
    }
    Ok(format!("{cases} quadratic sums match closed form"))
}

fn jacobi_quotient() -> std::result::Result<String, String> {
    let ctx = f(13, 1);
    let chars = MultChar::enumerate(&ctx);
    let mut cases = 0u64;
    for chi in chars.iter().skip(1) {
        for psi in chars.iter().skip(1) {
            if chi.mul(psi).map_err(|e| e.to_string())?.is_trivial() {
                continue;
            }
            let direct = gauss::jacobi_direct(chi, psi).map_err(|e| e.to_string())?;
            let quotient = gauss::jacobi_via_gauss(chi, psi).map_err(|e| e.to_string())?;
            if (direct - quotient).norm() > 1e-9 {
                return Err(format!("J mismatch at α={} ψ={}", chi.alpha(), psi.alpha()));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} Jacobi pairs agree"))
}

fn ring_pipeline_oracle_equivalence() -> std::result::Result<String, String> {
    let mut cases = 0u64;
    for n in 2..=30u64 {
        for chi in DirichletChar::enumerate(n).map_err(|e| e.to_string())? {
            for beta in 0..n {
                let direct =
                    gauss::gauss_sum_direct_ring(&chi, beta).map_err(|e| e.to_string())?;
                let piped = gauss::ring_gauss_pipeline(&chi, beta, Estimator::Exact)
                    .map_err(|e| e.to_string())?;
                if (piped.value - direct).norm() > 1e-9 {
                    return Err(format!("pipeline off at n={n} β={beta} χ{:?}", chi.indices()));
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} ring sums match the pipeline"))
}

fn qft_unitarity() -> std::result::Result<String, String> {
    let mut rng = ChaCha12Rng::seed_from_u64(1);
    for (p, r) in [(3u64, 2u32), (2, 3), (5, 1)] {
        let ctx = f(p, r);
        let q = ctx.order() as usize;
        let amps: Vec<Complex64> =
            (0..q).map(|_| Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)).collect();
        let s = StateVector::new(amps).map_err(|e| e.to_string())?;
        let out = qsim::qft_field(&s, &ctx, ctx.one()).map_err(|e| e.to_string())?;
        if (out.norm() - 1.0).abs() > 1e-12 {
            return Err(format!("field transform norm drift at F_{}^{}", p, r));
        }
    }
    for n in [12u64, 16] {
        let amps: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
            .collect();
        let s = StateVector::new(amps).map_err(|e| e.to_string())?;
        let out = qsim::qft_ring(&s, n).map_err(|e| e.to_string())?;
        if (out.norm() - 1.0).abs() > 1e-12 {
            return Err(format!("ring transform norm drift at n={n}"));
        }
    }
    Ok("5 random states kept unit norm".into())
}

fn eigenphase_residual() -> std::result::Result<String, String> {
    let mut cases = 0u64;
    for (p, r) in [(5u64, 1u32), (3, 2)] {
        let ctx = f(p, r);
        for chi in MultChar::enumerate(&ctx).into_iter().skip(1) {
            for b in 1..ctx.order().min(3) {
                let beta = ctx.element(b).unwrap();
                let gamma = qsim::eigenphase_gauss_field(&chi, beta).map_err(|e| e.to_string())?;
                let want = wrap_angle(
                    gauss::gauss_sum_direct_field(&chi, beta)
                        .map_err(|e| e.to_string())?
                        .arg(),
                );
                if angle_distance(gamma, want) > 1e-9 {
                    return Err(format!("eigenphase off in F_{}^{} α={}", p, r, chi.alpha()));
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} eigenphases match direct arguments"))
}

fn state_preparation_fidelity() -> std::result::Result<String, String> {
    let ctx = f(7, 1);
    for chi in MultChar::enumerate(&ctx) {
        let prepared = qsim::prepare_char_state(&chi).map_err(|e| e.to_string())?;
        let direct = StateVector::char_state(&chi).map_err(|e| e.to_string())?;
        let fid = prepared.fidelity(&direct).map_err(|e| e.to_string())?;
        if fid < 1.0 - 1e-10 {
            return Err(format!("fidelity {fid} at α={}", chi.alpha()));
        }
    }
    Ok("6 characters prepared at fidelity 1".into())
}

fn dlog_reduction_exact() -> std::result::Result<String, String> {
    let ctx = f(31, 1);
    let chi = MultChar::new(ctx.clone(), 1);
    for xi in 1..31u64 {
        let x = ctx.element(xi).unwrap();
        let mut oracle = GaussOracle::exact(chi.clone()).map_err(|e| e.to_string())?;
        let ell = reductions::dlog_via_gauss_oracle(&mut oracle, x).map_err(|e| e.to_string())?;
        if ctx.pow(ctx.generator(), ell) != x {
            return Err(format!("recovered wrong log at x={xi}"));
        }
    }
    Ok("30 logs recovered from phases over F_31".into())
}

fn walk_endpoint() -> std::result::Result<String, String> {
    let ctx = f(13, 1);
    let chi = MultChar::new(ctx.clone(), 1);
    let direct = gauss::gauss_sum_direct_field(&chi, ctx.one()).map_err(|e| e.to_string())?;
    for ordering in [WalkOrdering::Sequential, WalkOrdering::Generator] {
        let trace = reductions::walk_trace(&chi, ordering).map_err(|e| e.to_string())?;
        if (trace.endpoint() - direct).norm() > 1e-9 {
            return Err(format!("{} endpoint off", ordering.as_str()));
        }
    }
    Ok("both orderings end at G(F_13,χ,1)".into())
}

fn sequential_autocorrelation() -> std::result::Result<String, String> {
    let ctx = f(13, 1);
    let chi = MultChar::new(ctx.clone(), 1);
    for s in 1..12u64 {
        let got = reductions::autocorrelation(&chi, WalkOrdering::Sequential, s)
            .map_err(|e| e.to_string())?;
        let want = TurnAngle::new(13 - s, 13).to_complex() * (-1.0 / 12.0);
        if (got - want).norm() > 1e-9 {
            return Err(format!("autocorrelation off at s={s}"));
        }
    }
    Ok("11 shifts match −e(−s)/(p−1)".into())
}

fn phase_estimation_reproducible() -> std::result::Result<String, String> {
    let a = qsim::estimate_phase_of(2.5, 2000, EstimateStrategy::TwoBasis, 33)
        .map_err(|e| e.to_string())?;
    let b = qsim::estimate_phase_of(2.5, 2000, EstimateStrategy::TwoBasis, 33)
        .map_err(|e| e.to_string())?;
    if a.gamma_hat.to_bits() != b.gamma_hat.to_bits() {
        return Err("same seed produced different estimates".into());
    }
    if angle_distance(a.gamma_hat, 2.5) > 0.2 {
        return Err(format!("estimate {} too far from 2.5", a.gamma_hat));
    }
    Ok("seeded runs bit-identical and within tolerance".into())
}
