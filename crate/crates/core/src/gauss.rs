//! Exact Gauss and Jacobi sums over finite fields and residue rings.
//!
//! The ground truth everywhere is direct summation with exact rational
//! angles: G(F_{p^r},χ,β) = Σ_x χ(x)ζ_p^{Tr(βx)} and
//! G(Z/nZ,χ,β) = Σ_x χ(x)ζ_n^{βx}. On top of the direct oracle sit the
//! classical closed forms (quadratic characters, trivial characters, the
//! β-rescaling χ(β^{−1})) and the full ring reduction pipeline: CRT
//! factorization into prime-power components, trivial-component closed form
//! by the p-adic valuation of β, periodic reduction of non-primitive
//! characters to their conductor, and the primitive base value
//! G(χ,1) with |G| = √(modulus), obtainable exactly or by simulated
//! quantum phase estimation.

use crate::angle::{lcm, unit_roots, wrap_angle, TurnAngle};
use crate::chars::{AddCharField, DirichletChar, MultChar};
use crate::error::{Error, Result};
use crate::field::{self, FieldElement};
use crate::qsim::{self, EstimateStrategy};
use num_complex::Complex64;
use std::cell::RefCell;
use std::f64::consts::TAU;
use std::rc::Rc;

/// Largest field/ring order accepted for O(order) direct summation.
pub const MAX_DIRECT_ORDER: u64 = 1 << 20;

/// Largest shared root-of-unity table for ring sums (entries).
const RING_ROOT_CAP: u64 = 1 << 21;

/// Norms below this are exact zeros of a Gauss sum (true nonzero values
/// have modulus ≥ 1).
const ZERO_CUTOFF: f64 = 1e-6;

// --- result type -----------------------------------------------------------------

/// How a Gauss-sum value was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Direct,
    QuadraticClosed,
    TrivialClosed,
    PeriodicReduction,
    PrimitiveFactored,
    CrtProduct,
    QuantumEstimated,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::QuadraticClosed => "quadratic_closed",
            Method::TrivialClosed => "trivial_closed",
            Method::PeriodicReduction => "periodic_reduction",
            Method::PrimitiveFactored => "primitive_factored",
            Method::CrtProduct => "crt_product",
            Method::QuantumEstimated => "quantum_estimated",
        }
    }
}

/// A Gauss-sum value with its polar decomposition and provenance.
///
/// Invariant: value = norm·e^{iγ} within 1e−12 when error_bound = 0. A zero
/// sum has the phase reported as 0 with norm 0 and `is_zero` set, since the
/// phase of 0 is undefined.
#[derive(Clone, Debug)]
pub struct GaussSumResult {
    pub value: Complex64,
    pub norm: f64,
    /// Phase in [0, 2π); 0 for zero sums.
    pub gamma: f64,
    pub is_zero: bool,
    pub method: Method,
    /// Bound on the phase error in radians; 0 for exact methods.
    pub error_bound: f64,
}

impl GaussSumResult {
    /// Wraps an exactly computed value.
    pub fn exact(value: Complex64, method: Method) -> GaussSumResult {
        let norm = value.norm();
        if norm < ZERO_CUTOFF {
            GaussSumResult { value, norm: 0.0, gamma: 0.0, is_zero: true, method, error_bound: 0.0 }
        } else {
            GaussSumResult {
                value,
                norm,
                gamma: wrap_angle(value.arg()),
                is_zero: false,
                method,
                error_bound: 0.0,
            }
        }
    }

    /// Phase as a fraction of a turn, in [0, 1).
    pub fn gamma_turns(&self) -> f64 {
        self.gamma / TAU
    }
}

// --- field sums -----------------------------------------------------------------------

fn check_order(order: u64) -> Result<()> {
    if order > MAX_DIRECT_ORDER {
        return Err(Error::OrderTooLarge { order: order as u128, bound: MAX_DIRECT_ORDER });
    }
    Ok(())
}

/// G(F_{p^r},χ,β) = Σ_x χ(x)ζ_p^{Tr(βx)} by direct summation with exact
/// rational angles. Accepts every character (including trivial) and every β
/// (including 0); this is the oracle all other methods are tested against.
pub fn gauss_sum_direct_field(chi: &MultChar, beta: FieldElement) -> Result<Complex64> {
    let ctx = chi.field();
    check_order(ctx.order())?;
    let add = AddCharField::new(ctx.clone(), beta);
    let n = ctx.unit_order();

    // Fast path: every term angle αj/(p^r−1) + Tr(βg^j)/p is an exact multiple
    // of 1/(p·(p^r−1)) turns, so with a cached root table each term is a lookup.
    // Walking j (so x = g^j) makes the χ index advance by a constant step, and
    // β·g^j = g^(log β + j) turns the trace argument into table arithmetic.
    if let Some(roots) = ctx.term_root_table() {
        let d = roots.len() as u64;
        let (exp, log) = ctx.dlog_tables();
        let tr = ctx.trace_table();
        let step = (chi.alpha() % n) * ctx.p();
        let mut chi_idx = 0u64;
        let mut sum = Complex64::new(0.0, 0.0);
        if beta.is_zero() {
            for _ in 0..n {
                sum += roots[chi_idx as usize];
                chi_idx += step;
                if chi_idx >= d {
                    chi_idx -= d;
                }
            }
            return Ok(sum);
        }
        let mut k = log[beta.index() as usize] as usize;
        for _ in 0..n {
            let t = tr[exp[k] as usize] as u64;
            let mut idx = chi_idx + t * n;
            if idx >= d {
                idx -= d;
            }
            sum += roots[idx as usize];
            chi_idx += step;
            if chi_idx >= d {
                chi_idx -= d;
            }
            k += 1;
            if k as u64 == n {
                k = 0;
            }
        }
        return Ok(sum);
    }

    let (_, log) = ctx.dlog_tables();
    let mut sum = Complex64::new(0.0, 0.0);
    for x in 1..ctx.order() {
        let x_el = ctx.element(x).unwrap();
        let angle = chi.angle_at_log(log[x as usize] as u64).add(add.angle(x_el));
        sum += angle.to_complex();
    }
    Ok(sum)
}

/// χ(β^{−1}), the multiplier with G(F,χ,βδ) = beta_factor(χ,β)·G(F,χ,δ).
pub fn beta_factor(chi: &MultChar, beta: FieldElement) -> Result<Complex64> {
    if beta.is_zero() {
        return Err(Error::ZeroBeta);
    }
    Ok(chi.value(chi.field().inv(beta)?))
}

/// Closed form for the quadratic-character Gauss sum at β = 1:
/// −(−1)^r·√(p^r) for p ≡ 1 mod 4, −(−i)^r·√(p^r) for p ≡ 3 mod 4.
pub fn quadratic_gauss_closed(p: u64, r: u32) -> Result<Complex64> {
    if p == 2 {
        return Err(Error::InvalidArgument(
            "no quadratic character in characteristic 2".into(),
        ));
    }
    if !field::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if r == 0 {
        return Err(Error::ZeroDegree);
    }
    let magnitude = (p as f64).powi(r as i32 / 2) * if r % 2 == 1 { (p as f64).sqrt() } else { 1.0 };
    let unit = if p % 4 == 1 {
        // −(−1)^r
        Complex64::new(if r % 2 == 0 { -1.0 } else { 1.0 }, 0.0)
    } else {
        // −(−i)^r, cycling with r mod 4: −1, i, 1, −i.
        match r % 4 {
            0 => Complex64::new(-1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        }
    };
    Ok(unit * magnitude)
}

/// J(χ,ψ) = Σ_x χ(x)ψ(1−x) by direct summation.
pub fn jacobi_direct(chi: &MultChar, psi: &MultChar) -> Result<Complex64> {
    let ctx = chi.field();
    if ctx.as_ref() != psi.field().as_ref() {
        return Err(Error::ContextMismatch);
    }
    check_order(ctx.order())?;
    let mut sum = Complex64::new(0.0, 0.0);
    for x in ctx.elements() {
        sum += chi.value(x) * psi.value(ctx.sub(ctx.one(), x));
    }
    Ok(sum)
}

/// J(χ,ψ) = G(χ,1)·G(ψ,1)/G(χψ,1); requires χ, ψ, χψ all nontrivial.
pub fn jacobi_via_gauss(chi: &MultChar, psi: &MultChar) -> Result<Complex64> {
    let product = chi.mul(psi)?;
    if chi.is_trivial() || psi.is_trivial() || product.is_trivial() {
        return Err(Error::TrivialChar);
    }
    let one = chi.field().one();
    let g_chi = gauss_sum_direct_field(chi, one)?;
    let g_psi = gauss_sum_direct_field(psi, one)?;
    let g_prod = gauss_sum_direct_field(&product, one)?;
    Ok(g_chi * g_psi / g_prod)
}

/// Field Gauss sum with method dispatch: degenerate cases by closed form,
/// quadratic characters by the closed formula, everything else directly.
pub fn gauss_sum_field(chi: &MultChar, beta: FieldElement) -> Result<GaussSumResult> {
    let ctx = chi.field();
    check_order(ctx.order())?;
    if beta.is_zero() {
        // G(χ⁰,0) = p^r − 1; G(χ,0) = 0 for nontrivial χ.
        let v = if chi.is_trivial() { ctx.unit_order() as f64 } else { 0.0 };
        return Ok(GaussSumResult::exact(Complex64::new(v, 0.0), Method::TrivialClosed));
    }
    if chi.is_trivial() {
        // Full additive-character sum minus the x = 0 term.
        return Ok(GaussSumResult::exact(Complex64::new(-1.0, 0.0), Method::TrivialClosed));
    }
    if chi.is_quadratic() && ctx.p() != 2 {
        let value = quadratic_gauss_closed(ctx.p(), ctx.degree())? * beta_factor(chi, beta)?;
        return Ok(GaussSumResult::exact(value, Method::QuadraticClosed));
    }
    Ok(GaussSumResult::exact(gauss_sum_direct_field(chi, beta)?, Method::Direct))
}

// --- ring sums --------------------------------------------------------------------------

/// G(Z/nZ,χ,β) = Σ_x χ(x)ζ_n^{βx} by direct summation; equals the β-th
/// Fourier coefficient of χ.
pub fn gauss_sum_direct_ring(chi: &DirichletChar, beta: u64) -> Result<Complex64> {
    let n = chi.modulus();
    check_order(n)?;
    let beta = beta % n;

    // Fast path: χ values are ord(χ)-th roots and additive factors n-th roots,
    // so each term is a d-th root for d = lcm(λ(n), n), a denominator shared
    // by every character mod n; terms become lookups in one cached table.
    let d = lcm(carmichael(n), n);
    if d <= RING_ROOT_CAP {
        let roots = ring_root_table(d);
        let col = chi.angle_numerators();
        let chi_mult = d / chi.order();
        let step = beta * (d / n);
        let mut add_idx = 0u64;
        let mut sum = Complex64::new(0.0, 0.0);
        for &k in col {
            if k != u32::MAX {
                let mut idx = k as u64 * chi_mult + add_idx;
                if idx >= d {
                    idx -= d;
                }
                sum += roots[idx as usize];
            }
            add_idx += step;
            if add_idx >= d {
                add_idx -= d;
            }
        }
        return Ok(sum);
    }

    let mut sum = Complex64::new(0.0, 0.0);
    for x in 0..n {
        if let Some(mult) = chi.angle(x) {
            let angle = mult.add(TurnAngle::new(beta * x % n, n));
            sum += angle.to_complex();
        }
    }
    Ok(sum)
}

/// λ(n), the exponent of (Z/nZ)^*: lcm of λ over the prime-power factors,
/// with λ(2) = 1, λ(4) = 2, λ(2^r) = 2^{r−2} for r ≥ 3, λ(p^r) = φ(p^r) odd.
fn carmichael(n: u64) -> u64 {
    let mut lam = 1;
    for (p, r) in field::factorize(n) {
        let comp = if p == 2 {
            match r {
                1 => 1,
                2 => 2,
                _ => 1 << (r - 2),
            }
        } else {
            p.pow(r) - p.pow(r - 1)
        };
        lam = lcm(lam, comp);
    }
    lam
}

// One-slot cache of ring root tables: sums over a fixed modulus share one
// denominator across all characters and β values.
thread_local! {
    static RING_ROOTS: RefCell<(u64, Rc<Vec<Complex64>>)> = RefCell::new((0, Rc::new(Vec::new())));
}

fn ring_root_table(d: u64) -> Rc<Vec<Complex64>> {
    RING_ROOTS.with(|slot| {
        let mut slot = slot.borrow_mut();
        if slot.0 != d {
            *slot = (d, Rc::new(unit_roots(d)));
        }
        slot.1.clone()
    })
}

/// For n = ∏ p_i^{r_i}: the CRT coefficients J_i with J_i·(n/p_i^{r_i}) ≡ 1
/// (mod p_i^{r_i}), listed as (p_i, r_i, p_i^{r_i}, J_i) in ascending prime
/// order.
pub fn crt_coefficients(n: u64) -> Result<Vec<(u64, u32, u64, u64)>> {
    if n < 2 {
        return Err(Error::BadModulus(n));
    }
    Ok(field::factorize(n)
        .into_iter()
        .map(|(p, r)| {
            let q = p.pow(r);
            let j = field::mod_inv((n / q) % q, q);
            (p, r, q, j)
        })
        .collect())
}

// --- ring pipeline -------------------------------------------------------------------------

/// How the primitive base values G(χ,1) of pipeline components are obtained.
#[derive(Clone, Copy, Debug)]
pub enum Estimator {
    /// Direct summation; exact.
    Exact,
    /// Simulated phase estimation with budget t; the norm stays exact and
    /// the phase carries a statistical error bound.
    Quantum { t: u64, strategy: EstimateStrategy, seed: u64 },
}

struct Component {
    value: Complex64,
    norm: f64,
    method: Method,
    error_bound: f64,
}

/// β-independent data for one CRT component of the exact pipeline.
enum CompPlan {
    /// Trivial component character: closed form keyed on v_p(β).
    Trivial { p: u64, r: u32, q: u64 },
    /// Nontrivial: p^s·χ_c^{−1}(β/p^s)·G(χ_c,1) when p^s | β and β/p^s is a
    /// unit at the conductor f, 0 otherwise. χ_c^{−1} and the base sum are
    /// precomputed; `reduced` records whether a conductor drop happened.
    Factored { ps: u64, f: u64, inv: DirichletChar, base: Complex64, reduced: bool },
}

/// Everything about a character's pipeline that does not depend on β:
/// CRT split (q_i, J_i) plus the per-component plan.
struct PipelinePlan {
    coeffs: Vec<(u64, u64)>,
    comps: Vec<CompPlan>,
}

thread_local! {
    /// One-slot plan cache; β sweeps over a fixed character hit it every call.
    static PLAN_CACHE: RefCell<Option<(DirichletChar, Rc<PipelinePlan>)>> = RefCell::new(None);
}

fn pipeline_plan(chi: &DirichletChar) -> Result<Rc<PipelinePlan>> {
    let hit = PLAN_CACHE.with(|slot| {
        slot.borrow().as_ref().and_then(|(key, plan)| (key == chi).then(|| plan.clone()))
    });
    if let Some(plan) = hit {
        return Ok(plan);
    }
    let plan = Rc::new(build_pipeline_plan(chi)?);
    PLAN_CACHE.with(|slot| *slot.borrow_mut() = Some((chi.clone(), plan.clone())));
    Ok(plan)
}

fn build_pipeline_plan(chi: &DirichletChar) -> Result<PipelinePlan> {
    let n = chi.modulus();
    let ((alpha0, alpha0p), odd_alphas) = chi.indices();
    let mut coeffs = Vec::new();
    let mut comps = Vec::new();
    let mut odd_iter = odd_alphas.iter();
    for (p, r, q, j) in crt_coefficients(n)? {
        let comp_chi = if p == 2 {
            DirichletChar::new(q, alpha0, alpha0p, &[])?
        } else {
            DirichletChar::new(q, 0, 0, &[*odd_iter.next().expect("component count")])?
        };
        coeffs.push((q, j));
        if comp_chi.is_trivial() {
            comps.push(CompPlan::Trivial { p, r, q });
            continue;
        }
        let f = comp_chi.conductor();
        let (ps, prim, reduced) = if f < q {
            let s = r - field::factorize(f)[0].1;
            (p.pow(s), comp_chi.primitive_part()?, true)
        } else {
            (1, comp_chi, false)
        };
        let base = gauss_sum_direct_ring(&prim, 1)?;
        let inv = prim.inverse();
        comps.push(CompPlan::Factored { ps, f, inv, base, reduced });
    }
    Ok(PipelinePlan { coeffs, comps })
}

/// Evaluate one planned component at β (already folded into the component
/// modulus). Mirrors `component_gauss` exactly, with the β-independent parts
/// read from the plan.
fn eval_component(plan: &CompPlan, beta: u64) -> Component {
    let zero = |method| Component {
        value: Complex64::new(0.0, 0.0),
        norm: 0.0,
        method,
        error_bound: 0.0,
    };
    match plan {
        CompPlan::Trivial { p, r, q } => {
            let j = if beta == 0 { *r } else { val_p(beta, *p) };
            let value = if j >= *r {
                crate::chars::euler_phi(*q) as f64
            } else if j == *r - 1 {
                -((*q / *p) as f64)
            } else {
                0.0
            };
            Component {
                value: Complex64::new(value, 0.0),
                norm: value.abs(),
                method: Method::TrivialClosed,
                error_bound: 0.0,
            }
        }
        CompPlan::Factored { ps, f, inv, base, reduced } => {
            if beta % ps != 0 {
                return zero(Method::PeriodicReduction);
            }
            match inv.angle((beta / ps) % f) {
                None => zero(if *reduced {
                    Method::PeriodicReduction
                } else {
                    Method::PrimitiveFactored
                }),
                Some(a) => {
                    let method = if *reduced {
                        Method::PeriodicReduction
                    } else if beta == 1 {
                        Method::Direct
                    } else {
                        Method::PrimitiveFactored
                    };
                    Component {
                        value: base * a.to_complex() * *ps as f64,
                        norm: *ps as f64 * (*f as f64).sqrt(),
                        method,
                        error_bound: 0.0,
                    }
                }
            }
        }
    }
}

/// Ring Gauss sum by the classical reduction pipeline:
/// (1) split G(Z/nZ,χ,β) = ∏_i G(Z/p_i^{r_i}Z, χ_i, β·J_i) over the CRT
/// components; (2) trivial components by the closed form keyed on
/// j = v_p(β): φ(p^r) if j = r, −p^{r−1} if j = r−1, 0 otherwise;
/// (3) non-primitive components: 0 unless p^s | β (s the drop to the
/// conductor), else the factor p^s times the conductor-level sum of the
/// primitive part; (4) primitive components: 0 for non-unit β, else
/// χ^{−1}(β)·G(χ,1) with the base value from the chosen estimator and
/// |G| = √(modulus). Norms are assembled exactly; only estimated phases
/// carry an error bound.
pub fn ring_gauss_pipeline(
    chi: &DirichletChar,
    beta: u64,
    estimator: Estimator,
) -> Result<GaussSumResult> {
    let n = chi.modulus();
    check_order(n)?;
    let beta = beta % n;

    // Exact estimation reuses the cached β-independent plan; the simulated
    // estimator draws fresh randomness per call and keeps the direct path.
    if matches!(estimator, Estimator::Exact) {
        let plan = pipeline_plan(chi)?;
        let components: Vec<Component> = plan
            .coeffs
            .iter()
            .zip(&plan.comps)
            .map(|(&(q, j), comp)| eval_component(comp, (beta % q) * (j % q) % q))
            .collect();
        return Ok(assemble_pipeline(&components));
    }

    let coeffs = crt_coefficients(n)?;
    let ((alpha0, alpha0p), odd_alphas) = chi.indices();

    let mut components = Vec::with_capacity(coeffs.len());
    let mut odd_iter = odd_alphas.iter();
    for (idx, &(p, _r, q, j)) in coeffs.iter().enumerate() {
        let comp_chi = if p == 2 {
            DirichletChar::new(q, alpha0, alpha0p, &[])?
        } else {
            DirichletChar::new(q, 0, 0, &[*odd_iter.next().expect("component count")])?
        };
        let comp_beta = (beta % q) * (j % q) % q;
        components.push(component_gauss(&comp_chi, comp_beta, estimator, idx as u64)?);
    }
    Ok(assemble_pipeline(&components))
}

/// Fold per-component values into the final record: product of values and
/// norms, summed error bounds, CRT-product method tag when split.
fn assemble_pipeline(components: &[Component]) -> GaussSumResult {
    let mut value = Complex64::new(1.0, 0.0);
    let mut norm = 1.0f64;
    let mut error_bound = 0.0f64;
    for c in components {
        value *= c.value;
        norm *= c.norm;
        error_bound += c.error_bound;
    }

    let method = if components.len() > 1 {
        Method::CrtProduct
    } else {
        components[0].method
    };
    if norm < ZERO_CUTOFF {
        return GaussSumResult {
            value: Complex64::new(0.0, 0.0),
            norm: 0.0,
            gamma: 0.0,
            is_zero: true,
            method,
            error_bound: 0.0,
        };
    }
    GaussSumResult {
        value,
        norm,
        gamma: wrap_angle(value.arg()),
        is_zero: false,
        method,
        error_bound,
    }
}

/// One prime-power component of the pipeline (steps 2–4).
fn component_gauss(
    chi: &DirichletChar,
    beta: u64,
    estimator: Estimator,
    component_index: u64,
) -> Result<Component> {
    let q = chi.modulus();
    let (p, r) = field::factorize(q)[0];

    // Step 2: trivial character, closed form by j = v_p(β).
    if chi.is_trivial() {
        let j = if beta == 0 { r } else { val_p(beta, p) };
        let value = if j >= r {
            crate::chars::euler_phi(q) as f64
        } else if j == r - 1 {
            -((q / p) as f64)
        } else {
            0.0
        };
        return Ok(Component {
            value: Complex64::new(value, 0.0),
            norm: value.abs(),
            method: Method::TrivialClosed,
            error_bound: 0.0,
        });
    }

    // Step 3: reduce a non-primitive character to its conductor.
    let conductor = chi.conductor();
    if conductor < q {
        let s = r - field::factorize(conductor)[0].1;
        let ps = p.pow(s);
        if beta % ps != 0 {
            return Ok(Component {
                value: Complex64::new(0.0, 0.0),
                norm: 0.0,
                method: Method::PeriodicReduction,
                error_bound: 0.0,
            });
        }
        let reduced = chi.primitive_part()?;
        let base = primitive_gauss(&reduced, beta / ps, estimator, component_index)?;
        return Ok(Component {
            value: base.value * ps as f64,
            norm: base.norm * ps as f64,
            method: Method::PeriodicReduction,
            error_bound: base.error_bound,
        });
    }

    // Step 4: primitive character.
    primitive_gauss(chi, beta, estimator, component_index)
}

/// G(Z/qZ, χ, β) for primitive χ: 0 for non-unit β, else χ^{−1}(β)·G(χ,1)
/// with |G(χ,1)| = √q and the base value from the estimator.
fn primitive_gauss(
    chi: &DirichletChar,
    beta: u64,
    estimator: Estimator,
    component_index: u64,
) -> Result<Component> {
    let q = chi.modulus();
    let beta = beta % q;
    let beta_angle = match chi.inverse().angle(beta) {
        Some(a) => a,
        None => {
            return Ok(Component {
                value: Complex64::new(0.0, 0.0),
                norm: 0.0,
                method: Method::PrimitiveFactored,
                error_bound: 0.0,
            })
        }
    };
    match estimator {
        Estimator::Exact => {
            let base = gauss_sum_direct_ring(chi, 1)?;
            let method = if beta == 1 { Method::Direct } else { Method::PrimitiveFactored };
            Ok(Component {
                value: base * beta_angle.to_complex(),
                norm: (q as f64).sqrt(),
                method,
                error_bound: 0.0,
            })
        }
        Estimator::Quantum { t, strategy, seed } => {
            let gamma = qsim::eigenphase_gauss_ring(chi)?;
            let est = qsim::estimate_phase_of(
                gamma,
                t,
                strategy,
                seed.wrapping_add(component_index.wrapping_mul(0x9E37_79B9_7F4A_7C15)),
            )?;
            let norm = (q as f64).sqrt();
            let value =
                Complex64::from_polar(norm, est.gamma_hat + beta_angle.radians());
            // ~3σ bound for the two-basis estimator at budget t.
            let error_bound = 3.0 * (2.0 / t as f64).sqrt();
            Ok(Component { value, norm, method: Method::QuantumEstimated, error_bound })
        }
    }
}

/// p-adic valuation of a nonzero integer.
fn val_p(mut x: u64, p: u64) -> u32 {
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    v
}
