//! C ABI over the gauss-sums library.
//!
//! Conventions: fallible calls return a status code (`GS_OK` = 0, negative on
//! failure) and write results through out-pointers; a failing call stores a
//! message readable with `gs_last_error()` until the next failure on the same
//! thread. Field handles are opaque and owned by the caller via
//! `gs_field_new`/`gs_field_free`; strings returned through out-pointers are
//! owned by the caller and released with `gs_string_free`.

use gauss_sums::chars::{DirichletChar, MultChar};
use gauss_sums::error::Error;
use gauss_sums::field::FieldCtx;
use gauss_sums::gauss::{self, Estimator, Method};
use gauss_sums::qsim::{self, EstimateStrategy};
use gauss_sums::reductions::{self, GaussOracle, WalkOrdering};
use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

/// Success.
pub const GS_OK: i32 = 0;
/// A required pointer argument was null.
pub const GS_ERR_NULL_POINTER: i32 = -1;
/// Arguments outside the supported domain (bad modulus, bad index, ...).
pub const GS_ERR_INVALID_ARGUMENT: i32 = -2;
/// The requested size exceeds a library bound.
pub const GS_ERR_TOO_LARGE: i32 = -3;
/// A mathematically undefined request (trivial character, zero element, ...).
pub const GS_ERR_DOMAIN: i32 = -4;
/// Oracle noise prevented a reliable reconstruction.
pub const GS_ERR_NOISY_ORACLE: i32 = -5;
/// Unexpected internal failure.
pub const GS_ERR_INTERNAL: i32 = -6;

/// Opaque handle to a finite field F_{p^r}.
pub struct GsField(Arc<FieldCtx>);

/// How a Gauss-sum value was produced.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum GsMethod {
    Direct = 0,
    QuadraticClosed = 1,
    TrivialClosed = 2,
    PeriodicReduction = 3,
    PrimitiveFactored = 4,
    CrtProduct = 5,
    QuantumEstimated = 6,
}

impl From<Method> for GsMethod {
    fn from(m: Method) -> GsMethod {
        match m {
            Method::Direct => GsMethod::Direct,
            Method::QuadraticClosed => GsMethod::QuadraticClosed,
            Method::TrivialClosed => GsMethod::TrivialClosed,
            Method::PeriodicReduction => GsMethod::PeriodicReduction,
            Method::PrimitiveFactored => GsMethod::PrimitiveFactored,
            Method::CrtProduct => GsMethod::CrtProduct,
            Method::QuantumEstimated => GsMethod::QuantumEstimated,
        }
    }
}

/// A computed Gauss sum in cartesian and polar form.
#[repr(C)]
pub struct GsGaussSum {
    pub value_re: f64,
    pub value_im: f64,
    pub norm: f64,
    /// Phase in [0, 2π); 0 for zero sums.
    pub gamma_rad: f64,
    /// Phase as a fraction of a turn, in [0, 1).
    pub gamma_turns: f64,
    /// Bound on the phase error in radians; 0 for exact methods.
    pub error_bound: f64,
    /// 1 when the sum is exactly zero.
    pub is_zero: i32,
    pub method: GsMethod,
}

// --- error plumbing ---------------------------------------------------------------

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn store_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn code_of(e: &Error) -> i32 {
    match e {
        Error::OrderTooLarge { .. } | Error::DimTooLarge { .. } => GS_ERR_TOO_LARGE,
        Error::NotPrime(_)
        | Error::ZeroDegree
        | Error::BadModulus(_)
        | Error::NotPrimitive(_)
        | Error::IndexOutOfRange { .. }
        | Error::BadCoefficients
        | Error::BadCharIndices { .. }
        | Error::BadShift { .. }
        | Error::InvalidArgument(_) => GS_ERR_INVALID_ARGUMENT,
        Error::OracleTooNoisy { .. } | Error::EpsilonTooLarge { .. } | Error::ReconstructionFailed => {
            GS_ERR_NOISY_ORACLE
        }
        Error::Io(_) => GS_ERR_INTERNAL,
        _ => GS_ERR_DOMAIN,
    }
}

fn fail(e: Error) -> i32 {
    let code = code_of(&e);
    store_error(e.to_string());
    code
}

fn fail_null() -> i32 {
    store_error("null pointer argument".into());
    GS_ERR_NULL_POINTER
}

/// Runs an FFI body, converting panics into GS_ERR_INTERNAL.
fn guard<F: FnOnce() -> i32>(f: F) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(code) => code,
        Err(_) => {
            store_error("internal panic".into());
            GS_ERR_INTERNAL
        }
    }
}

unsafe fn field_ref<'a>(field: *const GsField) -> Option<&'a Arc<FieldCtx>> {
    field.as_ref().map(|f| &f.0)
}

fn fill_sum(out: &mut GsGaussSum, r: &gauss::GaussSumResult) {
    out.value_re = r.value.re;
    out.value_im = r.value.im;
    out.norm = r.norm;
    out.gamma_rad = r.gamma;
    out.gamma_turns = r.gamma_turns();
    out.error_bound = r.error_bound;
    out.is_zero = r.is_zero as i32;
    out.method = r.method.into();
}

// --- field handles ----------------------------------------------------------------

/// Builds F_{p^r} with the deterministic modulus-polynomial and generator
/// choices, storing a heap handle in `out`.
///
/// # Safety
/// `out` must be a valid pointer; on GS_OK it receives a handle that must be
/// released with `gs_field_free`.
#[no_mangle]
pub unsafe extern "C" fn gs_field_new(p: u64, r: u32, out: *mut *mut GsField) -> i32 {
    guard(|| {
        if out.is_null() {
            return fail_null();
        }
        match FieldCtx::new(p, r) {
            Ok(ctx) => {
                *out = Box::into_raw(Box::new(GsField(Arc::new(ctx))));
                GS_OK
            }
            Err(e) => fail(e),
        }
    })
}

/// Like `gs_field_new`, but uses the element with canonical index `g` as the
/// generator (validated to have full multiplicative order).
///
/// # Safety
/// Same contract as `gs_field_new`.
#[no_mangle]
pub unsafe extern "C" fn gs_field_new_with_generator(
    p: u64,
    r: u32,
    g: u64,
    out: *mut *mut GsField,
) -> i32 {
    guard(|| {
        if out.is_null() {
            return fail_null();
        }
        match FieldCtx::with_generator(p, r, g) {
            Ok(ctx) => {
                *out = Box::into_raw(Box::new(GsField(Arc::new(ctx))));
                GS_OK
            }
            Err(e) => fail(e),
        }
    })
}

/// Releases a field handle. Null is ignored.
///
/// # Safety
/// `field` must be a handle from `gs_field_new`/`gs_field_new_with_generator`
/// that has not already been freed.
#[no_mangle]
pub unsafe extern "C" fn gs_field_free(field: *mut GsField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// Number of field elements p^r, or 0 for a null handle.
///
/// # Safety
/// `field` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gs_field_order(field: *const GsField) -> u64 {
    field_ref(field).map_or(0, |ctx| ctx.order())
}

/// Canonical index of the field generator, or 0 for a null handle.
///
/// # Safety
/// `field` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gs_field_generator(field: *const GsField) -> u64 {
    field_ref(field).map_or(0, |ctx| ctx.generator().index())
}

// --- sums ----------------------------------------------------------------------------

/// G(F_{p^r}, χ_α, β) with automatic method dispatch. `beta` is a canonical
/// element index.
///
/// # Safety
/// `field` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gs_field_gauss_sum(
    field: *const GsField,
    alpha: u64,
    beta: u64,
    out: *mut GsGaussSum,
) -> i32 {
    guard(|| {
        let (Some(ctx), Some(out)) = (field_ref(field), out.as_mut()) else {
            return fail_null();
        };
        let chi = MultChar::new(ctx.clone(), alpha);
        let beta = match ctx.element(beta) {
            Ok(b) => b,
            Err(e) => return fail(e),
        };
        match gauss::gauss_sum_field(&chi, beta) {
            Ok(r) => {
                fill_sum(out, &r);
                GS_OK
            }
            Err(e) => fail(e),
        }
    })
}

/// G(Z/nZ, χ, β) through the exact reduction pipeline. The character is given
/// by its two-power indices (α₀, α₀′) and one index per odd prime-power
/// factor of n, ascending (`odd_alphas`, `odd_len` entries; may be null when
/// `odd_len` is 0).
///
/// # Safety
/// `out` must be valid; `odd_alphas` must point to `odd_len` readable u64s
/// when `odd_len` > 0.
#[no_mangle]
pub unsafe extern "C" fn gs_ring_gauss_sum(
    n: u64,
    alpha0: u64,
    alpha0_prime: u64,
    odd_alphas: *const u64,
    odd_len: usize,
    beta: u64,
    out: *mut GsGaussSum,
) -> i32 {
    guard(|| {
        let Some(out) = out.as_mut() else {
            return fail_null();
        };
        let odd: &[u64] = if odd_len == 0 {
            &[]
        } else if odd_alphas.is_null() {
            return fail_null();
        } else {
            std::slice::from_raw_parts(odd_alphas, odd_len)
        };
        let chi = match DirichletChar::new(n, alpha0, alpha0_prime, odd) {
            Ok(c) => c,
            Err(e) => return fail(e),
        };
        match gauss::ring_gauss_pipeline(&chi, beta, Estimator::Exact) {
            Ok(r) => {
                fill_sum(out, &r);
                GS_OK
            }
            Err(e) => fail(e),
        }
    })
}

/// Jacobi sum J(χ_α, χ_ψ) = Σ χ(x)ψ(1−x) by direct summation.
///
/// # Safety
/// `field` must be a live handle; `out_re` and `out_im` must be valid.
#[no_mangle]
pub unsafe extern "C" fn gs_jacobi(
    field: *const GsField,
    alpha: u64,
    psi_alpha: u64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> i32 {
    guard(|| {
        let (Some(ctx), false, false) = (field_ref(field), out_re.is_null(), out_im.is_null())
        else {
            return fail_null();
        };
        let chi = MultChar::new(ctx.clone(), alpha);
        let psi = MultChar::new(ctx.clone(), psi_alpha);
        match gauss::jacobi_direct(&chi, &psi) {
            Ok(v) => {
                *out_re = v.re;
                *out_im = v.im;
                GS_OK
            }
            Err(e) => fail(e),
        }
    })
}

/// Eigenphase γ of |χ_α⟩ under the simulated transform χ²∘F_β, in [0, 2π).
///
/// # Safety
/// `field` must be a live handle and `out_gamma` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gs_eigenphase(
    field: *const GsField,
    alpha: u64,
    beta: u64,
    out_gamma: *mut f64,
) -> i32 {
    guard(|| {
        let (Some(ctx), false) = (field_ref(field), out_gamma.is_null()) else {
            return fail_null();
        };
        let chi = MultChar::new(ctx.clone(), alpha);
        let beta = match ctx.element(beta) {
            Ok(b) => b,
            Err(e) => return fail(e),
        };
        match qsim::eigenphase_gauss_field(&chi, beta) {
            Ok(g) => {
                *out_gamma = g;
                GS_OK
            }
            Err(e) => fail(e),
        }
    })
}

/// Sampling-based estimate of the Gauss-sum phase from t one-bit measurements
/// (`adaptive` 0 = fixed two-basis split, nonzero = staged recentering). The
/// estimate lands in `out_gamma`; `out_samples` (optional) receives the
/// samples actually consumed.
///
/// # Safety
/// `field` must be a live handle and `out_gamma` valid; `out_samples` may be
/// null.
#[no_mangle]
pub unsafe extern "C" fn gs_phase_estimate(
    field: *const GsField,
    alpha: u64,
    beta: u64,
    t: u64,
    adaptive: i32,
    seed: u64,
    out_gamma: *mut f64,
    out_samples: *mut u64,
) -> i32 {
    guard(|| {
        let (Some(ctx), false) = (field_ref(field), out_gamma.is_null()) else {
            return fail_null();
        };
        let chi = MultChar::new(ctx.clone(), alpha);
        let beta_el = match ctx.element(beta) {
            Ok(b) => b,
            Err(e) => return fail(e),
        };
        let gamma = if ctx.order() as usize <= qsim::MAX_STATE_DIM {
            qsim::eigenphase_gauss_field(&chi, beta_el)
        } else {
            gauss::gauss_sum_field(&chi, beta_el).map(|r| r.gamma)
        };
        let gamma = match gamma {
            Ok(g) => g,
            Err(e) => return fail(e),
        };
        let strategy =
            if adaptive != 0 { EstimateStrategy::Adaptive } else { EstimateStrategy::TwoBasis };
        match qsim::estimate_phase_of(gamma, t, strategy, seed) {
            Ok(est) => {
                *out_gamma = est.gamma_hat;
                if let Some(s) = out_samples.as_mut() {
                    *s = est.samples_used;
                }
                GS_OK
            }
            Err(e) => fail(e),
        }
    })
}

// --- reductions ------------------------------------------------------------------------

unsafe fn dlog_common(
    field: *const GsField,
    alpha: u64,
    x: u64,
    oracle: impl FnOnce(MultChar) -> Result<GaussOracle, Error>,
    out_ell: *mut u64,
    out_calls: *mut u64,
) -> i32 {
    let (Some(ctx), false) = (field_ref(field), out_ell.is_null()) else {
        return fail_null();
    };
    let x = match ctx.element(x) {
        Ok(x) => x,
        Err(e) => return fail(e),
    };
    let mut oracle = match oracle(MultChar::new(ctx.clone(), alpha)) {
        Ok(o) => o,
        Err(e) => return fail(e),
    };
    match reductions::dlog_via_gauss_oracle(&mut oracle, x) {
        Ok(ell) => {
            *out_ell = ell;
            if let Some(c) = out_calls.as_mut() {
                *c = oracle.calls();
            }
            GS_OK
        }
        Err(e) => fail(e),
    }
}

/// Recovers log_g(x) from exact Gauss-sum phase queries; the result is
/// verified by exponentiation before it is returned. `out_calls` (optional)
/// receives the number of oracle queries spent.
///
/// # Safety
/// `field` must be a live handle and `out_ell` valid; `out_calls` may be null.
#[no_mangle]
pub unsafe extern "C" fn gs_dlog_exact(
    field: *const GsField,
    alpha: u64,
    x: u64,
    out_ell: *mut u64,
    out_calls: *mut u64,
) -> i32 {
    guard(|| dlog_common(field, alpha, x, GaussOracle::exact, out_ell, out_calls))
}

/// Like `gs_dlog_exact` but queries an oracle whose phases carry seeded
/// uniform noise bounded by `epsilon` radians (must be ≤ 2π/16).
///
/// # Safety
/// Same contract as `gs_dlog_exact`.
#[no_mangle]
pub unsafe extern "C" fn gs_dlog_noisy(
    field: *const GsField,
    alpha: u64,
    x: u64,
    epsilon: f64,
    seed: u64,
    out_ell: *mut u64,
    out_calls: *mut u64,
) -> i32 {
    guard(|| {
        dlog_common(field, alpha, x, |chi| GaussOracle::noisy(chi, epsilon, seed), out_ell, out_calls)
    })
}

/// Partial sums of χ_α(x)e(x) over a prime field as CSV text ("t,re,im"
/// header plus one row per step; `generator_ordering` 0 walks x = 1,2,...,
/// nonzero walks x = g, g², ...). The string is owned by the caller and must
/// be released with `gs_string_free`.
///
/// # Safety
/// `field` must be a live handle and `out_csv` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gs_walk_csv(
    field: *const GsField,
    alpha: u64,
    generator_ordering: i32,
    out_csv: *mut *mut c_char,
) -> i32 {
    guard(|| {
        let (Some(ctx), false) = (field_ref(field), out_csv.is_null()) else {
            return fail_null();
        };
        let chi = MultChar::new(ctx.clone(), alpha);
        let ordering =
            if generator_ordering != 0 { WalkOrdering::Generator } else { WalkOrdering::Sequential };
        match reductions::walk_trace(&chi, ordering) {
            Ok(trace) => {
                let csv = reductions::walk_csv(&trace);
                match CString::new(csv) {
                    Ok(c) => {
                        *out_csv = c.into_raw();
                        GS_OK
                    }
                    Err(_) => {
                        store_error("CSV contained an interior NUL".into());
                        GS_ERR_INTERNAL
                    }
                }
            }
            Err(e) => fail(e),
        }
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn gs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// --- diagnostics -------------------------------------------------------------------

/// Message for the most recent failure on this thread, or null if none.
/// Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn gs_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(std::ptr::null(), |c| c.as_ptr()))
}

/// Runs the library's invariant self-checks; returns the number of failing
/// checks (0 means everything passed).
#[no_mangle]
pub extern "C" fn gs_selftest() -> i32 {
    guard(|| gauss_sums::selftest::run_all().iter().filter(|c| !c.pass).count() as i32)
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn gs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

// --- tests -------------------------------------------------------------------------
