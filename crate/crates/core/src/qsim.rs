//! Dense statevector simulation of the quantum subroutines.
//!
//! States live on the canonical element encoding: dimension p^r for fields
//! (amplitude i belongs to the element of index i) or n for rings. Simulated
//! primitives: the Fourier transform F_β with kernel ζ_p^{Tr(βxy)}/√(p^r) and
//! its ring analogue ζ_n^{xy}/√n, phase kickback |x⟩ ↦ ζ_n^{f(x)}|x⟩ (with a
//! register-level mode reproducing the ancilla mechanics), exact amplitude
//! amplification onto an indicated subset, character-state preparation, the
//! Gauss-sum eigenphase transform χ²∘F_β on |χ⟩, and sampling-based phase
//! estimation with Prob(m_φ) = ½ + ½cos(γ − φ).
//!
//! All operations are value-semantic (new state out) and deterministic; the
//! only randomness is the explicit seed of an estimation run.

use crate::angle::{unit_roots, wrap_angle};
use crate::chars::{DirichletChar, MultChar};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use std::f64::consts::{FRAC_PI_2, PI};

/// Largest dense statevector dimension.
pub const MAX_STATE_DIM: usize = 1 << 14;

// --- statevector --------------------------------------------------------------

/// A unit vector of complex amplitudes over 0..dim.
#[derive(Clone, Debug)]
pub struct StateVector {
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Normalizes the given amplitudes to ℓ₂ norm 1.
    pub fn new(amps: Vec<Complex64>) -> Result<StateVector> {
        Self::check_dim(amps.len())?;
        let norm = l2_norm(&amps);
        if norm < 1e-300 {
            return Err(Error::ZeroVector);
        }
        let inv = 1.0 / norm;
        Ok(StateVector { amps: amps.into_iter().map(|a| a * inv).collect() })
    }

    pub fn basis(dim: usize, idx: usize) -> Result<StateVector> {
        Self::check_dim(dim)?;
        if idx >= dim {
            return Err(Error::DimMismatch { got: idx, want: dim });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[idx] = Complex64::new(1.0, 0.0);
        Ok(StateVector { amps })
    }

    pub fn uniform(dim: usize) -> Result<StateVector> {
        Self::check_dim(dim)?;
        let a = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
        Ok(StateVector { amps: vec![a; dim] })
    }

    /// The normalized character state |χ⟩ with amplitude χ(x)/√(p^r−1).
    pub fn char_state(chi: &MultChar) -> Result<StateVector> {
        let ctx = chi.field();
        Self::check_dim(ctx.order() as usize)?;
        let inv = 1.0 / (ctx.unit_order() as f64).sqrt();
        let amps = ctx.elements().map(|x| chi.value(x) * inv).collect();
        Ok(StateVector { amps })
    }

    /// The normalized Dirichlet character state with amplitude χ(x)/√(φ(n)).
    pub fn dirichlet_state(chi: &DirichletChar) -> Result<StateVector> {
        let n = chi.modulus() as usize;
        Self::check_dim(n)?;
        let inv = 1.0 / (chi.phi() as f64).sqrt();
        let amps = (0..n as u64).map(|x| chi.value(x) * inv).collect();
        Ok(StateVector { amps })
    }

    fn check_dim(dim: usize) -> Result<()> {
        if dim == 0 || dim > MAX_STATE_DIM {
            return Err(Error::DimTooLarge { dim, bound: MAX_STATE_DIM });
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amp(&self, i: usize) -> Complex64 {
        self.amps[i]
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        l2_norm(&self.amps)
    }

    /// ⟨self|other⟩.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimMismatch { got: other.dim(), want: self.dim() });
        }
        Ok(self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum())
    }

    /// |⟨self|other⟩|.
    pub fn fidelity(&self, other: &StateVector) -> Result<f64> {
        Ok(self.inner(other)?.norm())
    }

    /// ℓ₂ distance to another state.
    pub fn distance(&self, other: &StateVector) -> Result<f64> {
        if self.dim() != other.dim() {
            return Err(Error::DimMismatch { got: other.dim(), want: self.dim() });
        }
        Ok(l2_norm(
            &self.amps.iter().zip(&other.amps).map(|(a, b)| a - b).collect::<Vec<_>>(),
        ))
    }
}

fn l2_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

// --- Fourier transforms --------------------------------------------------------

/// F_β over F_{p^r}: out(y) = (1/√(p^r))·Σ_x ζ_p^{Tr(βxy)}·in(x). Dense O(q²).
pub fn qft_field(state: &StateVector, ctx: &FieldCtx, beta: FieldElement) -> Result<StateVector> {
    let q = ctx.order() as usize;
    if state.dim() != q {
        return Err(Error::DimMismatch { got: state.dim(), want: q });
    }
    if beta.is_zero() {
        return Err(Error::ZeroBeta);
    }
    let roots = unit_roots(ctx.p());
    let trace: Vec<usize> = (0..q).map(|i| ctx.trace(ctx.element(i as u64).unwrap()) as usize).collect();
    let (exp, log) = ctx.dlog_tables();
    let n_units = ctx.unit_order();

    let mut out = vec![Complex64::new(0.0, 0.0); q];
    for x in 1..q {
        let a = state.amp(x);
        if a == Complex64::new(0.0, 0.0) {
            continue;
        }
        let bx = ctx.mul(beta, ctx.element(x as u64).unwrap());
        let log_bx = log[bx.index() as usize] as u64;
        for (y, o) in out.iter_mut().enumerate().skip(1) {
            let prod = exp[((log_bx + log[y] as u64) % n_units) as usize] as usize;
            *o += a * roots[trace[prod]];
        }
        out[0] += a;
    }
    // x = 0 contributes amp(0) to every output (kernel row of ones).
    let a0 = state.amp(0);
    if a0 != Complex64::new(0.0, 0.0) {
        for o in out.iter_mut() {
            *o += a0;
        }
    }
    let inv = 1.0 / (q as f64).sqrt();
    for o in out.iter_mut() {
        *o *= inv;
    }
    Ok(StateVector { amps: out })
}

/// F_β again, via the factored fast path: with x, y in coefficient coordinates,
/// Tr(βxy) = xᵀMy for the Gram matrix M_{ij} = Tr(β·u^{i+j}), so F_β is r
/// axis-wise p-point transforms followed by the index map y ↦ My. O(q·(pr+r²)).
pub fn qft_field_fast(state: &StateVector, ctx: &FieldCtx, beta: FieldElement) -> Result<StateVector> {
    let q = ctx.order() as usize;
    if state.dim() != q {
        return Err(Error::DimMismatch { got: state.dim(), want: q });
    }
    if beta.is_zero() {
        return Err(Error::ZeroBeta);
    }
    let p = ctx.p() as usize;
    let r = ctx.degree() as usize;
    let roots = unit_roots(ctx.p());

    // Axis-wise transforms: T(z) = Σ_x ζ_p^{⟨x,z⟩}·in(x), one p-point DFT per axis.
    let mut t: Vec<Complex64> = state.amps.to_vec();
    let mut scratch = vec![Complex64::new(0.0, 0.0); p];
    let mut stride = 1usize;
    for _axis in 0..r {
        let block = stride * p;
        for base in (0..q).step_by(block) {
            for off in 0..stride {
                for (k, s) in scratch.iter_mut().enumerate() {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for j in 0..p {
                        acc += t[base + off + j * stride] * roots[j * k % p];
                    }
                    *s = acc;
                }
                for (k, s) in scratch.iter().enumerate() {
                    t[base + off + k * stride] = *s;
                }
            }
        }
        stride *= p;
    }

    // Gram matrix in the monomial basis: M[i][j] = Tr(β·u^{i+j}), where u is
    // the basis monomial (index p), or 1 in the prime-field case.
    let u = if r == 1 { ctx.one() } else { ctx.element(ctx.p()).unwrap() };
    let mut tr_pow = vec![0u64; 2 * r - 1];
    for (k, tp) in tr_pow.iter_mut().enumerate() {
        *tp = ctx.trace(ctx.mul(beta, ctx.pow(u, k as u64)));
    }
    let inv = 1.0 / (q as f64).sqrt();
    let mut out = vec![Complex64::new(0.0, 0.0); q];
    for (y, o) in out.iter_mut().enumerate() {
        let ydig = ctx.coeffs(ctx.element(y as u64).unwrap());
        // z_i = Σ_j M[i][j]·y_j mod p, z = Σ z_i p^i.
        let mut z = 0usize;
        let mut place = 1usize;
        for i in 0..r {
            let mut zi = 0u64;
            for (j, &yj) in ydig.iter().enumerate() {
                zi += tr_pow[i + j] * yj;
            }
            z += (zi % p as u64) as usize * place;
            place *= p;
        }
        *o = t[z] * inv;
    }
    Ok(StateVector { amps: out })
}

/// DFT over Z/nZ: out(y) = (1/√n)·Σ_x ζ_n^{xy}·in(x). Dense O(n²).
pub fn qft_ring(state: &StateVector, n: u64) -> Result<StateVector> {
    let dim = n as usize;
    if state.dim() != dim {
        return Err(Error::DimMismatch { got: state.dim(), want: dim });
    }
    let roots = unit_roots(n);
    let inv = 1.0 / (n as f64).sqrt();
    let mut out = vec![Complex64::new(0.0, 0.0); dim];
    for (y, o) in out.iter_mut().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for x in 0..dim {
            acc += state.amp(x) * roots[x * y % dim];
        }
        *o = acc * inv;
    }
    Ok(StateVector { amps: out })
}

// --- phase kickback -------------------------------------------------------------

/// |x⟩ ↦ ζ_n^{f(x)}|x⟩, applied at amplitude level.
pub fn phase_kickback<F: Fn(usize) -> u64>(state: &StateVector, f: F, n: u64) -> StateVector {
    let roots = unit_roots(n);
    let amps = state
        .amps
        .iter()
        .enumerate()
        .map(|(x, a)| a * roots[(f(x) % n) as usize])
        .collect();
    StateVector { amps }
}

/// Register-level kickback: runs the ancilla mechanics explicitly. The system
/// is joined with an n-dimensional ancilla prepared in (1/√n)Σ_j ζ_n^j|j⟩;
/// subtracting f(x) from the ancilla register multiplies |x⟩ by ζ_n^{f(x)} and
/// returns the ancilla to its initial state. The joint state is verified to
/// factor exactly and the kicked system state is returned.
pub fn phase_kickback_register<F: Fn(usize) -> u64>(
    state: &StateVector,
    f: F,
    n: u64,
) -> Result<StateVector> {
    if n == 0 || n > 64 {
        return Err(Error::InvalidArgument(format!(
            "register-level kickback supports ancilla modulus 1..=64, got {n}"
        )));
    }
    let dim = state.dim();
    let nn = n as usize;
    if dim * nn > MAX_STATE_DIM {
        return Err(Error::DimTooLarge { dim: dim * nn, bound: MAX_STATE_DIM });
    }
    let roots = unit_roots(n);
    let anc_amp = 1.0 / (n as f64).sqrt();
    // Joint |x⟩|j⟩ at slot x·n + j.
    let mut joint = vec![Complex64::new(0.0, 0.0); dim * nn];
    for x in 0..dim {
        for j in 0..nn {
            joint[x * nn + j] = state.amp(x) * roots[j] * anc_amp;
        }
    }
    // |x⟩|j⟩ ↦ |x⟩|j − f(x) mod n⟩.
    let mut moved = vec![Complex64::new(0.0, 0.0); dim * nn];
    for x in 0..dim {
        let fx = (f(x) % n) as usize;
        for j in 0..nn {
            let k = (j + nn - fx) % nn;
            moved[x * nn + k] = joint[x * nn + j];
        }
    }
    // Extract the system factor against the unchanged ancilla and verify.
    let kicked: Vec<Complex64> = (0..dim).map(|x| moved[x * nn] / anc_amp).collect();
    let mut residual = 0.0f64;
    for x in 0..dim {
        for j in 0..nn {
            let expect = kicked[x] * roots[j] * anc_amp;
            residual += (moved[x * nn + j] - expect).norm_sqr();
        }
    }
    if residual.sqrt() > 1e-10 {
        return Err(Error::NotEigenvector { residual: residual.sqrt() });
    }
    Ok(StateVector { amps: kicked })
}

// --- exact amplitude amplification ------------------------------------------------

/// Exactly prepares the uniform superposition over `{x : indicator(x)}` from
/// the uniform state, using phase-generalized Grover iterations whose angle φ
/// is tuned so the final overlap is exactly 1. `weight` is the trusted count
/// of indicated elements; a mismatch is detected by the final fidelity check.
pub fn amplitude_amplify<F: Fn(usize) -> bool>(
    dim: usize,
    indicator: F,
    weight: u64,
) -> Result<StateVector> {
    StateVector::check_dim(dim)?;
    if weight == 0 || weight > dim as u64 {
        return Err(Error::InvalidArgument(format!(
            "stated weight {weight} outside 1..={dim}"
        )));
    }
    let marked: Vec<bool> = (0..dim).map(indicator).collect();

    let state = if weight == dim as u64 {
        StateVector::uniform(dim)?
    } else {
        let theta = ((weight as f64 / dim as f64).sqrt()).asin();
        let iters = ((PI / (4.0 * theta) - 0.5).ceil() as i64).max(1) as u64;
        let phi = 2.0 * ((PI / (4.0 * iters as f64 + 2.0)).sin() / theta.sin()).asin();
        let phase = Complex64::from_polar(1.0, phi);
        let mut amps = StateVector::uniform(dim)?.amps;
        let s = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
        for _ in 0..iters {
            // S_T(φ): phase φ on the marked subset.
            for (x, a) in amps.iter_mut().enumerate() {
                if marked[x] {
                    *a *= phase;
                }
            }
            // S_s(φ): ψ ↦ ψ − (1 − e^{iφ})⟨s|ψ⟩·s.
            let overlap: Complex64 = amps.iter().map(|a| s.conj() * a).sum();
            let corr = (Complex64::new(1.0, 0.0) - phase) * overlap * s;
            for a in amps.iter_mut() {
                *a -= corr;
            }
        }
        // The schedule leaves an (irrelevant) global phase; fix the convention
        // by making the first indicated amplitude real positive.
        if let Some(first) = marked.iter().position(|&m| m) {
            let a = amps[first];
            if a.norm() > 0.0 {
                let rot = a.conj() / a.norm();
                for v in amps.iter_mut() {
                    *v *= rot;
                }
            }
        }
        StateVector { amps }
    };

    // Verify against the directly constructed target; a wrong stated weight
    // (or an off-count indicator) surfaces here.
    let true_count = marked.iter().filter(|&&m| m).count() as u64;
    let fidelity = if true_count == 0 {
        0.0
    } else {
        let a = Complex64::new(1.0 / (true_count as f64).sqrt(), 0.0);
        let target = StateVector {
            amps: marked.iter().map(|&m| if m { a } else { Complex64::new(0.0, 0.0) }).collect(),
        };
        state.fidelity(&target)?
    };
    if fidelity < 1.0 - 1e-10 {
        return Err(Error::WeightMismatch { stated: weight, fidelity });
    }
    Ok(state)
}

// --- character-state preparation ----------------------------------------------------

/// Prepares |χ⟩ = (1/√(p^r−1))·Σ_{x≠0} χ(x)|x⟩ by amplifying onto F* and
/// kicking the phase α·log_g(x) in ζ_{p^r−1} units.
pub fn prepare_char_state(chi: &MultChar) -> Result<StateVector> {
    let ctx = chi.field().clone();
    let q = ctx.order() as usize;
    let units = amplitude_amplify(q, |x| x != 0, ctx.unit_order())?;
    if chi.is_trivial() {
        return Ok(units);
    }
    let (_, log) = ctx.dlog_tables();
    let n = ctx.unit_order();
    let alpha = chi.alpha();
    let f = move |x: usize| {
        if x == 0 {
            0
        } else {
            (alpha as u128 * log[x] as u128 % n as u128) as u64
        }
    };
    Ok(phase_kickback(&units, f, n))
}

// --- Gauss-sum eigenphase ------------------------------------------------------------

/// Runs the eigenphase transform on |χ⟩ over a field: F_β, then the phase
/// χ²(y) on the unit support. |χ⟩ is an eigenvector with eigenvalue
/// G(F_{p^r},χ,β)/√(p^r) = e^{iγ}; returns γ ∈ [0, 2π) after verifying the
/// residual ‖(χ²∘F_β)|χ⟩ − e^{iγ}|χ⟩‖ ≤ 1e−9.
pub fn eigenphase_gauss_field(chi: &MultChar, beta: FieldElement) -> Result<f64> {
    if chi.is_trivial() {
        return Err(Error::TrivialChar);
    }
    if beta.is_zero() {
        return Err(Error::ZeroBeta);
    }
    let ctx = chi.field();
    let chi_state = StateVector::char_state(chi)?;
    let transformed = qft_field(&chi_state, ctx, beta)?;
    let chi2 = chi.mul(chi)?;
    let phased = apply_char_square(&transformed, |x| chi2.value(ctx.element(x as u64).unwrap()));
    finish_eigenphase(&chi_state, &phased)
}

/// Ring analogue for a primitive Dirichlet character: DFT_n then χ²(y) on the
/// units; |χ⟩ is an eigenvector with eigenvalue G(Z/nZ,χ,1)/√n = e^{iγ}.
pub fn eigenphase_gauss_ring(chi: &DirichletChar) -> Result<f64> {
    if chi.is_trivial() {
        return Err(Error::TrivialChar);
    }
    if !chi.is_primitive() {
        return Err(Error::NotPrimitiveChar {
            conductor: chi.conductor(),
            modulus: chi.modulus(),
        });
    }
    let n = chi.modulus();
    let chi_state = StateVector::dirichlet_state(chi)?;
    let transformed = qft_ring(&chi_state, n)?;
    let chi2 = chi.mul(chi)?;
    let phased = apply_char_square(&transformed, |x| chi2.value(x as u64));
    finish_eigenphase(&chi_state, &phased)
}

/// Multiplies amplitudes by a character value where it is nonzero. Off the
/// character's support the incoming amplitude is already 0 (this is asserted),
/// so leaving it untouched is observationally irrelevant.
fn apply_char_square<F: Fn(usize) -> Complex64>(state: &StateVector, chi2_value: F) -> StateVector {
    let amps = state
        .amps
        .iter()
        .enumerate()
        .map(|(x, a)| {
            let v = chi2_value(x);
            if v == Complex64::new(0.0, 0.0) {
                debug_assert!(a.norm() < 1e-9, "amplitude off the unit support must vanish");
                *a
            } else {
                a * v
            }
        })
        .collect();
    StateVector { amps }
}

fn finish_eigenphase(reference: &StateVector, outcome: &StateVector) -> Result<f64> {
    let overlap = reference.inner(outcome)?;
    let gamma = wrap_angle(overlap.arg());
    let rotated = Complex64::from_polar(1.0, gamma);
    let residual = l2_norm(
        &outcome
            .amps
            .iter()
            .zip(&reference.amps)
            .map(|(o, r)| o - rotated * r)
            .collect::<Vec<_>>(),
    );
    if residual > 1e-9 {
        return Err(Error::NotEigenvector { residual });
    }
    Ok(gamma)
}

// --- phase estimation ------------------------------------------------------------------

/// One relative-phase measurement at analysis angle φ: returns the m_φ outcome
/// with probability ½ + ½cos(γ − φ).
pub fn sample_phase_measurement(gamma: f64, phi: f64, rng: &mut ChaCha12Rng) -> bool {
    let prob = 0.5 + 0.5 * (gamma - phi).cos();
    rng.gen::<f64>() < prob
}

/// How `estimate_phase` spends its sample budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EstimateStrategy {
    /// Half the budget at φ = 0, half at φ = π/2; γ̃ = atan2(sin, cos).
    TwoBasis,
    /// Staged two-basis runs, each stage recentered at the running estimate.
    Adaptive,
}

/// Result of a phase-estimation run; reproducible from (γ, seed, t, strategy).
#[derive(Clone, Debug)]
pub struct PhaseEstimate {
    /// Estimated phase in [0, 2π).
    pub gamma_hat: f64,
    pub samples_used: u64,
    /// (analysis angle φ, m_φ count, samples at φ).
    pub per_basis_counts: Vec<(f64, u64, u64)>,
    pub seed: u64,
    pub strategy: EstimateStrategy,
}

/// Estimates an unknown phase from repeated one-bit measurements supplied by
/// `sample(φ, rng)`. The budget t is split across analysis angles per the
/// strategy; all randomness flows from the seeded generator.
pub fn estimate_phase<F: FnMut(f64, &mut ChaCha12Rng) -> bool>(
    mut sample: F,
    t: u64,
    strategy: EstimateStrategy,
    seed: u64,
) -> Result<PhaseEstimate> {
    if t < 2 {
        return Err(Error::BudgetTooSmall);
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut counts: Vec<(f64, u64, u64)> = Vec::new();
    let mut used = 0u64;

    let mut run_pair = |center: f64,
                        budget: u64,
                        counts: &mut Vec<(f64, u64, u64)>,
                        used: &mut u64,
                        rng: &mut ChaCha12Rng|
     -> f64 {
        let half = (budget / 2).max(1);
        let mut tally = [0u64; 2];
        let phis = [center, center + FRAC_PI_2];
        for (i, &phi) in phis.iter().enumerate() {
            for _ in 0..half {
                if sample(phi, rng) {
                    tally[i] += 1;
                }
            }
            counts.push((phi, tally[i], half));
            *used += half;
        }
        // Empirical cos(γ−φ_i) from the outcome frequencies.
        let c = 2.0 * tally[0] as f64 / half as f64 - 1.0;
        let s = 2.0 * tally[1] as f64 / half as f64 - 1.0;
        wrap_angle(center + s.atan2(c))
    };

    let gamma_hat = match strategy {
        EstimateStrategy::TwoBasis => run_pair(0.0, t, &mut counts, &mut used, &mut rng),
        EstimateStrategy::Adaptive => {
            let stages = 4u64.min(t / 2).max(1);
            let per_stage = t / stages;
            let mut center = 0.0;
            for _ in 0..stages {
                center = run_pair(center, per_stage, &mut counts, &mut used, &mut rng);
            }
            center
        }
    };

    Ok(PhaseEstimate { gamma_hat, samples_used: used, per_basis_counts: counts, seed, strategy })
}

/// Convenience wrapper: estimate a known true phase through the one-bit
/// measurement channel (used by simulations where γ comes from a statevector).
pub fn estimate_phase_of(
    gamma: f64,
    t: u64,
    strategy: EstimateStrategy,
    seed: u64,
) -> Result<PhaseEstimate> {
    estimate_phase(|phi, rng| sample_phase_measurement(gamma, phi, rng), t, strategy, seed)
}
