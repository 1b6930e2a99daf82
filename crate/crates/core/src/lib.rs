//! Exact Gauss and Jacobi character sums, and desk-scale quantum simulations of
//! the phase-estimation algorithms that estimate them.
//!
//! The classical side computes G(F_{p^r}, χ, β) = Σ_x χ(x)·ζ_p^{Tr(βx)} over finite
//! fields and G(Z/nZ, χ, β) = Σ_x χ(x)·ζ_n^{βx} over residue rings, by direct
//! summation and by the closed forms / CRT-reduction pipeline, with the direct sum
//! always available as the oracle the fast routes are checked against.
//!
//! The quantum side simulates, on dense statevectors, the circuits that estimate
//! the angle γ of a Gauss sum: character-state preparation by exact amplitude
//! amplification and phase kickback, the finite-field and ring Fourier transforms,
//! the eigenvector identity (χ² ∘ F_β)|χ⟩ = e^{iγ}|χ⟩, single-sample phase
//! measurements, and the discrete-log reduction driven by a Gauss-sum phase oracle.
//!
//! Character values are exact rational angles (integer numerator/denominator)
//! internally; conversion to floating point happens at evaluation boundaries only.

pub mod angle;
pub mod chars;
pub mod cli;
pub mod error;
pub mod field;
pub mod gauss;
pub mod qsim;
pub mod reductions;
pub mod selftest;

pub use angle::TurnAngle;
pub use chars::{AddCharField, AddCharRing, DirichletChar, MultChar};
pub use error::{Error, Result};
pub use field::{FieldCtx, FieldElement};
pub use gauss::{Estimator, GaussSumResult, Method};
pub use qsim::{PhaseEstimate, StateVector};
pub use reductions::{GaussOracle, WalkOrdering, WalkTrace};
