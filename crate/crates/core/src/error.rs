//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("order {order} exceeds the supported bound {bound}")]
    OrderTooLarge { order: u128, bound: u64 },
    #[error("element index {idx} out of range for order {order}")]
    IndexOutOfRange { idx: u64, order: u64 },
    #[error("coefficient vector has wrong length or out-of-range entries")]
    BadCoefficients,
    #[error("{0} is not a primitive element")]
    NotPrimitive(u64),
    #[error("zero is not invertible")]
    ZeroInverse,
    #[error("discrete log of zero is undefined")]
    ZeroLog,
    #[error("operands belong to different field contexts")]
    ContextMismatch,
    #[error("operation requires a nontrivial character")]
    TrivialChar,
    #[error("operation requires a primitive character (conductor {conductor} < modulus {modulus})")]
    NotPrimitiveChar { conductor: u64, modulus: u64 },
    #[error("modulus {0} is out of range")]
    BadModulus(u64),
    #[error("character indices do not match the factorization of {n}: {detail}")]
    BadCharIndices { n: u64, detail: String },
    #[error("beta must be nonzero")]
    ZeroBeta,
    #[error("statevector dimension {dim} exceeds the bound {bound}")]
    DimTooLarge { dim: usize, bound: usize },
    #[error("statevector dimension mismatch: {got} vs {want}")]
    DimMismatch { got: usize, want: usize },
    #[error("cannot normalize the zero vector")]
    ZeroVector,
    #[error("indicated weight {stated} does not match the prepared state (fidelity {fidelity})")]
    WeightMismatch { stated: u64, fidelity: f64 },
    #[error("state is not an eigenvector: residual {residual}")]
    NotEigenvector { residual: f64 },
    #[error("sample budget must be at least 2")]
    BudgetTooSmall,
    #[error("oracle noise level {epsilon} exceeds the tolerated bound {bound}")]
    EpsilonTooLarge { epsilon: f64, bound: f64 },
    #[error("oracle too noisy: reconstruction interval failed to narrow at step k=2^{step}")]
    OracleTooNoisy { step: u32 },
    #[error("recovered exponent fails verification")]
    ReconstructionFailed,
    #[error("shift {s} is invalid for period {period}")]
    BadShift { s: u64, period: u64 },
    #[error("walks require a prime field (degree 1)")]
    WalkNeedsPrimeField,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
