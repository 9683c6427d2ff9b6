use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(String),

    #[error("cannot factor modulus {0}: cofactor has no small prime factor and exceeds 64 bits")]
    FactorizationTooHard(String),

    #[error("too large to compute: {0}")]
    TooLarge(String),

    #[error("non-prime base {0}")]
    NonPrimeBase(u64),

    #[error("ring mismatch: ({lhs_modulus}, {lhs_nvars} vars) vs ({rhs_modulus}, {rhs_nvars} vars)")]
    RingMismatch {
        lhs_modulus: String,
        lhs_nvars: usize,
        rhs_modulus: String,
        rhs_nvars: usize,
    },

    #[error("exponent vector has length {got}, ring has {expected} variables")]
    ExponentLength { expected: usize, got: usize },

    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("point has {got} coordinates, ring has {expected} variables")]
    PointLength { expected: usize, got: usize },

    #[error("variable index {index} out of range for {nvars} variables")]
    VariableIndex { index: usize, nvars: usize },

    #[error("exhaustion budget: {needed} evaluations needed, budget is {budget}")]
    ExhaustionBudget { needed: String, budget: u64 },

    #[error("witness #{0} is not a vanishing polynomial")]
    NonVanishingWitness(usize),

    #[error("invalid basis entry alpha={alpha:?}, a={a}: {reason}")]
    InvalidBasisEntry {
        alpha: Vec<u32>,
        a: String,
        reason: &'static str,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
