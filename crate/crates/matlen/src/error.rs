use thiserror::Error;

/// Errors from scalar and field construction or arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime modulus {0} exceeds the 2^31 bound")]
    ModulusTooLarge(u64),
    #[error("operands belong to different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {text:?} as a scalar over {field}: {reason}")]
    ParseScalar {
        text: String,
        field: String,
        reason: String,
    },
    #[error("cannot parse {0:?} as a field (expected \"Q\" or \"GF(p)\")")]
    ParseField(String),
}

/// Errors from matrix construction and the polynomial machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}x{0} vs {1}x{1}")]
    DimensionMismatch(usize, usize),
    #[error("matrices belong to different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("entry count {got} does not match {n}x{n}")]
    BadEntryCount { n: usize, got: usize },
    #[error("entry at ({row}, {col}) belongs to field {found}, expected {expected}")]
    ForeignEntry {
        row: usize,
        col: usize,
        expected: String,
        found: String,
    },
    #[error("index ({i}, {j}) out of range for dimension {n}")]
    IndexOutOfRange { n: usize, i: usize, j: usize },
    #[error("i = {i} and n - i = {} must be co-prime", n - i)]
    NotCoprime { n: usize, i: usize },
    #[error("matrix dimension must be at least {min}, got {got}")]
    DimensionTooSmall { min: usize, got: usize },
    #[error("matrix is singular")]
    Singular,
}

/// Errors from the span engine and its oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpanError {
    #[error("vector length {got} does not match ambient dimension {ambient}")]
    AmbientMismatch { ambient: usize, got: usize },
    #[error("generator {index} is {got}x{got} over {got_field}, expected {n}x{n} over {field}")]
    MixedGenerators {
        index: usize,
        n: usize,
        field: String,
        got: usize,
        got_field: String,
    },
    #[error("a nonempty generating set is required when the identity is assumed")]
    EmptyGenerators,
    #[error("word enumeration needs {required} evaluations, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("the set does not generate the full algebra (spans dimension {final_dim} of {ambient})")]
    DoesNotGenerate { final_dim: usize, ambient: usize },
}
