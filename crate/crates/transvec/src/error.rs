use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not symplectic")]
    NotSymplectic,

    #[error("transvection vector must be nonzero")]
    ZeroVector,

    #[error("row {0} of the vector list is zero")]
    ZeroRow(usize),

    #[error("vector length must be even, got {0}")]
    OddLength(usize),

    #[error("map is the identity: residue space is empty")]
    IdentityInput,

    #[error("map is already non-hyperbolic")]
    NotHyperbolic,

    #[error("form is alternating: no vector with x E x^T = 1 exists")]
    AlternatingForm,

    #[error("no congruence triangularization found within {attempts} attempts")]
    TriangularizationBudget { attempts: usize },

    #[error("brute-force search is limited to m <= {max}, got m = {m}")]
    BruteForceCap { m: usize, max: usize },

    #[error("dense realization is capped at m <= {cap}, got m = {m}")]
    DenseCap { m: usize, cap: usize },

    #[error("support expansion is capped at {cap} transvections, got {count}")]
    ExpansionCap { count: usize, cap: usize },

    #[error("matrix is not a scaled Pauli: {0}")]
    NotPauli(String),

    #[error("matrix is not Clifford: {0}")]
    NotClifford(String),

    #[error("qubit count mismatch: {0} vs {1}")]
    QubitMismatch(usize, usize),

    #[error("line {line}, column {col}: {msg}")]
    CircuitParse { line: usize, col: usize, msg: String },

    #[error("bad matrix text: {0}")]
    MatrixFormat(String),

    #[error("bad pauli text: {0}")]
    PauliFormat(String),

    #[error("bad decomposition json: {0}")]
    DecompositionFormat(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
