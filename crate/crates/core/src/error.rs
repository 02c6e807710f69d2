use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("the zero polynomial has no leading monomial")]
    ZeroPolynomial,

    #[error("alphabet size q = {0} is too small (need q >= 2)")]
    AlphabetTooSmall(u32),

    #[error("coordinate {value} is out of range for q = {q}")]
    CoordinateOutOfRange { value: u32, q: u32 },

    #[error("variable index {index} out of range 1..={n}")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("point set is empty; its vanishing ideal is the whole ring")]
    EmptyPointSet,

    #[error("set family is empty")]
    EmptyFamily,

    #[error("witness {witness:?} agrees with point {point:?} on the chosen coordinates")]
    InvalidWitness { witness: Vec<u32>, point: Vec<u32> },

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("bound `{bound}` requires {condition}")]
    HypothesisViolated { bound: String, condition: String },

    #[error("{0} is not a member of any H(t)")]
    NotInHFamily(String),

    #[error("interpolation values must be given on exactly the point set")]
    ValuesMismatch,

    #[error("{message} at line {line}")]
    Parse { line: usize, message: String },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("infeasible request: {0}")]
    Infeasible(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}
