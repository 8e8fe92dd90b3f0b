use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// Variants are grouped loosely by the module that raises them; the CLI maps
/// `is_validation()` errors to exit code 2 and everything else to 1.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid generator name `{0}`")]
    InvalidGeneratorName(String),
    #[error("relator {index} not in kernel of abelianization (image {image:?})")]
    RelatorNotInKernel { index: usize, image: Vec<i64> },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("p,q not coprime (p = {p}, q = {q})")]
    NotCoprime { p: i64, q: i64 },
    #[error("invalid torus parameters: {0}")]
    InvalidParams(String),

    #[error("generator index {index} out of range (alphabet has {len} generators)")]
    GeneratorOutOfRange { index: usize, len: usize },

    #[error("incompatible scalar fields: {0}")]
    FieldMismatch(String),
    #[error("irrational discriminant over exact field")]
    IrrationalDiscriminant,
    #[error("division by zero")]
    DivisionByZero,
    #[error("root of unity of order {requested} not available in field of order {order}")]
    RootNotInField { requested: u64, order: u64 },

    #[error("variable-count mismatch ({0} vs {1})")]
    VariableMismatch(usize, usize),
    #[error("inexact division")]
    InexactDivision,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("multivariate reduction unsupported")]
    MultivariateReduction,

    #[error("degenerate u=0 (Case 1.2 point)")]
    DegenerateCase12,
    #[error("t_xy{index} matches neither root assignment (off-variety input)")]
    OffVariety { index: usize },
    #[error("exact backend cannot represent θ roots (use numeric backend)")]
    ExactRootsUnavailable,
    #[error("reducible point ({0})")]
    Reducible(String),
    #[error("invalid character point: {0}")]
    InvalidCharacter(String),
    #[error("relator r_{index} violated")]
    RelatorViolated { index: usize },
    #[error("image of generator {0} does not have determinant 1")]
    NotSpecialLinear(String),
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("representation error: {0}")]
    Representation(String),

    #[error("denominator identically zero for column {0} — choose another column")]
    ZeroDenominator(usize),

    #[error("parity precondition violated: {0}")]
    Parity(String),
    #[error("torsion undefined: denominator vanishes at t=1")]
    TorsionUndefined,
    #[error("boundary label not irreducible Case 1.1")]
    BoundaryLabel,

    #[error("json: {0}")]
    Json(String),
    #[error("io: {0}")]
    Io(String),
    #[error("internal: {0}")]
    Internal(String),
}

impl Error {
    /// True when the error stems from user input rather than a bug or an
    /// environment problem.
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::Internal(_) | Error::Io(_))
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
