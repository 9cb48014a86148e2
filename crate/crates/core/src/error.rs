use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("the zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("{value} is not a root of {poly}")]
    NotARoot { poly: String, value: String },
    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("elements belong to different rings")]
    RingMismatch,
    #[error("ring has no integer dimension function")]
    NoDimensionFunction,
    #[error("support grew past the cap of {cap} irreducibles (reached {reached})")]
    CapExceeded { cap: usize, reached: usize },
    #[error("element {0} is not a single irreducible basis element")]
    NotIrreducible(String),
    #[error("the trivial representation admits no torsion witness")]
    TrivialRepresentation,
    #[error("operation requires a finite fusion ring, got a lazily presented one")]
    LazyRingRejected,
    #[error("invalid fusion ring: {0}")]
    InvalidRing(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("dimension {dim} of {label} is not a root of its minimal polynomial {poly}")]
    InconsistentDimension {
        label: String,
        dim: String,
        poly: String,
    },

    #[error("elements belong to different groups")]
    GroupMismatch,
    #[error("invalid group element: {0}")]
    InvalidElement(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("operation requires a finite group")]
    InfiniteGroup,
    #[error("the identity element has no Kaplansky witness")]
    IdentityElement,
    #[error("no torsion found: order exceeds cap {0}")]
    TorsionFreeAtCap(u64),
    #[error("generating set is not closed under inverses: {0} has no inverse in it")]
    NotInverseClosed(String),
    #[error("need at least {needed} ball sizes, got {got}")]
    InsufficientData { needed: usize, got: usize },

    #[error("a single matrix block is not a nontrivial direct sum")]
    SingleBlock,
    #[error("witness failed verification: {0}")]
    WitnessRejected(String),

    #[error("malformed character table: {0}")]
    MalformedTable(String),
    #[error("character table is not orthonormal")]
    NotOrthonormal,
    #[error("multiplicity of {k} in {i} x {j} is {value}, not an integer")]
    NonIntegralMultiplicity {
        i: String,
        j: String,
        k: String,
        value: String,
    },
    #[error("multiplicity of {k} in {i} x {j} is negative ({value})")]
    NegativeMultiplicity {
        i: String,
        j: String,
        k: String,
        value: String,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
