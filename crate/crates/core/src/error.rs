use thiserror::Error;

/// Failures of geometric primitives, fold solvers, constructions, and
/// script execution.
///
/// Script parse failures have their own type, [`crate::script::ParseError`],
/// because they carry source positions rather than geometry.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("points coincide")]
    CoincidentPoints,
    #[error("lines are parallel")]
    ParallelLines,
    #[error("lines are identical")]
    IdenticalLines,
    #[error("line normal is zero or not finite")]
    DegenerateLine,
    #[error("coordinate is not finite")]
    NonFinite,
    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),
    #[error("focus lies on its directrix")]
    DegenerateFocus,
    #[error("no real fold satisfies the constraints")]
    NoSolution,
    #[error("infinitely many creases satisfy the constraints")]
    AmbiguousFold,
    #[error("all polynomial coefficients vanish")]
    ZeroPolynomial,
    #[error("triangle vertices are coincident or collinear")]
    InvalidTriangle,
    #[error("circumcenter and orthocenter coincide (equilateral triangle)")]
    EquilateralDegenerate,
    #[error("vertex does not lie on both sides of the angle")]
    VertexOffSides,
    #[error("no fold branch lands inside the required region")]
    NoInteriorBranch,

    #[error("name `{0}` is already defined")]
    DuplicateName(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("`{name}` is a {found}, expected a {expected}")]
    KindMismatch {
        name: String,
        expected: &'static str,
        found: &'static str,
    },
    #[error("{axiom} takes {expected} arguments, found {found}")]
    Arity {
        axiom: String,
        expected: usize,
        found: usize,
    },
    #[error("fold has {count} creases; add `pick` to choose one")]
    AmbiguousPick { count: usize },
    #[error("fold has no creases")]
    EmptyFold,
    #[error("pick {index} is out of range; valid range is {}", valid_range(*.len))]
    IndexOutOfRange { index: usize, len: usize },
    #[error("assertion failed: residual {residual:e} exceeds tolerance {tol:e}")]
    AssertFailed { residual: f64, tol: f64 },
    #[error("assertion is undefined: {0}")]
    DegenerateAssert(String),

    #[error("step {index} `{statement}`: {source}")]
    Step {
        index: usize,
        statement: String,
        source: Box<Error>,
    },
}

fn valid_range(len: usize) -> String {
    if len == 0 {
        "empty".to_string()
    } else {
        format!("0..{}", len - 1)
    }
}

impl Error {
    /// Strips any [`Error::Step`] wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::Step { source, .. } => source.root(),
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
