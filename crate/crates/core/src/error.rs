use thiserror::Error;

/// Structural defects reported by quiver validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverIssue {
    #[error("quiver contains an oriented cycle")]
    Cyclic,
    #[error("arrow {name:?} touches vertex {vertex}, outside 1..={vertices}")]
    DanglingEndpoint {
        name: String,
        vertex: usize,
        vertices: usize,
    },
    #[error("duplicate arrow name {name:?}")]
    DuplicateArrowName { name: String },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid quiver: {}", format_issues(.0))]
    Quiver(Vec<QuiverIssue>),
    #[error("modulus {0} is not a prime in [2, 2^31)")]
    BadModulus(u64),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("underlying module map is not surjective (not an epimorphism representative)")]
    NotEpi,
    #[error("class is not a stable monomorphism")]
    NotMono,
    #[error("injective envelope of the regular module is not projective; certificate unavailable")]
    NotAbelianCase,
    #[error("requested witness does not exist: {0}")]
    NoneExists(String),
    #[error("class is already a stable epimorphism; no failing lift exists")]
    IsActuallyEpi,
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("fast path and oracle disagree: {0}")]
    OracleMismatch(String),
    #[error("canonical torsion splitting violated: {0}")]
    SplitAssertionFailed(String),
    #[error("internal assertion failed: {0}")]
    Internal(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code contract: 2 = invalid input or unusable precondition,
    /// 3 = internal assertion (oracle mismatch, splitting violation).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::OracleMismatch(_) | Error::SplitAssertionFailed(_) | Error::Internal(_) => 3,
            _ => 2,
        }
    }
}

fn format_issues(issues: &[QuiverIssue]) -> String {
    issues
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
