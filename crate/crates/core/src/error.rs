use std::fmt;

use thiserror::Error;

/// Errors produced anywhere in the library.
///
/// Variants fall into three classes (see [`ErrorClass`]) which the command
/// line front end maps onto distinct exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not symmetric (relative asymmetry {asymmetry:.3e})")]
    NonSymmetric { asymmetry: f64 },

    #[error("{algorithm} did not converge after {iterations} iterations")]
    NoConvergence {
        algorithm: &'static str,
        iterations: usize,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: vertex {vertex} outside 1..={vertex_count}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        vertex_count: usize,
    },

    #[error("line {line}: duplicate edge {{{i}, {j}}}")]
    DuplicateEdge { line: usize, i: usize, j: usize },

    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("graph has no edges; its Laplacian has rank 0")]
    RankZero,

    #[error("vectors do not span: smallest frame-operator eigenvalue {lower:.3e} vs largest {upper:.3e}")]
    NotAFrame { lower: f64, upper: f64 },

    #[error("not a dual frame: Frobenius residual |Θ_G*Θ_F - I| = {residual:.6e}")]
    NotADual { residual: f64 },

    #[error("frames are not unitarily equivalent: {0}")]
    NotEquivalent(String),

    #[error("{count} erasure patterns exceed the enumeration cap of {cap}")]
    CombinatorialLimit { count: u128, cap: u128 },

    #[error("dual family needs a one-dimensional Gramian null space, found dimension {nullity}")]
    NotCorank1 { nullity: usize },

    #[error("frame is not (N-1)-independent: vectors {} are linearly dependent", OneBased(.subset))]
    NotIndependent { subset: Vec<usize> },

    #[error("invalid search grid: {0}")]
    InvalidGrid(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse error classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed or unreadable input.
    Parse,
    /// Numerical or mathematical precondition failures.
    Math,
    /// A claimed property (duality, equivalence) failed verification.
    Verification,
}

impl ErrorClass {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorClass::Parse => 2,
            ErrorClass::Math => 3,
            ErrorClass::Verification => 4,
        }
    }
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Parse { .. }
            | Error::VertexOutOfRange { .. }
            | Error::DuplicateEdge { .. }
            | Error::SelfLoop { .. }
            | Error::NonFinite { .. }
            | Error::Io { .. } => ErrorClass::Parse,
            Error::NotADual { .. } | Error::NotEquivalent(_) => ErrorClass::Verification,
            _ => ErrorClass::Math,
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.class().exit_code()
    }
}

struct OneBased<'a>(&'a [usize]);

impl fmt::Display for OneBased<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}
