use std::path::PathBuf;

use thiserror::Error;

use crate::lattice::{Cell, LatticeKind};

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why an identity refused its input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Precondition {
    Holes(usize),
    Bridge(Cell),
    PerimeterBridge(Cell),
    Pattern(char),
    Singleton,
}

impl std::fmt::Display for Precondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Precondition::Holes(h) => write!(f, "animal has {h} hole(s)"),
            Precondition::Bridge(c) => write!(f, "bridge cell at {c}"),
            Precondition::PerimeterBridge(c) => write!(f, "perimeter bridge at {c}"),
            Precondition::Pattern(p) => write!(f, "contains pattern ({p})"),
            Precondition::Singleton => f.write_str("single-cell animal"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex adjacency is only defined on the triangular lattice, not {0}")]
    VertexModeUnsupported(LatticeKind),
    #[error("unknown lattice `{0}`")]
    UnknownLattice(String),
    #[error("unknown adjacency mode `{0}`")]
    UnknownAdjacency(String),
    #[error("empty cell set")]
    Empty,
    #[error("cell set is disconnected")]
    Disconnected,
    #[error("duplicate cell {0}")]
    DuplicateCell(Cell),
    #[error("cell {0} is neither a border nor a perimeter cell")]
    NotBoundaryCell(Cell),
    #[error("{0}")]
    Unsupported(String),
    #[error("size {n} on {lattice} needs about {estimate:.3e} animals, over the budget of {limit:.0e}")]
    BudgetExceeded {
        lattice: String,
        n: usize,
        estimate: f64,
        limit: f64,
    },
    #[error("perimeter {0} is not a minimum perimeter of any size")]
    NotAttained(usize),
    #[error("size {0} is an inflation-chain root; enumerate it directly")]
    ChainRoot(usize),
    #[error("identity precondition violated: {0}")]
    Precondition(Precondition),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("invalid cache file {path}: {msg}")]
    BadCache { path: PathBuf, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn syntax(line: usize, msg: impl Into<String>) -> Self {
        Error::Syntax {
            line,
            msg: msg.into(),
        }
    }

    /// Short stable tag, used as the stderr prefix of the command-line tool.
    pub fn code(&self) -> &'static str {
        match self {
            Error::VertexModeUnsupported(_) => "vertex-mode",
            Error::UnknownLattice(_) | Error::UnknownAdjacency(_) => "unknown-lattice",
            Error::Empty => "empty",
            Error::Disconnected => "disconnected",
            Error::DuplicateCell(_) => "duplicate-cell",
            Error::NotBoundaryCell(_) => "not-boundary",
            Error::Unsupported(_) => "unsupported",
            Error::BudgetExceeded { .. } => "budget",
            Error::NotAttained(_) => "not-attained",
            Error::ChainRoot(_) => "chain-root",
            Error::Precondition(_) => "precondition",
            Error::Syntax { .. } => "syntax",
            Error::BadCache { .. } => "bad-cache",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
            Error::Csv(_) => "csv",
        }
    }
}
