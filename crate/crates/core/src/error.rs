use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("no {degree}-regular graph of order {order} exists: {reason}")]
    Infeasible {
        order: usize,
        degree: usize,
        reason: &'static str,
    },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("expected diameter 3, found {found}")]
    DiameterMismatch { found: String },

    #[error("no valid switch found after {attempts} attempts")]
    Saturated { attempts: usize },

    #[error("order {order} exceeds the cap of {cap} nodes for {what}")]
    TooLarge {
        order: usize,
        cap: usize,
        what: &'static str,
    },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("invariant violated: {0}")]
    Invariant(String),
}
