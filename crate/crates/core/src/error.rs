use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("order {order} is outside the supported range {min}..={max}")]
    OutOfRange { order: usize, min: usize, max: usize },

    #[error("algebra {0:?} is not anticommutative")]
    NotAnticommutative(String),

    #[error("algebra {0:?} is not nilpotent")]
    NotNilpotent(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("radical-criterion-inapplicable: {0}")]
    RadicalCriterionInapplicable(String),

    #[error("irrational spectrum: rational eigenvalues cover {found} of {degree}")]
    IrrationalSpectrum { found: usize, degree: usize },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("retry budget exhausted for class {class} (seed {seed})")]
    RetriesExhausted { class: String, seed: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
