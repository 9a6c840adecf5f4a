use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// A mathematical invariant that must hold was violated. These indicate a
    /// bug (or a wrong built-in table), never bad user input.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("d-table mismatch for {u}: computed {computed}, expected {expected}")]
    TableMismatch {
        u: String,
        computed: String,
        expected: String,
    },

    #[error("{0} is not in the lowest two-sided cell")]
    NotInLowestCell(String),

    #[error("h coefficient has v-degree {degree} above a(z) = {a}")]
    DegreeViolation { degree: i64, a: i64 },

    #[error("cache file is corrupt: {0}")]
    CorruptCache(String),

    #[error("cache version mismatch: {0}")]
    VersionMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn is_invariant(&self) -> bool {
        matches!(
            self,
            Error::Invariant(_)
                | Error::TableMismatch { .. }
                | Error::DegreeViolation { .. }
        )
    }
}
