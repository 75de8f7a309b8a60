use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({0}, {0}) is a loop")]
    LoopEdge(usize),

    #[error("vertex {vertex} is out of range for a digraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("{what} needs {base}^{exponent} entries, over the guard of {guard}")]
    SizeGuard {
        what: &'static str,
        base: u64,
        exponent: u32,
        guard: u64,
    },

    #[error("configuration {code} is not a word of length {n} over an alphabet of size {s}")]
    AlphabetMismatch { code: u64, n: usize, s: u64 },

    #[error("configurations {0} and {1} are adjacent in the guessing graph")]
    NotIndependent(u64, u64),

    #[error("{0} is not a prime")]
    NonPrimeField(u64),

    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,

    #[error("generator polynomial must have constant term 1")]
    BadGenerator,

    #[error("vertex set does not induce an acyclic subgraph")]
    NotAcyclic,

    #[error("source {0} has an edge straight into its own sink")]
    SelfDemandLoop(String),

    #[error("invalid network instance: {0}")]
    InvalidInstance(String),

    #[error("{0} ran out of search budget")]
    BudgetExhausted(&'static str),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub fn is_size_guard(&self) -> bool {
        matches!(self, Error::SizeGuard { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// `base^exponent`, or `None` on overflow.
pub(crate) fn checked_pow(base: u64, exponent: u32) -> Option<u64> {
    base.checked_pow(exponent)
}

/// Fails with [`Error::SizeGuard`] unless `base^exponent <= guard`.
pub(crate) fn guard_pow(what: &'static str, base: u64, exponent: u32, guard: u64) -> Result<u64> {
    match checked_pow(base, exponent) {
        Some(v) if v <= guard => Ok(v),
        _ => Err(Error::SizeGuard {
            what,
            base,
            exponent,
            guard,
        }),
    }
}
