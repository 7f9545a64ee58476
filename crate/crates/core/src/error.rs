use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group parameters r={r}, n={n}: {reason}")]
    InvalidContext { r: u64, n: u64, reason: String },

    #[error("elements belong to different groups: G({0},{1}) vs G({2},{3})")]
    ContextMismatch(u32, usize, u32, usize),

    #[error("cannot parse element {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("generator {label} is out of range for n={n}")]
    GeneratorOutOfRange { label: String, n: usize },

    #[error("{what} would hold {count} items, above the cap of {cap}")]
    CapExceeded { what: &'static str, count: u128, cap: u128 },

    #[error("{lower} is not below {upper} in the flag weak order")]
    NotComparable { lower: String, upper: String },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
