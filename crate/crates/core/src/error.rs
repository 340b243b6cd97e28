use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("surface S_{{{g},{n}}} needs n >= 1 and negative Euler characteristic")]
    InvalidSurface { g: u32, n: u32 },

    #[error("polygon needs at least {min} vertices, got {m}")]
    TooFewVertices { m: usize, min: usize },

    #[error("not a dissection of the {m}-gon: {reason}")]
    InvalidDissection { m: usize, reason: String },

    #[error("1 - t^{a} does not divide the numerator exactly")]
    InexactDivision { a: usize },

    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("{modulus} is not an odd prime below 2^32")]
    BadModulus { modulus: u64 },

    #[error("need at least {needed} samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },

    #[error(
        "evaluation matrix has rank {rank} < {needed}; retry with another seed or more samples"
    )]
    RankDeficient { rank: usize, needed: usize },

    #[error("basis expansion of {word} fails on {failures} validation tuple(s)")]
    ValidationResidual { word: String, failures: usize },

    #[error("cannot parse word {0:?}")]
    ParseWord(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
