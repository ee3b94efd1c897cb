use thiserror::Error;

/// Errors raised by the fusionkit library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is nilpotent, it has no Perron root")]
    NilpotentInput,
    #[error("basis index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("invalid fusion ring: {0}")]
    InvalidRing(String),
    #[error("ring is not commutative: {0}")]
    NotCommutative(String),
    #[error("simultaneous diagonalization failed: {0}")]
    DegenerateSpectrum(String),
    #[error("basis partition is not a grading: {0}")]
    NotAGrading(String),
    #[error("based module is decomposable")]
    Decomposable,
    #[error("fusion coefficient N[{i}][{j}][{k}] = {value} is not a nonnegative integer")]
    NonIntegralFusion {
        i: usize,
        j: usize,
        k: usize,
        value: String,
    },
    #[error("Gauss sum vanishes")]
    DegenerateGauss,
    #[error("no column permutation realizes the Galois automorphism sigma_{m}")]
    NoConsistentPermutation { m: u64 },
    #[error("index set is not a closed sub-basis: {0}")]
    NotClosed(String),
    #[error("table is not a group: {0}")]
    NotAGroup(String),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("character table fails orthogonality: {0}")]
    OrthogonalityFailure(String),
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("malformed input: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
