use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("arc {label} appears {count} time(s); every arc must appear exactly twice")]
    ArcMultiplicity { label: u32, count: usize },

    #[error("diagram has no crossings")]
    Empty,

    #[error("diagram is disconnected ({components} pieces)")]
    Disconnected { components: usize },

    #[error("gluing is not planar: {0}")]
    NonPlanar(String),

    #[error("strand orientation is inconsistent at crossing {crossing}")]
    InconsistentOrientation { crossing: usize },

    #[error("{what} has {got} crossings/edges, above the limit of {limit}")]
    TooLarge { what: &'static str, got: usize, limit: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("sigma2 does not equal sigma1 o sigma0^-1; first differing orbit {orbit}")]
    Sigma2Mismatch { orbit: String },

    #[error("edge subset {edges} is not a quasi-tree ({faces} faces)")]
    NotQuasiTree { edges: String, faces: usize },

    #[error("edge subset {0} is not a spanning tree")]
    NotSpanningTree(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("operation requires a knot diagram, got {components} components")]
    NotAKnot { components: usize },

    #[error("missing input data: {0}")]
    Missing(String),

    #[error("corpus line {line}: {message}")]
    Corpus { line: usize, message: String },

    #[error("no calibration candidate reproduces the anchor polynomials")]
    Calibration,
}

pub type Result<T> = std::result::Result<T, Error>;
