use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("void complex not supported")]
    VoidComplex,
    #[error("ground set size {0} out of range (1..=64)")]
    GroundSetSize(usize),
    #[error("vertex {vertex} out of range for ground set [{n}]")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("not a permutation of [{0}]")]
    NotAPermutation(usize),
    #[error("no vertex cover of the empty facet")]
    EmptyFacetCover,
    #[error("oracle cap exceeded (n = {0} > 20)")]
    OracleCap(usize),
    #[error("census cap: n = {0} is outside 2..=5")]
    CensusCap(usize),
    #[error("iteration cap of {0} steps reached without returning to the start")]
    IterationCap(u64),
    #[error("invalid family parameters: {0}")]
    FamilyParams(String),
    #[error("swap blocks first: closed form requires n <= m (got n = {n}, m = {m})")]
    SwapBlocks { n: usize, m: usize },
    #[error("step index {k} out of range {lo}..={hi}")]
    StepOutOfRange { k: usize, lo: usize, hi: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
