use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("element does not lie in the group")]
    NotInGroup,
    #[error("subgroup is not contained in the group")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("enumeration cap exceeded: group order {order} exceeds cap {cap}")]
    CapExceeded { order: u64, cap: u64 },
    #[error("operation undefined on the trivial group")]
    TrivialGroup,
    #[error("not a prime: {0}")]
    NotPrime(u64),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("no generating pair satisfies the relators")]
    NoPresentationPair,

    #[error("word references generator {index} but only {ngens} are available")]
    Arity { index: usize, ngens: usize },
    #[error("coset table exceeded {max} cosets")]
    CosetOverflow { max: usize },
    #[error("coset table is incomplete")]
    IncompleteTable,
    #[error("coset table failed its relator audit: {0}")]
    TableAudit(String),

    #[error("module action does not satisfy relator {0}")]
    BadModuleAction(usize),
    #[error("relation check failed: {0}")]
    RelationFailed(String),
    #[error("automorphism is inner")]
    InnerAutomorphism,
    #[error("automorphism does not have order 2")]
    NotAnInvolution,
    #[error("map is not bijective")]
    NotBijective,
    #[error("runtime budget exceeded")]
    Deadline,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("subgroup is not a pi-group")]
    NotPiGroup,
    #[error("witness check failed: {0}")]
    WitnessFailed(String),
    #[error("hypothesis check failed: {0}")]
    Hypothesis(String),
    #[error("unknown scenario: {0}")]
    UnknownScenario(String),
}
