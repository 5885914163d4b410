use thiserror::Error;

pub type Result<T, E = GroupError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("degree mismatch: expected {expected} points, got {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("not a bijection on {degree} points: {detail}")]
    NotABijection { degree: usize, detail: String },

    #[error("degree must be at least 1")]
    ZeroDegree,

    #[error("group order exceeds the guard of {limit} elements")]
    OrderGuardExceeded { limit: usize },

    #[error("quotient of order {order} is too large to realize as a regular permutation group (limit {limit})")]
    QuotientTooLarge { order: usize, limit: usize },

    #[error("element id {id} is out of range for a group of order {order}")]
    InvalidElement { id: usize, order: usize },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("subset is not closed under conjugation (element {escaped} escapes)")]
    NotNormalSubset { escaped: usize },

    #[error("empty subset")]
    EmptySet,

    #[error("the trivial group has no minimal normal subgroups")]
    TrivialGroup,

    #[error("group {0} is not supersolvable")]
    NotSupersolvable(String),

    #[error("group {0} is not of prime-power order")]
    NotPGroup(String),

    #[error("no m with [N, a] inside Z_m(N)")]
    NoSuchM,

    #[error("{0} is not a prime in the supported range 2..=31")]
    NotPrime(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown group atom `{0}`")]
    UnknownAtom(String),

    #[error("generator file: {0}")]
    Ingest(String),
}
