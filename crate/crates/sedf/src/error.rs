use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group modulus {0} is smaller than 2")]
    InvalidModulus(usize),
    #[error("group needs at least one cyclic factor")]
    EmptyGroup,
    #[error("group order exceeds the supported range")]
    GroupTooLarge,
    #[error("element {element} out of range for group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("duplicate element {0} in set")]
    DuplicateElement(usize),
    #[error("operands belong to different groups")]
    GroupMismatch,
    #[error("family needs at least two sets")]
    TooFewSets,
    #[error("family sets must all have the same size")]
    UnequalSetSizes,
    #[error("family sets must be non-empty")]
    EmptySet,
    #[error("set index {index} out of range for family of {count} sets")]
    SetIndexOutOfRange { index: usize, count: usize },
    #[error("sequence length {0} is smaller than 2")]
    SequenceTooShort(usize),
    #[error("invalid sequence symbol {0:?}, expected '0' or '1'")]
    InvalidSymbol(char),
    #[error("sequence lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("sequence weights differ: {0} vs {1}")]
    WeightMismatch(usize, usize),
    #[error("operation requires a cyclic group")]
    NonCyclicGroup,
    #[error("construction requires {requirement} (got v={v}, k={k})")]
    DivisibilityViolated {
        v: usize,
        k: usize,
        requirement: &'static str,
    },
    #[error("period has weight {got}, construction requires weight {want}")]
    PeriodWeight { got: usize, want: usize },
    #[error("period has length {got}, construction requires length {want}")]
    PeriodLength { got: usize, want: usize },
    #[error("power-of-two construction needs 2 <= N <= {max}, got {got}")]
    InvalidSetCountExponent { got: u32, max: u32 },
    #[error("family does not have the two-set block/periodic shape")]
    NotTwoSetShape,
    #[error("conversion by set-translation impossible: lambda = {0} exceeds 1")]
    LambdaObstruction(usize),
    #[error("computed spectrum contradicts the claimed extension spectrum")]
    ClaimMismatch,
    #[error("need at least {need} sequences, got {got}")]
    TooFewSequences { need: usize, got: usize },
    #[error("unknown family kind {0:?}")]
    UnknownKind(String),
}

pub type Result<T> = std::result::Result<T, Error>;
