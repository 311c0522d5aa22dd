use thiserror::Error;

/// Errors produced by the partition calculus, the character calculus and the
/// exceptional-table verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("partitions of {left} and {right} are incomparable (different totals)")]
    IncomparableSizes { left: u32, right: u32 },

    #[error("symplectic partitions need an even total, got {0}")]
    OddSymplecticTotal(u32),

    #[error("total {total} exceeds the supported envelope of {max}")]
    TotalTooLarge { total: u32, max: u32 },

    #[error("partition [{partition}] is not a valid {flavor} partition")]
    NotClassical { flavor: String, partition: String },

    #[error("irreducible sl2-module of dimension 0 does not exist")]
    ZeroDimensionalIrrep,

    #[error("not a genuine module: negative multiplicity while peeling weight {weight}")]
    NotGenuineModule { weight: i32 },

    #[error("power {0} is not supported (only 2 and 3)")]
    UnsupportedPower(u8),

    #[error("quotient denominator does not embed: V_{irrep} needed {needed}, available {available}")]
    QuotientNotEmbedded { irrep: u32, needed: u64, available: u64 },

    #[error("expansion not well-defined for [{partition}]: {reason}")]
    ExpansionNotWellDefined { partition: String, reason: String },

    #[error("part {part} of [{partition}] is not a pair-raisable slot: {reason}")]
    NotPairRaisable { partition: String, part: u32, reason: String },

    #[error("part {part} of [{partition}] is not a quadruple-raisable slot: {reason}")]
    NotQuadrupleRaisable { partition: String, part: u32, reason: String },

    #[error("square class of zero is undefined")]
    ZeroSquareClass,

    #[error("inconsistent form data: {0}")]
    InconsistentForms(String),

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("unknown representation {0:?} in a restriction")]
    UnknownRep(String),

    #[error("row {group} {label}: {reason}")]
    RowMismatch { group: String, label: String, reason: String },

    #[error("table data error: {0}")]
    Table(String),
}

pub type Result<T> = std::result::Result<T, OrbitError>;
