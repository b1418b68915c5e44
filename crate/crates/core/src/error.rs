use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("conductor {0} exceeds the supported maximum of {max}", max = crate::cyclotomic::MAX_CONDUCTOR)]
    ConductorOverflow(u64),

    #[error("value {0} is not rational")]
    NotRational(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("groups of order {0} are not supported (maximum {max})", max = crate::group::MAX_ORDER)]
    UnsupportedOrder(usize),

    #[error("class functions live on different groups")]
    GroupMismatch,

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("subgroup of order {0} is not cyclic")]
    NotCyclic(usize),

    #[error("support violation: {0}")]
    SupportViolation(String),

    #[error("multiplicity of {irreducible} is not rational: {value}")]
    NotRationalMultiplicity { irreducible: String, value: String },

    #[error("a character table must be supplied for the non-abelian group of order {0}")]
    TableRequired(usize),

    #[error("invalid character table: {0}")]
    InvalidTable(String),

    #[error("invalid linear character: {0}")]
    InvalidCharacter(String),

    #[error("invalid stratum {id}: {reason}")]
    InvalidStratum { id: String, reason: String },

    #[error("stratum {0}: no cyclic subgroup of the stabilizer has the stratum as a full fixed component")]
    EmptyHZ(String),

    #[error("ambient stratum {0} has a nontrivial stabilizer but no ambient_equivariant_chi")]
    MissingAmbientChi(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("Lefschetz trace check failed at conjugacy classes {0:?}")]
    InconsistentTrace(Vec<usize>),

    #[error("unknown example {name:?}; available: {}", available.join(", "))]
    UnknownExample {
        name: String,
        available: Vec<String>,
    },

    #[error("internal cross-check failed: {0}")]
    CrossCheckFailed(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn stratum(id: &str, reason: impl Into<String>) -> Self {
        Error::InvalidStratum {
            id: id.to_string(),
            reason: reason.into(),
        }
    }
}
