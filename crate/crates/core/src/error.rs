use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("universe has {0} alternatives, at most 64 are supported")]
    UniverseTooLarge(usize),
    #[error("universe must contain at least one alternative")]
    EmptyUniverse,
    #[error("duplicate alternative label `{0}`")]
    DuplicateLabel(String),
    #[error("bad alternative label `{0}`: {1}")]
    BadLabel(String, &'static str),
    #[error("unknown alternative `{0}`")]
    UnknownLabel(String),
    #[error("values belong to different universes")]
    UniverseMismatch,
    #[error("feasible set is empty")]
    EmptySet,
    #[error("{0} is not contained in the feasible set")]
    OutsideFeasibleSet(String),
    #[error("set must contain at least two alternatives")]
    SetTooSmall,
    #[error("a pair of distinct alternatives is required")]
    SameAlternative,
    #[error("profile must contain at least one individual")]
    EmptyProfile,
    #[error("relation is not a quasi-order: {0}")]
    NotQuasiOrder(String),
    #[error("relation is not a tournament on the given set: {0}")]
    NotTournament(String),
    #[error("relation family is not nested: {0}")]
    NotNested(String),
    #[error("{0} is not a component of every individual relation")]
    NotAComponent(String),
    #[error("strength {0} is outside (0,1]")]
    InvalidStrength(String),
    #[error("invalid strength range ({0},{1}]")]
    InvalidRange(String, String),
    #[error("invalid perturbation: {0}")]
    InvalidPerturbation(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("bad rule spec: {0}")]
    RuleSyntax(String),
    #[error("bad rule configuration: {0}")]
    RuleConfig(String),
    #[error("rule outside the families covered by this check: {0}")]
    UnsupportedRule(String),
}

pub type Result<T> = std::result::Result<T, Error>;
