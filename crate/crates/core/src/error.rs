use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: {0} vs {1}")]
    AmbientMismatch(String, String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("reflection in the zero vector")]
    ZeroRoot,
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("weight {0} is not integral")]
    NotIntegral(String),
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("{0} is not a Harish-Chandra parameter of a discrete series")]
    NotHarishChandra(String),
    #[error("{0} lies on a noncompact wall")]
    NoncompactWall(String),
    #[error("lambda = {0} and its Blattner parameter lie in different chambers")]
    ConditionFails(String),
    #[error("{0} is not in the holomorphic chamber")]
    NotHolomorphic(String),
    #[error("{0} is outside the required chamber")]
    OutsideChamber(String),
    #[error("matrix is not in the model of {0}")]
    NotInModel(String),
    #[error("restriction is not admissible: {0}")]
    NotAdmissible(String),
    #[error("invalid subgroup embedding: {0}")]
    InvalidSubgroup(String),
    #[error("no strictly positive grading functional for the generators")]
    NoGrading,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable tag used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::AmbientMismatch(..) => "ambient_mismatch",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::ZeroRoot => "zero_root",
            Error::NotDominant(_) => "not_dominant",
            Error::NotIntegral(_) => "not_integral",
            Error::UnsupportedFamily(_) => "unsupported_family",
            Error::InvalidParameters(_) => "invalid_parameters",
            Error::NotHarishChandra(_) => "not_harish_chandra",
            Error::NoncompactWall(_) => "noncompact_wall",
            Error::ConditionFails(_) => "condition_fails",
            Error::NotHolomorphic(_) => "not_holomorphic",
            Error::OutsideChamber(_) => "outside_chamber",
            Error::NotInModel(_) => "not_in_model",
            Error::NotAdmissible(_) => "not_admissible",
            Error::InvalidSubgroup(_) => "invalid_subgroup",
            Error::NoGrading => "no_grading",
            Error::Parse(_) => "parse",
            Error::Internal(_) => "internal",
        }
    }
}
