use alloc::string::String;

use crate::classify::TraitId;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("not a word: {0:?}")]
    NotAWord(String),
    #[error("degenerate document: {0}")]
    DegenerateDocument(&'static str),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("no features selected")]
    NoFeaturesSelected,
    #[error("schema mismatch: expected {expected}, found {found}")]
    SchemaMismatch { expected: String, found: String },
    #[error("cannot interpolate: SMOTE needs at least two minority points, got {0}")]
    CannotInterpolate(usize),
    #[error("trait {0} has a single class in the training data")]
    SingleClass(TraitId),
    #[error("non-finite feature value at column {0}")]
    NonFinite(usize),
    #[error("missing model for trait {0}")]
    MissingTrait(TraitId),
    #[error("duplicate model for trait {0}")]
    DuplicateTrait(TraitId),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("malformed rank vector: {0}")]
    MalformedRank(String),
    #[error("unknown ranking method: {0}")]
    UnknownMethod(String),
    #[error("missing GOLD annotation for articles: {0:?}")]
    MissingGold(alloc::vec::Vec<String>),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
}
