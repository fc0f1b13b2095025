use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid type {family}{rank}: {bound}")]
    InvalidType {
        family: char,
        rank: usize,
        bound: &'static str,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("weight has {got} labels, root system has rank {expected}")]
    RankMismatch { expected: usize, got: usize },

    #[error("permutation does not preserve the Cartan matrix")]
    InvalidAutomorphism,

    #[error("bounded enumeration refused: needs {needed} entries, cap is {cap}")]
    CapExceeded { needed: u128, cap: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("not a character: extraction left multiplicity {mult} at {weight}")]
    NotACharacter { weight: String, mult: i128 },

    #[error("characters live on different root systems ({0} vs {1})")]
    MixedSystems(String, String),

    #[error("weight {0} is not under the highest weight")]
    CorruptedCharacter(String),

    #[error("form type at p=2 is unknown for dim {0}; supply a fixture")]
    UnknownAtP2(u128),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("no fixture for {0}")]
    MissingFixture(String),

    #[error("contract violation: {0}")]
    Contract(String),
}

pub type Result<T> = core::result::Result<T, Error>;
