use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base must be at least 2, got {0}")]
    InvalidBase(u64),
    #[error("normal forms are only defined for positive numbers")]
    ZeroHasNoNormalForm,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_base(k: u64) -> Result<()> {
    if k < 2 {
        Err(Error::InvalidBase(k))
    } else {
        Ok(())
    }
}
