use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input contains the sentinel byte 0x00 at offset {offset}")]
    SentinelCollision { offset: usize },

    #[error("parameter {value} is out of range (maximum {max})")]
    OutOfRange { value: usize, max: usize },

    #[error("input of length {len} exceeds the limit of {limit}")]
    TooLarge { len: usize, limit: usize },

    #[error("position {pos} is outside [1..{n}]")]
    PositionOutOfBounds { pos: usize, n: usize },

    #[error("malformed system: {0}")]
    MalformedSystem(String),

    #[error("system does not represent a unique string: {0}")]
    NotRepresenting(String),

    #[error("corrupted stream: {0}")]
    Corrupted(String),

    #[error("invalid macro scheme: position {pos} never reaches an explicit character")]
    InvalidScheme { pos: usize },

    #[error("macro scheme disagrees with the text: {0}")]
    Inconsistent(String),
}
