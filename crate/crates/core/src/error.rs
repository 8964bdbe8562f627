use thiserror::Error;

use crate::address::Address;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("configuration has no cells")]
    Empty,
    #[error("expected {expected} cell states, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("arm count {arms} must be smaller than the cell count {n}")]
    TooManyArms { arms: usize, n: usize },
    #[error("cell {index} carries a different data kind than cell 0")]
    MixedData { index: usize },
    #[error("cell {index} has {found} pointers, automaton declares {expected}")]
    PointerCount { index: usize, expected: usize, found: usize },
    #[error("cell {index}: absolute address {address} out of range")]
    AddressRange { index: usize, address: Address },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("rule failed at cell {index}: {message}")]
    RuleFailed { index: usize, message: String },
    #[error("step limit of {limit} generations reached without satisfying the stop condition")]
    StepLimit { limit: u64 },
    #[error("fixed-point detection requires synchronous updating")]
    FixedPointAsync,
    #[error(transparent)]
    Config(#[from] ConfigError),
}
