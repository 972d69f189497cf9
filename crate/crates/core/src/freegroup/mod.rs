//! Free groups `F_r` and their automorphisms.
//!
//! For the punctured torus `T^n` the group is `π_1` of rank `n + 1`, with
//! generator `0` dual to the horizontal loop `A` and generator `k` dual to
//! the vertical loop `B_k`.

mod automorphism;
mod word;

use thiserror::Error;

pub use automorphism::{peripheral_check, FreeAutomorphism, PeripheralStructure};
pub use word::{Alphabet, CyclicWord, Letter, ReducedWord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FreeGroupError {
    #[error("generator {generator} is outside an alphabet of rank {rank}")]
    AlphabetMismatch { generator: usize, rank: usize },
    #[error("ranks differ: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("inverse table does not invert generator {generator}")]
    NotInverse { generator: usize },
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("alphabet must contain at least one generator")]
    EmptyAlphabet,
}
