//! Error type shared by all modules.

use std::fmt;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by constructors and operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A sequence must contain at least one element.
    EmptySequence,
    /// A symbol lies outside the declared symbol set `1..=level`.
    SymbolOutOfRange { symbol: usize, level: usize },
    /// A permutation's degree does not match the level it acts on.
    LevelMismatch { level: usize, degree: usize },
    /// An image table is not a bijection on `1..=degree`.
    InvalidPermutation(String),
    /// Two values that must share a shape (length, level or arity) do not.
    ShapeMismatch(String),
    /// An operation requiring at least two sequences received fewer.
    ArityError { k: usize },
    /// A numeric parameter violates its precondition.
    InvalidParameter(String),
    /// Cross sections handed to the witness construction are not pairwise
    /// connected.
    NotConnected,
    /// More distinct cross sections than available symbols; no single
    /// permutation tuple can make them all constant.
    TooManySections { sections: usize, level: usize },
    /// Links are generated from cross sections whose first element is 1.
    NotInFirstClass { first: usize },
    /// A brute-force quantifier check would exceed its search budget.
    SearchSpaceTooLarge { size: u128, budget: u128 },
    /// An input document could not be parsed. `line` is 1-based; 0 means the
    /// document as a whole.
    Parse { line: usize, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptySequence => write!(f, "sequence must have at least one element"),
            Error::SymbolOutOfRange { symbol, level } => {
                write!(f, "symbol {symbol} outside the symbol set 1..={level}")
            }
            Error::LevelMismatch { level, degree } => {
                write!(f, "permutation of degree {degree} cannot act on level {level}")
            }
            Error::InvalidPermutation(msg) => write!(f, "invalid permutation: {msg}"),
            Error::ShapeMismatch(msg) => write!(f, "shape mismatch: {msg}"),
            Error::ArityError { k } => {
                write!(f, "operation requires at least two sequences, got {k}")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::NotConnected => {
                write!(f, "cross sections are not pairwise connected")
            }
            Error::TooManySections { sections, level } => {
                write!(f, "{sections} distinct cross sections exceed level {level}")
            }
            Error::NotInFirstClass { first } => {
                write!(f, "cross section starts with {first}, expected 1")
            }
            Error::SearchSpaceTooLarge { size, budget } => {
                write!(f, "search space of {size} permutation tuples exceeds budget {budget}")
            }
            Error::Parse { line, message } => {
                if *line == 0 {
                    write!(f, "parse error: {message}")
                } else {
                    write!(f, "parse error at line {line}: {message}")
                }
            }
        }
    }
}

impl std::error::Error for Error {}
