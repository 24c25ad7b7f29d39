use std::fmt;

use thiserror::Error;

use crate::words::Word;

/// A reason a list of pairs fails to be a table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableDefect {
    Empty,
    LetterOutOfRange(Word),
    /// Repeated or prefix-comparable domain words.
    DomainNotPrefixCode,
    /// Two pairs share an image word.
    NotInjective,
    ImageNotPrefixCode,
    DomainNotMaximal,
    ImageNotMaximal,
}

impl fmt::Display for TableDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableDefect::Empty => write!(f, "table has no pairs"),
            TableDefect::LetterOutOfRange(w) => write!(f, "word {w} uses a letter outside the alphabet"),
            TableDefect::DomainNotPrefixCode => write!(f, "domC not a prefix code"),
            TableDefect::NotInjective => write!(f, "pair map not injective"),
            TableDefect::ImageNotPrefixCode => write!(f, "imC not a prefix code"),
            TableDefect::DomainNotMaximal => write!(f, "domC not maximal"),
            TableDefect::ImageNotMaximal => write!(f, "imC not maximal"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("InvalidAlphabet: alphabet size {0} outside 2..=10")]
    InvalidAlphabet(usize),
    #[error("InvalidLetter: letter {letter} not in alphabet of size {k}")]
    InvalidLetter { letter: u8, k: u8 },
    #[error("NotAPrefixCode: {0}")]
    NotAPrefixCode(String),
    #[error("NotAMember: {0} is not a member of the code")]
    NotAMember(Word),
    #[error("NotMaximalBinaryCode: code is not a finite maximal prefix code over two letters")]
    NotMaximalBinaryCode,
    #[error("NotInDomainCode: {0} is not in the domain code")]
    NotInDomainCode(Word),
    #[error("AlphabetMismatch: expected alphabet of size {expected}, found {found}")]
    AlphabetMismatch { expected: u8, found: u8 },
    #[error("ImpossibleCodeSize: no maximal prefix code of size {size} over {k} letters")]
    ImpossibleCodeSize { size: usize, k: u8 },
    #[error("InvalidQuery: {0}")]
    InvalidQuery(String),
    #[error("InvalidTable: {}", join_defects(.0))]
    InvalidTable(Vec<TableDefect>),
    #[error("ParseError: line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

fn join_defects(defects: &[TableDefect]) -> String {
    defects.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
