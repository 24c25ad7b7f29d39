//! The canonical element file format.
//!
//! ```text
//! G 3
//! 0 -> 0
//! 10 -> 11
//! ```
//!
//! The first line names the alphabet size. Each following line is a table
//! pair `<p> -> <q>`, with words as digit strings and `-` for the empty word.
//! Canonical output lists a maximally extended table in dictionary order of
//! the domain words, each line newline-terminated. Blank lines are accepted
//! on input and never written.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::tables::{GroupElement, Table};
use crate::words::{Alphabet, Word};

/// An element file as read, before any table validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementFile {
    pub k: Alphabet,
    pub pairs: Vec<(Word, Word)>,
}

impl ElementFile {
    pub fn into_table(self) -> Result<Table> {
        Table::new(self.k, self.pairs)
    }

    pub fn into_element(self) -> Result<GroupElement> {
        Ok(self.into_table()?.maximum_extension())
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn parse_word(token: &str, line: usize, column: usize, k: Alphabet) -> Result<Word> {
    let word: Word = token.parse().map_err(|e| match e {
        Error::Parse { column: c, message, .. } => err(line, column + c.saturating_sub(1), message),
        other => other,
    })?;
    if let Some(pos) = word.letters().iter().position(|&a| a >= k.size()) {
        return Err(err(
            line,
            column + pos,
            format!("letter {} outside alphabet of size {k}", word.letters()[pos]),
        ));
    }
    Ok(word)
}

/// Parses an element file. Columns are 1-based character offsets.
pub fn parse(text: &str) -> Result<ElementFile> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !l.trim().is_empty());
    let (hline, header) = lines.next().ok_or_else(|| err(1, 1, "missing header line 'G <k>'"))?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("G") {
        return Err(err(hline, 1, "header must start with 'G'"));
    }
    let k_token = parts.next().ok_or_else(|| err(hline, header.len() + 1, "missing alphabet size"))?;
    let k_col = header.find(k_token).map_or(1, |c| c + 1);
    let k_value: usize = k_token.parse().map_err(|_| err(hline, k_col, format!("bad alphabet size {k_token:?}")))?;
    let k = Alphabet::new(k_value).map_err(|e| err(hline, k_col, e.to_string()))?;
    if let Some(extra) = parts.next() {
        return Err(err(hline, header.find(extra).map_or(1, |c| c + 1), "unexpected text after header"));
    }

    let mut pairs = Vec::new();
    for (n, line) in lines {
        let Some(arrow) = line.find("->") else {
            return Err(err(n, 1, "expected '<p> -> <q>'"));
        };
        let (left, right) = (&line[..arrow], &line[arrow + 2..]);
        let lt = left.trim();
        let rt = right.trim();
        if lt.is_empty() {
            return Err(err(n, 1, "missing domain word"));
        }
        if rt.is_empty() {
            return Err(err(n, arrow + 3, "missing image word"));
        }
        let lcol = left.find(lt).unwrap_or(0) + 1;
        let rcol = arrow + 2 + right.find(rt).unwrap_or(0) + 1;
        if lt.contains(char::is_whitespace) || rt.contains(char::is_whitespace) {
            return Err(err(n, lcol, "words may not contain spaces"));
        }
        pairs.push((parse_word(lt, n, lcol, k)?, parse_word(rt, n, rcol, k)?));
    }
    Ok(ElementFile { k, pairs })
}

/// Parses and validates, returning the canonical element.
pub fn parse_element(text: &str) -> Result<GroupElement> {
    parse(text)?.into_element()
}

/// Writes any table, in its own dictionary order.
pub fn write_table(t: &Table) -> String {
    let mut out = format!("G {}\n", t.alphabet());
    for (p, q) in t.pairs() {
        let _ = writeln!(out, "{p} -> {q}");
    }
    out
}

/// The canonical text of an element.
pub fn serialize(g: &GroupElement) -> String {
    write_table(g.table())
}

/// Parses a comma-separated word list, for command-line codes.
pub fn parse_word_list(s: &str) -> Result<Vec<Word>> {
    s.split(',').map(|t| t.trim().parse::<Word>()).collect()
}
