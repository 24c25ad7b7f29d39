//! Words over the ordered alphabets `A_k = {a_0 < a_1 < ... < a_{k-1}}`,
//! prefix combinatorics, dictionary order and prefix codes.
//!
//! Letters are stored as their indices, so `a_i` is the byte `i`. Words
//! serialize as digit strings (`"0112"`), with the empty word written `-`.

use std::borrow::Borrow;
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::Rng;

use crate::error::{Error, Result};

/// Largest supported alphabet; keeps every letter a single decimal digit.
pub const MAX_ALPHABET: u8 = 10;

/// An alphabet `A_k` with `2 <= k <= 10`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet(u8);

impl Alphabet {
    pub const BINARY: Alphabet = Alphabet(2);

    pub fn new(k: usize) -> Result<Self> {
        if (2..=MAX_ALPHABET as usize).contains(&k) {
            Ok(Alphabet(k as u8))
        } else {
            Err(Error::InvalidAlphabet(k))
        }
    }

    pub fn size(self) -> u8 {
        self.0
    }

    pub fn letters(self) -> impl Iterator<Item = u8> + Clone {
        0..self.0
    }

    pub fn contains_word(self, w: &Word) -> bool {
        w.0.iter().all(|&a| a < self.0)
    }

    pub fn check_word(self, w: &Word) -> Result<()> {
        match w.0.iter().find(|&&a| a >= self.0) {
            Some(&letter) => Err(Error::InvalidLetter { letter, k: self.0 }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite word, stored as letter indices.
///
/// `Ord` is the dictionary order (see [`dict_compare`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(a: u8) -> Self {
        Word(vec![a])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `self · a`.
    pub fn child(&self, a: u8) -> Word {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.extend_from_slice(&self.0);
        v.push(a);
        Word(v)
    }

    /// `a · self`.
    pub fn prepend(&self, a: u8) -> Word {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(a);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn push(&mut self, a: u8) {
        self.0.push(a);
    }

    /// The word without its last letter; `None` for the empty word.
    pub fn parent(&self) -> Option<Word> {
        self.0.split_last().map(|(_, init)| Word(init.to_vec()))
    }

    pub fn last(&self) -> Option<u8> {
        self.0.last().copied()
    }

    pub fn is_prefix_of(&self, x: &Word) -> bool {
        x.0.starts_with(&self.0)
    }

    /// If `self = p·u`, returns `u`.
    pub fn strip_prefix(&self, p: &Word) -> Option<Word> {
        self.0.strip_prefix(p.0.as_slice()).map(|s| Word(s.to_vec()))
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.0
    }
}

impl From<Vec<u8>> for Word {
    fn from(v: Vec<u8>) -> Self {
        Word(v)
    }
}

impl From<&[u8]> for Word {
    fn from(v: &[u8]) -> Self {
        Word(v.to_vec())
    }
}

impl Borrow<[u8]> for Word {
    fn borrow(&self) -> &[u8] {
        &self.0
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        dict_compare(self, other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        for &a in &self.0 {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses a digit string; `-` is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        if s == "-" {
            return Ok(Word::empty());
        }
        if s.is_empty() {
            return Err(parse_error(0, "empty word token (write the empty word as '-')"));
        }
        s.chars()
            .enumerate()
            .map(|(i, c)| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| parse_error(i + 1, &format!("unexpected character {c:?} in word")))
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }
}

fn parse_error(column: usize, message: &str) -> Error {
    Error::Parse { line: 1, column, message: message.to_string() }
}

pub fn is_prefix(p: &Word, x: &Word) -> bool {
    p.is_prefix_of(x)
}

pub fn prefix_comparable(x: &Word, y: &Word) -> bool {
    x.is_prefix_of(y) || y.is_prefix_of(x)
}

/// Dictionary order: `u < v` if `u` is a strict prefix of `v`, or if the
/// first letter after the longest common prefix is smaller in `u`.
pub fn dict_compare(u: &Word, v: &Word) -> Ordering {
    let lcp = u.0.iter().zip(&v.0).take_while(|(a, b)| a == b).count();
    match (u.0.get(lcp), v.0.get(lcp)) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
        (Some(a), Some(b)) => a.cmp(b),
    }
}

/// True iff no two entries are prefix-comparable. Repeated entries count as
/// comparable.
pub fn is_prefix_code(words: &[Word], k: Alphabet) -> bool {
    if !words.iter().all(|w| k.contains_word(w)) {
        return false;
    }
    let mut sorted: Vec<&Word> = words.iter().collect();
    sorted.sort();
    // In dictionary order a word is immediately followed by its extensions,
    // so checking neighbours suffices.
    sorted.windows(2).all(|pair| !pair[0].is_prefix_of(pair[1]))
}

/// Kraft sum test `sum k^{-|p|} == 1`, in exact integer arithmetic.
pub fn kraft_sum_is_one(words: &[Word], k: Alphabet) -> bool {
    let Some(depth) = words.iter().map(Word::len).max() else {
        return false;
    };
    let k = u128::from(k.size());
    let small = u32::try_from(depth).ok().and_then(|d| k.checked_pow(d));
    if let Some(total) = small {
        // Every term divides `total`, so the sum fits whenever it can equal it.
        let mut sum: u128 = 0;
        for w in words {
            let term = k.pow((depth - w.len()) as u32);
            sum = match sum.checked_add(term) {
                Some(s) if s <= total => s,
                _ => return false,
            };
        }
        return sum == total;
    }
    let k = BigUint::from(k);
    let total = k.pow(depth as u32);
    let sum: BigUint = words.iter().map(|w| k.pow((depth - w.len()) as u32)).sum();
    sum == total
}

/// A finite prefix code is maximal iff its Kraft sum is exactly one.
pub fn is_maximal_prefix_code(words: &[Word], k: Alphabet) -> bool {
    is_prefix_code(words, k) && kraft_sum_is_one(words, k)
}

/// A nonempty finite prefix code over a fixed alphabet, kept in dictionary
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrefixCode {
    k: Alphabet,
    members: BTreeSet<Word>,
}

impl PrefixCode {
    pub fn new(k: Alphabet, words: impl IntoIterator<Item = Word>) -> Result<Self> {
        let words: Vec<Word> = words.into_iter().collect();
        for w in &words {
            k.check_word(w)?;
        }
        if words.is_empty() {
            return Err(Error::NotAPrefixCode("empty set of words".into()));
        }
        if !is_prefix_code(&words, k) {
            return Err(Error::NotAPrefixCode(
                "two members are prefix-comparable".into(),
            ));
        }
        Ok(PrefixCode { k, members: words.into_iter().collect() })
    }

    /// Like [`PrefixCode::new`], but also requires maximality.
    pub fn maximal(k: Alphabet, words: impl IntoIterator<Item = Word>) -> Result<Self> {
        let code = Self::new(k, words)?;
        if code.is_maximal() {
            Ok(code)
        } else {
            Err(Error::NotAPrefixCode("code is not maximal".into()))
        }
    }

    /// Parses a comma-separated list of words.
    pub fn parse(s: &str, k: Alphabet) -> Result<Self> {
        let words = s
            .split(',')
            .map(|t| t.trim().parse::<Word>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(k, words)
    }

    /// The code `{ε}`.
    pub fn trivial(k: Alphabet) -> Self {
        PrefixCode { k, members: BTreeSet::from([Word::empty()]) }
    }

    /// The alphabet itself, as a code of one-letter words.
    pub fn alphabet_code(k: Alphabet) -> Self {
        PrefixCode { k, members: k.letters().map(Word::letter).collect() }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.k
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.members.contains(w)
    }

    /// Members in increasing dictionary order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &Word> + ExactSizeIterator {
        self.members.iter()
    }

    pub fn members(&self) -> &BTreeSet<Word> {
        &self.members
    }

    pub fn max_len(&self) -> usize {
        self.members.iter().map(Word::len).max().unwrap_or(0)
    }

    pub fn is_maximal(&self) -> bool {
        let words: Vec<Word> = self.members.iter().cloned().collect();
        kraft_sum_is_one(&words, self.k)
    }

    /// The member that is a prefix of `x`, if any. Unique, since the code is
    /// prefix-free.
    pub fn prefix_of(&self, x: &[u8]) -> Option<&Word> {
        let limit = x.len().min(self.max_len());
        (0..=limit).find_map(|n| self.members.get(&x[..n]))
    }

    /// All strict prefixes of members.
    pub fn spref(&self) -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        for p in &self.members {
            for n in 0..p.len() {
                out.insert(Word::from(&p.letters()[..n]));
            }
        }
        out
    }

    /// Number of members strictly below `p` in dictionary order.
    pub fn rank(&self, p: &Word) -> Result<usize> {
        if !self.contains(p) {
            return Err(Error::NotAMember(p.clone()));
        }
        Ok(self.members.range::<Word, _>(..p).count())
    }

    /// `(P \ {p}) ∪ p·A_k`.
    pub fn restrict(&self, p: &Word) -> Result<PrefixCode> {
        if !self.contains(p) {
            return Err(Error::NotAMember(p.clone()));
        }
        let mut members = self.members.clone();
        members.remove(p);
        members.extend(self.k.letters().map(|a| p.child(a)));
        Ok(PrefixCode { k: self.k, members })
    }

    /// For a maximal binary code `P`, the maximal code
    /// `P ∪ spref(P)·{a_2, ..., a_{k-1}}` over `A_k`.
    pub fn extend_to_k(&self, k: Alphabet) -> Result<PrefixCode> {
        if self.k != Alphabet::BINARY || !self.is_maximal() {
            return Err(Error::NotMaximalBinaryCode);
        }
        let mut members = self.members.clone();
        for x in self.spref() {
            members.extend((2..k.size()).map(|a| x.child(a)));
        }
        Ok(PrefixCode { k, members })
    }

    /// Factors `w = c_1 ... c_m · r` with every `c_j` a member and `r` having
    /// no member as a prefix. For a maximal code, `r` lies in
    /// `spref(P) ∪ {ε}`. The code `{ε}` admits no progress and yields
    /// `([], w)`.
    pub fn decompose(&self, w: &Word) -> (Vec<Word>, Word) {
        let mut factors = Vec::new();
        let mut rest = w.letters();
        while let Some(c) = self.prefix_of(rest) {
            if c.is_empty() {
                break;
            }
            rest = &rest[c.len()..];
            factors.push(c.clone());
        }
        (factors, Word::from(rest))
    }
}

impl fmt::Display for PrefixCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for w in &self.members {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// Every maximal prefix code over `A_k` with at most `max_leaves` members.
/// The result is sorted and duplicate-free.
pub fn enumerate_maximal_codes(k: Alphabet, max_leaves: usize) -> Vec<PrefixCode> {
    let mut all = Vec::new();
    let mut layer = BTreeSet::from([PrefixCode::trivial(k)]);
    let step = usize::from(k.size()) - 1;
    let mut size = 1;
    while size <= max_leaves && !layer.is_empty() {
        all.extend(layer.iter().cloned());
        let mut next = BTreeSet::new();
        for code in &layer {
            for p in code.iter() {
                next.insert(code.restrict(p).expect("member"));
            }
        }
        layer = next;
        size += step;
    }
    all
}

/// True iff some maximal prefix code over `A_k` has exactly `size` members.
pub fn code_size_possible(k: Alphabet, size: usize) -> bool {
    size >= 1 && (size - 1).is_multiple_of(usize::from(k.size()) - 1)
}

/// Grows a maximal code from `{ε}` by splitting uniformly random leaves until
/// it has `leaves` members.
pub fn random_code<R: Rng + ?Sized>(k: Alphabet, leaves: usize, rng: &mut R) -> Result<PrefixCode> {
    if !code_size_possible(k, leaves) {
        return Err(Error::ImpossibleCodeSize { size: leaves, k: k.size() });
    }
    let mut members = vec![Word::empty()];
    while members.len() < leaves {
        let leaf = members.swap_remove(rng.gen_range(0..members.len()));
        members.extend(k.letters().map(|a| leaf.child(a)));
    }
    Ok(PrefixCode { k, members: members.into_iter().collect() })
}
