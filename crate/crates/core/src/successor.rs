//! The `*a_i`-successor: for a maximal binary prefix code `P` and a letter
//! `a_i` with `i >= 2`, every member of `P` outside `a_0^*` is paired with a
//! distinct element of `spref(P)·a_i`. This pairing is what lets a binary
//! table determine the extra entries of a `k`-ary table.
//!
//! Two routes are provided. [`succ_iterative`] runs the nearest-right-neighbour
//! recurrence from the dictionary-largest member downwards; [`succ_formula`]
//! uses the closed form `(u·a_1·a_0^m)' = u·a_i`. They must always agree, and
//! the iterative route is kept as the reference for the formula.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::words::{Alphabet, PrefixCode, Word, MAX_ALPHABET};

/// A validated request for `(p)'_i` in the code `P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuccessorQuery {
    code: PrefixCode,
    member: Word,
    letter: u8,
}

impl SuccessorQuery {
    pub fn new(code: PrefixCode, member: Word, letter: u8) -> Result<Self> {
        check_code_and_letter(&code, letter)?;
        if !code.contains(&member) {
            return Err(Error::InvalidQuery(format!("{member} is not a member of {code}")));
        }
        Ok(SuccessorQuery { code, member, letter })
    }

    pub fn code(&self) -> &PrefixCode {
        &self.code
    }

    pub fn member(&self) -> &Word {
        &self.member
    }

    pub fn letter(&self) -> u8 {
        self.letter
    }
}

fn check_code_and_letter(code: &PrefixCode, letter: u8) -> Result<()> {
    if code.alphabet() != Alphabet::BINARY || !code.is_maximal() {
        return Err(Error::InvalidQuery(format!("{code} is not a maximal binary prefix code")));
    }
    if code.len() < 2 {
        return Err(Error::InvalidQuery("successors need a code with at least two members".into()));
    }
    if !(2..MAX_ALPHABET).contains(&letter) {
        return Err(Error::InvalidQuery(format!("letter {letter} is not one of a_2 .. a_9")));
    }
    Ok(())
}

/// Position of a letter in the three-letter order `a_0 < a_1 < a_i`.
fn position(letter: u8, i: u8) -> u8 {
    match letter {
        0 | 1 => letter,
        l if l == i => 2,
        _ => unreachable!("letter outside {{a_0, a_1, a_i}}"),
    }
}

/// Sort key for the dictionary order over the alphabet `{a_0, a_1, a_i}`.
fn three_letter_key(w: &Word, i: u8) -> Vec<u8> {
    w.letters().iter().map(|&a| position(a, i)).collect()
}

/// The full successor map computed by the descending recurrence.
fn iterative_map(code: &PrefixCode, i: u8) -> BTreeMap<Word, Option<Word>> {
    let candidates: Vec<Word> = code.spref().iter().map(|x| x.child(i)).collect();
    let mut taken: BTreeSet<Word> = BTreeSet::new();
    let mut out = BTreeMap::new();
    let members: Vec<&Word> = code.iter().collect();
    // p_1, the dictionary minimum, never gets a successor.
    out.insert(members[0].clone(), None);
    for p in members.iter().skip(1).rev() {
        let key = three_letter_key(p, i);
        let next = candidates
            .iter()
            .filter(|c| key < three_letter_key(c, i) && !taken.contains(*c))
            .min_by_key(|c| three_letter_key(c, i))
            .cloned();
        if let Some(c) = &next {
            taken.insert(c.clone());
        }
        out.insert((*p).clone(), next);
    }
    out
}

/// `(p)'_i` by the nearest-right-neighbour recurrence; `None` for the
/// dictionary-least member.
pub fn succ_iterative(q: &SuccessorQuery) -> Option<Word> {
    iterative_map(&q.code, q.letter).remove(&q.member).flatten()
}

/// Closed form: for `p = u·a_1·a_0^m` the successor is `u·a_i`; members of
/// `a_0^*` have none.
pub fn succ_formula(q: &SuccessorQuery) -> Option<Word> {
    successor_of_word(&q.member, q.letter)
}

/// The closed form applied to a bare binary word.
pub fn successor_of_word(p: &Word, i: u8) -> Option<Word> {
    let last_one = p.letters().iter().rposition(|&a| a == 1)?;
    Some(Word::from(&p.letters()[..last_one]).child(i))
}

/// `p ↦ (p)'_i` for every member outside `a_0^*`.
pub fn succ_all(code: &PrefixCode, i: u8) -> Result<BTreeMap<Word, Word>> {
    check_code_and_letter(code, i)?;
    Ok(code
        .iter()
        .filter_map(|p| successor_of_word(p, i).map(|s| (p.clone(), s)))
        .collect())
}

/// [`succ_all`] through the recurrence instead of the formula.
pub fn succ_all_iterative(code: &PrefixCode, i: u8) -> Result<BTreeMap<Word, Word>> {
    check_code_and_letter(code, i)?;
    Ok(iterative_map(code, i)
        .into_iter()
        .filter_map(|(p, s)| s.map(|s| (p, s)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::enumerate_maximal_codes;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn code(list: &[&str]) -> PrefixCode {
        PrefixCode::new(Alphabet::BINARY, list.iter().map(|s| w(s))).unwrap()
    }

    fn query(list: &[&str], p: &str, i: u8) -> SuccessorQuery {
        SuccessorQuery::new(code(list), w(p), i).unwrap()
    }

    const P4: [&str; 4] = ["00", "01", "10", "11"];

    #[test]
    fn iterative_examples() {
        assert_eq!(succ_iterative(&query(&P4, "10", 2)), Some(w("2")));
        assert_eq!(succ_iterative(&query(&P4, "00", 2)), None);
        assert_eq!(succ_iterative(&query(&["0", "10", "11"], "11", 2)), Some(w("12")));
    }

    #[test]
    fn formula_examples() {
        assert_eq!(succ_formula(&query(&P4, "01", 2)), Some(w("02")));
        assert_eq!(succ_formula(&query(&P4, "10", 3)), Some(w("3")));
        assert_eq!(succ_formula(&query(&["0", "10", "11"], "0", 2)), None);
    }

    #[test]
    fn succ_all_examples() {
        let m = succ_all(&code(&P4), 2).unwrap();
        let expected: BTreeMap<Word, Word> =
            [("01", "02"), ("10", "2"), ("11", "12")].iter().map(|(a, b)| (w(a), w(b))).collect();
        assert_eq!(m, expected);
        assert_eq!(succ_all(&code(&["0", "1"]), 2).unwrap(), BTreeMap::from([(w("1"), w("2"))]));
        assert_eq!(
            succ_all(&code(&["0", "10", "11"]), 2).unwrap(),
            BTreeMap::from([(w("10"), w("2")), (w("11"), w("12"))])
        );
    }

    #[test]
    fn invalid_queries() {
        assert!(matches!(SuccessorQuery::new(code(&["-"]), w("-"), 2), Err(Error::InvalidQuery(_))));
        assert!(matches!(SuccessorQuery::new(code(&["0", "11"]), w("0"), 2), Err(Error::InvalidQuery(_))));
        assert!(matches!(SuccessorQuery::new(code(&P4), w("1"), 2), Err(Error::InvalidQuery(_))));
        assert!(matches!(SuccessorQuery::new(code(&P4), w("00"), 1), Err(Error::InvalidQuery(_))));
        let k3 = PrefixCode::alphabet_code(Alphabet::new(3).unwrap());
        assert!(matches!(SuccessorQuery::new(k3, w("0"), 2), Err(Error::InvalidQuery(_))));
    }

    #[test]
    fn last_member_of_all_ones_shape() {
        // p_ℓ = a_1^n has successor a_1^{n-1}·a_i.
        for p in enumerate_maximal_codes(Alphabet::BINARY, 7).into_iter().filter(|p| p.len() >= 2) {
            let last = p.iter().next_back().unwrap();
            assert!(last.letters().iter().all(|&a| a == 1));
            let q = SuccessorQuery::new(p.clone(), last.clone(), 2).unwrap();
            assert_eq!(succ_iterative(&q), Some(last.parent().unwrap().child(2)));
        }
    }

    #[test]
    fn exactly_one_member_lacks_a_successor() {
        for p in enumerate_maximal_codes(Alphabet::BINARY, 7).into_iter().filter(|p| p.len() >= 2) {
            for i in [2, 3] {
                let missing: Vec<&Word> = p
                    .iter()
                    .filter(|m| succ_iterative(&SuccessorQuery::new(p.clone(), (*m).clone(), i).unwrap()).is_none())
                    .collect();
                assert_eq!(missing.len(), 1);
                assert!(missing[0].letters().iter().all(|&a| a == 0));
                assert_eq!(missing[0], p.iter().next().unwrap());
            }
        }
    }
}
