//! Tables (finite bijections between maximal prefix codes) and the group
//! elements of `G_{k,1}` they represent.
//!
//! A [`Table`] `{(p, q)}` determines the right-ideal morphism
//! `f(p·w) = q·w`. Elements of `G_{k,1}` are tables in canonical form: no
//! extension step applies, pairs ordered by the dictionary order of their
//! domain words. Multiplication is composition followed by maximum
//! extension.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result, TableDefect};
use crate::words::{is_prefix_code, kraft_sum_is_one, random_code, Alphabet, PrefixCode, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Table {
    k: Alphabet,
    map: BTreeMap<Word, Word>,
}

impl Table {
    /// Builds a table, rejecting any input that fails [`Table::check`].
    pub fn new(k: Alphabet, pairs: impl IntoIterator<Item = (Word, Word)>) -> Result<Table> {
        let pairs: Vec<(Word, Word)> = pairs.into_iter().collect();
        let defects = Table::check(k, &pairs);
        if !defects.is_empty() {
            return Err(Error::InvalidTable(defects));
        }
        Ok(Table { k, map: pairs.into_iter().collect() })
    }

    /// Lists every table invariant the pairs violate; empty means valid.
    pub fn check(k: Alphabet, pairs: &[(Word, Word)]) -> Vec<TableDefect> {
        let mut defects = Vec::new();
        if pairs.is_empty() {
            defects.push(TableDefect::Empty);
            return defects;
        }
        for (p, q) in pairs {
            for w in [p, q] {
                if !k.contains_word(w) {
                    defects.push(TableDefect::LetterOutOfRange(w.clone()));
                }
            }
        }
        if !defects.is_empty() {
            return defects;
        }
        let domain: Vec<Word> = pairs.iter().map(|(p, _)| p.clone()).collect();
        let image: Vec<Word> = pairs.iter().map(|(_, q)| q.clone()).collect();
        let distinct_images: BTreeSet<&Word> = image.iter().collect();
        if !is_prefix_code(&domain, k) {
            defects.push(TableDefect::DomainNotPrefixCode);
        } else if !kraft_sum_is_one(&domain, k) {
            defects.push(TableDefect::DomainNotMaximal);
        }
        if distinct_images.len() < image.len() {
            defects.push(TableDefect::NotInjective);
        } else if !is_prefix_code(&image, k) {
            defects.push(TableDefect::ImageNotPrefixCode);
        } else if !kraft_sum_is_one(&image, k) {
            defects.push(TableDefect::ImageNotMaximal);
        }
        defects
    }

    pub fn is_valid(k: Alphabet, pairs: &[(Word, Word)]) -> bool {
        Table::check(k, pairs).is_empty()
    }

    /// Caller guarantees validity.
    pub(crate) fn from_map(k: Alphabet, map: BTreeMap<Word, Word>) -> Table {
        debug_assert!({
            let pairs: Vec<_> = map.iter().map(|(p, q)| (p.clone(), q.clone())).collect();
            Table::check(k, &pairs).is_empty()
        });
        Table { k, map }
    }

    pub fn identity(k: Alphabet) -> Table {
        Table { k, map: BTreeMap::from([(Word::empty(), Word::empty())]) }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.k
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Pairs in dictionary order of the domain word.
    pub fn pairs(&self) -> impl Iterator<Item = (&Word, &Word)> + '_ {
        self.map.iter()
    }

    pub fn image_of(&self, p: &Word) -> Option<&Word> {
        self.map.get(p)
    }

    pub fn domain_code(&self) -> PrefixCode {
        PrefixCode::new(self.k, self.map.keys().cloned()).expect("valid table")
    }

    pub fn image_code(&self) -> PrefixCode {
        PrefixCode::new(self.k, self.map.values().cloned()).expect("valid table")
    }

    pub fn max_word_len(&self) -> usize {
        self.map.iter().map(|(p, q)| p.len().max(q.len())).max().unwrap_or(0)
    }

    /// The domain pair whose domain word is a prefix of `x`.
    fn domain_pair(&self, x: &[u8]) -> Option<(&Word, &Word)> {
        (0..=x.len()).find_map(|n| self.map.get_key_value(&x[..n]))
    }

    /// `f(p·w) = q·w`; `None` when `x` has no prefix in the domain code.
    pub fn apply(&self, x: &Word) -> Option<Word> {
        let (p, q) = self.domain_pair(x.letters())?;
        let mut out = q.letters().to_vec();
        out.extend_from_slice(&x.letters()[p.len()..]);
        Some(Word::from(out))
    }

    /// The stems `p` at which [`Table::extend_at`] succeeds, in dictionary
    /// order.
    pub fn extension_candidates(&self) -> Vec<Word> {
        self.map
            .keys()
            .filter(|d| d.last() == Some(0))
            .filter_map(|d| d.parent())
            .filter(|p| self.extension_target(p).is_some())
            .collect()
    }

    /// If `(p·α, q·α)` is a pair for every letter `α`, returns `q`.
    fn extension_target(&self, p: &Word) -> Option<Word> {
        let q0 = self.map.get(&p.child(0))?;
        if q0.last() != Some(0) {
            return None;
        }
        let q = q0.parent()?;
        self.k
            .letters()
            .all(|a| self.map.get(&p.child(a)) == Some(&q.child(a)))
            .then_some(q)
    }

    /// Replaces the `k` pairs `(p·α, q·α)` by `(p, q)`, when they exist.
    pub fn extend_at(&self, p: &Word) -> Option<Table> {
        let q = self.extension_target(p)?;
        let mut map = self.map.clone();
        for a in self.k.letters() {
            map.remove(&p.child(a));
        }
        map.insert(p.clone(), q);
        Some(Table { k: self.k, map })
    }

    /// One extension step at the dictionary-least candidate, or `None` when
    /// the table is maximally extended.
    pub fn extension_step(&self) -> Option<Table> {
        let p = self.extension_candidates().into_iter().next()?;
        self.extend_at(&p)
    }

    /// Applies extension steps until none applies.
    pub fn maximum_extension(&self) -> GroupElement {
        let mut map = self.map.clone();
        let mut pending: Vec<Word> = self.extension_candidates();
        while let Some(p) = pending.pop() {
            let Some(q0) = map.get(&p.child(0)) else { continue };
            let Some(q) = q0.parent().filter(|_| q0.last() == Some(0)) else { continue };
            if !self.k.letters().all(|a| map.get(&p.child(a)) == Some(&q.child(a))) {
                continue;
            }
            for a in self.k.letters() {
                map.remove(&p.child(a));
            }
            // Merging at p can only enable a merge at p's parent.
            if let Some(parent) = p.parent() {
                pending.push(parent);
            }
            map.insert(p, q);
        }
        GroupElement { table: Table { k: self.k, map } }
    }

    /// Replaces `(p, q)` by `{(p·α, q·α) : α ∈ A_k}`.
    pub fn restrict(&self, p: &Word) -> Result<Table> {
        let q = self.map.get(p).ok_or_else(|| Error::NotInDomainCode(p.clone()))?.clone();
        let mut map = self.map.clone();
        map.remove(p);
        for a in self.k.letters() {
            map.insert(p.child(a), q.child(a));
        }
        Ok(Table { k: self.k, map })
    }

    pub fn inverse(&self) -> Table {
        Table { k: self.k, map: self.map.iter().map(|(p, q)| (q.clone(), p.clone())).collect() }
    }

    /// Raw composition `h ∘ g` (`self` is `g`, applied first), restricting
    /// `g` until every image word has a prefix in `domC(h)`.
    pub fn compose_raw(&self, h: &Table) -> Result<Table> {
        if self.k != h.k {
            return Err(Error::AlphabetMismatch { expected: h.k.size(), found: self.k.size() });
        }
        let mut map = BTreeMap::new();
        let mut stack: Vec<(Word, Word)> =
            self.map.iter().map(|(p, q)| (p.clone(), q.clone())).collect();
        while let Some((p, q)) = stack.pop() {
            match h.apply(&q) {
                Some(r) => {
                    map.insert(p, r);
                }
                None => {
                    // q is a strict prefix of some member of domC(h).
                    stack.extend(self.k.letters().map(|a| (p.child(a), q.child(a))));
                }
            }
        }
        Ok(Table { k: self.k, map })
    }
}

/// An element of `G_{k,1}`: a maximally extended table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    table: Table,
}

impl GroupElement {
    pub fn identity(k: Alphabet) -> GroupElement {
        GroupElement { table: Table::identity(k) }
    }

    pub fn from_table(table: &Table) -> GroupElement {
        table.maximum_extension()
    }

    pub fn from_pairs(k: Alphabet, pairs: impl IntoIterator<Item = (Word, Word)>) -> Result<GroupElement> {
        Ok(Table::new(k, pairs)?.maximum_extension())
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn into_table(self) -> Table {
        self.table
    }

    pub fn alphabet(&self) -> Alphabet {
        self.table.k
    }

    pub fn is_identity(&self) -> bool {
        self.table == Table::identity(self.table.k)
    }

    pub fn apply(&self, x: &Word) -> Option<Word> {
        self.table.apply(x)
    }

    /// `self ∘ g`: `g` is applied first.
    pub fn compose(&self, g: &GroupElement) -> Result<GroupElement> {
        Ok(g.table.compose_raw(&self.table)?.maximum_extension())
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement { table: self.table.inverse() }
    }

    /// A reproducible random element: two random maximal codes with `leaves`
    /// members and a random bijection between them, maximally extended.
    pub fn random(k: Alphabet, leaves: usize, seed: u64) -> Result<GroupElement> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Ok(random_table(k, leaves, &mut rng)?.maximum_extension())
    }
}

/// A random (not yet extended) table with `leaves` pairs.
pub fn random_table<R: Rng + ?Sized>(k: Alphabet, leaves: usize, rng: &mut R) -> Result<Table> {
    let domain = random_code(k, leaves, rng)?;
    let mut image: Vec<Word> = random_code(k, leaves, rng)?.iter().cloned().collect();
    image.shuffle(rng);
    Ok(Table::from_map(k, domain.iter().cloned().zip(image).collect()))
}

/// `compose(h, g) = h ∘ g`, `g` applied first.
pub fn compose(h: &GroupElement, g: &GroupElement) -> Result<GroupElement> {
    h.compose(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn table(k: usize, pairs: &[(&str, &str)]) -> Table {
        Table::new(Alphabet::new(k).unwrap(), pairs.iter().map(|(p, q)| (w(p), w(q)))).unwrap()
    }

    fn elem(k: usize, pairs: &[(&str, &str)]) -> GroupElement {
        table(k, pairs).maximum_extension()
    }

    fn raw(pairs: &[(&str, &str)]) -> Vec<(Word, Word)> {
        pairs.iter().map(|(p, q)| (w(p), w(q))).collect()
    }

    const K2: Alphabet = Alphabet::BINARY;

    fn all_words(k: Alphabet, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            layer = layer.iter().flat_map(|x| k.letters().map(move |a| x.child(a))).collect();
            out.extend(layer.iter().cloned());
        }
        out
    }

    #[test]
    fn validate_examples() {
        assert!(Table::is_valid(K2, &raw(&[("0", "1"), ("1", "0")])));
        assert_eq!(
            Table::check(K2, &raw(&[("0", "1"), ("1", "1")])),
            vec![TableDefect::NotInjective]
        );
        assert_eq!(
            Table::check(K2, &raw(&[("0", "0"), ("10", "10")])),
            vec![TableDefect::DomainNotMaximal, TableDefect::ImageNotMaximal]
        );
        assert_eq!(
            Table::check(K2, &raw(&[("0", "0"), ("0", "1")])),
            vec![TableDefect::DomainNotPrefixCode]
        );
        assert_eq!(Table::check(K2, &[]), vec![TableDefect::Empty]);
        assert!(matches!(
            Table::check(K2, &raw(&[("2", "0")]))[0],
            TableDefect::LetterOutOfRange(_)
        ));
    }

    #[test]
    fn apply_examples() {
        let t = table(2, &[("0", "1"), ("1", "0")]);
        assert_eq!(t.apply(&w("011")), Some(w("111")));
        assert_eq!(t.apply(&w("-")), None);
        let id = Table::identity(K2);
        for x in all_words(K2, 4) {
            assert_eq!(id.apply(&x), Some(x.clone()));
        }
    }

    #[test]
    fn extension_step_examples() {
        let t = table(2, &[("00", "10"), ("01", "11"), ("1", "0")]);
        assert_eq!(t.extension_step(), Some(table(2, &[("0", "1"), ("1", "0")])));
        assert_eq!(table(2, &[("0", "0"), ("1", "1")]).extension_step(), Some(Table::identity(K2)));
        assert_eq!(table(2, &[("0", "1"), ("1", "0")]).extension_step(), None);
    }

    #[test]
    fn maximum_extension_examples() {
        assert!(elem(2, &[("00", "00"), ("01", "01"), ("1", "1")]).is_identity());
        assert_eq!(elem(2, &[("0", "1"), ("1", "0")]).table(), &table(2, &[("0", "1"), ("1", "0")]));
        assert_eq!(
            elem(2, &[("00", "10"), ("01", "11"), ("10", "00"), ("11", "01")]).table(),
            &table(2, &[("0", "1"), ("1", "0")])
        );
    }

    #[test]
    fn restriction_examples() {
        assert_eq!(Table::identity(K2).restrict(&w("-")).unwrap(), table(2, &[("0", "0"), ("1", "1")]));
        let t = table(2, &[("0", "1"), ("1", "0")]);
        assert_eq!(t.restrict(&w("0")).unwrap(), table(2, &[("00", "10"), ("01", "11"), ("1", "0")]));
        let t3 = table(3, &[("0", "1"), ("1", "0"), ("2", "2")]);
        assert_eq!(t3.restrict(&w("00")), Err(Error::NotInDomainCode(w("00"))));
        assert!(t3.restrict(&w("0")).unwrap().len() == 5);
    }

    #[test]
    fn compose_examples() {
        let t = elem(2, &[("0", "1"), ("1", "0")]);
        assert!(t.compose(&t).unwrap().is_identity());
        let f = elem(2, &[("0", "10"), ("10", "11"), ("11", "0")]);
        let g = elem(2, &[("0", "11"), ("10", "0"), ("11", "10")]);
        let fg = f.compose(&g).unwrap();
        assert!(fg.is_identity());
        // Brute-force check of mutual inverseness on all words of length 4.
        for x in all_words(K2, 4).into_iter().filter(|x| x.len() == 4) {
            assert_eq!(f.apply(&g.apply(&x).unwrap()), Some(x.clone()));
        }
        let k3 = GroupElement::identity(Alphabet::new(3).unwrap());
        assert_eq!(t.compose(&k3), Err(Error::AlphabetMismatch { expected: 2, found: 3 }));
    }

    #[test]
    fn invert_examples() {
        let t = elem(2, &[("0", "1"), ("1", "0")]);
        assert_eq!(t.inverse(), t);
        assert!(GroupElement::identity(K2).inverse().is_identity());
        let f = elem(2, &[("0", "10"), ("10", "11"), ("11", "0")]);
        assert_eq!(f.inverse(), elem(2, &[("10", "0"), ("11", "10"), ("0", "11")]));
    }

    #[test]
    fn equality_is_canonical() {
        let a = elem(2, &[("1", "0"), ("0", "1")]);
        let b = elem(2, &[("0", "1"), ("1", "0")]);
        assert_eq!(a, b);
        assert_ne!(a, GroupElement::identity(K2));
        let r = a.table().restrict(&w("1")).unwrap();
        assert_eq!(r.maximum_extension(), a);
    }

    #[test]
    fn random_element_examples() {
        for seed in 0..5 {
            assert!(GroupElement::random(K2, 1, seed).unwrap().is_identity());
            assert_eq!(GroupElement::random(K2, 9, seed), GroupElement::random(K2, 9, seed));
        }
        let k3 = Alphabet::new(3).unwrap();
        assert_eq!(
            GroupElement::random(k3, 4, 1),
            Err(Error::ImpossibleCodeSize { size: 4, k: 3 })
        );
    }

    mod props {
        use super::*;
        use proptest::prelude::*;
        use rand::Rng;

        fn arb_table() -> impl Strategy<Value = Table> {
            (2usize..=4, 0usize..7, any::<u64>()).prop_map(|(k, d, seed)| {
                let k = Alphabet::new(k).unwrap();
                let leaves = 1 + d * (k.size() as usize - 1);
                random_table(k, leaves, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
            })
        }

        fn arb_pair_same_k() -> impl Strategy<Value = (GroupElement, GroupElement)> {
            (2usize..=4, 0usize..7, 0usize..7, any::<u64>()).prop_map(|(k, d1, d2, seed)| {
                let k = Alphabet::new(k).unwrap();
                let step = k.size() as usize - 1;
                (
                    GroupElement::random(k, 1 + d1 * step, seed).unwrap(),
                    GroupElement::random(k, 1 + d2 * step, seed ^ 0x9e37).unwrap(),
                )
            })
        }

        proptest! {
            #[test]
            fn right_ideal_law(t in arb_table(), suffix_seed in any::<u64>()) {
                let mut rng = ChaCha8Rng::seed_from_u64(suffix_seed);
                for (x, fx) in t.pairs() {
                    let len = rng.gen_range(0..=4);
                    let w = Word::from((0..len).map(|_| rng.gen_range(0..t.alphabet().size())).collect::<Vec<u8>>());
                    prop_assert_eq!(t.apply(&x.concat(&w)), Some(fx.concat(&w)));
                }
            }

            #[test]
            fn codes_balance(t in arb_table()) {
                prop_assert_eq!(t.domain_code().len(), t.image_code().len());
                prop_assert!(t.domain_code().is_maximal());
                prop_assert!(t.image_code().is_maximal());
            }

            #[test]
            fn maximum_extension_is_confluent(t in arb_table(), seed in any::<u64>()) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut current = t.clone();
                loop {
                    let mut c = current.extension_candidates();
                    if c.is_empty() { break; }
                    c.shuffle(&mut rng);
                    current = current.extend_at(&c[0]).unwrap();
                }
                let canonical = t.maximum_extension();
                prop_assert_eq!(&current, canonical.table());
                prop_assert!(canonical.table().extension_step().is_none());
            }

            #[test]
            fn restriction_then_extension_is_identity(t in arb_table(), pick in any::<prop::sample::Index>()) {
                let g = t.maximum_extension();
                let domain: Vec<&Word> = g.table().pairs().map(|(p, _)| p).collect();
                let p = pick.get(&domain);
                prop_assert_eq!(g.table().restrict(p).unwrap().maximum_extension(), g.clone());
            }

            #[test]
            fn composition_agrees_with_pointwise_application((g, h) in arb_pair_same_k()) {
                let hg = h.compose(&g).unwrap();
                let k = g.alphabet();
                for x in all_words(k, if k.size() == 2 { 6 } else { 4 }) {
                    // The composite may be defined on shorter words than g.
                    if let Some(y) = g.apply(&x).and_then(|gx| h.apply(&gx)) {
                        prop_assert_eq!(hg.apply(&x), Some(y));
                    }
                }
            }

            #[test]
            fn inverse_is_two_sided((g, _h) in arb_pair_same_k()) {
                prop_assert!(g.inverse().compose(&g).unwrap().is_identity());
                prop_assert!(g.compose(&g.inverse()).unwrap().is_identity());
                let id = GroupElement::identity(g.alphabet());
                prop_assert_eq!(id.compose(&g).unwrap(), g.clone());
                prop_assert_eq!(g.compose(&id).unwrap(), g);
            }
        }
    }
}
