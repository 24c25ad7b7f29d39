//! Embeddings between the groups `G_{k,1}`.
//!
//! * [`iota`] embeds `G_{2,1}` into `G_{k,1}` for every `k`: a binary table
//!   `{(p_r, q_r)}` becomes `{(a_0, a_0)} ∪ {(a_1 p_r, a_1 q_r)}` plus, for
//!   each extra letter `a_i`, the pairs of `*a_i`-successors
//!   `((a_1 p_r)'_i, (a_1 q_r)'_i)`. The image lies in the subgroup that
//!   preserves `{a_0,a_1}^*` and each `{a_0,a_1}^*·a_i`, and fixes
//!   `a_0·A_k^*` pointwise.
//! * [`theta`] is the binary special case: `G_{2,1}` onto the partial fixator
//!   of `a_0·{a_0,a_1}^*`.
//! * [`higman_embed`] embeds `G_{K,1}` into `G_{k,1}` when
//!   `K = 1 + (k-1)·d`, by substituting each letter of `A_K` with a word of a
//!   maximal prefix code of size `K` over `A_k`.
//! * [`embed_any`] chains these into an embedding `G_{i,1} → G_{j,1}` for
//!   every pair `i, j`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::successor::succ_all;
use crate::tables::{GroupElement, Table};
use crate::words::{code_size_possible, Alphabet, PrefixCode, Word};

fn require_binary(k: Alphabet) -> Result<()> {
    if k == Alphabet::BINARY {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch { expected: 2, found: k.size() })
    }
}

/// `{a_0} ∪ a_1·P`.
fn shifted_code(code: &PrefixCode) -> PrefixCode {
    let words = std::iter::once(Word::letter(0)).chain(code.iter().map(|p| p.prepend(1)));
    PrefixCode::new(Alphabet::BINARY, words).expect("shifted maximal code")
}

/// The ι table of a binary table, before any extension. Over `k = 2` there
/// are no successor pairs and this is the θ table.
pub fn iota_table(g: &Table, k: Alphabet) -> Result<Table> {
    require_binary(g.alphabet())?;
    let domain = shifted_code(&g.domain_code());
    let image = shifted_code(&g.image_code());
    let mut map = BTreeMap::new();
    map.insert(Word::letter(0), Word::letter(0));
    for (p, q) in g.pairs() {
        map.insert(p.prepend(1), q.prepend(1));
    }
    for i in 2..k.size() {
        let dom_succ = succ_all(&domain, i)?;
        let img_succ = succ_all(&image, i)?;
        for (p, q) in g.pairs() {
            map.insert(dom_succ[&p.prepend(1)].clone(), img_succ[&q.prepend(1)].clone());
        }
    }
    Ok(Table::from_map(k, map))
}

/// `ι(g)` in canonical form.
pub fn iota(g: &GroupElement, k: Alphabet) -> Result<GroupElement> {
    Ok(iota_table(g.table(), k)?.maximum_extension())
}

/// `θ(g)`: `{(a_0, a_0)} ∪ {(a_1 x, a_1 y)}`, canonicalized.
pub fn theta(g: &GroupElement) -> Result<GroupElement> {
    iota(g, Alphabet::BINARY)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum WordClass {
    Binary,
    Tail(u8),
    Other,
}

fn classify(w: &Word) -> WordClass {
    match w.letters().split_last() {
        None => WordClass::Binary,
        Some((&last, init)) if init.iter().all(|&a| a < 2) => {
            if last < 2 {
                WordClass::Binary
            } else {
                WordClass::Tail(last)
            }
        }
        Some(_) => WordClass::Other,
    }
}

/// Membership in `G_{k,1}(0,1|2|...|k-1)`: every table word lies in
/// `{a_0,a_1}^*` or some `{a_0,a_1}^*·a_i`, and each pair stays within one
/// class. By the right-ideal law the pairwise test covers every point.
pub fn in_mixed_subgroup(f: &GroupElement) -> bool {
    f.table().pairs().all(|(p, q)| {
        let class = classify(p);
        class != WordClass::Other && class == classify(q)
    })
}

/// Whether `f` partially fixes the right ideal `w·A^*`, i.e. `f(x) = x` for
/// every `x ∈ w·A^* ∩ Dom(f) ∩ Im(f)`.
///
/// Every such `x` is `p·u` for a table pair `(p, q)` with `p` prefix-comparable
/// to `w`, and `f(x) = q·u`; long enough `x` always lie in `Im(f)`. So the
/// condition holds iff every pair whose domain word is comparable with `w` is
/// a fixed pair.
pub fn pfix_check(f: &GroupElement, w: &Word) -> bool {
    f.table()
        .pairs()
        .filter(|(p, _)| p.is_prefix_of(w) || w.is_prefix_of(p))
        .all(|(p, q)| p == q)
}

/// [`pfix_check`] decided by enumerating every `x ∈ w·A^*` with
/// `|x| <= depth`.
pub fn pfix_check_bounded(f: &GroupElement, w: &Word, depth: usize) -> bool {
    let k = f.alphabet();
    let inverse = f.inverse();
    let mut layer = vec![w.clone()];
    while !layer.is_empty() {
        for x in &layer {
            if let Some(fx) = f.apply(x) {
                if inverse.apply(x).is_some() && &fx != x {
                    return false;
                }
            }
        }
        if layer[0].len() >= depth {
            break;
        }
        layer = layer.iter().flat_map(|x| k.letters().map(move |a| x.child(a))).collect();
    }
    true
}

/// The depth bound `|w| + 2·maxlen + 1` for [`pfix_check_bounded`].
pub fn pfix_depth_bound(f: &GroupElement, w: &Word) -> usize {
    w.len() + 2 * f.table().max_word_len() + 1
}

/// A bijection from `A_K` onto a maximal prefix code of size `K` over `A_k`;
/// letter `a_j` is encoded by `code[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeEncoding {
    source: Alphabet,
    target: Alphabet,
    code: Vec<Word>,
}

impl CodeEncoding {
    pub fn new(source: Alphabet, target: Alphabet, code: Vec<Word>) -> Result<Self> {
        let size = usize::from(source.size());
        if code.len() != size || !code_size_possible(target, size) {
            return Err(Error::ImpossibleCodeSize { size, k: target.size() });
        }
        let as_code = PrefixCode::new(target, code.iter().cloned())?;
        if !as_code.is_maximal() {
            return Err(Error::NotAPrefixCode(format!("{as_code} is not maximal")));
        }
        Ok(CodeEncoding { source, target, code })
    }

    /// The right-comb code: start from `A_k` and split the dictionary-largest
    /// member until there are `K` members, listed in dictionary order.
    pub fn canonical(source: Alphabet, target: Alphabet) -> Result<Self> {
        let size = usize::from(source.size());
        if size < usize::from(target.size()) || !code_size_possible(target, size) {
            return Err(Error::ImpossibleCodeSize { size, k: target.size() });
        }
        let mut code = PrefixCode::alphabet_code(target);
        while code.len() < size {
            let last = code.iter().next_back().expect("nonempty").clone();
            code = code.restrict(&last)?;
        }
        Ok(CodeEncoding { source, target, code: code.iter().cloned().collect() })
    }

    pub fn source(&self) -> Alphabet {
        self.source
    }

    pub fn target(&self) -> Alphabet {
        self.target
    }

    pub fn code(&self) -> &[Word] {
        &self.code
    }

    /// Number of interior vertices `d` in `K = 1 + (k-1)·d`.
    pub fn interior_vertices(&self) -> usize {
        (self.code.len() - 1) / (usize::from(self.target.size()) - 1)
    }

    /// Letterwise substitution.
    pub fn encode(&self, w: &Word) -> Word {
        let letters: Vec<u8> =
            w.letters().iter().flat_map(|&a| self.code[usize::from(a)].letters().iter().copied()).collect();
        Word::from(letters)
    }
}

/// `canonical_code(K, k)`.
pub fn canonical_code(source_size: usize, target: Alphabet) -> Result<CodeEncoding> {
    let source = Alphabet::new(source_size)?;
    CodeEncoding::canonical(source, target)
}

/// Higman's embedding: encode every domain and image word, then
/// canonicalize.
pub fn higman_embed(g: &GroupElement, enc: &CodeEncoding) -> Result<GroupElement> {
    if g.alphabet() != enc.source {
        return Err(Error::AlphabetMismatch { expected: enc.source.size(), found: g.alphabet().size() });
    }
    let pairs = g.table().pairs().map(|(p, q)| (enc.encode(p), enc.encode(q)));
    Ok(Table::new(enc.target, pairs)?.maximum_extension())
}

/// How [`embed_any`] gets from `G_{i,1}` to `G_{j,1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbedRoute {
    Identity,
    Higman,
    Iota,
    HigmanThenIota,
}

impl EmbedRoute {
    pub fn choose(from: Alphabet, to: Alphabet) -> EmbedRoute {
        match (from.size(), to.size()) {
            (i, j) if i == j => EmbedRoute::Identity,
            (_, 2) => EmbedRoute::Higman,
            (2, _) => EmbedRoute::Iota,
            _ => EmbedRoute::HigmanThenIota,
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            EmbedRoute::Identity => "identity",
            EmbedRoute::Higman => "higman",
            EmbedRoute::Iota => "iota",
            EmbedRoute::HigmanThenIota => "higman+iota",
        }
    }
}

/// An embedding `G_{i,1} → G_{j,1}` for any `i, j`, routed through `G_{2,1}`
/// whenever the alphabets differ.
pub fn embed_any(g: &GroupElement, to: Alphabet) -> Result<GroupElement> {
    let from = g.alphabet();
    match EmbedRoute::choose(from, to) {
        EmbedRoute::Identity => Ok(g.clone()),
        EmbedRoute::Higman => higman_embed(g, &CodeEncoding::canonical(from, to)?),
        EmbedRoute::Iota => iota(g, to),
        EmbedRoute::HigmanThenIota => {
            let binary = higman_embed(g, &CodeEncoding::canonical(from, Alphabet::BINARY)?)?;
            iota(&binary, to)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn k(n: usize) -> Alphabet {
        Alphabet::new(n).unwrap()
    }

    fn elem(n: usize, pairs: &[(&str, &str)]) -> GroupElement {
        GroupElement::from_pairs(k(n), pairs.iter().map(|(p, q)| (w(p), w(q)))).unwrap()
    }

    fn transposition() -> GroupElement {
        elem(2, &[("0", "1"), ("1", "0")])
    }

    /// Cross-check of subgroup membership against the block shape of its
    /// tables: binary pairs `(u_r, v_r)` between maximal binary codes, and for
    /// each `a_i` pairs `(p·a_i, q·a_i)` with `{p} = spref(U)`, `{q} = spref(V)`.
    fn has_mixed_block_shape(f: &GroupElement) -> bool {
        let kk = f.alphabet();
        let mut u = Vec::new();
        let mut v = Vec::new();
        let mut tails: BTreeMap<u8, (BTreeSet<Word>, BTreeSet<Word>)> = BTreeMap::new();
        for (p, q) in f.table().pairs() {
            match (classify(p), classify(q)) {
                (WordClass::Binary, WordClass::Binary) => {
                    u.push(p.clone());
                    v.push(q.clone());
                }
                (WordClass::Tail(i), WordClass::Tail(j)) if i == j => {
                    let e = tails.entry(i).or_default();
                    e.0.insert(p.parent().unwrap());
                    e.1.insert(q.parent().unwrap());
                }
                _ => return false,
            }
        }
        let (Ok(u), Ok(v)) = (PrefixCode::maximal(Alphabet::BINARY, u), PrefixCode::maximal(Alphabet::BINARY, v)) else {
            return false;
        };
        (2..kk.size()).all(|i| {
            let (p, q) = tails.remove(&i).unwrap_or_default();
            p == u.spref() && q == v.spref()
        }) && tails.is_empty()
    }

    #[test]
    fn iota_examples() {
        for n in 3..=5 {
            assert!(iota(&GroupElement::identity(Alphabet::BINARY), k(n)).unwrap().is_identity());
        }
        let t = iota(&transposition(), k(3)).unwrap();
        assert_eq!(t, elem(3, &[("0", "0"), ("10", "11"), ("11", "10"), ("2", "12"), ("12", "2")]));
        assert!(in_mixed_subgroup(&t));
        let g = elem(2, &[("0", "10"), ("10", "0"), ("11", "11")]);
        assert_eq!(
            iota(&g, k(3)).unwrap(),
            elem(
                3,
                &[("0", "0"), ("10", "110"), ("110", "10"), ("111", "111"), ("2", "12"), ("12", "2"), ("112", "112")]
            )
        );
        assert_eq!(
            iota(&elem(3, &[("0", "1"), ("1", "0"), ("2", "2")]), k(4)),
            Err(Error::AlphabetMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn mixed_subgroup_examples() {
        for n in 3..=5 {
            assert!(in_mixed_subgroup(&GroupElement::identity(k(n))));
        }
        let cyc = elem(3, &[("0", "1"), ("1", "2"), ("2", "0")]);
        assert!(!in_mixed_subgroup(&cyc));
        assert!(!has_mixed_block_shape(&cyc));
        let t = iota(&transposition(), k(4)).unwrap();
        assert!(in_mixed_subgroup(&t));
        assert!(has_mixed_block_shape(&t));
    }

    #[test]
    fn mixed_subgroup_agrees_with_block_shape() {
        for seed in 0..200u64 {
            let n = 3 + (seed % 3) as usize;
            let g = GroupElement::random(Alphabet::BINARY, 1 + (seed % 9) as usize, seed).unwrap();
            let image = iota(&g, k(n)).unwrap();
            assert!(in_mixed_subgroup(&image));
            // Restricting keeps the element; the shape must survive too.
            let p = image.table().pairs().next().unwrap().0.clone();
            let restricted = image.table().restrict(&p).unwrap();
            assert_eq!(restricted.maximum_extension(), image);
            let leaves = 1 + 2 * (seed % 5) as usize;
            let other = GroupElement::random(k(3), leaves, seed).unwrap();
            if n == 3 {
                assert_eq!(in_mixed_subgroup(&other), has_mixed_block_shape(&other));
            }
        }
    }

    #[test]
    fn theta_examples() {
        assert!(theta(&GroupElement::identity(Alphabet::BINARY)).unwrap().is_identity());
        assert_eq!(theta(&transposition()).unwrap(), elem(2, &[("0", "0"), ("10", "11"), ("11", "10")]));
        let g = elem(2, &[("00", "0"), ("01", "10"), ("1", "11")]);
        assert_eq!(
            theta(&g).unwrap(),
            elem(2, &[("0", "0"), ("100", "10"), ("101", "110"), ("11", "111")])
        );
    }

    #[test]
    fn pfix_examples() {
        for seed in 0..20 {
            let g = GroupElement::random(Alphabet::BINARY, 7, seed).unwrap();
            assert!(pfix_check(&theta(&g).unwrap(), &w("0")));
        }
        for word in ["-", "0", "1", "0110"] {
            assert!(pfix_check(&GroupElement::identity(Alphabet::BINARY), &w(word)));
        }
        assert!(!pfix_check(&transposition(), &w("0")));
        assert!(!pfix_check_bounded(&transposition(), &w("0"), 2));
    }

    #[test]
    fn pfix_structural_matches_bounded_enumeration() {
        for seed in 0..300u64 {
            let n = 2 + (seed % 3) as usize;
            let step = n - 1;
            let g = GroupElement::random(k(n), 1 + step * (seed % 4) as usize, seed).unwrap();
            let g = if seed % 2 == 0 && n == 2 { theta(&g).unwrap() } else { g };
            for word in ["-", "0", "1", "00", "01", "10"] {
                let word = w(word);
                let depth = pfix_depth_bound(&g, &word).min(if n == 2 { 14 } else { 8 });
                let deep = pfix_depth_bound(&g, &word) + 2;
                let structural = pfix_check(&g, &word);
                assert_eq!(structural, pfix_check_bounded(&g, &word, depth), "seed {seed}");
                if n == 2 && deep <= 16 {
                    assert_eq!(structural, pfix_check_bounded(&g, &word, deep), "seed {seed}");
                }
            }
        }
    }

    #[test]
    fn canonical_code_examples() {
        assert_eq!(canonical_code(3, Alphabet::BINARY).unwrap().code(), &[w("0"), w("10"), w("11")]);
        assert_eq!(canonical_code(2, Alphabet::BINARY).unwrap().code(), &[w("0"), w("1")]);
        assert_eq!(canonical_code(4, k(3)), Err(Error::ImpossibleCodeSize { size: 4, k: 3 }));
        assert_eq!(canonical_code(2, k(3)), Err(Error::ImpossibleCodeSize { size: 2, k: 3 }));
        assert_eq!(
            canonical_code(4, Alphabet::BINARY).unwrap().code(),
            &[w("0"), w("10"), w("110"), w("111")]
        );
        let c = canonical_code(7, k(3)).unwrap();
        assert_eq!(c.code(), &[w("0"), w("1"), w("20"), w("21"), w("220"), w("221"), w("222")]);
        assert_eq!(c.interior_vertices(), 3);
    }

    #[test]
    fn higman_examples() {
        let enc = canonical_code(3, Alphabet::BINARY).unwrap();
        let cyc = elem(3, &[("0", "1"), ("1", "2"), ("2", "0")]);
        assert_eq!(higman_embed(&cyc, &enc).unwrap(), elem(2, &[("0", "10"), ("10", "11"), ("11", "0")]));
        assert!(higman_embed(&GroupElement::identity(k(3)), &enc).unwrap().is_identity());
        let swap = elem(3, &[("0", "0"), ("1", "2"), ("2", "1")]);
        assert_eq!(higman_embed(&swap, &enc).unwrap(), elem(2, &[("0", "0"), ("10", "11"), ("11", "10")]));
        assert!(matches!(higman_embed(&transposition(), &enc), Err(Error::AlphabetMismatch { .. })));
        // A user-supplied code works as well.
        let custom = CodeEncoding::new(k(3), Alphabet::BINARY, vec![w("11"), w("0"), w("10")]).unwrap();
        assert!(higman_embed(&cyc, &custom).is_ok());
        assert!(CodeEncoding::new(k(3), Alphabet::BINARY, vec![w("11"), w("0"), w("1")]).is_err());
        assert!(CodeEncoding::new(k(3), Alphabet::BINARY, vec![w("11"), w("0")]).is_err());
    }

    #[test]
    fn embed_any_examples() {
        let g = GroupElement::random(Alphabet::BINARY, 5, 3).unwrap();
        assert_eq!(embed_any(&g, k(3)).unwrap(), iota(&g, k(3)).unwrap());
        let cyc = elem(3, &[("0", "1"), ("1", "2"), ("2", "0")]);
        assert_eq!(embed_any(&cyc, k(3)).unwrap(), cyc);
        let g4 = GroupElement::random(k(4), 7, 11).unwrap();
        let enc = CodeEncoding::new(k(4), Alphabet::BINARY, vec![w("0"), w("10"), w("110"), w("111")]).unwrap();
        assert_eq!(
            embed_any(&g4, k(3)).unwrap(),
            iota(&higman_embed(&g4, &enc).unwrap(), k(3)).unwrap()
        );
        assert_eq!(EmbedRoute::choose(k(4), k(3)), EmbedRoute::HigmanThenIota);
        assert_eq!(EmbedRoute::choose(k(5), k(2)), EmbedRoute::Higman);
    }

    #[test]
    fn iota_fixes_the_a0_subtree() {
        for seed in 0..50u64 {
            let g = GroupElement::random(Alphabet::BINARY, 1 + (seed % 13) as usize, seed).unwrap();
            let image = iota(&g, k(4)).unwrap();
            assert!(pfix_check(&image, &w("0")));
            assert_eq!(image.apply(&w("0312")), Some(w("0312")));
        }
    }
}
