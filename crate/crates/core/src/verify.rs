//! Seeded verification harness.
//!
//! Each suite mixes an exhaustive part (fixed, seed-independent) with a
//! number of random trials. Every trial draws from its own generator, seeded
//! from `(seed, suite, trial)`, so a failure can be replayed from the seed
//! recorded in its report.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embeddings::{
    canonical_code, embed_any, higman_embed, in_mixed_subgroup, iota, iota_table, pfix_check, theta,
};
use crate::format;
use crate::successor::{succ_formula, succ_iterative, SuccessorQuery};
use crate::tables::{random_table, GroupElement, Table};
use crate::words::{enumerate_maximal_codes, random_code, Alphabet, PrefixCode, Word};

/// The successor implementation under test.
pub type SuccessorFn = fn(&SuccessorQuery) -> Option<Word>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    SuccessorFormula,
    SuccessorImage,
    SuccessorRestriction,
    IotaHomomorphism,
    IotaCommutation,
    IotaInjectiveSubgroup,
    GroupAxioms,
    Higman,
    EmbedAny,
    ThetaPfix,
    Serialization,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::SuccessorFormula,
        Suite::SuccessorImage,
        Suite::SuccessorRestriction,
        Suite::IotaHomomorphism,
        Suite::IotaCommutation,
        Suite::IotaInjectiveSubgroup,
        Suite::GroupAxioms,
        Suite::Higman,
        Suite::EmbedAny,
        Suite::ThetaPfix,
        Suite::Serialization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::SuccessorFormula => "successor-formula",
            Suite::SuccessorImage => "successor-image",
            Suite::SuccessorRestriction => "successor-restriction",
            Suite::IotaHomomorphism => "iota-homomorphism",
            Suite::IotaCommutation => "iota-commutation",
            Suite::IotaInjectiveSubgroup => "iota-injective-subgroup",
            Suite::GroupAxioms => "group-axioms",
            Suite::Higman => "higman",
            Suite::EmbedAny => "embed-any",
            Suite::ThetaPfix => "theta-pfix",
            Suite::Serialization => "serialization",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    fn index(self) -> u64 {
        Suite::ALL.iter().position(|&s| s == self).unwrap() as u64
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    /// Trial seed for random cases; `None` for exhaustive ones.
    pub seed: Option<u64>,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub exhaustive_cases: usize,
    pub trials: usize,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Formats the deterministic part of the report; timing is left out so
/// identical runs print identical text.
impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} exhaustive={}", self.suite.name(), self.exhaustive_cases)?;
        if self.trials == 0 {
            write!(f, " skipped-random, exhaustive-only")?;
        } else {
            write!(f, " random={}", self.trials)?;
        }
        write!(f, " failures={}", self.failures.len())?;
        for failure in self.failures.iter().take(5) {
            match failure.seed {
                Some(seed) => write!(f, "\n  seed={seed}: {}", failure.detail)?,
                None => write!(f, "\n  exhaustive: {}", failure.detail)?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn elapsed(&self) -> Duration {
        self.suites.iter().map(|s| s.elapsed).sum()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verify seed={}", self.seed)?;
        for s in &self.suites {
            writeln!(f, "{s}")?;
        }
        let failed = self.suites.iter().filter(|s| !s.passed()).count();
        write!(f, "{} suites, {failed} failed", self.suites.len())
    }
}

/// Runs suites; `successor` is the formula under test (normally
/// [`succ_formula`]).
#[derive(Debug, Clone, Copy)]
pub struct Harness {
    pub seed: u64,
    pub successor: SuccessorFn,
}

impl Default for Harness {
    fn default() -> Self {
        Harness { seed: 0, successor: succ_formula }
    }
}

fn mix(mut z: u64) -> u64 {
    // splitmix64 finalizer
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn k(n: usize) -> Alphabet {
    Alphabet::new(n).expect("alphabet in range")
}

/// Random element over `A_k` built from codes of at most 13 leaves.
fn random_element(alphabet: Alphabet, rng: &mut ChaCha8Rng) -> GroupElement {
    random_raw_table(alphabet, rng).maximum_extension()
}

fn random_raw_table(alphabet: Alphabet, rng: &mut ChaCha8Rng) -> Table {
    let step = usize::from(alphabet.size()) - 1;
    let d = rng.gen_range(0..=12 / step);
    random_table(alphabet, 1 + d * step, rng).expect("possible size")
}

fn words_up_to(alphabet: Alphabet, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        layer = layer.iter().flat_map(|x| alphabet.letters().map(move |a| x.child(a))).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn small_binary_codes() -> Vec<PrefixCode> {
    enumerate_maximal_codes(Alphabet::BINARY, 6).into_iter().filter(|p| p.len() >= 2).collect()
}

/// Canonical binary elements whose tables have at most three pairs.
pub fn small_binary_elements() -> Vec<GroupElement> {
    let codes = enumerate_maximal_codes(Alphabet::BINARY, 3);
    let mut out = BTreeSet::new();
    for dom in &codes {
        for img in codes.iter().filter(|c| c.len() == dom.len()) {
            let mut image: Vec<Word> = img.iter().cloned().collect();
            image.sort();
            for perm in permutations(&image) {
                let t = Table::new(Alphabet::BINARY, dom.iter().cloned().zip(perm)).expect("valid");
                out.insert(t.maximum_extension());
            }
        }
    }
    out.into_iter().collect()
}

fn permutations(items: &[Word]) -> Vec<Vec<Word>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

struct Run {
    suite: Suite,
    seed: u64,
    exhaustive_cases: usize,
    trials: usize,
    failures: Vec<Failure>,
    start: Instant,
}

impl Run {
    fn new(suite: Suite, seed: u64) -> Self {
        Run { suite, seed, exhaustive_cases: 0, trials: 0, failures: Vec::new(), start: Instant::now() }
    }

    fn exhaustive(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.exhaustive_cases += 1;
        if !ok {
            self.failures.push(Failure { seed: None, detail: detail() });
        }
    }

    /// Runs one random trial; the closure reports a failure as `Err`.
    fn trial(&mut self, index: u64, body: impl FnOnce(&mut ChaCha8Rng) -> Result<(), String>) {
        let trial_seed = mix(mix(self.seed ^ mix(self.suite.index())) ^ index);
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
        self.trials += 1;
        if let Err(detail) = body(&mut rng) {
            self.failures.push(Failure { seed: Some(trial_seed), detail });
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            suite: self.suite,
            exhaustive_cases: self.exhaustive_cases,
            trials: self.trials,
            failures: self.failures,
            elapsed: self.start.elapsed(),
        }
    }
}

fn check(ok: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

impl Harness {
    pub fn new(seed: u64) -> Self {
        Harness { seed, ..Harness::default() }
    }

    pub fn run_all(&self, trials: usize) -> VerifyReport {
        self.run(&Suite::ALL, trials)
    }

    pub fn run(&self, suites: &[Suite], trials: usize) -> VerifyReport {
        VerifyReport { seed: self.seed, suites: suites.iter().map(|&s| self.run_suite(s, trials)).collect() }
    }

    pub fn run_suite(&self, suite: Suite, trials: usize) -> SuiteReport {
        let mut run = Run::new(suite, self.seed);
        match suite {
            Suite::SuccessorFormula => self.successor_formula(&mut run, trials),
            Suite::SuccessorImage => self.successor_image(&mut run, trials),
            Suite::SuccessorRestriction => self.successor_restriction(&mut run, trials),
            Suite::IotaHomomorphism => iota_homomorphism(&mut run, trials),
            Suite::IotaCommutation => iota_commutation(&mut run, trials),
            Suite::IotaInjectiveSubgroup => iota_injective_subgroup(&mut run, trials),
            Suite::GroupAxioms => group_axioms(&mut run, trials),
            Suite::Higman => higman(&mut run, trials),
            Suite::EmbedAny => embed_any_suite(&mut run, trials),
            Suite::ThetaPfix => theta_pfix(&mut run, trials),
            Suite::Serialization => serialization(&mut run, trials),
        }
        run.finish()
    }

    fn successor(&self, code: &PrefixCode, p: &Word, i: u8) -> Option<Word> {
        (self.successor)(&SuccessorQuery::new(code.clone(), p.clone(), i).expect("valid query"))
    }

    /// Mismatches between the formula and the recurrence over one code.
    fn formula_mismatches(&self, code: &PrefixCode) -> Vec<String> {
        let mut out = Vec::new();
        for i in [2, 3] {
            for p in code.iter() {
                let q = SuccessorQuery::new(code.clone(), p.clone(), i).expect("valid query");
                let (fast, slow) = ((self.successor)(&q), succ_iterative(&q));
                if fast != slow {
                    out.push(format!("code {code}, member {p}, a_{i}: formula {fast:?} vs recurrence {slow:?}"));
                }
            }
        }
        out
    }

    fn successor_formula(&self, run: &mut Run, trials: usize) {
        for code in small_binary_codes() {
            let bad = self.formula_mismatches(&code);
            run.exhaustive(bad.is_empty(), || bad.join("; "));
        }
        for t in 0..trials as u64 {
            run.trial(t, |rng| {
                let leaves = rng.gen_range(2..=12);
                let code = random_code(Alphabet::BINARY, leaves, rng).expect("size");
                let bad = self.formula_mismatches(&code);
                check(bad.is_empty(), || bad.join("; "))
            });
        }
    }

    fn image_mismatch(&self, code: &PrefixCode) -> Option<String> {
        for i in [2, 3] {
            let images: Vec<Word> = code.iter().filter_map(|p| self.successor(code, p, i)).collect();
            let distinct: BTreeSet<Word> = images.iter().cloned().collect();
            let expected: BTreeSet<Word> = code.spref().iter().map(|x| x.child(i)).collect();
            if distinct.len() != images.len() || distinct != expected {
                return Some(format!("code {code}, a_{i}: successor images differ from spref(P)·a_{i}"));
            }
        }
        None
    }

    fn successor_image(&self, run: &mut Run, trials: usize) {
        for code in small_binary_codes() {
            let bad = self.image_mismatch(&code);
            run.exhaustive(bad.is_none(), || bad.unwrap_or_default());
        }
        for t in 0..trials as u64 {
            run.trial(t, |rng| {
                let code = random_code(Alphabet::BINARY, rng.gen_range(2..=12), rng).expect("size");
                self.image_mismatch(&code).map_or(Ok(()), Err)
            });
        }
    }

    /// Successors after the one-step restriction of `code` at `pr`.
    fn restriction_mismatch(&self, code: &PrefixCode, pr: &Word) -> Option<String> {
        let restricted = code.restrict(pr).expect("member");
        let (p0, p1) = (pr.child(0), pr.child(1));
        let in_a0_star = pr.letters().iter().all(|&a| a == 0);
        for i in [2, 3] {
            let after0 = self.successor(&restricted, &p0, i);
            let after1 = self.successor(&restricted, &p1, i);
            let before = self.successor(code, pr, i);
            let ok = if in_a0_star {
                before.is_none() && after0.is_none() && after1 == Some(pr.child(i))
            } else {
                after1 == Some(pr.child(i)) && after0 == before
            };
            if !ok {
                return Some(format!(
                    "code {code}, p_r = {pr}, a_{i}: got ({after0:?}, {after1:?}) from {before:?}"
                ));
            }
            let moved = code
                .iter()
                .filter(|p| *p != pr)
                .find(|p| self.successor(code, p, i) != self.successor(&restricted, p, i));
            if let Some(p) = moved {
                return Some(format!("code {code}, p_r = {pr}, a_{i}: successor of untouched {p} changed"));
            }
        }
        None
    }

    fn successor_restriction(&self, run: &mut Run, trials: usize) {
        for code in small_binary_codes() {
            for pr in code.iter() {
                let bad = self.restriction_mismatch(&code, pr);
                run.exhaustive(bad.is_none(), || bad.unwrap_or_default());
            }
        }
        for t in 0..trials as u64 {
            run.trial(t, |rng| {
                let code = random_code(Alphabet::BINARY, rng.gen_range(2..=12), rng).expect("size");
                let members: Vec<&Word> = code.iter().collect();
                let pr = members[rng.gen_range(0..members.len())];
                self.restriction_mismatch(&code, pr).map_or(Ok(()), Err)
            });
        }
    }
}

fn iota_hom_failure(g: &GroupElement, h: &GroupElement, target: Alphabet) -> Option<String> {
    let attempt = || -> crate::Result<(GroupElement, GroupElement)> {
        let lhs = iota(&h.compose(g)?, target)?;
        let rhs = iota(h, target)?.compose(&iota(g, target)?)?;
        Ok((lhs, rhs))
    };
    let (lhs, rhs) = match attempt() {
        Ok(pair) => pair,
        Err(e) => return Some(e.to_string()),
    };
    (lhs != rhs).then(|| {
        format!(
            "k={target}: iota(h∘g) != iota(h)∘iota(g) for g = {}, h = {}",
            format::serialize(g).replace('\n', "; "),
            format::serialize(h).replace('\n', "; ")
        )
    })
}

fn iota_homomorphism(run: &mut Run, trials: usize) {
    let small = small_binary_elements();
    for n in 3..=5 {
        for g in &small {
            for h in &small {
                let bad = iota_hom_failure(g, h, k(n));
                run.exhaustive(bad.is_none(), || bad.unwrap_or_default());
            }
        }
    }
    let mut index = 0;
    for n in 3..=5 {
        for _ in 0..trials {
            run.trial(index, |rng| {
                let g = random_element(Alphabet::BINARY, rng);
                let h = random_element(Alphabet::BINARY, rng);
                iota_hom_failure(&g, &h, k(n)).map_or(Ok(()), Err)
            });
            index += 1;
        }
    }
}

fn iota_commutation(run: &mut Run, trials: usize) {
    let mut index = 0;
    for n in 3..=5 {
        for _ in 0..trials {
            run.trial(index, |rng| {
                let g = random_element(Alphabet::BINARY, rng);
                let domain: Vec<&Word> = g.table().pairs().map(|(p, _)| p).collect();
                let pr = domain[rng.gen_range(0..domain.len())].clone();
                let lhs = iota_table(&g.table().restrict(&pr).expect("member"), k(n)).expect("binary");
                let rhs = iota_table(g.table(), k(n)).expect("binary").restrict(&pr.prepend(1)).expect("member");
                check(lhs == rhs, || {
                    format!("k={n}: iota(restr at {pr}) differs from restr at 1{pr} of iota, g = {}",
                        format::serialize(&g).replace('\n', "; "))
                })
            });
            index += 1;
        }
    }
}

fn iota_injective_subgroup(run: &mut Run, trials: usize) {
    // One generator for the sample, so the set of distinct elements is fixed
    // by the seed; failures report the seed of the sample.
    if trials == 0 {
        return;
    }
    let mut failures = Vec::new();
    run.trial(0, |rng| {
        let mut sample = BTreeSet::new();
        let mut attempts = 0;
        while sample.len() < trials && attempts < 50 * trials {
            sample.insert(random_element(Alphabet::BINARY, rng));
            attempts += 1;
        }
        if sample.len() < trials {
            failures.push(format!("only {} distinct elements sampled", sample.len()));
        }
        for n in 3..=5 {
            let target = k(n);
            let tails = words_up_to(target, 5);
            let mut images = HashSet::new();
            for g in &sample {
                let image = iota(g, target).expect("binary");
                if !in_mixed_subgroup(&image) {
                    failures.push(format!("k={n}: image of {} not in mixed subgroup", format::serialize(g).replace('\n', "; ")));
                }
                for w in &tails {
                    let x = w.prepend(0);
                    if image.apply(&x).as_ref() != Some(&x) {
                        failures.push(format!("k={n}: iota(g) moves {x}"));
                        break;
                    }
                }
                images.insert(image);
            }
            if images.len() != sample.len() {
                failures.push(format!("k={n}: {} images for {} elements", images.len(), sample.len()));
            }
        }
        check(failures.is_empty(), || failures.join("; "))
    });
    // Report the sample size as the trial count.
    run.trials = trials;
}

fn group_axioms(run: &mut Run, trials: usize) {
    let mut index = 0;
    for n in 2..=4 {
        for _ in 0..trials {
            run.trial(index, |rng| {
                let (f, g, h) = (random_element(k(n), rng), random_element(k(n), rng), random_element(k(n), rng));
                let id = GroupElement::identity(k(n));
                let assoc = h.compose(&g).and_then(|hg| hg.compose(&f)) == g.compose(&f).and_then(|gf| h.compose(&gf));
                check(assoc, || format!("k={n}: associativity"))?;
                check(id.compose(&g).as_ref() == Ok(&g) && g.compose(&id).as_ref() == Ok(&g), || {
                    format!("k={n}: identity law")
                })?;
                let inv = g.inverse();
                check(
                    inv.compose(&g).map(|x| x.is_identity()) == Ok(true)
                        && g.compose(&inv).map(|x| x.is_identity()) == Ok(true),
                    || format!("k={n}: inverse law"),
                )
            });
            index += 1;
        }
    }
    for _ in 0..trials {
        run.trial(index, |rng| {
            let n = rng.gen_range(2..=4);
            let table = random_raw_table(k(n), rng);
            let mut results = Vec::new();
            for _ in 0..2 {
                let mut current = table.clone();
                loop {
                    let mut candidates = current.extension_candidates();
                    if candidates.is_empty() {
                        break;
                    }
                    candidates.shuffle(rng);
                    current = current.extend_at(&candidates[0]).expect("candidate");
                }
                results.push(current);
            }
            let canonical = table.maximum_extension();
            check(results[0] == results[1] && &results[0] == canonical.table(), || {
                format!("k={n}: extension orders disagree on {}", format::write_table(&table).replace('\n', "; "))
            })
        });
        index += 1;
    }
}

fn higman(run: &mut Run, trials: usize) {
    for target in 2..=5usize {
        for source in 2..=10usize {
            let possible = source >= target && (source - 1) % (target - 1) == 0;
            match canonical_code(source, k(target)) {
                Ok(enc) => {
                    let d = enc.interior_vertices();
                    let ok = possible
                        && enc.code().len() == source
                        && source == 1 + (target - 1) * d
                        && PrefixCode::maximal(k(target), enc.code().iter().cloned()).is_ok();
                    run.exhaustive(ok, || format!("canonical_code({source}, {target}) has the wrong shape"));
                }
                Err(_) => run.exhaustive(!possible, || format!("canonical_code({source}, {target}) failed")),
            }
        }
    }
    let mut index = 0;
    for (big, small) in [(3, 2), (4, 2), (5, 2), (5, 3)] {
        let enc = canonical_code(big, k(small)).expect("legal pair");
        let tails = words_up_to(k(big), 3);
        for _ in 0..trials {
            run.trial(index, |rng| {
                let g = random_element(k(big), rng);
                let h = random_element(k(big), rng);
                let phi_g = higman_embed(&g, &enc).map_err(|e| e.to_string())?;
                for (p, _) in g.table().pairs() {
                    for w in &tails {
                        let x = p.concat(w);
                        let gx = g.apply(&x).expect("in domain");
                        check(phi_g.apply(&enc.encode(&x)) == Some(enc.encode(&gx)), || {
                            format!("({big},{small}): conjugation law fails at {x}")
                        })?;
                    }
                }
                let lhs = higman_embed(&h.compose(&g).expect("same k"), &enc).expect("embed");
                let rhs = higman_embed(&h, &enc).expect("embed").compose(&phi_g).expect("same k");
                check(lhs == rhs, || format!("({big},{small}): not a homomorphism"))
            });
            index += 1;
        }
    }
}

fn embed_any_suite(run: &mut Run, trials: usize) {
    let mut index = 0;
    for i in 2..=5 {
        for j in 2..=5 {
            for _ in 0..trials {
                run.trial(index, |rng| {
                    let g = random_element(k(i), rng);
                    let h = random_element(k(i), rng);
                    let eg = embed_any(&g, k(j)).map_err(|e| e.to_string())?;
                    let eh = embed_any(&h, k(j)).map_err(|e| e.to_string())?;
                    let ehg = embed_any(&h.compose(&g).expect("same k"), k(j)).map_err(|e| e.to_string())?;
                    check(eg.alphabet() == k(j), || format!("({i},{j}): wrong target alphabet"))?;
                    check(ehg == eh.compose(&eg).expect("same k"), || format!("({i},{j}): not a homomorphism"))?;
                    check((g == h) == (eg == eh), || format!("({i},{j}): not injective"))
                });
                index += 1;
            }
        }
    }
}

fn theta_pfix(run: &mut Run, trials: usize) {
    let transposition = GroupElement::from_pairs(
        Alphabet::BINARY,
        [(Word::letter(0), Word::letter(1)), (Word::letter(1), Word::letter(0))],
    )
    .expect("valid");
    run.exhaustive(!pfix_check(&transposition, &Word::letter(0)), || {
        "transposition accepted as fixing 0·A*".into()
    });
    run.exhaustive(pfix_check(&GroupElement::identity(Alphabet::BINARY), &Word::letter(0)), || {
        "identity rejected".into()
    });
    for t in 0..trials as u64 {
        run.trial(t, |rng| {
            let g = random_element(Alphabet::BINARY, rng);
            let h = random_element(Alphabet::BINARY, rng);
            let (tg, th) = (theta(&g).expect("binary"), theta(&h).expect("binary"));
            let thg = theta(&h.compose(&g).expect("same k")).expect("binary");
            check(thg == th.compose(&tg).expect("same k"), || "theta not a homomorphism".into())?;
            check((g == h) == (tg == th), || "theta not injective".into())?;
            check(pfix_check(&tg, &Word::letter(0)), || "theta(g) moves a point of 0·A*".into())
        });
    }
}

fn serialization(run: &mut Run, trials: usize) {
    let mut index = 0;
    for n in 2..=5 {
        for _ in 0..trials {
            run.trial(index, |rng| {
                let g = random_element(k(n), rng);
                let text = format::serialize(&g);
                let back = format::parse_element(&text).map_err(|e| e.to_string())?;
                check(back == g, || format!("k={n}: parse(serialize(g)) != g"))?;
                check(format::serialize(&back) == text, || format!("k={n}: output not byte-stable"))
            });
            index += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn broken_successor(q: &SuccessorQuery) -> Option<Word> {
        // Off by one letter for members ending in a_0.
        let s = succ_formula(q)?;
        if q.member().last() == Some(0) {
            Some(s.prepend(0))
        } else {
            Some(s)
        }
    }

    #[test]
    fn small_element_set() {
        let small = small_binary_elements();
        assert!(small.iter().any(GroupElement::is_identity));
        assert_eq!(small.len(), small.iter().collect::<HashSet<_>>().len());
        assert!(small.iter().all(|g| g.table().len() <= 3));
    }

    #[test]
    fn zero_trials_is_exhaustive_only() {
        let report = Harness::new(1).run(&[Suite::SuccessorFormula, Suite::GroupAxioms], 0);
        assert!(report.passed());
        let text = report.to_string();
        assert_eq!(text.matches("skipped-random, exhaustive-only").count(), 2);
    }

    #[test]
    fn reports_are_deterministic() {
        let a = Harness::new(42).run(&[Suite::GroupAxioms, Suite::Serialization], 5).to_string();
        let b = Harness::new(42).run(&[Suite::GroupAxioms, Suite::Serialization], 5).to_string();
        assert_eq!(a, b);
    }

    #[test]
    fn mutated_successor_is_caught_with_a_seed() {
        let harness = Harness { seed: 7, successor: broken_successor };
        let report = harness.run(&[Suite::SuccessorFormula], 3);
        assert!(!report.passed());
        assert!(report.suites[0].failures.iter().any(|f| f.seed.is_some()));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
        assert_eq!(Suite::from_name("nope"), None);
    }
}
