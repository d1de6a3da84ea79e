//! Ideal membership, minimal left annihilators and the suffix map `L(w, m)`.

use std::borrow::Borrow;
use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::word::{Letter, Word};

impl Borrow<[Letter]> for Word {
    fn borrow(&self) -> &[Letter] {
        self.letters()
    }
}

/// `w ⊗ v`.
pub fn concat(u: &Word, v: &Word) -> Word {
    u.concat(v)
}

/// The two-sided ideal `I` generated by the relations of a presentation.
#[derive(Debug, Clone)]
pub struct MonomialIdeal {
    presentation: Presentation,
    relations: HashSet<Word>,
    /// Distinct relation degrees, ascending.
    degrees: Vec<usize>,
}

impl MonomialIdeal {
    pub fn new(presentation: Presentation) -> Self {
        let relations: HashSet<Word> = presentation.relations().iter().cloned().collect();
        let mut degrees: Vec<usize> = presentation.relation_degrees();
        degrees.sort_unstable();
        degrees.dedup();
        MonomialIdeal {
            presentation,
            relations,
            degrees,
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn alphabet_size(&self) -> usize {
        self.presentation.alphabet().len()
    }

    pub fn max_relation_degree(&self) -> usize {
        self.degrees.last().copied().unwrap_or(0)
    }

    pub fn in_ideal(&self, w: &Word) -> bool {
        self.contains_factor(w.letters())
    }

    /// True iff some relation occurs as a contiguous factor of `letters`.
    pub fn contains_factor(&self, letters: &[Letter]) -> bool {
        self.degrees.iter().take_while(|&&d| d <= letters.len()).any(|&d| {
            letters
                .windows(d)
                .any(|window| self.relations.contains(window))
        })
    }

    /// True iff `left ⊗ right ∈ I`, without allocating the product.
    pub fn product_in_ideal(&self, left: &[Letter], right: &[Letter]) -> bool {
        let mut buf = Vec::with_capacity(left.len() + right.len());
        buf.extend_from_slice(left);
        buf.extend_from_slice(right);
        self.contains_factor(&buf)
    }

    /// True iff `w` is one of the defining relations.
    pub fn is_minimal_generator(&self, w: &Word) -> bool {
        self.relations.contains(w)
    }

    pub fn is_relation(&self, letters: &[Letter]) -> bool {
        self.relations.contains(letters)
    }

    /// `L(w, m)`: the shortest suffix `w'` of `w` with `w' ⊗ m ∈ I`.
    pub fn left_min_annihilating_suffix(&self, w: &Word, m: &Word) -> Result<Word> {
        if self.in_ideal(m) {
            return Err(Error::Precondition("m must not lie in I".into()));
        }
        if self.in_ideal(w) {
            return Err(Error::Precondition("w must not lie in I".into()));
        }
        match self.min_annihilating_suffix_len(w.letters(), m.letters()) {
            Some(k) => Ok(w.suffix(k)),
            None => Err(Error::Precondition("w ⊗ m must lie in I".into())),
        }
    }

    /// Length of the shortest nonempty suffix `s` of `w` with `s ⊗ m ∈ I`.
    pub(crate) fn min_annihilating_suffix_len(&self, w: &[Letter], m: &[Letter]) -> Option<usize> {
        (1..=w.len()).find(|&k| self.product_in_ideal(&w[w.len() - k..], m))
    }

    /// The set `𝔄_m` of minimal monomial generators of the left annihilator
    /// of `m` in `A`, in (degree, lex) order.
    pub fn annihilator_generators(&self, m: &Word) -> Result<Vec<Word>> {
        if self.in_ideal(m) {
            return Err(Error::Precondition("m must not lie in I".into()));
        }
        let out = self.annihilators(m.letters());
        let bound = self.max_relation_degree().saturating_sub(1);
        if let Some(w) = out.iter().find(|w| w.degree() > bound) {
            return Err(Error::Invariant(format!(
                "annihilator {w:?} exceeds degree bound {bound}"
            )));
        }
        Ok(out)
    }

    /// `𝔄_m` for `m ∉ I` (not checked).
    ///
    /// If `w ∈ 𝔄_m` then the relation occurrence inside `w ⊗ m` must start at
    /// the first letter of `w`, so `w` is a proper left part of a relation
    /// whose remaining right part is a prefix of `m`.
    pub(crate) fn annihilators(&self, m: &[Letter]) -> Vec<Word> {
        let mut out = BTreeSet::new();
        for r in self.presentation.relations() {
            let r = r.letters();
            for split in 1..r.len() {
                let (u, v) = r.split_at(split);
                if v.len() > m.len() || !m.starts_with(v) {
                    continue;
                }
                if self.contains_factor(u) {
                    continue;
                }
                if self.min_annihilating_suffix_len(u, m) == Some(u.len()) {
                    out.insert(Word::from(u));
                }
            }
        }
        out.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::presentation::parse_presentation;

    fn ideal(src: &str) -> MonomialIdeal {
        MonomialIdeal::new(parse_presentation(src).unwrap())
    }

    fn w(s: &str) -> Word {
        // fixtures here use a,b,c,d
        Word::new(s.bytes().map(|b| (b - b'a') as Letter).collect())
    }

    /// All words of length `0..=max_len` over `n` letters.
    pub(crate) fn all_words(n: usize, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for u in &layer {
                for x in 0..n as Letter {
                    next.push(u.concat(&Word::letter(x)));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    fn naive_in_ideal(rel: &[Word], w: &Word) -> bool {
        rel.iter().any(|r| {
            (0..=w.degree().saturating_sub(r.degree()))
                .any(|i| w.degree() >= r.degree() && &w.letters()[i..i + r.degree()] == r.letters())
        })
    }

    #[test]
    fn concat_examples() {
        assert_eq!(concat(&w("ab"), &w("c")), w("abc"));
        assert_eq!(concat(&Word::empty(), &w("dab")), w("dab"));
        assert_eq!(concat(&w("cd"), &w("ab")), w("cdab"));
    }

    #[test]
    fn membership_examples() {
        let i = ideal(fixtures::ABC_CDAB);
        assert!(i.in_ideal(&w("abcd")));
        assert!(!i.in_ideal(&w("bcd")));
        assert!(!i.in_ideal(&Word::empty()));
    }

    #[test]
    fn minimal_generator_examples() {
        let i = ideal(fixtures::ABC_CDAB);
        assert!(i.is_minimal_generator(&w("cdab")));
        assert!(!i.is_minimal_generator(&w("abcd")));
        assert!(!i.is_minimal_generator(&w("ab")));
    }

    #[test]
    fn suffix_map_examples() {
        let i = ideal(fixtures::ABC_CDAB);
        assert_eq!(i.left_min_annihilating_suffix(&w("ab"), &w("cd")).unwrap(), w("ab"));
        assert_eq!(i.left_min_annihilating_suffix(&w("cd"), &w("ab")).unwrap(), w("cd"));
        assert_eq!(i.left_min_annihilating_suffix(&w("dab"), &w("c")).unwrap(), w("ab"));
        assert!(matches!(
            i.left_min_annihilating_suffix(&w("ab"), &w("a")),
            Err(Error::Precondition(msg)) if msg.contains("w ⊗ m")
        ));
        assert!(matches!(
            i.left_min_annihilating_suffix(&w("abc"), &w("d")),
            Err(Error::Precondition(msg)) if msg.contains("w must not")
        ));
    }

    #[test]
    fn annihilator_examples() {
        let i = ideal(fixtures::ABC_CDAB);
        assert_eq!(i.annihilator_generators(&w("c")).unwrap(), vec![w("ab")]);
        assert_eq!(i.annihilator_generators(&w("b")).unwrap(), vec![w("cda")]);
        assert!(i.annihilator_generators(&w("a")).unwrap().is_empty());
        assert!(i.annihilator_generators(&w("abc")).is_err());
    }

    #[test]
    fn membership_matches_naive_scan() {
        for src in [fixtures::ABC_CDAB, fixtures::ABC_CDAB_BCDA] {
            let i = ideal(src);
            let rel = i.presentation().relations().to_vec();
            for u in all_words(4, 7) {
                assert_eq!(i.in_ideal(&u), naive_in_ideal(&rel, &u), "{u:?}");
            }
        }
    }

    /// Brute force: every word `u` of bounded degree with `u ∉ I` and
    /// `u ⊗ m ∈ I` reduces via `L` into `𝔄_m`, and `𝔄_m` is exactly the set of
    /// such `u` fixed by `L`.
    #[test]
    fn annihilators_match_brute_force() {
        for src in [fixtures::ABC_CDAB, fixtures::ABC_CDAB_BCDA, fixtures::CUBIC_XY] {
            let i = ideal(src);
            let n = i.alphabet_size();
            let d = i.max_relation_degree();
            for m in all_words(n, d).into_iter().filter(|m| !m.is_empty() && !i.in_ideal(m)) {
                let ann = i.annihilator_generators(&m).unwrap();
                let mut brute = BTreeSet::new();
                for u in all_words(n, d).into_iter().filter(|u| !u.is_empty()) {
                    if i.in_ideal(&u) || !i.in_ideal(&u.concat(&m)) {
                        continue;
                    }
                    let l = i.left_min_annihilating_suffix(&u, &m).unwrap();
                    assert!(ann.contains(&l), "L({u:?},{m:?}) = {l:?} missing from {ann:?}");
                    if l == u {
                        brute.insert(u);
                    }
                }
                assert_eq!(ann, brute.into_iter().collect::<Vec<_>>(), "m = {m:?}");
                for a in &ann {
                    assert!(a.degree() < d);
                }
            }
        }
    }
}
