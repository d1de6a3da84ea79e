//! Words in the free monoid on the generators.

use std::cmp::Ordering;
use std::fmt;

/// Index of a generator in its alphabet.
pub type Letter = u32;

/// A monomial of `T(V)`, stored as a sequence of generator indices.
///
/// The leftmost letter is the leftmost tensor factor. Words are ordered by
/// degree first and then lexicographically by index, which is the order used
/// everywhere a deterministic iteration order is needed.
#[derive(Clone, PartialEq, Eq, Hash, Default, serde::Serialize)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(x: Letter) -> Self {
        Word(vec![x])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    /// Tensor degree, i.e. the number of letters.
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// `self ⊗ other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// The suffix of the given length. Panics if `len > degree`.
    pub fn suffix(&self, len: usize) -> Word {
        Word(self.0[self.0.len() - len..].to_vec())
    }

    /// The prefix of the given length. Panics if `len > degree`.
    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    pub fn has_suffix(&self, other: &[Letter]) -> bool {
        self.0.ends_with(other)
    }

    pub fn has_prefix(&self, other: &[Letter]) -> bool {
        self.0.starts_with(other)
    }

    /// Position of the first occurrence of `self` as a contiguous factor of
    /// `other`.
    pub fn find_in(&self, other: &Word) -> Option<usize> {
        find_factor(&self.0, &other.0)
    }
}

pub(crate) fn find_factor(needle: &[Letter], hay: &[Letter]) -> Option<usize> {
    if needle.is_empty() {
        return Some(0);
    }
    if needle.len() > hay.len() {
        return None;
    }
    hay.windows(needle.len()).position(|w| w == needle)
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }
}
