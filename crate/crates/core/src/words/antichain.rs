use thiserror::Error;

use super::{Alphabet, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AntichainError {
    #[error("the empty word cannot be an obstruction")]
    EmptyWord,
    #[error("{0:?} is a proper factor of {1:?}")]
    Factor(Word, Word),
}

/// A finite set of nonempty words, none a proper factor of another.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Antichain {
    words: Vec<Word>,
}

impl Antichain {
    pub fn new(words: impl IntoIterator<Item = Word>) -> Result<Self, AntichainError> {
        let mut words: Vec<Word> = words.into_iter().collect();
        words.sort();
        words.dedup();
        if words.iter().any(|w| w.is_empty()) {
            return Err(AntichainError::EmptyWord);
        }
        for a in &words {
            for b in &words {
                if a != b && b.has_factor(a) {
                    return Err(AntichainError::Factor(a.clone(), b.clone()));
                }
            }
        }
        Ok(Antichain { words })
    }

    pub fn empty() -> Self {
        Antichain::default()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }

    /// True if `w` has a factor in the set.
    pub fn divides(&self, w: &Word) -> bool {
        self.words.iter().any(|v| w.has_factor(v))
    }

    /// Adds a word that must be normal modulo the set.
    pub fn with(&self, w: Word) -> Result<Self, AntichainError> {
        let mut v = self.words.clone();
        v.push(w);
        Antichain::new(v)
    }

    pub fn sorted_deglex(&self, alphabet: &Alphabet) -> Vec<Word> {
        let mut v = self.words.clone();
        v.sort_by(|a, b| alphabet.compare_deglex(a, b));
        v
    }

    pub fn swapped(&self) -> Self {
        Antichain::new(self.words.iter().map(Word::swapped)).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_factors() {
        let a = Word(vec![1, 0]);
        let b = Word(vec![1, 1, 0]);
        assert!(matches!(Antichain::new([a.clone(), b.clone()]), Err(AntichainError::Factor(_, _))));
        assert_eq!(Antichain::new([Word::empty()]), Err(AntichainError::EmptyWord));
        let ok = Antichain::new([a.clone(), Word(vec![0, 1])]).unwrap();
        assert!(ok.divides(&b));
        assert!(!ok.divides(&Word(vec![0, 0])));
        assert_eq!(Antichain::new([a.clone(), a]).unwrap().len(), 1);
    }
}
