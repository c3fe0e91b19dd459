//! Words over a graded alphabet, deg-lex order, antichains and Lyndon words.

mod alphabet;
mod antichain;
mod automaton;
mod degree;
pub mod lyndon;

pub use alphabet::{Alphabet, AlphabetError};
pub use antichain::{Antichain, AntichainError};
pub use automaton::{normal_words, FactorAutomaton};
pub use degree::MultiDegree;
pub use lyndon::{is_lyndon, lyndon_factorize};

use std::fmt;

/// A word, stored as letter indices in precedence order (index 0 is the
/// smallest letter).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: u8) -> Self {
        Word(vec![i])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn concat3(l: &Word, m: &Word, r: &Word) -> Word {
        let mut v = Vec::with_capacity(l.len() + m.len() + r.len());
        v.extend_from_slice(&l.0);
        v.extend_from_slice(&m.0);
        v.extend_from_slice(&r.0);
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    /// Position of the leftmost occurrence of `f` as a factor.
    pub fn find(&self, f: &Word) -> Option<usize> {
        if f.is_empty() {
            return Some(0);
        }
        self.0.windows(f.len()).position(|w| w == f.0.as_slice())
    }

    pub fn has_factor(&self, f: &Word) -> bool {
        self.find(f).is_some()
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn is_suffix_of(&self, other: &Word) -> bool {
        other.0.ends_with(&self.0)
    }

    /// Exchanges letters 0 and 1.
    pub fn swapped(&self) -> Word {
        Word(self.0.iter().map(|&c| if c < 2 { 1 - c } else { c }).collect())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for c in &self.0 {
            write!(f, "x{}", c + 1)?;
        }
        Ok(())
    }
}
