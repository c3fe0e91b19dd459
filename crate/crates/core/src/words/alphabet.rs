use std::cmp::Ordering;
use std::collections::HashSet;

use thiserror::Error;

use super::{MultiDegree, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlphabetError {
    #[error("duplicate letter {0}")]
    Duplicate(String),
    #[error("letter {0} has zero degree")]
    ZeroDegree(String),
    #[error("letter {0} has degree of the wrong arity")]
    Arity(String),
    #[error("empty alphabet")]
    Empty,
    #[error("order declaration must list every letter exactly once")]
    BadPrecedence,
}

/// Letters with gradings. Internally letters are indexed by precedence, so
/// a larger index is a larger letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    degrees: Vec<MultiDegree>,
    declared: Vec<usize>,
}

impl Alphabet {
    /// `letters` in declaration order; `precedence` lists names greatest
    /// first, defaulting to "later declared is greater".
    pub fn new(letters: Vec<(String, MultiDegree)>, precedence: Option<Vec<String>>) -> Result<Self, AlphabetError> {
        if letters.is_empty() {
            return Err(AlphabetError::Empty);
        }
        let s = letters[0].1.arity();
        let mut seen = HashSet::new();
        for (n, d) in &letters {
            if !seen.insert(n.clone()) {
                return Err(AlphabetError::Duplicate(n.clone()));
            }
            if d.arity() != s || s == 0 {
                return Err(AlphabetError::Arity(n.clone()));
            }
            if d.is_zero() {
                return Err(AlphabetError::ZeroDegree(n.clone()));
            }
        }
        let order: Vec<usize> = match precedence {
            None => (0..letters.len()).collect(),
            Some(p) => {
                if p.len() != letters.len() {
                    return Err(AlphabetError::BadPrecedence);
                }
                let mut idx = Vec::new();
                for name in p.iter().rev() {
                    let k = letters.iter().position(|(n, _)| n == name).ok_or(AlphabetError::BadPrecedence)?;
                    if idx.contains(&k) {
                        return Err(AlphabetError::BadPrecedence);
                    }
                    idx.push(k);
                }
                idx
            }
        };
        let names = order.iter().map(|&k| letters[k].0.clone()).collect();
        let degrees = order.iter().map(|&k| letters[k].1.clone()).collect();
        let declared = (0..letters.len()).map(|k| order.iter().position(|&o| o == k).unwrap()).collect();
        Ok(Alphabet { names, degrees, declared })
    }

    /// x1:(1,0), x2:(0,1) with x2 > x1.
    pub fn standard2() -> Self {
        Alphabet::new(vec![("x1".into(), MultiDegree::new2(1, 0)), ("x2".into(), MultiDegree::new2(0, 1))], None)
            .unwrap()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Number of grading components s.
    pub fn arity(&self) -> usize {
        self.degrees[0].arity()
    }

    pub fn name(&self, i: u8) -> &str {
        &self.names[i as usize]
    }

    pub fn index_of(&self, name: &str) -> Option<u8> {
        self.names.iter().position(|n| n == name).map(|i| i as u8)
    }

    pub fn letter_degree(&self, i: u8) -> &MultiDegree {
        &self.degrees[i as usize]
    }

    /// Internal indices in declaration order.
    pub fn declared(&self) -> &[usize] {
        &self.declared
    }

    /// True when the precedence differs from declaration order.
    pub fn has_custom_order(&self) -> bool {
        self.declared.iter().enumerate().any(|(k, &i)| k != i)
    }

    pub fn degree(&self, w: &Word) -> MultiDegree {
        let mut d = MultiDegree::zero(self.arity());
        for &c in &w.0 {
            for (a, b) in d.0.iter_mut().zip(&self.degrees[c as usize].0) {
                *a += b;
            }
        }
        d
    }

    pub fn total_degree(&self, w: &Word) -> u32 {
        w.0.iter().map(|&c| self.degrees[c as usize].total()).sum()
    }

    pub fn compare_deglex(&self, u: &Word, v: &Word) -> Ordering {
        self.degree(u).cmp_deglex(&self.degree(v)).then_with(|| u.0.cmp(&v.0))
    }

    /// `x2*x1^2` style rendering; the empty word is `1`.
    pub fn render(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let c = w.0[i];
            let mut j = i;
            while j < w.len() && w.0[j] == c {
                j += 1;
            }
            let name = self.name(c);
            parts.push(if j - i == 1 { name.to_string() } else { format!("{name}^{}", j - i) });
            i = j;
        }
        parts.join("*")
    }

    /// Parses the `render` format.
    pub fn parse_word(&self, s: &str) -> Option<Word> {
        let s = s.trim();
        if s == "1" {
            return Some(Word::empty());
        }
        let mut out = Vec::new();
        for part in s.split('*') {
            let (name, e) = match part.split_once('^') {
                Some((n, e)) => (n.trim(), e.trim().parse::<usize>().ok()?),
                None => (part.trim(), 1),
            };
            let i = self.index_of(name)?;
            out.extend(std::iter::repeat_n(i, e));
        }
        Some(Word(out))
    }

    /// All words of multidegree β, deg-lex descending.
    pub fn words_of_degree(&self, beta: &MultiDegree) -> Vec<Word> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.words_rec(beta, &mut cur, &mut out);
        out
    }

    fn words_rec(&self, rem: &MultiDegree, cur: &mut Vec<u8>, out: &mut Vec<Word>) {
        if rem.is_zero() {
            out.push(Word(cur.clone()));
            return;
        }
        for c in (0..self.len() as u8).rev() {
            if let Some(r) = rem.checked_sub(self.letter_degree(c)) {
                cur.push(c);
                self.words_rec(&r, cur, out);
                cur.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Alphabet::standard2().parse_word(s).unwrap()
    }

    #[test]
    fn deglex_examples() {
        let a = Alphabet::standard2();
        assert_eq!(a.compare_deglex(&w("x2"), &w("x1")), Ordering::Greater);
        assert_eq!(a.compare_deglex(&w("x2*x1^2"), &w("x1*x2*x1")), Ordering::Greater);
        assert_eq!(a.compare_deglex(&w("x1^3"), &w("x2*x1")), Ordering::Greater);
    }

    #[test]
    fn render_parse() {
        let a = Alphabet::standard2();
        assert_eq!(a.render(&w("x2*x2*x1*x2*x1")), "x2^2*x1*x2*x1");
        assert_eq!(a.render(&Word::empty()), "1");
        assert_eq!(w("x2^2*x1"), Word(vec![1, 1, 0]));
    }

    #[test]
    fn custom_precedence() {
        let a = Alphabet::new(
            vec![("x1".into(), MultiDegree::new2(1, 0)), ("x2".into(), MultiDegree::new2(0, 1))],
            Some(vec!["x1".into(), "x2".into()]),
        )
        .unwrap();
        assert_eq!(a.index_of("x1"), Some(1));
        assert!(a.has_custom_order());
        assert_eq!(a.declared(), &[1, 0]);
    }

    #[test]
    fn words_of_degree_counts() {
        let a = Alphabet::standard2();
        let ws = a.words_of_degree(&MultiDegree::new2(2, 3));
        assert_eq!(ws.len(), 10);
        assert!(ws.windows(2).all(|p| a.compare_deglex(&p[0], &p[1]) == Ordering::Greater));
    }

    #[test]
    fn rejects_bad_alphabets() {
        let z = Alphabet::new(vec![("a".into(), MultiDegree::new2(0, 0))], None);
        assert_eq!(z, Err(AlphabetError::ZeroDegree("a".into())));
        let d = Alphabet::new(vec![("a".into(), MultiDegree::new2(1, 0)), ("a".into(), MultiDegree::new2(0, 1))], None);
        assert_eq!(d, Err(AlphabetError::Duplicate("a".into())));
    }
}
