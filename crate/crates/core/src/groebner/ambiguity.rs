use thiserror::Error;

use crate::arith::Scalar;
use crate::poly::NcPoly;
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("tuple is not an ambiguity of the leading words")]
    NotAnAmbiguity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AmbiguityKind {
    Inclusion,
    Overlap,
}

/// (l1, r1, l2, r2) with l1·u1·r1 = l2·u2·r2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ambiguity {
    pub l1: Word,
    pub r1: Word,
    pub l2: Word,
    pub r2: Word,
    pub kind: AmbiguityKind,
}

impl Ambiguity {
    /// The common word l1·u1·r1.
    pub fn word(&self, u1: &Word) -> Word {
        Word::concat3(&self.l1, u1, &self.r1)
    }
}

/// All inclusion and overlap ambiguities of (u1, u2), ordered by |r1|.
/// The trivial inclusion of a word in itself is left out.
pub fn find_ambiguities(u1: &Word, u2: &Word) -> Vec<Ambiguity> {
    let mut out = Vec::new();
    let (a, b) = (u1.letters(), u2.letters());
    if b.len() <= a.len() && u1 != u2 {
        for i in 0..=a.len() - b.len() {
            if a[i..].starts_with(b) {
                out.push(Ambiguity {
                    l1: Word::empty(),
                    r1: Word::empty(),
                    l2: Word(a[..i].to_vec()),
                    r2: Word(a[i + b.len()..].to_vec()),
                    kind: AmbiguityKind::Inclusion,
                });
            }
        }
    }
    // Overlaps u1 = l2·s, u2 = s·r1 with s, l2, r1 nonempty; a shorter
    // overlap s gives a longer r1.
    let max = a.len().min(b.len());
    for k in (1..max).rev() {
        if a[a.len() - k..] == b[..k] {
            out.push(Ambiguity {
                l1: Word::empty(),
                r1: Word(b[k..].to_vec()),
                l2: Word(a[..a.len() - k].to_vec()),
                r2: Word::empty(),
                kind: AmbiguityKind::Overlap,
            });
        }
    }
    out
}

/// S(f1,f2)[l1,r1,l2,r2] = l1 f1 r1 / lc(f1) − l2 f2 r2 / lc(f2).
pub fn composition<K: Scalar>(f1: &NcPoly<K>, f2: &NcPoly<K>, a: &Ambiguity) -> Result<NcPoly<K>, GroebnerError> {
    let (w1, c1) = f1.leading().map_err(|_| GroebnerError::NotAnAmbiguity)?;
    let (w2, c2) = f2.leading().map_err(|_| GroebnerError::NotAnAmbiguity)?;
    if Word::concat3(&a.l1, w1, &a.r1) != Word::concat3(&a.l2, w2, &a.r2) {
        return Err(GroebnerError::NotAnAmbiguity);
    }
    let left = f1.sandwich(&a.l1, &a.r1).scale(&c1.inv());
    let right = f2.sandwich(&a.l2, &a.r2).scale(&c2.inv());
    Ok(left.sub(&right))
}
