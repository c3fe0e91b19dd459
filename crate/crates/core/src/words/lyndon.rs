//! Lyndon words in the reversed convention: u is Lyndon when it is strictly
//! lex-greater than every proper rotation, with larger letters greater.

use std::cmp::Ordering;

use super::Word;

pub fn is_lyndon(u: &Word) -> bool {
    let n = u.len();
    if n == 0 {
        return false;
    }
    (1..n).all(|k| {
        let rot = u.0[k..].iter().chain(&u.0[..k]);
        u.0.iter().cmp(rot) == Ordering::Greater
    })
}

/// `u <_plex v`: v is a proper prefix of u, or v is lex-greater at the
/// first difference.
pub fn plex_less(u: &Word, v: &Word) -> bool {
    if u == v {
        return false;
    }
    if v.is_prefix_of(u) {
        return true;
    }
    if u.is_prefix_of(v) {
        return false;
    }
    let k = u.0.iter().zip(&v.0).position(|(a, b)| a != b).unwrap();
    v.0[k] > u.0[k]
}

/// Chen-Fox-Lyndon factorization u = u₁u₂⋯ with u₁ ≤_plex u₂ ≤_plex ⋯.
pub fn lyndon_factorize(u: &Word) -> Vec<Word> {
    // Duval's algorithm with the letter comparison reversed.
    let s = &u.0;
    let n = s.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && s[k] >= s[j] {
            if s[k] > s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            out.push(Word(s[i..i + j - k].to_vec()));
            i += j - k;
        }
    }
    out
}
