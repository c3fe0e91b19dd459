use serde::Serialize;
use thiserror::Error;

use crate::series::TruncatedSeries;
use crate::words::{is_lyndon, Alphabet, Antichain, FactorAutomaton, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LyndonError {
    #[error("obstruction {0} is not a Lyndon word")]
    NotLyndon(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LyndonBasisReport {
    /// Normal Lyndon words with their multidegrees, shortest first.
    pub lyndon_normal: Vec<(String, String)>,
    /// True when the enumeration reached length 2M with M the longest
    /// normal Lyndon word found; otherwise inconclusive at the cap.
    pub finite: bool,
    /// #𝔏 when finite.
    pub gk: Option<usize>,
    #[serde(skip)]
    pub words: Vec<Word>,
}

/// Normal Lyndon words up to length `cap` and the product series
/// ∏ (1 − t^deg u)⁻¹ truncated at total degree `cap`.
///
/// A Lyndon word of length ≥ 2 is the product of two shorter Lyndon words
/// (its standard factorization), both normal when it is. So if no normal
/// Lyndon word has length in (M, 2M] there are none longer than M.
pub fn lyndon_series(
    alphabet: &Alphabet,
    v: &Antichain,
    cap: u32,
) -> Result<(LyndonBasisReport, TruncatedSeries), LyndonError> {
    if let Some(w) = v.words().iter().find(|w| !is_lyndon(w)) {
        return Err(LyndonError::NotLyndon(alphabet.render(w)));
    }
    let aut = FactorAutomaton::new(v, alphabet.len());
    let mut words = Vec::new();
    let mut longest = 0usize;
    let mut finite = false;
    // Normal words of the current length with their automaton states.
    let mut layer: Vec<(Vec<u8>, usize)> = vec![(Vec::new(), 0)];
    let mut len = 0usize;
    while !layer.is_empty() {
        if len >= 1 && len >= 2 * longest {
            finite = true;
            break;
        }
        if len as u32 >= cap {
            break;
        }
        len += 1;
        let mut next = Vec::new();
        for (w, st) in &layer {
            for c in 0..alphabet.len() as u8 {
                let t = aut.step(*st, c);
                if aut.is_dead(t) {
                    continue;
                }
                let mut u = w.clone();
                u.push(c);
                let uw = Word(u.clone());
                if is_lyndon(&uw) {
                    longest = len;
                    words.push(uw);
                }
                next.push((u, t));
            }
        }
        layer = next;
    }
    if layer.is_empty() {
        finite = true;
    }
    let mut series = TruncatedSeries::one(alphabet.arity(), cap);
    for w in &words {
        let d = alphabet.degree(w);
        if d.total() > cap || d.is_zero() {
            continue;
        }
        let mut geo = TruncatedSeries::one(alphabet.arity(), cap);
        let mut e = d.clone();
        while e.total() <= cap {
            geo.add_at(&e, 1);
            e = e.add(&d);
        }
        series = series.mul(&geo);
    }
    let report = LyndonBasisReport {
        lyndon_normal: words.iter().map(|w| (alphabet.render(w), alphabet.degree(w).to_string())).collect(),
        finite,
        gk: finite.then_some(words.len()),
        words,
    };
    Ok((report, series))
}
