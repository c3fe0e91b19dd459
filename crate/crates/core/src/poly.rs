//! Noncommutative polynomials and remainders.

use std::collections::BTreeMap;

use num_traits::{One, Signed};
use thiserror::Error;

use crate::arith::{render_rational, Scalar};
use crate::words::{Alphabet, MultiDegree, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
}

/// A finite map from words to nonzero scalars.
///
/// Terms are keyed by the raw letter sequence; on homogeneous polynomials
/// this order is deg-lex, which is the only case the leading-term queries
/// are used on.
#[derive(Debug, Clone, PartialEq)]
pub struct NcPoly<K> {
    terms: BTreeMap<Word, K>,
}

impl<K: Scalar> Default for NcPoly<K> {
    fn default() -> Self {
        NcPoly::zero()
    }
}

impl<K: Scalar> NcPoly<K> {
    pub fn zero() -> Self {
        NcPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        NcPoly::term(Word::empty(), K::one())
    }

    pub fn term(w: Word, c: K) -> Self {
        let mut p = NcPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn monomial(w: Word) -> Self {
        NcPoly::term(w, K::one())
    }

    pub fn constant(c: K) -> Self {
        NcPoly::term(Word::empty(), c)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, K)>) -> Self {
        let mut p = NcPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing word order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &K)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> K {
        self.terms.get(w).cloned().unwrap_or_else(K::zero)
    }

    pub fn add_term(&mut self, w: Word, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(e) => {
                let s = e.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *e = s;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (w, c) in &other.terms {
            p.add_term(w.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (w, c) in &other.terms {
            p.add_term(w.clone(), -c.clone());
        }
        p
    }

    pub fn neg(&self) -> Self {
        self.scale(&-K::one())
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly { terms: self.terms.iter().map(|(w, a)| (w.clone(), a.clone() * c.clone())).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut p = NcPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                p.add_term(u.concat(v), a.clone() * b.clone());
            }
        }
        p
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(NcPoly::one(), |acc, _| acc.mul(self))
    }

    /// l·f·r for words l, r.
    pub fn sandwich(&self, l: &Word, r: &Word) -> Self {
        NcPoly { terms: self.terms.iter().map(|(w, c)| (Word::concat3(l, w, r), c.clone())).collect() }
    }

    /// Leading word and coefficient (for homogeneous polynomials).
    pub fn leading(&self) -> Result<(&Word, &K), PolyError> {
        self.terms.last_key_value().ok_or(PolyError::ZeroPolynomial)
    }

    pub fn lw(&self) -> &Word {
        self.leading().expect("nonzero polynomial").0
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Ok((_, c)) => self.scale(&c.inv()),
            Err(_) => NcPoly::zero(),
        }
    }

    /// Common multidegree, or None when zero or inhomogeneous.
    pub fn degree(&self, alphabet: &Alphabet) -> Option<MultiDegree> {
        let mut it = self.terms.keys().map(|w| alphabet.degree(w));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Distinct multidegrees of the support.
    pub fn degrees(&self, alphabet: &Alphabet) -> Vec<MultiDegree> {
        let mut v: Vec<MultiDegree> = self.terms.keys().map(|w| alphabet.degree(w)).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn is_homogeneous(&self, alphabet: &Alphabet) -> bool {
        self.is_zero() || self.degree(alphabet).is_some()
    }

    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> Self {
        NcPoly::from_terms(self.terms.iter().map(|(w, c)| (f(w), c.clone())))
    }

    pub fn map_coeffs<L: Scalar>(&self, f: impl Fn(&Word, &K) -> L) -> NcPoly<L> {
        NcPoly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(w, c))))
    }

    /// Scalar value of a constant polynomial.
    pub fn as_constant(&self) -> Option<K> {
        match self.terms.len() {
            0 => Some(K::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    /// Deg-lex descending rendering such as `x2*x1^2 - 4*x1^2*x2`.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut ts: Vec<(&Word, &K)> = self.terms.iter().collect();
        ts.sort_by(|a, b| alphabet.compare_deglex(b.0, a.0));
        let mut out = String::new();
        for (i, (w, c)) in ts.into_iter().enumerate() {
            let word = alphabet.render(w);
            let (neg, coef) = match c.as_rational() {
                Some(q) => (q.is_negative(), {
                    let m = q.abs();
                    if m.is_one() && !w.is_empty() {
                        None
                    } else {
                        Some(render_rational(&m))
                    }
                }),
                None => (false, Some(format!("({c})"))),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match (coef, w.is_empty()) {
                (Some(c), true) => out.push_str(&c),
                (Some(c), false) => {
                    out.push_str(&c);
                    out.push('*');
                    out.push_str(&word);
                }
                (None, _) => out.push_str(&word),
            }
        }
        out
    }
}

/// Reduction modulo a fixed list, reusing precomputed leading data.
pub struct Reducer<'a, K> {
    gens: &'a [NcPoly<K>],
    lws: Vec<Word>,
    inv_lcs: Vec<K>,
}

impl<'a, K: Scalar> Reducer<'a, K> {
    pub fn new(gens: &'a [NcPoly<K>]) -> Self {
        let mut lws = Vec::with_capacity(gens.len());
        let mut inv_lcs = Vec::with_capacity(gens.len());
        for g in gens {
            let (w, c) = g.leading().expect("nonzero reducer");
            lws.push(w.clone());
            inv_lcs.push(c.inv());
        }
        Reducer { gens, lws, inv_lcs }
    }

    /// Leftmost occurrence of some leading word; smallest index wins ties.
    pub fn find(&self, w: &Word) -> Option<(usize, usize)> {
        let s = w.letters();
        for pos in 0..s.len() {
            for (k, lw) in self.lws.iter().enumerate() {
                if s[pos..].starts_with(lw.letters()) {
                    return Some((pos, k));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.find(w).is_none()
    }

    pub fn reduce(&self, f: &NcPoly<K>) -> NcPoly<K> {
        let mut work = f.terms.clone();
        let mut out = BTreeMap::new();
        while let Some((w, c)) = work.pop_last() {
            match self.find(&w) {
                None => {
                    out.insert(w, c);
                }
                Some((pos, k)) => {
                    let factor = c * self.inv_lcs[k].clone();
                    let (l, r) = (&w.letters()[..pos], &w.letters()[pos + self.lws[k].len()..]);
                    for (v, d) in self.gens[k].terms.iter().rev().skip(1) {
                        let mut nw = Vec::with_capacity(l.len() + v.len() + r.len());
                        nw.extend_from_slice(l);
                        nw.extend_from_slice(v.letters());
                        nw.extend_from_slice(r);
                        let delta = -(factor.clone() * d.clone());
                        match work.get_mut(&Word(nw.clone())) {
                            Some(e) => {
                                let s = e.clone() + delta;
                                if s.is_zero() {
                                    work.remove(&Word(nw));
                                } else {
                                    *e = s;
                                }
                            }
                            None => {
                                work.insert(Word(nw), delta);
                            }
                        }
                    }
                }
            }
        }
        NcPoly { terms: out }
    }
}

/// Remainder of f modulo G: the greatest reducible word is rewritten at
/// its leftmost occurrence, using the first element of G that fits there.
pub fn remainder<K: Scalar>(f: &NcPoly<K>, g: &[NcPoly<K>]) -> NcPoly<K> {
    Reducer::new(g).reduce(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;
    use num_rational::BigRational;

    type P = NcPoly<BigRational>;

    fn w(s: &str) -> Word {
        Alphabet::standard2().parse_word(s).unwrap()
    }

    fn p(ts: &[(i64, &str)]) -> P {
        NcPoly::from_terms(ts.iter().map(|(c, s)| (w(s), q(*c))))
    }

    #[test]
    fn leading_examples() {
        let f1 = p(&[(1, "x2*x1^2"), (-4, "x1^2*x2")]);
        assert_eq!(f1.leading().unwrap(), (&w("x2*x1^2"), &q(1)));
        let g = p(&[(1, "x1"), (1, "x2")]);
        assert_eq!(g.leading().unwrap().0, &w("x2"));
        let h = p(&[(7, "x1*x2*x1")]);
        assert_eq!(h.leading().unwrap(), (&w("x1*x2*x1"), &q(7)));
        assert_eq!(P::zero().leading(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn remainder_examples() {
        let f1 = p(&[(1, "x2*x1^2"), (-4, "x1^2*x2")]);
        let r = remainder(&p(&[(1, "x2*x1^3")]), std::slice::from_ref(&f1));
        assert_eq!(r, p(&[(4, "x1^2*x2*x1")]));
        assert!(remainder(&f1, std::slice::from_ref(&f1)).is_zero());
        let g = p(&[(3, "x1*x2"), (1, "x2*x2")]);
        assert_eq!(remainder(&g, &[]), g);
    }

    #[test]
    fn render_forms() {
        let a = Alphabet::standard2();
        let f = p(&[(1, "x2*x1^2"), (-4, "x1^2*x2"), (1, "x1*x2*x1")]);
        assert_eq!(f.render(&a), "x2*x1^2 + x1*x2*x1 - 4*x1^2*x2");
        assert_eq!(p(&[(-1, "x1")]).render(&a), "-x1");
    }

    #[test]
    fn homogeneity() {
        let a = Alphabet::standard2();
        assert!(p(&[(1, "x2*x1"), (2, "x1*x2")]).is_homogeneous(&a));
        assert!(!p(&[(1, "x2*x1"), (2, "x1")]).is_homogeneous(&a));
    }

    fn poly_from(terms: &[(Vec<u8>, i64)]) -> P {
        NcPoly::from_terms(terms.iter().map(|(l, c)| (Word(l.clone()), q(*c))))
    }

    fn terms() -> impl proptest::strategy::Strategy<Value = Vec<(Vec<u8>, i64)>> {
        proptest::collection::vec((proptest::collection::vec(0u8..2, 0..4), -3i64..=3), 0..5)
    }

    proptest::proptest! {
        #[test]
        fn arithmetic_and_reduction(a in terms(), b in terms(), c in terms()) {
            let (f, g, h) = (poly_from(&a), poly_from(&b), poly_from(&c));
            proptest::prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
            proptest::prop_assert_eq!(f.add(&g).mul(&h), f.mul(&h).add(&g.mul(&h)));
            let gens = [p(&[(1, "x2*x1"), (-2, "x1*x2")])];
            let r = remainder(&f, &gens);
            let red = Reducer::new(&gens);
            proptest::prop_assert!(r.terms().all(|(w, _)| red.is_normal(w)));
            let moved = f.add(&gens[0].sandwich(&Word(vec![0]), &Word(vec![1])).scale(&q(3)));
            proptest::prop_assert_eq!(remainder(&moved, &gens), r);
        }
    }
}
