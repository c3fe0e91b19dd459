//! Truncated multigraded power series with integer coefficients.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::words::MultiDegree;

/// Exponent vectors of total degree ≤ cap, ordered by total degree and
/// then deg-lex.
#[derive(Debug)]
struct Grid {
    degrees: Vec<MultiDegree>,
    index: HashMap<MultiDegree, usize>,
}

type GridCache = Mutex<HashMap<(usize, u32), Arc<Grid>>>;

fn grid(nvars: usize, cap: u32) -> Arc<Grid> {
    static CACHE: OnceLock<GridCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut guard = cache.lock().unwrap();
    guard
        .entry((nvars, cap))
        .or_insert_with(|| {
            let mut degrees = Vec::new();
            let mut cur = vec![0u32; nvars];
            fill(&mut cur, 0, cap, &mut degrees);
            degrees.sort_by(|a, b| a.cmp_deglex(b));
            let index = degrees.iter().enumerate().map(|(i, d)| (d.clone(), i)).collect();
            Arc::new(Grid { degrees, index })
        })
        .clone()
}

fn fill(cur: &mut Vec<u32>, k: usize, left: u32, out: &mut Vec<MultiDegree>) {
    if k == cur.len() {
        out.push(MultiDegree(cur.clone()));
        return;
    }
    for e in 0..=left {
        cur[k] = e;
        fill(cur, k + 1, left - e, out);
    }
    cur[k] = 0;
}

#[derive(Clone)]
pub struct TruncatedSeries {
    nvars: usize,
    cap: u32,
    grid: Arc<Grid>,
    coeffs: Vec<i64>,
}

impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.cap == other.cap && self.coeffs == other.coeffs
    }
}

impl Eq for TruncatedSeries {}

impl TruncatedSeries {
    pub fn zero(nvars: usize, cap: u32) -> Self {
        let grid = grid(nvars, cap);
        let n = grid.degrees.len();
        TruncatedSeries { nvars, cap, grid, coeffs: vec![0; n] }
    }

    pub fn one(nvars: usize, cap: u32) -> Self {
        let mut s = TruncatedSeries::zero(nvars, cap);
        s.coeffs[0] = 1;
        s
    }

    /// Σ c·t^β over the given terms, dropping those above the cap.
    pub fn from_terms<'a>(nvars: usize, cap: u32, terms: impl IntoIterator<Item = (&'a MultiDegree, i64)>) -> Self {
        let mut s = TruncatedSeries::zero(nvars, cap);
        for (d, c) in terms {
            s.add_at(d, c);
        }
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn get(&self, d: &MultiDegree) -> i64 {
        self.grid.index.get(d).map_or(0, |&i| self.coeffs[i])
    }

    /// Single-variable coefficient.
    pub fn at(&self, n: u32) -> i64 {
        self.get(&MultiDegree(vec![n]))
    }

    pub fn add_at(&mut self, d: &MultiDegree, c: i64) {
        if let Some(&i) = self.grid.index.get(d) {
            self.coeffs[i] += c;
        }
    }

    /// Nonzero terms in grid order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiDegree, i64)> {
        self.grid.degrees.iter().zip(self.coeffs.iter().copied()).filter(|(_, c)| *c != 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let mut s = self.clone();
        for (a, b) in s.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        s
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let mut s = self.clone();
        for (a, b) in s.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        s
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut s = self.clone();
        s.coeffs.iter_mut().for_each(|a| *a *= c);
        s
    }

    fn check(&self, other: &Self) {
        assert!(self.nvars == other.nvars && self.cap == other.cap, "series shapes differ");
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = TruncatedSeries::zero(self.nvars, self.cap);
        let degs = &self.grid.degrees;
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 || degs[i].total() + degs[j].total() > self.cap {
                    continue;
                }
                let k = self.grid.index[&degs[i].add(&degs[j])];
                out.coeffs[k] += a * b;
            }
        }
        out
    }

    /// Multiplicative inverse; None unless the constant term is ±1.
    pub fn inverse(&self) -> Option<Self> {
        let c0 = self.coeffs[0];
        if c0 != 1 && c0 != -1 {
            return None;
        }
        let degs = &self.grid.degrees;
        let mut inv = TruncatedSeries::zero(self.nvars, self.cap);
        inv.coeffs[0] = c0;
        // Grid order is by total degree, so every proper divisor of β is
        // settled before β.
        for k in 1..degs.len() {
            let beta = &degs[k];
            let mut acc = 0i64;
            for (i, &a) in self.coeffs.iter().enumerate().skip(1) {
                if a == 0 {
                    continue;
                }
                if let Some(rest) = beta.checked_sub(&degs[i]) {
                    acc += a * inv.coeffs[self.grid.index[&rest]];
                }
            }
            inv.coeffs[k] = -acc * c0;
        }
        Some(inv)
    }

    /// Total-degree collapse t_i ↦ t.
    pub fn collapse(&self) -> Self {
        let mut out = TruncatedSeries::zero(1, self.cap);
        for (d, c) in self.grid.degrees.iter().zip(&self.coeffs) {
            out.coeffs[d.total() as usize] += c;
        }
        out
    }

    /// Exchanges the variables of a two-variable series.
    pub fn swap(&self) -> Self {
        let mut out = TruncatedSeries::zero(self.nvars, self.cap);
        for (d, &c) in self.grid.degrees.iter().zip(&self.coeffs) {
            out.add_at(&d.swapped(), c);
        }
        out
    }

    /// Coefficients 0..=cap of a one-variable series.
    pub fn to_vec(&self) -> Vec<i64> {
        (0..=self.cap).map(|n| self.at(n)).collect()
    }

    /// Nonzero terms of the smallest total degree, deg-lex ascending.
    pub fn lowest_terms(&self) -> Vec<(MultiDegree, i64)> {
        let mut out: Vec<(MultiDegree, i64)> = Vec::new();
        for (d, c) in self.terms() {
            if out.first().is_some_and(|(e, _)| e.total() < d.total()) {
                break;
            }
            out.push((d.clone(), c));
        }
        out
    }

    /// Lowest term with a negative coefficient, if any.
    pub fn first_negative(&self) -> Option<(MultiDegree, i64)> {
        self.terms().find(|(_, c)| *c < 0).map(|(d, c)| (d.clone(), c))
    }

    /// One-variable 1 + Σ c_k t^k from coefficients.
    pub fn univariate(coeffs: &[i64], cap: u32) -> Self {
        let mut s = TruncatedSeries::zero(1, cap);
        for (k, &c) in coeffs.iter().enumerate() {
            s.add_at(&MultiDegree(vec![k as u32]), c);
        }
        s
    }
}

/// Renders terms as `-t1^3*t2^3 + t1^2*t2^4`, or `2*t^5` in one variable.
pub fn render_terms(terms: &[(MultiDegree, i64)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (d, c)) in terms.iter().enumerate() {
        let mono: Vec<String> =
            d.0.iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(k, e)| {
                    let v = if d.arity() == 1 { "t".to_string() } else { format!("t{}", k + 1) };
                    if *e == 1 {
                        v
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect();
        let mag = c.abs();
        let body = match (mono.is_empty(), mag) {
            (true, m) => m.to_string(),
            (false, 1) => mono.join("*"),
            (false, m) => format!("{m}*{}", mono.join("*")),
        };
        match (i, c.cmp(&0)) {
            (0, Ordering::Less) => out.push_str(&format!("-{body}")),
            (0, _) => out.push_str(&body),
            (_, Ordering::Less) => out.push_str(&format!(" - {body}")),
            _ => out.push_str(&format!(" + {body}")),
        }
    }
    out
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<(MultiDegree, i64)> = self.terms().map(|(d, c)| (d.clone(), c)).collect();
        write!(f, "{} + O(deg {})", render_terms(&t), self.cap + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(a: u32, b: u32) -> MultiDegree {
        MultiDegree::new2(a, b)
    }

    #[test]
    fn inverse_of_one_minus_letters_is_binomial() {
        let s = TruncatedSeries::from_terms(2, 10, [(&d(0, 0), 1), (&d(1, 0), -1), (&d(0, 1), -1)]);
        let inv = s.inverse().unwrap();
        assert_eq!(inv.get(&d(3, 4)), 35);
        assert_eq!(inv.mul(&s), TruncatedSeries::one(2, 10));
        assert_eq!(inv.collapse().to_vec()[..5], [1, 2, 4, 8, 16]);
    }

    #[test]
    fn quantum_plane_table() {
        let s = TruncatedSeries::from_terms(2, 8, [(&d(0, 0), 1), (&d(1, 0), -1), (&d(0, 1), -1), (&d(1, 1), 1)]);
        let inv = s.inverse().unwrap();
        assert!(inv.terms().all(|(_, c)| c == 1));
        assert_eq!(inv.terms().count(), 45);
        assert_eq!(inv.swap(), inv);
        assert!(TruncatedSeries::from_terms(2, 4, [(&d(1, 0), 1)]).inverse().is_none());
    }

    #[test]
    fn lowest_terms_and_render() {
        let s = TruncatedSeries::from_terms(2, 8, [(&d(3, 3), -1), (&d(2, 4), 1), (&d(4, 4), 5)]);
        let lt = s.lowest_terms();
        assert_eq!(lt, vec![(d(3, 3), -1), (d(2, 4), 1)]);
        assert_eq!(render_terms(&lt), "-t1^3*t2^3 + t1^2*t2^4");
        assert_eq!(s.first_negative(), Some((d(3, 3), -1)));
        assert_eq!(render_terms(&[(MultiDegree(vec![5]), 2)]), "2*t^5");
    }

    fn series(cs: &[i64], c0: i64) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(2, 6);
        let mut it = cs.iter();
        for n in 0..=6u32 {
            for a in 0..=n {
                s.add_at(&d(a, n - a), *it.next().unwrap_or(&0));
            }
        }
        s.add_at(&d(0, 0), c0 - s.get(&d(0, 0)));
        s
    }

    proptest::proptest! {
        #[test]
        fn ring_laws(x in proptest::collection::vec(-4i64..=4, 28), y in proptest::collection::vec(-4i64..=4, 28)) {
            let (f, g) = (series(&x, 1), series(&y, -1));
            proptest::prop_assert_eq!(f.mul(&g), g.mul(&f));
            proptest::prop_assert_eq!(f.inverse().unwrap().mul(&f), TruncatedSeries::one(2, 6));
            proptest::prop_assert_eq!(f.mul(&g).collapse(), f.collapse().mul(&g.collapse()));
            proptest::prop_assert_eq!(f.add(&g).sub(&g), f.clone());
            proptest::prop_assert_eq!(f.swap().swap(), f.clone());
            proptest::prop_assert_eq!(f.mul(&g).swap(), f.swap().mul(&g.swap()));
        }
    }
}
