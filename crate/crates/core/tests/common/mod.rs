#![allow(dead_code)]

use std::collections::BTreeMap;

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use ncgb_core::arith::q;
use ncgb_core::catalog::*;
use ncgb_core::groebner::{complete_to_degree, interreduce};
use ncgb_core::linalg::Matrix;
use ncgb_core::monomial::{brute_force_series, chain_series, hilbert_series_monomial};
use ncgb_core::series::TruncatedSeries;
use ncgb_core::words::{Alphabet, Antichain, MultiDegree, Word};
use ncgb_core::{Presentation, QPoly, Rational};

pub const TOP: u32 = 6;

pub fn points() -> BTreeMap<String, FamilyPoints> {
    load_family_points(DEFAULT_FAMILY_POINTS).unwrap()
}

pub fn degrees_upto(top: u32) -> Vec<MultiDegree> {
    (0..=top).flat_map(|n| (0..=n).map(move |a| MultiDegree::new2(a, n - a))).collect()
}

/// A bihomogeneous polynomial of total degree 2 to 4 with small coefficients.
pub fn poly_strategy() -> impl Strategy<Value = QPoly> {
    (0u32..=3, 0u32..=3, prop::collection::vec(-3i64..=3, 16))
        .prop_filter("total degree 2..=4", |(a, b, _)| (2..=4).contains(&(a + b)))
        .prop_map(|(a, b, cs)| {
            let words = Alphabet::standard2().words_of_degree(&MultiDegree::new2(a, b));
            QPoly::from_terms(words.into_iter().zip(cs).map(|(w, c)| (w, q(c))))
        })
        .prop_filter("nonzero", |f| !f.is_zero())
}

pub fn ideal_strategy() -> impl Strategy<Value = Vec<QPoly>> {
    prop::collection::vec(poly_strategy(), 1..=3)
}

pub fn word_list_strategy() -> impl Strategy<Value = Vec<Vec<u8>>> {
    prop::collection::vec(prop::collection::vec(0u8..2, 2..=5), 1..=5)
}

pub fn permutation_strategy() -> impl Strategy<Value = Vec<usize>> {
    Just((0..7).collect::<Vec<usize>>()).prop_shuffle()
}

/// Coefficient rows of every u·g·v of degree β over the words of β.
fn ideal_rows(a: &Alphabet, gens: &[QPoly], beta: &MultiDegree) -> (Vec<Word>, Vec<Vec<Rational>>) {
    let words = a.words_of_degree(beta);
    let mut rows = Vec::new();
    for g in gens {
        let Some(dg) = g.degree(a) else { continue };
        let Some(rest) = beta.checked_sub(&dg) else { continue };
        for d1 in degrees_upto(rest.total()).into_iter().filter(|d| d.le(&rest)) {
            let d2 = rest.checked_sub(&d1).unwrap();
            for u in a.words_of_degree(&d1) {
                for v in a.words_of_degree(&d2) {
                    let f = g.sandwich(&u, &v);
                    rows.push(words.iter().map(|w| f.coeff(w)).collect());
                }
            }
        }
    }
    (words, rows)
}

/// Reduction to zero against membership in the span of all u·g·v, and
/// normal word counts against the codimension of that span.
pub fn check_ideal(gens: &[QPoly]) -> Result<(), TestCaseError> {
    let a = Alphabet::standard2();
    let st = complete_to_degree(&a, gens, TOP);
    let v = st.obstructions();
    for beta in degrees_upto(TOP) {
        let (words, rows) = ideal_rows(&a, gens, &beta);
        for r in &rows {
            let f = QPoly::from_terms(words.iter().cloned().zip(r.iter().cloned()));
            prop_assert!(st.reduce(&f).is_zero());
        }
        let rank = if rows.is_empty() { 0 } else { Matrix::from_rows(rows, words.len()).rank() };
        let normal = words.iter().filter(|w| !v.divides(w)).count();
        prop_assert_eq!(normal, words.len() - rank, "degree {}", beta);
    }
    Ok(())
}

pub fn random_antichain(words: &[Vec<u8>]) -> Antichain {
    let mut ws: Vec<Word> = words.iter().map(|w| Word(w.clone())).collect();
    ws.sort_by_key(|w| w.len());
    ws.dedup();
    let mut v = Antichain::empty();
    for w in ws {
        if !v.divides(&w) {
            v = v.with(w).unwrap();
        }
    }
    v
}

pub fn anick_identity(v: &Antichain, cap: u32) -> bool {
    let a = Alphabet::standard2();
    let h = hilbert_series_monomial(&a, v, cap);
    chain_series(&a, v, cap).mul(&h) == TruncatedSeries::one(2, cap)
}

pub fn check_antichain(words: &[Vec<u8>]) -> Result<(), TestCaseError> {
    let a = Alphabet::standard2();
    let v = random_antichain(words);
    prop_assert!(anick_identity(&v, 12), "{:?}", v);
    prop_assert_eq!(hilbert_series_monomial(&a, &v, 9), brute_force_series(&a, &v, 9));
    Ok(())
}

/// 𝒢 at p = 1 with two redundant combinations appended.
pub fn g_generators() -> (Presentation, Vec<ncgb_core::Poly>) {
    let g = instantiate_family("G", &bindings(&[("p", "1")])).unwrap();
    let r = &g.relations;
    let mut gens = r.clone();
    gens.push(r[0].add(&r[1]));
    gens.push(r[1].sub(&r[2]));
    (g, gens)
}

pub fn check_order(perm: &[usize]) -> Result<(), TestCaseError> {
    let (g, gens) = g_generators();
    let base = interreduce(&complete_to_degree(&g.alphabet, &g.relations, 10).polys());
    let shuffled: Vec<_> = perm.iter().map(|&i| gens[i].clone()).collect();
    let st = complete_to_degree(&g.alphabet, &shuffled, 10);
    prop_assert_eq!(interreduce(&st.polys()), base);
    Ok(())
}

pub fn catalog_antichains() -> Vec<(String, Antichain)> {
    points()
        .iter()
        .map(|(id, e)| {
            let p = instantiate_family(id, &e.points[0]).unwrap();
            (id.clone(), complete_to_degree(&p.alphabet, &p.relations, 12).obstructions())
        })
        .collect()
}

/// Leading words and Hilbert series of a presentation.
pub fn table(p: &Presentation, cap: u32) -> (Vec<String>, TruncatedSeries) {
    let st = complete_to_degree(&p.alphabet, &p.relations, cap);
    let lw = st.leading_words().iter().map(|w| p.alphabet.render(w)).collect();
    (lw, hilbert_series_monomial(&p.alphabet, &st.obstructions(), cap))
}

/// Twisting to the base point keeps leading words and series; switching
/// swaps the grading of the series.
pub fn twist_and_switch_invariance() -> Result<(), String> {
    for (id, e) in &points() {
        for pt in &e.points {
            let p = instantiate_family(id, pt).map_err(|x| x.to_string())?;
            let (t, _) = twist_to_base(id, e, pt).map_err(|x| x.to_string())?;
            if table(&p, 11) != table(&t, 11) {
                return Err(format!("{id} {pt:?}: twist changed the tables"));
            }
            let s = switch_presentation(&p).map_err(|x| x.to_string())?;
            if table(&s, 10).1 != table(&p, 10).1.swap() {
                return Err(format!("{id} {pt:?}: switch series"));
            }
        }
    }
    Ok(())
}

/// 1/∏(1 − t^e) by repeated geometric sums.
pub fn product_oracle(exps: &[usize], cap: usize) -> Vec<i64> {
    let mut c = vec![0i64; cap + 1];
    c[0] = 1;
    for &e in exps {
        for n in e..=cap {
            c[n] += c[n - e];
        }
    }
    c
}

/// Inverse of a polynomial with constant term 1 by long division.
pub fn inverse_oracle(p: &[i64], cap: usize) -> Vec<i64> {
    let mut c = vec![0i64; cap + 1];
    c[0] = 1;
    for n in 1..=cap {
        c[n] = -(1..=n.min(p.len() - 1)).map(|k| p[k] * c[n - k]).sum::<i64>();
    }
    c
}
