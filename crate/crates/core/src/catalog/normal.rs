use std::collections::BTreeSet;

use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{Scalar, UPoly};
use crate::groebner::complete_to_degree;
use crate::linalg::Matrix;
use crate::monomial::hilbert_series_monomial;
use crate::presentation::Presentation;
use crate::series::TruncatedSeries;
use crate::words::{normal_words, MultiDegree, Word};
use crate::{FieldElement, Groebner, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalError {
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("element is zero in the algebra")]
    ZeroInAlgebra,
    #[error("cap {cap} is below the needed total degree {needed}")]
    IncompleteBasis { cap: u32, needed: u32 },
    #[error("the degree pencil needs each letter alone in its degree")]
    SharedLetterDegree,
}

/// h and h′ with z·x = h·z and x·z = z·h′.
#[derive(Debug, Clone, Serialize)]
pub struct NormalCertificate {
    pub letter: String,
    pub left: Option<String>,
    pub right: Option<String>,
    #[serde(skip)]
    pub left_poly: Option<Poly>,
    #[serde(skip)]
    pub right_poly: Option<Poly>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NormalityReport {
    pub element: String,
    pub degree: MultiDegree,
    pub normal: bool,
    pub certificates: Vec<NormalCertificate>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RegularityReport {
    pub element: String,
    pub total_degree: u32,
    pub regular: bool,
    /// Collapsed series of A/(z).
    pub quotient: Vec<i64>,
    /// (1 − tⁿ)·H_A collapsed.
    pub expected: Vec<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SequenceStep {
    pub normality: NormalityReport,
    pub regularity: RegularityReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct SequenceReport {
    pub steps: Vec<SequenceStep>,
    pub passed: bool,
    /// Collapsed series of the final quotient.
    pub final_series: Vec<i64>,
    /// Largest degree with a nonzero coefficient, when it lies below the cap.
    pub finite_dimensional_above: Option<u32>,
}

fn homogeneous_degree(z: &Poly, p: &Presentation) -> Result<MultiDegree, NormalError> {
    if !z.is_homogeneous(&p.alphabet) {
        return Err(NormalError::Inhomogeneous);
    }
    z.degree(&p.alphabet).ok_or(NormalError::ZeroInAlgebra)
}

fn coordinates(polys: &[Poly]) -> (Vec<Word>, Vec<Vec<FieldElement>>) {
    let support: BTreeSet<Word> = polys.iter().flat_map(|f| f.terms().map(|(w, _)| w.clone())).collect();
    let words: Vec<Word> = support.into_iter().collect();
    let cols = polys.iter().map(|f| words.iter().map(|w| f.coeff(w)).collect()).collect();
    (words, cols)
}

/// Some h in A_{deg(x)} with target = h·z (left) or z·h (right).
fn solve_multiplier(st: &Groebner, z: &Poly, target: &Poly, basis: &[Word], left: bool) -> Option<Poly> {
    let prods: Vec<Poly> = basis
        .iter()
        .map(|b| {
            let m = Poly::monomial(b.clone());
            st.reduce(&if left { m.mul(z) } else { z.mul(&m) })
        })
        .collect();
    let mut all = prods.clone();
    all.push(target.clone());
    let (words, cols) = coordinates(&all);
    let rows: Vec<Vec<FieldElement>> =
        (0..words.len()).map(|i| (0..prods.len()).map(|j| cols[j][i].clone()).collect()).collect();
    let rhs: Vec<FieldElement> = (0..words.len()).map(|i| cols[prods.len()][i].clone()).collect();
    let x = Matrix::from_rows(rows, prods.len()).solve(&rhs)?;
    Some(Poly::from_terms(basis.iter().cloned().zip(x)))
}

/// Normality of z against a completed state.
pub fn normality_in(st: &Groebner, p: &Presentation, z: &Poly) -> Result<NormalityReport, NormalError> {
    let deg = homogeneous_degree(z, p)?;
    let needed = deg.total() + 1;
    if st.bound < needed {
        return Err(NormalError::IncompleteBasis { cap: st.bound, needed });
    }
    let z = st.reduce(z);
    if z.is_zero() {
        return Err(NormalError::ZeroInAlgebra);
    }
    let v = st.obstructions();
    let mut certificates = Vec::new();
    for i in 0..p.alphabet.len() as u8 {
        let x = Poly::monomial(Word::letter(i));
        let basis = normal_words(&p.alphabet, &v, p.alphabet.letter_degree(i));
        let left = solve_multiplier(st, &z, &st.reduce(&z.mul(&x)), &basis, true);
        let right = solve_multiplier(st, &z, &st.reduce(&x.mul(&z)), &basis, false);
        certificates.push(NormalCertificate {
            letter: p.alphabet.name(i).to_string(),
            left: left.as_ref().map(|h| h.render(&p.alphabet)),
            right: right.as_ref().map(|h| h.render(&p.alphabet)),
            left_poly: left,
            right_poly: right,
        });
    }
    let normal = certificates.iter().all(|c| c.left_poly.is_some() && c.right_poly.is_some());
    Ok(NormalityReport { element: z.render(&p.alphabet), degree: deg, normal, certificates })
}

/// Whether z·A = A·z, decided on generators: z·x = h·z and x·z = z·h′
/// for every letter x. Induction on word length then gives normality in
/// every degree.
pub fn check_normal_element(z: &Poly, p: &Presentation, cap: u32) -> Result<NormalityReport, NormalError> {
    let st = complete_to_degree(&p.alphabet, &p.relations, cap);
    normality_in(&st, p, z)
}

fn collapsed(st: &Groebner, cap: u32) -> TruncatedSeries {
    hilbert_series_monomial(&st.alphabet, &st.obstructions(), cap).collapse()
}

pub(super) fn regularity_from_states(
    base: &Groebner,
    quotient: &Groebner,
    p: &Presentation,
    z: &Poly,
    cap: u32,
) -> Result<RegularityReport, NormalError> {
    let n = homogeneous_degree(z, p)?.total();
    let mut factor = vec![0i64; n as usize + 1];
    factor[0] = 1;
    factor[n as usize] -= 1;
    let expected = TruncatedSeries::univariate(&factor, cap).mul(&collapsed(base, cap));
    let actual = collapsed(quotient, cap);
    Ok(RegularityReport {
        element: z.render(&p.alphabet),
        total_degree: n,
        regular: actual == expected,
        quotient: actual.to_vec(),
        expected: expected.to_vec(),
    })
}

/// Compares H_{A/(z)} with (1 − tⁿ)·H_A up to the cap.
pub fn check_regular_quotient(z: &Poly, p: &Presentation, cap: u32) -> Result<RegularityReport, NormalError> {
    let base = complete_to_degree(&p.alphabet, &p.relations, cap);
    let mut rels = p.relations.clone();
    rels.push(z.clone());
    let quotient = complete_to_degree(&p.alphabet, &rels, cap);
    regularity_from_states(&base, &quotient, p, z, cap)
}

/// Checks z₁, …, z_m in order, each in the quotient by the earlier ones.
pub fn check_normal_sequence(zs: &[Poly], p: &Presentation, cap: u32) -> Result<SequenceReport, NormalError> {
    let mut rels = p.relations.clone();
    let mut st = complete_to_degree(&p.alphabet, &rels, cap);
    let mut steps = Vec::new();
    for z in zs {
        let q = p.with_relations(rels.clone());
        let normality = normality_in(&st, &q, z)?;
        rels.push(z.clone());
        let next = complete_to_degree(&p.alphabet, &rels, cap);
        let regularity = regularity_from_states(&st, &next, &q, z, cap)?;
        steps.push(SequenceStep { normality, regularity });
        st = next;
    }
    let final_series = collapsed(&st, cap).to_vec();
    let top = final_series.iter().rposition(|&c| c != 0).map_or(0, |k| k as u32);
    let finite_dimensional_above = (top < cap).then_some(top);
    let passed = steps.iter().all(|s| s.normality.normal && s.regularity.regular) && finite_dimensional_above.is_some();
    Ok(SequenceReport { steps, passed, final_series, finite_dimensional_above })
}

/// Outcome of the pencil test at one degree β.
#[derive(Debug, Clone, Serialize)]
pub struct PencilVerdict {
    pub degree: MultiDegree,
    pub dimension: usize,
    /// A letter x such that z·x = a·x·z has no nonzero solution for any a.
    pub excluded_by: Option<String>,
    /// gcd over a of the maximal minors of R_x − a·L_x, per letter.
    pub minor_gcds: Vec<(String, String)>,
}

fn matrix_of(polys: &[Poly], words: &[Word]) -> Vec<Vec<FieldElement>> {
    words.iter().map(|w| polys.iter().map(|f| f.coeff(w)).collect()).collect()
}

fn interpolate(xs: &[FieldElement], ys: &[FieldElement]) -> UPoly<FieldElement> {
    let mut acc = UPoly::zero();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut basis = UPoly::constant(yi.clone());
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                let lin = UPoly::new(vec![-xj.clone(), FieldElement::one()]);
                basis = basis.mul(&lin).scale(&(xi.clone() - xj.clone()).inv());
            }
        }
        acc = acc.add(&basis);
    }
    acc
}

fn subsets(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, m: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for k in start..m {
            if m - k < n - cur.len() {
                break;
            }
            cur.push(k);
            rec(k + 1, m, n, cur, out);
            cur.pop();
        }
    }
    rec(0, m, n, &mut cur, &mut out);
    out
}

/// gcd of the maximal minors of R − a·L, a polynomial in a whose roots are
/// the a with a nonzero kernel.
fn pencil_gcd(r: &[Vec<FieldElement>], l: &[Vec<FieldElement>], n: usize) -> UPoly<FieldElement> {
    let m = r.len();
    if m < n {
        return UPoly::zero();
    }
    let xs: Vec<FieldElement> = (0..=n as i64).map(FieldElement::from_i64).collect();
    let mut g = UPoly::zero();
    for rows in subsets(m, n) {
        let ys: Vec<FieldElement> = xs
            .iter()
            .map(|a| {
                let entries = rows
                    .iter()
                    .map(|&i| (0..n).map(|j| r[i][j].clone() - a.clone() * l[i][j].clone()).collect())
                    .collect();
                Matrix::from_rows(entries, n).det()
            })
            .collect();
        g = g.gcd(&interpolate(&xs, &ys));
        if g.degree() == Some(0) {
            break;
        }
    }
    g
}

/// For each β of total degree 1..=max_total, tries to rule out a nonzero
/// z ∈ A_β with z·x = a·x·z for every letter x. In a domain a normal
/// element must satisfy this with a ≠ 0 because A_{deg x} is spanned by x.
pub fn low_degree_normal_pencil(p: &Presentation, max_total: u32) -> Result<Vec<PencilVerdict>, NormalError> {
    let a = &p.alphabet;
    for i in 0..a.len() as u8 {
        for j in 0..a.len() as u8 {
            if i != j && a.letter_degree(i) == a.letter_degree(j) {
                return Err(NormalError::SharedLetterDegree);
            }
        }
    }
    let st = complete_to_degree(a, &p.relations, max_total + 1);
    let v = st.obstructions();
    let mut out = Vec::new();
    let s = a.arity();
    for beta in degrees_up_to(s, max_total) {
        let basis = normal_words(a, &v, &beta);
        if basis.is_empty() {
            continue;
        }
        let mut verdict =
            PencilVerdict { degree: beta.clone(), dimension: basis.len(), excluded_by: None, minor_gcds: Vec::new() };
        for i in 0..a.len() as u8 {
            let x = Word::letter(i);
            let target = normal_words(a, &v, &beta.add(a.letter_degree(i)));
            let right: Vec<Poly> = basis.iter().map(|b| st.reduce(&Poly::monomial(b.concat(&x)))).collect();
            let left: Vec<Poly> = basis.iter().map(|b| st.reduce(&Poly::monomial(x.concat(b)))).collect();
            let g = pencil_gcd(&matrix_of(&right, &target), &matrix_of(&left, &target), basis.len());
            verdict.minor_gcds.push((a.name(i).to_string(), g.to_string()));
            if verdict.excluded_by.is_none() && g.degree() == Some(0) {
                verdict.excluded_by = Some(a.name(i).to_string());
            }
        }
        out.push(verdict);
    }
    Ok(out)
}

fn degrees_up_to(s: usize, max_total: u32) -> Vec<MultiDegree> {
    let mut out = Vec::new();
    for t in 1..=max_total {
        let mut cur = vec![0u32; s];
        push_compositions(&mut cur, 0, t, &mut out);
    }
    out
}

fn push_compositions(cur: &mut Vec<u32>, k: usize, left: u32, out: &mut Vec<MultiDegree>) {
    if k + 1 == cur.len() {
        cur[k] = left;
        out.push(MultiDegree(cur.clone()));
        cur[k] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur[k] = e;
        push_compositions(cur, k + 1, left - e, out);
    }
    cur[k] = 0;
}
