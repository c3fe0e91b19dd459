use std::collections::BTreeMap;

use crate::arith::Scalar;
use crate::poly::{NcPoly, Reducer};
use crate::words::{Alphabet, Antichain, MultiDegree, Word};

use super::{composition, find_ambiguities, Ambiguity};

#[derive(Debug, Clone, PartialEq)]
pub struct BasisElement<K> {
    pub poly: NcPoly<K>,
    pub degree: MultiDegree,
    pub minimal: bool,
}

/// A reduced Gröbner basis valid in total degrees up to `bound`.
#[derive(Debug, Clone)]
pub struct GroebnerState<K> {
    pub alphabet: Alphabet,
    pub basis: Vec<BasisElement<K>>,
    pub bound: u32,
    /// Every (i, j, ambiguity) whose composition was reduced, with indices
    /// into `basis`.
    pub processed: Vec<(usize, usize, Ambiguity)>,
}

struct Pending {
    word: Word,
    i: usize,
    j: usize,
    amb: Ambiguity,
}

/// Completion with compositions handled degree by degree.
pub fn complete_to_degree<K: Scalar>(alphabet: &Alphabet, gens: &[NcPoly<K>], bound: u32) -> GroebnerState<K> {
    let mut st = complete_raw(alphabet, gens, bound);
    st.basis.sort_by(|a, b| alphabet.compare_deglex(a.poly.lw(), b.poly.lw()));
    mark_minimal(&mut st);
    st.processed = all_ambiguities(&st);
    st
}

fn all_ambiguities<K: Scalar>(st: &GroebnerState<K>) -> Vec<(usize, usize, Ambiguity)> {
    let mut out = Vec::new();
    for (i, f) in st.basis.iter().enumerate() {
        for (j, g) in st.basis.iter().enumerate() {
            for a in find_ambiguities(f.poly.lw(), g.poly.lw()) {
                if st.alphabet.total_degree(&a.word(f.poly.lw())) <= st.bound {
                    out.push((i, j, a));
                }
            }
        }
    }
    out
}

fn complete_raw<K: Scalar>(alphabet: &Alphabet, gens: &[NcPoly<K>], bound: u32) -> GroebnerState<K> {
    let mut by_degree: BTreeMap<u32, Vec<NcPoly<K>>> = BTreeMap::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let t = alphabet.total_degree(g.lw());
        if t <= bound {
            by_degree.entry(t).or_default().push(g.clone());
        }
    }
    let mut basis: Vec<NcPoly<K>> = Vec::new();
    let mut queue: BTreeMap<u32, Vec<Pending>> = BTreeMap::new();
    let top = bound;
    for n in 1..=top {
        let mut candidates: Vec<NcPoly<K>> = by_degree.remove(&n).unwrap_or_default();
        if let Some(mut pend) = queue.remove(&n) {
            pend.sort_by(|a, b| alphabet.compare_deglex(&a.word, &b.word).then((a.i, a.j).cmp(&(b.i, b.j))));
            for p in pend {
                candidates.push(composition(&basis[p.i], &basis[p.j], &p.amb).unwrap());
            }
        }
        let start = basis.len();
        for c in candidates {
            let r = Reducer::new(&basis).reduce(&c);
            if r.is_zero() {
                continue;
            }
            basis.push(r.monic());
            let k = basis.len() - 1;
            for i in 0..=k {
                let pairs = if i == k { vec![(k, k)] } else { vec![(i, k), (k, i)] };
                for (a, b) in pairs {
                    for amb in find_ambiguities(basis[a].lw(), basis[b].lw()) {
                        let word = amb.word(basis[a].lw());
                        let t = alphabet.total_degree(&word);
                        if t <= bound {
                            queue.entry(t).or_default().push(Pending { word, i: a, j: b, amb });
                        }
                    }
                }
            }
        }
        // Tail-reduce the new block; lower elements cannot interact with it.
        for k in start..basis.len() {
            let (lw, lc) = {
                let (w, c) = basis[k].leading().unwrap();
                (w.clone(), c.clone())
            };
            let mut tail = basis[k].clone();
            tail.add_term(lw.clone(), -lc.clone());
            let others: Vec<NcPoly<K>> =
                basis.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, p)| p.clone()).collect();
            let mut red = Reducer::new(&others).reduce(&tail);
            red.add_term(lw, lc);
            basis[k] = red;
        }
    }
    GroebnerState {
        alphabet: alphabet.clone(),
        basis: basis
            .into_iter()
            .map(|p| BasisElement { degree: alphabet.degree(p.lw()), poly: p, minimal: false })
            .collect(),
        bound,
        processed: Vec::new(),
    }
}

/// f is minimal iff it survives reduction modulo the earlier minimal
/// elements completed to the total degree of f.
fn mark_minimal<K: Scalar>(st: &mut GroebnerState<K>) {
    let mut order: Vec<usize> = (0..st.basis.len()).collect();
    order.sort_by(|&a, &b| {
        let (wa, wb) = (st.basis[a].poly.lw(), st.basis[b].poly.lw());
        st.alphabet.total_degree(wa).cmp(&st.alphabet.total_degree(wb)).then(st.alphabet.compare_deglex(wa, wb))
    });
    let mut mins: Vec<NcPoly<K>> = Vec::new();
    for k in order {
        let f = st.basis[k].poly.clone();
        let t = st.alphabet.total_degree(f.lw());
        let sub = complete_raw(&st.alphabet, &mins, t);
        let polys: Vec<NcPoly<K>> = sub.basis.into_iter().map(|e| e.poly).collect();
        if !Reducer::new(&polys).reduce(&f).is_zero() {
            st.basis[k].minimal = true;
            mins.push(f);
        }
    }
}

impl<K: Scalar> GroebnerState<K> {
    pub fn polys(&self) -> Vec<NcPoly<K>> {
        self.basis.iter().map(|e| e.poly.clone()).collect()
    }

    pub fn leading_words(&self) -> Vec<Word> {
        self.basis.iter().map(|e| e.poly.lw().clone()).collect()
    }

    pub fn obstructions(&self) -> Antichain {
        Antichain::new(self.leading_words()).expect("reduced basis has antichain leading words")
    }

    pub fn minimal_polys(&self) -> Vec<NcPoly<K>> {
        self.basis.iter().filter(|e| e.minimal).map(|e| e.poly.clone()).collect()
    }

    pub fn reduce(&self, f: &NcPoly<K>) -> NcPoly<K> {
        let polys = self.polys();
        Reducer::new(&polys).reduce(f)
    }

    /// Compositions within the bound whose remainder is nonzero.
    pub fn nontrivial_compositions(&self) -> Vec<(usize, usize, Ambiguity)> {
        let polys = self.polys();
        let red = Reducer::new(&polys);
        all_ambiguities(self)
            .into_iter()
            .filter(|(i, j, a)| !red.reduce(&composition(&polys[*i], &polys[*j], a).unwrap()).is_zero())
            .collect()
    }
}

/// Mutual reduction to a monic set, each element normal modulo the others.
pub fn interreduce<K: Scalar>(basis: &[NcPoly<K>]) -> Vec<NcPoly<K>> {
    let mut g: Vec<NcPoly<K>> = basis.iter().filter(|p| !p.is_zero()).map(|p| p.monic()).collect();
    loop {
        let mut changed = false;
        let mut k = 0;
        while k < g.len() {
            let others: Vec<NcPoly<K>> =
                g.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, p)| p.clone()).collect();
            let r = Reducer::new(&others).reduce(&g[k]).monic();
            if r != g[k] {
                changed = true;
                if r.is_zero() {
                    g.remove(k);
                    continue;
                }
                g[k] = r;
            }
            k += 1;
        }
        if !changed {
            break;
        }
    }
    g.sort_by(|a, b| a.lw().len().cmp(&b.lw().len()).then(a.lw().cmp(b.lw())));
    g
}
