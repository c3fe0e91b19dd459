use std::collections::BTreeMap;

use serde::Serialize;

use crate::series::TruncatedSeries;
use crate::words::{Alphabet, Antichain, MultiDegree, Word};

/// Graph of chains: vertices are the letters outside V and the proper
/// suffixes of length ≥ 2 of words in V.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainGraph {
    pub vertices: Vec<Word>,
    pub arrows: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    starts: Vec<usize>,
}

pub fn chain_graph(alphabet: &Alphabet, v: &Antichain) -> ChainGraph {
    let mut vertices: Vec<Word> = (0..alphabet.len() as u8).map(Word::letter).filter(|w| !v.contains(w)).collect();
    for w in v.words() {
        for k in 1..w.len().saturating_sub(1) {
            vertices.push(w.slice(k, w.len()));
        }
    }
    vertices.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    vertices.dedup();
    let mut arrows = Vec::new();
    let mut adj = vec![Vec::new(); vertices.len()];
    for (i, u) in vertices.iter().enumerate() {
        for (j, w) in vertices.iter().enumerate() {
            let uw = u.concat(w);
            if !v.divides(&uw) {
                continue;
            }
            let minimal = (0..w.len()).all(|k| !v.divides(&u.concat(&w.slice(0, k))));
            if minimal {
                arrows.push((i, j));
                adj[i].push(j);
            }
        }
    }
    let starts = (0..vertices.len()).filter(|&i| vertices[i].len() == 1).collect();
    ChainGraph { vertices, arrows, adj, starts }
}

impl ChainGraph {
    pub fn has_arrow(&self, u: &Word, w: &Word) -> bool {
        let (Some(i), Some(j)) = (self.position(u), self.position(w)) else { return false };
        self.adj[i].contains(&j)
    }

    fn position(&self, w: &Word) -> Option<usize> {
        self.vertices.iter().position(|x| x == w)
    }

    /// Number of vertices on the longest path from a letter, or None when a
    /// cycle is reachable.
    pub fn longest_path(&self) -> Option<usize> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Active,
            Done(usize),
        }
        fn visit(g: &ChainGraph, i: usize, marks: &mut Vec<Mark>) -> Option<usize> {
            match marks[i] {
                Mark::Done(n) => return Some(n),
                Mark::Active => return None,
                Mark::New => {}
            }
            marks[i] = Mark::Active;
            let mut best = 0;
            for &j in &g.adj[i] {
                best = best.max(visit(g, j, marks)?);
            }
            marks[i] = Mark::Done(best + 1);
            Some(best + 1)
        }
        let mut marks = vec![Mark::New; self.vertices.len()];
        let mut best = 0;
        for &s in &self.starts {
            best = best.max(visit(self, s, &mut marks)?);
        }
        Some(best)
    }
}

/// The n-chains of one level, each with its path factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSet {
    pub level: usize,
    pub chains: Vec<(Word, Vec<Word>)>,
}

impl ChainSet {
    /// Multidegree → number of chains.
    pub fn degree_counts(&self, alphabet: &Alphabet) -> BTreeMap<MultiDegree, usize> {
        let mut m = BTreeMap::new();
        for (w, _) in &self.chains {
            *m.entry(alphabet.degree(w)).or_insert(0) += 1;
        }
        m
    }
}

/// Chain sets C_0 … C_max_level with total degree ≤ cap.
pub fn enumerate_chains(alphabet: &Alphabet, v: &Antichain, max_level: usize, cap: u32) -> Vec<ChainSet> {
    let g = chain_graph(alphabet, v);
    let mut out = vec![ChainSet { level: 0, chains: vec![(Word::empty(), Vec::new())] }];
    let vdeg: Vec<u32> = g.vertices.iter().map(|w| alphabet.total_degree(w)).collect();
    let mut frontier: Vec<(Vec<usize>, u32)> =
        g.starts.iter().filter(|&&s| vdeg[s] <= cap).map(|&s| (vec![s], vdeg[s])).collect();
    for level in 1..=max_level {
        let chains = frontier
            .iter()
            .map(|(path, _)| {
                let parts: Vec<Word> = path.iter().map(|&i| g.vertices[i].clone()).collect();
                let word = Word(parts.iter().flat_map(|p| p.letters().to_vec()).collect());
                (word, parts)
            })
            .collect();
        out.push(ChainSet { level, chains });
        let mut next = Vec::new();
        for (path, d) in &frontier {
            for &j in &g.adj[*path.last().unwrap()] {
                if d + vdeg[j] <= cap {
                    let mut p = path.clone();
                    p.push(j);
                    next.push((p, d + vdeg[j]));
                }
            }
        }
        frontier = next;
    }
    out
}

/// Σ_n (−1)^n H_{kC_n} up to total degree cap.
pub fn chain_series(alphabet: &Alphabet, v: &Antichain, cap: u32) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(alphabet.arity(), cap);
    for set in enumerate_chains(alphabet, v, cap as usize + 1, cap) {
        let sign = if set.level % 2 == 0 { 1 } else { -1 };
        for (d, n) in set.degree_counts(alphabet) {
            s.add_at(&d, sign * n as i64);
        }
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelProfile {
    pub level: usize,
    pub degrees: Vec<(String, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Invariants {
    /// Largest level with a chain of total degree ≤ cap.
    pub d: usize,
    /// Longest path in the chain graph; None when it has a reachable cycle.
    pub longest_path: Option<usize>,
    /// True when no (d+1)-chain exists in any degree.
    pub finite_chains: bool,
    pub chain_profile: Vec<LevelProfile>,
}

pub fn invariants_estimate(alphabet: &Alphabet, v: &Antichain, cap: u32) -> Invariants {
    let g = chain_graph(alphabet, v);
    let longest = g.longest_path();
    let sets = enumerate_chains(alphabet, v, cap as usize + 1, cap);
    let d = sets.iter().filter(|s| !s.chains.is_empty()).map(|s| s.level).max().unwrap_or(0);
    let chain_profile = sets
        .iter()
        .filter(|s| !s.chains.is_empty())
        .map(|s| LevelProfile {
            level: s.level,
            degrees: s.degree_counts(alphabet).into_iter().map(|(k, n)| (k.to_string(), n)).collect(),
        })
        .collect();
    Invariants { d, longest_path: longest, finite_chains: longest == Some(d), chain_profile }
}
