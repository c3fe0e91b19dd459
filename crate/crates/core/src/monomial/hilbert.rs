use std::collections::HashMap;

use crate::series::TruncatedSeries;
use crate::words::{Alphabet, Antichain, FactorAutomaton, MultiDegree};

/// Multigraded Hilbert series of k⟨X⟩/(V) up to total degree `cap`, by a
/// transfer-matrix count over the factor automaton.
pub fn hilbert_series_monomial(alphabet: &Alphabet, v: &Antichain, cap: u32) -> TruncatedSeries {
    let aut = FactorAutomaton::new(v, alphabet.len());
    let s = alphabet.arity();
    let mut out = TruncatedSeries::zero(s, cap);
    // Degrees in order of total degree so sources are final before use.
    let degrees = grid_degrees(s, cap);
    let pos: HashMap<&MultiDegree, usize> = degrees.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let index = |d: &MultiDegree| pos.get(d).copied();
    let states = aut.states();
    let mut table = vec![vec![0i64; states]; degrees.len()];
    table[0][0] = 1;
    for (k, d) in degrees.iter().enumerate() {
        let total: i64 = table[k].iter().sum();
        out.add_at(d, total);
        for st in 0..states {
            let c = table[k][st];
            if c == 0 {
                continue;
            }
            for l in 0..alphabet.len() as u8 {
                let e = d.add(alphabet.letter_degree(l));
                if e.total() > cap {
                    continue;
                }
                let t = aut.step(st, l);
                if aut.is_dead(t) {
                    continue;
                }
                let j = index(&e).unwrap();
                table[j][t] += c;
            }
        }
    }
    out
}

fn grid_degrees(s: usize, cap: u32) -> Vec<MultiDegree> {
    let mut all = Vec::new();
    let mut cur = vec![0u32; s];
    fn rec(cur: &mut Vec<u32>, k: usize, left: u32, out: &mut Vec<MultiDegree>) {
        if k == cur.len() {
            out.push(MultiDegree(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[k] = e;
            rec(cur, k + 1, left - e, out);
        }
        cur[k] = 0;
    }
    rec(&mut cur, 0, cap, &mut all);
    all.sort_by(|a, b| a.cmp_deglex(b));
    all
}

/// Reference count by enumerating every word and testing for factors.
pub fn brute_force_series(alphabet: &Alphabet, v: &Antichain, cap: u32) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(alphabet.arity(), cap);
    for d in grid_degrees(alphabet.arity(), cap) {
        let n = alphabet.words_of_degree(&d).iter().filter(|w| !v.divides(w)).count();
        out.add_at(&d, n as i64);
    }
    out
}

pub fn collapse_series(h: &TruncatedSeries) -> TruncatedSeries {
    h.collapse()
}
