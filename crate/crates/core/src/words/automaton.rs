use std::collections::{HashMap, VecDeque};

use super::{Alphabet, Antichain, MultiDegree, Word};

/// Aho-Corasick automaton recognizing words with a factor in an antichain.
#[derive(Debug, Clone)]
pub struct FactorAutomaton {
    letters: usize,
    trans: Vec<Vec<u32>>,
    dead: Vec<bool>,
}

impl FactorAutomaton {
    pub fn new(v: &Antichain, letters: usize) -> Self {
        let mut trans: Vec<Vec<Option<u32>>> = vec![vec![None; letters]];
        let mut dead = vec![false];
        for w in v.words() {
            let mut s = 0usize;
            for &c in w.letters() {
                s = match trans[s][c as usize] {
                    Some(t) => t as usize,
                    None => {
                        trans.push(vec![None; letters]);
                        dead.push(false);
                        let t = trans.len() - 1;
                        trans[s][c as usize] = Some(t as u32);
                        t
                    }
                };
            }
            dead[s] = true;
        }
        let n = trans.len();
        let mut fail = vec![0u32; n];
        let mut full = vec![vec![0u32; letters]; n];
        let mut queue = VecDeque::new();
        for c in 0..letters {
            match trans[0][c] {
                Some(t) => {
                    fail[t as usize] = 0;
                    full[0][c] = t;
                    queue.push_back(t as usize);
                }
                None => full[0][c] = 0,
            }
        }
        while let Some(s) = queue.pop_front() {
            if dead[fail[s] as usize] {
                dead[s] = true;
            }
            for c in 0..letters {
                match trans[s][c] {
                    Some(t) => {
                        fail[t as usize] = full[fail[s] as usize][c];
                        full[s][c] = t;
                        queue.push_back(t as usize);
                    }
                    None => full[s][c] = full[fail[s] as usize][c],
                }
            }
        }
        FactorAutomaton { letters, trans: full, dead }
    }

    pub fn states(&self) -> usize {
        self.trans.len()
    }

    pub fn letters(&self) -> usize {
        self.letters
    }

    pub fn step(&self, s: usize, c: u8) -> usize {
        self.trans[s][c as usize] as usize
    }

    pub fn is_dead(&self, s: usize) -> bool {
        self.dead[s]
    }

    /// True if `w` has no factor in the antichain.
    pub fn accepts(&self, w: &Word) -> bool {
        let mut s = 0;
        for &c in w.letters() {
            s = self.step(s, c);
            if self.dead[s] {
                return false;
            }
        }
        true
    }

    /// Number of normal words of degree `rem` readable from state `s`.
    fn count(
        &self,
        alphabet: &Alphabet,
        s: usize,
        rem: &MultiDegree,
        memo: &mut HashMap<(usize, MultiDegree), u64>,
    ) -> u64 {
        if rem.is_zero() {
            return 1;
        }
        if let Some(&c) = memo.get(&(s, rem.clone())) {
            return c;
        }
        let mut total = 0;
        for c in 0..self.letters as u8 {
            let t = self.step(s, c);
            if self.dead[t] {
                continue;
            }
            if let Some(r) = rem.checked_sub(alphabet.letter_degree(c)) {
                total += self.count(alphabet, t, &r, memo);
            }
        }
        memo.insert((s, rem.clone()), total);
        total
    }

    /// Normal words of degree β, deg-lex descending. Branches that cannot
    /// complete are cut by a memoized count, so work is linear in output.
    pub fn normal_words(&self, alphabet: &Alphabet, beta: &MultiDegree) -> Vec<Word> {
        let mut memo = HashMap::new();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.enumerate(alphabet, 0, beta, &mut cur, &mut out, &mut memo);
        out
    }

    fn enumerate(
        &self,
        alphabet: &Alphabet,
        s: usize,
        rem: &MultiDegree,
        cur: &mut Vec<u8>,
        out: &mut Vec<Word>,
        memo: &mut HashMap<(usize, MultiDegree), u64>,
    ) {
        if rem.is_zero() {
            out.push(Word(cur.clone()));
            return;
        }
        for c in (0..self.letters as u8).rev() {
            let t = self.step(s, c);
            if self.dead[t] {
                continue;
            }
            let Some(r) = rem.checked_sub(alphabet.letter_degree(c)) else { continue };
            if self.count(alphabet, t, &r, memo) == 0 {
                continue;
            }
            cur.push(c);
            self.enumerate(alphabet, t, &r, cur, out, memo);
            cur.pop();
        }
    }
}

/// Words of degree β with no factor in V, deg-lex descending.
pub fn normal_words(alphabet: &Alphabet, v: &Antichain, beta: &MultiDegree) -> Vec<Word> {
    FactorAutomaton::new(v, alphabet.len()).normal_words(alphabet, beta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Alphabet::standard2().parse_word(s).unwrap()
    }

    fn ac(ws: &[&str]) -> Antichain {
        Antichain::new(ws.iter().map(|s| w(s))).unwrap()
    }

    #[test]
    fn examples() {
        let a = Alphabet::standard2();
        assert_eq!(normal_words(&a, &Antichain::empty(), &MultiDegree::new2(1, 1)), vec![w("x2*x1"), w("x1*x2")]);
        assert_eq!(normal_words(&a, &ac(&["x2*x1^2"]), &MultiDegree::new2(2, 1)), vec![w("x1*x2*x1"), w("x1^2*x2")]);
        let v = ac(&["x2*x1^2", "x2^2*x1*x2*x1", "x2^4*x1", "x2^3*x1*x2^2*x1"]);
        let nw = normal_words(&a, &v, &MultiDegree::new2(2, 3));
        let brute: Vec<Word> =
            a.words_of_degree(&MultiDegree::new2(2, 3)).into_iter().filter(|u| !v.divides(u)).collect();
        assert_eq!(nw, brute);
        assert_eq!(nw.len(), 6);
    }

    #[test]
    fn matches_brute_force_filter() {
        let a = Alphabet::standard2();
        let v = ac(&["x2*x1*x2", "x1^3", "x2^2*x1^2"]);
        let aut = FactorAutomaton::new(&v, 2);
        for i in 0..=5 {
            for j in 0..=(8 - i) {
                let beta = MultiDegree::new2(i, j);
                let expect: Vec<Word> = a.words_of_degree(&beta).into_iter().filter(|u| !v.divides(u)).collect();
                assert_eq!(aut.normal_words(&a, &beta), expect);
                for u in a.words_of_degree(&beta) {
                    assert_eq!(aut.accepts(&u), !v.divides(&u));
                }
            }
        }
    }
}
