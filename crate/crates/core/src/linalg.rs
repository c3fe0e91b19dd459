//! Dense Gaussian elimination over exact scalars.

use crate::arith::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<K> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<K>,
}

impl<K: Scalar> Matrix<K> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![K::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<K>>, cols: usize) -> Self {
        let n = rows.len();
        let mut m = Matrix::zeros(n, cols);
        for (i, r) in rows.into_iter().enumerate() {
            for (j, x) in r.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &K {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: K) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else { continue };
            self.swap_rows(r, p);
            let inv = self.get(r, c).inv();
            for j in c..self.cols {
                let x = self.get(r, j).clone() * inv.clone();
                self.set(r, j, x);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for j in c..self.cols {
                    if self.get(r, j).is_zero() {
                        continue;
                    }
                    let x = self.get(i, j).clone() - f.clone() * self.get(r, j).clone();
                    self.set(i, j, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Some x with M x = b, or None when the system is inconsistent.
    pub fn solve(&self, b: &[K]) -> Option<Vec<K>> {
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for (i, bi) in b.iter().enumerate().take(self.rows) {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, bi.clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![K::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> K {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut acc = K::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else { return K::zero() };
            if p != c {
                m.swap_rows(p, c);
                acc = -acc;
            }
            let piv = m.get(c, c).clone();
            acc = acc * piv.clone();
            let inv = piv.inv();
            for i in c + 1..m.rows {
                let f = m.get(i, c).clone() * inv.clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let x = m.get(i, j).clone() - f.clone() * m.get(c, j).clone();
                    m.set(i, j, x);
                }
            }
        }
        acc
    }

    /// Basis of {x : M x = 0}.
    pub fn kernel(&self) -> Vec<Vec<K>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![K::zero(); self.cols];
                v[f] = K::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -m.get(r, f).clone();
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;
    use num_rational::BigRational;

    fn m(rows: &[&[i64]]) -> Matrix<BigRational> {
        let cols = rows[0].len();
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect(), cols)
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        for i in 0..3 {
            let s = (0..3).fold(q(0), |acc, j| acc + a.get(i, j).clone() * k[0][j].clone());
            assert_eq!(s, q(0));
        }
    }

    #[test]
    fn solve_and_det() {
        let a = m(&[&[2, 1], &[1, 3]]);
        assert_eq!(a.det(), q(5));
        assert_eq!(a.solve(&[q(3), q(4)]), Some(vec![q(1), q(1)]));
        let s = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.det(), q(0));
        assert_eq!(s.solve(&[q(1), q(3)]), None);
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det(), q(-1));
    }
}
