use std::cmp::Ordering;
use std::fmt;

/// A ℤˢ degree vector (nonnegative in every use here).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MultiDegree(pub Vec<u32>);

impl MultiDegree {
    pub fn zero(s: usize) -> Self {
        MultiDegree(vec![0; s])
    }

    pub fn unit(s: usize, i: usize) -> Self {
        let mut v = vec![0; s];
        v[i] = 1;
        MultiDegree(v)
    }

    pub fn new2(a: u32, b: u32) -> Self {
        MultiDegree(vec![a, b])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(MultiDegree)
    }

    /// Componentwise ≤.
    pub fn le(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Degree part of deg-lex: total degree first, then components from
    /// the last one down.
    pub fn cmp_deglex(&self, other: &Self) -> Ordering {
        self.total().cmp(&other.total()).then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }

    pub fn swapped(&self) -> Self {
        let mut v = self.0.clone();
        v.reverse();
        MultiDegree(v)
    }
}

impl fmt::Debug for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl serde::Serialize for MultiDegree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deglex_on_degrees() {
        let d = MultiDegree::new2;
        assert_eq!(d(0, 1).cmp_deglex(&d(1, 0)), Ordering::Greater);
        assert_eq!(d(3, 0).cmp_deglex(&d(1, 1)), Ordering::Greater);
        assert_eq!(d(1, 2).cmp_deglex(&d(2, 1)), Ordering::Greater);
        assert_eq!(d(2, 2).cmp_deglex(&d(2, 2)), Ordering::Equal);
        let e = |v: &[u32]| MultiDegree(v.to_vec());
        assert_eq!(e(&[0, 1, 1]).cmp_deglex(&e(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn arithmetic() {
        let a = MultiDegree::new2(2, 3);
        let b = MultiDegree::new2(1, 1);
        assert_eq!(a.checked_sub(&b), Some(MultiDegree::new2(1, 2)));
        assert_eq!(b.checked_sub(&a), None);
        assert_eq!(a.add(&b).total(), 7);
        assert_eq!(a.swapped(), MultiDegree::new2(3, 2));
    }
}
