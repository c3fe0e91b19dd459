use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{render_rational, ArithError, Scalar, UPoly};

/// ℚ(θ) given by a monic irreducible minimal polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtensionField {
    generator: String,
    modulus: UPoly<BigRational>,
}

impl ExtensionField {
    pub fn new(generator: impl Into<String>, modulus: UPoly<BigRational>) -> Result<Arc<Self>, ArithError> {
        match (modulus.degree(), modulus.leading()) {
            (Some(d), Some(l)) if d >= 1 && l.is_one() => {}
            _ => return Err(ArithError::BadModulus),
        }
        if !is_irreducible(&modulus) {
            return Err(ArithError::Reducible(modulus.to_string()));
        }
        Ok(Arc::new(ExtensionField { generator: generator.into(), modulus }))
    }

    pub fn generator_name(&self) -> &str {
        &self.generator
    }

    pub fn modulus(&self) -> &UPoly<BigRational> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn generator(self: &Arc<Self>) -> FieldElement {
        ext_normalize(vec![BigRational::zero(), BigRational::one()], self)
    }

    fn reduce(&self, raw: Vec<BigRational>) -> Vec<BigRational> {
        UPoly::new(raw).div_rem(&self.modulus).1.into_coeffs()
    }
}

/// A rational number, or an element of a simple extension.
///
/// Coordinates are trimmed, so constants carry no field context and compare
/// equal across fields.
#[derive(Clone)]
pub struct FieldElement {
    ctx: Option<Arc<ExtensionField>>,
    coords: Vec<BigRational>,
}

pub fn ext_normalize(raw: Vec<BigRational>, ctx: &Arc<ExtensionField>) -> FieldElement {
    FieldElement::build(Some(ctx.clone()), ctx.reduce(raw))
}

pub fn ext_invert(a: &FieldElement) -> Result<FieldElement, ArithError> {
    a.try_inv()
}

impl FieldElement {
    fn build(ctx: Option<Arc<ExtensionField>>, mut coords: Vec<BigRational>) -> Self {
        while coords.last().is_some_and(|c| c.is_zero()) {
            coords.pop();
        }
        let ctx = if coords.len() > 1 { ctx } else { None };
        FieldElement { ctx, coords }
    }

    pub fn rational(x: BigRational) -> Self {
        FieldElement::build(None, vec![x])
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn context(&self) -> Option<&Arc<ExtensionField>> {
        self.ctx.as_ref()
    }

    /// True when rendering needs parentheses inside a product.
    pub fn is_compound(&self) -> bool {
        self.coords.iter().filter(|c| !c.is_zero()).count() > 1
            || (self.coords.len() > 1 && self.coords.last().is_some_and(|c| c.is_negative()))
    }

    fn join_ctx(&self, other: &Self) -> Option<Arc<ExtensionField>> {
        match (&self.ctx, &other.ctx) {
            (Some(a), Some(b)) => {
                assert!(Arc::ptr_eq(a, b) || a == b, "{}", ArithError::FieldMismatch);
                Some(a.clone())
            }
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        }
    }

    fn coord(&self, k: usize) -> BigRational {
        self.coords.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = FieldElement::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(ctx) = &self.ctx else {
            return write!(f, "{}", render_rational(&self.coord(0)));
        };
        let name = ctx.generator_name();
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let m = render_rational(&mag);
            match k {
                0 => write!(f, "{m}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{m}*")?;
                    }
                    write!(f, "{name}")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl Add for FieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let ctx = self.join_ctx(&rhs);
        let n = self.coords.len().max(rhs.coords.len());
        FieldElement::build(ctx, (0..n).map(|k| self.coord(k) + rhs.coord(k)).collect())
    }
}

impl Sub for FieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let ctx = self.join_ctx(&rhs);
        let n = self.coords.len().max(rhs.coords.len());
        FieldElement::build(ctx, (0..n).map(|k| self.coord(k) - rhs.coord(k)).collect())
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        FieldElement::build(self.ctx, self.coords.into_iter().map(|c| -c).collect())
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.coords.is_empty() || rhs.coords.is_empty() {
            return FieldElement::zero();
        }
        if self.coords.len() == 1 || rhs.coords.len() == 1 {
            let (c, v) =
                if self.coords.len() == 1 { (self.coords[0].clone(), rhs) } else { (rhs.coords[0].clone(), self) };
            return FieldElement::build(v.ctx, v.coords.into_iter().map(|x| x * c.clone()).collect());
        }
        let ctx = self.join_ctx(&rhs).unwrap();
        let prod = UPoly::new(self.coords).mul(&UPoly::new(rhs.coords));
        let coords = ctx.reduce(prod.into_coeffs());
        FieldElement::build(Some(ctx), coords)
    }
}

impl Div for FieldElement {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv()
    }
}

impl Zero for FieldElement {
    fn zero() -> Self {
        FieldElement { ctx: None, coords: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }
}

impl One for FieldElement {
    fn one() -> Self {
        FieldElement::rational(BigRational::one())
    }
}

impl From<BigRational> for FieldElement {
    fn from(x: BigRational) -> Self {
        FieldElement::rational(x)
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        FieldElement::rational(BigRational::from_integer(n.into()))
    }
}

impl Scalar for FieldElement {
    fn try_inv(&self) -> Result<Self, ArithError> {
        match self.coords.len() {
            0 => Err(ArithError::DivisionByZero),
            1 => Ok(FieldElement::rational(self.coords[0].recip())),
            _ => {
                let ctx = self.ctx.clone().unwrap();
                let (g, s, _) = UPoly::new(self.coords.clone()).ext_gcd(ctx.modulus());
                if g.degree() != Some(0) {
                    return Err(ArithError::NonInvertible(g.to_string()));
                }
                Ok(ext_normalize(s.into_coeffs(), &ctx))
            }
        }
    }

    fn from_i64(n: i64) -> Self {
        n.into()
    }

    fn from_rational(q: &BigRational) -> Self {
        FieldElement::rational(q.clone())
    }

    fn as_rational(&self) -> Option<BigRational> {
        match self.coords.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coords[0].clone()),
            _ => None,
        }
    }
}

/// Integer coefficients of a primitive multiple of m.
fn integer_multiple(m: &UPoly<BigRational>) -> Vec<BigInt> {
    let lcm = m.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> =
        m.coeffs().iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out
}

fn has_rational_root(m: &UPoly<BigRational>) -> bool {
    if m.coeff(0).is_zero() {
        return true;
    }
    let ints = integer_multiple(m);
    let a0 = ints.first().unwrap();
    let an = ints.last().unwrap();
    for num in divisors(a0) {
        for den in divisors(an) {
            for sign in [1, -1] {
                let r = BigRational::new(num.clone() * sign, den.clone());
                if m.eval(&r).is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

fn fp_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn fp_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn fp_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = fp_trim(a.to_vec());
    let dm = m.len() - 1;
    let inv = fp_pow(m[dm], p - 2, p);
    while r.len() > dm {
        let k = r.len() - 1;
        let c = r[k] * inv % p;
        for (i, &mi) in m.iter().enumerate() {
            let idx = k - dm + i;
            r[idx] = (r[idx] + p - c * mi % p) % p;
        }
        r = fp_trim(r);
    }
    r
}

fn fp_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_rem(&out, m, p)
}

fn fp_gcd_degree(a: &[u64], b: &[u64], p: u64) -> usize {
    let (mut a, mut b) = (fp_trim(a.to_vec()), fp_trim(b.to_vec()));
    while !b.is_empty() {
        let r = fp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a.len().saturating_sub(1)
}

/// Ben-Or test over F_p.
fn fp_irreducible(m: &[u64], p: u64) -> bool {
    let d = m.len() - 1;
    let x = vec![0, 1];
    let mut xp = x.clone();
    for _ in 0..d / 2 {
        let mut acc = vec![1];
        let mut base = xp.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = fp_mulmod(&acc, &base, m, p);
            }
            base = fp_mulmod(&base, &base, m, p);
            e >>= 1;
        }
        xp = acc;
        let mut diff = xp.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        if fp_gcd_degree(m, &diff, p) > 0 {
            return false;
        }
    }
    true
}

/// Irreducibility over ℚ: exact for degree ≤ 3, certified by a prime
/// modulo which m stays irreducible for higher degree.
fn is_irreducible(m: &UPoly<BigRational>) -> bool {
    let d = m.degree().unwrap_or(0);
    if d == 1 {
        return true;
    }
    if m.gcd(&m.derivative()).degree() != Some(0) || has_rational_root(m) {
        return false;
    }
    if d <= 3 {
        return true;
    }
    let ints = integer_multiple(m);
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71] {
        let pb = BigInt::from(p);
        if (ints.last().unwrap() % &pb).is_zero() {
            continue;
        }
        let red: Vec<u64> = ints.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
        if fp_irreducible(&red, p) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    fn field(c: &[i64]) -> Arc<ExtensionField> {
        ExtensionField::new("j", UPoly::new(c.iter().map(|&x| q(x)).collect())).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let k = field(&[1, 1, 1]);
        let t2 = ext_normalize(vec![q(0), q(0), q(1)], &k);
        assert_eq!(t2, ext_normalize(vec![q(-1), q(-1)], &k));
        let t3 = ext_normalize(vec![q(0), q(0), q(0), q(1)], &k);
        assert_eq!(t3, FieldElement::one());
        assert_eq!(ext_normalize(vec![q(5)], &k), FieldElement::from(5));
        assert_eq!(t2.to_string(), "-j - 1");
    }

    #[test]
    fn invert_examples() {
        let k = field(&[1, 1, 1]);
        let j = k.generator();
        assert_eq!(ext_invert(&j).unwrap(), ext_normalize(vec![q(-1), q(-1)], &k));
        let i = field(&[1, 0, 1]).generator();
        assert_eq!(ext_invert(&i).unwrap(), -i);
        let r = FieldElement::rational(crate::arith::q_frac(2, 3));
        assert_eq!(ext_invert(&r).unwrap(), FieldElement::rational(crate::arith::q_frac(3, 2)));
        assert_eq!(ext_invert(&FieldElement::zero()), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn rejects_reducible_moduli() {
        let bad = |c: &[i64]| ExtensionField::new("j", UPoly::new(c.iter().map(|&x| q(x)).collect()));
        assert!(matches!(bad(&[-1, 0, 1]), Err(ArithError::Reducible(_))));
        assert!(matches!(bad(&[1, 0, 2, 0, 1]), Err(ArithError::Reducible(_))));
        assert!(matches!(bad(&[1, 2]), Err(ArithError::BadModulus)));
        assert!(bad(&[1, 1, 1, 1, 1]).is_ok());
        assert!(bad(&[-2, 5, -3, 1]).is_ok());
        assert!(bad(&[2, -1, 1]).is_ok());
    }

    #[test]
    fn cyclotomic_identities() {
        let k = field(&[1, 1, 1, 1, 1]);
        let j = k.generator();
        assert_eq!(j.pow(5), FieldElement::one());
        let s = j.pow(2) + j.pow(3);
        // (j^2+j^3)^2 + (j^2+j^3) - 1 = 0 in the fifth cyclotomic field
        assert_eq!(s.pow(2) + s.clone() - FieldElement::one(), FieldElement::zero());
    }
}
