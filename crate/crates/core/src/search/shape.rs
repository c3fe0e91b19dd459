use serde::Serialize;
use thiserror::Error;

use crate::series::TruncatedSeries;
use crate::words::MultiDegree;

use std::fmt;

/// Relation degree types of the classification, named by the total
/// degrees of a minimal set of relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ResolutionType {
    T355,
    T347,
    T4445,
    T44455,
    T444,
}

impl ResolutionType {
    pub const ALL: [ResolutionType; 5] = [
        ResolutionType::T355,
        ResolutionType::T347,
        ResolutionType::T4445,
        ResolutionType::T44455,
        ResolutionType::T444,
    ];

    pub fn code(self) -> &'static str {
        match self {
            ResolutionType::T355 => "355",
            ResolutionType::T347 => "347",
            ResolutionType::T4445 => "4445",
            ResolutionType::T44455 => "44455",
            ResolutionType::T444 => "444",
        }
    }

    pub fn from_code(s: &str) -> Option<Self> {
        ResolutionType::ALL.into_iter().find(|t| t.code() == s)
    }

    /// Total degrees of the minimal relations.
    pub fn relation_degrees(self) -> &'static [u32] {
        match self {
            ResolutionType::T355 => &[3, 5, 5],
            ResolutionType::T347 => &[3, 4, 7],
            ResolutionType::T4445 => &[4, 4, 4, 5],
            ResolutionType::T44455 => &[4, 4, 4, 5, 5],
            ResolutionType::T444 => &[4, 4, 4],
        }
    }

    /// Total degree of the Gorenstein parameter.
    pub fn gorenstein_total(self) -> u32 {
        match self {
            ResolutionType::T355 => 11,
            ResolutionType::T347 => 12,
            _ => 10,
        }
    }
}

impl fmt::Display for ResolutionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.relation_degrees().iter().map(|d| d.to_string()).collect();
        write!(f, "({})", d.join(","))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShapeError {
    #[error("alternating shift polynomial has constant term {0}")]
    NotInvertible(i64),
    #[error("shape has no levels")]
    Empty,
}

/// Multidegree shifts of a minimal free resolution of k, level by level,
/// with the Gorenstein parameter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ResolutionShape {
    pub levels: Vec<Vec<MultiDegree>>,
    pub gorenstein: MultiDegree,
}

impl ResolutionShape {
    /// Five-term shape over two generators determined by the level-2 shifts
    /// and γ: level 3 is γ minus level 2, level 4 is γ minus the letters.
    pub fn gorenstein5(level2: &[MultiDegree], gamma: MultiDegree) -> Self {
        let mut l2: Vec<MultiDegree> = level2.to_vec();
        l2.sort_by(|a, b| a.cmp_deglex(b));
        let mut l3: Vec<MultiDegree> = l2.iter().filter_map(|d| gamma.checked_sub(d)).collect();
        l3.sort_by(|a, b| a.cmp_deglex(b));
        let mut l4: Vec<MultiDegree> =
            [MultiDegree::new2(0, 1), MultiDegree::new2(1, 0)].iter().filter_map(|d| gamma.checked_sub(d)).collect();
        l4.sort_by(|a, b| a.cmp_deglex(b));
        ResolutionShape {
            levels: vec![
                vec![MultiDegree::zero(2)],
                vec![MultiDegree::new2(1, 0), MultiDegree::new2(0, 1)],
                l2,
                l3,
                l4,
                vec![gamma.clone()],
            ],
            gorenstein: gamma,
        }
    }

    pub fn level2(&self) -> &[MultiDegree] {
        self.levels.get(2).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn arity(&self) -> usize {
        self.gorenstein.arity()
    }

    /// Exchanges the two grading coordinates everywhere.
    pub fn swapped(&self) -> Self {
        let levels = self
            .levels
            .iter()
            .map(|l| {
                let mut v: Vec<MultiDegree> = l.iter().map(|d| d.swapped()).collect();
                v.sort_by(|a, b| a.cmp_deglex(b));
                v
            })
            .collect();
        ResolutionShape { levels, gorenstein: self.gorenstein.swapped() }
    }

    pub fn describe(&self) -> String {
        let l2: Vec<String> = self.level2().iter().map(|d| d.to_string()).collect();
        format!("[{}] γ={}", l2.join(","), self.gorenstein)
    }
}

/// Inverse of Σ_i (−1)^i Σ_{shift ∈ level i} t^shift up to total degree cap.
pub fn series_from_resolution(shape: &ResolutionShape, cap: u32) -> Result<TruncatedSeries, ShapeError> {
    let nvars = shape.levels.first().and_then(|l| l.first()).map(|d| d.arity()).ok_or(ShapeError::Empty)?;
    let mut euler = TruncatedSeries::zero(nvars, cap);
    for (i, level) in shape.levels.iter().enumerate() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for d in level {
            if d.total() <= cap {
                euler.add_at(d, sign);
            }
        }
    }
    let c0 = euler.get(&MultiDegree::zero(nvars));
    euler.inverse().ok_or(ShapeError::NotInvertible(c0))
}

/// The three clauses for one coordinate: sorted shifts s with
/// s₁ ≥ 1, s₁ + s_m < p and s₂ + s_m ≤ p.
pub fn check_shift_clauses(shifts: &[u32], p: u32) -> Result<(), String> {
    let mut s = shifts.to_vec();
    s.sort_unstable();
    let (Some(&first), Some(&last)) = (s.first(), s.last()) else {
        return Err("no middle shifts".into());
    };
    if first < 1 {
        return Err(format!("smallest shift {first} < 1"));
    }
    if first + last >= p {
        return Err(format!("{first} + {last} ≮ {p}"));
    }
    if let Some(&second) = s.get(1) {
        if second + last > p {
            return Err(format!("{second} + {last} > {p}"));
        }
    }
    Ok(())
}

/// Checks the shift inequalities on the middle level against γ = (p, q);
/// the error names the violated clause.
pub fn resolution_shape_constraints(shape: &ResolutionShape) -> Result<(), String> {
    let l2 = shape.level2();
    if shape.arity() != 2 {
        return Err("two grading coordinates required".into());
    }
    let us: Vec<u32> = l2.iter().map(|d| d.0[0]).collect();
    let vs: Vec<u32> = l2.iter().map(|d| d.0[1]).collect();
    check_shift_clauses(&us, shape.gorenstein.0[0]).map_err(|e| format!("first coordinate: {e}"))?;
    check_shift_clauses(&vs, shape.gorenstein.0[1]).map_err(|e| format!("second coordinate: {e}"))?;
    Ok(())
}

/// Orbit key: first coordinates of level 2 in deg-lex order. The larger
/// key is kept as the switching representative.
fn orbit_key(shape: &ResolutionShape) -> Vec<u32> {
    shape.level2().iter().map(|d| d.0[0]).collect()
}

/// All shapes of a type: off-axis level-2 shifts with the type's total
/// degrees and γ of the Gorenstein total degree, subject to the shift
/// inequalities. With `normalize`
/// one shape per switching orbit is kept.
pub fn candidate_shapes(kind: ResolutionType, normalize: bool, cap: u32) -> Vec<ResolutionShape> {
    let totals = kind.relation_degrees();
    let mut level2s: Vec<Vec<MultiDegree>> = vec![Vec::new()];
    for &n in totals {
        let mut next = Vec::new();
        for l in &level2s {
            for a in 1..n {
                let mut m = l.clone();
                m.push(MultiDegree::new2(a, n - a));
                m.sort();
                next.push(m);
            }
        }
        next.sort();
        next.dedup();
        level2s = next;
    }
    let g = kind.gorenstein_total();
    let mut out: Vec<ResolutionShape> = Vec::new();
    for l2 in &level2s {
        for p in 1..g {
            let shape = ResolutionShape::gorenstein5(l2, MultiDegree::new2(p, g - p));
            if resolution_shape_constraints(&shape).is_err() {
                continue;
            }
            if series_from_resolution(&shape, cap).is_err() {
                continue;
            }
            out.push(shape);
        }
    }
    if normalize {
        let all = out.clone();
        let rank = |s: &ResolutionShape| (orbit_key(s), s.level2().to_vec(), s.gorenstein.clone());
        out.retain(|s| {
            let w = s.swapped();
            !all.contains(&w) || rank(s) >= rank(&w)
        });
    }
    out.sort_by(|a, b| orbit_key(b).cmp(&orbit_key(a)).then_with(|| a.gorenstein.0.cmp(&b.gorenstein.0).reverse()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(a: u32, b: u32) -> MultiDegree {
        MultiDegree::new2(a, b)
    }

    /// Coefficients of ∏ 1/(1 − t^e) by repeated geometric sums.
    fn product_oracle(exps: &[usize], cap: usize) -> Vec<i64> {
        let mut c = vec![0i64; cap + 1];
        c[0] = 1;
        for &e in exps {
            for n in e..=cap {
                c[n] += c[n - e];
            }
        }
        c
    }

    #[test]
    fn prop_shape_series() {
        let s = ResolutionShape::gorenstein5(&[d(2, 1), d(2, 3), d(1, 4)], d(4, 7));
        assert_eq!(s.levels[3], vec![d(3, 3), d(2, 4), d(2, 6)]);
        assert_eq!(s.levels[4], vec![d(4, 6), d(3, 7)]);
        let h = series_from_resolution(&s, 12).unwrap();
        assert_eq!(h.collapse().to_vec(), product_oracle(&[1, 1, 2, 3, 4], 12));
    }

    #[test]
    fn small_shapes() {
        let free = ResolutionShape { levels: vec![vec![d(0, 0)], vec![d(1, 0), d(0, 1)]], gorenstein: d(0, 0) };
        let h = series_from_resolution(&free, 8).unwrap();
        assert_eq!(h.get(&d(3, 4)), 35);
        let plane =
            ResolutionShape { levels: vec![vec![d(0, 0)], vec![d(1, 0), d(0, 1)], vec![d(1, 1)]], gorenstein: d(1, 1) };
        let h = series_from_resolution(&plane, 8).unwrap();
        assert!(h.terms().all(|(_, c)| c == 1));
        let bad = ResolutionShape { levels: vec![vec![d(0, 0), d(0, 0)]], gorenstein: d(0, 0) };
        assert_eq!(series_from_resolution(&bad, 4), Err(ShapeError::NotInvertible(2)));
    }

    #[test]
    fn shift_clauses() {
        assert!(check_shift_clauses(&[2, 2, 1], 4).is_ok());
        assert!(check_shift_clauses(&[1, 3, 4], 7).is_ok());
        assert!(check_shift_clauses(&[1, 4], 5).is_err());
        assert!(check_shift_clauses(&[2, 2, 2], 5).is_ok());
        assert!(check_shift_clauses(&[0, 2], 5).is_err());
        let s = ResolutionShape::gorenstein5(&[d(2, 1), d(2, 3), d(1, 4)], d(4, 7));
        assert!(resolution_shape_constraints(&s).is_ok());
    }

    #[test]
    fn gamma_is_forced_by_the_clauses() {
        let shapes = candidate_shapes(ResolutionType::T355, true, 12);
        let find = |l2: &[MultiDegree]| -> Vec<MultiDegree> {
            let mut l: Vec<MultiDegree> = l2.to_vec();
            l.sort_by(|a, b| a.cmp_deglex(b));
            shapes.iter().filter(|s| s.level2() == l.as_slice()).map(|s| s.gorenstein.clone()).collect()
        };
        assert_eq!(find(&[d(2, 1), d(2, 3), d(1, 4)]), vec![d(4, 7)]);
        assert_eq!(find(&[d(2, 1), d(2, 3), d(2, 3)]), vec![d(5, 6)]);
    }

    #[test]
    fn switching_keeps_one_per_orbit() {
        let norm = candidate_shapes(ResolutionType::T4445, true, 12);
        let all = candidate_shapes(ResolutionType::T4445, false, 12);
        assert!(norm.len() < all.len());
        for s in &all {
            assert!(norm.contains(s) || norm.contains(&s.swapped()));
        }
        let expected = ResolutionShape::gorenstein5(&[d(3, 1), d(2, 2), d(1, 3), d(3, 2)], d(5, 5));
        assert!(norm.contains(&expected));
        assert!(!norm.contains(&expected.swapped()));
    }
}
