use std::cmp::Ordering;

use serde::Serialize;

use crate::monomial::hilbert_series_monomial;
use crate::series::{render_terms, TruncatedSeries};
use crate::words::{normal_words, Alphabet, Antichain, MultiDegree, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceReport {
    /// H_{R(V)} − target.
    pub difference: TruncatedSeries,
    /// Nonzero terms of the lowest total degree, deg-lex ascending.
    pub lowest: Vec<(MultiDegree, i64)>,
    pub first_negative: Option<(MultiDegree, i64)>,
}

impl DifferenceReport {
    pub fn is_zero(&self) -> bool {
        self.lowest.is_empty()
    }

    /// Lowest terms as `-t1^3*t2^3 + t1^2*t2^4`.
    pub fn rendered(&self) -> String {
        render_terms(&self.lowest)
    }

    /// A negative coefficient violates H_{R^i} ≥ H_R.
    pub fn contradicts(&self) -> bool {
        self.first_negative.is_some()
    }
}

/// H_{R(V)} − target up to the target's cap. A one-variable target is
/// compared with the collapsed series.
pub fn series_difference_report(alphabet: &Alphabet, v: &Antichain, target: &TruncatedSeries) -> DifferenceReport {
    let mut h = hilbert_series_monomial(alphabet, v, target.cap());
    if target.nvars() == 1 && alphabet.arity() != 1 {
        h = h.collapse();
    }
    let difference = h.sub(target);
    DifferenceReport { lowest: difference.lowest_terms(), first_negative: difference.first_negative(), difference }
}

/// p relations of the reduced basis not yet in V have degree β.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForcedRelation {
    pub degree: MultiDegree,
    pub count: usize,
}

/// Forced relations read off the lowest terms of the difference: each
/// positive term p·t^β there has every other term of degree ≰ β. None when
/// the difference vanishes or a lowest term is negative.
pub fn forced_from_report(report: &DifferenceReport) -> Option<Vec<ForcedRelation>> {
    if report.is_zero() || report.lowest.iter().any(|(_, c)| *c < 0) {
        return None;
    }
    Some(report.lowest.iter().map(|(d, c)| ForcedRelation { degree: d.clone(), count: *c as usize }).collect())
}

pub fn forced_relations(alphabet: &Alphabet, v: &Antichain, target: &TruncatedSeries) -> Option<Vec<ForcedRelation>> {
    forced_from_report(&series_difference_report(alphabet, v, target))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Feasibility {
    Feasible,
    /// A relation of degree (m,0) or (0,n) in two letters makes a power of a
    /// letter vanish or factors.
    AxisDegree,
    /// Every word that can occur in the relation starts with this word.
    CommonPrefix {
        factor: String,
    },
    /// Every word that can occur in the relation ends with this word.
    CommonSuffix {
        factor: String,
    },
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible)
    }
}

/// Whether a relation with leading word `candidate` can exist in a domain:
/// its support lies among the normal words of degree β that are not above
/// the candidate, and a common left or right factor would make it factor.
pub fn domain_prune(alphabet: &Alphabet, candidate: &Word, beta: &MultiDegree, v: &Antichain) -> Feasibility {
    if beta.0.contains(&0) {
        return Feasibility::AxisDegree;
    }
    let support: Vec<Word> = normal_words(alphabet, v, beta)
        .into_iter()
        .filter(|w| alphabet.compare_deglex(w, candidate) != Ordering::Greater)
        .collect();
    let Some(first) = support.first() else {
        return Feasibility::Feasible;
    };
    let prefix = support
        .iter()
        .fold(first.len(), |n, w| n.min(first.letters().iter().zip(w.letters()).take_while(|(a, b)| a == b).count()));
    if prefix > 0 {
        return Feasibility::CommonPrefix { factor: alphabet.render(&first.slice(0, prefix)) };
    }
    let suffix = support.iter().fold(first.len(), |n, w| {
        n.min(first.letters().iter().rev().zip(w.letters().iter().rev()).take_while(|(a, b)| a == b).count())
    });
    if suffix > 0 {
        return Feasibility::CommonSuffix { factor: alphabet.render(&first.slice(first.len() - suffix, first.len())) };
    }
    Feasibility::Feasible
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Alphabet {
        Alphabet::standard2()
    }

    fn w(s: &str) -> Word {
        a().parse_word(s).unwrap()
    }

    #[test]
    fn prune_examples() {
        let e = Antichain::empty();
        let b = MultiDegree::new2(2, 1);
        assert_eq!(domain_prune(&a(), &w("x1*x2*x1"), &b, &e), Feasibility::CommonPrefix { factor: "x1".into() });
        assert_eq!(domain_prune(&a(), &w("x2*x1^2"), &b, &e), Feasibility::Feasible);
        assert_eq!(domain_prune(&a(), &w("x1^3"), &MultiDegree::new2(3, 0), &e), Feasibility::AxisDegree);
        // x2^3*x1*x2 and everything below it end in x2.
        assert_eq!(
            domain_prune(&a(), &w("x2^3*x1*x2"), &MultiDegree::new2(1, 4), &e),
            Feasibility::CommonSuffix { factor: "x2".into() }
        );
    }

    #[test]
    fn forced_needs_positive_lowest_terms() {
        let target = TruncatedSeries::one(2, 4);
        let r = series_difference_report(&a(), &Antichain::empty(), &target);
        let f = forced_from_report(&r).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|x| x.count == 1 && x.degree.total() == 1));
        let zero =
            series_difference_report(&a(), &Antichain::empty(), &hilbert_series_monomial(&a(), &Antichain::empty(), 4));
        assert!(zero.is_zero());
        assert_eq!(forced_from_report(&zero), None);
    }
}
