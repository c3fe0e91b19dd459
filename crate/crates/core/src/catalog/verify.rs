use serde::Serialize;
use serde_json::{json, Value};

use crate::groebner::complete_to_degree;
use crate::monomial::{hilbert_series_monomial, invariants_estimate, lyndon_series};
use crate::search::{candidate_shapes, series_from_resolution};
use crate::words::{is_lyndon, MultiDegree};

use super::families::{family, family_polys, instantiate_family, CatalogError, NormalClaim, G_ALT_SEQUENCE};
use super::normal::{check_normal_sequence, low_degree_normal_pencil, normality_in, regularity_from_states};

use std::collections::BTreeMap;

/// Normal sequences are checked at least to this total degree, the top
/// degree of the largest finite quotient in the catalog being 14.
pub const SEQUENCE_CAP: u32 = 16;

#[derive(Debug, Clone, Serialize)]
pub struct Stage {
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub family: String,
    pub label: String,
    pub cap: u32,
    pub passed: bool,
    pub first_failure: Option<String>,
    pub stages: Vec<Stage>,
}

impl FamilyReport {
    fn push(&mut self, name: &str, passed: bool, detail: Value) {
        if !passed && self.first_failure.is_none() {
            self.first_failure = Some(name.to_string());
        }
        self.passed &= passed;
        self.stages.push(Stage { name: name.into(), passed, detail });
    }

    pub fn stage(&self, name: &str) -> Option<&Stage> {
        self.stages.iter().find(|s| s.name == name)
    }
}

/// Runs every check the catalog records for a family at one parameter
/// point.
pub fn verify_family(id: &str, params: &BTreeMap<String, String>, cap: u32) -> Result<FamilyReport, CatalogError> {
    let spec = family(id)?;
    let p = instantiate_family(id, params)?;
    let a = &p.alphabet;
    let mut rep = FamilyReport {
        family: spec.id.into(),
        label: p.label.clone().unwrap_or_default(),
        cap,
        passed: true,
        first_failure: None,
        stages: Vec::new(),
    };

    let st = complete_to_degree(a, &p.relations, cap);
    let lw: Vec<String> = st.leading_words().iter().map(|w| a.render(w)).collect();
    let minimal: Vec<String> = st.basis.iter().filter(|e| e.minimal).map(|e| a.render(e.poly.lw())).collect();
    let expected_min: Vec<&str> = spec.leading_words[..spec.minimal].to_vec();
    rep.push(
        "leading_words",
        lw == spec.leading_words && minimal == expected_min,
        json!({ "found": lw, "expected": spec.leading_words, "minimal": minimal }),
    );

    let open = st.nontrivial_compositions();
    rep.push("compositions", open.is_empty(), json!({ "nontrivial": open.len() }));

    let v = st.obstructions();
    let h = hilbert_series_monomial(a, &v, cap);
    let mut level2: Vec<MultiDegree> = st.basis.iter().filter(|e| e.minimal).map(|e| e.degree.clone()).collect();
    level2.sort_by(|x, y| x.cmp_deglex(y));
    let shape = candidate_shapes(spec.kind, false, cap).into_iter().find(|s| s.level2() == level2.as_slice());
    let (ok, detail) = match &shape {
        Some(s) => {
            let hs = series_from_resolution(s, cap).expect("catalog shapes are invertible");
            (hs == h, json!({ "shape": s.describe(), "collapsed": h.collapse().to_vec() }))
        }
        None => {
            (false, json!({ "shape": Value::Null, "level2": level2.iter().map(|d| d.to_string()).collect::<Vec<_>>() }))
        }
    };
    rep.push("resolution_series", ok, detail);

    let inv = invariants_estimate(a, &v, cap);
    rep.push("chains", inv.d == 5 && inv.finite_chains, serde_json::to_value(&inv).unwrap());

    let all_lyndon = v.words().iter().all(is_lyndon);
    let (ok, detail) = match lyndon_series(a, &v, cap) {
        Ok((l, prod)) => (
            all_lyndon && l.finite && l.gk == Some(5) && prod == h,
            json!({ "basis": l, "product_matches": prod == h }),
        ),
        Err(e) => (false, json!({ "error": e.to_string() })),
    };
    rep.push("lyndon", ok, detail);

    match spec.normal {
        Some(NormalClaim::Element(e)) => {
            let z = family_polys(&p, &[e])?.remove(0);
            match normality_in(&st, &p, &z) {
                Ok(n) => {
                    let mut rels = p.relations.clone();
                    rels.push(z.clone());
                    let q = complete_to_degree(a, &rels, cap);
                    let r = regularity_from_states(&st, &q, &p, &z, cap).expect("checked homogeneous");
                    rep.push("normal_element", n.normal && r.regular, json!({ "normality": n, "regularity": r }));
                }
                Err(e) => rep.push("normal_element", false, json!({ "error": e.to_string() })),
            }
        }
        Some(NormalClaim::Sequence(s)) => {
            let zs = family_polys(&p, s)?;
            let seq_cap = cap.max(SEQUENCE_CAP);
            match check_normal_sequence(&zs, &p, seq_cap) {
                Ok(r) => rep.push("normal_sequence", r.passed, json!({ "cap": seq_cap, "report": r })),
                Err(e) => rep.push("normal_sequence", false, json!({ "error": e.to_string() })),
            }
            if spec.id == "G" {
                match low_degree_normal_pencil(&p, 3) {
                    Ok(v) => rep.push(
                        "no_low_degree_normal",
                        v.iter().all(|x| x.excluded_by.is_some()),
                        serde_json::to_value(&v).unwrap(),
                    ),
                    Err(e) => rep.push("no_low_degree_normal", false, json!({ "error": e.to_string() })),
                }
                let j = family_polys(&p, &["j^2 + 1"])?.remove(0);
                if j.is_zero() {
                    let ws = family_polys(&p, G_ALT_SEQUENCE)?;
                    match check_normal_sequence(&ws, &p, seq_cap) {
                        Ok(r) => rep.push("alternative_sequence", r.passed, json!({ "cap": seq_cap, "report": r })),
                        Err(e) => rep.push("alternative_sequence", false, json!({ "error": e.to_string() })),
                    }
                }
            }
        }
        None => {}
    }
    Ok(rep)
}
