use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Deserialize;
use thiserror::Error;

use crate::arith::{FieldElement, Scalar};
use crate::catalog::{family_polys, instantiate_family, CatalogError};
use crate::groebner::complete_to_degree;
use crate::presentation::Presentation;
use crate::words::Word;
use crate::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistError {
    #[error("automorphism has {got} multipliers for {letters} letters")]
    Length { got: usize, letters: usize },
    #[error("multiplier of `{0}` is zero")]
    ZeroMultiplier(String),
    #[error("relations are not stable under the automorphism: {0}")]
    NotStable(String),
    #[error("switching needs two letters, found {0}")]
    Arity(usize),
}

/// τ(x_i) = λ_i x_i, indexed by letter precedence like [`Word`].
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalAutomorphism {
    pub multipliers: Vec<FieldElement>,
}

impl DiagonalAutomorphism {
    pub fn identity(letters: usize) -> Self {
        DiagonalAutomorphism { multipliers: vec![FieldElement::one(); letters] }
    }

    pub fn new(multipliers: Vec<FieldElement>) -> Self {
        DiagonalAutomorphism { multipliers }
    }

    pub fn inverse(&self) -> Self {
        DiagonalAutomorphism { multipliers: self.multipliers.iter().map(|m| m.inv()).collect() }
    }

    /// τ applied to a polynomial.
    pub fn apply(&self, f: &Poly) -> Poly {
        f.map_coeffs(|w, c| w.letters().iter().fold(c.clone(), |acc, &i| acc * self.multipliers[i as usize].clone()))
    }

    /// φ_τ: x_{i₁}⋯x_{iₙ} ↦ x_{i₁} ∗ ⋯ ∗ x_{iₙ} in k⟨X⟩^τ, which is
    /// ∏ λ_{i_k}^{k−1} times the word.
    pub fn phi(&self, f: &Poly) -> Poly {
        f.map_coeffs(|w, c| c.clone() * self.phi_factor(w))
    }

    fn phi_factor(&self, w: &Word) -> FieldElement {
        let mut acc = FieldElement::one();
        for (k, &i) in w.letters().iter().enumerate() {
            acc = acc * self.multipliers[i as usize].pow(k as u32);
        }
        acc
    }

    fn check(&self, p: &Presentation) -> Result<(), TwistError> {
        if self.multipliers.len() != p.alphabet.len() {
            return Err(TwistError::Length { got: self.multipliers.len(), letters: p.alphabet.len() });
        }
        if let Some(i) = self.multipliers.iter().position(|m| m.is_zero()) {
            return Err(TwistError::ZeroMultiplier(p.alphabet.name(i as u8).to_string()));
        }
        Ok(())
    }
}

/// Presentation of the twist A^τ̄, namely k⟨X⟩/(φ_{τ⁻¹}(G)).
pub fn twist_presentation(p: &Presentation, tau: &DiagonalAutomorphism) -> Result<Presentation, TwistError> {
    tau.check(p)?;
    let top = p.relations.iter().map(|r| p.alphabet.total_degree(r.lw())).max().unwrap_or(0);
    let st = complete_to_degree(&p.alphabet, &p.relations, top);
    for r in &p.relations {
        if !st.reduce(&tau.apply(r)).is_zero() {
            return Err(TwistError::NotStable(r.render(&p.alphabet)));
        }
    }
    let inv = tau.inverse();
    let relations = p.relations.iter().map(|r| inv.phi(r)).collect();
    let mut out = p.with_relations(relations);
    out.label = p.label.as_ref().map(|l| format!("{l}^tau"));
    Ok(out)
}

/// The switching algebra A^ω, with x₁ and x₂ exchanged.
pub fn switch_presentation(p: &Presentation) -> Result<Presentation, TwistError> {
    if p.alphabet.len() != 2 {
        return Err(TwistError::Arity(p.alphabet.len()));
    }
    let relations = p.relations.iter().map(|r| r.map_words(Word::swapped)).collect();
    let mut out = p.with_relations(relations);
    out.label = p.label.as_ref().map(|l| format!("{l}^omega"));
    Ok(out)
}

/// Bundled parameter points, keyed by family id.
pub const DEFAULT_FAMILY_POINTS: &str = include_str!("../../fixtures/families.json");

/// Fixture entry: verification points, and the diagonal twist (letter ↦
/// multiplier expression) taking any point to `base`, which overrides
/// some parameters of the point.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct FamilyPoints {
    pub points: Vec<BTreeMap<String, String>>,
    pub base: BTreeMap<String, String>,
    pub twist: BTreeMap<String, String>,
}

pub fn load_family_points(text: &str) -> Result<BTreeMap<String, FamilyPoints>, serde_json::Error> {
    serde_json::from_str(text)
}

/// (family at `point` twisted by the fixture automorphism, family at the
/// base point).
pub fn twist_to_base(
    id: &str,
    entry: &FamilyPoints,
    point: &BTreeMap<String, String>,
) -> Result<(Presentation, Presentation), CatalogError> {
    let p = instantiate_family(id, point)?;
    let mut base_point = point.clone();
    base_point.extend(entry.base.clone());
    let base = instantiate_family(id, &base_point)?;
    let mut multipliers = Vec::new();
    for i in 0..p.alphabet.len() as u8 {
        let expr = entry.twist.get(p.alphabet.name(i)).map_or("1", |s| s.as_str());
        let m = family_polys(&p, &[expr])?.remove(0);
        multipliers.push(m.as_constant().ok_or_else(|| CatalogError::Constraint(format!("{expr} is not a scalar")))?);
    }
    let t = twist_presentation(&p, &DiagonalAutomorphism::new(multipliers))?;
    Ok((t, base))
}
