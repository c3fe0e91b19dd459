use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use crate::dsl::{parse_polynomial, parse_presentation, DslError};
use crate::presentation::Presentation;
use crate::search::ResolutionType;
use crate::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family {family} has no parameter `{param}`")]
    UnknownParam { family: String, param: String },
    #[error("family {family} needs a value for `{param}`")]
    MissingParam { family: String, param: String },
    #[error("constraint violated: {0}")]
    Constraint(String),
    #[error(transparent)]
    Dsl(#[from] DslError),
    #[error(transparent)]
    Twist(#[from] super::TwistError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintKind {
    NonZero,
    Zero,
}

/// Normality data attached to a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalClaim {
    /// A regular normal element.
    Element(&'static str),
    /// A normal sequence whose final quotient is finite dimensional.
    Sequence(&'static [&'static str]),
}

#[derive(Debug, Clone, Copy)]
pub struct FamilySpec {
    pub id: &'static str,
    pub symbol: &'static str,
    pub params: &'static [&'static str],
    /// (generator, minimal polynomial) of the field the family lives over.
    pub field: Option<(&'static str, &'static str)>,
    pub constraints: &'static [(&'static str, ConstraintKind)],
    pub relations: &'static [&'static str],
    pub kind: ResolutionType,
    /// Leading words of the reduced Gröbner basis, deg-lex ascending.
    pub leading_words: &'static [&'static str],
    /// The first `minimal` leading words belong to G_min.
    pub minimal: usize,
    pub normal: Option<NormalClaim>,
}

const LW_355: &[&str] = &["x2*x1^2", "x2^2*x1*x2*x1", "x2^4*x1", "x2^3*x1*x2^2*x1"];
const LW_347: &[&str] = &["x2*x1^2", "x2^3*x1", "x2^2*x1*x2*x1*x2*x1", "x2^2*x1*x2^2*x1*x2*x1"];
const LW_444: &[&str] = &["x2*x1^3", "x2^2*x1^2", "x2^3*x1", "x2*x1*x2*x1^2", "x2^2*x1*x2*x1"];

const Z_A: &str = "x2^3*x1 + p*x2^2*x1*x2 + p^2*x2*x1*x2^2 + p^3*x1*x2^3";

const P_NZ: (&str, ConstraintKind) = ("p", ConstraintKind::NonZero);

pub const FAMILIES: &[FamilySpec] = &[
    FamilySpec {
        id: "A",
        symbol: "𝒜",
        params: &["p"],
        field: None,
        constraints: &[P_NZ],
        relations: &[
            "x2*x1^2 - p^2*x1^2*x2",
            "x2^2*x1*x2*x1 + p*x2*x1*x2^2*x1 - p^3*x1*x2^2*x1*x2 - p^4*x1*x2*x1*x2^2",
            "x2^4*x1 - p^4*x1*x2^4",
        ],
        kind: ResolutionType::T355,
        leading_words: LW_355,
        minimal: 3,
        normal: Some(NormalClaim::Element(Z_A)),
    },
    FamilySpec {
        id: "B",
        symbol: "ℬ",
        params: &["p"],
        field: None,
        constraints: &[P_NZ],
        relations: &[
            "x2*x1^2 - p^2*x1^2*x2",
            "x2^2*x1*x2*x1 + p*x2*x1*x2^2*x1 - p^3*x1*x2^2*x1*x2 - p^4*x1*x2*x1*x2^2",
            "x2^4*x1 + p^4*x1*x2^4",
        ],
        kind: ResolutionType::T355,
        leading_words: LW_355,
        minimal: 3,
        normal: Some(NormalClaim::Sequence(&[
            "x1^2",
            "x2^4",
            "(x2*x1 + p*x1*x2)^2",
            Z_A,
            "x2^2*x1 + p^2*x1*x2^2",
        ])),
    },
    FamilySpec {
        id: "C",
        symbol: "𝒞",
        params: &["p", "j"],
        field: Some(("j", "j^2 + j + 1")),
        constraints: &[P_NZ, ("j^2 + j + 1", ConstraintKind::Zero)],
        relations: &[
            "x2*x1^2 + p*x1*x2*x1 + p^2*x1^2*x2",
            "x2^2*x1*x2*x1 - p^2*x2*x1*x2*x1*x2 + p^2*(1 + j)*x1*x2^3*x1 + p^4*x1*x2*x1*x2^2 + p^5*(1 - j)*x1^2*x2^3",
            "x2^4*x1 - p*j*x2^3*x1*x2 - p^3*j*x2*x1*x2^3 - p^4*(1 + j)*x1*x2^4",
        ],
        kind: ResolutionType::T355,
        leading_words: LW_355,
        minimal: 3,
        normal: Some(NormalClaim::Element("x2^3*x1 - p^3*j*x1*x2^3")),
    },
    FamilySpec {
        id: "D",
        symbol: "𝒟",
        params: &["p"],
        field: None,
        constraints: &[P_NZ],
        relations: &[
            "x2*x1^2 - 2*p*x1*x2*x1 + p^2*x1^2*x2",
            "x2^2*x1*x2*x1 - 3*p*x2*x1*x2^2*x1 + 2*p^2*x2*x1*x2*x1*x2 + 2*p^2*x1*x2^3*x1 - 3*p^3*x1*x2^2*x1*x2 + p^4*x1*x2*x1*x2^2",
            "x2^4*x1 - 4*p*x2^3*x1*x2 + 6*p^2*x2^2*x1*x2^2 - 4*p^3*x2*x1*x2^3 + p^4*x1*x2^4",
        ],
        kind: ResolutionType::T355,
        leading_words: LW_355,
        minimal: 3,
        normal: Some(NormalClaim::Element(
            "x2^3*x1 - 3*p*x2^2*x1*x2 + 3*p^2*x2*x1*x2^2 - p^3*x1*x2^3",
        )),
    },
    FamilySpec {
        id: "E",
        symbol: "ℰ",
        params: &["p", "j"],
        field: Some(("j", "j^4 + j^3 + j^2 + j + 1")),
        constraints: &[P_NZ, ("j^4 + j^3 + j^2 + j + 1", ConstraintKind::Zero)],
        relations: &[
            "x2*x1^2 + p*x1*x2*x1 + p^2*(j^2 + j^3)^2*x1^2*x2",
            "x2^2*x1*x2*x1 + p*(j^2 + j^3)^2*x2*x1*x2^2*x1 - p^2*(j^2 + j^3)*x2*x1*x2*x1*x2 + p^2*(2 + 2*j - j^3)*x1*x2^3*x1 + p^3*(3 + 5*j + 3*j^2)*x1*x2^2*x1*x2 + p^4*(4 + 8*j + 7*j^2 + 2*j^3)*x1*x2*x1*x2^2 + p^5*(2 + 8*j + 10*j^2 + 5*j^3)*x1^2*x2^3",
            "x2^4*x1 + p*(1 + j)*x2^3*x1*x2 + p^2*(1 + j)^2*x2^2*x1*x2^2 + p^3*(1 + j)^3*x2*x1*x2^3 + p^4*(3*j + 5*j^2 + 3*j^3)*x1*x2^4",
        ],
        kind: ResolutionType::T355,
        leading_words: LW_355,
        minimal: 3,
        normal: Some(NormalClaim::Element(
            "x2^3*x1 + p*(j^2 + j^3)^2*x2^2*x1*x2 - p^2*(j^2 + j^3)^3*x2*x1*x2^2 - p^3*(j^2 + j^3)^3*x1*x2^3",
        )),
    },
    FamilySpec {
        id: "F",
        symbol: "ℱ",
        params: &["p", "q"],
        field: Some(("theta", "theta^2 - theta + 1")),
        constraints: &[P_NZ],
        relations: &[
            "x2*x1^2 - p^2*x1^2*x2",
            "x2^3*x1 - p^3*x1*x2^3",
            "x2^2*x1*x2*x1*x2*x1 + p*x2*x1*x2^2*x1*x2*x1 + p^2*x2*x1*x2*x1*x2^2*x1 - p^4*x1*x2^2*x1*x2*x1*x2 - p^5*x1*x2*x1*x2^2*x1*x2 - p^6*x1*x2*x1*x2*x1*x2^2 - p^8*q*x1^2*x2*x1*x2^3 + p^9*q*x1^3*x2^4",
        ],
        kind: ResolutionType::T347,
        leading_words: LW_347,
        minimal: 3,
        normal: Some(NormalClaim::Sequence(&[
            "x1^2",
            "x2^3",
            "(x2*x1 + p*x1*x2)^3",
            "(x2^2*x1 + p*x2*x1*x2 + p^2*x1*x2^2)^2",
            "x2^2*x1*x2*x1 + p*theta*x2*x1*x2^2*x1 + p^3*x1*x2^2*x1*x2 + p^4*theta*x1*x2*x1*x2^2",
        ])),
    },
    FamilySpec {
        id: "G",
        symbol: "𝒢",
        params: &["p", "j"],
        field: Some(("j", "j^2 + 1")),
        constraints: &[P_NZ, ("j^4 - 1", ConstraintKind::Zero)],
        relations: &[
            "x2*x1^3 + p*x1*x2*x1^2 + p^2*x1^2*x2*x1 + p^3*x1^3*x2",
            "x2^2*x1^2 + p*x2*x1*x2*x1 + p^2*x2*x1^2*x2 + p^2*x1*x2^2*x1 + p^3*x1*x2*x1*x2 + p^4*x1^2*x2^2",
            "x2^3*x1 + p*x2^2*x1*x2 + p^2*x2*x1*x2^2 + p^3*x1*x2^3",
            "x2*x1*x2*x1^2 + p*x2*x1^2*x2*x1 + p^2*j*x1*x2*x1*x2*x1 + p^3*(j - 1)*x1*x2*x1^2*x2 + p^3*(j - j^2)*x1^2*x2^2*x1 + p^4*(j - 1)*x1^2*x2*x1*x2 + p^5*(-1 + j - j^3)*x1^3*x2^2",
            "x2^2*x1*x2*x1 + p*x2*x1*x2^2*x1 + p^2*j*x2*x1*x2*x1*x2 + p^3*(j - j^2)*x2*x1^2*x2^2 + p^3*(j - 1)*x1*x2^2*x1*x2 + p^4*(j - 1)*x1*x2*x1*x2^2 + p^5*(-1 + j - j^3)*x1^2*x2^3",
        ],
        kind: ResolutionType::T44455,
        leading_words: LW_444,
        minimal: 5,
        normal: Some(NormalClaim::Sequence(&[
            "x1^4",
            "x2^4",
            "(x2*x1 + p*x1*x2)^2 + p^3*(1 - j^2)*x1^2*x2^2",
            "x2*x1^2*x2*x1^2 + p^4*x1^2*x2*x1^2*x2",
            "x2^2*x1*x2^2*x1 + p^4*x1*x2^2*x1*x2^2",
        ])),
    },
    FamilySpec {
        id: "H",
        symbol: "ℋ",
        params: &["p", "q"],
        field: None,
        constraints: &[P_NZ, ("q", ConstraintKind::NonZero)],
        relations: &[
            "x2*x1^3 - p^3*q^3*x1^3*x2",
            "x2^2*x1^2 + p*x2*x1*x2*x1 - p^3*q^2*x1*x2*x1*x2 - p^4*q^4*x1^2*x2^2",
            "x2^3*x1 - p^3*q^3*x1*x2^3",
        ],
        kind: ResolutionType::T444,
        leading_words: LW_444,
        minimal: 3,
        normal: None,
    },
    FamilySpec {
        id: "I",
        symbol: "ℐ",
        params: &["p", "q"],
        field: None,
        constraints: &[P_NZ, ("q", ConstraintKind::NonZero)],
        relations: &[
            "x2*x1^3 + p*(q + 1)*x1*x2*x1^2 + p^2*(q^2 + q)*x1^2*x2*x1 + p^3*q^3*x1^3*x2",
            "x2^2*x1^2 + p*x2*x1*x2*x1 - p^3*q^2*x1*x2*x1*x2 - p^4*q^4*x1^2*x2^2",
            "x2^3*x1 + p*(q + 1)*x2^2*x1*x2 + p^2*(q^2 + q)*x2*x1*x2^2 + p^3*q^3*x1*x2^3",
        ],
        kind: ResolutionType::T444,
        leading_words: LW_444,
        minimal: 3,
        normal: Some(NormalClaim::Element("x2*x1^2 + p*x1*x2*x1 + p^2*q^2*x1^2*x2")),
    },
    FamilySpec {
        id: "J",
        symbol: "𝒥",
        params: &["p", "j"],
        field: Some(("j", "j^4 + j^3 + j^2 + j + 1")),
        constraints: &[P_NZ, ("j^4 + j^3 + j^2 + j + 1", ConstraintKind::Zero)],
        relations: &[
            "x2*x1^3 - p*j*x1*x2*x1^2 - p^2*j*(j^2 + j + 1)*x1^2*x2*x1 + p^3*(j^3 - 2*j - 2)*x1^3*x2",
            "x2^2*x1^2 + p*x2*x1*x2*x1 - p^2*j*(j^2 + 2*j + 2)*x2*x1^2*x2 - p^3*(j + 1)^2*x1*x2*x1*x2 - p^4*(3*j^2 + 5*j + 3)*x1^2*x2^2",
            "x2^3*x1 + p*(1 - j^2 - j^3)*x2^2*x1*x2 + p^2*(1 - 2*j^2 - 2*j^3)*x2*x1*x2^2 + p^3*(1 - 2*j^2 - 2*j^3)*x1*x2^3",
        ],
        kind: ResolutionType::T444,
        leading_words: LW_444,
        minimal: 3,
        normal: Some(NormalClaim::Element("x2*x1^2 + p*x1*x2*x1 + p^2*(j^2 + j^3)^2*x1^2*x2")),
    },
    FamilySpec {
        id: "K",
        symbol: "𝒦",
        params: &["p", "q"],
        field: None,
        constraints: &[P_NZ, ("q", ConstraintKind::NonZero), ("q - 1", ConstraintKind::NonZero)],
        relations: &[
            "x2*x1^3 + p*q*x1*x2*x1^2 + p^2*q^2*x1^2*x2*x1 + p^3*q^3*x1^3*x2",
            "x2^2*x1^2 + p*x2*x1*x2*x1 + p^2*q*x2*x1^2*x2 + p^2*q*x1*x2^2*x1 + p^3*q^2*x1*x2*x1*x2 + p^4*q^4*x1^2*x2^2",
            "x2^3*x1 + p*q*x2^2*x1*x2 + p^2*q^2*x2*x1*x2^2 + p^3*q^3*x1*x2^3",
        ],
        kind: ResolutionType::T444,
        leading_words: LW_444,
        minimal: 3,
        normal: None,
    },
    FamilySpec {
        id: "L",
        symbol: "ℒ",
        params: &["p", "q", "r"],
        field: None,
        constraints: &[
            P_NZ,
            ("q", ConstraintKind::NonZero),
            ("r", ConstraintKind::NonZero),
            ("q^3 - (r + 2)*q^2 + (2*r^2 + 2*r + 1)*q - r^2 - r", ConstraintKind::Zero),
        ],
        relations: &[
            "x2*x1^3 + p*(r + 1)*x1*x2*x1^2 + p^2*q*(r + 1)*x1^2*x2*x1 + p^3*q^3*x1^3*x2",
            "x2^2*x1^2 + p*x2*x1*x2*x1 + p^2*(q - r)*(r + 1)*x2*x1^2*x2 + p^2*(q - r)*(r + 1)*x1*x2^2*x1 + p^3*(q + r)*(q - r^2 - r)*x1*x2*x1*x2 + p^4*q^2*(q - r^2 - r)*x1^2*x2^2",
            "x2^3*x1 + p*(r + 1)*x2^2*x1*x2 + p^2*q*(r + 1)*x2*x1*x2^2 + p^3*q^3*x1*x2^3",
        ],
        kind: ResolutionType::T444,
        leading_words: LW_444,
        minimal: 3,
        normal: None,
    },
    FamilySpec {
        id: "M",
        symbol: "ℳ",
        params: &["p"],
        field: None,
        constraints: &[P_NZ],
        relations: &[
            "x2*x1^3 + p*x1*x2*x1^2 + p^2*x1^2*x2*x1 + p^3*x1^3*x2",
            "x2^2*x1^2 - p^4*x1^2*x2^2",
            "x2^3*x1 + p*x2^2*x1*x2 + p^2*x2*x1*x2^2 + p^3*x1*x2^3",
        ],
        kind: ResolutionType::T444,
        leading_words: LW_444,
        minimal: 3,
        normal: Some(NormalClaim::Element("x2*x1^2 + p^2*x1^2*x2")),
    },
    FamilySpec {
        id: "N",
        symbol: "𝒩",
        params: &["p"],
        field: None,
        constraints: &[P_NZ],
        relations: &[
            "x2*x1^3 + p*x1*x2*x1^2 + p^2*x1^2*x2*x1 + p^3*x1^3*x2",
            "x2^2*x1^2 + p^4*x1^2*x2^2",
            "x2^3*x1 + p*x2^2*x1*x2 + p^2*x2*x1*x2^2 + p^3*x1*x2^3",
        ],
        kind: ResolutionType::T444,
        leading_words: LW_444,
        minimal: 3,
        normal: None,
    },
    FamilySpec {
        id: "O",
        symbol: "𝒪",
        params: &["p", "j"],
        field: Some(("j", "j^2 + 1")),
        constraints: &[P_NZ, ("j^2 + 1", ConstraintKind::Zero)],
        relations: &[
            "x2*x1^3 + p*j*x1*x2*x1^2 - p^2*j*x1^2*x2*x1 + p^3*x1^3*x2",
            "x2^2*x1^2 + p^2*(1 - j)*x2*x1^2*x2 - p^4*j*x1^2*x2^2",
            "x2^3*x1 + p*x2^2*x1*x2 + p^2*x2*x1*x2^2 + p^3*x1*x2^3",
        ],
        kind: ResolutionType::T444,
        leading_words: LW_444,
        minimal: 3,
        normal: Some(NormalClaim::Element("x2*x1^2 - p^2*j*x1^2*x2")),
    },
    FamilySpec {
        id: "P",
        symbol: "𝒫",
        params: &["p", "j"],
        field: Some(("j", "j^2 - j + 2")),
        constraints: &[P_NZ, ("j^2 - j + 2", ConstraintKind::Zero)],
        relations: &[
            "x2*x1^3 + p*x1*x2*x1^2 + p^2*j*x1^2*x2*x1 - p^3*(j + 2)*x1^3*x2",
            "x2^2*x1^2 + p^2*(j - 1)*x2*x1^2*x2 + p^2*(j - 1)*x1*x2^2*x1 - p^3*(j + 1)*x1*x2*x1*x2 - p^4*(j - 2)*x1^2*x2^2",
            "x2^3*x1 + p*x2^2*x1*x2 + p^2*j*x2*x1*x2^2 - p^3*(j + 2)*x1*x2^3",
        ],
        kind: ResolutionType::T444,
        leading_words: LW_444,
        minimal: 3,
        normal: None,
    },
];

/// Second normal sequence of 𝒢 when j² = −1.
pub const G_ALT_SEQUENCE: &[&str] = &[
    "x1^4",
    "x2^4",
    "(x2*x1 + p*x1*x2)^2 + p^3*(1 - j^2)*x1^2*x2^2",
    "x2*x1^2 + p^2*x1^2*x2",
    "x2^2*x1 + p^2*x1*x2^2",
];

pub fn family(id: &str) -> Result<&'static FamilySpec, CatalogError> {
    FAMILIES
        .iter()
        .find(|f| f.id.eq_ignore_ascii_case(id) || f.symbol == id)
        .ok_or_else(|| CatalogError::UnknownFamily(id.into()))
}

impl FamilySpec {
    /// Document text for given parameter expressions. A missing field
    /// generator parameter defaults to the generator itself.
    pub fn document(&self, bindings: &BTreeMap<String, String>) -> Result<String, CatalogError> {
        for k in bindings.keys() {
            if !self.params.contains(&k.as_str()) {
                return Err(CatalogError::UnknownParam { family: self.id.into(), param: k.clone() });
            }
        }
        let mut out = String::new();
        match self.field {
            Some((g, m)) => out.push_str(&format!("field Q[{g}]/({m})\n")),
            None => out.push_str("field Q\n"),
        }
        out.push_str("letters x1:(1,0), x2:(0,1)\n");
        for &name in self.params {
            let v = match (bindings.get(name), self.field) {
                (Some(v), _) => v.clone(),
                (None, Some((g, _))) if g == name => g.to_string(),
                _ => return Err(CatalogError::MissingParam { family: self.id.into(), param: name.into() }),
            };
            out.push_str(&format!("param {name} = {v}\n"));
        }
        out.push_str("relations:\n");
        for r in self.relations {
            out.push_str(r);
            out.push('\n');
        }
        Ok(out)
    }

    pub fn label(&self, bindings: &BTreeMap<String, String>) -> String {
        let args: Vec<String> = self
            .params
            .iter()
            .map(|n| format!("{n}={}", bindings.get(*n).map_or(n.to_string(), |v| v.clone())))
            .collect();
        format!("{}({})", self.id, args.join(", "))
    }
}

/// Builds the presentation of a family at a parameter point.
pub fn instantiate_family(id: &str, bindings: &BTreeMap<String, String>) -> Result<Presentation, CatalogError> {
    let spec = family(id)?;
    let mut p = parse_presentation(&spec.document(bindings)?)?;
    for (expr, kind) in spec.constraints {
        let v = parse_polynomial(expr, &p)?.as_constant().expect("constraints are scalar");
        let ok = match kind {
            ConstraintKind::NonZero => !v.is_zero(),
            ConstraintKind::Zero => v.is_zero(),
        };
        if !ok {
            let rel = if *kind == ConstraintKind::NonZero { "≠" } else { "=" };
            return Err(CatalogError::Constraint(format!("{expr} {rel} 0")));
        }
    }
    p.label = Some(spec.label(bindings));
    Ok(p)
}

/// Parses polynomials such as normal elements in the scope of `p`.
pub fn family_polys(p: &Presentation, exprs: &[&str]) -> Result<Vec<Poly>, CatalogError> {
    exprs.iter().map(|e| Ok(parse_polynomial(e, p)?)).collect()
}

pub fn bindings(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}
