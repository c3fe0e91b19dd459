use std::sync::Arc;

use crate::arith::{ExtensionField, FieldElement};
use crate::words::Alphabet;
use crate::Poly;

/// Alphabet, field and homogeneous relations of a finitely presented
/// algebra.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub alphabet: Alphabet,
    pub field: Option<Arc<ExtensionField>>,
    pub params: Vec<(String, FieldElement)>,
    pub relations: Vec<Poly>,
    /// Family name and parameter bindings when built from the catalog.
    pub label: Option<String>,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet
            && self.field.as_deref() == other.field.as_deref()
            && self.params == other.params
            && self.relations == other.relations
    }
}

impl Presentation {
    pub fn new(alphabet: Alphabet, relations: Vec<Poly>) -> Self {
        Presentation { alphabet, field: None, params: Vec::new(), relations, label: None }
    }

    pub fn with_relations(&self, relations: Vec<Poly>) -> Self {
        Presentation { relations, ..self.clone() }
    }

    pub fn param(&self, name: &str) -> Option<&FieldElement> {
        self.params.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }
}
