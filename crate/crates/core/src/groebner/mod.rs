//! Ambiguities, compositions and degree-truncated completion.

mod ambiguity;
mod completion;

pub use ambiguity::{composition, find_ambiguities, Ambiguity, AmbiguityKind, GroebnerError};
pub use completion::{complete_to_degree, interreduce, BasisElement, GroebnerState};
