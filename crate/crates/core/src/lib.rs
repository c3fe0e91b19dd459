//! Truncated Gröbner bases for ℤˢ-graded noncommutative algebras, monomial
//! invariants of their obstruction sets, a Hilbert-driven obstruction
//! search and a catalog of AS-regular algebras of dimension five.

pub mod arith;
pub mod catalog;
pub mod dsl;
pub mod groebner;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod presentation;
pub mod search;
pub mod series;
pub mod words;

pub use arith::{ExtensionField, FieldElement, Scalar};
pub use poly::NcPoly;
pub use presentation::Presentation;
pub use words::{Alphabet, Antichain, MultiDegree, Word};

/// Rational numbers.
pub type Rational = num_rational::BigRational;
/// Polynomials over ℚ or a simple extension of ℚ.
pub type Poly = NcPoly<FieldElement>;
/// Polynomials over ℚ.
pub type QPoly = NcPoly<Rational>;
/// Gröbner state over ℚ or a simple extension of ℚ.
pub type Groebner = groebner::GroebnerState<FieldElement>;
