//! Invariants of monomial algebras k⟨X⟩/(V).

mod chains;
mod hilbert;
mod lyndon_series;

pub use chains::{
    chain_graph, chain_series, enumerate_chains, invariants_estimate, ChainGraph, ChainSet, Invariants, LevelProfile,
};
pub use hilbert::{brute_force_series, collapse_series, hilbert_series_monomial};
pub use lyndon_series::{lyndon_series, LyndonBasisReport, LyndonError};
