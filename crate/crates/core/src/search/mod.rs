//! Hilbert-series driven search for obstruction sets.

mod difference;
mod shape;
mod tree;

pub use difference::{
    domain_prune, forced_from_report, forced_relations, series_difference_report, DifferenceReport, Feasibility,
    ForcedRelation,
};
pub use shape::{
    candidate_shapes, check_shift_clauses, resolution_shape_constraints, series_from_resolution, ResolutionShape,
    ResolutionType, ShapeError,
};
pub use tree::{
    load_eliminations, search_obstructions, search_shape, Contradiction, NodeStatus, RecordedElimination, SearchConfig,
    SearchError, SearchNode, SearchTree, ShapeSearch, DEFAULT_ELIMINATIONS,
};
