//! The sixteen families 𝒜–𝒫 and their verification.

mod families;
mod normal;
mod twist;
mod verify;

pub use families::{
    bindings, family, family_polys, instantiate_family, CatalogError, ConstraintKind, FamilySpec, NormalClaim,
    FAMILIES, G_ALT_SEQUENCE,
};
pub use normal::{
    check_normal_element, check_normal_sequence, check_regular_quotient, low_degree_normal_pencil, normality_in,
    NormalCertificate, NormalError, NormalityReport, PencilVerdict, RegularityReport, SequenceReport, SequenceStep,
};
pub use twist::{
    load_family_points, switch_presentation, twist_presentation, twist_to_base, DiagonalAutomorphism, FamilyPoints,
    TwistError, DEFAULT_FAMILY_POINTS,
};
pub use verify::{verify_family, FamilyReport, Stage, SEQUENCE_CAP};
