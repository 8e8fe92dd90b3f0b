//! Representations of presented groups into `SL(n)`: construction from
//! trace coordinates, symmetric-power lifts, and the map from the group
//! ring to matrices over Laurent polynomials.

mod character;
mod mat;
mod representation;
mod symmetric;
mod torus;

pub use character::{
    check_trace_quadratic, extract_coordinates, from_character_case11, from_character_case12,
    from_character_case21, CaseTag, CharacterPoint, MatrixTriple, MeridianData, TraceQuad,
};
pub use mat::Mat;
pub use representation::{phi_map, PhiMap, Representation, RELATOR_TOLERANCE};
pub use symmetric::{symmetric_power, symmetric_power_matrix};
pub use torus::{
    check_label, is_interior, sample_interior_point, torus_representation, SampledPoint,
    IRREDUCIBILITY_TOLERANCE,
};
