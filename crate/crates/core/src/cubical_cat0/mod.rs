//! Hyperplanes, crossing complexes, cubical cones and CAT(0) certificates.
//!
//! All geometry happens on an integer grid. A complex with odd span is
//! doubled first so that midcubes have integral coordinates; iterated
//! hyperplanes then stay in the same doubled grid.

mod cat0;
mod crossing;
mod hyperplanes;

pub use cat0::{
    ardila_embedding, cat0_certify, collapse_to_point, ArdilaEmbedding, Cat0Certificate, Cat0Evidence,
    Cat0Verdict,
};
pub use crossing::{
    crossing_complex, cubical_cone, verify_crossing_equivalence, CrossingComplex, CrossingReport, Transfer,
};
pub use hyperplanes::{hyperplanes, iterated_hyperplanes, verify_hyperplane_identity, Hyperplane};
