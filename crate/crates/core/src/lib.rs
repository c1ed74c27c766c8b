//! Co-skeletons of polytopal complexes: homology of skeleton complements,
//! the link/co-skeleton long exact sequence, and the characterisations of
//! Cohen-Macaulay, Leray, stacked and neighbourly complexes it yields.
//! Also hyperplanes and crossing complexes of CAT(0) cubical complexes.
//!
//! ```
//! use coskel_core::{coskeleton_faces, generators, open_set_homology, Coefficients};
//!
//! let x = generators::generate_str("fig_running_example").unwrap().face_poset();
//! let h = open_set_homology(&coskeleton_faces(&x, 1), Coefficients::Integers).unwrap();
//! assert_eq!(h.rank(0), 2);
//! ```

pub mod characterizations;
pub mod complex;
pub mod cubical_cat0;
pub mod error;
pub mod exact_sequences;
pub mod generators;
pub mod homology;
pub mod io;
pub mod subdivision;

pub use characterizations::{Method, PropertyVerdict, Witness};
pub use complex::{
    coskeleton_faces, link_faces, skeleton_faces, star_and_link, Complex, Cube, CubicalComplex, FaceId,
    FacePoset, FaceSet, SimplicialComplex, ValidationReport,
};
pub use error::{Error, Result};
pub use homology::{
    cohomology, homology, open_set_cohomology, open_set_homology, poset_homology, Coefficients, Group,
    HomologyProfile,
};
pub use io::ComplexFile;
pub use subdivision::{barycentric_subdivision, order_complex, OrderComplex};
