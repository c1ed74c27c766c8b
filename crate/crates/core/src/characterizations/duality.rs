use serde::Serialize;

use crate::complex::{link_faces, FaceId, FacePoset};
use crate::error::{Error, Result};
use crate::homology::{open_set_homology, Coefficients, HomologyProfile};
use crate::subdivision::barycentric_subdivision;

use super::link_homology;

/// Face poset of the dual boundary complex `∂P*` from the face lattice `L`
/// of a polytope `P` (all faces, `P` itself included).
///
/// With `d = dim ∂P`, a face of dimension `j` goes to one of dimension
/// `d − j`; covers are reversed, `P` becomes the new empty face and the old
/// empty face (which would be the top of `P*`) is dropped. Labels are kept.
pub fn dual_boundary_flip(lattice: &FacePoset) -> Result<FacePoset> {
    let tops = lattice.facets();
    let top = match tops.as_slice() {
        [t] if lattice.up(*t).is_empty() => *t,
        _ => return Err(Error::NoUniqueTop),
    };
    let d = lattice.dim_of(top) - 1;
    // input index f.0 − 1 for every face but the old empty one
    let mut dims = Vec::with_capacity(lattice.len() - 1);
    let mut labels = Vec::with_capacity(lattice.len() - 1);
    let mut covers = Vec::new();
    for f in lattice.nonempty_faces() {
        dims.push(if f == top { -1 } else { d - lattice.dim_of(f) });
        labels.push(lattice.label(f).to_string());
        covers.extend(lattice.up(f).iter().map(|g| (g.0 - 1, f.0 - 1)));
    }
    let (dual, _) = FacePoset::from_parts(dims, labels, &covers)?;
    Ok(dual)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkShiftReport {
    pub face: String,
    pub dim: i32,
    /// `H̃_*(|lk_X σ|)`
    pub link: HomologyProfile,
    /// `H̃_*(|lk_{bary X} v_σ|)`
    pub bary_link: HomologyProfile,
    /// `H̃_i(lk σ) ≅ H̃_{i + dim σ}(lk v_σ)` in every degree.
    pub holds: bool,
}

/// Compares the link of a non-empty face with the link of its barycentre
/// in `bary(X)`. The latter is the join of `bary(∂σ)`, a `(dim σ − 1)`-sphere,
/// with the link, so homology shifts up by `dim σ`.
pub fn link_shift_check(x: &FacePoset, sigma: FaceId, coeff: Coefficients) -> Result<LinkShiftReport> {
    x.check(sigma)?;
    if sigma == x.empty_face() {
        return Err(Error::OutOfRange("the empty face has no barycentre".into()));
    }
    let link = link_homology(x, sigma, coeff);
    let bary = barycentric_subdivision(x);
    let v = bary
        .vertex_of(sigma)
        .expect("non-empty faces are vertices of bary");
    let b = bary.complex.face_poset();
    let vid = bary.complex.face_id(&[v]).expect("vertex of bary");
    let bary_link = open_set_homology(&link_faces(&b, vid)?, coeff)?;
    let dim = x.dim_of(sigma);
    Ok(LinkShiftReport {
        face: x.label(sigma).to_string(),
        dim,
        holds: link.shifted(dim) == bary_link,
        link,
        bary_link,
    })
}
