use serde::Serialize;

use super::{coskeleton_homology, link_profiles, Method, PropertyVerdict, Witness};
use crate::complex::{FaceId, FacePoset};
use crate::error::{Error, Result};
use crate::homology::{Coefficients, HomologyProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HomologyType {
    Sphere,
    Ball,
    Manifold,
    None,
}

/// Result of [`classify_homology_type`]. `boundary` lists the boundary faces
/// of a ball and is empty otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub kind: HomologyType,
    pub dim: i32,
    pub boundary: Vec<FaceId>,
    pub witness: Option<Witness>,
}

/// Recognises homology spheres, balls and manifolds from link homology.
///
/// Over ℤ "`≅ R`" means free of rank one with no torsion. The empty complex
/// is the (−1)-sphere and a point is a 0-ball.
pub fn classify_homology_type(x: &FacePoset, coeff: Coefficients) -> Classification {
    let links = link_profiles(x, coeff);
    classify_with(x, coeff, &links)
}

fn top_degree(x: &FacePoset, f: FaceId) -> i32 {
    x.dim() - x.dim_of(f) - 1
}

pub(crate) fn classify_with(x: &FacePoset, coeff: Coefficients, links: &[HomologyProfile]) -> Classification {
    let d = x.dim();
    let result = |kind, boundary, witness| Classification {
        kind,
        dim: d,
        boundary,
        witness,
    };
    let manifold_failure = x.nonempty_faces().find_map(|f| {
        (!links[f.0].is_sphere_like(top_degree(x, f)))
            .then(|| Witness::at_face(x, f, Some(top_degree(x, f)), "link is not a homology sphere"))
    });
    if manifold_failure.is_none() {
        if links[0].is_sphere_like(d) {
            return result(HomologyType::Sphere, Vec::new(), None);
        }
        if !links[0].is_acyclic() {
            return result(HomologyType::Manifold, Vec::new(), None);
        }
    }
    match ball_failure(x, coeff, links) {
        Ok(boundary) => result(HomologyType::Ball, boundary, None),
        Err(ball_witness) => match manifold_failure {
            None => result(HomologyType::Manifold, Vec::new(), None),
            Some(_) => result(HomologyType::None, Vec::new(), Some(ball_witness)),
        },
    }
}

/// Boundary faces of a homology ball, or the first reason it is not one.
fn ball_failure(
    x: &FacePoset,
    coeff: Coefficients,
    links: &[HomologyProfile],
) -> Result<Vec<FaceId>, Witness> {
    let d = x.dim();
    if let Some(&i) = links[0].nonzero_degrees().first() {
        return Err(Witness::at_face(x, FaceId(0), Some(i), "|X| is not acyclic"));
    }
    let mut boundary = Vec::new();
    for f in x.nonempty_faces() {
        let top = top_degree(x, f);
        let h = &links[f.0];
        if let Some(&i) = h.nonzero_degrees().iter().find(|&&i| i != top) {
            return Err(Witness::at_face(
                x,
                f,
                Some(i),
                "link homology outside top degree",
            ));
        }
        let g = h.group(top);
        if g.is_zero() {
            boundary.push(f);
        } else if !g.is_free_rank_one() {
            return Err(Witness::at_face(
                x,
                f,
                Some(top),
                "top link homology is neither R nor 0",
            ));
        }
    }
    let mut keep = vec![false; x.len()];
    for &f in &boundary {
        keep[f.0] = true;
    }
    if let Some(&f) = boundary
        .iter()
        .find(|&&f| x.down(f).iter().any(|&g| g.0 != 0 && !keep[g.0]))
    {
        return Err(Witness::at_face(
            x,
            f,
            None,
            "boundary faces do not form a subcomplex",
        ));
    }
    let (sub, _) = x.sub_poset(&keep);
    if sub.dim() != d - 1 {
        return Err(Witness::reason(format!(
            "boundary has dimension {}, expected {}",
            sub.dim(),
            d - 1
        )));
    }
    let inner = classify_homology_type(&sub, coeff);
    if inner.kind != HomologyType::Sphere {
        return Err(Witness::reason("boundary is not a homology sphere"));
    }
    Ok(boundary)
}

/// `s`-stacked test for homology balls.
///
/// * `Definition`: every face of dimension at most `d − s − 1` (the empty
///   face included) is a boundary face, i.e. `H̃_{d−dim σ−1}(|lk σ|) = 0`.
/// * `Coskeleton`: `H̃_{d−k−1}(|skel^c_k X|) = 0` for all `k ≤ d − s − 1`
///   (Thm 5.9).
pub fn check_stacked(x: &FacePoset, s: i32, coeff: Coefficients, method: Method) -> Result<PropertyVerdict> {
    if s < 0 {
        return Err(Error::OutOfRange(format!("s = {s} must be non-negative")));
    }
    let links = link_profiles(x, coeff);
    if classify_with(x, coeff, &links).kind != HomologyType::Ball {
        return Err(Error::NotABall);
    }
    let d = x.dim();
    let bound = d - s - 1;
    let (method, failure) = match method {
        Method::Coskeleton => (
            Method::Coskeleton,
            (-1..=bound).find_map(|k| {
                let h = coskeleton_homology(x, k, coeff);
                (!h.is_zero_in(d - k - 1))
                    .then(|| Witness::at_coskeleton(k, d - k - 1, "co-skeleton homology in degree d-k-1"))
            }),
        ),
        _ => (
            Method::Definition,
            x.faces().filter(|&f| x.dim_of(f) <= bound).find_map(|f| {
                let top = top_degree(x, f);
                (!links[f.0].is_zero_in(top)).then(|| Witness::at_face(x, f, Some(top), "interior face"))
            }),
        ),
    };
    Ok(PropertyVerdict::new(
        "stacked",
        &[("s", s as i64)],
        coeff,
        method,
        failure,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;

    fn tetra_boundary() -> FacePoset {
        SimplicialComplex::from_facets(4, vec![vec![0, 1, 2, 3]])
            .unwrap()
            .skeleton(2)
            .face_poset()
    }

    #[test]
    fn sphere_ball_point_empty() {
        let q = Coefficients::Rationals;
        assert_eq!(
            classify_homology_type(&tetra_boundary(), q).kind,
            HomologyType::Sphere
        );
        let ball = SimplicialComplex::from_facets(3, vec![vec![0, 1, 2]])
            .unwrap()
            .face_poset();
        let c = classify_homology_type(&ball, q);
        assert_eq!(c.kind, HomologyType::Ball);
        assert_eq!(c.boundary.len(), 6);
        let point = SimplicialComplex::from_facets(1, vec![vec![0]])
            .unwrap()
            .face_poset();
        assert_eq!(classify_homology_type(&point, q).kind, HomologyType::Ball);
        let empty = SimplicialComplex::empty().face_poset();
        assert_eq!(classify_homology_type(&empty, q).kind, HomologyType::Sphere);
    }

    #[test]
    fn two_triangles_at_a_vertex_are_nothing() {
        let bow = SimplicialComplex::from_facets(5, vec![vec![0, 1, 2], vec![0, 3, 4]])
            .unwrap()
            .face_poset();
        let c = classify_homology_type(&bow, Coefficients::Rationals);
        assert_eq!(c.kind, HomologyType::None);
        assert!(c.witness.is_some());
    }

    #[test]
    fn disjoint_circles_form_a_manifold() {
        let c = SimplicialComplex::from_facets(
            6,
            vec![
                vec![0, 1],
                vec![1, 2],
                vec![0, 2],
                vec![3, 4],
                vec![4, 5],
                vec![3, 5],
            ],
        )
        .unwrap()
        .face_poset();
        assert_eq!(
            classify_homology_type(&c, Coefficients::Rationals).kind,
            HomologyType::Manifold
        );
    }

    #[test]
    fn split_square_is_one_stacked_and_stacked_needs_a_ball() {
        let q = Coefficients::Rationals;
        let t = SimplicialComplex::from_facets(3, vec![vec![0, 1, 2]])
            .unwrap()
            .face_poset();
        let sq = SimplicialComplex::from_facets(4, vec![vec![0, 1, 2], vec![0, 2, 3]])
            .unwrap()
            .face_poset();
        for m in [Method::Definition, Method::Coskeleton] {
            assert!(check_stacked(&t, 0, q, m).unwrap().verdict);
            assert!(check_stacked(&sq, 1, q, m).unwrap().verdict);
            // the diagonal is an interior edge
            assert!(!check_stacked(&sq, 0, q, m).unwrap().verdict);
        }
        assert!(matches!(
            check_stacked(&tetra_boundary(), 1, q, Method::Definition),
            Err(Error::NotABall)
        ));
    }
}
