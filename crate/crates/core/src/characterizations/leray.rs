use super::{coskeleton_homology, link_homology, Method, PropertyVerdict, Witness};
use crate::complex::{FaceId, FacePoset};
use crate::error::{Error, Result};
use crate::homology::{poset_homology, Coefficients};

/// `r`-Leray test.
///
/// * `Definition`: `H̃_i(|lk σ|) = 0` for `i ≥ r` and every face, including
///   the empty face.
/// * `Coskeleton`: `H̃_i(|skel^c_k X|) = 0` for `i ≥ r`, `k = −1, …, d`
///   (Thm 5.8).
/// * `Induced`: every induced subcomplex has `H̃_i = 0` for `i ≥ r`. Only
///   defined for simplicial complexes; see [`induced_leray_reading`] for the
///   same enumeration on arbitrary posets.
pub fn check_leray(x: &FacePoset, r: i32, coeff: Coefficients, method: Method) -> Result<PropertyVerdict> {
    if r < 0 {
        return Err(Error::OutOfRange(format!("r = {r} must be non-negative")));
    }
    let (method, failure) = match method {
        Method::Coskeleton => (Method::Coskeleton, coskeleton_failure(x, r, coeff)),
        Method::Induced => {
            if !x.is_simplicial() {
                return Err(Error::NotSimplicial);
            }
            (Method::Induced, induced_failure(x, r, coeff)?)
        }
        _ => (Method::Definition, definition_failure(x, r, coeff)),
    };
    Ok(PropertyVerdict::new(
        "leray",
        &[("r", r as i64)],
        coeff,
        method,
        failure,
    ))
}

/// The induced-subcomplex condition evaluated on any face poset: for each
/// vertex set `W`, the faces all of whose vertices lie in `W`.
///
/// On simplicial complexes this agrees with the other methods. On other
/// polytopal complexes it is a different condition, e.g. a single square is
/// 0-Leray by links but fails here.
pub fn induced_leray_reading(x: &FacePoset, r: i32, coeff: Coefficients) -> Result<PropertyVerdict> {
    let failure = induced_failure(x, r, coeff)?;
    Ok(PropertyVerdict::new(
        "leray",
        &[("r", r as i64)],
        coeff,
        Method::Induced,
        failure,
    ))
}

fn definition_failure(x: &FacePoset, r: i32, coeff: Coefficients) -> Option<Witness> {
    x.faces().find_map(|sigma| {
        let h = link_homology(x, sigma, coeff);
        h.nonzero_degrees()
            .into_iter()
            .find(|&i| i >= r)
            .map(|i| Witness::at_face(x, sigma, Some(i), "link homology in degree >= r"))
    })
}

fn coskeleton_failure(x: &FacePoset, r: i32, coeff: Coefficients) -> Option<Witness> {
    (-1..=x.dim()).find_map(|k| {
        let h = coskeleton_homology(x, k, coeff);
        h.nonzero_degrees()
            .into_iter()
            .find(|&i| i >= r)
            .map(|i| Witness::at_coskeleton(k, i, "co-skeleton homology in degree >= r"))
    })
}

const MAX_INDUCED_VERTICES: usize = 20;

fn induced_failure(x: &FacePoset, r: i32, coeff: Coefficients) -> Result<Option<Witness>> {
    let verts: Vec<FaceId> = x.faces_of_dim(0).collect();
    let n = verts.len();
    if n > MAX_INDUCED_VERTICES {
        return Err(Error::OutOfRange(format!(
            "induced method enumerates 2^{n} vertex sets; limit is 2^{MAX_INDUCED_VERTICES}"
        )));
    }
    let face_verts: Vec<u32> = x
        .faces()
        .map(|f| {
            x.vertices_of(f)
                .iter()
                .map(|v| 1u32 << verts.iter().position(|w| w == v).expect("vertex"))
                .fold(0, |a, b| a | b)
        })
        .collect();
    for w in 0u32..(1 << n) {
        let keep: Vec<bool> = face_verts.iter().map(|&m| m & !w == 0).collect();
        let (sub, _) = x.sub_poset(&keep);
        let h = poset_homology(&sub, coeff);
        if let Some(i) = h.nonzero_degrees().into_iter().find(|&i| i >= r) {
            let labels: Vec<&str> = (0..n)
                .filter(|&j| w >> j & 1 == 1)
                .map(|j| x.label(verts[j]))
                .collect();
            return Ok(Some(Witness {
                face: Some(format!("induced on {{{}}}", labels.join(","))),
                face_id: None,
                k: None,
                degree: Some(i),
                reason: "induced subcomplex homology in degree >= r".into(),
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{CubicalComplex, SimplicialComplex};

    #[test]
    fn square_is_zero_leray_by_links_only() {
        let sq = CubicalComplex::from_chi(2, &["**"]).unwrap().face_poset();
        let q = Coefficients::Rationals;
        assert!(check_leray(&sq, 0, q, Method::Definition).unwrap().verdict);
        assert!(check_leray(&sq, 0, q, Method::Coskeleton).unwrap().verdict);
        assert!(matches!(
            check_leray(&sq, 0, q, Method::Induced),
            Err(Error::NotSimplicial)
        ));
        let reading = induced_leray_reading(&sq, 0, q).unwrap();
        assert!(!reading.verdict);
        assert_eq!(reading.witness.unwrap().degree, Some(0));
    }

    #[test]
    fn point_is_zero_leray() {
        let p = SimplicialComplex::from_facets(1, vec![vec![0]])
            .unwrap()
            .face_poset();
        for m in [Method::Definition, Method::Coskeleton, Method::Induced] {
            assert!(check_leray(&p, 0, Coefficients::Rationals, m).unwrap().verdict);
        }
    }

    #[test]
    fn negative_r_rejected() {
        let p = SimplicialComplex::from_facets(1, vec![vec![0]])
            .unwrap()
            .face_poset();
        assert!(check_leray(&p, -1, Coefficients::Rationals, Method::Definition).is_err());
    }
}
