use serde::Serialize;

use super::{classify_homology_type, HomologyType, Method, PropertyVerdict, Witness};
use crate::complex::{binomial, coskeleton_faces, FacePoset, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{cohomology, homology, open_set_cohomology, open_set_homology, Coefficients, Group};
use crate::subdivision::barycentric_subdivision;

fn require_sphere(x: &FacePoset, coeff: Coefficients) -> Result<()> {
    match classify_homology_type(x, coeff).kind {
        HomologyType::Sphere => Ok(()),
        _ => Err(Error::NotASphere),
    }
}

/// `t`-neighbourliness of a simplicial homology sphere over ℤ (Cor 3.9).
///
/// * `Combinatorial`: every `t`-subset of vertices is a face.
/// * `Skeleton`: `rank H̃_{t−1}(|skel_{t−1} Δ|) = C(n−1, t)`.
/// * `Coskeleton`: `rank H̃^{d−t}(|skel^c_{t−1} Δ|) = C(n−1, t)`.
pub fn check_neighbourly(delta: &SimplicialComplex, t: i32, method: Method) -> Result<PropertyVerdict> {
    let d = delta.dim();
    if t < 1 || t > d {
        return Err(Error::OutOfRange(format!("t = {t} must lie in 1..={d}")));
    }
    let z = Coefficients::Integers;
    let x = delta.face_poset();
    require_sphere(&x, z)?;
    let n = delta.n_vertices() as u64;
    let want = binomial(n.saturating_sub(1), t as u64) as usize;
    let rank_failure = |rank: usize, degree: i32, what: &str| {
        (rank != want).then(|| Witness {
            face: None,
            face_id: None,
            k: Some(t - 1),
            degree: Some(degree),
            reason: format!("{what} rank {rank}, expected C({}, {t}) = {want}", n - 1),
        })
    };
    let (method, failure) = match method {
        Method::Skeleton => {
            let h = homology(&delta.skeleton(t - 1), z);
            (
                Method::Skeleton,
                rank_failure(h.rank(t - 1), t - 1, "skeleton homology"),
            )
        }
        Method::Coskeleton => {
            let h = open_set_cohomology(&coskeleton_faces(&x, t - 1), z).expect("upward closed");
            (
                Method::Coskeleton,
                rank_failure(h.rank(d - t), d - t, "co-skeleton cohomology"),
            )
        }
        _ => {
            let missing = first_missing_subset(delta, t as usize);
            (
                Method::Combinatorial,
                missing.map(|s| Witness {
                    face: Some(delta.face_label(&s)),
                    face_id: None,
                    k: None,
                    degree: None,
                    reason: "vertex set spans no face".into(),
                }),
            )
        }
    };
    Ok(PropertyVerdict::new(
        "neighbourly",
        &[("t", t as i64)],
        z,
        method,
        failure,
    ))
}

fn first_missing_subset(delta: &SimplicialComplex, t: usize) -> Option<Vec<usize>> {
    let n = delta.n_vertices();
    let mut s: Vec<usize> = (0..t).collect();
    if t > n {
        return Some(s);
    }
    loop {
        if !delta.contains(&s) {
            return Some(s);
        }
        // next t-subset in lexicographic order
        let mut i = t;
        while i > 0 && s[i - 1] == n - t + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return None;
        }
        s[i - 1] += 1;
        for j in i..t {
            s[j] = s[j - 1] + 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlexanderRow {
    pub i: i32,
    /// `H̃^i(|skel_k X|)`
    pub skel_cohomology: Group,
    /// `H̃_{d−i−1}(|skel^c_k X|)`
    pub coskel_homology: Group,
    /// `H̃_i(|skel_k X|)`
    pub skel_homology: Group,
    /// `H̃^{d−i−1}(|skel^c_k X|)`
    pub coskel_cohomology: Group,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlexanderReport {
    pub d: i32,
    pub k: i32,
    pub coeff: Coefficients,
    pub rows: Vec<AlexanderRow>,
    pub holds: bool,
}

/// Cor 3.6 on a homology sphere, comparing full groups (torsion included).
/// The skeleton side is computed from `bary(skel_k X)`, the co-skeleton side
/// from the order complex of `skel^c_k X`.
pub fn alexander_duality_check(x: &FacePoset, k: i32, coeff: Coefficients) -> Result<AlexanderReport> {
    let d = x.dim();
    if k < 0 || k > d - 1 {
        return Err(Error::OutOfRange(format!("k = {k} must lie in 0..={}", d - 1)));
    }
    require_sphere(x, coeff)?;
    let skel = barycentric_subdivision(&x.skeleton(k)).complex;
    let skel_h = homology(&skel, coeff);
    let skel_c = cohomology(&skel, coeff);
    let cos = coskeleton_faces(x, k);
    let cos_h = open_set_homology(&cos, coeff)?;
    let cos_c = open_set_cohomology(&cos, coeff)?;
    let rows: Vec<AlexanderRow> = (-1..=d)
        .map(|i| AlexanderRow {
            i,
            skel_cohomology: skel_c.group(i),
            coskel_homology: cos_h.group(d - i - 1),
            skel_homology: skel_h.group(i),
            coskel_cohomology: cos_c.group(d - i - 1),
        })
        .collect();
    let holds = rows
        .iter()
        .all(|r| r.skel_cohomology == r.coskel_homology && r.skel_homology == r.coskel_cohomology);
    Ok(AlexanderReport {
        d,
        k,
        coeff,
        rows,
        holds,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalityReport {
    pub n: usize,
    pub k: i32,
    pub rank: usize,
    pub bound: u64,
    pub equality: bool,
    pub is_full_skeleton: bool,
    /// `rank ≤ bound`, and equality exactly for the full skeleton (Lemma 3.8).
    pub consistent: bool,
}

/// Lemma 3.8 over ℤ for a complex of dimension `k` on `n > k` vertices.
pub fn skeleton_extremality_check(delta: &SimplicialComplex) -> Result<ExtremalityReport> {
    let n = delta.n_vertices();
    let k = delta.dim();
    if n < 1 || k < 0 || k as usize >= n {
        return Err(Error::OutOfRange(format!(
            "need n >= 1 and 0 <= dim < n, got n = {n}, dim = {k}"
        )));
    }
    let rank = homology(delta, Coefficients::Integers).rank(k);
    let bound = binomial(n as u64 - 1, k as u64 + 1);
    let equality = rank as u64 == bound;
    let is_full_skeleton = delta.has_complete_skeleton(k);
    Ok(ExtremalityReport {
        n,
        k,
        rank,
        bound,
        equality,
        is_full_skeleton,
        consistent: rank as u64 <= bound && equality == is_full_skeleton,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn octahedron() -> SimplicialComplex {
        let mut facets = Vec::new();
        for a in [0, 1] {
            for b in [2, 3] {
                for c in [4, 5] {
                    facets.push(vec![a, b, c]);
                }
            }
        }
        SimplicialComplex::from_facets(6, facets).unwrap()
    }

    #[test]
    fn octahedron_is_one_but_not_two_neighbourly() {
        let o = octahedron();
        for m in [Method::Combinatorial, Method::Skeleton, Method::Coskeleton] {
            assert!(check_neighbourly(&o, 1, m).unwrap().verdict);
            assert!(!check_neighbourly(&o, 2, m).unwrap().verdict, "{m}");
        }
        assert!(check_neighbourly(&o, 3, Method::Combinatorial).is_err());
    }

    #[test]
    fn alexander_on_tetrahedron_boundary() {
        let t = SimplicialComplex::from_facets(4, vec![vec![0, 1, 2, 3]])
            .unwrap()
            .skeleton(2)
            .face_poset();
        let r = alexander_duality_check(&t, 0, Coefficients::Integers).unwrap();
        assert!(r.holds);
        // four points: H̃^0 has rank 3, matched by H̃_1 of the sphere minus 4 points
        let row = r.rows.iter().find(|row| row.i == 0).unwrap();
        assert_eq!(row.skel_cohomology.rank, 3);
        assert_eq!(row.coskel_homology.rank, 3);
    }

    #[test]
    fn extremality_small_cases() {
        let c4 =
            SimplicialComplex::from_facets(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap();
        let r = skeleton_extremality_check(&c4).unwrap();
        assert_eq!((r.rank, r.bound, r.equality), (1, 3, false));
        assert!(r.consistent);
        let v = SimplicialComplex::from_facets(1, vec![vec![0]]).unwrap();
        let r = skeleton_extremality_check(&v).unwrap();
        assert_eq!(
            (r.rank, r.bound, r.equality, r.is_full_skeleton),
            (0, 0, true, true)
        );
    }

    #[test]
    fn missing_subset_enumeration() {
        let o = octahedron();
        assert_eq!(first_missing_subset(&o, 2), Some(vec![0, 1]));
        assert_eq!(first_missing_subset(&o, 1), None);
    }
}
