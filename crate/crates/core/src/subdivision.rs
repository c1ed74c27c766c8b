//! Order complexes of face sets and barycentric subdivision.
//!
//! For an upward-closed face set `S` of `X` the order complex of `S` is
//! `bary(X) − bary(X ∖ S)`, which is homotopy equivalent to `|S|`. This is
//! Lemma 3.1 for co-skeletons; for links and other upward-closed sets we
//! rely on the same argument, which the proof supports but does not state.

use crate::complex::{FaceId, FacePoset, FaceSet, Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// A simplicial complex whose vertex `i` is the face `vertex_faces[i]` of a
/// parent complex. Faces are chains, stored in increasing dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderComplex {
    pub complex: SimplicialComplex,
    pub vertex_faces: Vec<FaceId>,
}

impl OrderComplex {
    /// The chain of parent faces behind a simplex of the order complex.
    pub fn chain(&self, s: &[usize]) -> Vec<FaceId> {
        s.iter().map(|&i| self.vertex_faces[i]).collect()
    }

    /// Vertex standing for the parent face `f`.
    pub fn vertex_of(&self, f: FaceId) -> Option<usize> {
        self.vertex_faces.binary_search(&f).ok()
    }
}

/// Order complex of an upward-closed face set.
pub fn order_complex(s: &FaceSet<'_>) -> Result<OrderComplex> {
    if !s.is_upward_closed() {
        let x = s.parent();
        let witness = s
            .iter()
            .find(|&f| x.up(f).iter().any(|&g| !s.contains(g)))
            .expect("flag is false, so a witness exists");
        return Err(Error::NotUpwardClosed(witness));
    }
    Ok(chains_within(s.parent(), s.mask()))
}

/// `bary(X)`: the order complex of all non-empty faces.
pub fn barycentric_subdivision(x: &FacePoset) -> OrderComplex {
    order_complex(&FaceSet::all_nonempty(x)).expect("all faces form an upward-closed set")
}

/// Chains of non-empty faces that lie entirely inside `mask`. No closure
/// requirement: callers that need the homotopy model must check it.
pub(crate) fn chains_within(x: &FacePoset, mask: &[bool]) -> OrderComplex {
    let vertex_faces: Vec<FaceId> = x.nonempty_faces().filter(|f| mask[f.0]).collect();
    let mut local = vec![usize::MAX; x.len()];
    for (i, f) in vertex_faces.iter().enumerate() {
        local[f.0] = i;
    }
    // faces strictly above each vertex, restricted to the set
    let n = vertex_faces.len();
    let mut above: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in (0..n).rev() {
        let mut acc: Vec<usize> = Vec::new();
        for &g in x.up(vertex_faces[i]) {
            let j = local[g.0];
            if j == usize::MAX {
                continue;
            }
            acc.push(j);
            acc.extend_from_slice(&above[j]);
        }
        acc.sort_unstable();
        acc.dedup();
        above[i] = acc;
    }
    let mut levels: Vec<Vec<Simplex>> = vec![vec![Vec::new()]];
    let mut chain = Vec::new();
    fn extend(i: usize, above: &[Vec<usize>], chain: &mut Vec<usize>, levels: &mut Vec<Vec<Simplex>>) {
        chain.push(i);
        if levels.len() <= chain.len() {
            levels.push(Vec::new());
        }
        levels[chain.len()].push(chain.clone());
        for &j in &above[i] {
            extend(j, above, chain, levels);
        }
        chain.pop();
    }
    for i in 0..n {
        extend(i, &above, &mut chain, &mut levels);
    }
    for level in &mut levels {
        level.sort_unstable();
    }
    let labels = vertex_faces.iter().map(|&f| x.label(f).to_string()).collect();
    OrderComplex {
        complex: SimplicialComplex::from_closed(labels, levels),
        vertex_faces,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{coskeleton_faces, CubicalComplex};

    #[test]
    fn bary_of_triangle() {
        let t = SimplicialComplex::from_facets(3, vec![vec![0, 1, 2]]).unwrap();
        let b = barycentric_subdivision(&t.face_poset());
        assert_eq!(b.complex.f_vector(), vec![7, 12, 6]);
    }

    #[test]
    fn bary_of_single_vertex() {
        let v = SimplicialComplex::from_facets(1, vec![vec![0]]).unwrap();
        let b = barycentric_subdivision(&v.face_poset());
        assert_eq!(b.complex.f_vector(), vec![1]);
    }

    #[test]
    fn bary_of_square_counts() {
        // 9 vertices, 16 edges, 8 triangles
        let sq = CubicalComplex::from_chi(2, &["**"]).unwrap();
        let b = barycentric_subdivision(&sq.face_poset());
        assert_eq!(b.complex.f_vector(), vec![9, 16, 8]);
    }

    #[test]
    fn top_coskeleton_is_empty() {
        let sq = CubicalComplex::from_chi(2, &["**"]).unwrap();
        let p = sq.face_poset();
        let oc = order_complex(&coskeleton_faces(&p, 2)).unwrap();
        assert_eq!(oc.complex.dim(), -1);
    }

    #[test]
    fn non_upward_closed_rejected() {
        let sq = CubicalComplex::from_chi(2, &["**"]).unwrap();
        let p = sq.face_poset();
        let s = FaceSet::new(&p, [FaceId(1)]);
        assert!(matches!(order_complex(&s), Err(Error::NotUpwardClosed(_))));
    }

    #[test]
    fn chains_are_increasing_in_dimension() {
        let sq = CubicalComplex::from_chi(3, &["***"]).unwrap();
        let p = sq.face_poset();
        let oc = order_complex(&coskeleton_faces(&p, 0)).unwrap();
        for s in oc.complex.iter_faces() {
            let dims: Vec<i32> = oc.chain(s).iter().map(|&f| p.dim_of(f)).collect();
            assert!(dims.windows(2).all(|w| w[0] < w[1]));
            assert!(dims.iter().all(|&d| d > 0));
        }
        // d - k - 1 with d = 3, k = 0
        assert!(oc.complex.dim() <= 2);
    }
}
