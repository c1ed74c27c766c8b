use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::cat0::{cat0_certify, cone_point};
use super::hyperplanes::{cube_classes, edge_classes, hyperplanes, Hyperplane};
use crate::characterizations::{
    check_cohen_macaulay, check_leray, check_stacked, classify_homology_type, HomologyType, Method,
};
use crate::complex::{coskeleton_faces, cube_dim, Cube, CubicalComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{open_set_homology, Coefficients};

/// `cross(◻)`: vertex `i` is hyperplane `i`, labelled `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingComplex {
    pub complex: SimplicialComplex,
    pub hyperplanes: Vec<Hyperplane>,
}

/// Nerve of the hyperplanes. Hyperplanes meet exactly when some cube is cut
/// by all of them, so the faces are the class sets of single cubes.
pub fn crossing_complex(c: &CubicalComplex) -> Result<CrossingComplex> {
    let hyperplanes = hyperplanes(c)?;
    let (classes, m) = edge_classes(c);
    let facets = c.facets().into_iter().map(|q| hyperplane_set(c, &classes, &q));
    let labels = (1..=m).map(|i| i.to_string()).collect();
    let complex = SimplicialComplex::new(labels, facets)?;
    Ok(CrossingComplex { complex, hyperplanes })
}

fn hyperplane_set(c: &CubicalComplex, classes: &[usize], q: &[(i64, i64)]) -> Vec<usize> {
    let mut s: Vec<usize> = cube_classes(c, classes, q).into_iter().map(|(_, h)| h).collect();
    s.sort_unstable();
    s
}

/// Subcomplex of `[0,1]^n` of all cubes whose `{1,*}`-support is a face of
/// `Δ`. Only flag inputs are accepted, since only they give CAT(0) cones.
pub fn cubical_cone(delta: &SimplicialComplex) -> Result<CubicalComplex> {
    if let Some(w) = delta.non_flag_witness() {
        return Err(Error::NotFlag(w));
    }
    let n = delta.n_vertices();
    // the {0,*} cubes; closing under faces adds the rest
    let cubes = delta.iter_faces().map(|f| {
        let mut q: Cube = vec![(0, 0); n];
        for &v in f {
            q[v] = (0, 1);
        }
        q
    });
    CubicalComplex::new(n, cubes)
}

/// Both sides of one transferred property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transfer {
    pub property: String,
    pub param: i32,
    pub cubical: bool,
    pub crossing: bool,
}

impl Transfer {
    pub fn agrees(&self) -> bool {
        self.cubical == self.crossing
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingReport {
    pub coeff: Coefficients,
    /// `k` for which `H̃(skel^c_k ◻) ≅ H̃(skel^c_{k−1} Δ)` failed.
    pub betti_failures: Vec<i32>,
    pub facet_bijection: bool,
    pub transfers: Vec<Transfer>,
    /// Whether both complexes are homology balls, so stacked transfers apply.
    pub both_balls: bool,
    /// `Some(found)` when `Δ` is a connected homology manifold over GF(2).
    pub cone_detected: Option<bool>,
    pub holds: bool,
}

/// Prop 6.4, Lemma 6.5, Thm 6.8 and the cone corollary on one certified
/// CAT(0) complex.
pub fn verify_crossing_equivalence(c: &CubicalComplex, coeff: Coefficients) -> Result<CrossingReport> {
    if !cat0_certify(c).is_verified() {
        return Err(Error::NotCertified);
    }
    let cross = crossing_complex(c)?;
    let delta = &cross.complex;
    let xc = c.face_poset();
    let xd = delta.face_poset();
    let d = c.dim();

    let mut betti_failures = Vec::new();
    for k in 0..=d {
        let a = open_set_homology(&coskeleton_faces(&xc, k), coeff)?;
        let b = open_set_homology(&coskeleton_faces(&xd, k - 1), coeff)?;
        if !a.same_groups(&b) {
            betti_failures.push(k);
        }
    }

    let (classes, _) = edge_classes(c);
    let mut image = BTreeMap::new();
    let mut facet_bijection = true;
    for q in c.facets() {
        let s = hyperplane_set(c, &classes, &q);
        facet_bijection &= s.len() == cube_dim(&q);
        facet_bijection &= image.insert(s, q).is_none();
    }
    let delta_facets: BTreeSet<Vec<usize>> = delta.facets().into_iter().collect();
    facet_bijection &= image.keys().cloned().collect::<BTreeSet<_>>() == delta_facets;

    let mut transfers = vec![Transfer {
        property: "cohen_macaulay".into(),
        param: 0,
        cubical: check_cohen_macaulay(&xc, coeff, Method::Coskeleton).verdict,
        crossing: check_cohen_macaulay(&xd, coeff, Method::Coskeleton).verdict,
    }];
    for r in 0..=d.max(0) {
        transfers.push(Transfer {
            property: "leray".into(),
            param: r,
            cubical: check_leray(&xc, r, coeff, Method::Coskeleton)?.verdict,
            crossing: check_leray(&xd, r, coeff, Method::Coskeleton)?.verdict,
        });
    }
    let both_balls = classify_homology_type(&xc, coeff).kind == HomologyType::Ball
        && classify_homology_type(&xd, coeff).kind == HomologyType::Ball;
    if both_balls {
        for s in 0..=d.max(0) {
            transfers.push(Transfer {
                property: "stacked".into(),
                param: s,
                cubical: check_stacked(&xc, s, coeff, Method::Coskeleton)?.verdict,
                crossing: check_stacked(&xd, s, coeff, Method::Coskeleton)?.verdict,
            });
        }
    }

    let gf2 = Coefficients::PrimeField(2);
    let kind = classify_homology_type(&xd, gf2).kind;
    let connected = delta.n_vertices() > 0 && crate::homology::homology(delta, gf2).is_zero_in(0);
    let cone_detected =
        (connected && matches!(kind, HomologyType::Sphere | HomologyType::Manifold)).then(|| {
            cone_point(c)
                .iter()
                .any(|v| c.vertex_link(v).is_isomorphic(delta))
        });

    let holds = betti_failures.is_empty()
        && facet_bijection
        && transfers.iter().all(Transfer::agrees)
        && cone_detected != Some(false);
    Ok(CrossingReport {
        coeff,
        betti_failures,
        facet_bijection,
        transfers,
        both_balls,
        cone_detected,
        holds,
    })
}
