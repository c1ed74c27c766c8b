//! Face posets, simplicial and cubical complexes, and face sets.

mod cubical;
mod faceset;
mod poset;
mod simplicial;

pub use cubical::{
    chi_string, cube_dim, cube_facets, directions, intersect, is_subcube, parse_chi, Cube, CubicalComplex,
    Interval,
};
pub use faceset::FaceSet;
pub use poset::{FaceId, FacePoset, ValidationReport, Violation};
pub use simplicial::{binomial, Simplex, SimplicialComplex};

use crate::error::{Error, Result};

/// Any of the three input kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Complex {
    Poset(FacePoset),
    Simplicial(SimplicialComplex),
    Cubical(CubicalComplex),
}

impl Complex {
    pub fn face_poset(&self) -> FacePoset {
        match self {
            Complex::Poset(p) => p.clone(),
            Complex::Simplicial(s) => s.face_poset(),
            Complex::Cubical(c) => c.face_poset(),
        }
    }

    pub fn validate(&self) -> ValidationReport {
        match self {
            Complex::Poset(p) => p.validate(),
            Complex::Simplicial(s) => s.validate(),
            Complex::Cubical(c) => {
                let mut report = c.validate();
                report.issues.extend(c.face_poset().validate().issues);
                report
            }
        }
    }

    pub fn dim(&self) -> i32 {
        match self {
            Complex::Poset(p) => p.dim(),
            Complex::Simplicial(s) => s.dim(),
            Complex::Cubical(c) => c.dim(),
        }
    }

    pub fn f_vector(&self) -> Vec<usize> {
        match self {
            Complex::Poset(p) => p.f_vector(),
            Complex::Simplicial(s) => s.f_vector(),
            Complex::Cubical(c) => c.f_vector(),
        }
    }

    pub fn skeleton(&self, k: i32) -> Complex {
        match self {
            Complex::Poset(p) => Complex::Poset(p.skeleton(k)),
            Complex::Simplicial(s) => Complex::Simplicial(s.skeleton(k)),
            Complex::Cubical(c) => Complex::Cubical(c.skeleton(k)),
        }
    }

    pub fn as_simplicial(&self) -> Option<&SimplicialComplex> {
        match self {
            Complex::Simplicial(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_cubical(&self) -> Option<&CubicalComplex> {
        match self {
            Complex::Cubical(c) => Some(c),
            _ => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Complex::Poset(_) => "poset",
            Complex::Simplicial(_) => "simplicial",
            Complex::Cubical(_) => "cubical",
        }
    }
}

impl From<FacePoset> for Complex {
    fn from(p: FacePoset) -> Self {
        Complex::Poset(p)
    }
}

impl From<SimplicialComplex> for Complex {
    fn from(s: SimplicialComplex) -> Self {
        Complex::Simplicial(s)
    }
}

impl From<CubicalComplex> for Complex {
    fn from(c: CubicalComplex) -> Self {
        Complex::Cubical(c)
    }
}

/// `skel^c_k X`: the faces of dimension greater than `k`.
pub fn coskeleton_faces(x: &FacePoset, k: i32) -> FaceSet<'_> {
    FaceSet::new(x, x.faces().filter(|&f| x.dim_of(f) > k))
}

/// Faces of `skel_k X` as a face set, including the empty face.
pub fn skeleton_faces(x: &FacePoset, k: i32) -> FaceSet<'_> {
    FaceSet::new(x, x.faces().filter(|&f| x.dim_of(f) <= k))
}

/// `st σ = {τ : σ ⊆ τ}` and `lk σ = st σ ∖ {σ}`.
pub fn star_and_link(x: &FacePoset, sigma: FaceId) -> Result<(FaceSet<'_>, FaceSet<'_>)> {
    x.check(sigma)?;
    let star = x.up_closure(sigma);
    let link = star.iter().copied().filter(|&f| f != sigma);
    Ok((FaceSet::new(x, star.iter().copied()), FaceSet::new(x, link)))
}

/// Link of `σ` as a face set.
pub fn link_faces(x: &FacePoset, sigma: FaceId) -> Result<FaceSet<'_>> {
    star_and_link(x, sigma).map(|(_, l)| l)
}

/// How [`deletion`] removes a subcomplex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeletionMode {
    /// `X − Y`: faces meeting no face of `Y` except in the empty face.
    Combinatorial,
    /// `X ∖ Y` as a set of faces.
    Set,
}

#[derive(Debug)]
pub enum Deletion<'a> {
    Complex(FacePoset),
    Set(FaceSet<'a>),
}

/// Removes the subcomplex `y` from `x`. `y` must be closed under faces.
pub fn deletion<'a>(x: &'a FacePoset, y: &FaceSet<'_>, mode: DeletionMode) -> Result<Deletion<'a>> {
    if !y.is_downward_closed() {
        let bad = y
            .iter()
            .find(|&f| x.down(f).iter().any(|&g| g.0 != 0 && !y.contains(g)))
            .map(|f| x.label(f).to_string())
            .unwrap_or_default();
        return Err(Error::NotSubcomplex(format!("{bad} is missing a subface")));
    }
    Ok(match mode {
        DeletionMode::Set => Deletion::Set(set_deletion(x, y)),
        DeletionMode::Combinatorial => Deletion::Complex(combinatorial_deletion(x, y)),
    })
}

pub(crate) fn set_deletion<'a>(x: &'a FacePoset, y: &FaceSet<'_>) -> FaceSet<'a> {
    FaceSet::new(x, x.nonempty_faces().filter(|&f| !y.contains(f)))
}

pub(crate) fn combinatorial_deletion(x: &FacePoset, y: &FaceSet<'_>) -> FacePoset {
    // σ meets Y iff one of its vertices is in Y, since Y is closed
    let keep: Vec<bool> = x
        .faces()
        .map(|f| x.vertices_of(f).iter().all(|&v| !y.contains(v)))
        .collect();
    x.sub_poset(&keep).0
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
    fn coskeleton_of_octahedron() {
        let p = octahedron().face_poset();
        let s = coskeleton_faces(&p, 0);
        assert_eq!(s.len(), 20);
        assert!(s.is_upward_closed());
        assert!(coskeleton_faces(&p, 2).is_empty());
        assert_eq!(coskeleton_faces(&p, -1).len(), p.len() - 1);
    }

    #[test]
    fn star_contains_sigma_and_link_does_not() {
        let p = octahedron().face_poset();
        let v = FaceId(1);
        let (st, lk) = star_and_link(&p, v).unwrap();
        assert!(st.contains(v));
        assert!(!lk.contains(v));
        assert_eq!(st.len(), lk.len() + 1);
        assert!(st.is_upward_closed() && lk.is_upward_closed());
        // 4 edges and 4 triangles at a vertex of the octahedron
        assert_eq!(lk.len(), 8);
        assert!(star_and_link(&p, FaceId(10_000)).is_err());
    }

    #[test]
    fn link_of_empty_face_is_everything() {
        let p = octahedron().face_poset();
        let lk = link_faces(&p, p.empty_face()).unwrap();
        assert_eq!(lk, FaceSet::all_nonempty(&p));
    }

    #[test]
    fn set_deletion_of_skeleton_is_coskeleton() {
        let p = octahedron().face_poset();
        for k in -1..=2 {
            let Deletion::Set(s) = deletion(&p, &skeleton_faces(&p, k), DeletionMode::Set).unwrap() else {
                unreachable!()
            };
            assert_eq!(s, coskeleton_faces(&p, k));
        }
    }

    #[test]
    fn deleting_empty_subcomplex_is_identity() {
        let p = octahedron().face_poset();
        let Deletion::Complex(q) = deletion(&p, &FaceSet::empty(&p), DeletionMode::Combinatorial).unwrap()
        else {
            unreachable!()
        };
        assert_eq!(q, p);
    }

    #[test]
    fn non_subcomplex_rejected() {
        let p = octahedron().face_poset();
        let edge = p.faces_of_dim(1).next().unwrap();
        let y = FaceSet::new(&p, [edge]);
        assert!(matches!(
            deletion(&p, &y, DeletionMode::Set),
            Err(Error::NotSubcomplex(_))
        ));
    }
}
