use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Dense index of a face inside a [`FacePoset`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FaceId(pub usize);

impl FaceId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite polytopal complex given by its face poset.
///
/// Faces are stored sorted by dimension, so the empty face is always
/// `FaceId(0)` and ids of a fixed dimension form a contiguous range. The
/// poset is kept as its Hasse diagram (`down` / `up` cover lists).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacePoset {
    dims: Vec<i32>,
    labels: Vec<String>,
    down: Vec<Vec<FaceId>>,
    up: Vec<Vec<FaceId>>,
}

impl FacePoset {
    /// Builds a poset from face dimensions, labels and cover pairs `(lower, upper)`
    /// given as indices into `dims`.
    ///
    /// Exactly one face must have dimension −1. Faces are renumbered so that
    /// ids increase with dimension; the returned vector maps each input index
    /// to its new id. Invariants beyond indexability are *not* checked here,
    /// use [`FacePoset::validate`] for that.
    pub fn from_parts(
        dims: Vec<i32>,
        labels: Vec<String>,
        covers: &[(usize, usize)],
    ) -> Result<(Self, Vec<FaceId>)> {
        let n = dims.len();
        if labels.len() != n {
            return Err(Error::Malformed(format!(
                "{} labels for {} faces",
                labels.len(),
                n
            )));
        }
        if let Some(&d) = dims.iter().find(|&&d| d < -1) {
            return Err(Error::Malformed(format!("face dimension {d} below -1")));
        }
        let empties = dims.iter().filter(|&&d| d == -1).count();
        if empties != 1 {
            return Err(Error::Malformed(format!(
                "expected exactly one empty face, found {empties}"
            )));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (dims[i], i));
        let mut new_id = vec![FaceId(0); n];
        for (pos, &old) in order.iter().enumerate() {
            new_id[old] = FaceId(pos);
        }
        let mut sorted_dims = vec![0; n];
        let mut sorted_labels = vec![String::new(); n];
        for (old, label) in labels.into_iter().enumerate() {
            sorted_dims[new_id[old].0] = dims[old];
            sorted_labels[new_id[old].0] = label;
        }
        let mut down = vec![Vec::new(); n];
        let mut up = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(lo, hi) in covers {
            if lo >= n || hi >= n {
                return Err(Error::UnknownFace(lo.max(hi)));
            }
            let (lo, hi) = (new_id[lo], new_id[hi]);
            if lo == hi {
                return Err(Error::Malformed(format!("face {lo} covers itself")));
            }
            if seen.insert((lo, hi)) {
                down[hi.0].push(lo);
                up[lo.0].push(hi);
            }
        }
        for list in down.iter_mut().chain(up.iter_mut()) {
            list.sort();
        }
        Ok((
            FacePoset {
                dims: sorted_dims,
                labels: sorted_labels,
                down,
                up,
            },
            new_id,
        ))
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.len() <= 1
    }

    pub fn empty_face(&self) -> FaceId {
        FaceId(0)
    }

    pub fn faces(&self) -> impl Iterator<Item = FaceId> + '_ {
        (0..self.dims.len()).map(FaceId)
    }

    pub fn nonempty_faces(&self) -> impl Iterator<Item = FaceId> + '_ {
        (1..self.dims.len()).map(FaceId)
    }

    pub fn faces_of_dim(&self, k: i32) -> impl Iterator<Item = FaceId> + '_ {
        self.faces().filter(move |f| self.dims[f.0] == k)
    }

    pub fn contains(&self, f: FaceId) -> bool {
        f.0 < self.dims.len()
    }

    pub fn check(&self, f: FaceId) -> Result<()> {
        if self.contains(f) {
            Ok(())
        } else {
            Err(Error::UnknownFace(f.0))
        }
    }

    pub fn dim_of(&self, f: FaceId) -> i32 {
        self.dims[f.0]
    }

    pub fn label(&self, f: FaceId) -> &str {
        &self.labels[f.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn face_by_label(&self, label: &str) -> Option<FaceId> {
        self.labels.iter().position(|l| l == label).map(FaceId)
    }

    /// Faces covered by `f`.
    pub fn down(&self, f: FaceId) -> &[FaceId] {
        &self.down[f.0]
    }

    /// Faces covering `f`.
    pub fn up(&self, f: FaceId) -> &[FaceId] {
        &self.up[f.0]
    }

    /// Dimension of the complex (−1 for the complex with only the empty face).
    pub fn dim(&self) -> i32 {
        self.dims.iter().copied().max().unwrap_or(-1)
    }

    /// `f_k` for `k = 0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let d = self.dim();
        let mut f = vec![0; (d + 1).max(0) as usize];
        for &k in &self.dims {
            if k >= 0 {
                f[k as usize] += 1;
            }
        }
        f
    }

    /// All faces `g` with `f ⊆ g`, including `f`, in increasing id order.
    pub fn up_closure(&self, f: FaceId) -> Vec<FaceId> {
        self.closure(f, &self.up)
    }

    /// All faces `g` with `g ⊆ f`, including `f` and the empty face.
    pub fn down_closure(&self, f: FaceId) -> Vec<FaceId> {
        self.closure(f, &self.down)
    }

    fn closure(&self, f: FaceId, adj: &[Vec<FaceId>]) -> Vec<FaceId> {
        let mut mark = vec![false; self.len()];
        let mut stack = vec![f];
        mark[f.0] = true;
        while let Some(g) = stack.pop() {
            for &h in &adj[g.0] {
                if !mark[h.0] {
                    mark[h.0] = true;
                    stack.push(h);
                }
            }
        }
        mark.iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(FaceId(i)))
            .collect()
    }

    /// `a ⊆ b` in the face order.
    pub fn is_face_of(&self, a: FaceId, b: FaceId) -> bool {
        if a == b {
            return true;
        }
        if self.dims[a.0] >= self.dims[b.0] {
            return false;
        }
        let mut stack = vec![b];
        let mut seen = BTreeSet::new();
        while let Some(g) = stack.pop() {
            for &h in &self.down[g.0] {
                if h == a {
                    return true;
                }
                if self.dims[h.0] > self.dims[a.0] && seen.insert(h) {
                    stack.push(h);
                }
            }
        }
        false
    }

    /// Vertices (0-faces) below `f`.
    pub fn vertices_of(&self, f: FaceId) -> Vec<FaceId> {
        self.down_closure(f)
            .into_iter()
            .filter(|&g| self.dims[g.0] == 0)
            .collect()
    }

    /// Maximal non-empty faces.
    pub fn facets(&self) -> Vec<FaceId> {
        self.nonempty_faces()
            .filter(|&f| self.up[f.0].is_empty())
            .collect()
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets().iter().all(|&f| self.dims[f.0] == d)
    }

    /// The induced sub-poset on the faces marked `keep`. The empty face is
    /// always kept. Returns the sub-poset and, for each kept face, its id in
    /// the parent.
    pub fn sub_poset(&self, keep: &[bool]) -> (FacePoset, Vec<FaceId>) {
        let mut parent_of = Vec::new();
        let mut local = vec![usize::MAX; self.len()];
        for f in self.faces() {
            if f.0 == 0 || keep[f.0] {
                local[f.0] = parent_of.len();
                parent_of.push(f);
            }
        }
        let dims = parent_of.iter().map(|&f| self.dims[f.0]).collect();
        let labels = parent_of.iter().map(|&f| self.labels[f.0].clone()).collect();
        let mut covers = Vec::new();
        for &f in &parent_of {
            for &g in &self.up[f.0] {
                if local[g.0] != usize::MAX {
                    covers.push((local[f.0], local[g.0]));
                }
            }
        }
        let (poset, _) = FacePoset::from_parts(dims, labels, &covers)
            .expect("sub-poset of a well-formed poset is well formed");
        // ordering by (dim, id) is preserved, so local ids are unchanged
        (poset, parent_of)
    }

    /// The `k`-skeleton: faces of dimension at most `k`.
    pub fn skeleton(&self, k: i32) -> FacePoset {
        let keep: Vec<bool> = self.dims.iter().map(|&d| d <= k).collect();
        self.sub_poset(&keep).0
    }

    /// A poset is simplicial when every face of dimension `k` has exactly
    /// `k + 1` vertices and distinct faces have distinct vertex sets.
    pub fn is_simplicial(&self) -> bool {
        let mut seen = BTreeSet::new();
        for f in self.faces() {
            let verts = self.vertices_of(f);
            if verts.len() as i32 != self.dims[f.0] + 1 || !seen.insert(verts) {
                return false;
            }
        }
        true
    }

    /// Checks the invariants of a face poset of a polytopal complex.
    pub fn validate(&self) -> ValidationReport {
        let mut issues = Vec::new();
        for f in self.faces() {
            for &g in &self.up[f.0] {
                if self.dims[g.0] != self.dims[f.0] + 1 {
                    issues.push(Violation::NotGraded {
                        lower: self.labels[f.0].clone(),
                        upper: self.labels[g.0].clone(),
                    });
                }
            }
        }
        for f in self.nonempty_faces() {
            let d = self.dims[f.0];
            let needed = if d == 0 { 1 } else { 2 };
            if self.down[f.0].len() < needed {
                issues.push(Violation::NotDownwardClosed {
                    face: self.labels[f.0].clone(),
                    dim: d,
                });
            }
        }
        for f in self.nonempty_faces() {
            if self.dims[f.0] < 1 {
                continue;
            }
            let mut middle: BTreeMap<FaceId, usize> = BTreeMap::new();
            for &c in &self.down[f.0] {
                for &t in &self.down[c.0] {
                    *middle.entry(t).or_default() += 1;
                }
            }
            for (t, count) in middle {
                if count != 2 {
                    issues.push(Violation::Diamond {
                        lower: self.labels[t.0].clone(),
                        upper: self.labels[f.0].clone(),
                        middle: count,
                    });
                }
            }
        }
        ValidationReport { issues }
    }
}

/// A single violated invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    NotGraded {
        lower: String,
        upper: String,
    },
    NotDownwardClosed {
        face: String,
        dim: i32,
    },
    Diamond {
        lower: String,
        upper: String,
        middle: usize,
    },
    NotClosed {
        face: String,
    },
    BadInterval {
        cube: String,
    },
    Intersection {
        a: String,
        b: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotGraded { lower, upper } => {
                write!(f, "cover {lower} < {upper} does not raise dimension by one")
            }
            Violation::NotDownwardClosed { face, dim } => {
                write!(f, "not downward closed at {dim}-face {face}")
            }
            Violation::Diamond { lower, upper, middle } => write!(
                f,
                "diamond property fails on [{lower}, {upper}]: {middle} middle faces"
            ),
            Violation::NotClosed { face } => write!(f, "face {face} is missing a subface"),
            Violation::BadInterval { cube } => {
                write!(f, "cube {cube} has an interval that is not a unit step")
            }
            Violation::Intersection { a, b } => {
                write!(f, "cubes {a} and {b} do not meet in a common face")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub issues: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::Invalid(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return write!(f, "valid");
        }
        for issue in &self.issues {
            writeln!(f, "{issue}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Boundary of an n-gon as a face poset, vertices `1..=n`, edges `i(i+1)`.
    pub(crate) fn polygon(n: usize) -> (Vec<i32>, Vec<String>, Vec<(usize, usize)>) {
        let mut dims = vec![-1];
        let mut labels = vec!["{}".to_string()];
        let mut covers = Vec::new();
        for v in 1..=n {
            dims.push(0);
            labels.push(v.to_string());
            covers.push((0, v));
        }
        for v in 1..=n {
            let w = v % n + 1;
            dims.push(1);
            labels.push(format!("{v}{w}"));
            let e = dims.len() - 1;
            covers.push((v, e));
            covers.push((w, e));
        }
        (dims, labels, covers)
    }

    #[test]
    fn pentagon_is_valid() {
        let (d, l, c) = polygon(5);
        let (p, _) = FacePoset::from_parts(d, l, &c).unwrap();
        assert!(p.validate().is_valid());
        assert_eq!(p.f_vector(), vec![5, 5]);
    }

    #[test]
    fn deleted_cover_breaks_downward_closure() {
        let (d, l, mut c) = polygon(5);
        // edge "34" loses vertex 4
        let pos = c.iter().position(|&(lo, hi)| lo == 4 && hi == 8).unwrap();
        c.remove(pos);
        let (p, _) = FacePoset::from_parts(d, l, &c).unwrap();
        let report = p.validate();
        assert!(report.issues.contains(&Violation::NotDownwardClosed {
            face: "34".into(),
            dim: 1
        }));
    }

    #[test]
    fn square_with_three_middle_faces_fails_diamond() {
        // face lattice of a square plus a stray extra edge under the square
        // between vertices a and b
        let (mut d, mut l, mut c) = polygon(4);
        d.push(1);
        l.push("12'".into());
        let extra = d.len() - 1;
        c.push((1, extra));
        c.push((2, extra));
        d.push(2);
        l.push("sq".into());
        let sq = d.len() - 1;
        for e in 5..=extra {
            c.push((e, sq));
        }
        let (p, _) = FacePoset::from_parts(d, l, &c).unwrap();
        let report = p.validate();
        // vertex 1 < sq and vertex 2 < sq now have 3 middle edges
        let diamonds: Vec<_> = report
            .issues
            .iter()
            .filter(|v| matches!(v, Violation::Diamond { middle: 3, .. }))
            .collect();
        assert_eq!(diamonds.len(), 2);
    }

    #[test]
    fn non_graded_cover_reported() {
        let (p, _) = FacePoset::from_parts(
            vec![-1, 0, 2],
            vec!["e".into(), "v".into(), "t".into()],
            &[(0, 1), (1, 2)],
        )
        .unwrap();
        assert!(p
            .validate()
            .issues
            .iter()
            .any(|v| matches!(v, Violation::NotGraded { .. })));
    }

    #[test]
    fn from_parts_requires_single_empty_face() {
        assert!(FacePoset::from_parts(vec![0], vec!["v".into()], &[]).is_err());
        assert!(FacePoset::from_parts(vec![-1, -1], vec!["a".into(), "b".into()], &[]).is_err());
    }

    #[test]
    fn renumbering_sorts_by_dimension() {
        let (p, map) = FacePoset::from_parts(
            vec![1, 0, -1, 0],
            vec!["ab".into(), "a".into(), "{}".into(), "b".into()],
            &[(2, 1), (2, 3), (1, 0), (3, 0)],
        )
        .unwrap();
        assert_eq!(map[2], FaceId(0));
        assert_eq!(p.dim_of(map[0]), 1);
        assert!(p.is_face_of(map[1], map[0]));
        assert!(!p.is_face_of(map[1], map[3]));
        assert_eq!(p.facets(), vec![map[0]]);
    }
}
