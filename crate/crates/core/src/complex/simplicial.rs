use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashSet};

use super::poset::{FaceId, FacePoset, ValidationReport, Violation};
use crate::error::{Error, Result};

/// A face of a simplicial complex as a sorted list of vertex indices.
pub type Simplex = Vec<usize>;

/// Abstract simplicial complex on the vertices `0..n`, each carrying a label.
///
/// Faces are bucketed by dimension and sorted lexicographically inside each
/// bucket; `faces_of_dim(-1)` is `[[]]`. Every vertex index is a 0-face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    faces: Vec<Vec<Simplex>>,
}

impl SimplicialComplex {
    /// The complex whose only face is the empty face.
    pub fn empty() -> Self {
        SimplicialComplex {
            labels: Vec::new(),
            faces: vec![vec![Vec::new()]],
        }
    }

    /// Closes `facets` under subsets. Every label becomes a vertex, even if no
    /// facet mentions it.
    pub fn new(labels: Vec<String>, facets: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        let distinct: HashSet<&String> = labels.iter().collect();
        if distinct.len() != n {
            return Err(Error::Malformed("duplicate vertex label".into()));
        }
        let mut levels: Vec<BTreeSet<Simplex>> = vec![BTreeSet::from([Vec::new()])];
        let add = |s: Simplex, levels: &mut Vec<BTreeSet<Simplex>>| {
            let d = s.len();
            while levels.len() <= d {
                levels.push(BTreeSet::new());
            }
            levels[d].insert(s);
        };
        for v in 0..n {
            add(vec![v], &mut levels);
        }
        for mut facet in facets {
            facet.sort_unstable();
            if facet.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Malformed(format!("repeated vertex in facet {facet:?}")));
            }
            if let Some(&v) = facet.iter().find(|&&v| v >= n) {
                return Err(Error::Malformed(format!("vertex {v} out of range")));
            }
            if facet.len() > 24 {
                return Err(Error::OutOfRange(format!(
                    "facet with {} vertices is too large to close",
                    facet.len()
                )));
            }
            if levels.get(facet.len()).is_some_and(|l| l.contains(&facet)) {
                continue;
            }
            for mask in 1u32..(1 << facet.len()) {
                let sub: Simplex = facet
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                add(sub, &mut levels);
            }
        }
        Ok(SimplicialComplex {
            labels,
            faces: levels.into_iter().map(|l| l.into_iter().collect()).collect(),
        })
    }

    /// Vertices labelled `"0"`, …, `"n-1"`.
    pub fn from_facets(n: usize, facets: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()).collect(), facets)
    }

    /// Facets given by vertex labels. Labels are ordered numerically when they
    /// all parse as integers and lexicographically otherwise.
    pub fn from_labelled<S: AsRef<str>>(facets: &[Vec<S>]) -> Result<Self> {
        let mut names: Vec<String> = facets
            .iter()
            .flatten()
            .map(|s| s.as_ref().to_string())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        names.sort_by(|a, b| natural_cmp(a, b));
        let index: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let ids: Vec<Vec<usize>> = facets
            .iter()
            .map(|f| f.iter().map(|s| index[s.as_ref()]).collect())
            .collect();
        Self::new(names.clone(), ids)
    }

    /// Builds from a family already closed under subsets and sorted per level.
    pub(crate) fn from_closed(labels: Vec<String>, faces: Vec<Vec<Simplex>>) -> Self {
        debug_assert!(faces.first().is_some_and(|l| l.len() == 1 && l[0].is_empty()));
        debug_assert!(faces.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        let mut faces = faces;
        while faces.len() > 1 && faces.last().is_some_and(|l| l.is_empty()) {
            faces.pop();
        }
        SimplicialComplex { labels, faces }
    }

    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Translates a list of labels into a sorted simplex.
    pub fn simplex_by_labels<S: AsRef<str>>(&self, labels: &[S]) -> Option<Simplex> {
        let mut s: Simplex = labels
            .iter()
            .map(|l| self.vertex_by_label(l.as_ref()))
            .collect::<Option<_>>()?;
        s.sort_unstable();
        Some(s)
    }

    pub fn dim(&self) -> i32 {
        self.faces.len() as i32 - 2
    }

    pub fn faces_of_dim(&self, k: i32) -> &[Simplex] {
        if k < -1 {
            return &[];
        }
        self.faces
            .get((k + 1) as usize)
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }

    /// All faces including the empty face, by dimension then lexicographically.
    pub fn iter_faces(&self) -> impl Iterator<Item = &Simplex> {
        self.faces.iter().flatten()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    pub fn index_of(&self, s: &[usize]) -> Option<usize> {
        self.faces
            .get(s.len())
            .and_then(|level| level.binary_search_by(|f| f.as_slice().cmp(s)).ok())
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        self.index_of(s).is_some()
    }

    /// Id of `s` in [`Self::face_poset`].
    pub fn face_id(&self, s: &[usize]) -> Option<FaceId> {
        let offset: usize = self.faces[..s.len().min(self.faces.len())]
            .iter()
            .map(Vec::len)
            .sum();
        self.index_of(s).map(|i| FaceId(offset + i))
    }

    /// Inverse of [`Self::face_id`].
    pub fn face_at(&self, id: FaceId) -> &Simplex {
        let mut i = id.0;
        for level in &self.faces {
            if i < level.len() {
                return &level[i];
            }
            i -= level.len();
        }
        panic!("face id {} out of range", id.0)
    }

    pub fn facets(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        for (d, level) in self.faces.iter().enumerate().skip(1) {
            let above = self.faces.get(d + 1);
            for s in level {
                let covered = above.is_some_and(|up| {
                    (0..self.n_vertices())
                        .filter(|v| !s.contains(v))
                        .any(|v| up.binary_search(&insert_sorted(s, v)).is_ok())
                });
                if !covered {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().skip(1).map(Vec::len).collect()
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets().iter().all(|f| f.len() as i32 == d + 1)
    }

    pub fn face_label(&self, s: &[usize]) -> String {
        if s.is_empty() {
            return "{}".to_string();
        }
        let short = s.iter().all(|&v| self.labels[v].chars().count() == 1);
        let parts: Vec<&str> = s.iter().map(|&v| self.labels[v].as_str()).collect();
        if short {
            parts.concat()
        } else {
            parts.join(",")
        }
    }

    /// Faces of dimension at most `k`. Vertex labels are kept for `k ≥ 0`.
    pub fn skeleton(&self, k: i32) -> Self {
        if k < 0 {
            return Self::empty();
        }
        let faces = self.faces.iter().take((k + 2) as usize).cloned().collect();
        SimplicialComplex {
            labels: self.labels.clone(),
            faces,
        }
    }

    /// Restriction to a subfamily that is already closed under subsets;
    /// unused vertices are dropped and the remaining ones renumbered.
    fn compact(&self, family: impl IntoIterator<Item = Simplex>) -> Self {
        let family: Vec<Simplex> = family.into_iter().collect();
        let used: BTreeSet<usize> = family.iter().flatten().copied().collect();
        let remap: BTreeMap<usize, usize> = used.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let labels = used.iter().map(|&v| self.labels[v].clone()).collect();
        let mut levels: Vec<Vec<Simplex>> = vec![vec![Vec::new()]];
        for s in family {
            if s.is_empty() {
                continue;
            }
            let t: Simplex = s.iter().map(|v| remap[v]).collect();
            while levels.len() <= t.len() {
                levels.push(Vec::new());
            }
            levels[t.len()].push(t);
        }
        for level in &mut levels {
            level.sort();
            level.dedup();
        }
        Self::from_closed(labels, levels)
    }

    /// Simplicial link `{τ : σ ∪ τ ∈ Δ, σ ∩ τ = ∅}`, on the vertices it uses.
    pub fn link(&self, sigma: &[usize]) -> Result<Self> {
        if !self.contains(sigma) {
            return Err(Error::NotSubcomplex(format!(
                "{} is not a face",
                self.face_label(sigma)
            )));
        }
        let family = self
            .iter_faces()
            .filter(|t| is_subset(sigma, t))
            .map(|t| t.iter().copied().filter(|v| !sigma.contains(v)).collect());
        Ok(self.compact(family))
    }

    /// Faces whose vertices all lie in `w`.
    pub fn induced(&self, w: &[usize]) -> Self {
        let keep: BTreeSet<usize> = w.iter().copied().collect();
        let family = self
            .iter_faces()
            .filter(|s| s.iter().all(|v| keep.contains(v)))
            .cloned();
        self.compact(family)
    }

    /// Combinatorial deletion `Δ − Λ` for a subcomplex given by vertex sets.
    pub fn deletion(&self, sub: &SimplicialComplex) -> Result<Self> {
        let mut banned = BTreeSet::new();
        for s in sub.iter_faces() {
            let mapped = self
                .simplex_by_labels(&s.iter().map(|&v| sub.label(v)).collect::<Vec<_>>())
                .filter(|t| self.contains(t))
                .ok_or_else(|| Error::NotSubcomplex(sub.face_label(s)))?;
            if let [v] = mapped[..] {
                banned.insert(v);
            }
        }
        let family = self
            .iter_faces()
            .filter(|s| s.iter().all(|v| !banned.contains(v)))
            .cloned();
        Ok(self.compact(family))
    }

    /// Simplicial cone with a new apex vertex.
    pub fn cone(&self, apex: &str) -> Result<Self> {
        let mut labels = self.labels.clone();
        labels.push(apex.to_string());
        let a = labels.len() - 1;
        let facets: Vec<Simplex> = self
            .facets()
            .into_iter()
            .map(|mut f| {
                f.push(a);
                f
            })
            .chain(std::iter::once(vec![a]))
            .collect();
        Self::new(labels, facets)
    }

    pub fn face_poset(&self) -> FacePoset {
        let mut dims = Vec::with_capacity(self.num_faces());
        let mut labels = Vec::with_capacity(self.num_faces());
        let mut offsets = Vec::with_capacity(self.faces.len());
        let mut covers = Vec::new();
        let mut offset = 0;
        for (d, level) in self.faces.iter().enumerate() {
            offsets.push(offset);
            for (i, s) in level.iter().enumerate() {
                dims.push(d as i32 - 1);
                labels.push(self.face_label(s));
                if d > 0 {
                    let below = &self.faces[d - 1];
                    for skip in 0..s.len() {
                        let t: Simplex = s
                            .iter()
                            .enumerate()
                            .filter(|&(j, _)| j != skip)
                            .map(|(_, &v)| v)
                            .collect();
                        let j = below.binary_search(&t).expect("closed under subsets");
                        covers.push((offsets[d - 1] + j, offset + i));
                    }
                }
            }
            offset += level.len();
        }
        let (poset, map) = FacePoset::from_parts(dims, labels, &covers).expect("simplicial poset");
        debug_assert!(map.iter().enumerate().all(|(i, f)| f.0 == i));
        poset
    }

    /// Closure under subsets, checked face by face.
    pub fn validate(&self) -> ValidationReport {
        let mut issues = Vec::new();
        for s in self.iter_faces().filter(|s| !s.is_empty()) {
            for skip in 0..s.len() {
                let mut t = s.clone();
                t.remove(skip);
                if !self.contains(&t) {
                    issues.push(Violation::NotClosed {
                        face: self.face_label(s),
                    });
                    break;
                }
            }
        }
        ValidationReport { issues }
    }

    /// A minimal non-face with more than two vertices, if any. Such a set is
    /// a clique of the 1-skeleton that spans no face.
    pub fn non_flag_witness(&self) -> Option<Simplex> {
        for level in self.faces.iter().skip(2) {
            for s in level {
                for v in 0..self.n_vertices() {
                    if s.contains(&v) {
                        continue;
                    }
                    let t = insert_sorted(s, v);
                    if self.contains(&t) {
                        continue;
                    }
                    let minimal = (0..t.len()).all(|skip| {
                        let mut u = t.clone();
                        u.remove(skip);
                        self.contains(&u)
                    });
                    if minimal {
                        return Some(t);
                    }
                }
            }
        }
        None
    }

    pub fn is_flag(&self) -> bool {
        self.non_flag_witness().is_none()
    }

    /// True when every `(k+1)`-subset of the vertices is a face, i.e. the
    /// complex contains the full `k`-skeleton of the simplex on its vertices.
    pub fn has_complete_skeleton(&self, k: i32) -> bool {
        let n = self.n_vertices() as u64;
        let want = binomial(n, (k + 1).max(0) as u64);
        self.faces_of_dim(k).len() as u64 == want
    }

    /// Brute-force isomorphism test with degree-based pruning.
    pub fn is_isomorphic(&self, other: &SimplicialComplex) -> bool {
        if self.f_vector() != other.f_vector() {
            return false;
        }
        let sig_a = self.vertex_signatures();
        let sig_b = other.vertex_signatures();
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return false;
        }
        let facets_b: BTreeSet<Simplex> = other.facets().into_iter().collect();
        let facets_a = self.facets();
        let n = self.n_vertices();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        #[allow(clippy::too_many_arguments)]
        fn search(
            v: usize,
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
            sig_a: &[Vec<usize>],
            sig_b: &[Vec<usize>],
            facets_a: &[Simplex],
            facets_b: &BTreeSet<Simplex>,
            a: &SimplicialComplex,
            b: &SimplicialComplex,
        ) -> bool {
            let n = map.len();
            if v == n {
                return facets_a.iter().all(|f| {
                    let mut g: Simplex = f.iter().map(|&x| map[x]).collect();
                    g.sort_unstable();
                    facets_b.contains(&g)
                });
            }
            for w in 0..n {
                if used[w] || sig_a[v] != sig_b[w] {
                    continue;
                }
                // edges among already mapped vertices must be preserved
                let consistent = (0..v).all(|u| {
                    let (x, y) = (map[u].min(w), map[u].max(w));
                    a.contains(&[u, v]) == b.contains(&[x, y])
                });
                if !consistent {
                    continue;
                }
                map[v] = w;
                used[w] = true;
                if search(v + 1, map, used, sig_a, sig_b, facets_a, facets_b, a, b) {
                    return true;
                }
                used[w] = false;
                map[v] = usize::MAX;
            }
            false
        }
        search(
            0, &mut map, &mut used, &sig_a, &sig_b, &facets_a, &facets_b, self, other,
        )
    }

    /// Per vertex, the number of faces of each dimension containing it.
    fn vertex_signatures(&self) -> Vec<Vec<usize>> {
        let mut sig = vec![vec![0; self.faces.len()]; self.n_vertices()];
        for (d, level) in self.faces.iter().enumerate() {
            for s in level {
                for &v in s {
                    sig[v][d] += 1;
                }
            }
        }
        sig
    }
}

pub(crate) fn insert_sorted(s: &[usize], v: usize) -> Simplex {
    let pos = s.partition_point(|&x| x < v);
    let mut t = Vec::with_capacity(s.len() + 1);
    t.extend_from_slice(&s[..pos]);
    t.push(v);
    t.extend_from_slice(&s[pos..]);
    t
}

pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn natural_cmp(a: &str, b: &str) -> Ordering {
    match (a.parse::<i64>(), b.parse::<i64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        _ => a.cmp(b),
    }
}
