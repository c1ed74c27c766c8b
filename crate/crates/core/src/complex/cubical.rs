use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::poset::{FaceId, FacePoset, ValidationReport, Violation};
use super::simplicial::SimplicialComplex;
use crate::error::{Error, Result};

/// One coordinate of a cube: a point `(a, a)` or an interval `(a, a + span)`.
pub type Interval = (i64, i64);
/// A cube as an interval vector of length `ambient`.
pub type Cube = Vec<Interval>;

/// Cubical complex on an integer grid, closed under faces.
///
/// Input complexes use unit intervals (`span = 1`). Hyperplane extraction
/// works in a refined grid where every interval has length `span = 2`, so
/// that midpoints stay integral.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CubicalComplex {
    ambient: usize,
    span: i64,
    cubes: Vec<Vec<Cube>>,
}

pub fn cube_dim(c: &[Interval]) -> usize {
    c.iter().filter(|(lo, hi)| lo != hi).count()
}

/// Coordinates in which `c` is an interval.
pub fn directions(c: &[Interval]) -> Vec<usize> {
    c.iter()
        .enumerate()
        .filter(|(_, (lo, hi))| lo != hi)
        .map(|(j, _)| j)
        .collect()
}

/// The `2r` codimension-one faces of an `r`-cube.
pub fn cube_facets(c: &[Interval]) -> Vec<Cube> {
    let mut out = Vec::new();
    for j in directions(c) {
        let (lo, hi) = c[j];
        for x in [lo, hi] {
            let mut f = c.to_vec();
            f[j] = (x, x);
            out.push(f);
        }
    }
    out
}

/// Coordinate-wise intersection, `None` when empty.
pub fn intersect(a: &[Interval], b: &[Interval]) -> Option<Cube> {
    a.iter()
        .zip(b)
        .map(|(&(l1, h1), &(l2, h2))| {
            let (lo, hi) = (l1.max(l2), h1.min(h2));
            (lo <= hi).then_some((lo, hi))
        })
        .collect()
}

pub fn is_subcube(a: &[Interval], b: &[Interval]) -> bool {
    a.iter().zip(b).all(|(&(l1, h1), &(l2, h2))| l2 <= l1 && h1 <= h2)
}

impl CubicalComplex {
    pub fn empty(ambient: usize) -> Self {
        CubicalComplex {
            ambient,
            span: 1,
            cubes: Vec::new(),
        }
    }

    /// Closes unit-interval cubes under faces.
    pub fn new(ambient: usize, cubes: impl IntoIterator<Item = Cube>) -> Result<Self> {
        Self::with_span(ambient, 1, cubes)
    }

    /// Like [`Self::new`] for a grid whose intervals have length `span`.
    pub fn with_span(ambient: usize, span: i64, cubes: impl IntoIterator<Item = Cube>) -> Result<Self> {
        let mut levels: Vec<BTreeSet<Cube>> = Vec::new();
        let mut queue: VecDeque<Cube> = VecDeque::new();
        for c in cubes {
            if c.len() != ambient {
                return Err(Error::Malformed(format!(
                    "cube has {} coordinates, ambient dimension is {ambient}",
                    c.len()
                )));
            }
            if let Some(&(lo, hi)) = c.iter().find(|(lo, hi)| hi != lo && hi - lo != span) {
                return Err(Error::Malformed(format!(
                    "interval [{lo}, {hi}] is neither a point nor of length {span}"
                )));
            }
            queue.push_back(c);
        }
        while let Some(c) = queue.pop_front() {
            let d = cube_dim(&c);
            while levels.len() <= d {
                levels.push(BTreeSet::new());
            }
            if levels[d].insert(c.clone()) {
                queue.extend(cube_facets(&c));
            }
        }
        Ok(CubicalComplex {
            ambient,
            span,
            cubes: levels.into_iter().map(|l| l.into_iter().collect()).collect(),
        })
    }

    /// Subcomplex of `[0,1]^n` given by `{0,1,*}` strings.
    pub fn from_chi<S: AsRef<str>>(n: usize, chis: &[S]) -> Result<Self> {
        let cubes = chis
            .iter()
            .map(|s| parse_chi(n, s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, cubes)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn span(&self) -> i64 {
        self.span
    }

    pub fn dim(&self) -> i32 {
        self.cubes.len() as i32 - 1
    }

    pub fn cubes_of_dim(&self, d: usize) -> &[Cube] {
        self.cubes.get(d).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn iter_cubes(&self) -> impl Iterator<Item = &Cube> {
        self.cubes.iter().flatten()
    }

    pub fn num_cubes(&self) -> usize {
        self.cubes.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cubes.is_empty()
    }

    pub fn vertices(&self) -> &[Cube] {
        self.cubes_of_dim(0)
    }

    pub fn edges(&self) -> &[Cube] {
        self.cubes_of_dim(1)
    }

    pub fn index_of(&self, c: &[Interval]) -> Option<usize> {
        self.cubes
            .get(cube_dim(c))
            .and_then(|l| l.binary_search_by(|x| x.as_slice().cmp(c)).ok())
    }

    pub fn contains(&self, c: &[Interval]) -> bool {
        self.index_of(c).is_some()
    }

    /// Id in [`Self::face_poset`]: the empty face is 0, cubes follow by
    /// dimension then lexicographically.
    pub fn face_id(&self, c: &[Interval]) -> Option<FaceId> {
        let d = cube_dim(c);
        let offset: usize = 1 + self.cubes[..d.min(self.cubes.len())]
            .iter()
            .map(Vec::len)
            .sum::<usize>();
        self.index_of(c).map(|i| FaceId(offset + i))
    }

    /// Inverse of [`Self::face_id`]; `None` for the empty face.
    pub fn cube_at(&self, id: FaceId) -> Option<&Cube> {
        let mut i = id.0.checked_sub(1)?;
        for level in &self.cubes {
            if i < level.len() {
                return Some(&level[i]);
            }
            i -= level.len();
        }
        None
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.cubes.iter().map(Vec::len).collect()
    }

    pub fn facets(&self) -> Vec<Cube> {
        let mut covered: BTreeSet<&Cube> = BTreeSet::new();
        let mut out = Vec::new();
        for level in self.cubes.iter().rev() {
            for c in level {
                if !covered.contains(c) {
                    out.push(c.clone());
                }
            }
            for c in level {
                for f in cube_facets(c) {
                    if let Some(i) = self.index_of(&f) {
                        covered.insert(&self.cubes[cube_dim(&f)][i]);
                    }
                }
            }
        }
        out.sort_by(|a, b| (cube_dim(a), a).cmp(&(cube_dim(b), b)));
        out
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim().max(0) as usize;
        self.facets().iter().all(|c| cube_dim(c) == d)
    }

    pub fn skeleton(&self, k: i32) -> Self {
        CubicalComplex {
            ambient: self.ambient,
            span: self.span,
            cubes: self.cubes.iter().take((k + 1).max(0) as usize).cloned().collect(),
        }
    }

    /// Same complex with every coordinate multiplied by two.
    pub fn doubled(&self) -> Self {
        let scale = |c: &Cube| c.iter().map(|&(lo, hi)| (2 * lo, 2 * hi)).collect();
        CubicalComplex {
            ambient: self.ambient,
            span: 2 * self.span,
            cubes: self.cubes.iter().map(|l| l.iter().map(scale).collect()).collect(),
        }
    }

    pub fn cube_label(&self, c: &[Interval]) -> String {
        let chi = self.span == 1
            && c.iter()
                .all(|&(lo, hi)| (0..=1).contains(&lo) && (0..=1).contains(&hi));
        if chi {
            return chi_string(c);
        }
        let parts: Vec<String> = c
            .iter()
            .map(|&(lo, hi)| {
                if lo == hi {
                    format!("{{{lo}}}")
                } else {
                    format!("[{lo},{hi}]")
                }
            })
            .collect();
        parts.join("x")
    }

    pub fn face_poset(&self) -> FacePoset {
        let n = self.num_cubes() + 1;
        let mut dims = Vec::with_capacity(n);
        let mut labels = Vec::with_capacity(n);
        let mut covers = Vec::new();
        dims.push(-1);
        labels.push("{}".to_string());
        for c in self.iter_cubes() {
            let id = dims.len();
            dims.push(cube_dim(c) as i32);
            labels.push(self.cube_label(c));
            if cube_dim(c) == 0 {
                covers.push((0, id));
            } else {
                for f in cube_facets(c) {
                    let fid = self.face_id(&f).expect("closed under faces");
                    covers.push((fid.0, id));
                }
            }
        }
        let (poset, map) = FacePoset::from_parts(dims, labels, &covers).expect("cubical poset");
        debug_assert!(map.iter().enumerate().all(|(i, f)| f.0 == i));
        poset
    }

    /// Link of a vertex as a simplicial complex on the edges at `v`.
    ///
    /// The link face of a cube `c ∋ v` is the set of edges of `c` at `v`.
    pub fn vertex_link(&self, v: &[Interval]) -> SimplicialComplex {
        let edges: Vec<&Cube> = self.edges().iter().filter(|e| is_subcube(v, e)).collect();
        let index: BTreeMap<&Cube, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let labels = edges.iter().map(|e| self.cube_label(e)).collect();
        let mut facets = Vec::new();
        for c in self.iter_cubes().filter(|c| cube_dim(c) > 0 && is_subcube(v, c)) {
            let face: Vec<usize> = directions(c)
                .into_iter()
                .map(|j| {
                    let mut e = v.to_vec();
                    e[j] = c[j];
                    index[&e]
                })
                .collect();
            facets.push(face);
        }
        SimplicialComplex::new(labels, facets).expect("vertex link")
    }

    /// Connected through edges; the empty complex counts as disconnected.
    pub fn is_connected(&self) -> bool {
        let verts = self.vertices();
        if verts.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for e in self.edges() {
            let ends: Vec<usize> = cube_facets(e)
                .iter()
                .map(|f| self.index_of(f).expect("closed"))
                .collect();
            let (a, b) = (find(&mut parent, ends[0]), find(&mut parent, ends[1]));
            parent[a] = b;
        }
        let root = find(&mut parent, 0);
        (0..verts.len()).all(|i| find(&mut parent, i) == root)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut issues = Vec::new();
        for c in self.iter_cubes() {
            if c.len() != self.ambient || c.iter().any(|(lo, hi)| lo != hi && hi - lo != self.span) {
                issues.push(Violation::BadInterval {
                    cube: self.cube_label(c),
                });
            }
            for f in cube_facets(c) {
                if !self.contains(&f) {
                    issues.push(Violation::NotClosed {
                        face: self.cube_label(&f),
                    });
                }
            }
        }
        let facets = self.facets();
        for (i, a) in facets.iter().enumerate() {
            for b in &facets[i + 1..] {
                if let Some(x) = intersect(a, b) {
                    let grid = x.iter().all(|(lo, hi)| lo == hi || hi - lo == self.span);
                    if !grid || !self.contains(&x) {
                        issues.push(Violation::Intersection {
                            a: self.cube_label(a),
                            b: self.cube_label(b),
                        });
                    }
                }
            }
        }
        ValidationReport { issues }
    }
}

pub fn chi_string(c: &[Interval]) -> String {
    c.iter()
        .map(|&(lo, hi)| match (lo, hi) {
            (0, 0) => '0',
            (1, 1) => '1',
            _ => '*',
        })
        .collect()
}

pub fn parse_chi(n: usize, s: &str) -> Result<Cube> {
    if s.chars().count() != n {
        return Err(Error::Parse(format!("chi vector {s:?} does not have length {n}")));
    }
    s.chars()
        .map(|ch| match ch {
            '0' => Ok((0, 0)),
            '1' => Ok((1, 1)),
            '*' => Ok((0, 1)),
            other => Err(Error::Parse(format!("bad chi symbol {other:?}"))),
        })
        .collect()
}
