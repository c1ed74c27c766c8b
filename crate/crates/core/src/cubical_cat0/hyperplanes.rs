use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::complex::{coskeleton_faces, cube_dim, directions, Cube, CubicalComplex};
use crate::error::{Error, Result};
use crate::subdivision::order_complex;

/// A hyperplane: the midcubes of one parallel class of edges, glued.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hyperplane {
    pub id: usize,
    /// Edges of the source complex that the hyperplane cuts.
    pub edges: Vec<Cube>,
    /// Carrier cubes (source coordinates) and the coordinate each one halves.
    pub midcubes: Vec<(Cube, usize)>,
    /// The midcubes as a cubical complex in the refined grid.
    #[serde(skip)]
    pub complex: CubicalComplex,
}

/// The grid hyperplanes are computed in: `c` itself when its span is even,
/// otherwise `c` doubled.
pub(crate) fn working_grid(c: &CubicalComplex) -> CubicalComplex {
    if c.span() % 2 == 0 {
        c.clone()
    } else {
        c.doubled()
    }
}

/// Parallel classes of edges, numbered in order of their first edge.
/// `classes[i]` is the class of `c.edges()[i]`.
pub(crate) fn edge_classes(c: &CubicalComplex) -> (Vec<usize>, usize) {
    let n = c.edges().len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for sq in c.cubes_of_dim(2) {
        let dirs = directions(sq);
        for other in [dirs[1], dirs[0]] {
            // the two edges of `sq` that are constant in `other`
            let ends: Vec<usize> = [sq[other].0, sq[other].1]
                .iter()
                .map(|&x| {
                    let mut e = sq.clone();
                    e[other] = (x, x);
                    c.index_of(&e).expect("closed under faces")
                })
                .collect();
            let (a, b) = (find(&mut parent, ends[0]), find(&mut parent, ends[1]));
            parent[a] = b;
        }
    }
    let mut ids = BTreeMap::new();
    let classes = (0..n)
        .map(|i| {
            let r = find(&mut parent, i);
            let next = ids.len();
            *ids.entry(r).or_insert(next)
        })
        .collect();
    (classes, ids.len())
}

/// Class of each direction of `cube`, as `(direction, class)`.
pub(crate) fn cube_classes(
    c: &CubicalComplex,
    classes: &[usize],
    cube: &[(i64, i64)],
) -> Vec<(usize, usize)> {
    directions(cube)
        .into_iter()
        .map(|j| {
            let e: Cube = cube
                .iter()
                .enumerate()
                .map(|(i, &(lo, hi))| if i == j { (lo, hi) } else { (lo, lo) })
                .collect();
            (j, classes[c.index_of(&e).expect("closed under faces")])
        })
        .collect()
}

/// Hyperplanes of `c`. A cube crossed twice by the same class is a
/// self-intersection and is reported rather than modelled.
pub fn hyperplanes(c: &CubicalComplex) -> Result<Vec<Hyperplane>> {
    let (classes, m) = edge_classes(c);
    let grid = working_grid(c);
    let factor = grid.span() / c.span();
    let half = grid.span() / 2;
    let mut edges = vec![Vec::new(); m];
    for (e, &h) in c.edges().iter().zip(&classes) {
        edges[h].push(e.clone());
    }
    let mut midcubes = vec![Vec::new(); m];
    let mut refined: Vec<Vec<Cube>> = vec![Vec::new(); m];
    for cube in c.iter_cubes().filter(|q| cube_dim(q) > 0) {
        let cc = cube_classes(c, &classes, cube);
        let mut seen = BTreeSet::new();
        for &(j, h) in &cc {
            if !seen.insert(h) {
                return Err(Error::SelfIntersectingHyperplane(h));
            }
            midcubes[h].push((cube.clone(), j));
            let mut g: Cube = cube.iter().map(|&(lo, hi)| (lo * factor, hi * factor)).collect();
            let mid = g[j].0 + half;
            g[j] = (mid, mid);
            refined[h].push(g);
        }
    }
    let mut out = Vec::with_capacity(m);
    for (id, ((edges, midcubes), cubes)) in edges.into_iter().zip(midcubes).zip(refined).enumerate() {
        let complex = CubicalComplex::with_span(c.ambient(), grid.span(), cubes)?;
        if !complex.validate().is_valid() {
            return Err(Error::SelfIntersectingHyperplane(id));
        }
        out.push(Hyperplane {
            id,
            edges,
            midcubes,
            complex,
        });
    }
    Ok(out)
}

fn cube_key(c: &CubicalComplex) -> Vec<Cube> {
    c.iter_cubes().cloned().collect()
}

/// `j`-th iterated hyperplanes (hyperplanes of hyperplanes, `j` levels
/// deep), merged when the same subspace arises along different routes.
pub fn iterated_hyperplanes(c: &CubicalComplex, j: usize) -> Result<Vec<CubicalComplex>> {
    if j == 0 {
        return Err(Error::OutOfRange("iteration depth must be at least 1".into()));
    }
    let mut level: Vec<CubicalComplex> = hyperplanes(c)?.into_iter().map(|h| h.complex).collect();
    for _ in 1..j {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for h in &level {
            for sub in hyperplanes(h)? {
                if seen.insert(cube_key(&sub.complex)) {
                    next.push(sub.complex);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// Prop 6.2 as an equality of cell sets in the half-span refinement of the
/// working grid.
///
/// Left side: for each pair `σ ⊆ τ` of faces of `skel^c_k`, i.e. each vertex
/// and edge of the order complex, the small cell spanned by the barycentres
/// between `σ` and `τ`. Right side: the `(k+1)`-th iterated hyperplanes
/// (the complex itself for `k = −1`), each cell halved in every direction.
pub fn verify_hyperplane_identity(c: &CubicalComplex, k: i32) -> Result<bool> {
    if k < -1 {
        return Err(Error::OutOfRange(format!("k = {k} must be at least -1")));
    }
    let grid = working_grid(c);
    let half = grid.span() / 2;
    let poset = grid.face_poset();
    let oc = order_complex(&coskeleton_faces(&poset, k))?;
    let mut left = BTreeSet::new();
    for s in oc
        .complex
        .faces_of_dim(0)
        .iter()
        .chain(oc.complex.faces_of_dim(1))
    {
        let chain = oc.chain(s);
        let lo = grid.cube_at(chain[0]).expect("non-empty");
        let hi = grid
            .cube_at(*chain.last().expect("non-empty chain"))
            .expect("non-empty");
        left.insert(carrier(lo, hi, half));
    }
    let pieces = if k == -1 {
        vec![grid.clone()]
    } else {
        iterated_hyperplanes(c, (k + 1) as usize)?
    };
    let mut right = BTreeSet::new();
    for p in &pieces {
        for q in p.iter_cubes() {
            refine(q, half, &mut right);
        }
    }
    Ok(left == right)
}

/// Small cell spanned by the barycentres of the faces between `lo ⊆ hi`.
fn carrier(lo: &[(i64, i64)], hi: &[(i64, i64)], half: i64) -> Cube {
    lo.iter()
        .zip(hi)
        .map(|(&(l0, l1), &(h0, h1))| {
            if h0 == h1 {
                (h0, h0)
            } else if l0 != l1 {
                (l0 + half, l0 + half)
            } else if l0 == h0 {
                (h0, h0 + half)
            } else {
                (h0 + half, h1)
            }
        })
        .collect()
}

/// All cells of the halved subdivision of `q`, faces included.
fn refine(q: &[(i64, i64)], half: i64, out: &mut BTreeSet<Cube>) {
    let options: Vec<Vec<(i64, i64)>> = q
        .iter()
        .map(|&(lo, hi)| {
            if lo == hi {
                vec![(lo, lo)]
            } else {
                let mid = lo + half;
                vec![(lo, lo), (mid, mid), (hi, hi), (lo, mid), (mid, hi)]
            }
        })
        .collect();
    let mut cur = vec![Vec::new()];
    for opts in options {
        let mut next = Vec::with_capacity(cur.len() * opts.len());
        for prefix in &cur {
            for &o in &opts {
                let mut v: Cube = prefix.clone();
                v.push(o);
                next.push(v);
            }
        }
        cur = next;
    }
    out.extend(cur);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube3() -> CubicalComplex {
        CubicalComplex::from_chi(3, &["***"]).unwrap()
    }

    #[test]
    fn cube_has_one_hyperplane_per_direction() {
        let hs = hyperplanes(&cube3()).unwrap();
        assert_eq!(hs.len(), 3);
        for h in &hs {
            assert_eq!(h.edges.len(), 4);
            assert_eq!(h.complex.f_vector(), vec![4, 4, 1]);
        }
    }

    #[test]
    fn iterated_levels_of_the_cube() {
        let c = cube3();
        assert_eq!(iterated_hyperplanes(&c, 2).unwrap().len(), 3);
        let top = iterated_hyperplanes(&c, 3).unwrap();
        assert_eq!(top.len(), 1);
        assert_eq!(top[0].f_vector(), vec![1]);
        assert!(iterated_hyperplanes(&c, 4).unwrap().is_empty());
    }

    #[test]
    fn identity_on_the_cube() {
        let c = cube3();
        for k in -1..=3 {
            assert!(verify_hyperplane_identity(&c, k).unwrap(), "k = {k}");
        }
    }

    #[test]
    fn strip_classes() {
        let strip = CubicalComplex::new(2, (0..3).map(|i| vec![(i, i + 1), (0, 1)])).unwrap();
        let hs = hyperplanes(&strip).unwrap();
        assert_eq!(hs.len(), 4);
        assert_eq!(hs.iter().map(|h| h.edges.len()).max(), Some(4));
    }

    #[test]
    fn classes_are_parallel() {
        // opposite edges of a square share a direction, so on a grid every
        // class is perpendicular to one coordinate and no cube can be cut
        // twice by the same hyperplane
        let l = CubicalComplex::from_chi(3, &["**0", "*0*", "0**"]).unwrap();
        let (classes, m) = edge_classes(&l);
        assert_eq!(m, 3);
        let mut dir_of = BTreeMap::new();
        for (e, &h) in l.edges().iter().zip(&classes) {
            assert_eq!(*dir_of.entry(h).or_insert(directions(e)), directions(e));
        }
    }
}
