use std::collections::{BTreeMap, BTreeSet, BinaryHeap, VecDeque};

use serde::Serialize;

use super::hyperplanes::{cube_classes, edge_classes, hyperplanes};
use crate::complex::{chi_string, cube_facets, is_subcube, Cube, CubicalComplex, FaceId, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{homology, Coefficients, Group};
use crate::subdivision::barycentric_subdivision;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Cat0Verdict {
    Verified,
    Refuted,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Cat0Evidence {
    Disconnected,
    NonFlagLink {
        vertex: String,
        clique: Vec<String>,
    },
    Homology {
        degree: i32,
        group: Group,
    },
    /// Elementary collapses `(free face, coface)` of `bary(◻)` by face id of
    /// its face poset, ending at a single vertex.
    Collapse {
        flag_links: usize,
        steps: Vec<(usize, usize)>,
    },
    /// The greedy collapse got stuck with this many faces left.
    Stuck {
        flag_links: usize,
        remaining: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cat0Certificate {
    pub verdict: Cat0Verdict,
    pub evidence: Cat0Evidence,
}

impl Cat0Certificate {
    pub fn is_verified(&self) -> bool {
        self.verdict == Cat0Verdict::Verified
    }
}

/// Three-valued CAT(0) test.
///
/// Connectivity, flag vertex links and vanishing `H̃_*(·; ℤ)` are exact
/// refuters (a CAT(0) complex is contractible, Lemma 6.3). Simple
/// connectivity is only certified by collapsing `bary(◻)` to a point.
pub fn cat0_certify(c: &CubicalComplex) -> Cat0Certificate {
    let refuted = |evidence| Cat0Certificate {
        verdict: Cat0Verdict::Refuted,
        evidence,
    };
    if !c.is_connected() {
        return refuted(Cat0Evidence::Disconnected);
    }
    for v in c.vertices() {
        let link = c.vertex_link(v);
        if let Some(w) = link.non_flag_witness() {
            return refuted(Cat0Evidence::NonFlagLink {
                vertex: c.cube_label(v),
                clique: w.iter().map(|&i| link.label(i).to_string()).collect(),
            });
        }
    }
    let flag_links = c.vertices().len();
    let bary = barycentric_subdivision(&c.face_poset()).complex;
    let h = homology(&bary, Coefficients::Integers);
    if let Some(&degree) = h.nonzero_degrees().first() {
        return refuted(Cat0Evidence::Homology {
            degree,
            group: h.group(degree),
        });
    }
    match collapse_to_point(&bary) {
        Ok(steps) => Cat0Certificate {
            verdict: Cat0Verdict::Verified,
            evidence: Cat0Evidence::Collapse {
                flag_links,
                steps: steps.into_iter().map(|(a, b)| (a.0, b.0)).collect(),
            },
        },
        Err(remaining) => Cat0Certificate {
            verdict: Cat0Verdict::Unknown,
            evidence: Cat0Evidence::Stuck {
                flag_links,
                remaining,
            },
        },
    }
}

/// Greedy elementary collapses, highest dimension first. Returns the
/// collapse pairs, or the number of faces left when no free face remains.
pub fn collapse_to_point(k: &SimplicialComplex) -> Result<Vec<(FaceId, FaceId)>, usize> {
    let x = k.face_poset();
    let mut alive: Vec<bool> = x.faces().map(|f| f.0 != 0).collect();
    let mut cofaces: Vec<usize> = x.faces().map(|f| x.up(f).len()).collect();
    let mut heap: BinaryHeap<(i32, FaceId)> = x
        .nonempty_faces()
        .filter(|f| cofaces[f.0] == 1)
        .map(|f| (x.dim_of(f), f))
        .collect();
    let mut steps = Vec::new();
    while let Some((_, f)) = heap.pop() {
        if !alive[f.0] || cofaces[f.0] != 1 {
            continue;
        }
        let g = *x.up(f).iter().find(|g| alive[g.0]).expect("one live coface");
        alive[f.0] = false;
        alive[g.0] = false;
        steps.push((f, g));
        for &h in x.down(g).iter().chain(x.down(f)) {
            if h.0 == 0 || h == f {
                continue;
            }
            cofaces[h.0] -= 1;
            if alive[h.0] && cofaces[h.0] == 1 {
                heap.push((x.dim_of(h), h));
            }
        }
    }
    let remaining = alive.iter().filter(|&&a| a).count();
    if remaining == 1 {
        Ok(steps)
    } else {
        Err(remaining)
    }
}

/// Vertex images of the embedding into `[0,1]^m`, with edge consistency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArdilaEmbedding {
    pub m: usize,
    pub root: Cube,
    /// Each vertex with the 0/1 string of hyperplanes separating it from the root.
    pub vertices: Vec<(Cube, String)>,
    /// Each cube with its χ-vector in `{0,1,*}^m`.
    pub cubes: Vec<(Cube, String)>,
    /// Every edge changes exactly its own hyperplane's coordinate, and the
    /// vertex map is injective.
    pub consistent: bool,
    /// Lemma 6.7: hyperplane `i` of the image is the slice by coordinate `i`.
    pub hyperplanes_match: bool,
}

/// Embeds a certified CAT(0) complex into the cube on its hyperplanes by
/// crossing parity from `root`.
pub fn ardila_embedding(c: &CubicalComplex, root: &[(i64, i64)]) -> Result<ArdilaEmbedding> {
    if !cat0_certify(c).is_verified() {
        return Err(Error::NotCertified);
    }
    let vi = c
        .vertices()
        .binary_search_by(|v| v.as_slice().cmp(root))
        .map_err(|_| Error::OutOfRange(format!("root {} is not a vertex", c.cube_label(root))))?;
    let (classes, m) = edge_classes(c);
    let verts = c.vertices();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); verts.len()];
    for (e, &h) in c.edges().iter().zip(&classes) {
        let ends: Vec<usize> = cube_facets(e)
            .iter()
            .map(|f| verts.binary_search(f).expect("closed"))
            .collect();
        adj[ends[0]].push((ends[1], h));
        adj[ends[1]].push((ends[0], h));
    }
    let mut image: Vec<Option<Vec<bool>>> = vec![None; verts.len()];
    image[vi] = Some(vec![false; m]);
    let mut queue = VecDeque::from([vi]);
    let mut consistent = true;
    while let Some(u) = queue.pop_front() {
        let bits = image[u].clone().expect("visited");
        for &(w, h) in &adj[u] {
            let mut next = bits.clone();
            next[h] = !next[h];
            match &image[w] {
                None => {
                    image[w] = Some(next);
                    queue.push_back(w);
                }
                Some(old) => consistent &= *old == next,
            }
        }
    }
    let image: Vec<Vec<bool>> = image.into_iter().map(|b| b.expect("connected")).collect();
    let distinct: BTreeSet<&Vec<bool>> = image.iter().collect();
    consistent &= distinct.len() == image.len();
    let bitstring = |b: &[bool]| b.iter().map(|&x| if x { '1' } else { '0' }).collect::<String>();
    let vertices = verts
        .iter()
        .zip(&image)
        .map(|(v, b)| (v.clone(), bitstring(b)))
        .collect();
    let mut cubes = Vec::new();
    for q in c.iter_cubes() {
        let corner: Cube = q.iter().map(|&(lo, _)| (lo, lo)).collect();
        let mut chi: Vec<char> = bitstring(&image[verts.binary_search(&corner).expect("corner")])
            .chars()
            .collect();
        for (_, h) in cube_classes(c, &classes, q) {
            chi[h] = '*';
        }
        cubes.push((q.clone(), chi.into_iter().collect::<String>()));
    }
    let hyperplanes_match = consistent && lemma_6_7(c, m, &cubes)?;
    Ok(ArdilaEmbedding {
        m,
        root: root.to_vec(),
        vertices,
        cubes,
        consistent,
        hyperplanes_match,
    })
}

/// Re-extracts hyperplanes from the image and compares carriers.
fn lemma_6_7(c: &CubicalComplex, m: usize, cubes: &[(Cube, String)]) -> Result<bool> {
    let chi_of: BTreeMap<&Cube, &String> = cubes.iter().map(|(q, s)| (q, s)).collect();
    let chis: Vec<&String> = cubes.iter().map(|(_, s)| s).collect();
    let img = CubicalComplex::from_chi(m, &chis)?;
    if img.num_cubes() != c.num_cubes() {
        return Ok(false);
    }
    let src = hyperplanes(c)?;
    let dst = hyperplanes(&img)?;
    if dst.len() != m {
        return Ok(false);
    }
    for h in &dst {
        let dirs: BTreeSet<usize> = h.midcubes.iter().map(|&(_, j)| j).collect();
        let [i] = dirs.into_iter().collect::<Vec<_>>()[..] else {
            return Ok(false);
        };
        let carried: BTreeSet<String> = h.midcubes.iter().map(|(q, _)| chi_string(q)).collect();
        let slice: BTreeSet<String> = img
            .iter_cubes()
            .map(|q| chi_string(q))
            .filter(|s| s.as_bytes()[i] == b'*')
            .collect();
        let source: BTreeSet<String> = src[i].midcubes.iter().map(|(q, _)| chi_of[q].clone()).collect();
        if carried != slice || slice != source {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Vertex of `c` whose star contains every cube, if one exists.
pub(crate) fn cone_point(c: &CubicalComplex) -> Vec<Cube> {
    let facets = c.facets();
    c.vertices()
        .iter()
        .filter(|v| facets.iter().all(|f| is_subcube(v, f)))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_is_verified() {
        let c = CubicalComplex::from_chi(3, &["***"]).unwrap();
        let cert = cat0_certify(&c);
        assert!(cert.is_verified(), "{cert:?}");
        let e = ardila_embedding(&c, &[(0, 0), (0, 0), (0, 0)]).unwrap();
        assert!(e.consistent && e.hyperplanes_match);
        let imgs: BTreeSet<&String> = e.vertices.iter().map(|(_, s)| s).collect();
        assert_eq!(imgs.len(), 8);
        assert!(e
            .vertices
            .iter()
            .any(|(v, s)| v.iter().all(|&(a, _)| a == 0) && s == "000"));
    }

    #[test]
    fn annulus_is_refuted_by_homology() {
        // eight unit squares around the centre square of a 3×3 grid
        let mut cubes = Vec::new();
        for x in 0..3 {
            for y in 0..3 {
                if (x, y) != (1, 1) {
                    cubes.push(vec![(x, x + 1), (y, y + 1)]);
                }
            }
        }
        let c = CubicalComplex::new(2, cubes).unwrap();
        let cert = cat0_certify(&c);
        assert_eq!(cert.verdict, Cat0Verdict::Refuted);
        assert!(matches!(cert.evidence, Cat0Evidence::Homology { degree: 1, .. }));
    }

    #[test]
    fn hollow_corner_is_refuted_by_its_link() {
        let c = CubicalComplex::from_chi(3, &["**0", "*0*", "0**"]).unwrap();
        let cert = cat0_certify(&c);
        assert_eq!(cert.verdict, Cat0Verdict::Refuted);
        match cert.evidence {
            Cat0Evidence::NonFlagLink { vertex, clique } => {
                assert_eq!(vertex, "000");
                assert_eq!(clique.len(), 3);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn disconnected_and_empty_are_refuted() {
        let two = CubicalComplex::from_chi(2, &["00", "11"]).unwrap();
        assert_eq!(cat0_certify(&two).evidence, Cat0Evidence::Disconnected);
        assert_eq!(
            cat0_certify(&CubicalComplex::empty(2)).verdict,
            Cat0Verdict::Refuted
        );
    }

    #[test]
    fn embedding_needs_a_vertex_root() {
        let c = CubicalComplex::from_chi(2, &["**"]).unwrap();
        assert!(ardila_embedding(&c, &[(0, 1), (0, 0)]).is_err());
        assert_eq!(cone_point(&c).len(), 4);
    }
}
