use std::collections::BTreeSet;

use coskel_core::characterizations::{check_cohen_macaulay, check_leray, check_neighbourly};
use coskel_core::complex::{deletion, Deletion, DeletionMode};
use coskel_core::cubical_cat0::{
    cat0_certify, crossing_complex, cubical_cone, hyperplanes, verify_crossing_equivalence,
};
use coskel_core::exact_sequences::{cm_sequence_check, exactness_audit, les_table};
use coskel_core::generators::{self, generate_str};
use coskel_core::io::{read_complex, write_complex};
use coskel_core::{
    barycentric_subdivision, coskeleton_faces, homology, link_faces, open_set_homology, order_complex,
    poset_homology, skeleton_faces, star_and_link, Coefficients, Complex, Cube, CubicalComplex, FaceSet,
    Method, SimplicialComplex,
};
use proptest::prelude::*;

const Q: Coefficients = Coefficients::Rationals;
const Z: Coefficients = Coefficients::Integers;
const GF2: Coefficients = Coefficients::PrimeField(2);

fn spec() -> impl Strategy<Value = String> {
    (0..3u8, 2..=7usize, 0.15..0.85f64, any::<u32>()).prop_map(|(model, n, p, seed)| match model {
        0 => format!("erdos_simplicial({n},{p:.3},{seed})"),
        1 => format!("random_flag({n},{p:.3},{seed})"),
        _ => {
            let d = (n - 1).min(2);
            let max = coskel_core::complex::binomial(n as u64, d as u64 + 1) as u32;
            format!("random_pure({d},{n},{},{seed})", 1 + seed % max.min(6))
        }
    })
}

fn simplicial() -> impl Strategy<Value = SimplicialComplex> {
    spec().prop_map(|s| match generate_str(&s).unwrap() {
        Complex::Simplicial(k) => k,
        _ => unreachable!(),
    })
}

fn flag() -> impl Strategy<Value = SimplicialComplex> {
    (1..=6usize, 0.2..0.9f64, any::<u32>()).prop_map(|(n, p, s)| generators::random_flag(n, p, s as u64))
}

/// Random subcomplexes of a small cube grid, given by their top cells.
fn cubical() -> impl Strategy<Value = CubicalComplex> {
    (2..=3usize, prop::collection::vec(any::<bool>(), 8)).prop_filter_map("empty", |(n, mask)| {
        let cells: Vec<Cube> = (0..(1usize << n))
            .filter(|&i| mask[i])
            .map(|i| {
                (0..n)
                    .map(|j| ((i >> j & 1) as i64, (i >> j & 1) as i64 + 1))
                    .collect()
            })
            .collect();
        (!cells.is_empty()).then(|| CubicalComplex::new(n, cells).unwrap())
    })
}

/// Parallel classes by union-find on the edges, edges opposite in a square joined.
fn parallel_classes(c: &CubicalComplex) -> usize {
    let edges = c.edges();
    let mut parent: Vec<usize> = (0..edges.len()).collect();
    fn root(p: &[usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    for sq in c.cubes_of_dim(2) {
        let dirs: Vec<usize> = (0..sq.len()).filter(|&i| sq[i].0 < sq[i].1).collect();
        for &fix in &dirs {
            let ends: Vec<usize> = [sq[fix].0, sq[fix].1]
                .iter()
                .map(|&x| {
                    let mut e = sq.clone();
                    e[fix] = (x, x);
                    edges.iter().position(|f| *f == e).unwrap()
                })
                .collect();
            let (a, b) = (root(&parent, ends[0]), root(&parent, ends[1]));
            parent[a] = b;
        }
    }
    (0..edges.len()).filter(|&i| root(&parent, i) == i).count()
}

fn uct_rank(z: &coskel_core::HomologyProfile, i: i32, p: u64) -> usize {
    let div = |d: i32| z.torsion(d).iter().filter(|&&t| t % p == 0).count();
    z.rank(i) + div(i) + div(i - 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn skeleton_and_coskeleton_partition(k in simplicial(), j in -1..4i32) {
        let x = k.face_poset();
        let cos = coskeleton_faces(&x, j);
        let sk = skeleton_faces(&x, j);
        for f in x.faces() {
            prop_assert!(cos.contains(f) != sk.contains(f));
        }
        prop_assert!(cos.is_upward_closed());
        match deletion(&x, &sk, DeletionMode::Set).unwrap() {
            Deletion::Set(s) => prop_assert_eq!(s.faces(), cos.faces()),
            Deletion::Complex(_) => prop_assert!(false),
        }
    }

    #[test]
    fn stars_and_links_are_upward_closed(k in simplicial()) {
        let x = k.face_poset();
        for f in x.faces() {
            let (st, lk) = star_and_link(&x, f).unwrap();
            prop_assert!(st.is_upward_closed() && lk.is_upward_closed());
        }
    }

    #[test]
    fn coskeleton_homology_vanishes_above_d_minus_k_minus_1(k in simplicial()) {
        let x = k.face_poset();
        let d = x.dim();
        for j in -1..=d {
            let s = coskeleton_faces(&x, j);
            prop_assert!(order_complex(&s).unwrap().complex.dim() < d - j);
            let h = open_set_homology(&s, Z).unwrap();
            prop_assert!(h.nonzero_degrees().iter().all(|&i| i < d - j));
        }
    }

    #[test]
    fn induced_deletion_matches_set_deletion(k in simplicial(), pick in any::<u8>()) {
        let x = k.face_poset();
        let verts: Vec<_> = x.faces_of_dim(0).collect();
        let w: BTreeSet<_> = verts.iter().enumerate().filter(|(i, _)| pick >> (i % 8) & 1 == 1).map(|(_, v)| *v).collect();
        let lambda = FaceSet::new(&x, x.faces().filter(|&f| x.vertices_of(f).iter().all(|v| w.contains(v))));
        let comb = match deletion(&x, &lambda, DeletionMode::Combinatorial).unwrap() {
            Deletion::Complex(p) => poset_homology(&p, Z),
            Deletion::Set(_) => unreachable!(),
        };
        let set = match deletion(&x, &lambda, DeletionMode::Set).unwrap() {
            Deletion::Set(s) => open_set_homology(&s, Z).unwrap(),
            Deletion::Complex(_) => unreachable!(),
        };
        prop_assert!(comb.same_groups(&set), "{:?} vs {:?}", comb, set);
    }

    #[test]
    fn poset_links_match_simplicial_links(k in simplicial()) {
        let x = k.face_poset();
        for s in k.iter_faces() {
            let f = k.face_id(s).unwrap();
            let a = open_set_homology(&link_faces(&x, f).unwrap(), Z).unwrap();
            let b = homology(&k.link(s).unwrap(), Z);
            prop_assert!(a.same_groups(&b), "link of {:?}", s);
        }
    }

    #[test]
    fn universal_coefficients_and_subdivision(k in simplicial()) {
        let z = homology(&k, Z);
        let q = homology(&k, Q);
        let bary = barycentric_subdivision(&k.face_poset()).complex;
        prop_assert!(z.same_groups(&homology(&bary, Z)));
        for i in -1..=k.dim() + 1 {
            prop_assert_eq!(q.rank(i), z.rank(i));
            let t = z.torsion(i);
            prop_assert!(t.windows(2).all(|w| w[1] % w[0] == 0) && t.iter().all(|&x| x > 1));
            for p in [2u64, 3] {
                prop_assert_eq!(homology(&k, Coefficients::PrimeField(p)).rank(i), uct_rank(&z, i, p));
            }
        }
    }

    #[test]
    fn methods_agree(k in simplicial()) {
        let x = k.face_poset();
        let d = x.dim();
        let a = check_cohen_macaulay(&x, Q, Method::Definition);
        let b = check_cohen_macaulay(&x, Q, Method::Coskeleton);
        prop_assert_eq!(a.verdict, b.verdict);
        if a.verdict {
            for j in -1..=d {
                let h = open_set_homology(&coskeleton_faces(&x, j), Q).unwrap();
                prop_assert!(h.nonzero_degrees().iter().all(|&i| i == d - j - 1));
            }
            prop_assert!(cm_sequence_check(&x, Q).unwrap().holds);
        }
        for r in 0..=d.max(0) {
            let v: Vec<bool> = [Method::Definition, Method::Coskeleton, Method::Induced]
                .into_iter()
                .map(|m| check_leray(&x, r, Q, m).unwrap().verdict)
                .collect();
            prop_assert!(v.iter().all(|&b| b == v[0]), "r = {}: {:?}", r, v);
        }
    }

    #[test]
    fn les_audit_passes(k in simplicial()) {
        let x = k.face_poset();
        for coeff in [Q, GF2] {
            for j in 0..=x.dim() {
                let a = exactness_audit(&les_table(&x, j, coeff).unwrap());
                prop_assert!(a.passed, "{:?}", a);
            }
        }
    }

    #[test]
    fn hyperplanes_are_parallel_classes(c in cubical()) {
        prop_assert_eq!(hyperplanes(&c).unwrap().len(), parallel_classes(&c));
    }

    #[test]
    fn certified_complexes_and_their_crossing_complexes(c in cubical()) {
        if cat0_certify(&c).is_verified() {
            let cross = crossing_complex(&c).unwrap();
            prop_assert!(cross.complex.is_flag());
            prop_assert_eq!(cross.complex.dim(), c.dim() - 1);
            prop_assert_eq!(cross.complex.is_pure(), c.is_pure());
            for h in &cross.hyperplanes {
                prop_assert!(cat0_certify(&h.complex).is_verified());
            }
            for coeff in [Q, GF2] {
                let r = verify_crossing_equivalence(&c, coeff).unwrap();
                prop_assert!(r.holds, "{:?}", r);
            }
        }
    }

    #[test]
    fn crossing_complex_of_a_cone(delta in flag()) {
        let cone = cubical_cone(&delta).unwrap();
        prop_assert!(cat0_certify(&cone).is_verified());
        prop_assert!(crossing_complex(&cone).unwrap().complex.is_isomorphic(&delta));
    }

    #[test]
    fn generation_is_deterministic_and_round_trips(s in spec()) {
        let a = generate_str(&s).unwrap();
        let b = generate_str(&s).unwrap();
        prop_assert_eq!(write_complex(&a), write_complex(&b));
        prop_assert_eq!(read_complex(&write_complex(&a)).unwrap(), a.clone());
        let p = Complex::Poset(a.face_poset());
        prop_assert_eq!(read_complex(&write_complex(&p)).unwrap(), p);
    }
}

#[test]
fn catalog_round_trips() {
    for s in generators::catalog() {
        let c = generators::generate(&s).unwrap();
        assert!(c.validate().is_valid(), "{s}");
        assert_eq!(read_complex(&write_complex(&c)).unwrap(), c, "{s}");
    }
}

#[test]
fn cyclic_polytopes_are_half_neighbourly() {
    for d in 2..=6usize {
        for n in d + 1..=9 {
            let Complex::Simplicial(k) = generate_str(&format!("cyclic_polytope_boundary({d},{n})")).unwrap()
            else {
                unreachable!()
            };
            let t = (d / 2) as i32;
            assert!(
                check_neighbourly(&k, t, Method::Combinatorial).unwrap().verdict,
                "C({d},{n})"
            );
        }
    }
}

#[test]
fn stacked_pair_has_equal_coskeletons() {
    let a = generate_str("fig_stacked_pair(0)").unwrap().face_poset();
    let b = generate_str("fig_stacked_pair(1)").unwrap().face_poset();
    for k in -1..=2 {
        let ha = open_set_homology(&coskeleton_faces(&a, k), Z).unwrap();
        let hb = open_set_homology(&coskeleton_faces(&b, k), Z).unwrap();
        assert!(ha.same_groups(&hb), "k = {k}");
    }
}

#[test]
fn generated_posets_have_the_diamond_property() {
    for s in generators::catalog() {
        let x = generators::generate(&s).unwrap().face_poset();
        assert!(x.validate().is_valid(), "{s}");
    }
}
