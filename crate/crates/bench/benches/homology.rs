use std::hint::black_box;

use coskel_core::cubical_cat0::{cat0_certify, hyperplanes};
use coskel_core::exact_sequences::les_table;
use coskel_core::generators::generate_str;
use coskel_core::{coskeleton_faces, homology, open_set_homology, Coefficients, Complex};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn simplicial(spec: &str) -> coskel_core::SimplicialComplex {
    match generate_str(spec).unwrap() {
        Complex::Simplicial(s) => s,
        _ => unreachable!(),
    }
}

fn smith_normal_form(c: &mut Criterion) {
    let mut g = c.benchmark_group("homology");
    for spec in [
        "cross_polytope_boundary(4)",
        "cyclic_polytope_boundary(4,9)",
        "boundary_simplex(6)",
    ] {
        let k = simplicial(spec);
        for coeff in [Coefficients::Integers, Coefficients::PrimeField(2)] {
            g.bench_with_input(BenchmarkId::new(spec, coeff), &k, |b, k| {
                b.iter(|| homology(black_box(k), coeff))
            });
        }
    }
    g.finish();
}

fn coskeletons(c: &mut Criterion) {
    let x = simplicial("cyclic_polytope_boundary(4,8)").face_poset();
    let mut g = c.benchmark_group("coskeleton");
    for k in 0..=2 {
        g.bench_with_input(BenchmarkId::new("C(4,8)", k), &k, |b, &k| {
            b.iter(|| open_set_homology(&coskeleton_faces(&x, k), Coefficients::Integers).unwrap())
        });
    }
    g.bench_function("les C(4,8) k=1", |b| {
        b.iter(|| les_table(&x, 1, Coefficients::Rationals).unwrap())
    });
    g.finish();
}

fn cubical(c: &mut Criterion) {
    let Complex::Cubical(grid) = generate_str("cube_grid(2,2,2)").unwrap() else {
        unreachable!()
    };
    let Complex::Cubical(cone) = generate_str("fig_cone_example").unwrap() else {
        unreachable!()
    };
    let mut g = c.benchmark_group("cubical");
    g.sample_size(10);
    g.bench_function("hyperplanes cube_grid(2,2,2)", |b| {
        b.iter(|| hyperplanes(black_box(&grid)).unwrap())
    });
    g.bench_function("cat0 fig_cone_example", |b| {
        b.iter(|| cat0_certify(black_box(&cone)))
    });
    g.finish();
}

criterion_group!(benches, smith_normal_form, coskeletons, cubical);
criterion_main!(benches);
