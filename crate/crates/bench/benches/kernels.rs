use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use spectough::spectra::{full_spectrum, quotient_matrix, spectral_radius, DEFAULT_TOL};
use spectough::verify::{random_graph, RandomModel};
use spectough::{build_family, petersen, variation_toughness, FamilySpec};

fn power_iteration(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectral_radius");
    for (r, n) in [(3, 38), (10, 270), (10, 402)] {
        let g = build_family(FamilySpec::BipIntNondivA { n, r }).unwrap().graph;
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| spectral_radius(black_box(g), DEFAULT_TOL).unwrap())
        });
    }
    group.finish();
}

fn toughness_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("variation_toughness");
    group.sample_size(10);
    group.bench_function("petersen", |b| b.iter(|| variation_toughness(black_box(&petersen())).unwrap()));
    for n in [14, 16] {
        let g = build_family(FamilySpec::ToughInt { n, tau: 2 }).unwrap().graph;
        group.bench_with_input(BenchmarkId::new("tough_int", n), &g, |b, g| {
            b.iter(|| variation_toughness(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn dense_spectrum(c: &mut Criterion) {
    let mut group = c.benchmark_group("jacobi");
    for n in [20, 60] {
        let g = random_graph(RandomModel::Gnp { n, p: 0.3 }, 1).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| full_spectrum(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn quotient_polynomial(c: &mut Criterion) {
    let f = build_family(FamilySpec::BipIntNondivB { n: 402, r: 10 }).unwrap();
    c.bench_function("quotient_char_poly", |b| {
        b.iter(|| quotient_matrix(black_box(&f.graph), &f.partition).unwrap().char_poly())
    });
}

criterion_group!(benches, power_iteration, toughness_enumeration, dense_spectrum, quotient_polynomial);
criterion_main!(benches);
