use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use durfee_core::bijections::{phi, phi_inverse, symmetry_map};
use durfee_core::qseries::{rk_lhs, rk_rhs_partialfraction, EvalPoint};
use durfee_core::marked::{is_strict_shifted_symbol, kmarked_rank_table};
use durfee_core::{enumerate_kmarked, Flavor};

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("kmarked_rank_table");
    for n in [10u64, 14, 18] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| kmarked_rank_table(black_box(n), 3, Flavor::Ordinary))
        });
    }
    g.finish();
}

fn bijections(c: &mut Criterion) {
    let corpus = enumerate_kmarked(10, 3, Flavor::Ordinary);
    let shifted: Vec<_> = corpus
        .iter()
        .filter(|s| is_strict_shifted_symbol(s) && s.ranks().iter().all(|&m| m >= 0))
        .cloned()
        .collect();
    c.bench_function("phi_round_trip_n10_k3", |b| {
        b.iter(|| {
            for s in &shifted {
                let m = s.ranks();
                let ds = phi(s).unwrap();
                black_box(phi_inverse(&ds, &m).unwrap());
            }
        })
    });
    c.bench_function("symmetry_map_n10_k3", |b| {
        b.iter(|| {
            for s in &corpus {
                black_box(symmetry_map(s, &[3, 1, 2]).unwrap());
            }
        })
    });
}

fn series(c: &mut Criterion) {
    let x = EvalPoint::from_integers(&[2, 3]).unwrap();
    c.bench_function("rk_lhs_q16", |b| {
        b.iter(|| rk_lhs(black_box(&x), 16, Flavor::Ordinary))
    });
    c.bench_function("rk_rhs_partialfraction_q16", |b| {
        b.iter(|| rk_rhs_partialfraction(black_box(&x), 16, Flavor::Ordinary).unwrap())
    });
}

criterion_group!(benches, enumeration, bijections, series);
criterion_main!(benches);
