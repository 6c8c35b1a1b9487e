use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use liaison_core::domination::{dominates_at, enumerate_dominating, eta_of, theta_of};
use liaison_core::fixtures;
use liaison_core::AdmissibleCharacter;

fn bench_domination(c: &mut Criterion) {
    let gamma = fixtures::two_skew_lines().gamma0().clone();
    let sigma =
        AdmissibleCharacter::from_pairs([(0, -1), (1, -1), (2, -1), (3, 3), (4, -1), (8, 1)])
            .unwrap();

    c.bench_function("dominates_at", |b| {
        b.iter(|| dominates_at(black_box(&gamma), black_box(&sigma), 1))
    });
    c.bench_function("eta_of", |b| {
        b.iter(|| eta_of(black_box(&gamma), black_box(&sigma), 1))
    });
    c.bench_function("theta_of", |b| {
        b.iter(|| theta_of(black_box(&gamma), black_box(&sigma), 1))
    });
    c.bench_function("enumerate_dominating h=3 [0,9]", |b| {
        b.iter(|| enumerate_dominating(black_box(&gamma), 3, 0, 9))
    });
}

criterion_group!(benches, bench_domination);
criterion_main!(benches);
