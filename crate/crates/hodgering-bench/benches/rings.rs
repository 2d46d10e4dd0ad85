use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use hodgering::classify::{classify_hodge, signature_functional, FunctionalDomain};
use hodgering::hodge::{decompose_abc, ideal_submodule, IdealGenerator};
use hodgering::intlinalg::smith_normal_form;
use hodgering::poincare::decompose_wxyz;
use hodgering_bench::{random_hodge, random_matrix, random_poincare, SplitMix};
use num_bigint::BigInt;

fn bench_smith_normal_form(c: &mut Criterion) {
    let mut rng = SplitMix(7);
    c.bench_function("snf_12x12", |b| {
        b.iter_batched(
            || random_matrix(&mut rng, 12, 12, 10),
            |m| black_box(smith_normal_form(&m)),
            BatchSize::SmallInput,
        )
    });
}

fn bench_decompositions(c: &mut Criterion) {
    let mut rng = SplitMix(11);
    // Warm the per-degree solver caches so the loop measures solves only.
    let _ = decompose_abc(&random_hodge(&mut rng, 8));
    c.bench_function("decompose_abc_deg8", |b| {
        b.iter_batched(
            || random_hodge(&mut rng, 8),
            |h| black_box(decompose_abc(&h).unwrap()),
            BatchSize::SmallInput,
        )
    });
    let _ = decompose_wxyz(&random_poincare(&mut rng, 10));
    c.bench_function("decompose_wxyz_deg10", |b| {
        b.iter_batched(
            || random_poincare(&mut rng, 10),
            |p| black_box(decompose_wxyz(&p).unwrap()),
            BatchSize::SmallInput,
        )
    });
}

fn bench_ideals_and_classifier(c: &mut Criterion) {
    c.bench_function("ideal_piece_deg6", |b| {
        b.iter(|| black_box(ideal_submodule(IdealGenerator::G, black_box(6))))
    });
    let f = signature_functional(4, FunctionalDomain::Mod(BigInt::from(4)));
    let _ = classify_hodge(&f);
    c.bench_function("classify_sigma_mod4_deg4", |b| {
        b.iter(|| black_box(classify_hodge(&f).unwrap()))
    });
}

criterion_group!(
    benches,
    bench_smith_normal_form,
    bench_decompositions,
    bench_ideals_and_classifier
);
criterion_main!(benches);
