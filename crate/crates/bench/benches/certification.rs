use criterion::{criterion_group, criterion_main, Criterion};
use eqkit::hopf::equitable_hopf_formula_check;
use eqkit::verify_presentation_iso;
use eqkit_bench::matrices;

fn verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for (name, sc) in matrices() {
        group.bench_function(name, |b| b.iter(|| assert!(verify_presentation_iso(&sc).all_pass())));
    }
    group.finish();
}

fn hopf_formulas(c: &mut Criterion) {
    let mut group = c.benchmark_group("hopf_formulas");
    group.sample_size(10);
    for (name, sc) in matrices() {
        group.bench_function(name, |b| b.iter(|| assert!(equitable_hopf_formula_check(&sc).all_pass())));
    }
    group.finish();
}

criterion_group!(benches, verify, hopf_formulas);
criterion_main!(benches);
