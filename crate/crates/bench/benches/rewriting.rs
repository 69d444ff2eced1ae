use criterion::{criterion_group, criterion_main, Criterion};
use eqkit::{chevalley_presentation, equitable_presentation};
use eqkit_bench::{expr, g2};
use std::hint::black_box;

fn normal_forms(c: &mut Criterion) {
    let sc = g2();
    let chev = chevalley_presentation(&sc);
    let eq = equitable_presentation(&sc);
    let p = expr("(K1*E1 + F2*K2^-1)^3 * E2*F1", &sc);
    let x = expr("(Y1*Z2 + X1^-1*Y2)^3 * Z1", &sc);
    c.bench_function("normal_form/chevalley_g2", |b| b.iter(|| chev.normal_form(black_box(&p)).unwrap()));
    c.bench_function("normal_form/equitable_g2", |b| b.iter(|| eq.normal_form(black_box(&x)).unwrap()));
}

fn membership(c: &mut Criterion) {
    let sc = g2();
    let chev = chevalley_presentation(&sc);
    let r = chev.relators().iter().max_by_key(|r| r.relator.degree()).unwrap().relator.clone();
    let p = &(&expr("E1 + K2", &sc) * &r) * &expr("F1 - 1", &sc);
    c.bench_function("serre_member/exact_g2", |b| b.iter(|| chev.serre_ideal_member(black_box(&p)).unwrap()));
    c.bench_function("serre_member/sampled_g2", |b| b.iter(|| chev.serre_ideal_member_sampled(black_box(&p)).unwrap()));
}

criterion_group!(benches, normal_forms, membership);
criterion_main!(benches);
