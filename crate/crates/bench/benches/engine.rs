use ak_core::catalog::{instantiate_pair, PairFamily};
use ak_core::obstruction::{criterion_check, x_cells};
use ak_core::steenrod::{p1_generator_roots, p1_wu_chern, p1_wu_pontrjagin, RootAction, RootModel};
use ak_core::{GradedAlgebra, Prime};
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn p1(c: &mut Criterion) {
    let p = Prime::new(13).unwrap();
    c.bench_function("wu chern BSU(8) c2 p=13", |b| {
        b.iter(|| p1_wu_chern(black_box(8), 2, p).unwrap())
    });
    c.bench_function("wu pontrjagin BSO(15) p1 p=13", |b| {
        b.iter(|| p1_wu_pontrjagin(black_box(7), 1, p).unwrap())
    });
    let alg = GradedAlgebra::indexed("BSU(8)", "c", 2..=8, 2, p).unwrap();
    let act = RootAction::new(
        RootModel::Chern {
            n: 8,
            special: true,
        },
        &alg,
        "c",
    )
    .unwrap();
    c.bench_function("roots BSU(8) c2 p=13", |b| {
        b.iter(|| p1_generator_roots(&act, black_box("c2")).unwrap())
    });
}

fn obstruction(c: &mut Criterion) {
    let p = Prime::new(13).unwrap();
    let su = instantiate_pair(PairFamily::SuSo, 3, p).unwrap();
    c.bench_function("criterion SU(7)/SO(7) k=2 p=13", |b| {
        b.iter(|| criterion_check(&su, p, black_box(2)).unwrap())
    });
    let q = Prime::new(23).unwrap();
    let e6 = instantiate_pair(PairFamily::E6F4, 0, q).unwrap();
    c.bench_function("x_cells E6/F4 k=3 p=23", |b| {
        b.iter(|| x_cells(&e6, black_box(3), q).unwrap())
    });
}

criterion_group!(benches, p1, obstruction);
criterion_main!(benches);
