use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use vanideal_core::{build_basis, rec_comp, Modulus};

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("basis");
    for (m, n) in [(72u64, 2usize), (256, 2), (720, 2), (64, 3), (30, 4)] {
        let modulus = Modulus::from_u64(m).unwrap();
        let id = format!("m{m}-n{n}");
        group.bench_with_input(BenchmarkId::new("direct", &id), &modulus, |b, md| {
            b.iter(|| build_basis(black_box(md), n).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("recursive", &id), &modulus, |b, md| {
            b.iter(|| rec_comp(black_box(md), n).unwrap())
        });
    }
    group.finish();
}

fn smarandache(c: &mut Criterion) {
    let m = Modulus::new(num_bigint::BigUint::from(1u32) << 64u32).unwrap();
    c.bench_function("basis/2^64-n1", |b| b.iter(|| build_basis(black_box(&m), 1).unwrap()));
}

criterion_group!(benches, construction, smarandache);
criterion_main!(benches);
