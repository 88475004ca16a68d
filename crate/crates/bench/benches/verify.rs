use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use jointex_core::verify::leave_one_out_products;
use jointex_core::{family, verify_theorem, Mode, VerifyOptions};

fn leave_one_out(c: &mut Criterion) {
    let mut group = c.benchmark_group("leave_one_out");
    for n in [16, 64, 256] {
        let fam = family(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &fam, |b, fam| {
            b.iter(|| black_box(leave_one_out_products(fam).unwrap()))
        });
    }
    group.finish();
}

fn verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_theorem");
    group.sample_size(10);
    for n in [32, 128, 512] {
        group.bench_with_input(BenchmarkId::new("symbolic", n), &n, |b, &n| {
            b.iter(|| {
                black_box(verify_theorem(n, Mode::Symbolic, &VerifyOptions::default()).unwrap())
            })
        });
    }
    for n in [12, 16] {
        group.bench_with_input(BenchmarkId::new("exhaustive", n), &n, |b, &n| {
            b.iter(|| {
                black_box(verify_theorem(n, Mode::Exhaustive, &VerifyOptions::default()).unwrap())
            })
        });
    }
    group.finish();
}

criterion_group!(benches, leave_one_out, verify);
criterion_main!(benches);
