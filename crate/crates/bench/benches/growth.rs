use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use minmodlab::growth::{growth_quantities, log_max_modulus, log_min_modulus, max_epsilon_on};
use minmodlab::zeroset::{square_exponent_fixture, ZeroEntry, ZeroSet};
use minmodlab::LogReal;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn off_ray_set(n: usize) -> ZeroSet {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut lr = 0.0;
    let entries = (0..n)
        .map(|_| {
            lr += rng.gen_range(0.2..1.5);
            ZeroEntry::simple(lr).with_angle(rng.gen_range(0.0..std::f64::consts::TAU))
        })
        .collect();
    ZeroSet::new(entries, "").unwrap()
}

fn bench_growth(c: &mut Criterion) {
    let mut group = c.benchmark_group("growth");
    for &count in &[30u32, 120, 480] {
        let zs = square_exponent_fixture(count, std::f64::consts::PI);
        let r = LogReal::from_log(0.5 * (count as f64).powi(2)).unwrap();
        group.bench_with_input(BenchmarkId::new("quantities", count), &zs, |b, zs| {
            b.iter(|| growth_quantities(black_box(zs), r).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("min_modulus_common_ray", count), &zs, |b, zs| {
            b.iter(|| log_min_modulus(black_box(zs), r).unwrap())
        });
    }
    let sq = square_exponent_fixture(120, std::f64::consts::PI);
    group.bench_function("epsilon_scan_decade", |b| {
        b.iter(|| max_epsilon_on(black_box(&sq), 1e4, 1e4 + std::f64::consts::LN_10).unwrap())
    });
    let off = off_ray_set(24);
    let r = LogReal::from_log(10.0).unwrap();
    group.bench_function("circle_scan_24_zeros", |b| {
        b.iter(|| log_max_modulus(black_box(&off), r).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_growth);
criterion_main!(benches);
