use beta_moments::exact::{rat, ri};
use beta_moments::hankel::check_pm;
use beta_moments::identities::{verify_finite, verify_infinite, InfiniteOptions};
use beta_moments::integrality::check_integrality;
use beta_moments::moments::{MomentSequence, MomentSpec};
use beta_moments::series::closed_form::ClosedFormId;
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn moments(c: &mut Criterion) {
    let spec = MomentSpec::new(ri(-1), rat(3, 2), rat(3, 2)).unwrap();
    let mut g = c.benchmark_group("moments");
    for n in [50usize, 200] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| MomentSequence::compute(black_box(&spec), n))
        });
    }
    g.finish();
}

fn hankel(c: &mut Criterion) {
    let spec = MomentSpec::new(ri(0), rat(1, 2), rat(3, 2)).unwrap();
    c.bench_function("hankel order 8", |b| b.iter(|| check_pm(black_box(&spec), 8)));
}

fn series(c: &mut Criterion) {
    let id = ClosedFormId::parse("cor-j").unwrap();
    c.bench_function("closed form cor-j order 30", |b| b.iter(|| id.series(black_box(30)).unwrap()));
}

fn identities(c: &mut Criterion) {
    c.bench_function("finite c0-ii-odd n<=50", |b| b.iter(|| verify_finite("c0-ii-odd", 0..=50).unwrap()));
    let opts = InfiniteOptions::default();
    c.bench_function("c0-iv n=1 asymptotic tail", |b| b.iter(|| verify_infinite("c0-iv", [1], &opts).unwrap()));
}

fn integrality(c: &mut Criterion) {
    c.bench_function("integrality 5/12 N=100", |b| b.iter(|| check_integrality(5, 12, black_box(100)).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = moments, hankel, series, identities, integrality
}
criterion_main!(benches);
