use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use jstit::{classify, is_mixsucc};
use jstit_bench::frames;

fn bench_classify(c: &mut Criterion) {
    let mut g = c.benchmark_group("classify");
    for n in [4, 6, 8, 10] {
        let fs = frames(n, 16, 0.2);
        g.bench_with_input(BenchmarkId::new("full", n), &fs, |b, fs| {
            b.iter(|| {
                fs.iter()
                    .map(|f| classify(f).unwrap().theta_sizes.len())
                    .sum::<usize>()
            })
        });
        g.bench_with_input(BenchmarkId::new("mixsucc", n), &fs, |b, fs| {
            b.iter(|| fs.iter().filter(|f| is_mixsucc(f)).count())
        });
    }
    g.finish();
}

criterion_group!(benches, bench_classify);
criterion_main!(benches);
