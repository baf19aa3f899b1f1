use criterion::{black_box, criterion_group, criterion_main, Criterion};

use tubular::arcs::{crossings, render, Sign};
use tubular::exchange::{explore_from, initial_cluster, ComplementSearch};
use tubular::quiver::{canonical_form, fixture, mutation_class};
use tubular::roots::{compatible, enumerate_schur, recognize};
use tubular::{ClassVector, Slope};

fn roots(c: &mut Criterion) {
    let all = enumerate_schur(10);
    c.bench_function("compatible, all pairs of height <= 10", |b| {
        b.iter(|| {
            let mut n = 0usize;
            for (i, &x) in all.iter().enumerate() {
                for &y in &all[i + 1..] {
                    n += compatible(x, y) as usize;
                }
            }
            black_box(n)
        })
    });
    c.bench_function("recognize 9^4 vectors", |b| {
        b.iter(|| {
            let mut hits = 0;
            for n in 0..9i64.pow(4) {
                let v = ClassVector([n % 9 - 4, n / 9 % 9 - 4, n / 81 % 9 - 4, n / 729 - 4, 1, 0]);
                hits += recognize(black_box(v)).is_some() as usize;
            }
            hits
        })
    });
}

fn arcs(c: &mut Criterion) {
    let p: Slope = "13/8".parse().unwrap();
    c.bench_function("render 13/8", |b| b.iter(|| render(black_box(p), Sign::Minus)));
    let d = render(p, Sign::Minus);
    let base = render(Slope::ZERO, Sign::Plus);
    c.bench_function("crossings 13/8- x 0+", |b| {
        b.iter(|| crossings(black_box(&d), &base).unwrap())
    });
}

fn quivers(c: &mut Criterion) {
    let e8 = fixture("delta_e8").unwrap();
    c.bench_function("canonical form delta_e8", |b| b.iter(|| canonical_form(black_box(&e8))));
    let e6 = fixture("delta_e6").unwrap();
    let mut g = c.benchmark_group("mutation class");
    g.sample_size(10);
    g.bench_function("delta_e6", |b| b.iter(|| mutation_class(black_box(&e6), 10_000)));
    g.finish();
}

fn exchange(c: &mut Criterion) {
    let mut g = c.benchmark_group("exchange");
    g.sample_size(10);
    g.bench_function("explore depth 3, height 64", |b| {
        b.iter(|| {
            let search = ComplementSearch::new(64).unwrap();
            explore_from(&initial_cluster(), 3, &search).unwrap().nodes.len()
        })
    });
    g.finish();
}

criterion_group!(benches, roots, arcs, quivers, exchange);
criterion_main!(benches);
