//! Sequential vs parallel strategies on the minor scans and on a corpus
//! sweep.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use selfint::classification::{classify_sign_definite_with, is_totally_nonnegative_with};
use selfint::par::{self, Strategy};
use selfint::spectra::spectrum_report_with;
use selfint::{random_positive_tnn, Tolerance};

const STRATEGIES: [(&str, Strategy); 2] = [
    ("sequential", Strategy::Sequential),
    ("parallel", Strategy::Parallel),
];

fn tnn_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("total_nonnegativity");
    for n in [5, 7, 8] {
        let m = random_positive_tnn(n, 1);
        for (name, strategy) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, n), &m, |b, m| {
                b.iter(|| is_totally_nonnegative_with(black_box(m), strategy))
            });
        }
    }
    group.finish();
}

fn sign_definite(c: &mut Criterion) {
    let mut group = c.benchmark_group("class_n_plus");
    group.sample_size(20);
    for n in [4, 6] {
        let b = random_positive_tnn(n, 2).flip_rows();
        for (name, strategy) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, n), &b, |bench, m| {
                bench.iter(|| classify_sign_definite_with(black_box(m), None, strategy))
            });
        }
    }
    group.finish();
}

fn corpus_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectrum_corpus");
    group.sample_size(10);
    let tol = Tolerance::default();
    let corpus: Vec<_> = (0..24u64)
        .map(|s| random_positive_tnn(5, s).flip_rows())
        .collect();
    for (name, strategy) in STRATEGIES {
        group.bench_function(name, |b| {
            b.iter(|| {
                par::map_collect(strategy, &corpus, |m| {
                    spectrum_report_with(m, &tol, Strategy::Sequential).expect("spectrum")
                })
            })
        });
    }
    group.finish();
}

criterion_group!(benches, tnn_scan, sign_definite, corpus_sweep);
criterion_main!(benches);
