use criterion::{criterion_group, criterion_main, BatchSize, BenchmarkId, Criterion};

use cpl_bench::{fresh, group, SPECS};
use cpl_core::harness::{reproduce_example_2_2, verify_theorem_a};
use cpl_core::{all_conjugacy_classes, closure_enumerate, eta, OrderGuard};

fn closure(c: &mut Criterion) {
    let mut grp = c.benchmark_group("closure");
    for spec in SPECS {
        let g = group(spec);
        let gens = g.generators().to_vec();
        grp.bench_with_input(BenchmarkId::from_parameter(spec), &gens, |b, gens| {
            b.iter(|| closure_enumerate(g.degree(), gens, 1 << 15).unwrap().order())
        });
    }
    grp.finish();
}

fn classes(c: &mut Criterion) {
    let mut grp = c.benchmark_group("classes");
    for spec in SPECS {
        let g = group(spec);
        grp.bench_function(BenchmarkId::from_parameter(spec), |b| {
            b.iter_batched(|| fresh(&g), |h| all_conjugacy_classes(&h).len(), BatchSize::SmallInput)
        });
    }
    grp.finish();
}

fn eta_sweep(c: &mut Criterion) {
    let mut grp = c.benchmark_group("eta_all_pairs");
    for spec in SPECS {
        let g = group(spec);
        let cls = all_conjugacy_classes(&g);
        grp.bench_function(BenchmarkId::from_parameter(spec), |b| {
            b.iter(|| {
                let mut total = 0;
                for x in cls {
                    for y in cls {
                        total += eta(&g, x, y);
                    }
                }
                total
            })
        });
    }
    grp.finish();
}

fn theorem_a(c: &mut Criterion) {
    let g = group("S4");
    c.bench_function("theorem_a_depth_2/S4", |b| {
        b.iter_batched(|| fresh(&g), |h| verify_theorem_a(&h, 2).unwrap().cases_checked, BatchSize::SmallInput)
    });
}

fn example_2_2(c: &mut Criterion) {
    let mut grp = c.benchmark_group("example_2_2");
    grp.sample_size(10);
    for m in [6u64, 30] {
        grp.bench_with_input(BenchmarkId::from_parameter(m), &m, |b, &m| {
            b.iter(|| reproduce_example_2_2(m, OrderGuard::default()).unwrap().cases_checked)
        });
    }
    grp.finish();
}

criterion_group!(benches, closure, classes, eta_sweep, theorem_a, example_2_2);
criterion_main!(benches);
