//! Benchmark groups for the analysis pipeline, shared by the bench targets.

use std::hint::black_box;

use criterion::Criterion;
use eirep_core::algebra::{analyze, radical};
use eirep_core::oracle::{count_indecomposables, CountOptions};
use eirep_core::reptype::{classify, ClassifyOptions, OracleMode};
use eirep_core::{category_algebra, corpus, Field, FiniteCategory, RepSystem};

fn category(name: &str) -> FiniteCategory {
    corpus::bundle()
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, c)| c.build().expect("bundled example builds"))
        .expect("bundled example exists")
}

pub fn algebra(c: &mut Criterion) {
    let mut g = c.benchmark_group("algebra");
    for (name, p) in [("case5", 2), ("z2_z3_three", 2), ("z2_z3_three", 5)] {
        let cat = category(name);
        let f = Field::prime(p).unwrap();
        let a = category_algebra(&cat, &f);
        g.bench_function(format!("radical/{name}/p{p}"), |b| b.iter(|| radical(black_box(&a)).unwrap()));
        g.bench_function(format!("analyze/{name}/p{p}"), |b| b.iter(|| analyze(black_box(&a)).unwrap()));
    }
    g.finish();
}

pub fn classifier(c: &mut Criterion) {
    let mut g = c.benchmark_group("classify");
    g.sample_size(10);
    let opts = ClassifyOptions { oracle: OracleMode::Off, ..ClassifyOptions::default() };
    for (name, p) in [("case1", 2), ("case5", 2), ("c", 2), ("c_prime", 2), ("z2_z3_three", 3)] {
        let cat = category(name);
        let f = Field::prime(p).unwrap();
        g.bench_function(format!("{name}/p{p}"), |b| b.iter(|| classify(black_box(&cat), &f, &opts).unwrap()));
    }
    g.finish();
}

pub fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    let sys = RepSystem::from_category(&category("kronecker"));
    for (p, k, dims) in [(2, 1, vec![2, 2]), (3, 1, vec![2, 2]), (2, 2, vec![1, 2])] {
        let f = Field::new(p, k).unwrap();
        let opts = CountOptions::default();
        g.bench_function(format!("kronecker/{p}^{k}/{dims:?}"), |b| {
            b.iter(|| count_indecomposables(&sys, &f, black_box(&dims), &opts).unwrap())
        });
    }
    g.finish();
}
