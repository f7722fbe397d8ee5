use criterion::{criterion_group, criterion_main};

criterion_group!(benches, eirep_bench::algebra, eirep_bench::classifier, eirep_bench::oracle);
criterion_main!(benches);
