use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gutt_core::exact_arith::int;
use gutt_core::gutt_star::GuttStar;
use gutt_core::lie_algebra::LieAlgebra;
use gutt_core::sampling::monomial_pairs;
use gutt_core::seminorm::{check_continuity_r1, BasisSeminorm, Order};
use gutt_core::Execution;

fn continuity(c: &mut Criterion) {
    let so3 = LieAlgebra::so3();
    let pairs = monomial_pairs(3, 6);
    let p = BasisSeminorm::unit(3);
    let mut group = c.benchmark_group("continuity-so3-deg6");
    group.sample_size(10);
    for exec in [Execution::Sequential, Execution::Parallel] {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |b, &exec| {
            // a fresh context each time so the product cache does not hide the work
            b.iter(|| {
                let star = GuttStar::new(&so3);
                check_continuity_r1(&star, &p, &int(1), Order::new(1.5).unwrap(), &pairs, exec).unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, continuity);
criterion_main!(benches);
