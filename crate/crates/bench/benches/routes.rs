//! Route timings for the polynomial families, the bijections and the
//! last-passage computations.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use grothlab::bijections::{phi, rsk};
use grothlab::lpp::{exact_prob, monte_carlo_threads, GeomParams, LppMatrix};
use grothlab::shapes::part;
use grothlab::symfunc::{dual_grothendieck, grothendieck, DualRoute, GrothRoute, SymSpec};
use grothlab::tableaux::Tableau;

fn dual_routes(c: &mut Criterion) {
    let lam = part(&[2, 2, 1]);
    let spec = SymSpec::new(3, 2);
    let mut g = c.benchmark_group("dual_grothendieck 221 n=3");
    for route in DualRoute::ALL {
        g.bench_with_input(BenchmarkId::from_parameter(format!("{route:?}")), &route, |b, &r| b.iter(|| dual_grothendieck(black_box(&lam), &spec, r).unwrap()));
    }
    g.finish();
}

fn groth_routes(c: &mut Criterion) {
    let lam = part(&[2, 1]);
    let spec = SymSpec::new(3, 2);
    let mut g = c.benchmark_group("grothendieck 21 n=3");
    for route in GrothRoute::ALL {
        g.bench_with_input(BenchmarkId::from_parameter(format!("{route:?}")), &route, |b, &r| b.iter(|| grothendieck(black_box(&lam), &spec, r).unwrap()));
    }
    g.finish();
}

fn bijections(c: &mut Criterion) {
    let m = LppMatrix::from_display(&[&[1, 0, 2, 1], &[0, 3, 1, 0], &[2, 1, 0, 1]]).unwrap();
    c.bench_function("rsk 3x4", |b| b.iter(|| rsk(black_box(&m))));
    let t = Tableau::from_rows(&[&[1, 1, 4], &[1, 3, 4], &[3, 3]]).unwrap();
    c.bench_function("phi 332", |b| b.iter(|| phi(black_box(&t), 3, 4).unwrap()));
}

fn probability(c: &mut Criterion) {
    let p = GeomParams::parse("1/2,1/3", "1/4,1/5,1/6").unwrap();
    let lam = part(&[3, 1]);
    c.bench_function("exact_prob 31", |b| b.iter(|| exact_prob(black_box(&lam), &p).unwrap()));
    let mut g = c.benchmark_group("monte_carlo 10k");
    g.sample_size(10);
    for threads in [1, 4] {
        g.bench_with_input(BenchmarkId::new("threads", threads), &threads, |b, &th| b.iter(|| monte_carlo_threads(&lam, &p, 10_000, 42, th).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, dual_routes, groth_routes, bijections, probability);
criterion_main!(benches);
