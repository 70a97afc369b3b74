use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use ehrlab::gt::{enumerate_gt, skew_schur_ones};
use ehrlab::hull::{contains, decompose_as_sum, partition_polytope};
use ehrlab::poset::{ehrhart_order_polytope, poset_from_shape};
use ehrlab::search::{canonical_form, enumerate_posets};
use ehrlab::{LatticePoint, Partition, YoungShape};

fn order_polynomials(c: &mut Criterion) {
    let shape = poset_from_shape(&YoungShape::new(vec![8, 5, 4]).unwrap()).unwrap();
    c.bench_function("ehrhart shape 8,5,4", |b| {
        b.iter(|| ehrhart_order_polytope(black_box(&shape)))
    });
}

fn membership(c: &mut Criterion) {
    let poly = partition_polytope(18, 9).unwrap();
    let point = LatticePoint::new(vec![6, 6, 6, 6, 4, 4, 2, 1, 1]);
    let half = point.divided(2);
    c.bench_function("membership in P(18,9)", |b| {
        b.iter(|| contains(&poly, black_box(&half)).unwrap())
    });
    c.bench_function("two-term split search in P(18,9)", |b| {
        b.iter(|| decompose_as_sum(black_box(&point), &poly, 2).unwrap())
    });
}

fn posets(c: &mut Criterion) {
    let mut group = c.benchmark_group("posets");
    group.sample_size(10);
    group.bench_function("enumerate 6 elements", |b| {
        b.iter(|| enumerate_posets(black_box(6)).unwrap())
    });
    let sample = enumerate_posets(7).unwrap();
    group.bench_function("canonical form, 7 elements", |b| {
        b.iter(|| {
            for p in sample.iter().take(200) {
                black_box(canonical_form(&p.to_poset()));
            }
        })
    });
    group.finish();
}

fn gt_counts(c: &mut Criterion) {
    let lambda = Partition::new(vec![6, 5, 3, 2, 0]).unwrap();
    let mu = Partition::new(vec![2, 1, 0, 0, 0]).unwrap();
    c.bench_function("GT count 6,5,3,2/2,1 over 6 rows", |b| {
        b.iter(|| enumerate_gt(black_box(&lambda), &mu, 6).unwrap())
    });
    c.bench_function("Jacobi-Trudi 6,5,3,2/2,1 at 1^5", |b| {
        b.iter(|| skew_schur_ones(black_box(&lambda), &mu, 5).unwrap())
    });
}

criterion_group!(benches, order_polynomials, membership, posets, gt_counts);
criterion_main!(benches);
