mod common;

use std::collections::BTreeSet;

use common::{bounded_partitions, naive_idp_violations};
use ehrlab::hull::{
    contains, contains_point, decompose_as_sum, idp_check, lattice_points_of_dilate,
    partition_polytope, partitions_padded,
};
use ehrlab::{LatticePoint, MembershipCertificate, VPolytope};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn lp(v: &[i64]) -> LatticePoint {
    LatticePoint::new(v.to_vec())
}

/// Every integer vector with nonnegative entries summing to `total`.
fn compositions(total: i64, parts: usize) -> Vec<LatticePoint> {
    fn rec(rest: i64, slots: usize, acc: &mut Vec<i64>, out: &mut Vec<LatticePoint>) {
        if slots == 1 {
            acc.push(rest);
            out.push(LatticePoint::new(acc.clone()));
            acc.pop();
            return;
        }
        for v in 0..=rest {
            acc.push(v);
            rec(rest - v, slots - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}

#[test]
fn partition_generators_are_the_bounded_partitions() {
    for a in 1..=8 {
        for b in 1..=4 {
            let gens = partitions_padded(a, b);
            let mut sorted = gens.clone();
            sorted.sort();
            assert_eq!(sorted, bounded_partitions(a as i64, b, a as i64));
        }
    }
}

#[test]
fn first_dilate_has_only_the_generators() {
    for a in 1..=8 {
        for b in 1..=4 {
            let poly = partition_polytope(a, b).unwrap();
            let mut gens = poly.generators().to_vec();
            gens.sort();
            assert_eq!(
                lattice_points_of_dilate(&poly, 1).unwrap(),
                gens,
                "a={a} b={b}"
            );
        }
    }
}

#[test]
fn dilate_enumeration_matches_filtered_box() {
    for a in 1..=6 {
        for b in 1..=4 {
            let poly = partition_polytope(a, b).unwrap();
            for k in 2..=3 {
                let brute: Vec<LatticePoint> = compositions(k * a as i64, b)
                    .into_iter()
                    .filter(|x| contains_point(&poly, x, k).unwrap())
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect();
                assert_eq!(
                    lattice_points_of_dilate(&poly, k as usize).unwrap(),
                    brute,
                    "a={a} b={b} k={k}"
                );
            }
        }
    }
}

#[test]
fn idp_check_matches_tuple_sum_oracle() {
    for a in 1..=8 {
        for b in 1..=4 {
            let poly = partition_polytope(a, b).unwrap();
            let gens = poly.generators().to_vec();
            for k in 2..=3usize {
                let dilate: Vec<LatticePoint> = compositions((k * a) as i64, b)
                    .into_iter()
                    .filter(|x| contains_point(&poly, x, k as i64).unwrap())
                    .collect();
                let oracle: BTreeSet<_> = naive_idp_violations(&gens, &dilate, k)
                    .into_iter()
                    .collect();
                let found: BTreeSet<_> = idp_check(&poly, k)
                    .unwrap()
                    .into_iter()
                    .map(|v| v.point)
                    .collect();
                assert_eq!(found, oracle, "a={a} b={b} k={k}");
            }
        }
    }
}

#[test]
fn square_membership_and_certificates() {
    let square = VPolytope::new(vec![lp(&[0, 0]), lp(&[1, 0]), lp(&[0, 1]), lp(&[1, 1])]).unwrap();
    let inside = [q(1, 2), q(1, 3)];
    let cert = contains(&square, &inside).unwrap();
    assert!(cert.is_inside());
    assert!(cert.validate(&square, &inside));
    let outside = [q(3, 2), q(1, 2)];
    let cert = contains(&square, &outside).unwrap();
    match &cert {
        MembershipCertificate::Outside { .. } => assert!(cert.validate(&square, &outside)),
        other => panic!("expected outside, got {other:?}"),
    }
    assert!(!cert.validate(&square, &inside));
}

#[test]
fn certificate_json_round_trip() {
    let poly = partition_polytope(4, 2).unwrap();
    let point = [q(5, 2), q(3, 2)];
    let cert = contains(&poly, &point).unwrap();
    let json = serde_json::to_string(&cert).unwrap();
    assert!(json.contains("\"verdict\":\"inside\""));
    let back: MembershipCertificate = serde_json::from_str(&json).unwrap();
    assert_eq!(serde_json::to_string(&back).unwrap(), json);
}

#[test]
fn dimension_mismatch_is_an_error() {
    let poly = partition_polytope(3, 3).unwrap();
    assert!(contains(&poly, &[q(1, 1)]).is_err());
    assert!(VPolytope::new(vec![]).is_err());
    assert!(VPolytope::new(vec![lp(&[1]), lp(&[1, 2])]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sums_of_points_lie_in_the_dilate(a in 1usize..=9, b in 1usize..=5, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let poly = partition_polytope(a, b).unwrap();
        let gens = poly.generators();
        let x = &gens[i.index(gens.len())];
        let y = &gens[j.index(gens.len())];
        let s = x.add(y);
        prop_assert!(contains_point(&poly, &s, 2).unwrap());
        let d = decompose_as_sum(&s, &poly, 2).unwrap();
        let parts = d.parts.expect("a sum of generators decomposes");
        prop_assert_eq!(parts[0].add(&parts[1]), s);
    }

    #[test]
    fn membership_certificates_always_validate(
        a in 1usize..=7, b in 1usize..=4,
        coords in prop::collection::vec((-2i64..=16, 1i64..=4), 4),
    ) {
        let poly = partition_polytope(a, b).unwrap();
        let point: Vec<BigRational> = coords[..b].iter().map(|&(n, d)| q(n, d)).collect();
        let cert = contains(&poly, &point).unwrap();
        prop_assert!(cert.validate(&poly, &point));
        let sum: BigRational = point.iter().sum();
        let decreasing = point.windows(2).all(|w| w[0] >= w[1]);
        let nonneg = point.iter().all(|x| *x >= q(0, 1));
        if cert.is_inside() {
            prop_assert!(sum == q(a as i64, 1) && decreasing && nonneg);
        }
    }
}
