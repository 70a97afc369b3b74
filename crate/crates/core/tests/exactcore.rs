mod common;

use ehrlab::exact::{format_rational, interpolate_samples, parse_rational};
use ehrlab::{determinant, interpolate_polynomial, power_sum_polynomial, IntMatrix, UniPolynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use proptest::prelude::*;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn power_sums_match_direct_summation() {
    for l in 0..=10u32 {
        let p = power_sum_polynomial(l);
        assert_eq!(p.degree(), Some(l as usize + 1));
        for n in 0..=10i64 {
            let direct: BigInt = (1..=n + 1).map(|j| Pow::pow(BigInt::from(j), l)).sum();
            assert_eq!(
                p.eval_int(n),
                BigRational::from_integer(direct),
                "l={l} n={n}"
            );
        }
    }
}

#[test]
fn power_sums_below_twenty_have_no_negative_coefficient() {
    for l in 0..20 {
        assert!(
            power_sum_polynomial(l).has_nonnegative_coefficients(),
            "l={l}"
        );
    }
    assert!(!power_sum_polynomial(20).has_nonnegative_coefficients());
}

#[test]
fn interpolation_rejects_repeated_nodes() {
    let pts = vec![(BigInt::from(1), rat(1, 1)), (BigInt::from(1), rat(2, 1))];
    assert!(interpolate_polynomial(&pts).is_err());
}

#[test]
fn interpolation_of_constant_samples_is_constant() {
    let p = interpolate_samples(&vec![BigInt::from(7); 5]).unwrap();
    assert_eq!(p, UniPolynomial::constant(rat(7, 1)));
}

#[test]
fn determinant_rejects_non_square() {
    let m = IntMatrix::from_rows(&[vec![1i64, 2, 3], vec![4, 5, 6]]).unwrap();
    assert!(determinant(&m).is_err());
}

#[test]
fn empty_determinant_is_one() {
    let m = IntMatrix::new(0, 0, vec![]).unwrap();
    assert_eq!(determinant(&m).unwrap(), BigInt::one());
}

#[test]
fn polynomial_json_uses_fraction_strings() {
    let p = UniPolynomial::from_coeffs(vec![rat(1, 1), rat(3, 2), rat(1, 2)]);
    let json = serde_json::to_string(&p).unwrap();
    assert_eq!(json, r#"["1/1","3/2","1/2"]"#);
    let back: UniPolynomial = serde_json::from_str(&json).unwrap();
    assert_eq!(back, p);
}

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-50i64..=50, 1i64..=30).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #[test]
    fn interpolation_recovers_random_polynomials(
        coeffs in prop::collection::vec(small_rational(), 1..=9),
        offset in -5i64..=5,
    ) {
        let p = UniPolynomial::from_coeffs(coeffs);
        let nodes = p.degree().unwrap_or(0) + 1;
        let pts: Vec<_> = (0..nodes as i64)
            .map(|i| (BigInt::from(i + offset), p.eval_int(i + offset)))
            .collect();
        prop_assert_eq!(interpolate_polynomial(&pts).unwrap(), p);
    }

    #[test]
    fn interpolation_with_extra_nodes_is_stable(
        coeffs in prop::collection::vec(-20i64..=20, 1..=6),
        extra in 1usize..=4,
    ) {
        let p = UniPolynomial::from_integers(coeffs);
        let nodes = p.degree().unwrap_or(0) + 1 + extra;
        let samples: Vec<BigInt> = (0..nodes as i64).map(|i| p.eval_int(i).to_integer()).collect();
        prop_assert_eq!(interpolate_samples(&samples).unwrap(), p);
    }

    #[test]
    fn bareiss_matches_cofactor_expansion(
        n in 0usize..=4,
        entries in prop::collection::vec(-5i64..=5, 16),
    ) {
        let rows: Vec<Vec<i64>> = (0..n).map(|i| entries[i * 4..i * 4 + n].to_vec()).collect();
        let m = IntMatrix::from_fn(n, n, |i, j| BigInt::from(rows[i][j]));
        prop_assert_eq!(determinant(&m).unwrap(), common::cofactor_determinant(&rows));
    }

    #[test]
    fn rational_arithmetic_agrees_with_cross_multiplication(
        a in -1000i64..=1000, b in 1i64..=1000, c in -1000i64..=1000, d in 1i64..=1000,
    ) {
        let x = rat(a, b);
        let y = rat(c, d);
        let (a, b, c, d) = (BigInt::from(a), BigInt::from(b), BigInt::from(c), BigInt::from(d));
        let sum = &x + &y;
        prop_assert_eq!(sum.numer() * (&b * &d), sum.denom() * (&a * &d + &c * &b));
        let prod = &x * &y;
        prop_assert_eq!(prod.numer() * (&b * &d), prod.denom() * (&a * &c));
        prop_assert_eq!(x < y, &a * &d < &c * &b);
        prop_assert_eq!(parse_rational(&format_rational(&x)), Some(x));
    }

    #[test]
    fn polynomial_product_evaluates_pointwise(
        p in prop::collection::vec(-9i64..=9, 1..=5),
        q in prop::collection::vec(-9i64..=9, 1..=5),
        x in -6i64..=6,
    ) {
        let p = UniPolynomial::from_integers(p);
        let q = UniPolynomial::from_integers(q);
        prop_assert_eq!((&p * &q).eval_int(x), p.eval_int(x) * q.eval_int(x));
        prop_assert_eq!((&p + &q).eval_int(x), p.eval_int(x) + q.eval_int(x));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(UniPolynomial::zero().degree(), None);
        prop_assert!(BigRational::zero() == UniPolynomial::zero().eval_int(x));
    }
}
