//! Reference values that computations are compared against, each tagged
//! with where it comes from.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::exact::UniPolynomial;
use crate::poset::YoungShape;

/// Origin of an expected value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Printed in the literature this tool reproduces.
    Published,
    /// Computed from published data by an independent route (hook
    /// products, evaluating a printed formula, ...).
    Derived,
    /// Checkable by hand.
    Elementary,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Length of the claw for which the power-sum Ehrhart polynomial first has
/// a negative coefficient.
pub const POWER_SUM_NEGATIVE_LENGTH: u32 = 20;

/// Low-order coefficients of the power-sum polynomial at that length.
pub fn power_sum_low_coefficients() -> Vec<(usize, BigRational)> {
    vec![
        (0, rat(1, 1)),
        (1, rat(-3528231, 6930)),
        (2, rat(1316700, 6930)),
        (3, rat(32027050, 6930)),
    ]
}

/// Two shapes with equal hook multisets and different Ehrhart polynomials.
pub fn hook_pair_shapes() -> (YoungShape, YoungShape) {
    (
        YoungShape::new(vec![8, 5, 4]).expect("valid shape"),
        YoungShape::new(vec![7, 7, 2, 1]).expect("valid shape"),
    )
}

fn shape_common_factor() -> UniPolynomial {
    UniPolynomial::product_of_shifts(rat(1, 36578304000), &[1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 7, 8])
}

/// Printed Ehrhart polynomials of the order polytopes of the two shapes of
/// [`hook_pair_shapes`], in the same order.
pub fn hook_pair_shape_polynomials() -> (UniPolynomial, UniPolynomial) {
    let f = shape_common_factor();
    let first_cubic = UniPolynomial::from_integers([90, 101, 35, 4]);
    let second_cubic = UniPolynomial::from_integers([180, 301, 161, 28]);
    let first = &(&f * &UniPolynomial::product_of_shifts(rat(7, 1), &[3, 4])) * &first_cubic;
    let second = &(&f * &UniPolynomial::product_of_shifts(rat(1, 1), &[6, 7])) * &second_cubic;
    (first, second)
}

pub const HOOK_PAIR_SHAPE_VALUES_AT_ONE: (u64, u64) = (115, 134);
pub const HOOK_PAIR_SHAPE_HOOKS: [usize; 17] = [10, 9, 8, 7, 6, 5, 5, 4, 4, 3, 3, 3, 2, 2, 1, 1, 1];
/// `17! / prod(hooks)`.
pub const HOOK_PAIR_SHAPE_LINEAR_EXTENSIONS: u64 = 272272;

fn tree_common_factor() -> UniPolynomial {
    UniPolynomial::product_of_shifts(rat(1, 3632428800), &[1, 2, 3, 4, 5])
}

/// Printed Ehrhart polynomials of the two hook-equivalent 14-node trees
/// (shipped as `tree_t.txt` and `tree_t_prime.txt`).
pub fn hook_pair_tree_polynomials() -> (UniPolynomial, UniPolynomial) {
    let f = tree_common_factor();
    let t = UniPolynomial::from_integers([
        30270240i64,
        167403432,
        393196652,
        512043278,
        404186041,
        199510913,
        61564083,
        11490017,
        1182984,
        51480,
    ]);
    let t_prime = UniPolynomial::from_integers([
        30270240i64,
        165675888,
        386259540,
        500753090,
        394660980,
        195027707,
        60383085,
        11327855,
        1173975,
        51480,
    ]);
    (&f * &t, &f * &t_prime)
}

/// Obtained by evaluating the printed tree polynomials at 1.
pub const HOOK_PAIR_TREE_VALUES_AT_ONE: (u64, u64) = (353, 346);
pub const HOOK_PAIR_TREE_HOOKS: [usize; 14] = [14, 7, 6, 5, 4, 3, 2, 1, 1, 1, 1, 1, 1, 1];
/// `14! / 70560`.
pub const HOOK_PAIR_TREE_LINEAR_EXTENSIONS: u64 = 1235520;

/// Points of `2 P_{18,9}` without a two-term decomposition.
pub fn nonidp_partition_points() -> Vec<Vec<i64>> {
    vec![
        vec![6, 6, 6, 6, 4, 4, 2, 1, 1],
        vec![6, 6, 5, 5, 5, 4, 2, 2, 1],
    ]
}

/// Four partitions of 18 whose average is half the first point of
/// [`nonidp_partition_points`].
pub fn nonidp_partition_witness() -> Vec<Vec<i64>> {
    vec![
        vec![4, 4, 4, 4, 1, 1, 0, 0, 0],
        vec![3, 3, 3, 3, 3, 3, 0, 0, 0],
        vec![3, 3, 3, 3, 2, 2, 2, 0, 0],
        vec![2, 2, 2, 2, 2, 2, 2, 2, 2],
    ]
}

/// Number of posets up to isomorphism on `1..=7` elements.
pub const POSET_COUNTS: [usize; 7] = [1, 2, 5, 16, 63, 318, 2045];
