//! Independent oracles shared by the integration tests and the acceptance
//! runner. Each one recomputes a quantity by a route that does not go
//! through the library's algorithm for it.

#![allow(dead_code)]

use std::collections::HashSet;

use ehrlab::hull::LatticePoint;
use ehrlab::{Poset, RootedTree, YoungShape};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Order-preserving maps `P -> {lo..=hi}` (strict if asked) whose values sum
/// to `sum` when given, by backtracking along a linear extension.
pub fn count_maps(p: &Poset, lo: i64, hi: i64, strict: bool, sum: Option<i64>) -> u64 {
    let order = p.linear_extension();
    let n = p.size();
    let mut f = vec![0i64; n];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        order: &[usize],
        p: &Poset,
        f: &mut Vec<i64>,
        lo: i64,
        hi: i64,
        strict: bool,
        budget: Option<i64>,
    ) -> u64 {
        if k == order.len() {
            return u64::from(budget.is_none_or(|b| b == 0));
        }
        let x = order[k];
        let mut min = lo;
        for &y in &order[..k] {
            if p.leq(y, x) {
                min = min.max(if strict { f[y] + 1 } else { f[y] });
            }
        }
        let mut total = 0;
        for v in min..=hi {
            if budget.is_some_and(|b| v > b) {
                break;
            }
            f[x] = v;
            total += rec(k + 1, order, p, f, lo, hi, strict, budget.map(|b| b - v));
        }
        total
    }
    rec(0, &order, p, &mut f, lo, hi, strict, sum)
}

/// Coefficients of `q^0..=q^max` in `prod_h 1 / (1 - q^h)`.
pub fn hook_generating_function(hooks: &[usize], max: usize) -> Vec<BigInt> {
    let mut series = vec![BigInt::zero(); max + 1];
    series[0] = BigInt::one();
    for &h in hooks {
        for k in h..=max {
            let add = series[k - h].clone();
            series[k] += add;
        }
    }
    series
}

/// Standard Young tableaux of a shape, by removing corners recursively.
pub fn count_syt(parts: &[usize]) -> u64 {
    if parts.iter().all(|&p| p == 0) {
        return 1;
    }
    let mut total = 0;
    for i in 0..parts.len() {
        let is_corner = parts[i] > 0 && parts.get(i + 1).is_none_or(|&next| next < parts[i]);
        if is_corner {
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            total += count_syt(&smaller);
        }
    }
    total
}

/// Linear extensions by brute force over all permutations.
pub fn count_linear_extensions_brute(p: &Poset) -> u64 {
    fn rec(p: &Poset, placed: u64, n: usize) -> u64 {
        if placed.count_ones() as usize == n {
            return 1;
        }
        (0..n)
            .filter(|&x| placed & (1 << x) == 0)
            .filter(|&x| (p.down_mask(x) & !(1 << x)) & !placed == 0)
            .map(|x| rec(p, placed | (1 << x), n))
            .sum()
    }
    rec(p, 0, p.size())
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for c in 0..n {
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != c)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let term = BigInt::from(m[0][c]) * cofactor_determinant(&minor);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Points of `kP` that are not sums of `k` lattice points of `P`, where the
/// lattice points of `kP` are supplied by the caller and all `k`-tuples of
/// lattice points of `P` are summed.
pub fn naive_idp_violations(
    points_of_p: &[LatticePoint],
    points_of_kp: &[LatticePoint],
    k: usize,
) -> Vec<LatticePoint> {
    let dim = points_of_kp.first().map_or(0, LatticePoint::dim);
    let mut sums: HashSet<LatticePoint> = HashSet::from([LatticePoint::new(vec![0; dim])]);
    for _ in 0..k {
        sums = sums
            .iter()
            .flat_map(|s| points_of_p.iter().map(move |p| s.add(p)))
            .collect();
    }
    points_of_kp
        .iter()
        .filter(|x| !sums.contains(x))
        .cloned()
        .collect()
}

/// Partitions of `a` into at most `b` parts with every part at most `cap`,
/// zero-padded; an independent generator for partition polytope points.
pub fn bounded_partitions(a: i64, b: usize, cap: i64) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    fn rec(rest: i64, max: i64, slots: usize, acc: &mut Vec<i64>, out: &mut Vec<LatticePoint>) {
        if slots == 0 {
            if rest == 0 {
                out.push(LatticePoint::new(acc.clone()));
            }
            return;
        }
        for v in 0..=max.min(rest) {
            acc.push(v);
            rec(rest - v, v, slots - 1, acc, out);
            acc.pop();
        }
    }
    rec(a, cap, b, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn shape(parts: &[usize]) -> YoungShape {
    YoungShape::new(parts.to_vec()).unwrap()
}

pub fn shipped_trees() -> (RootedTree, RootedTree) {
    let dir = ehrlab::fixtures::fixture_dir();
    (
        ehrlab::fixtures::load_tree(&dir, ehrlab::fixtures::TREE_T).unwrap(),
        ehrlab::fixtures::load_tree(&dir, ehrlab::fixtures::TREE_T_PRIME).unwrap(),
    )
}
