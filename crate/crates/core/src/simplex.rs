//! Phase-1 simplex for `A λ = b, λ >= 0` on a fraction-free integer tableau.
//!
//! The tableau holds integers `T` plus a common denominator `D`; the true
//! entries are `T / D`. A pivot on `(r, s)` maps every other row to
//! `(T[r][s] T[i][j] - T[i][s] T[r][j]) / D` (the division is exact) and sets
//! `D = T[r][s]`. Entries are kept in `i128` while they fit and the solve is
//! replayed in `BigInt` on the first overflow.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

/// Integers that may refuse an operation instead of overflowing.
trait Entry: Clone + Ord + Sized {
    fn from_big(v: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn zero_value() -> Self;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn div_exact(&self, o: &Self) -> Self;
    fn neg(&self) -> Option<Self>;
}

impl Entry for i128 {
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn zero_value() -> Self {
        0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        debug_assert_eq!(self % o, 0);
        self / o
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl Entry for BigInt {
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn zero_value() -> Self {
        BigInt::zero()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        debug_assert!((self % o).is_zero());
        self / o
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
}

/// Outcome of a feasibility solve, with rational data as `(numerator,
/// common denominator)` pairs.
#[derive(Debug, Clone)]
pub(crate) enum Feasibility {
    /// `lambda[j] = numerators[j] / denominator`.
    Feasible {
        numerators: Vec<BigInt>,
        denominator: BigInt,
    },
    /// Farkas vector `y` (scaled by a positive integer) with `y·A_j <= 0`
    /// for all `j` and `y·b > 0`.
    Infeasible { numerators: Vec<BigInt> },
}

/// Decides whether `A λ = b` has a solution with `λ >= 0`.
///
/// `a` is row-major with `rows x cols` entries.
pub(crate) fn feasibility(a: &[Vec<BigInt>], b: &[BigInt]) -> Feasibility {
    solve::<i128>(a, b).unwrap_or_else(|| solve::<BigInt>(a, b).expect("BigInt never overflows"))
}

#[allow(clippy::needless_range_loop)]
fn solve<T: Entry>(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<Feasibility> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let width = n + m + 1;
    let rhs = n + m;
    // rows 0..m constraints, row m objective
    let mut t: Vec<Vec<T>> = vec![vec![T::zero_value(); width]; m + 1];
    let mut signs = vec![false; m];
    for i in 0..m {
        let flip = b[i].is_negative();
        signs[i] = flip;
        for j in 0..n {
            let v = T::from_big(&a[i][j])?;
            t[i][j] = if flip { v.neg()? } else { v };
        }
        let v = T::from_big(&b[i])?;
        t[i][rhs] = if flip { v.neg()? } else { v };
        t[i][n + i] = T::from_big(&BigInt::from(1))?;
    }
    for j in (0..n).chain(std::iter::once(rhs)) {
        let mut sum = T::zero_value();
        for row in t.iter().take(m) {
            sum = sum.add(&row[j])?;
        }
        t[m][j] = sum.neg()?;
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    let mut denom = T::from_big(&BigInt::from(1))?;
    let zero = T::zero_value();

    loop {
        if t[m][rhs] == zero {
            break;
        }
        let Some(s) = (0..n + m).find(|&j| t[m][j] < zero) else {
            break;
        };
        // ratio test, ties to the smallest basic index
        let mut best: Option<usize> = None;
        for i in 0..m {
            if t[i][s] <= zero {
                continue;
            }
            best = Some(match best {
                None => i,
                Some(r) => {
                    let lhs = t[i][rhs].mul(&t[r][s])?;
                    let rhs_v = t[r][rhs].mul(&t[i][s])?;
                    match lhs.cmp(&rhs_v) {
                        Ordering::Less => i,
                        Ordering::Equal if basis[i] < basis[r] => i,
                        _ => r,
                    }
                }
            });
        }
        let r = best.expect("phase-1 objective is bounded below");
        let pivot = t[r][s].clone();
        for i in 0..=m {
            if i == r {
                continue;
            }
            let factor = t[i][s].clone();
            if factor == zero {
                // (pivot * T[i][j]) / D
                for j in 0..width {
                    if t[i][j] != zero {
                        t[i][j] = pivot.mul(&t[i][j])?.div_exact(&denom);
                    }
                }
                continue;
            }
            for j in 0..width {
                let v = pivot.mul(&t[i][j])?.sub(&factor.mul(&t[r][j])?)?;
                t[i][j] = v.div_exact(&denom);
            }
        }
        denom = pivot;
        basis[r] = s;
    }

    let d = denom.to_big();
    if t[m][rhs] == zero {
        let mut numerators = vec![BigInt::zero(); n];
        for (i, &col) in basis.iter().enumerate() {
            if col < n {
                numerators[col] = t[i][rhs].to_big();
            }
        }
        Some(Feasibility::Feasible {
            numerators,
            denominator: d,
        })
    } else {
        // y'_i = 1 - z_{n+i}/D, then undo the row sign flips
        let numerators = (0..m)
            .map(|i| {
                let y = &d - t[m][n + i].to_big();
                if signs[i] {
                    -y
                } else {
                    y
                }
            })
            .collect();
        Some(Feasibility::Infeasible { numerators })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    fn check(a: &[Vec<BigInt>], b: &[BigInt], f: &Feasibility) {
        match f {
            Feasibility::Feasible {
                numerators,
                denominator,
            } => {
                assert!(denominator.is_positive());
                assert!(numerators.iter().all(|v| !v.is_negative()));
                for (row, bi) in a.iter().zip(b) {
                    let lhs: BigInt = row.iter().zip(numerators).map(|(x, l)| x * l).sum();
                    assert_eq!(lhs, bi * denominator);
                }
            }
            Feasibility::Infeasible { numerators, .. } => {
                let n = a[0].len();
                for j in 0..n {
                    let v: BigInt = a.iter().zip(numerators).map(|(row, y)| &row[j] * y).sum();
                    assert!(!v.is_positive());
                }
                let yb: BigInt = b.iter().zip(numerators).map(|(x, y)| x * y).sum();
                assert!(yb.is_positive());
            }
        }
    }

    #[test]
    fn feasible_and_infeasible() {
        let a = big(&[&[1, 2], &[1, 1]]);
        let b: Vec<BigInt> = [3, 2].map(BigInt::from).to_vec();
        let f = feasibility(&a, &b);
        assert!(matches!(f, Feasibility::Feasible { .. }));
        check(&a, &b, &f);

        let b2: Vec<BigInt> = [-1, 1].map(BigInt::from).to_vec();
        let f2 = feasibility(&a, &b2);
        assert!(matches!(f2, Feasibility::Infeasible { .. }));
        check(&a, &b2, &f2);
    }

    #[test]
    fn both_backends_agree() {
        let a = big(&[&[3, 1, 4, 1], &[5, 9, 2, 6], &[1, 1, 1, 1]]);
        let b: Vec<BigInt> = [7, 13, 3].map(BigInt::from).to_vec();
        let small = solve::<i128>(&a, &b).unwrap();
        let large = solve::<BigInt>(&a, &b).unwrap();
        check(&a, &b, &small);
        check(&a, &b, &large);
        assert_eq!(format!("{small:?}"), format!("{large:?}"));
    }
}
