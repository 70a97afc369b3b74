//! Exact scalars, dense univariate polynomials over the rationals, interpolation
//! and fraction-free determinants.
//!
//! Every count and every Ehrhart coefficient produced by this crate flows
//! through the types in this module; nothing here touches floating point.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type ExactRational = BigRational;

/// Renders a rational as `p/q` (integers become `p/1`).
pub fn format_rational(value: &BigRational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => text.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Generalized binomial coefficient `n (n-1) ... (n-k+1) / k!`.
///
/// Each partial product is itself a binomial coefficient, so the running
/// division is exact.
pub fn binomial(n: &BigInt, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - BigInt::from(i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// Dense polynomial with rational coefficients in ascending degree order.
///
/// Trailing zeros are always trimmed, so the zero polynomial is the empty
/// coefficient vector and structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPolynomial {
    coeffs: Vec<BigRational>,
}

impl UniPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integers<I: Into<BigInt>>(coeffs: impl IntoIterator<Item = I>) -> Self {
        Self::from_coeffs(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    /// The monic linear polynomial `x + shift`.
    pub fn shifted_x(shift: i64) -> Self {
        Self::from_integers([shift, 1])
    }

    /// `None` is the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> BigRational {
        self.coeffs
            .get(degree)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(x.into()))
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Smallest coefficient together with its degree (lowest degree on ties).
    pub fn min_coefficient(&self) -> Option<(usize, BigRational)> {
        let mut best: Option<(usize, &BigRational)> = None;
        for (deg, c) in self.coeffs.iter().enumerate() {
            if best.is_none_or(|(_, b)| c < b) {
                best = Some((deg, c));
            }
        }
        best.map(|(d, c)| (d, c.clone()))
    }

    pub fn negative_coefficients(&self) -> Vec<(usize, BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_negative())
            .map(|(d, c)| (d, c.clone()))
            .collect()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Product of `(x + shift)` over the given shifts, times `scalar`.
    pub fn product_of_shifts(scalar: BigRational, shifts: &[i64]) -> Self {
        shifts
            .iter()
            .fold(Self::constant(scalar), |acc, &s| &acc * &Self::shifted_x(s))
    }

    /// Canonical JSON form: array of `p/q` strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Option<Self> {
        items
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<Option<Vec<_>>>()
            .map(Self::from_coeffs)
    }
}

impl fmt::Display for UniPolynomial {
    /// Human-readable form in the variable `n`, highest degree first, exact
    /// fractions only.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let unit = magnitude.is_one();
            match deg {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !unit {
                        write!(f, "{magnitude}*")?;
                    }
                    if deg == 1 {
                        write!(f, "n")?;
                    } else {
                        write!(f, "n^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &UniPolynomial {
    type Output = UniPolynomial;

    fn add(self, rhs: &UniPolynomial) -> UniPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPolynomial::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPolynomial {
    type Output = UniPolynomial;

    fn sub(self, rhs: &UniPolynomial) -> UniPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPolynomial::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &UniPolynomial {
    type Output = UniPolynomial;

    fn neg(self) -> UniPolynomial {
        UniPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPolynomial {
    type Output = UniPolynomial;

    fn mul(self, rhs: &UniPolynomial) -> UniPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return UniPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPolynomial::from_coeffs(out)
    }
}

impl Serialize for UniPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for UniPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(deserializer)?;
        UniPolynomial::from_strings(&items)
            .ok_or_else(|| serde::de::Error::custom("expected rational strings of the form p/q"))
    }
}

/// The unique polynomial of degree `< points.len()` through all points.
///
/// Newton divided differences, then expansion to the monomial basis.
pub fn interpolate_polynomial(points: &[(BigInt, BigRational)]) -> Result<UniPolynomial> {
    if points.is_empty() {
        return Err(Error::NoInterpolationNodes);
    }
    for (i, (xi, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(Error::DegenerateNodes(xi.to_string()));
        }
    }
    let xs: Vec<BigRational> = points
        .iter()
        .map(|(x, _)| BigRational::from_integer(x.clone()))
        .collect();
    let mut table: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    let n = table.len();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &table[i] - &table[i - 1];
            let den = &xs[i] - &xs[i - level];
            table[i] = num / den;
        }
    }
    let mut poly = UniPolynomial::constant(table[n - 1].clone());
    for k in (0..n - 1).rev() {
        let factor = UniPolynomial::from_coeffs(vec![-xs[k].clone(), BigRational::one()]);
        poly = &(&poly * &factor) + &UniPolynomial::constant(table[k].clone());
    }
    Ok(poly)
}

/// Interpolates integer samples taken at `x = 0, 1, ..., samples.len() - 1`.
pub fn interpolate_samples(samples: &[BigInt]) -> Result<UniPolynomial> {
    let points: Vec<(BigInt, BigRational)> = samples
        .iter()
        .enumerate()
        .map(|(i, y)| (BigInt::from(i), BigRational::from_integer(y.clone())))
        .collect();
    interpolate_polynomial(&points)
}

/// The polynomial `p` with `p(n) = 1^l + 2^l + ... + (n+1)^l` for all `n >= 0`.
pub fn power_sum_polynomial(l: u32) -> UniPolynomial {
    let mut samples = Vec::with_capacity(l as usize + 2);
    let mut running = BigInt::zero();
    for n in 0..=(l as u64 + 1) {
        running += BigInt::from(n + 1).pow(l);
        samples.push(running.clone());
    }
    interpolate_samples(&samples).expect("sample nodes are distinct")
}

/// Rectangular integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::MatrixShape {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let entries = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::MatrixShape {
                    expected: cols,
                    got: row.len(),
                });
            }
            entries.extend(row.iter().cloned().map(Into::into));
        }
        Self::new(rows.len(), cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.cols + col]
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// The pivot is the first nonzero entry at or below the diagonal in the
/// current column; every intermediate division is exact.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    if m.rows != m.cols {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| m.entries[i * n..(i + 1) * n].to_vec())
        .collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(BigInt::zero());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                let (q, r) = v.div_rem(&prev);
                debug_assert!(r.is_zero());
                a[i][j] = q;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// `serde(with)` adapters for exact numbers as decimal strings.
pub mod serde_strings {
    use super::*;

    pub mod int {
        use super::*;

        pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
            s.serialize_str(&v.to_string())
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> std::result::Result<BigInt, D::Error> {
            let text = String::deserialize(d)?;
            text.parse().map_err(serde::de::Error::custom)
        }
    }

    pub mod ints {
        use super::*;

        pub fn serialize<S: Serializer>(
            v: &[BigInt],
            s: S,
        ) -> std::result::Result<S::Ok, S::Error> {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> std::result::Result<Vec<BigInt>, D::Error> {
            Vec::<String>::deserialize(d)?
                .iter()
                .map(|t| t.parse().map_err(serde::de::Error::custom))
                .collect()
        }
    }

    pub mod i64s {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[i64], s: S) -> std::result::Result<S::Ok, S::Error> {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> std::result::Result<Vec<i64>, D::Error> {
            Vec::<String>::deserialize(d)?
                .iter()
                .map(|t| t.parse().map_err(serde::de::Error::custom))
                .collect()
        }
    }

    pub mod u64_string {
        use super::*;

        pub fn serialize<S: Serializer>(v: &u64, s: S) -> std::result::Result<S::Ok, S::Error> {
            s.serialize_str(&v.to_string())
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<u64, D::Error> {
            String::deserialize(d)?
                .parse()
                .map_err(serde::de::Error::custom)
        }
    }

    pub mod rational {
        use super::*;

        pub fn serialize<S: Serializer>(
            v: &BigRational,
            s: S,
        ) -> std::result::Result<S::Ok, S::Error> {
            s.serialize_str(&format_rational(v))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> std::result::Result<BigRational, D::Error> {
            let text = String::deserialize(d)?;
            parse_rational(&text).ok_or_else(|| serde::de::Error::custom("expected p/q"))
        }
    }

    pub mod rationals {
        use super::*;

        pub fn serialize<S: Serializer>(
            v: &[BigRational],
            s: S,
        ) -> std::result::Result<S::Ok, S::Error> {
            v.iter()
                .map(format_rational)
                .collect::<Vec<_>>()
                .serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> std::result::Result<Vec<BigRational>, D::Error> {
            Vec::<String>::deserialize(d)?
                .iter()
                .map(|t| parse_rational(t).ok_or_else(|| serde::de::Error::custom("expected p/q")))
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn pts(items: &[(i64, i64)]) -> Vec<(BigInt, BigRational)> {
        items
            .iter()
            .map(|&(x, y)| (BigInt::from(x), q(y, 1)))
            .collect()
    }

    #[test]
    fn interpolates_small_cases() {
        let line = interpolate_polynomial(&pts(&[(0, 1), (1, 2)])).unwrap();
        assert_eq!(line, UniPolynomial::from_integers([1, 1]));

        let square = interpolate_polynomial(&pts(&[(0, 0), (1, 1), (2, 4)])).unwrap();
        assert_eq!(square, UniPolynomial::from_integers([0, 0, 1]));
    }

    #[test]
    fn interpolates_sum_of_squares() {
        // direct summation of sum_{j=1}^{x+1} j^2 at x = 0..3
        let samples: Vec<(i64, i64)> = (0..4)
            .map(|x| (x, (1..=x + 1).map(|j| j * j).sum()))
            .collect();
        assert_eq!(samples, vec![(0, 1), (1, 5), (2, 14), (3, 30)]);
        let p = interpolate_polynomial(&pts(&samples)).unwrap();
        let expected = UniPolynomial::product_of_shifts(q(1, 6), &[1, 2])
            .mul(&UniPolynomial::from_integers([3, 2]));
        assert_eq!(p, expected);
    }

    #[test]
    fn duplicate_nodes_are_rejected() {
        let err = interpolate_polynomial(&pts(&[(1, 1), (1, 2)])).unwrap_err();
        assert!(err.to_string().contains("degenerate interpolation nodes"));
        assert!(matches!(
            interpolate_polynomial(&[]),
            Err(Error::NoInterpolationNodes)
        ));
    }

    #[test]
    fn power_sums_low_degree() {
        assert_eq!(
            power_sum_polynomial(0),
            UniPolynomial::from_integers([1, 1])
        );
        assert_eq!(
            power_sum_polynomial(1),
            UniPolynomial::product_of_shifts(q(1, 2), &[1, 2])
        );
    }

    #[test]
    fn power_sum_twenty_low_coefficients() {
        let p = power_sum_polynomial(20);
        assert_eq!(p.degree(), Some(21));
        assert_eq!(p.coeff(0), q(1, 1));
        assert_eq!(p.coeff(1), q(-3528231, 6930));
        assert_eq!(p.coeff(2), q(1316700, 6930));
        assert_eq!(p.coeff(3), q(32027050, 6930));
        assert_eq!(p.eval_int(1), q(1048577, 1));
    }

    #[test]
    fn determinant_examples() {
        let det = |rows: Vec<Vec<i64>>| determinant(&IntMatrix::from_rows(&rows).unwrap()).unwrap();
        assert_eq!(det(vec![vec![5]]), BigInt::from(5));
        assert_eq!(det(vec![vec![1, 2], vec![3, 4]]), BigInt::from(-2));
        assert_eq!(det(vec![vec![6, 10], vec![1, 3]]), BigInt::from(8));
        assert_eq!(det(vec![vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(det(vec![vec![1, 2], vec![2, 4]]), BigInt::from(0));
        let m = IntMatrix::from_rows(&[vec![1i64, 2, 3]]).unwrap();
        assert!(matches!(determinant(&m), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(&4.into(), 2), BigInt::from(6));
        assert_eq!(binomial(&0.into(), 0), BigInt::from(1));
        assert_eq!(binomial(&10.into(), 3), BigInt::from(120));
        assert_eq!(binomial(&3.into(), 5), BigInt::from(0));
        assert_eq!(binomial(&(-2).into(), 3), BigInt::from(-4));
    }

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&q(4, -6)), "-2/3");
        assert_eq!(format_rational(&q(3, 1)), "3/1");
        assert_eq!(parse_rational("-2/3"), Some(q(-2, 3)));
        assert_eq!(parse_rational("7"), Some(q(7, 1)));
        assert_eq!(parse_rational("1/0"), None);
        let p = UniPolynomial::from_coeffs(vec![q(1, 1), q(3, 2), q(1, 2)]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["1/1","3/2","1/2"]"#);
        assert_eq!(p.to_string(), "1/2*n^2 + 3/2*n + 1");
        assert_eq!(UniPolynomial::zero().to_string(), "0");
    }
}
