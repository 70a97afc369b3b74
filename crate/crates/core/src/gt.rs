//! Gelfand–Tsetlin patterns.
//!
//! A pattern is stored in parallelogram form: `R` rows of equal width `n`,
//! listed bottom to top. Adjacent rows `lower`, `upper` interlace when
//! `upper[j] >= lower[j] >= upper[j + 1]` for every `j`. The bottom row is the
//! inner boundary `mu`, the top row the outer boundary `lambda`. Triangular
//! patterns with top row of width `m` are the case `mu = 0`, `R = m + 1`: the
//! interlacing conditions force the upper-right triangle to zero.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binomial, determinant, interpolate_samples, IntMatrix, UniPolynomial};
use crate::hull::{contains, partition_polytope, LatticePoint, LatticePointIndex};

/// A weakly decreasing sequence of non-negative integers of fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Partition(Vec<i64>);

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<i64>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<i64> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self(parts))
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn scaled(&self, n: i64) -> Self {
        Self(self.0.iter().map(|&p| p * n).collect())
    }

    pub fn padded(&self, n: usize) -> Result<Self> {
        if self.0.len() > n && self.0[n..].iter().any(|&p| p != 0) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: self.0.len(),
            });
        }
        let mut parts = self.0.clone();
        parts.resize(n, 0);
        Ok(Self(parts))
    }

    /// Componentwise `self >= mu`.
    pub fn contains(&self, mu: &Partition) -> bool {
        self.0.len() == mu.0.len() && self.0.iter().zip(&mu.0).all(|(a, b)| a >= b)
    }

    pub fn nonzero_parts(&self) -> usize {
        self.0.iter().filter(|&&p| p > 0).count()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// One prescribed sum per stored pattern row, bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RowSums(pub Vec<i64>);

impl RowSums {
    /// Checks that the outer entries agree with the boundary partitions.
    pub fn check_boundary(&self, lambda: &Partition, mu: &Partition) -> Result<()> {
        let (Some(&first), Some(&last)) = (self.0.first(), self.0.last()) else {
            return Err(Error::InconsistentRowSums("no row sums given".into()));
        };
        if first != mu.size() {
            return Err(Error::InconsistentRowSums(format!(
                "first row sum {first} differs from |mu| = {}",
                mu.size()
            )));
        }
        if last != lambda.size() {
            return Err(Error::InconsistentRowSums(format!(
                "last row sum {last} differs from |lambda| = {}",
                lambda.size()
            )));
        }
        Ok(())
    }

    pub fn scaled(&self, n: i64) -> Self {
        Self(self.0.iter().map(|&v| v * n).collect())
    }
}

/// An integer array of `R` rows of width `n`, bottom row first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GTPattern {
    rows: Vec<Vec<i64>>,
}

impl GTPattern {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let width = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != width) {
            return Err(Error::DimensionMismatch {
                expected: width,
                got: bad.len(),
            });
        }
        Ok(Self { rows })
    }

    /// Text format: a header line `R n`, then `R` lines of `n` integers,
    /// bottom row first. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
            let line = raw.split('#').next().unwrap_or("").trim();
            (!line.is_empty()).then_some((i + 1, line))
        });
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing \"R n\" header"))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::parse(line_no, format!("bad header {header:?}")))?;
        let [r, n] = dims[..] else {
            return Err(Error::parse(line_no, "header must be \"R n\""));
        };
        let mut rows = Vec::with_capacity(r);
        for (line_no, line) in lines {
            let row: Vec<i64> = line
                .split_whitespace()
                .map(str::parse)
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::parse(line_no, format!("bad row {line:?}")))?;
            if row.len() != n {
                return Err(Error::parse(
                    line_no,
                    format!("row has {} entries, expected {n}", row.len()),
                ));
            }
            rows.push(row);
        }
        if rows.len() != r {
            return Err(Error::parse(
                line_no,
                format!("header announces {r} rows, found {}", rows.len()),
            ));
        }
        Self::new(rows)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.row_count(), self.width());
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Row `i` counted from the bottom, starting at 0.
    pub fn row(&self, i: usize) -> &[i64] {
        &self.rows[i]
    }

    pub fn row_sums(&self) -> Vec<i64> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        self.rows[row][col] = value;
    }

    pub fn replace_row(&mut self, row: usize, values: Vec<i64>) -> Result<()> {
        if values.len() != self.width() {
            return Err(Error::DimensionMismatch {
                expected: self.width(),
                got: values.len(),
            });
        }
        self.rows[row] = values;
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i64, i64) -> i64) -> Result<Self> {
        if self.row_count() != other.row_count() || self.width() != other.width() {
            return Err(Error::DimensionMismatch {
                expected: self.row_count() * self.width(),
                got: other.row_count() * other.width(),
            });
        }
        Ok(Self {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect())
                .collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&v| v * k).collect())
                .collect(),
        }
    }
}

impl fmt::Display for GTPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows.iter().rev() {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
            writeln!(f, "{}", cells.join(""))?;
        }
        Ok(())
    }
}

/// A single failed condition of a pattern. Row numbers are 1-based from the
/// bottom, columns 1-based from the left.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GtViolation {
    /// `upper[col] >= lower[col]` fails between `row` and `row + 1`.
    Column {
        row: usize,
        col: usize,
        lower: i64,
        upper: i64,
    },
    /// `lower[col] >= upper[col + 1]` fails between `row` and `row + 1`.
    Diagonal {
        row: usize,
        col: usize,
        lower: i64,
        upper: i64,
    },
    TopRow {
        expected: Vec<i64>,
        found: Vec<i64>,
    },
    BottomRow {
        expected: Vec<i64>,
        found: Vec<i64>,
    },
    RowSum {
        row: usize,
        expected: i64,
        found: i64,
    },
}

impl fmt::Display for GtViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GtViolation::Column {
                row,
                col,
                lower,
                upper,
            } => write!(
                f,
                "row {} col {col}: x[{}][{col}] = {upper} < x[{row}][{col}] = {lower}",
                row + 1,
                row + 1
            ),
            GtViolation::Diagonal {
                row,
                col,
                lower,
                upper,
            } => write!(
                f,
                "row {row} col {col}: x[{row}][{col}] = {lower} < x[{}][{}] = {upper}",
                row + 1,
                col + 1
            ),
            GtViolation::TopRow { expected, found } => {
                write!(f, "top row {found:?} differs from lambda = {expected:?}")
            }
            GtViolation::BottomRow { expected, found } => {
                write!(f, "bottom row {found:?} differs from mu = {expected:?}")
            }
            GtViolation::RowSum {
                row,
                expected,
                found,
            } => {
                write!(f, "row {row} sums to {found}, expected {expected}")
            }
        }
    }
}

fn check_width(pattern: &GTPattern, lambda: &Partition, mu: &Partition) -> Result<()> {
    for len in [lambda.len(), mu.len()] {
        if len != pattern.width() {
            return Err(Error::DimensionMismatch {
                expected: pattern.width(),
                got: len,
            });
        }
    }
    Ok(())
}

/// Every failed interlacing, boundary and (optionally) row-sum condition.
pub fn gt_violations(
    pattern: &GTPattern,
    lambda: &Partition,
    mu: &Partition,
    sums: Option<&RowSums>,
) -> Result<Vec<GtViolation>> {
    check_width(pattern, lambda, mu)?;
    let mut out = Vec::new();
    let n = pattern.width();
    for (i, pair) in pattern.rows.windows(2).enumerate() {
        let (lower, upper) = (&pair[0], &pair[1]);
        for j in 0..n {
            if upper[j] < lower[j] {
                out.push(GtViolation::Column {
                    row: i + 1,
                    col: j + 1,
                    lower: lower[j],
                    upper: upper[j],
                });
            }
            if j + 1 < n && lower[j] < upper[j + 1] {
                out.push(GtViolation::Diagonal {
                    row: i + 1,
                    col: j + 1,
                    lower: lower[j],
                    upper: upper[j + 1],
                });
            }
        }
    }
    if let Some(top) = pattern.rows.last() {
        if top.as_slice() != lambda.parts() {
            out.push(GtViolation::TopRow {
                expected: lambda.0.clone(),
                found: top.clone(),
            });
        }
    }
    if let Some(bottom) = pattern.rows.first() {
        if bottom.as_slice() != mu.parts() {
            out.push(GtViolation::BottomRow {
                expected: mu.0.clone(),
                found: bottom.clone(),
            });
        }
    }
    if let Some(w) = sums {
        if w.0.len() != pattern.row_count() {
            return Err(Error::DimensionMismatch {
                expected: pattern.row_count(),
                got: w.0.len(),
            });
        }
        for (i, (found, &expected)) in pattern.row_sums().into_iter().zip(&w.0).enumerate() {
            if found != expected {
                out.push(GtViolation::RowSum {
                    row: i + 1,
                    expected,
                    found,
                });
            }
        }
    }
    Ok(out)
}

pub fn validate_gt(pattern: &GTPattern, lambda: &Partition, mu: &Partition) -> Result<bool> {
    Ok(gt_violations(pattern, lambda, mu, None)?.is_empty())
}

fn check_boundary(lambda: &Partition, mu: &Partition, rows: usize) -> Result<()> {
    if lambda.len() != mu.len() {
        return Err(Error::DimensionMismatch {
            expected: lambda.len(),
            got: mu.len(),
        });
    }
    if !lambda.contains(mu) {
        return Err(Error::NotContained {
            lambda: lambda.0.clone(),
            mu: mu.0.clone(),
        });
    }
    if rows == 0 {
        return Err(Error::InvalidArgument(
            "a pattern needs at least one row".into(),
        ));
    }
    Ok(())
}

/// Bounds for the row at height `h` (0 = bottom) of an `rows`-row pattern:
/// columns increase upward and diagonals decrease, so
/// `lambda[j + (top - h)] <= x[j] <= lambda[j]` and
/// `mu[j] <= x[j] <= mu[j - h]`.
fn row_bounds(lambda: &Partition, mu: &Partition, rows: usize, h: usize) -> Vec<(i64, i64)> {
    let n = lambda.len();
    let up = rows - 1 - h;
    (0..n)
        .map(|j| {
            let lo = mu.0[j].max(lambda.0.get(j + up).copied().unwrap_or(0));
            let hi = lambda.0[j].min(if j >= h { mu.0[j - h] } else { i64::MAX });
            (lo, hi)
        })
        .collect()
}

/// All rows interlacing above `lower` within `bounds`, with optional sum.
fn next_rows(lower: &[i64], bounds: &[(i64, i64)], sum: Option<i64>) -> Vec<Vec<i64>> {
    let n = lower.len();
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(n);
    // the most and least the columns from j onward can still contribute
    let lo_j = |j: usize| bounds[j].0.max(lower[j]);
    let hi_j = |j: usize| {
        let mut b = bounds[j].1;
        if j > 0 {
            b = b.min(lower[j - 1]);
        }
        b
    };
    let mut min_tail = vec![0i64; n + 1];
    let mut max_tail = vec![0i64; n + 1];
    for j in (0..n).rev() {
        min_tail[j] = min_tail[j + 1] + lo_j(j);
        max_tail[j] = max_tail[j + 1] + hi_j(j).max(lo_j(j));
    }
    #[allow(clippy::too_many_arguments)]
    fn rec(
        j: usize,
        partial: i64,
        acc: &mut Vec<i64>,
        lo: &dyn Fn(usize) -> i64,
        hi: &dyn Fn(usize) -> i64,
        sum: Option<i64>,
        tails: (&[i64], &[i64]),
        out: &mut Vec<Vec<i64>>,
    ) {
        let n = tails.0.len() - 1;
        if j == n {
            if sum.is_none_or(|s| s == partial) {
                out.push(acc.clone());
            }
            return;
        }
        if let Some(s) = sum {
            if partial + tails.0[j] > s || partial + tails.1[j] < s {
                return;
            }
        }
        for v in lo(j)..=hi(j) {
            acc.push(v);
            rec(j + 1, partial + v, acc, lo, hi, sum, tails, out);
            acc.pop();
        }
    }
    rec(
        0,
        0,
        &mut acc,
        &lo_j,
        &hi_j,
        sum,
        (&min_tail, &max_tail),
        &mut out,
    );
    out
}

fn interlaces(lower: &[i64], upper: &[i64]) -> bool {
    let n = lower.len();
    (0..n).all(|j| upper[j] >= lower[j] && (j + 1 == n || lower[j] >= upper[j + 1]))
}

/// Counts patterns row by row, merging equal rows; `sums` optionally fixes
/// every row's sum.
fn count_patterns(
    lambda: &Partition,
    mu: &Partition,
    rows: usize,
    sums: Option<&RowSums>,
) -> BigInt {
    if rows == 1 {
        return BigInt::from((lambda == mu) as u32);
    }
    let mut layer: BTreeMap<Vec<i64>, BigInt> = BTreeMap::from([(mu.0.clone(), BigInt::one())]);
    for h in 1..rows - 1 {
        let bounds = row_bounds(lambda, mu, rows, h);
        let sum = sums.map(|w| w.0[h]);
        let mut next: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (row, count) in &layer {
            for candidate in next_rows(row, &bounds, sum) {
                *next.entry(candidate).or_insert_with(BigInt::zero) += count;
            }
        }
        layer = next;
    }
    layer
        .iter()
        .filter(|(row, _)| interlaces(row, &lambda.0))
        .map(|(_, c)| c)
        .sum()
}

/// Number of integer patterns with `rows` rows, top row `lambda` and bottom
/// row `mu`. With `rows = m + 1` this is `s_{lambda/mu}(1^m)`.
pub fn enumerate_gt(lambda: &Partition, mu: &Partition, rows: usize) -> Result<BigInt> {
    check_boundary(lambda, mu, rows)?;
    Ok(count_patterns(lambda, mu, rows, None))
}

fn rows_from_sums(lambda: &Partition, mu: &Partition, w: &RowSums) -> Result<usize> {
    w.check_boundary(lambda, mu)?;
    let rows = w.0.len();
    check_boundary(lambda, mu, rows)?;
    Ok(rows)
}

/// Number of patterns with boundary `(lambda, mu)` and row sums `w`: the
/// skew Kostka number `K_{lambda/mu, w'}` where `w'` lists the increments.
pub fn count_gt_with_rowsums(lambda: &Partition, mu: &Partition, w: &RowSums) -> Result<BigInt> {
    let rows = rows_from_sums(lambda, mu, w)?;
    Ok(count_patterns(lambda, mu, rows, Some(w)))
}

/// Every pattern with boundary `(lambda, mu)` and row sums `w`, in
/// lexicographic order of their rows read bottom to top.
pub fn enumerate_gt_with_rowsums(
    lambda: &Partition,
    mu: &Partition,
    w: &RowSums,
) -> Result<Vec<GTPattern>> {
    let rows = rows_from_sums(lambda, mu, w)?;
    if rows == 1 {
        return Ok(if lambda == mu {
            vec![GTPattern {
                rows: vec![mu.0.clone()],
            }]
        } else {
            Vec::new()
        });
    }
    let mut out = Vec::new();
    let mut stack = vec![mu.0.clone()];
    fn rec(
        stack: &mut Vec<Vec<i64>>,
        lambda: &Partition,
        mu: &Partition,
        rows: usize,
        w: &RowSums,
        out: &mut Vec<GTPattern>,
    ) {
        let h = stack.len();
        let lower = stack.last().expect("non-empty").clone();
        if h == rows - 1 {
            if interlaces(&lower, &lambda.0) {
                let mut full = stack.clone();
                full.push(lambda.0.clone());
                out.push(GTPattern { rows: full });
            }
            return;
        }
        let bounds = row_bounds(lambda, mu, rows, h);
        for candidate in next_rows(&lower, &bounds, Some(w.0[h])) {
            stack.push(candidate);
            rec(stack, lambda, mu, rows, w, out);
            stack.pop();
        }
    }
    rec(&mut stack, lambda, mu, rows, w, &mut out);
    Ok(out)
}

/// `h_k(1^m) = C(m + k - 1, k)`, zero for negative `k`.
fn complete_homogeneous_ones(k: i64, m: usize) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    binomial(&BigInt::from(m as i64 + k - 1), k as u64)
}

/// `s_{lambda/mu}(1^m)` by the Jacobi–Trudi determinant
/// `det(h_{lambda_i - mu_j - i + j}(1^m))`.
pub fn skew_schur_ones(lambda: &Partition, mu: &Partition, m: usize) -> Result<BigInt> {
    let n = lambda.len().max(mu.len());
    let lam = lambda.padded(n)?;
    let mu = mu.padded(n)?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let matrix = IntMatrix::from_fn(n, n, |i, j| {
        complete_homogeneous_ones(lam.0[i] - mu.0[j] - i as i64 + j as i64, m)
    });
    determinant(&matrix)
}

/// `s_lambda(1^m)` by the Weyl dimension formula
/// `prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i)`.
pub fn weyl_dimension(lambda: &Partition, m: usize) -> BigInt {
    if lambda.nonzero_parts() > m {
        return BigInt::zero();
    }
    let mut parts = lambda.0.clone();
    parts.resize(m.max(parts.len()), 0);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..m {
        for j in i + 1..m {
            num *= parts[i] - parts[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// Ehrhart polynomial of the GT polytope with `m + 1` rows, from
/// `n -> s_{n lambda / n mu}(1^m)` sampled at `n = 0..=D` where `D` counts
/// the interior cells; one more sample is checked against the interpolant.
///
/// A pattern with real entries rounds down to an integer one, so the
/// polytope is empty exactly when there is no pattern at `n = 1`.
pub fn ehrhart_gt(lambda: &Partition, mu: &Partition, m: usize) -> Result<UniPolynomial> {
    check_boundary(lambda, mu, m + 1)?;
    let d = m.saturating_sub(1) * lambda.len();
    let samples: Vec<BigInt> = (0..=d as i64 + 1)
        .map(|n| skew_schur_ones(&lambda.scaled(n), &mu.scaled(n), m))
        .collect::<Result<_>>()?;
    if samples[1].is_zero() {
        return Err(Error::EmptyPolytope);
    }
    let poly = interpolate_samples(&samples[..=d])?;
    let predicted = poly.eval_int(d as i64 + 1);
    let actual = BigRational::from_integer(samples[d + 1].clone());
    if predicted != actual {
        return Err(Error::NonPolynomialFit {
            at: d + 1,
            predicted: predicted.to_string(),
            actual: actual.to_string(),
        });
    }
    Ok(poly)
}

/// Default sample bound for [`stretched_kostka`]: interior cells minus one
/// sum constraint per interior row.
pub fn kostka_degree_bound(rows: usize, width: usize) -> usize {
    rows.saturating_sub(2) * width.saturating_sub(1)
}

/// Interpolates `n -> #{patterns with boundary (n lambda, n mu), sums n w}`
/// at `n = 0..=N` and checks the interpolant at `N + 1`.
pub fn stretched_kostka(
    lambda: &Partition,
    mu: &Partition,
    w: &RowSums,
    samples: Option<usize>,
) -> Result<UniPolynomial> {
    let rows = rows_from_sums(lambda, mu, w)?;
    let n_max = samples.unwrap_or_else(|| kostka_degree_bound(rows, lambda.len()));
    let counts: Vec<BigInt> = (0..=n_max as i64 + 1)
        .map(|n| count_gt_with_rowsums(&lambda.scaled(n), &mu.scaled(n), &w.scaled(n)))
        .collect::<Result<_>>()?;
    let poly = interpolate_samples(&counts[..=n_max])?;
    let predicted = poly.eval_int(n_max as i64 + 1);
    let actual = BigRational::from_integer(counts[n_max + 1].clone());
    if predicted != actual {
        return Err(Error::NonPolynomialFit {
            at: n_max + 1,
            predicted: predicted.to_string(),
            actual: actual.to_string(),
        });
    }
    Ok(poly)
}

/// How a cell of the face pattern is determined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "region", content = "index")]
pub enum FaceRegion {
    /// Equal to the dilation factor (the entries equal to 1 before dilating).
    One,
    Zero,
    /// The region shared by all cells forced equal to `z`.
    Shared,
    /// Free diagonal cell carrying `x_i` (1-based).
    Free(usize),
}

/// The face of the triangular GT polytope with top row `(1^l, 0^{l+1})`
/// whose lattice points are the order-preserving maps on the claw with `l`
/// leaves.
///
/// Cells are addressed by depth `r` below the top row and position `j`
/// within the row; the triangular row at depth `r` has `2l + 1 - r` cells.
/// Drawn with horizontal offset `r + 2j`, cells left of the central column
/// are pinned to 1, the cells on the central column below the top carry the
/// free values `x_1, ..., x_l` at every second depth, the cells right of the
/// centre inside the cone spanned by the top zeros stay 0, and the rest
/// share a single value `z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GtFace {
    pub leaves: usize,
    /// `regions[r][j]` for depth `r`.
    pub regions: Vec<Vec<FaceRegion>>,
}

impl GtFace {
    pub fn claw(leaves: usize) -> Result<Self> {
        if leaves == 0 {
            return Err(Error::InvalidArgument(
                "the face needs at least one leaf".into(),
            ));
        }
        let width = 2 * leaves + 1;
        let centre = 2 * leaves;
        let regions = (0..width)
            .map(|r| {
                (0..width - r)
                    .map(|j| {
                        let x = r + 2 * j;
                        if x < centre {
                            FaceRegion::One
                        } else if x == centre {
                            if r == 0 {
                                FaceRegion::Zero
                            } else {
                                FaceRegion::Free(r / 2)
                            }
                        } else if r <= leaves && x >= centre + r {
                            FaceRegion::Zero
                        } else {
                            FaceRegion::Shared
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(Self { leaves, regions })
    }

    pub fn width(&self) -> usize {
        2 * self.leaves + 1
    }

    pub fn has_shared_region(&self) -> bool {
        self.regions
            .iter()
            .flatten()
            .any(|&r| r == FaceRegion::Shared)
    }

    /// Top row of the dilated face, `n (1^l, 0^{l+1})`.
    pub fn top_row(&self, n: i64) -> Partition {
        let mut parts = vec![n; self.leaves];
        parts.resize(self.width(), 0);
        Partition(parts)
    }

    /// The parallelogram pattern with the given region values; triangular
    /// depth `r` becomes stored row `width - r`, padded with zeros.
    pub fn pattern(&self, n: i64, z: i64, xs: &[i64]) -> GTPattern {
        let w = self.width();
        let mut rows = vec![vec![0i64; w]; w + 1];
        for (r, cells) in self.regions.iter().enumerate() {
            for (j, region) in cells.iter().enumerate() {
                rows[w - r][j] = match *region {
                    FaceRegion::One => n,
                    FaceRegion::Zero => 0,
                    FaceRegion::Shared => z,
                    FaceRegion::Free(i) => xs[i - 1],
                };
            }
        }
        GTPattern { rows }
    }
}

/// Lattice points in the `n`-th dilate of the claw face: assignments of the
/// region values in `0..=n` whose pattern is a valid GT pattern.
///
/// The shared region only has cells once `l >= 2`; for `l = 1` the face is a
/// segment and `z` is not a coordinate of it.
pub fn face_example_count(leaves: usize, n: usize) -> Result<BigInt> {
    let face = GtFace::claw(leaves)?;
    let n = n as i64;
    let lambda = face.top_row(n);
    let mu = Partition::zeros(face.width());
    let shared = face.has_shared_region();
    let mut values = vec![0i64; leaves + usize::from(shared)];
    let mut count = BigInt::zero();
    loop {
        let pattern = if shared {
            face.pattern(n, values[0], &values[1..])
        } else {
            face.pattern(n, 0, &values)
        };
        if validate_gt(&pattern, &lambda, &mu)? {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == values.len() {
                return Ok(count);
            }
            values[i] += 1;
            if values[i] <= n {
                break;
            }
            values[i] = 0;
            i += 1;
        }
    }
}

/// Inputs of the two-term non-decomposability check for a row-sum
/// restricted GT polytope: a pattern `G` of the doubled polytope, four
/// patterns averaging to it, and the row of `G` that cannot be split.
#[derive(Clone, Debug)]
pub struct CounterexampleInput {
    pub lambda: Partition,
    pub mu: Partition,
    pub sums: RowSums,
    pub doubled: GTPattern,
    pub parts: Vec<GTPattern>,
    pub key_row: Vec<i64>,
}

/// Boundary data of the shipped non-IDP instance.
pub fn nonidp_lambda() -> Partition {
    Partition(vec![4, 4, 4, 4, 3, 3, 2, 2, 2])
}

pub fn nonidp_mu() -> Partition {
    Partition(vec![2, 0, 0, 0, 0, 0, 0, 0, 0])
}

pub fn nonidp_row_sums() -> RowSums {
    RowSums(vec![
        2, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 16, 18, 20, 22, 23, 25, 27, 28,
    ])
}

pub fn nonidp_key_row() -> Vec<i64> {
    vec![6, 6, 6, 6, 4, 4, 2, 1, 1]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub pass: bool,
    pub details: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub checks: Vec<CheckOutcome>,
    /// 1-based row of `G` (from the bottom) holding the key row, if found.
    pub key_row_index: Option<usize>,
    /// `(a, b)` of the partition polytope the key row is tested against.
    pub partition_polytope: Option<(usize, usize)>,
    #[serde(with = "crate::exact::serde_strings::u64_string")]
    pub examined: u64,
    pub split: Option<Vec<LatticePoint>>,
}

impl CounterexampleReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Checks that `G` is an integer point of the doubled polytope with no
/// two-term integer decomposition:
///
/// 1. each part is a valid pattern with boundary `(lambda, mu)` and sums `w`;
/// 2. `2 G` equals the sum of the parts, cell by cell;
/// 3. the key row of `G` is a point of `2 P_{a,b}` (with `a` its row's
///    prescribed sum and `b` the width) that is not a sum of two partitions
///    of `a` into at most `b` parts. Any split of `G` would split that row.
pub fn verify_counterexample(input: &CounterexampleInput) -> Result<CounterexampleReport> {
    let mut checks = Vec::new();

    let mut details = Vec::new();
    for (i, part) in input.parts.iter().enumerate() {
        for v in gt_violations(part, &input.lambda, &input.mu, Some(&input.sums))? {
            details.push(format!("pattern {}: {v}", i + 1));
        }
    }
    checks.push(CheckOutcome {
        name: "parts are patterns with the given boundary and row sums".into(),
        pass: details.is_empty() && !input.parts.is_empty(),
        details,
    });

    let mut details = Vec::new();
    let doubled = input.doubled.scaled(2);
    let mut total = input
        .parts
        .first()
        .map(|p| GTPattern::scaled(p, 0))
        .unwrap_or_else(|| doubled.scaled(0));
    for part in &input.parts {
        total = total.add(part)?;
    }
    if total.row_count() != doubled.row_count() || total.width() != doubled.width() {
        details.push("pattern dimensions differ".into());
    } else {
        for (i, (a, b)) in doubled.rows.iter().zip(&total.rows).enumerate() {
            for (j, (x, y)) in a.iter().zip(b).enumerate() {
                if x != y {
                    details.push(format!(
                        "row {} col {}: 2 G = {x} but the parts sum to {y}",
                        i + 1,
                        j + 1
                    ));
                }
            }
        }
    }
    for v in gt_violations(
        &input.doubled,
        &input.lambda.scaled(2),
        &input.mu.scaled(2),
        Some(&input.sums.scaled(2)),
    )? {
        details.push(format!("G in the doubled polytope: {v}"));
    }
    checks.push(CheckOutcome {
        name: "G is the average of the parts".into(),
        pass: details.is_empty(),
        details,
    });

    let mut details = Vec::new();
    let rows: Vec<usize> = (0..input.doubled.row_count())
        .filter(|&i| input.doubled.row(i) == input.key_row.as_slice())
        .collect();
    let mut report = CounterexampleReport {
        checks: Vec::new(),
        key_row_index: None,
        partition_polytope: None,
        examined: 0,
        split: None,
    };
    let mut pass = false;
    match rows[..] {
        [idx] => {
            report.key_row_index = Some(idx + 1);
            let a = *input
                .sums
                .0
                .get(idx)
                .ok_or_else(|| Error::DimensionMismatch {
                    expected: input.doubled.row_count(),
                    got: input.sums.0.len(),
                })?;
            let b = input.doubled.width();
            report.partition_polytope = Some((a as usize, b));
            let poly = partition_polytope(a as usize, b)?;
            let row = LatticePoint::new(input.key_row.clone());
            let cert = contains(&poly, &row.divided(2))?;
            if !cert.is_inside() {
                details.push(format!("row {} / 2 is outside P_({a},{b})", idx + 1));
            }
            let split = LatticePointIndex::new(&poly)?.decompose(&row, 2);
            report.examined = split.examined;
            match &split.parts {
                Some(parts) => details.push(format!(
                    "row {} splits as {}",
                    idx + 1,
                    parts
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" + ")
                )),
                None => details.push(format!(
                    "no split of row {} into two points of P_({a},{b}); {} candidates examined",
                    idx + 1,
                    split.examined
                )),
            }
            pass = cert.is_inside() && split.parts.is_none();
            report.split = split.parts;
        }
        [] => details.push(format!("no row of G equals {:?}", input.key_row)),
        _ => details.push(format!(
            "rows {:?} all equal {:?}; the key row must be unique",
            rows.iter().map(|i| i + 1).collect::<Vec<_>>(),
            input.key_row
        )),
    }
    checks.push(CheckOutcome {
        name: "key row of G has no two-term split".into(),
        pass,
        details,
    });
    report.checks = checks;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::power_sum_polynomial;

    fn part(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn validation_examples() {
        let single = GTPattern::new(vec![vec![3, 1]]).unwrap();
        assert!(validate_gt(&single, &part(&[3, 1]), &part(&[3, 1])).unwrap());
        let two = GTPattern::new(vec![vec![1, 0], vec![2, 0]]).unwrap();
        assert!(validate_gt(&two, &part(&[2, 0]), &part(&[1, 0])).unwrap());
        let bad = GTPattern::new(vec![vec![0, 2], vec![2, 0]]).unwrap();
        let lam = part(&[2, 0]);
        let v = gt_violations(&bad, &lam, &Partition(vec![0, 2]), None).unwrap();
        assert_eq!(
            v,
            vec![GtViolation::Column {
                row: 1,
                col: 2,
                lower: 2,
                upper: 0
            }]
        );
        let skew = GTPattern::new(vec![vec![1, 0], vec![2, 2]]).unwrap();
        let v = gt_violations(&skew, &part(&[2, 2]), &part(&[1, 0]), None).unwrap();
        assert!(v.iter().any(|x| matches!(x, GtViolation::Diagonal { .. })));
        assert!(validate_gt(&two, &part(&[2, 0, 0]), &part(&[1, 0])).is_err());
    }

    #[test]
    fn parse_round_trip() {
        let p = GTPattern::parse("# c\n2 2\n1 0\n2 0\n").unwrap();
        assert_eq!(p.row(1), &[2, 0]);
        assert_eq!(GTPattern::parse(&p.to_text()).unwrap(), p);
        assert!(GTPattern::parse("2 2\n1 0\n").is_err());
        assert!(GTPattern::parse("1 2\n1 0 0\n").is_err());
    }

    #[test]
    fn small_counts() {
        let c = part(&[2, 2]);
        assert_eq!(enumerate_gt(&c, &c, 3).unwrap(), BigInt::from(1));
        let lam = part(&[1, 0]);
        let zero = Partition::zeros(2);
        assert_eq!(enumerate_gt(&lam, &zero, 2).unwrap(), BigInt::from(1));
        assert_eq!(enumerate_gt(&lam, &zero, 3).unwrap(), BigInt::from(2));
        assert_eq!(
            enumerate_gt(&part(&[2, 1, 0]), &Partition::zeros(3), 4).unwrap(),
            BigInt::from(8)
        );
        assert!(matches!(
            enumerate_gt(&zero, &lam, 3),
            Err(Error::NotContained { .. })
        ));
    }

    #[test]
    fn schur_and_weyl() {
        assert_eq!(
            skew_schur_ones(&part(&[1]), &part(&[0]), 2).unwrap(),
            2.into()
        );
        assert_eq!(
            skew_schur_ones(&part(&[2, 1]), &part(&[0, 0]), 3).unwrap(),
            BigInt::from(8)
        );
        assert_eq!(weyl_dimension(&Partition::zeros(3), 3), BigInt::one());
        assert_eq!(weyl_dimension(&part(&[1, 0]), 2), BigInt::from(2));
        assert_eq!(weyl_dimension(&part(&[1, 1, 1]), 2), BigInt::zero());
    }

    #[test]
    fn skew_schur_matches_enumeration_sweep() {
        let mut boxes = Vec::new();
        for a in 0..=3 {
            for b in 0..=a {
                for c in 0..=b {
                    boxes.push(part(&[a, b, c]));
                }
            }
        }
        for lam in &boxes {
            for mu in boxes.iter().filter(|mu| lam.contains(mu)) {
                for m in 1..=3 {
                    assert_eq!(
                        enumerate_gt(lam, mu, m + 1).unwrap(),
                        skew_schur_ones(lam, mu, m).unwrap(),
                        "{lam} / {mu}, m = {m}"
                    );
                }
            }
        }
    }

    #[test]
    fn ehrhart_examples() {
        let lam = part(&[1, 0]);
        let zero = Partition::zeros(2);
        assert_eq!(
            ehrhart_gt(&lam, &zero, 2).unwrap(),
            UniPolynomial::from_integers([1, 1])
        );
        let c = part(&[2, 2, 2]);
        assert_eq!(ehrhart_gt(&c, &c, 3).unwrap(), UniPolynomial::one());
        let p = ehrhart_gt(&part(&[2, 1, 0]), &Partition::zeros(3), 3).unwrap();
        assert!(p.has_nonnegative_coefficients());
        assert_eq!(p.eval_int(1), BigRational::from_integer(8.into()));
    }

    #[test]
    fn row_sum_enumeration() {
        let c = part(&[1, 1]);
        let all = enumerate_gt_with_rowsums(&c, &c, &RowSums(vec![2, 2, 2])).unwrap();
        assert_eq!(all.len(), 1);
        let lam = part(&[2, 0]);
        let zero = Partition::zeros(2);
        let mid = enumerate_gt_with_rowsums(&lam, &zero, &RowSums(vec![0, 1, 2])).unwrap();
        assert_eq!(mid.len(), 1);
        assert_eq!(mid[0].row(1), &[1, 0]);
        let lam = part(&[2, 1, 0]);
        let zero = Partition::zeros(3);
        let w = RowSums(vec![0, 1, 2, 3]);
        let pats = enumerate_gt_with_rowsums(&lam, &zero, &w).unwrap();
        assert_eq!(pats.len(), 2);
        for p in &pats {
            assert!(gt_violations(p, &lam, &zero, Some(&w)).unwrap().is_empty());
        }
        assert_eq!(
            count_gt_with_rowsums(&lam, &zero, &w).unwrap(),
            BigInt::from(2)
        );
        assert!(matches!(
            enumerate_gt_with_rowsums(&lam, &zero, &RowSums(vec![1, 1, 2, 3])),
            Err(Error::InconsistentRowSums(_))
        ));
    }

    #[test]
    fn stretched_kostka_small() {
        let p = stretched_kostka(&part(&[1]), &part(&[0]), &RowSums(vec![0, 1]), None).unwrap();
        assert_eq!(p, UniPolynomial::one());
        let lam = part(&[2, 1, 0]);
        let zero = Partition::zeros(3);
        let p = stretched_kostka(&lam, &zero, &RowSums(vec![0, 1, 2, 3]), None).unwrap();
        assert_eq!(p.eval_int(1), BigRational::from_integer(2.into()));
        // K_{(2n,n),(n,n,n)} = n + 1
        assert_eq!(p, UniPolynomial::from_integers([1, 1]));
    }

    #[test]
    fn too_few_samples_are_reported() {
        let lam = part(&[2, 1, 0]);
        let zero = Partition::zeros(3);
        let err = stretched_kostka(&lam, &zero, &RowSums(vec![0, 1, 2, 3]), Some(0)).unwrap_err();
        assert!(err
            .to_string()
            .contains("insufficient samples / non-polynomial fit"));
    }

    #[test]
    fn face_matches_power_sums() {
        assert_eq!(face_example_count(2, 2).unwrap(), BigInt::from(14));
        for l in 2..=4usize {
            let p = power_sum_polynomial(l as u32);
            for n in 0..=4usize {
                assert_eq!(
                    BigRational::from_integer(face_example_count(l, n).unwrap()),
                    p.eval_int(n as i64),
                    "l = {l}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn single_leaf_face_is_a_segment() {
        // three rows leave no room for the shared region
        assert!(!GtFace::claw(1).unwrap().has_shared_region());
        for n in 0..=4usize {
            assert_eq!(face_example_count(1, n).unwrap(), BigInt::from(n + 1));
        }
    }

    #[test]
    fn face_regions_cover_every_free_variable() {
        for l in 1..=4 {
            let face = GtFace::claw(l).unwrap();
            for i in 1..=l {
                let hits = face
                    .regions
                    .iter()
                    .flatten()
                    .filter(|&&r| r == FaceRegion::Free(i))
                    .count();
                assert_eq!(hits, 1);
            }
            // at dilate 1 the pattern with z = x_i = 1 is a vertex of the face
            let pattern = face.pattern(1, 1, &vec![1; l]);
            assert!(validate_gt(&pattern, &face.top_row(1), &Partition::zeros(2 * l + 1)).unwrap());
        }
    }
}
