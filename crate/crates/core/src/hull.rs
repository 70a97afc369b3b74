//! Polytopes given by integer generators: exact membership with checkable
//! certificates, lattice points of dilates, and the integer decomposition
//! property.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::serde_strings;
use crate::simplex::{feasibility, Feasibility};

/// An integer point. Coordinates are machine integers: every polytope handled
/// here lives in a small box.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(#[serde(with = "serde_strings::i64s")] pub Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self(self.0.iter().map(|&c| c * k).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// `self / k` as a rational point.
    pub fn divided(&self, k: i64) -> Vec<BigRational> {
        self.0
            .iter()
            .map(|&c| BigRational::new(c.into(), k.into()))
            .collect()
    }

    pub fn to_rational(&self) -> Vec<BigRational> {
        self.divided(1)
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl std::fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Convex hull of a non-empty list of integer generators of one dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VPolytope {
    dim: usize,
    generators: Vec<LatticePoint>,
}

impl VPolytope {
    pub fn new(generators: Vec<LatticePoint>) -> Result<Self> {
        let dim = generators.first().ok_or(Error::EmptyPolytope)?.dim();
        if let Some(bad) = generators.iter().find(|g| g.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: bad.dim(),
            });
        }
        Ok(Self { dim, generators })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[LatticePoint] {
        &self.generators
    }

    fn coordinate_range(&self, c: usize) -> (i64, i64) {
        let values = self.generators.iter().map(|g| g.0[c]);
        (
            values.clone().min().expect("non-empty"),
            values.max().expect("non-empty"),
        )
    }

    fn all_weakly_decreasing(&self) -> bool {
        self.generators
            .iter()
            .all(LatticePoint::is_weakly_decreasing)
    }

    fn common_sum(&self) -> Option<i64> {
        let first: i64 = self.generators[0].0.iter().sum();
        self.generators
            .iter()
            .all(|g| g.0.iter().sum::<i64>() == first)
            .then_some(first)
    }
}

/// Partitions of `a` into at most `b` parts, zero-padded to length `b`,
/// in decreasing lexicographic order.
pub fn partitions_padded(a: usize, b: usize) -> Vec<LatticePoint> {
    fn rec(rest: i64, max: i64, slots: usize, acc: &mut Vec<i64>, out: &mut Vec<LatticePoint>) {
        if slots == 0 {
            if rest == 0 {
                out.push(LatticePoint(acc.clone()));
            }
            return;
        }
        // the remaining slots can absorb at most max * slots
        if rest > max * slots as i64 {
            return;
        }
        for p in (0..=rest.min(max)).rev() {
            acc.push(p);
            rec(rest - p, p, slots - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(a as i64, a as i64, b, &mut Vec::new(), &mut out);
    out
}

/// `P_{a,b}`: convex hull of the partitions of `a` with at most `b` parts.
pub fn partition_polytope(a: usize, b: usize) -> Result<VPolytope> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument(format!(
            "partition polytope needs a, b >= 1 (got a = {a}, b = {b})"
        )));
    }
    VPolytope::new(partitions_padded(a, b))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedGenerator {
    pub generator: usize,
    pub point: LatticePoint,
    #[serde(with = "serde_strings::rational")]
    pub weight: BigRational,
}

/// Outcome of a membership query, carrying its own proof.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum MembershipCertificate {
    /// The point equals `sum weight * generator`.
    Inside { weights: Vec<WeightedGenerator> },
    /// `functional · x > offset >= functional · v` for every generator `v`.
    Outside {
        #[serde(with = "serde_strings::ints")]
        functional: Vec<BigInt>,
        #[serde(with = "serde_strings::rational")]
        offset: BigRational,
    },
}

impl MembershipCertificate {
    pub fn is_inside(&self) -> bool {
        matches!(self, MembershipCertificate::Inside { .. })
    }

    /// Re-checks the certificate against `poly` and `point` with exact
    /// arithmetic only.
    pub fn validate(&self, poly: &VPolytope, point: &[BigRational]) -> bool {
        if point.len() != poly.dim() {
            return false;
        }
        match self {
            MembershipCertificate::Inside { weights } => {
                let mut total = BigRational::zero();
                let mut sum = vec![BigRational::zero(); poly.dim()];
                for w in weights {
                    if w.weight.is_negative() || poly.generators.get(w.generator) != Some(&w.point)
                    {
                        return false;
                    }
                    total += &w.weight;
                    for (s, &c) in sum.iter_mut().zip(&w.point.0) {
                        *s += &w.weight * BigInt::from(c);
                    }
                }
                total.is_one() && sum.as_slice() == point
            }
            MembershipCertificate::Outside { functional, offset } => {
                if functional.len() != poly.dim() {
                    return false;
                }
                let at = |x: &[BigRational]| -> BigRational {
                    x.iter()
                        .zip(functional)
                        .map(|(xi, fi)| xi * fi)
                        .fold(BigRational::zero(), |a, b| a + b)
                };
                at(point) > *offset
                    && poly
                        .generators
                        .iter()
                        .all(|g| at(&g.to_rational()) <= *offset)
            }
        }
    }
}

/// Exact membership of a rational point in the convex hull of the generators.
pub fn contains(poly: &VPolytope, point: &[BigRational]) -> Result<MembershipCertificate> {
    if point.len() != poly.dim() {
        return Err(Error::DimensionMismatch {
            expected: poly.dim(),
            got: point.len(),
        });
    }
    let n = poly.generators.len();
    // coordinate rows scaled by the point's denominators, then sum(λ) = 1
    let mut a = Vec::with_capacity(poly.dim() + 1);
    let mut b = Vec::with_capacity(poly.dim() + 1);
    let mut scales = Vec::with_capacity(poly.dim() + 1);
    for (c, x) in point.iter().enumerate() {
        let q = x.denom().clone();
        a.push(
            poly.generators
                .iter()
                .map(|g| &q * BigInt::from(g.0[c]))
                .collect::<Vec<_>>(),
        );
        b.push(x.numer().clone());
        scales.push(q);
    }
    a.push(vec![BigInt::one(); n]);
    b.push(BigInt::one());
    scales.push(BigInt::one());

    let cert = match feasibility(&a, &b) {
        Feasibility::Feasible {
            numerators,
            denominator,
        } => MembershipCertificate::Inside {
            weights: numerators
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(j, v)| WeightedGenerator {
                    generator: j,
                    point: poly.generators[j].clone(),
                    weight: BigRational::new(v, denominator.clone()),
                })
                .collect(),
        },
        Feasibility::Infeasible { numerators, .. } => {
            // y·(q_c v_c) + y_last <= 0 for generators, y·(q_c x_c) + y_last > 0
            let d = poly.dim();
            let mut functional: Vec<BigInt> = (0..d).map(|c| &numerators[c] * &scales[c]).collect();
            let g = functional.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
            if !g.is_zero() && !g.is_one() {
                for v in &mut functional {
                    *v /= &g;
                }
            }
            let offset = poly
                .generators
                .iter()
                .map(|v| {
                    v.0.iter()
                        .zip(&functional)
                        .map(|(&c, f)| f * BigInt::from(c))
                        .sum::<BigInt>()
                })
                .max()
                .expect("non-empty");
            MembershipCertificate::Outside {
                functional,
                offset: BigRational::from_integer(offset),
            }
        }
    };
    if !cert.validate(poly, point) {
        return Err(Error::Internal(format!(
            "membership certificate failed re-validation: {cert:?}"
        )));
    }
    Ok(cert)
}

pub fn contains_point(poly: &VPolytope, point: &LatticePoint, k: i64) -> Result<bool> {
    Ok(contains(poly, &point.divided(k))?.is_inside())
}

/// Integer vectors in the `k`-scaled bounding box that satisfy the cheap
/// necessary conditions implied by the generators (weak decrease, fixed sum).
fn candidates(poly: &VPolytope, k: i64) -> Vec<LatticePoint> {
    let d = poly.dim();
    let ranges: Vec<(i64, i64)> = (0..d)
        .map(|c| {
            let (lo, hi) = poly.coordinate_range(c);
            (lo * k, hi * k)
        })
        .collect();
    let decreasing = poly.all_weakly_decreasing();
    let sum = poly.common_sum().map(|s| s * k);
    // suffix bounds on what the remaining coordinates can contribute
    let mut min_tail = vec![0i64; d + 1];
    let mut max_tail = vec![0i64; d + 1];
    for c in (0..d).rev() {
        min_tail[c] = min_tail[c + 1] + ranges[c].0;
        max_tail[c] = max_tail[c + 1] + ranges[c].1;
    }
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(d);
    #[allow(clippy::too_many_arguments)]
    fn rec(
        c: usize,
        partial: i64,
        acc: &mut Vec<i64>,
        ranges: &[(i64, i64)],
        decreasing: bool,
        sum: Option<i64>,
        min_tail: &[i64],
        max_tail: &[i64],
        out: &mut Vec<LatticePoint>,
    ) {
        let d = ranges.len();
        if c == d {
            if sum.is_none_or(|s| s == partial) {
                out.push(LatticePoint(acc.clone()));
            }
            return;
        }
        let (lo, mut hi) = ranges[c];
        if decreasing {
            if let Some(&prev) = acc.last() {
                hi = hi.min(prev);
            }
        }
        for v in lo..=hi {
            if let Some(s) = sum {
                let rest = s - partial - v;
                if rest < min_tail[c + 1] || rest > max_tail[c + 1] {
                    continue;
                }
                if decreasing && rest > v * (d - c - 1) as i64 {
                    continue;
                }
            }
            acc.push(v);
            rec(
                c + 1,
                partial + v,
                acc,
                ranges,
                decreasing,
                sum,
                min_tail,
                max_tail,
                out,
            );
            acc.pop();
        }
    }
    rec(
        0, 0, &mut acc, &ranges, decreasing, sum, &min_tail, &max_tail, &mut out,
    );
    out
}

const SUMSET_LIMIT: usize = 4_000_000;

/// Sums of `k` generators (with repetition); each lies in `k P`, so these
/// candidates need no LP. Skipped when the set would grow too large.
fn generator_sums(poly: &VPolytope, k: usize) -> Option<HashSet<LatticePoint>> {
    let mut sums: HashSet<LatticePoint> = HashSet::from([LatticePoint(vec![0; poly.dim()])]);
    for _ in 0..k {
        if sums.len().saturating_mul(poly.generators.len()) > SUMSET_LIMIT {
            return None;
        }
        sums = sums
            .iter()
            .flat_map(|s| poly.generators.iter().map(move |g| s.add(g)))
            .collect();
    }
    Some(sums)
}

/// All lattice points of `k P`, in increasing lexicographic order.
pub fn lattice_points_of_dilate(poly: &VPolytope, k: usize) -> Result<Vec<LatticePoint>> {
    if k == 0 {
        return Err(Error::InvalidArgument("dilate must be at least 1".into()));
    }
    let sums = generator_sums(poly, k);
    let k = k as i64;
    let cands = candidates(poly, k);
    let keep: Vec<bool> = cands
        .par_iter()
        .map(|x| {
            if sums.as_ref().is_some_and(|s| s.contains(x)) {
                Ok(true)
            } else {
                contains_point(poly, x, k)
            }
        })
        .collect::<Result<_>>()?;
    let mut out: Vec<LatticePoint> = cands
        .into_iter()
        .zip(keep)
        .filter_map(|(x, ok)| ok.then_some(x))
        .collect();
    out.sort();
    Ok(out)
}

/// Result of a decomposition search: the summands if found, and how many
/// candidate decompositions were tested either way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub parts: Option<Vec<LatticePoint>>,
    pub examined: u64,
}

/// Lattice points of `P` prepared for repeated decomposition searches.
#[derive(Clone, Debug)]
pub struct LatticePointIndex {
    points: Vec<LatticePoint>,
    set: HashSet<LatticePoint>,
    ranges: Vec<(i64, i64)>,
}

impl LatticePointIndex {
    pub fn new(poly: &VPolytope) -> Result<Self> {
        let points = lattice_points_of_dilate(poly, 1)?;
        let set = points.iter().cloned().collect();
        let ranges = (0..poly.dim()).map(|c| poly.coordinate_range(c)).collect();
        Ok(Self {
            points,
            set,
            ranges,
        })
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    /// Searches for `x = y_1 + ... + y_k` with every `y_i` a lattice point of
    /// `P`, trying summands as a lexicographically sorted multiset.
    pub fn decompose(&self, point: &LatticePoint, k: usize) -> Decomposition {
        let mut examined = 0u64;
        if k == 0 {
            return Decomposition {
                parts: point.0.iter().all(|&c| c == 0).then(Vec::new),
                examined,
            };
        }
        let mut chosen = Vec::with_capacity(k);
        let found = self.search(point.clone(), k, 0, &mut chosen, &mut examined);
        Decomposition {
            parts: found.then_some(chosen),
            examined,
        }
    }

    fn fits(&self, remainder: &LatticePoint, copies: i64) -> bool {
        remainder
            .0
            .iter()
            .zip(&self.ranges)
            .all(|(&v, &(lo, hi))| v >= lo * copies && v <= hi * copies)
    }

    fn search(
        &self,
        remainder: LatticePoint,
        k: usize,
        start: usize,
        chosen: &mut Vec<LatticePoint>,
        examined: &mut u64,
    ) -> bool {
        if k == 1 {
            *examined += 1;
            if let Some(last) = self.set.get(&remainder) {
                if chosen.last().is_none_or(|prev| prev <= last) {
                    chosen.push(last.clone());
                    return true;
                }
            }
            return false;
        }
        for (i, p) in self.points.iter().enumerate().skip(start) {
            let rest = remainder.sub(p);
            if !self.fits(&rest, (k - 1) as i64) {
                continue;
            }
            chosen.push(p.clone());
            if self.search(rest, k - 1, i, chosen, examined) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

pub fn decompose_as_sum(point: &LatticePoint, poly: &VPolytope, k: usize) -> Result<Decomposition> {
    Ok(LatticePointIndex::new(poly)?.decompose(point, k))
}

/// A lattice point of `k P` that is not a sum of `k` lattice points of `P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdpViolation {
    pub dilate: usize,
    pub point: LatticePoint,
    #[serde(with = "serde_strings::u64_string")]
    pub examined: u64,
    pub witness_absent: bool,
}

/// Every lattice point of `k P` without a `k`-term decomposition, sorted.
pub fn idp_check(poly: &VPolytope, k: usize) -> Result<Vec<IdpViolation>> {
    if k <= 1 {
        return Ok(Vec::new());
    }
    let index = LatticePointIndex::new(poly)?;
    let points = lattice_points_of_dilate(poly, k)?;
    let mut out: Vec<IdpViolation> = points
        .par_iter()
        .filter_map(|x| {
            let d = index.decompose(x, k);
            d.parts.is_none().then(|| IdpViolation {
                dilate: k,
                point: x.clone(),
                examined: d.examined,
                witness_absent: true,
            })
        })
        .collect();
    out.sort_by(|a, b| a.point.cmp(&b.point));
    Ok(out)
}

/// Integer coordinates of a rational point, if it has any.
pub fn as_lattice_point(point: &[BigRational]) -> Option<LatticePoint> {
    point
        .iter()
        .map(|x| x.is_integer().then(|| x.to_integer().to_i64()).flatten())
        .collect::<Option<Vec<_>>>()
        .map(LatticePoint)
}
