//! Exhaustive scans: every poset up to isomorphism on a few elements, and
//! the IDP sweep over partition polytopes.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exact::{serde_strings, UniPolynomial};
use crate::hull::{idp_check, lattice_points_of_dilate, partition_polytope, IdpViolation};
use crate::poset::{ehrhart_order_polytope, IdealLattice, Poset};

pub const MAX_ENUMERATION_SIZE: usize = 7;
pub const MAX_IDP_A: usize = 18;
pub const MAX_IDP_B: usize = 9;

/// A poset relabeled into a canonical form; `code[i * n + j]` is 1 iff
/// `i <= j` after relabeling. Isomorphic posets have equal codes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalPoset {
    n: usize,
    code: Vec<u8>,
}

impl CanonicalPoset {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn code(&self) -> &[u8] {
        &self.code
    }

    pub fn code_hex(&self) -> String {
        hex::encode(&self.code)
    }

    pub fn to_poset(&self) -> Poset {
        let n = self.n;
        let down = (0..n)
            .map(|j| {
                (0..n)
                    .filter(|&i| self.code[i * n + j] == 1)
                    .fold(0u64, |m, i| m | (1 << i))
            })
            .collect();
        Poset::from_closed_down_sets(down)
    }
}

/// Partition of the elements into classes that every automorphism and
/// every isomorphism respects, refined until stable. Returns one class id
/// per element; ids are ordered by an isomorphism-invariant signature.
fn refined_colours(p: &Poset) -> Vec<usize> {
    let n = p.size();
    let rank = |sigs: &[Vec<usize>]| -> Vec<usize> {
        let distinct: BTreeSet<&Vec<usize>> = sigs.iter().collect();
        let ids: BTreeMap<&Vec<usize>, usize> = distinct
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        sigs.iter().map(|s| ids[s]).collect()
    };
    let initial: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            vec![
                p.down_mask(i).count_ones() as usize,
                p.up_mask(i).count_ones() as usize,
            ]
        })
        .collect();
    let mut colours = rank(&initial);
    loop {
        let classes = colours.iter().collect::<BTreeSet<_>>().len();
        let sigs: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                let mut below: Vec<usize> = (0..n)
                    .filter(|&j| j != i && p.leq(j, i))
                    .map(|j| colours[j])
                    .collect();
                let mut above: Vec<usize> = (0..n)
                    .filter(|&j| j != i && p.leq(i, j))
                    .map(|j| colours[j])
                    .collect();
                below.sort_unstable();
                above.sort_unstable();
                let mut sig = vec![colours[i], below.len()];
                sig.extend(below);
                sig.push(usize::MAX);
                sig.extend(above);
                sig
            })
            .collect();
        let next = rank(&sigs);
        let next_classes = next.iter().collect::<BTreeSet<_>>().len();
        colours = next;
        if next_classes == classes {
            return colours;
        }
    }
}

/// Canonical labeling: among all orders that list the colour classes in
/// sequence, pick the one minimizing the relation bits read shell by shell
/// (for each `j`, the pairs `(i, j)` and `(j, i)` with `i < j`). Every prefix
/// of that sequence depends only on the labels assigned so far, which lets
/// the search abandon a branch as soon as its prefix exceeds the best one.
pub fn canonical_form(p: &Poset) -> CanonicalPoset {
    let n = p.size();
    let colours = refined_colours(p);
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &c) in colours.iter().enumerate() {
        blocks.entry(c).or_default().push(i);
    }
    // class of each label position
    let slots: Vec<usize> = blocks
        .values()
        .enumerate()
        .flat_map(|(b, members)| std::iter::repeat_n(b, members.len()))
        .collect();
    let blocks: Vec<Vec<usize>> = blocks.into_values().collect();

    struct Search<'a> {
        p: &'a Poset,
        blocks: Vec<Vec<usize>>,
        slots: Vec<usize>,
        used: Vec<bool>,
        order: Vec<usize>,
        prefix: Vec<u8>,
        best: Option<(Vec<u8>, Vec<usize>)>,
    }

    impl Search<'_> {
        fn run(&mut self) {
            let k = self.order.len();
            if k == self.slots.len() {
                if self.best.as_ref().is_none_or(|(b, _)| self.prefix < *b) {
                    self.best = Some((self.prefix.clone(), self.order.clone()));
                }
                return;
            }
            for idx in 0..self.blocks[self.slots[k]].len() {
                let x = self.blocks[self.slots[k]][idx];
                if self.used[x] {
                    continue;
                }
                let mark = self.prefix.len();
                for i in 0..k {
                    let y = self.order[i];
                    self.prefix.push(self.p.leq(y, x) as u8);
                    self.prefix.push(self.p.leq(x, y) as u8);
                }
                let worse = self
                    .best
                    .as_ref()
                    .is_some_and(|(b, _)| self.prefix.as_slice() > &b[..self.prefix.len()]);
                if !worse {
                    self.used[x] = true;
                    self.order.push(x);
                    self.run();
                    self.order.pop();
                    self.used[x] = false;
                }
                self.prefix.truncate(mark);
            }
        }
    }

    let mut search = Search {
        p,
        blocks,
        slots,
        used: vec![false; n],
        order: Vec::with_capacity(n),
        prefix: Vec::with_capacity(n * n),
        best: None,
    };
    search.run();
    let order = search.best.map(|(_, o)| o).unwrap_or_default();
    CanonicalPoset {
        n,
        code: encode(p, &order),
    }
}

/// Relation matrix of `p`, row-major, with new label `k` given to `order[k]`.
fn encode(p: &Poset, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut code = vec![0u8; n * n];
    for (i, &a) in order.iter().enumerate() {
        for (j, &b) in order.iter().enumerate() {
            code[i * n + j] = p.leq(a, b) as u8;
        }
    }
    code
}

/// Every poset on `n` elements up to isomorphism, sorted by code.
///
/// Each poset on `n` elements arises from one on `n - 1` elements by adding
/// a maximal element above an order ideal.
pub fn enumerate_posets(n: usize) -> Result<Vec<CanonicalPoset>> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "poset size must be at least 1".into(),
        ));
    }
    if n > MAX_ENUMERATION_SIZE {
        return Err(Error::OverCap(format!(
            "posets on {n} elements requested; enumeration is capped at {MAX_ENUMERATION_SIZE} \
             (there are 16999 posets on 8 elements and the count grows super-exponentially)"
        )));
    }
    let mut level = vec![canonical_form(&Poset::antichain(1)?)];
    for _ in 1..n {
        let next: BTreeSet<CanonicalPoset> = level
            .par_iter()
            .flat_map_iter(|q| {
                let poset = q.to_poset();
                let lattice = IdealLattice::new(&poset);
                let size = poset.size();
                lattice
                    .ideals()
                    .iter()
                    .map(|&ideal| {
                        let mut down: Vec<u64> = (0..size).map(|i| poset.down_mask(i)).collect();
                        down.push(ideal | (1 << size));
                        canonical_form(&Poset::from_closed_down_sets(down))
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        level = next.into_iter().collect();
    }
    Ok(level)
}

/// A single finding of a scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ScanViolation {
    NegativeCoefficient {
        size: usize,
        /// Canonical relation code, hex encoded.
        poset: String,
        polynomial: UniPolynomial,
        degrees: Vec<usize>,
    },
    NotIdp {
        a: usize,
        b: usize,
        #[serde(flatten)]
        violation: IdpViolation,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanReport {
    pub scope: BTreeMap<String, String>,
    #[serde(with = "serde_strings::u64_string")]
    pub examined: u64,
    pub violations: Vec<ScanViolation>,
    /// SHA-256 over the examined items in canonical order.
    pub checksum: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl PartialEq for ScanReport {
    fn eq(&self, other: &Self) -> bool {
        self.scope == other.scope
            && self.examined == other.examined
            && self.violations == other.violations
            && self.checksum == other.checksum
    }
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Runs `f` on a dedicated pool with `jobs` worker threads (the global pool
/// when `None`).
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()?;
            Ok(pool.install(f))
        }
    }
}

/// Ehrhart polynomials of all order polytopes of posets with at most
/// `max_n` elements; reports every negative coefficient.
pub fn scan_negative_coefficients(max_n: usize) -> Result<ScanReport> {
    let start = Instant::now();
    let mut hasher = Sha256::new();
    let mut examined = 0u64;
    let mut violations = Vec::new();
    let mut per_size = Vec::new();
    for n in 1..=max_n {
        let posets = enumerate_posets(n)?;
        let polys: Vec<UniPolynomial> = posets
            .par_iter()
            .map(|c| ehrhart_order_polytope(&c.to_poset()))
            .collect();
        per_size.push(posets.len().to_string());
        for (c, poly) in posets.iter().zip(polys) {
            examined += 1;
            hasher.update(c.code());
            for s in poly.to_strings() {
                hasher.update(s.as_bytes());
                hasher.update(b",");
            }
            hasher.update(b";");
            let negative = poly.negative_coefficients();
            if !negative.is_empty() {
                violations.push(ScanViolation::NegativeCoefficient {
                    size: n,
                    poset: c.code_hex(),
                    degrees: negative.iter().map(|(d, _)| *d).collect(),
                    polynomial: poly,
                });
            }
        }
    }
    let scope = BTreeMap::from([
        ("kind".to_string(), "posets".to_string()),
        ("max_size".to_string(), max_n.to_string()),
        ("posets_per_size".to_string(), per_size.join(",")),
    ]);
    Ok(ScanReport {
        scope,
        examined,
        violations,
        checksum: hex::encode(hasher.finalize()),
        elapsed: start.elapsed(),
    })
}

/// `idp_check(P_{a,b}, k)` for all `1 <= a <= max_a`, `1 <= b <= max_b`.
/// `examined` counts the lattice points of the dilates that were tested.
pub fn scan_idp_partition_polytopes(max_a: usize, max_b: usize, k: usize) -> Result<ScanReport> {
    if max_a > MAX_IDP_A || max_b > MAX_IDP_B {
        return Err(Error::OverCap(format!(
            "IDP scan over a <= {max_a}, b <= {max_b} requested; the grid is capped at \
             a <= {MAX_IDP_A}, b <= {MAX_IDP_B}"
        )));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("dilate must be at least 1".into()));
    }
    let start = Instant::now();
    let cells: Vec<(usize, usize)> = (1..=max_a)
        .flat_map(|a| (1..=max_b).map(move |b| (a, b)))
        .collect();
    let results: Vec<(usize, Vec<IdpViolation>)> = cells
        .par_iter()
        .map(|&(a, b)| {
            let poly = partition_polytope(a, b)?;
            let points = lattice_points_of_dilate(&poly, k)?.len();
            Ok((points, idp_check(&poly, k)?))
        })
        .collect::<Result<_>>()?;
    let mut hasher = Sha256::new();
    let mut examined = 0u64;
    let mut violations = Vec::new();
    for (&(a, b), (points, found)) in cells.iter().zip(results) {
        examined += points as u64;
        hasher.update(format!("{a},{b},{points}:").as_bytes());
        for v in found {
            hasher.update(v.point.to_string().as_bytes());
            violations.push(ScanViolation::NotIdp { a, b, violation: v });
        }
        hasher.update(b";");
    }
    let scope = BTreeMap::from([
        ("kind".to_string(), "idp".to_string()),
        ("max_a".to_string(), max_a.to_string()),
        ("max_b".to_string(), max_b.to_string()),
        ("dilate".to_string(), k.to_string()),
    ]);
    Ok(ScanReport {
        scope,
        examined,
        violations,
        checksum: hex::encode(hasher.finalize()),
        elapsed: start.elapsed(),
    })
}
