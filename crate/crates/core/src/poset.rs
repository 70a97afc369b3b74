//! Finite posets, their lattices of order ideals, and the counting problems
//! that reduce to walks in that lattice: order polynomials (Ehrhart
//! polynomials of order polytopes), linear extensions and hyperplane-slice
//! counts. Also the hook machinery for Young diagrams and rooted trees.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{factorial, interpolate_samples, UniPolynomial};

pub const MAX_POSET_SIZE: usize = 64;

/// A partial order on `0..n`, stored as its reflexive transitive closure.
///
/// `down[i]` is the bitmask of elements `<= i`, `up[i]` of elements `>= i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    down: Vec<u64>,
    up: Vec<u64>,
}

fn bit(i: usize) -> u64 {
    1u64 << i
}

impl Poset {
    /// Builds the poset generated by `a < b` relations (0-indexed).
    pub fn from_covers(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_POSET_SIZE {
            return Err(Error::PosetTooLarge(n));
        }
        let mut down: Vec<u64> = (0..n).map(bit).collect();
        for &(a, b) in relations {
            for idx in [a, b] {
                if idx >= n {
                    return Err(Error::ElementOutOfRange {
                        index: idx,
                        size: n,
                    });
                }
            }
            if a == b {
                return Err(Error::CyclicRelation(a, b));
            }
            down[b] |= bit(a);
        }
        // Warshall on bitsets
        for k in 0..n {
            for i in 0..n {
                if down[i] & bit(k) != 0 {
                    down[i] |= down[k];
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if down[i] & bit(j) != 0 && down[j] & bit(i) != 0 {
                    return Err(Error::CyclicRelation(i, j));
                }
            }
        }
        Ok(Self::from_closed_down_sets(down))
    }

    /// Validates an explicit relation matrix (`matrix[a][b]` means `a <= b`).
    pub fn from_relation(matrix: &[Vec<bool>]) -> Result<Self> {
        let n = matrix.len();
        if n > MAX_POSET_SIZE {
            return Err(Error::PosetTooLarge(n));
        }
        for (a, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            if !row[a] {
                return Err(Error::NotPartialOrder(format!("not reflexive at {a}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && matrix[a][b] && matrix[b][a] {
                    return Err(Error::NotPartialOrder(format!(
                        "not antisymmetric at ({a}, {b})"
                    )));
                }
                for c in 0..n {
                    if matrix[a][b] && matrix[b][c] && !matrix[a][c] {
                        return Err(Error::NotPartialOrder(format!(
                            "not transitive at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let down = (0..n)
            .map(|b| {
                (0..n)
                    .filter(|&a| matrix[a][b])
                    .fold(0u64, |m, a| m | bit(a))
            })
            .collect();
        Ok(Self::from_closed_down_sets(down))
    }

    /// `down` must already be reflexive, transitive and antisymmetric.
    pub(crate) fn from_closed_down_sets(down: Vec<u64>) -> Self {
        let n = down.len();
        let mut up = vec![0u64; n];
        for (b, &mask) in down.iter().enumerate() {
            for (a, slot) in up.iter_mut().enumerate() {
                if mask & bit(a) != 0 {
                    *slot |= bit(b);
                }
            }
        }
        Self { n, down, up }
    }

    pub fn antichain(n: usize) -> Result<Self> {
        Self::from_covers(n, &[])
    }

    pub fn chain(n: usize) -> Result<Self> {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_covers(n, &covers)
    }

    /// One minimum `z` (element 0) below `l` pairwise incomparable elements.
    ///
    /// Its order polytope is `0 <= z <= x_i <= 1`.
    pub fn claw(l: usize) -> Result<Self> {
        let covers: Vec<_> = (1..=l).map(|i| (0, i)).collect();
        Self::from_covers(l + 1, &covers)
    }

    /// Parses the text format: first line `n`, then `a < b` lines, 1-indexed.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing element count"))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::parse(line_no, format!("bad element count {header:?}")))?;
        let mut relations = Vec::new();
        for (line_no, line) in lines {
            let (a, b) = line
                .split_once('<')
                .ok_or_else(|| Error::parse(line_no, "expected \"a < b\""))?;
            let parse = |s: &str| -> Result<usize> {
                let v: usize = s
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad element {s:?}")))?;
                if v == 0 || v > n {
                    return Err(Error::parse(
                        line_no,
                        format!("element {v} outside 1..={n}"),
                    ));
                }
                Ok(v - 1)
            };
            relations.push((parse(a)?, parse(b)?));
        }
        Self::from_covers(n, &relations)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (a, b) in self.covers() {
            out.push_str(&format!("{} < {}\n", a + 1, b + 1));
        }
        out
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.down[b] & bit(a) != 0
    }

    /// Elements `<= i` as a bitmask (including `i`).
    pub fn down_mask(&self, i: usize) -> u64 {
        self.down[i]
    }

    pub fn up_mask(&self, i: usize) -> u64 {
        self.up[i]
    }

    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            bit(self.n) - 1
        }
    }

    pub fn relation_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.leq(a, b)).collect())
            .collect()
    }

    /// Covering pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for b in 0..self.n {
            let strict_below = self.down[b] & !bit(b);
            for a in 0..self.n {
                if strict_below & bit(a) == 0 {
                    continue;
                }
                let between = strict_below & self.up[a] & !bit(a);
                if between == 0 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn dual(&self) -> Self {
        Self {
            n: self.n,
            down: self.up.clone(),
            up: self.down.clone(),
        }
    }

    /// The poset with element `i` renamed to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut down = vec![0u64; self.n];
        for b in 0..self.n {
            for a in 0..self.n {
                if self.leq(a, b) {
                    down[perm[b]] |= bit(perm[a]);
                }
            }
        }
        Self::from_closed_down_sets(down)
    }

    /// A linear extension: every element appears after everything below it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&i| (self.down[i].count_ones(), i));
        order
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

/// The distributive lattice of order ideals (down-sets) of a poset.
///
/// Ideals are sorted by size, so every ideal appears after all its
/// sub-ideals. `removals[x]` lists the index pairs `(I, I \ {x})` for every
/// ideal in which `x` is maximal; those pairs are exactly the covering
/// relations of the lattice.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    poset_size: usize,
    ideals: Vec<u64>,
    index: HashMap<u64, u32>,
    removals: Vec<Vec<(u32, u32)>>,
    order: Vec<usize>,
}

impl IdealLattice {
    pub fn new(poset: &Poset) -> Self {
        let n = poset.size();
        let mut ideals = vec![0u64];
        let mut index = HashMap::from([(0u64, 0u32)]);
        let mut frontier = vec![0u64];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &ideal in &frontier {
                for x in 0..n {
                    let strict_below = poset.down_mask(x) & !bit(x);
                    if ideal & bit(x) == 0 && strict_below & !ideal == 0 {
                        let grown = ideal | bit(x);
                        if let std::collections::hash_map::Entry::Vacant(e) = index.entry(grown) {
                            e.insert(0);
                            next.push(grown);
                        }
                    }
                }
            }
            next.sort_unstable();
            ideals.extend_from_slice(&next);
            frontier = next;
        }
        for (i, &ideal) in ideals.iter().enumerate() {
            index.insert(ideal, i as u32);
        }
        let mut removals = vec![Vec::new(); n];
        for (i, &ideal) in ideals.iter().enumerate() {
            for (x, slot) in removals.iter_mut().enumerate() {
                let strict_above = poset.up_mask(x) & !bit(x);
                if ideal & bit(x) != 0 && ideal & strict_above == 0 {
                    let smaller = index[&(ideal & !bit(x))];
                    slot.push((i as u32, smaller));
                }
            }
        }
        Self {
            poset_size: n,
            ideals,
            index,
            removals,
            order: poset.linear_extension(),
        }
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[u64] {
        &self.ideals
    }

    pub fn index_of(&self, ideal: u64) -> Option<usize> {
        self.index.get(&ideal).map(|&i| i as usize)
    }

    /// Containment between two ideals, by index.
    pub fn is_subideal(&self, smaller: usize, larger: usize) -> bool {
        self.ideals[smaller] & !self.ideals[larger] == 0
    }

    fn full_index(&self) -> usize {
        self.ideals.len() - 1
    }

    fn ideal_size(&self, i: usize) -> usize {
        self.ideals[i].count_ones() as usize
    }

    /// Replaces `values[I]` by the sum of `values[J]` over sub-ideals `J`.
    ///
    /// Runs one pass per poset element, taken in linear-extension order; the
    /// pass for `x` adds `values[I \ {x}]` into `values[I]` wherever `x` is
    /// maximal in `I`. After the pass for `x_k`, `values[I]` sums the
    /// sub-ideals that differ from `I` only among `x_1..x_k`.
    pub fn zeta_in_place(&self, values: &mut [BigUint]) {
        for &x in &self.order {
            for &(larger, smaller) in &self.removals[x] {
                let add = values[smaller as usize].clone();
                values[larger as usize] += add;
            }
        }
    }

    /// Number of order-preserving maps `P -> {0..t}` for `t = 0..=max_t`.
    pub fn order_polynomial_values(&self, max_t: usize) -> Vec<BigUint> {
        let top = self.full_index();
        let mut chains = vec![BigUint::one(); self.len()];
        let mut out = vec![chains[top].clone()];
        for _ in 0..max_t {
            self.zeta_in_place(&mut chains);
            out.push(chains[top].clone());
        }
        out
    }

    /// Number of maximal chains from the empty ideal to the full one.
    pub fn linear_extensions(&self) -> BigUint {
        let mut paths = vec![BigUint::zero(); self.len()];
        paths[0] = BigUint::one();
        let mut by_larger: Vec<Vec<u32>> = vec![Vec::new(); self.len()];
        for list in &self.removals {
            for &(larger, smaller) in list {
                by_larger[larger as usize].push(smaller);
            }
        }
        for i in 1..self.len() {
            let mut total = BigUint::zero();
            for &s in &by_larger[i] {
                total += &paths[s as usize];
            }
            paths[i] = total;
        }
        paths[self.full_index()].clone()
    }

    /// Number of order-preserving maps `f: P -> {0..k}` with `sum f = k`,
    /// for `k = 0..=max_k`.
    ///
    /// Such a map is a weakly decreasing sequence of nonempty up-sets
    /// `U_0 >= U_1 >= ...` (the level sets `f > j`) with total size `k`.
    /// `layer[s][I]` counts sequences of total size `s` whose last up-set is
    /// the complement of `I`.
    pub fn slice_counts(&self, max_k: usize) -> Vec<BigUint> {
        let n = self.poset_size;
        let top = self.full_index();
        let mut layers: Vec<Vec<BigUint>> = vec![vec![BigUint::zero(); self.len()]];
        let mut zetas: Vec<Vec<BigUint>> = vec![vec![BigUint::zero(); self.len()]];
        let mut out = vec![BigUint::one()];
        for s in 1..=max_k {
            let mut layer = vec![BigUint::zero(); self.len()];
            for (i, slot) in layer.iter_mut().enumerate() {
                if i == top {
                    continue;
                }
                let step = n - self.ideal_size(i);
                if step == s {
                    *slot += 1u32;
                } else if step < s {
                    *slot += &zetas[s - step][i];
                }
            }
            let total = layer.iter().fold(BigUint::zero(), |acc, v| acc + v);
            out.push(total);
            let mut zeta = layer.clone();
            self.zeta_in_place(&mut zeta);
            layers.push(layer);
            zetas.push(zeta);
        }
        out
    }
}

/// `#{f: P -> {0..t} order-preserving}`; equals the Ehrhart polynomial of the
/// order polytope evaluated at `t`.
pub fn order_polynomial_value(poset: &Poset, t: usize) -> BigInt {
    let lattice = IdealLattice::new(poset);
    lattice.order_polynomial_values(t)[t].clone().into()
}

/// Ehrhart polynomial of the order polytope, interpolated at `t = 0..=|P|`.
pub fn ehrhart_order_polytope(poset: &Poset) -> UniPolynomial {
    ehrhart_from_lattice(&IdealLattice::new(poset))
}

pub fn ehrhart_from_lattice(lattice: &IdealLattice) -> UniPolynomial {
    let samples: Vec<BigInt> = lattice
        .order_polynomial_values(lattice.poset_size)
        .into_iter()
        .map(BigInt::from)
        .collect();
    interpolate_samples(&samples).expect("nodes 0..=n are distinct")
}

pub fn linear_extensions(poset: &Poset) -> BigInt {
    IdealLattice::new(poset).linear_extensions().into()
}

/// Lattice points of the `k`-th dilate of the order polytope lying on
/// `x_1 + ... + x_n = k`.
pub fn slice_count(poset: &Poset, k: usize) -> BigInt {
    IdealLattice::new(poset).slice_counts(k)[k].clone().into()
}

/// A Young diagram `lambda_1 >= ... >= lambda_k >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct YoungShape {
    parts: Vec<usize>,
}

impl YoungShape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidShape(parts));
        }
        Ok(Self { parts })
    }

    /// Accepts trailing zeros and drops them.
    pub fn from_padded(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Vec<usize> {
        let width = self.parts.first().copied().unwrap_or(0);
        (0..width)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect()
    }

    /// Cells `(row, col)`, 0-indexed, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
    }

    pub fn hook(&self, row: usize, col: usize) -> usize {
        let conj = self.conjugate();
        self.parts[row] + conj[col] - row - col - 1
    }

    /// All partitions of `n`, largest parts first, in reverse lexicographic
    /// order.
    pub fn all_of_size(n: usize) -> Vec<YoungShape> {
        fn rec(rest: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<YoungShape>) {
            if rest == 0 {
                out.push(YoungShape { parts: acc.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                acc.push(p);
                rec(rest - p, p, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

/// The poset whose Hasse diagram is the Ferrers diagram: `(i, j) <= (i', j')`
/// iff `i <= i'` and `j <= j'`, so cell `(1, 1)` is the unique minimum.
///
/// Elements are numbered row by row.
pub fn poset_from_shape(shape: &YoungShape) -> Result<Poset> {
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let id: HashMap<(usize, usize), usize> =
        cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut covers = Vec::new();
    for (k, &(i, j)) in cells.iter().enumerate() {
        if let Some(&r) = id.get(&(i, j + 1)) {
            covers.push((k, r));
        }
        if let Some(&d) = id.get(&(i + 1, j)) {
            covers.push((k, d));
        }
    }
    Poset::from_covers(cells.len(), &covers)
}

/// Rooted tree given by a parent map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    parent: Vec<Option<usize>>,
    root: usize,
}

impl RootedTree {
    pub fn new(parent: Vec<Option<usize>>) -> Result<Self> {
        let n = parent.len();
        if n == 0 {
            return Err(Error::InvalidTree("tree has no nodes".into()));
        }
        let roots: Vec<usize> = (0..n).filter(|&v| parent[v].is_none()).collect();
        if roots.len() != 1 {
            return Err(Error::InvalidTree(format!(
                "expected exactly one root, found {}",
                roots.len()
            )));
        }
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= n {
                    return Err(Error::ElementOutOfRange { index: p, size: n });
                }
            }
            // walking up from v must reach the root within n steps
            let mut cur = v;
            let mut steps = 0;
            while let Some(p) = parent[cur] {
                cur = p;
                steps += 1;
                if steps > n {
                    return Err(Error::InvalidTree(format!("cycle through node {}", v + 1)));
                }
            }
        }
        Ok(Self {
            parent,
            root: roots[0],
        })
    }

    /// Text format: first line `n`, then `child parent` lines (1-indexed),
    /// root omitted.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing node count"))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::parse(line_no, format!("bad node count {header:?}")))?;
        let mut parent = vec![None; n];
        for (line_no, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [child, par] = fields[..] else {
                return Err(Error::parse(line_no, "expected \"child parent\""));
            };
            let parse = |s: &str| -> Result<usize> {
                match s.parse::<usize>() {
                    Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                    _ => Err(Error::parse(line_no, format!("bad node {s:?}"))),
                }
            };
            let (c, p) = (parse(child)?, parse(par)?);
            if parent[c].is_some() {
                return Err(Error::parse(
                    line_no,
                    format!("node {child} has two parents"),
                ));
            }
            parent[c] = Some(p);
        }
        Self::new(parent)
    }

    pub fn size(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![1usize; self.size()];
        for v in 0..self.size() {
            let mut cur = v;
            while let Some(p) = self.parent[cur] {
                sizes[p] += 1;
                cur = p;
            }
        }
        sizes
    }

    /// Root is the minimum; every node lies below its children.
    pub fn to_poset(&self) -> Result<Poset> {
        let covers: Vec<(usize, usize)> = (0..self.size())
            .filter_map(|v| self.parent[v].map(|p| (p, v)))
            .collect();
        Poset::from_covers(self.size(), &covers)
    }

    /// Every rooted tree shape on `n` nodes, as parent maps where each
    /// parent index precedes its child (labeled, with repetitions).
    pub fn all_recursive(n: usize) -> Vec<RootedTree> {
        let mut out = Vec::new();
        let mut parent = vec![None; n];
        fn rec(v: usize, parent: &mut Vec<Option<usize>>, out: &mut Vec<RootedTree>) {
            if v == parent.len() {
                out.push(RootedTree::new(parent.clone()).expect("valid by construction"));
                return;
            }
            for p in 0..v {
                parent[v] = Some(p);
                rec(v + 1, parent, out);
            }
            parent[v] = None;
        }
        if n > 0 {
            rec(1, &mut parent, &mut out);
        }
        out
    }
}

/// Sorted (largest first) multiset of hook lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HookMultiset(Vec<usize>);

impl HookMultiset {
    pub fn new(mut hooks: Vec<usize>) -> Self {
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        Self(hooks)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn product(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, &h| acc * h)
    }

    /// `n! / prod(hooks)`; the division must be exact.
    pub fn hook_formula(&self) -> Result<BigInt> {
        let (q, r) = factorial(self.len() as u64).div_rem(&self.product());
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "hook product {} does not divide {}!",
                self.product(),
                self.len()
            )));
        }
        Ok(q)
    }
}

pub fn hook_multiset_shape(shape: &YoungShape) -> HookMultiset {
    let conj = shape.conjugate();
    HookMultiset::new(
        shape
            .cells()
            .map(|(i, j)| shape.parts[i] + conj[j] - i - j - 1)
            .collect(),
    )
}

pub fn hook_multiset_tree(tree: &RootedTree) -> HookMultiset {
    HookMultiset::new(tree.subtree_sizes())
}

pub fn hook_formula_count(shape: &YoungShape) -> Result<BigInt> {
    hook_multiset_shape(shape).hook_formula()
}
