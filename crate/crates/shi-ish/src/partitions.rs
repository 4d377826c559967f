//! Set partitions of `[n]`, their arc diagrams and endpoint notation,
//! nonnesting and connectivity tests, G-partitions with their Stirling
//! numbers, and the two closed counting formulas (Kreweras by type, and the
//! refinement by number of connected components).
//!
//! The arc diagram of a partition joins consecutive elements of each block:
//! `(i, j)` is an arc iff `i < j` share a block and no block element lies
//! strictly between them. A partition with `k` blocks has `n - k` arcs.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::graph::Graph;
use crate::{Error, Result};

/// A partition of `[n]` into disjoint nonempty blocks. Blocks are kept
/// sorted internally (each block ascending, blocks ordered by minimum), so
/// equal partitions compare equal structurally.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

/// The endpoint notation `(alpha, beta)` of a partition: arcs listed by
/// increasing left endpoint, `alpha` the left endpoints and `beta` the right
/// endpoints. Valid pairs have equal length, `alpha[i] < beta[i]`, `alpha`
/// strictly increasing, and `beta` with pairwise distinct entries.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EndpointPair {
    pub n: usize,
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

/// The type of a partition: `r[i - 1]` counts blocks of size `i`, so
/// `sum i * r_i = n` and `k = sum r_i` is the number of blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TypeVector {
    pub n: usize,
    pub r: Vec<usize>,
}

impl SetPartition {
    /// Builds a partition from blocks, verifying that they are disjoint,
    /// nonempty, and cover `[n]` exactly.
    pub fn from_blocks(n: usize, blocks: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPartition("n must be positive".into()));
        }
        let mut seen = vec![false; n + 1];
        let mut normalized: Vec<Vec<usize>> = Vec::new();
        for mut block in blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            block.sort_unstable();
            for &x in &block {
                if x < 1 || x > n {
                    return Err(Error::InvalidPartition(format!("element {x} out of [1,{n}]")));
                }
                if seen[x] {
                    return Err(Error::InvalidPartition(format!("element {x} repeated")));
                }
                seen[x] = true;
            }
            normalized.push(block);
        }
        if let Some(missing) = (1..=n).find(|&x| !seen[x]) {
            return Err(Error::InvalidPartition(format!("element {missing} uncovered")));
        }
        normalized.sort_unstable();
        Ok(SetPartition {
            n,
            blocks: normalized,
        })
    }

    /// The all-singletons partition of `[n]`.
    pub fn singletons(n: usize) -> Self {
        SetPartition {
            n,
            blocks: (1..=n).map(|x| vec![x]).collect(),
        }
    }

    /// The partition generated by merging `i ~ j` for each pair in `pairs`.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = x;
            while parent[cur] != root {
                let next = parent[cur];
                parent[cur] = root;
                cur = next;
            }
            root
        }
        for (i, j) in pairs {
            if i < 1 || i > n || j < 1 || j > n {
                return Err(Error::InvalidPartition(format!(
                    "pair ({i},{j}) out of [1,{n}]"
                )));
            }
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            parent[ri.max(rj)] = ri.min(rj);
        }
        let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for x in 1..=n {
            by_root.entry(find(&mut parent, x)).or_default().push(x);
        }
        SetPartition::from_blocks(n, by_root.into_values())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Blocks, each ascending, ordered by minimum element.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block containing `x` (1-based `x`).
    pub fn block_of(&self, x: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.binary_search(&x).is_ok())
            .expect("element within [n]")
    }

    /// The arcs of the diagram: consecutive pairs within each block, sorted
    /// by left endpoint. Always `n - block_count` arcs.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::with_capacity(self.n - self.blocks.len());
        for block in &self.blocks {
            for pair in block.windows(2) {
                arcs.push((pair[0], pair[1]));
            }
        }
        arcs.sort_unstable();
        arcs
    }

    /// Endpoint notation: arcs split into left and right endpoint vectors.
    pub fn to_endpoint(&self) -> EndpointPair {
        let arcs = self.arcs();
        EndpointPair {
            n: self.n,
            alpha: arcs.iter().map(|a| a.0).collect(),
            beta: arcs.iter().map(|a| a.1).collect(),
        }
    }

    /// Whether no arc nests strictly inside another, equivalently whether
    /// the right endpoint vector `beta` is increasing.
    pub fn is_nonnesting(&self) -> bool {
        self.nesting_pairs() == 0
    }

    /// Number of nesting arc pairs: inversions of `beta` when arcs are
    /// sorted by left endpoint.
    pub fn nesting_pairs(&self) -> usize {
        let beta = self.to_endpoint().beta;
        let mut count = 0;
        for i in 0..beta.len() {
            for j in (i + 1)..beta.len() {
                if beta[i] > beta[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Number of connected components: maximal intervals of `[n]` not
    /// separated by a gap that no arc spans. Position `m` is a gap when no
    /// arc `(i, j)` has `i <= m < j`.
    pub fn connected_components(&self) -> usize {
        let arcs = self.arcs();
        let mut gaps = 0;
        for m in 1..self.n {
            if !arcs.iter().any(|&(i, j)| i <= m && m < j) {
                gaps += 1;
            }
        }
        gaps + 1
    }

    /// Block-size multiplicities.
    pub fn type_vector(&self) -> TypeVector {
        let mut r = vec![0usize; self.n];
        for block in &self.blocks {
            r[block.len() - 1] += 1;
        }
        TypeVector { n: self.n, r }
    }

    /// Whether every arc of the diagram is an edge of `g`.
    pub fn is_g_partition(&self, g: &Graph) -> bool {
        debug_assert_eq!(self.n, g.n());
        self.arcs().iter().all(|&(i, j)| g.contains(i, j))
    }

    /// The image partition under a relabeling `map` of `[n]` (1-based:
    /// element `x` becomes `map[x - 1]`).
    pub fn relabel(&self, map: &[usize]) -> Result<Self> {
        SetPartition::from_blocks(
            self.n,
            self.blocks
                .iter()
                .map(|b| b.iter().map(|&x| map[x - 1]).collect()),
        )
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, block) in self.blocks.iter().enumerate() {
            if t > 0 {
                write!(f, "|")?;
            }
            for (s, x) in block.iter().enumerate() {
                if s > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl EndpointPair {
    /// Validates the four endpoint invariants and rebuilds the partition by
    /// merging each arc's endpoints.
    pub fn to_partition(&self) -> Result<SetPartition> {
        if self.alpha.len() != self.beta.len() {
            return Err(Error::InvalidEndpoint("alpha and beta differ in length".into()));
        }
        for (&a, &b) in self.alpha.iter().zip(&self.beta) {
            if a < 1 || b < 1 || a > self.n || b > self.n {
                return Err(Error::InvalidEndpoint(format!("entry ({a},{b}) out of [1,{}]", self.n)));
            }
            if a >= b {
                return Err(Error::InvalidEndpoint(format!("requires a_i < b_i, got ({a},{b})")));
            }
        }
        if self.alpha.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidEndpoint("alpha is not strictly increasing".into()));
        }
        let mut sorted_beta = self.beta.clone();
        sorted_beta.sort_unstable();
        if sorted_beta.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidEndpoint("beta entries are not distinct".into()));
        }
        let p = SetPartition::from_pairs(
            self.n,
            self.alpha.iter().copied().zip(self.beta.iter().copied()),
        )?;
        debug_assert_eq!(
            p.arcs(),
            self.alpha
                .iter()
                .copied()
                .zip(self.beta.iter().copied())
                .collect::<Vec<_>>()
        );
        Ok(p)
    }

    /// Number of arcs.
    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "alpha": self.alpha, "beta": self.beta })
    }
}

impl fmt::Display for EndpointPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for a in &self.alpha {
            write!(f, "{a}")?;
        }
        write!(f, ",")?;
        for b in &self.beta {
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

impl TypeVector {
    pub fn new(n: usize, r: Vec<usize>) -> Result<Self> {
        if r.len() != n {
            return Err(Error::InvalidTypeVector(format!(
                "expected {n} entries, got {}",
                r.len()
            )));
        }
        let weighted: usize = r.iter().enumerate().map(|(i, &ri)| (i + 1) * ri).sum();
        if weighted != n {
            return Err(Error::InvalidTypeVector(format!(
                "sum of i*r_i is {weighted}, expected {n}"
            )));
        }
        let k: usize = r.iter().sum();
        if k == 0 || k > n {
            return Err(Error::InvalidTypeVector(format!("block count {k} out of [1,{n}]")));
        }
        Ok(TypeVector { n, r })
    }

    /// Total number of blocks, `k = sum r_i`.
    pub fn block_count(&self) -> usize {
        self.r.iter().sum()
    }
}

/// All partitions of `[n]`, ordered lexicographically by restricted-growth
/// string. `rgs[i]` is the 0-based block index of element `i + 1`, with
/// `rgs[0] = 0` and each entry at most one more than the running maximum.
pub fn enumerate_partitions(n: usize) -> Vec<SetPartition> {
    assert!(n >= 1, "n must be positive");
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        out.push(partition_of_rgs(n, &rgs));
        // advance to the next restricted-growth string in lex order
        let mut pos = n;
        loop {
            if pos == 1 {
                return out;
            }
            pos -= 1;
            let cap = rgs[..pos].iter().copied().max().unwrap_or(0) + 1;
            if rgs[pos] < cap {
                rgs[pos] += 1;
                rgs[pos + 1..].fill(0);
                break;
            }
        }
    }
}

fn partition_of_rgs(n: usize, rgs: &[usize]) -> SetPartition {
    let blocks_needed = rgs.iter().copied().max().unwrap_or(0) + 1;
    let mut blocks = vec![Vec::new(); blocks_needed];
    for (i, &b) in rgs.iter().enumerate() {
        blocks[b].push(i + 1);
    }
    SetPartition { n, blocks }
}

/// The partitions of `[n]` all of whose arcs are edges of `g`, in
/// enumeration order.
pub fn enumerate_g_partitions(g: &Graph) -> Vec<SetPartition> {
    enumerate_partitions(g.n())
        .into_iter()
        .filter(|p| p.is_g_partition(g))
        .collect()
}

/// The nonnesting partitions of `[n]`, in enumeration order.
pub fn enumerate_nonnesting(n: usize) -> Vec<SetPartition> {
    enumerate_partitions(n)
        .into_iter()
        .filter(|p| p.is_nonnesting())
        .collect()
}

/// The G-Stirling number `Stir(G, k)`: the number of G-partitions with `k`
/// blocks, by direct enumeration. Zero outside `1 <= k <= n`.
pub fn g_stirling(g: &Graph, k: usize) -> BigUint {
    if k < 1 || k > g.n() {
        return BigUint::zero();
    }
    let count = enumerate_g_partitions(g)
        .iter()
        .filter(|p| p.block_count() == k)
        .count();
    BigUint::from(count)
}

/// Classical Stirling numbers of the second kind by the standard recurrence.
pub fn stirling2(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    if n == 0 {
        return BigUint::one();
    }
    if k == 0 {
        return BigUint::zero();
    }
    let mut prev = vec![BigUint::zero(); k + 1];
    prev[0] = BigUint::one();
    for _ in 1..=n {
        let mut curr = vec![BigUint::zero(); k + 1];
        for j in 1..=k {
            curr[j] = &prev[j - 1] + &prev[j] * BigUint::from(j);
        }
        curr[0] = BigUint::zero();
        prev = curr;
    }
    prev[k].clone()
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).fold(BigUint::one(), |a, b| a * b)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// The number of nonnesting partitions of `[n]` with the given type:
/// `n! / ((n - k + 1)! r_1! ... r_n!)`.
pub fn kreweras_count(t: &TypeVector) -> BigUint {
    let k = t.block_count();
    let mut denom = factorial(t.n - k + 1);
    for &ri in &t.r {
        denom *= factorial(ri);
    }
    factorial(t.n) / denom
}

/// The Kreweras count refined by connectivity: the number of nonnesting
/// partitions of `[n]` with the given type and `d` connected components,
/// `d (n - d - 1)! (k - 1)! / ((n - k - 1)! (k - d)! r_1! ... r_n!)`.
///
/// Edge cases follow the combinatorics, not the raw factorials: the count is
/// zero when `k < d`, and the all-singletons type (the only type with
/// `k = n`, where `(n - k - 1)!` is undefined) has exactly one partition,
/// with `n` components.
pub fn component_refined_count(t: &TypeVector, d: usize) -> BigUint {
    assert!(d >= 1, "component count must be positive");
    let n = t.n;
    let k = t.block_count();
    if k == n {
        return if d == n { BigUint::one() } else { BigUint::zero() };
    }
    if k < d {
        return BigUint::zero();
    }
    let numer = BigUint::from(d) * factorial(n - d - 1) * factorial(k - 1);
    let mut denom = factorial(n - k - 1) * factorial(k - d);
    for &ri in &t.r {
        denom *= factorial(ri);
    }
    numer / denom
}
