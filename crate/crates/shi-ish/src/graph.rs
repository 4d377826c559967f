//! Simple loopless graphs on the vertex set `[n] = {1, .., n}`.
//!
//! Edges are ordered pairs `(i, j)` with `i < j`. Graphs parameterize the
//! deleted arrangements: `Shi(G)` and `Ish(G)` take one affine hyperplane per
//! edge. The text format accepted by [`Graph::parse`] is shared by the CLI
//! and the test suites: `complete:n`, `chain:n`, `empty:n`, or an explicit
//! edge list `n;i-j,i-j,...` with 1-based vertices.

use std::collections::BTreeSet;
use std::fmt;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

/// A simple loopless graph `G` on `[n]`, stored as the sorted set of its
/// edges `(i, j)` with `1 <= i < j <= n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an explicit edge list, rejecting loops, duplicate
    /// edges and out-of-range vertices. Edges may be given in either
    /// orientation; they are normalized to `i < j`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("vertex count must be positive".into()));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if a < 1 || a > n || b < 1 || b > n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a},{b}) out of range for n={n}"
                )));
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge ({},{})",
                    e.0, e.1
                )));
            }
        }
        Ok(Graph { n, edges: set })
    }

    /// The edgeless graph on `[n]`.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    /// The complete graph `K_n`: every pair `i < j` is an edge.
    pub fn complete(n: usize) -> Self {
        let mut edges = BTreeSet::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                edges.insert((i, j));
            }
        }
        Graph { n, edges }
    }

    /// The chain `{12, 23, ..., (n-1)n}`.
    pub fn chain(n: usize) -> Self {
        let edges = (1..n).map(|i| (i, i + 1)).collect();
        Graph { n, edges }
    }

    /// Parses the shared graph text format: `complete:n`, `chain:n`,
    /// `empty:n`, or `n;i-j,i-j,...` (an empty edge list after `;` is
    /// allowed). Errors carry the byte position of the offending token.
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        let err = |pos: usize, msg: &str| Error::GraphParse {
            pos,
            msg: msg.to_string(),
        };
        if let Some((name, rest)) = spec.split_once(':') {
            let n: usize = rest
                .parse()
                .map_err(|_| err(name.len() + 1, "expected a positive vertex count"))?;
            if n == 0 {
                return Err(err(name.len() + 1, "vertex count must be positive"));
            }
            return match name {
                "complete" => Ok(Graph::complete(n)),
                "chain" => Ok(Graph::chain(n)),
                "empty" => Ok(Graph::empty(n)),
                _ => Err(err(0, "expected complete:, chain: or empty:")),
            };
        }
        let (head, tail) = spec
            .split_once(';')
            .ok_or_else(|| err(0, "expected name:n or n;edge-list"))?;
        let n: usize = head
            .parse()
            .map_err(|_| err(0, "expected a positive vertex count before ';'"))?;
        if n == 0 {
            return Err(err(0, "vertex count must be positive"));
        }
        let mut edges = Vec::new();
        let mut pos = head.len() + 1;
        if !tail.trim().is_empty() {
            for item in tail.split(',') {
                let token = item.trim();
                let token_pos = pos + (item.len() - item.trim_start().len());
                let (a, b) = token
                    .split_once('-')
                    .ok_or_else(|| err(token_pos, "expected i-j"))?;
                let a: usize = a
                    .trim()
                    .parse()
                    .map_err(|_| err(token_pos, "expected a vertex number"))?;
                let b: usize = b
                    .trim()
                    .parse()
                    .map_err(|_| err(token_pos, "expected a vertex number"))?;
                if a == b {
                    return Err(err(token_pos, "loops are not allowed"));
                }
                if a < 1 || a > n || b < 1 || b > n {
                    return Err(err(token_pos, "vertex out of range"));
                }
                if edges.contains(&(a.min(b), a.max(b))) {
                    return Err(err(token_pos, "duplicate edge"));
                }
                edges.push((a.min(b), a.max(b)));
                pos += item.len() + 1;
            }
        }
        Graph::new(n, edges)
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Whether `{i, j}` is an edge (orientation-insensitive).
    pub fn contains(&self, i: usize, j: usize) -> bool {
        i != j && self.edges.contains(&(i.min(j), i.max(j)))
    }

    /// Edges in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Outdegree of vertex `i`: the number of edges `ij` with `i < j`.
    pub fn out_degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|&&(a, _)| a == i).count()
    }

    /// All `2^C(n,2)` graphs on `[n]`, ordered by the edge subset read as a
    /// bitmask over the sorted pair list. Intended for exhaustive checks at
    /// small `n`.
    pub fn all_graphs(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = Graph::complete(n).edges().collect();
        let count = 1usize << pairs.len();
        (0..count)
            .map(|mask| {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(t, _)| mask >> t & 1 == 1)
                    .map(|(_, &e)| e);
                Graph {
                    n,
                    edges: edges.collect(),
                }
            })
            .collect()
    }

    /// A uniformly random edge subset of `K_n`, drawn from a ChaCha stream
    /// seeded with `seed`. Same seed, same graph.
    pub fn random_with_seed(n: usize, seed: u64) -> Graph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pairs: Vec<(usize, usize)> = Graph::complete(n).edges().collect();
        let mut edges = BTreeSet::new();
        let mut word = 0u64;
        for (t, &e) in pairs.iter().enumerate() {
            if t % 64 == 0 {
                word = rng.next_u64();
            }
            if word >> (t % 64) & 1 == 1 {
                edges.insert(e);
            }
        }
        Graph { n, edges }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.n)?;
        for (t, (i, j)) in self.edges().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}-{j}")?;
        }
        Ok(())
    }
}
