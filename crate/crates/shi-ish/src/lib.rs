//! Exact-arithmetic construction and region combinatorics of deleted Shi and
//! Ish hyperplane arrangements.
//!
//! For a simple loopless graph `G` on the vertex set `[n]` this crate builds
//! the arrangements
//!
//! - `Cox(n)`: the hyperplanes `x_i - x_j = 0` for `1 <= i < j <= n`,
//! - `Shi(G)`: `Cox(n)` together with `x_i - x_j = 1` for each edge `ij` of `G`,
//! - `Ish(G)`: `Cox(n)` together with `x_1 - x_j = i` for each edge `ij` of `G`,
//!
//! and provides three independent views of their region structure:
//!
//! - [`arrangement`]: characteristic polynomials via finite-field point
//!   counting, a closed Stirling-number formula, and the Möbius function of
//!   the intersection poset, plus region counts by Zaslavsky evaluation;
//! - [`geometry`]: exact enumeration of the regions themselves as sign
//!   vectors with rational interior witnesses, with walls, ceilings,
//!   dominance, and recession-cone dimension computed per region;
//! - [`labelings`]: the combinatorial labels of the regions (ceiling
//!   diagrams), the region/diagram bijections, and closed-form region counts
//!   by ceiling partition and degrees of freedom.
//!
//! All arithmetic is exact: big integers for counting, big rationals for
//! geometry. The [`partitions`] module supplies the set-partition
//! combinatorics (arc diagrams, endpoint notation, nonnesting tests,
//! G-partitions and their Stirling numbers) the counting formulas are
//! phrased in.

pub mod arrangement;
pub mod census;
pub mod geometry;
pub mod graph;
pub mod labelings;
pub mod partitions;
pub mod poly;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Graph text that does not parse; `pos` is a byte offset into the spec string.
    #[error("invalid graph spec at byte {pos}: {msg}")]
    GraphParse { pos: usize, msg: String },
    /// A structurally invalid graph (loop, duplicate or out-of-range edge).
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    /// Blocks that do not partition `[n]`.
    #[error("invalid set partition: {0}")]
    InvalidPartition(String),
    /// Endpoint vectors violating the (alpha, beta) invariants.
    #[error("invalid endpoint pair: {0}")]
    InvalidEndpoint(String),
    /// A type vector whose entries do not describe block sizes of a partition of `[n]`.
    #[error("invalid type vector: {0}")]
    InvalidTypeVector(String),
    /// A sequence that is not a permutation of `1..=n`.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    /// Arrangement construction with an unusable dimension.
    #[error("dimension must be at least {min}, got {got}")]
    DimensionTooSmall { min: usize, got: usize },
    /// Finite-field counting with a prime that is too small for the method.
    #[error("prime {p} must exceed the dimension {n}")]
    PrimeTooSmall { p: u64, n: usize },
    /// Lagrange interpolation produced a non-integer coefficient, meaning the
    /// evaluation primes were below the threshold where point counts agree
    /// with the characteristic polynomial.
    #[error("prime threshold too low: interpolation produced non-integer coefficients")]
    PrimeThresholdTooLow,
    /// The closure property required by the product formula fails.
    #[error("graph is not closed under (i<j<k, jk in G => ik in G): witness ({0}, {1}, {2})")]
    NotClosedForProductFormula(usize, usize, usize),
    /// A computation refused because it would exceed a size guard.
    #[error("guard exceeded: {what} = {got} is over the limit {limit}")]
    GuardExceeded {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    /// Mismatched dimensions between two objects (graph vs. permutation, ...).
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// A sign vector or diagram that does not correspond to any region.
    #[error("no region matches: {0}")]
    NoSuchRegion(String),
    /// An arrangement of the wrong kind for the requested labeling.
    #[error("expected a {expected} arrangement, got {got}")]
    KindMismatch { expected: &'static str, got: String },
    /// A ceiling diagram violating its defining conditions.
    #[error("invalid ceiling diagram: {0}")]
    InvalidDiagram(String),
    /// A witness point with tied coordinates cannot be assigned to a cone.
    #[error("witness has tied coordinates {0} and {1}; not interior to a Coxeter cone")]
    TiedWitness(usize, usize),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
