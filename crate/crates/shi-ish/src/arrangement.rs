//! Hyperplane arrangements in `R^n` with integer defining equations, and
//! their characteristic polynomials by three independent routes:
//!
//! 1. finite-field point counting plus exact Lagrange interpolation,
//! 2. the closed formula in terms of G-Stirling numbers,
//! 3. the Möbius function of the intersection poset (small arrangements).
//!
//! Region counts then follow from Zaslavsky's evaluations at `-1` and `1`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::graph::Graph;
use crate::partitions::g_stirling;
use crate::poly::{interpolate_integer, IntPolynomial};
use crate::{Error, Result};

/// An affine hyperplane `a . x = b` with integer coefficients, `a != 0`.
/// The builders in this module only produce difference hyperplanes
/// (`a = e_i - e_j`), but the type is general.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperplane {
    pub coeffs: Vec<i64>,
    pub rhs: i64,
}

impl Hyperplane {
    /// The hyperplane `x_i - x_j = b` (1-based coordinates).
    pub fn difference(n: usize, i: usize, j: usize, b: i64) -> Self {
        assert!(i != j && i >= 1 && j >= 1 && i <= n && j <= n);
        let mut coeffs = vec![0i64; n];
        coeffs[i - 1] = 1;
        coeffs[j - 1] = -1;
        Hyperplane { coeffs, rhs: b }
    }

    /// When the normal is `e_i - e_j`, returns `(i, j)` 1-based.
    pub fn difference_form(&self) -> Option<(usize, usize)> {
        let mut plus = None;
        let mut minus = None;
        for (t, &c) in self.coeffs.iter().enumerate() {
            match c {
                0 => {}
                1 if plus.is_none() => plus = Some(t + 1),
                -1 if minus.is_none() => minus = Some(t + 1),
                _ => return None,
            }
        }
        match (plus, minus) {
            (Some(i), Some(j)) => Some((i, j)),
            _ => None,
        }
    }

    /// Exact evaluation of `a . x - b` at a rational point.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        let mut acc = BigRational::from(BigInt::from(-self.rhs));
        for (c, x) in self.coeffs.iter().zip(point) {
            if *c != 0 {
                acc += BigRational::from(BigInt::from(*c)) * x;
            }
        }
        acc
    }

    /// Highest 1-based coordinate with a nonzero coefficient.
    fn max_support(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|&c| c != 0)
            .map(|t| t + 1)
            .expect("hyperplane normal is nonzero")
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (t, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "x{}", t + 1)?;
            first = false;
        }
        write!(f, " = {}", self.rhs)
    }
}

/// Which builder produced an arrangement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Cox,
    Shi,
    Ish,
    Custom,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Kind::Cox => "cox",
            Kind::Shi => "shi",
            Kind::Ish => "ish",
            Kind::Custom => "custom",
        };
        write!(f, "{name}")
    }
}

/// An ordered, duplicate-free list of hyperplanes in `R^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    n: usize,
    hyperplanes: Vec<Hyperplane>,
    kind: Kind,
    graph: Option<Graph>,
}

fn coxeter_hyperplanes(n: usize) -> Vec<Hyperplane> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            out.push(Hyperplane::difference(n, i, j, 0));
        }
    }
    out
}

/// The Coxeter (braid) arrangement `x_i - x_j = 0`.
pub fn build_cox(n: usize) -> Result<Arrangement> {
    if n < 2 {
        return Err(Error::DimensionTooSmall { min: 2, got: n });
    }
    Ok(Arrangement {
        n,
        hyperplanes: coxeter_hyperplanes(n),
        kind: Kind::Cox,
        graph: None,
    })
}

/// The deleted Shi arrangement: `Cox(n)` plus `x_i - x_j = 1` per edge.
pub fn build_shi(g: &Graph) -> Arrangement {
    let n = g.n();
    let mut hyperplanes = coxeter_hyperplanes(n);
    for (i, j) in g.edges() {
        hyperplanes.push(Hyperplane::difference(n, i, j, 1));
    }
    Arrangement::dedup(n, hyperplanes, Kind::Shi, Some(g.clone()))
}

/// The deleted Ish arrangement: `Cox(n)` plus `x_1 - x_j = i` per edge `ij`.
pub fn build_ish(g: &Graph) -> Arrangement {
    let n = g.n();
    let mut hyperplanes = coxeter_hyperplanes(n);
    for (i, j) in g.edges() {
        hyperplanes.push(Hyperplane {
            coeffs: {
                let mut c = vec![0i64; n];
                c[0] += 1;
                c[j - 1] -= 1;
                c
            },
            rhs: i as i64,
        });
    }
    Arrangement::dedup(n, hyperplanes, Kind::Ish, Some(g.clone()))
}

impl Arrangement {
    /// An arbitrary arrangement; hyperplanes are deduplicated up to positive
    /// scaling, keeping first occurrences in order.
    pub fn custom(n: usize, hyperplanes: Vec<Hyperplane>) -> Self {
        Arrangement::dedup(n, hyperplanes, Kind::Custom, None)
    }

    fn dedup(n: usize, hyperplanes: Vec<Hyperplane>, kind: Kind, graph: Option<Graph>) -> Self {
        let mut seen = BTreeSet::new();
        let mut kept = Vec::with_capacity(hyperplanes.len());
        for h in hyperplanes {
            debug_assert_eq!(h.coeffs.len(), n);
            debug_assert!(h.coeffs.iter().any(|&c| c != 0));
            let mut canon = h.clone();
            let gcd = canon
                .coeffs
                .iter()
                .chain(std::iter::once(&canon.rhs))
                .fold(0i64, |acc, &c| num_integer::gcd(acc, c));
            if gcd > 1 {
                for c in &mut canon.coeffs {
                    *c /= gcd;
                }
                canon.rhs /= gcd;
            }
            if canon.coeffs.iter().find(|&&c| c != 0).copied().unwrap_or(0) < 0 {
                for c in &mut canon.coeffs {
                    *c = -*c;
                }
                canon.rhs = -canon.rhs;
            }
            if seen.insert(canon) {
                kept.push(h);
            }
        }
        Arrangement {
            n,
            hyperplanes: kept,
            kind,
            graph,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn graph(&self) -> Option<&Graph> {
        self.graph.as_ref()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// Rank: the dimension of the span of the normal vectors, computed by
    /// fraction-free elimination over the integers.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<BigInt>> = self
            .hyperplanes
            .iter()
            .map(|h| h.coeffs.iter().map(|&c| BigInt::from(c)).collect())
            .collect();
        integer_rank(rows)
    }

    /// Counts points of `F_p^n` avoiding every reduced hyperplane. The
    /// sweep fixes coordinates left to right and prunes with each hyperplane
    /// as soon as its support is fully assigned, so arrangements containing
    /// `Cox(n)` effectively sweep injective labelings only.
    pub fn count_complement_points(&self, p: u64) -> Result<BigUint> {
        if p as usize <= self.n {
            return Err(Error::PrimeTooSmall { p, n: self.n });
        }
        debug_assert!(is_prime(p));
        // constraints[d]: hyperplanes whose last supported coordinate is d+1,
        // stored as (lower coefficients, own coefficient inverse, rhs)
        let mut constraints: Vec<Vec<(Vec<i64>, u64, i64)>> = vec![Vec::new(); self.n];
        for h in &self.hyperplanes {
            let d = h.max_support();
            let own = h.coeffs[d - 1].rem_euclid(p as i64) as u64;
            assert!(own != 0, "leading coefficient vanishes mod p");
            constraints[d - 1].push((h.coeffs[..d - 1].to_vec(), mod_inverse(own, p), h.rhs));
        }
        let mut assigned = vec![0u64; self.n];
        let mut count = BigUint::zero();
        sweep(p, &constraints, &mut assigned, 0, &mut count);
        Ok(count)
    }

    /// The n+1 smallest primes strictly greater than n, the evaluation
    /// points used for interpolation.
    pub fn interpolation_primes(&self) -> Vec<u64> {
        primes_greater_than(self.n as u64, self.n + 1)
    }

    /// Characteristic polynomial via finite-field counting at the
    /// interpolation primes. Verifies that the interpolant is monic of
    /// degree n with integer coefficients; failure of any of these signals
    /// that the prime threshold heuristic was too low.
    pub fn charpoly_interpolated(&self) -> Result<IntPolynomial> {
        let mut points = Vec::with_capacity(self.n + 1);
        for p in self.interpolation_primes() {
            let y = self.count_complement_points(p)?;
            points.push((BigInt::from(p), BigInt::from(y)));
        }
        let chi = interpolate_integer(&points)?;
        if chi.degree() != self.n || !chi.leading_coefficient().is_one() {
            return Err(Error::PrimeThresholdTooLow);
        }
        Ok(chi)
    }

    /// The intersection poset: all distinct nonempty intersections of
    /// subsets of hyperplanes, keyed by the reduced row-echelon form of
    /// their defining systems. Cost grows as `2^len`, guarded.
    pub fn intersection_poset(&self, max_hyperplanes: usize) -> Result<IntersectionPoset> {
        if self.len() > max_hyperplanes {
            return Err(Error::GuardExceeded {
                what: "hyperplanes for intersection poset",
                got: self.len(),
                limit: max_hyperplanes,
            });
        }
        let mut flats: Vec<Flat> = Vec::new();
        let mut seen: BTreeSet<Vec<Vec<BigRational>>> = BTreeSet::new();
        for mask in 0u64..(1u64 << self.len()) {
            let rows: Vec<Vec<BigRational>> = (0..self.len())
                .filter(|t| mask >> t & 1 == 1)
                .map(|t| {
                    let h = &self.hyperplanes[t];
                    h.coeffs
                        .iter()
                        .map(|&c| BigRational::from(BigInt::from(c)))
                        .chain(std::iter::once(BigRational::from(BigInt::from(h.rhs))))
                        .collect()
                })
                .collect();
            let Some(rref) = rational_rref(rows, self.n) else {
                continue; // inconsistent system: empty intersection
            };
            if seen.insert(rref.clone()) {
                let dim = self.n - rref.len();
                flats.push(Flat { rref, dim });
            }
        }
        // minimum (R^n) first, then by decreasing dimension
        flats.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| a.rref.cmp(&b.rref)));
        Ok(IntersectionPoset { n: self.n, flats })
    }

    /// Characteristic polynomial straight from the definition: Möbius
    /// function over the intersection poset, weighted by `p^dim`.
    pub fn charpoly_via_mobius(&self, max_hyperplanes: usize) -> Result<IntPolynomial> {
        let poset = self.intersection_poset(max_hyperplanes)?;
        let mobius = poset.mobius_from_minimum();
        let mut coeffs = vec![BigInt::zero(); self.n + 1];
        for (flat, mu) in poset.flats.iter().zip(&mobius) {
            coeffs[flat.dim] += mu;
        }
        Ok(IntPolynomial::new(coeffs))
    }
}

/// A nonempty intersection subspace, canonicalized by the RREF of its
/// defining linear system (each row: n coefficients then the constant).
#[derive(Debug, Clone)]
pub struct Flat {
    pub rref: Vec<Vec<BigRational>>,
    pub dim: usize,
}

/// Intersection poset ordered by reverse inclusion; `flats[0]` is the
/// minimum element `R^n`.
#[derive(Debug, Clone)]
pub struct IntersectionPoset {
    pub n: usize,
    pub flats: Vec<Flat>,
}

impl IntersectionPoset {
    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// Whether flat `a` contains flat `b` as subspaces (i.e. `a <= b` in the
    /// reverse-inclusion order): every defining row of `a` must reduce to
    /// zero against the system of `b`.
    fn contains(&self, a: usize, b: usize) -> bool {
        let (fa, fb) = (&self.flats[a], &self.flats[b]);
        if fa.dim < fb.dim {
            return false;
        }
        fa.rref.iter().all(|row| reduces_to_zero(row, &fb.rref))
    }

    /// Möbius values `mu(R^n, X)` for every flat, in `flats` order.
    pub fn mobius_from_minimum(&self) -> Vec<BigInt> {
        let mut mu: Vec<BigInt> = vec![BigInt::one()];
        for x in 1..self.flats.len() {
            let mut acc = BigInt::zero();
            for (y, mu_y) in mu.iter().enumerate() {
                if self.contains(y, x) {
                    acc += mu_y;
                }
            }
            // flats sorted by decreasing dim: every strictly smaller poset
            // element already has its value
            debug_assert!((x..self.flats.len()).all(|y| y == x || !self.contains(y, x)));
            mu.push(-acc);
        }
        mu
    }
}

/// Closed form for the shared characteristic polynomial of `Shi(G)` and
/// `Ish(G)`: `p * sum_k (-1)^k Stir(G, n-k) (p-k-1)(p-k-2)...(p-n+1)`,
/// expanded as a polynomial identity (the falling-factorial quotient is the
/// product of the linear terms, never a factorial ratio).
pub fn charpoly_closed_form(g: &Graph) -> IntPolynomial {
    let n = g.n();
    let mut sum = IntPolynomial::zero();
    for k in 0..n {
        let stir = g_stirling(g, n - k);
        if stir.is_zero() {
            continue;
        }
        let mut term = IntPolynomial::constant(BigInt::from(stir));
        for j in (k + 1)..n {
            term = &term * &IntPolynomial::x_minus(j as i64);
        }
        if k % 2 == 0 {
            sum = &sum + &term;
        } else {
            sum = &sum - &term;
        }
    }
    &IntPolynomial::x() * &sum
}

/// Product form `p * prod_i (p - d_i - i)` with `d_i` the outdegree of `i`,
/// valid when every below-neighborhood is an initial segment: for
/// `i < j < k`, `jk in G` forces `ik in G`. Returns the violating triple
/// otherwise.
pub fn charpoly_product_form(g: &Graph) -> Result<IntPolynomial> {
    let n = g.n();
    for (j, k) in g.edges() {
        for i in 1..j {
            if !g.contains(i, k) {
                return Err(Error::NotClosedForProductFormula(i, j, k));
            }
        }
    }
    let mut chi = IntPolynomial::x();
    for i in 1..n {
        chi = &chi * &IntPolynomial::x_minus((g.out_degree(i) + i) as i64);
    }
    Ok(chi)
}

/// Zaslavsky: the number of regions is `(-1)^n chi(-1)`.
pub fn zaslavsky_regions(chi: &IntPolynomial, n: usize) -> BigUint {
    let value = chi.eval(&BigInt::from(-1));
    let signed = if n.is_multiple_of(2) { value } else { -value };
    signed.to_biguint().expect("region count is nonnegative")
}

/// Zaslavsky: the number of relatively bounded regions is `(-1)^r chi(1)`
/// where `r` is the rank.
pub fn zaslavsky_relatively_bounded(chi: &IntPolynomial, rank: usize) -> BigUint {
    let value = chi.eval(&BigInt::one());
    let signed = if rank.is_multiple_of(2) { value } else { -value };
    signed
        .to_biguint()
        .expect("relatively bounded count is nonnegative")
}

fn sweep(
    p: u64,
    constraints: &[Vec<(Vec<i64>, u64, i64)>],
    assigned: &mut [u64],
    depth: usize,
    count: &mut BigUint,
) {
    let n = constraints.len();
    // forbidden values for coordinate `depth + 1`
    let mut forbidden: Vec<u64> = Vec::with_capacity(constraints[depth].len());
    for (lower, inv, rhs) in &constraints[depth] {
        let mut partial = rhs.rem_euclid(p as i64) as u64;
        for (c, v) in lower.iter().zip(assigned.iter()) {
            let term = (*c as i128 * *v as i128).rem_euclid(p as i128) as u64;
            partial = (partial + p - term) % p;
        }
        forbidden.push(partial * inv % p);
    }
    forbidden.sort_unstable();
    forbidden.dedup();
    if depth + 1 == n {
        *count += BigUint::from(p - forbidden.len() as u64);
        return;
    }
    for v in 0..p {
        if forbidden.binary_search(&v).is_err() {
            assigned[depth] = v;
            sweep(p, constraints, assigned, depth + 1, count);
        }
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The `count` smallest primes strictly greater than `floor`.
pub fn primes_greater_than(floor: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate = floor + 1;
    while out.len() < count {
        if is_prime(candidate) {
            out.push(candidate);
        }
        candidate += 1;
    }
    out
}

pub(crate) fn integer_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (pivot_row, rest) = {
            let (head, tail) = rows.split_at_mut(rank + 1);
            (&head[rank], tail)
        };
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let a = pivot_row[col].clone();
            let b = row[col].clone();
            for c in col..cols {
                row[c] = &row[c] * &a - &pivot_row[c] * &b;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Exact RREF of an augmented system (`cols` coefficient columns plus one
/// constant column), with pivots scaled to 1 and cleared above and below.
/// Returns `None` when the system is inconsistent.
fn rational_rref(mut rows: Vec<Vec<BigRational>>, cols: usize) -> Option<Vec<Vec<BigRational>>> {
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let scale = rows[pivot_row][col].clone();
        for v in rows[pivot_row][col..=cols].iter_mut() {
            *v = v.clone() / &scale;
        }
        let pivot_copy = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, pv) in row[col..=cols].iter_mut().zip(&pivot_copy[col..=cols]) {
                *v = v.clone() - &factor * pv;
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    let mut kept = Vec::with_capacity(pivot_row);
    for (r, row) in rows.into_iter().enumerate() {
        let coeff_zero = row[..cols].iter().all(|v| v.is_zero());
        if coeff_zero {
            if !row[cols].is_zero() {
                return None; // 0 = c with c != 0
            }
        } else {
            debug_assert!(r < pivot_row);
            kept.push(row);
        }
    }
    Some(kept)
}

/// Whether `row` lies in the row space of the RREF system `basis`.
fn reduces_to_zero(row: &[BigRational], basis: &[Vec<BigRational>]) -> bool {
    let mut work = row.to_vec();
    for basis_row in basis {
        let lead = basis_row
            .iter()
            .position(|v| !v.is_zero())
            .expect("basis rows are nonzero");
        if work[lead].is_zero() {
            continue;
        }
        let factor = work[lead].clone();
        for (w, b) in work.iter_mut().zip(basis_row) {
            let v = w.clone() - &factor * b;
            *w = v;
        }
    }
    work.iter().all(|v| v.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn builders_have_expected_sizes() {
        let shi3 = build_shi(&Graph::complete(3));
        assert_eq!(shi3.len(), 6);
        assert_eq!(shi3.kind(), Kind::Shi);
        let ish_empty = build_ish(&Graph::empty(4));
        assert_eq!(
            ish_empty.hyperplanes(),
            build_cox(4).unwrap().hyperplanes()
        );
        let ish_chain = build_ish(&Graph::chain(3));
        let extra: Vec<String> = ish_chain.hyperplanes()[3..]
            .iter()
            .map(|h| h.to_string())
            .collect();
        assert_eq!(extra, vec!["x1 - x2 = 1", "x1 - x3 = 2"]);
        for g in Graph::all_graphs(4) {
            assert_eq!(build_shi(&g).len(), 6 + g.edge_count());
            assert_eq!(build_ish(&g).len(), 6 + g.edge_count());
        }
    }

    #[test]
    fn cox_rejects_small_dimension() {
        assert!(build_cox(1).is_err());
        assert!(build_cox(0).is_err());
    }

    #[test]
    fn dedup_removes_scaled_duplicates() {
        let h1 = Hyperplane {
            coeffs: vec![1, -1],
            rhs: 1,
        };
        let h2 = Hyperplane {
            coeffs: vec![-2, 2],
            rhs: -2,
        };
        let a = Arrangement::custom(2, vec![h1.clone(), h2]);
        assert_eq!(a.hyperplanes(), &[h1]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(build_cox(3).unwrap().rank(), 2);
        for g in Graph::all_graphs(4) {
            assert_eq!(build_shi(&g).rank(), 3);
            assert_eq!(build_ish(&g).rank(), 3);
        }
        let single = Arrangement::custom(
            3,
            vec![Hyperplane {
                coeffs: vec![1, -1, 0],
                rhs: 0,
            }],
        );
        assert_eq!(single.rank(), 1);
    }

    #[test]
    fn point_counts_match_known_values() {
        let shi3 = build_shi(&Graph::complete(3));
        assert_eq!(shi3.count_complement_points(5).unwrap(), BigUint::from(20u32));
        let cox2 = build_cox(2).unwrap();
        assert_eq!(cox2.count_complement_points(5).unwrap(), BigUint::from(20u32));
        let ish_chain = build_ish(&Graph::chain(3));
        assert_eq!(
            ish_chain.count_complement_points(5).unwrap(),
            BigUint::from(35u32)
        );
        assert!(shi3.count_complement_points(3).is_err());
    }

    #[test]
    fn interpolated_charpolys() {
        let shi3 = build_shi(&Graph::complete(3));
        let ish3 = build_ish(&Graph::complete(3));
        let expected = poly(&[0, 9, -6, 1]); // p(p-3)^2
        assert_eq!(shi3.charpoly_interpolated().unwrap(), expected);
        assert_eq!(ish3.charpoly_interpolated().unwrap(), expected);
        let cox3 = build_cox(3).unwrap();
        assert_eq!(cox3.charpoly_interpolated().unwrap(), poly(&[0, 2, -3, 1]));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(charpoly_closed_form(&Graph::complete(3)), poly(&[0, 9, -6, 1]));
        assert_eq!(charpoly_closed_form(&Graph::chain(3)), poly(&[0, 7, -5, 1]));
        // empty graph: only the k = 0 term survives
        assert_eq!(
            charpoly_closed_form(&Graph::empty(4)),
            poly(&[0, -6, 11, -6, 1])
        );
    }

    #[test]
    fn product_form_examples() {
        let k4 = charpoly_product_form(&Graph::complete(4)).unwrap();
        let expected = &IntPolynomial::x()
            * &(&IntPolynomial::x_minus(4) * &(&IntPolynomial::x_minus(4) * &IntPolynomial::x_minus(4)));
        assert_eq!(k4, expected);
        let g = Graph::new(3, [(1, 3), (2, 3)]).unwrap();
        assert_eq!(charpoly_product_form(&g).unwrap(), poly(&[0, 6, -5, 1]));
        assert_eq!(charpoly_product_form(&g).unwrap(), charpoly_closed_form(&g));
        match charpoly_product_form(&Graph::chain(3)) {
            Err(Error::NotClosedForProductFormula(1, 2, 3)) => {}
            other => panic!("expected closure violation, got {other:?}"),
        }
    }

    #[test]
    fn mobius_route_agrees() {
        let cox2 = build_cox(2).unwrap();
        let poset = cox2.intersection_poset(14).unwrap();
        assert_eq!(poset.len(), 2);
        assert_eq!(cox2.charpoly_via_mobius(14).unwrap(), poly(&[0, -1, 1]));
        let shi3 = build_shi(&Graph::complete(3));
        assert_eq!(shi3.charpoly_via_mobius(14).unwrap(), poly(&[0, 9, -6, 1]));
        let ish_chain = build_ish(&Graph::chain(3));
        assert_eq!(ish_chain.charpoly_via_mobius(14).unwrap(), poly(&[0, 7, -5, 1]));
    }

    #[test]
    fn mobius_guard_refuses_large_input() {
        let shi4 = build_shi(&Graph::complete(4));
        assert!(matches!(
            shi4.charpoly_via_mobius(10),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn zaslavsky_counts() {
        let shi3 = poly(&[0, 9, -6, 1]);
        assert_eq!(zaslavsky_regions(&shi3, 3), BigUint::from(16u32));
        assert_eq!(zaslavsky_relatively_bounded(&shi3, 2), BigUint::from(4u32));
        let chain = poly(&[0, 7, -5, 1]);
        assert_eq!(zaslavsky_regions(&chain, 3), BigUint::from(13u32));
        assert_eq!(zaslavsky_relatively_bounded(&chain, 2), BigUint::from(3u32));
        let cox4 = charpoly_closed_form(&Graph::empty(4));
        assert_eq!(zaslavsky_regions(&cox4, 4), BigUint::from(24u32));
        assert_eq!(zaslavsky_relatively_bounded(&cox4, 3), BigUint::zero());
    }

    #[test]
    fn primes_helper() {
        assert_eq!(primes_greater_than(3, 4), vec![5, 7, 11, 13]);
        assert_eq!(primes_greater_than(5, 6), vec![7, 11, 13, 17, 19, 23]);
    }
}
