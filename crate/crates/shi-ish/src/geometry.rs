//! Exact geometric region oracle.
//!
//! Regions of an arrangement are encoded as strict sign vectors together
//! with an exact rational interior witness. Feasibility of strict systems is
//! decided exactly: difference systems (every normal of the form
//! `e_i - e_j`, which covers everything the builders produce) go through
//! shortest-path potentials with lexicographic (offset, strictness) weights,
//! and anything else falls back to Fourier-Motzkin elimination over the
//! rationals. Both paths return a witness point.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::arrangement::Arrangement;
use crate::census::Census;
use crate::{Error, Result};

/// Relation of a single constraint `a . x (rel) b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Lt,
    Gt,
    Eq,
}

/// One integer linear constraint.
#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<i64>,
    pub rhs: i64,
    pub rel: Relation,
}

/// A conjunction of strict inequalities and equalities with integer
/// coefficients.
#[derive(Debug, Clone, Default)]
pub struct StrictSystem {
    pub n: usize,
    pub constraints: Vec<Constraint>,
}

impl StrictSystem {
    pub fn new(n: usize) -> Self {
        StrictSystem {
            n,
            constraints: Vec::new(),
        }
    }

    pub fn push(&mut self, coeffs: Vec<i64>, rel: Relation, rhs: i64) {
        debug_assert_eq!(coeffs.len(), self.n);
        debug_assert!(coeffs.iter().any(|&c| c != 0));
        self.constraints.push(Constraint { coeffs, rhs, rel });
    }

    /// Whether `point` satisfies every constraint (strictly where strict).
    pub fn satisfied_by(&self, point: &[BigRational]) -> bool {
        self.constraints.iter().all(|c| {
            let lhs = dot(&c.coeffs, point);
            let rhs = BigRational::from(BigInt::from(c.rhs));
            match c.rel {
                Relation::Lt => lhs < rhs,
                Relation::Gt => lhs > rhs,
                Relation::Eq => lhs == rhs,
            }
        })
    }
}

fn dot(coeffs: &[i64], point: &[BigRational]) -> BigRational {
    let mut acc = BigRational::zero();
    for (c, x) in coeffs.iter().zip(point) {
        if *c != 0 {
            acc += BigRational::from(BigInt::from(*c)) * x;
        }
    }
    acc
}

/// Internal normalized form: `coeffs . x <= rhs`, strict when `strict`.
#[derive(Debug, Clone)]
struct LeConstraint {
    coeffs: Vec<i64>,
    rhs: i64,
    strict: bool,
}

impl LeConstraint {
    /// `(u, v)` when the constraint reads `x_u - x_v <= rhs` (1-based).
    fn difference_form(&self) -> Option<(usize, usize)> {
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
            (Some(u), Some(v)) => Some((u, v)),
            _ => None,
        }
    }
}

fn normalize(system: &StrictSystem) -> Vec<LeConstraint> {
    let mut out = Vec::with_capacity(system.constraints.len());
    for c in &system.constraints {
        match c.rel {
            Relation::Lt => out.push(LeConstraint {
                coeffs: c.coeffs.clone(),
                rhs: c.rhs,
                strict: true,
            }),
            Relation::Gt => out.push(LeConstraint {
                coeffs: c.coeffs.iter().map(|&x| -x).collect(),
                rhs: -c.rhs,
                strict: true,
            }),
            Relation::Eq => {
                out.push(LeConstraint {
                    coeffs: c.coeffs.clone(),
                    rhs: c.rhs,
                    strict: false,
                });
                out.push(LeConstraint {
                    coeffs: c.coeffs.iter().map(|&x| -x).collect(),
                    rhs: -c.rhs,
                    strict: false,
                });
            }
        }
    }
    out
}

/// Decides a strict system exactly, returning a rational witness when
/// feasible.
pub fn feasible_strict(system: &StrictSystem) -> Option<Vec<BigRational>> {
    let solution = solve_le_system(system.n, &normalize(system));
    debug_assert!(solution
        .as_ref()
        .is_none_or(|point| system.satisfied_by(point)));
    solution
}

fn solve_le_system(n: usize, constraints: &[LeConstraint]) -> Option<Vec<BigRational>> {
    let mut edges = Vec::with_capacity(constraints.len());
    for c in constraints {
        match c.difference_form() {
            Some((u, v)) => edges.push((u, v, c.rhs, c.strict)),
            None => return fourier_motzkin(n, constraints),
        }
    }
    difference_feasible(n, constraints.len(), &edges)
}

/// Shortest-path feasibility for difference systems. Each constraint
/// `x_u - x_v <= c` (strict: `< c`, modeled as weight `(c, -1)`) is an edge
/// `v -> u`; the system is feasible iff no cycle has lexicographically
/// negative total weight. Potentials from a virtual source yield the
/// witness `x_u = p_u + q_u * eps` for a small enough rational `eps`.
fn difference_feasible(
    n: usize,
    constraint_count: usize,
    edges: &[(usize, usize, i64, bool)],
) -> Option<Vec<BigRational>> {
    let mut dist: Vec<(i64, i64)> = vec![(0, 0); n + 1];
    for _ in 0..=n {
        let mut changed = false;
        for &(u, v, c, strict) in edges {
            let cand = (dist[v].0 + c, dist[v].1 - strict as i64);
            if cand < dist[u] {
                dist[u] = cand;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    for &(u, v, c, strict) in edges {
        let cand = (dist[v].0 + c, dist[v].1 - strict as i64);
        if cand < dist[u] {
            return None; // negative cycle
        }
    }
    let denom = BigInt::from(2 * (n as i64 + constraint_count as i64 + 1));
    Some(
        (1..=n)
            .map(|u| {
                let (p, q) = dist[u];
                BigRational::new(BigInt::from(p) * &denom + BigInt::from(q), denom.clone())
            })
            .collect(),
    )
}

/// Fourier-Motzkin elimination with exact rational bounds, used for systems
/// that are not in difference form. Variables are eliminated highest index
/// first; the recorded bounds drive back-substitution of a witness.
fn fourier_motzkin(n: usize, constraints: &[LeConstraint]) -> Option<Vec<BigRational>> {
    // rows: coeffs (rational), rhs, strict
    type Row = (Vec<BigRational>, BigRational, bool);
    let to_rational = |c: &LeConstraint| -> Row {
        (
            c.coeffs
                .iter()
                .map(|&x| BigRational::from(BigInt::from(x)))
                .collect(),
            BigRational::from(BigInt::from(c.rhs)),
            c.strict,
        )
    };
    let mut active: Vec<Row> = constraints.iter().map(to_rational).collect();
    // bounds_per_var[k - 1]: rows involving x_k with vars > k eliminated
    let mut bounds_per_var: Vec<Vec<Row>> = vec![Vec::new(); n];

    for var in (0..n).rev() {
        let mut lowers: Vec<Row> = Vec::new();
        let mut uppers: Vec<Row> = Vec::new();
        let mut rest: Vec<Row> = Vec::new();
        for row in active {
            match row.0[var].cmp(&BigRational::zero()) {
                Ordering::Greater => uppers.push(row),
                Ordering::Less => lowers.push(row),
                Ordering::Equal => rest.push(row),
            }
        }
        for lower in &lowers {
            for upper in &uppers {
                // combine a_l . x <= b_l (a_l[var] < 0) with a_u . x <= b_u
                // (a_u[var] > 0) to eliminate x_var
                let scale_l = -lower.0[var].clone();
                let scale_u = upper.0[var].clone();
                let coeffs: Vec<BigRational> = lower
                    .0
                    .iter()
                    .zip(&upper.0)
                    .map(|(l, u)| l * &scale_u + u * &scale_l)
                    .collect();
                debug_assert!(coeffs[var].is_zero());
                let rhs = &lower.1 * &scale_u + &upper.1 * &scale_l;
                let strict = lower.2 || upper.2;
                if coeffs.iter().all(|c| c.is_zero()) {
                    let bad = rhs.is_negative() || (rhs.is_zero() && strict);
                    if bad {
                        return None;
                    }
                } else {
                    rest.push((coeffs, rhs, strict));
                }
            }
        }
        bounds_per_var[var] = lowers.into_iter().chain(uppers).collect();
        active = rest;
    }
    for (coeffs, rhs, strict) in &active {
        debug_assert!(coeffs.iter().all(|c| c.is_zero()));
        if rhs.is_negative() || (rhs.is_zero() && *strict) {
            return None;
        }
    }

    let mut point = vec![BigRational::zero(); n];
    for var in 0..n {
        let mut lower: Option<(BigRational, bool)> = None;
        let mut upper: Option<(BigRational, bool)> = None;
        for (coeffs, rhs, strict) in &bounds_per_var[var] {
            let mut residual = rhs.clone();
            for t in 0..var {
                residual -= &coeffs[t] * &point[t];
            }
            let bound = &residual / &coeffs[var];
            if coeffs[var].is_positive() {
                // x_var <= bound
                let tighter = upper
                    .as_ref()
                    .is_none_or(|(b, s)| bound < *b || (bound == *b && *strict && !s));
                if tighter {
                    upper = Some((bound, *strict));
                }
            } else {
                let tighter = lower
                    .as_ref()
                    .is_none_or(|(b, s)| bound > *b || (bound == *b && *strict && !s));
                if tighter {
                    lower = Some((bound, *strict));
                }
            }
        }
        point[var] = match (&lower, &upper) {
            (None, None) => BigRational::zero(),
            (Some((l, _)), None) => l + BigRational::from(BigInt::from(1)),
            (None, Some((u, _))) => u - BigRational::from(BigInt::from(1)),
            (Some((l, ls)), Some((u, us))) => {
                if l < u {
                    (l + u) / BigRational::from(BigInt::from(2))
                } else if l == u && !ls && !us {
                    l.clone()
                } else {
                    // elimination already certified feasibility
                    return None;
                }
            }
        };
    }
    Some(point)
}

/// One side of a hyperplane: `Plus` means `a . x > b` on the region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A region certificate: the strict side of every hyperplane plus an exact
/// interior point.
#[derive(Debug, Clone)]
pub struct Region {
    pub signs: Vec<Sign>,
    pub witness: Vec<BigRational>,
}

impl Region {
    pub fn signs_string(&self) -> String {
        self.signs.iter().map(|s| s.as_char()).collect()
    }

    /// Witness coordinates as f64, for plotting and display.
    pub fn witness_approx(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.witness
            .iter()
            .map(|q| q.to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

/// Walls, ceilings, recession dimension and dominance of one region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionStats {
    pub walls: Vec<usize>,
    pub ceilings: Vec<usize>,
    pub dof: usize,
    pub dominant: bool,
}

fn region_system(arr: &Arrangement, signs: &[Sign], equality: Option<usize>) -> Vec<LeConstraint> {
    let mut out = Vec::with_capacity(signs.len() + 1);
    for (k, sign) in signs.iter().enumerate() {
        let h = &arr.hyperplanes()[k];
        if equality == Some(k) {
            out.push(LeConstraint {
                coeffs: h.coeffs.clone(),
                rhs: h.rhs,
                strict: false,
            });
            out.push(LeConstraint {
                coeffs: h.coeffs.iter().map(|&c| -c).collect(),
                rhs: -h.rhs,
                strict: false,
            });
            continue;
        }
        match sign {
            Sign::Minus => out.push(LeConstraint {
                coeffs: h.coeffs.clone(),
                rhs: h.rhs,
                strict: true,
            }),
            Sign::Plus => out.push(LeConstraint {
                coeffs: h.coeffs.iter().map(|&c| -c).collect(),
                rhs: -h.rhs,
                strict: true,
            }),
        }
    }
    out
}

/// Finds an interior witness for the prescribed sign vector, or `None` when
/// that open cell is empty.
pub fn witness_for_signs(arr: &Arrangement, signs: &[Sign]) -> Option<Vec<BigRational>> {
    solve_le_system(arr.n(), &region_system(arr, signs, None))
}

/// Enumerates all regions by inserting hyperplanes in arrangement order and
/// splitting every region whose interior meets the new hyperplane. The
/// result is deterministic: children keep the parent's order, `Plus` side
/// first.
pub fn enumerate_regions(arr: &Arrangement, max_hyperplanes: usize) -> Result<Vec<Region>> {
    if arr.len() > max_hyperplanes {
        return Err(Error::GuardExceeded {
            what: "hyperplanes for region enumeration",
            got: arr.len(),
            limit: max_hyperplanes,
        });
    }
    let mut regions = vec![Region {
        signs: Vec::new(),
        witness: vec![BigRational::zero(); arr.n()],
    }];
    for k in 0..arr.len() {
        let hyperplane = &arr.hyperplanes()[k];
        let mut next = Vec::with_capacity(regions.len() + 8);
        for region in regions {
            let value = hyperplane.eval(&region.witness);
            let witness_side = match value.cmp(&BigRational::zero()) {
                Ordering::Greater => Some(Sign::Plus),
                Ordering::Less => Some(Sign::Minus),
                Ordering::Equal => None,
            };
            for side in [Sign::Plus, Sign::Minus] {
                let mut signs = region.signs.clone();
                signs.push(side);
                if witness_side == Some(side) {
                    next.push(Region {
                        signs,
                        witness: region.witness.clone(),
                    });
                } else if let Some(witness) =
                    solve_le_system(arr.n(), &region_system(arr, &signs, None))
                {
                    next.push(Region { signs, witness });
                }
            }
        }
        regions = next;
    }
    Ok(regions)
}

/// A hyperplane is a wall when forcing it to equality, keeping all other
/// strict sides, still has a solution (a relative-interior point of a
/// codimension-1 face).
pub fn walls(arr: &Arrangement, region: &Region) -> Vec<usize> {
    (0..arr.len())
        .filter(|&k| solve_le_system(arr.n(), &region_system(arr, &region.signs, Some(k))).is_some())
        .collect()
}

/// Ceilings: walls not through the origin with the region on the origin's
/// side.
pub fn ceilings(arr: &Arrangement, region: &Region) -> Vec<usize> {
    ceilings_of_walls(arr, region, &walls(arr, region))
}

fn ceilings_of_walls(arr: &Arrangement, region: &Region, walls: &[usize]) -> Vec<usize> {
    walls
        .iter()
        .copied()
        .filter(|&k| {
            let rhs = arr.hyperplanes()[k].rhs;
            (rhs > 0 && region.signs[k] == Sign::Minus)
                || (rhs < 0 && region.signs[k] == Sign::Plus)
        })
        .collect()
}

/// Dimension of the recession cone `{v : v + R subseteq R}`. Constraint
/// `k` is an implicit equality of the cone iff the cone cannot make its
/// defining form at least 1; the dimension is `n` minus the rank of the
/// implicit-equality normals.
pub fn recession_dim(arr: &Arrangement, region: &Region) -> usize {
    let n = arr.n();
    // cone: for each k, oriented normal c_k has c_k . v >= 0
    let oriented: Vec<Vec<i64>> = region
        .signs
        .iter()
        .enumerate()
        .map(|(k, sign)| {
            let h = &arr.hyperplanes()[k];
            match sign {
                Sign::Plus => h.coeffs.clone(),
                Sign::Minus => h.coeffs.iter().map(|&c| -c).collect(),
            }
        })
        .collect();
    let base: Vec<LeConstraint> = oriented
        .iter()
        .map(|c| LeConstraint {
            coeffs: c.iter().map(|&x| -x).collect(),
            rhs: 0,
            strict: false,
        })
        .collect();
    let mut implicit = Vec::new();
    for (k, c) in oriented.iter().enumerate() {
        let mut system = base.clone();
        system.push(LeConstraint {
            coeffs: c.iter().map(|&x| -x).collect(),
            rhs: -1,
            strict: false,
        });
        if solve_le_system(n, &system).is_none() {
            implicit.push(k);
        }
    }
    let rows: Vec<Vec<BigInt>> = implicit
        .iter()
        .map(|&k| oriented[k].iter().map(|&c| BigInt::from(c)).collect())
        .collect();
    n - crate::arrangement::integer_rank(rows)
}

/// Whether the region lies in the dominant cone `x_1 > x_2 > ... > x_n`,
/// read off the signs of the hyperplanes through the origin.
pub fn is_dominant(arr: &Arrangement, region: &Region) -> bool {
    arr.hyperplanes().iter().enumerate().all(|(k, h)| {
        if h.rhs != 0 {
            return true;
        }
        match h.difference_form() {
            Some((i, j)) if i < j => region.signs[k] == Sign::Plus,
            Some((i, j)) if j < i => region.signs[k] == Sign::Minus,
            _ => true,
        }
    })
}

/// All per-region statistics at once.
pub fn region_stats(arr: &Arrangement, region: &Region) -> RegionStats {
    let walls = walls(arr, region);
    let ceilings = ceilings_of_walls(arr, region, &walls);
    RegionStats {
        dof: recession_dim(arr, region),
        dominant: is_dominant(arr, region),
        walls,
        ceilings,
    }
}

/// The joint (ceilings, degrees-of-freedom) census of all regions, with the
/// dominant sub-census.
pub fn region_census(arr: &Arrangement, max_hyperplanes: usize) -> Result<Census> {
    let regions = enumerate_regions(arr, max_hyperplanes)?;
    let mut census = Census::default();
    for region in &regions {
        let stats = region_stats(arr, region);
        census.record(stats.ceilings.len(), stats.dof, stats.dominant);
    }
    Ok(census)
}

/// JSON-lines record for one region.
pub fn region_json(arr: &Arrangement, region: &Region) -> serde_json::Value {
    let stats = region_stats(arr, region);
    serde_json::json!({
        "signs": region.signs_string(),
        "witness": region.witness.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        "c": stats.ceilings.len(),
        "d": stats.dof,
        "dominant": stats.dominant,
    })
}

/// Census grouped by region count per sign prefix; used by tests to compare
/// against Zaslavsky counts region-by-region.
pub fn count_regions(arr: &Arrangement, max_hyperplanes: usize) -> Result<u64> {
    Ok(enumerate_regions(arr, max_hyperplanes)?.len() as u64)
}
