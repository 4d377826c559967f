//! Combinatorial labels for the regions of `Shi(G)` and `Ish(G)`.
//!
//! Fix a cone `wC` of the Coxeter arrangement. The affine Shi hyperplanes
//! that meet it form a poset whose order ideals are exactly the `Shi(G)`
//! regions inside the cone; the affine Ish hyperplanes that meet it form a
//! poset whose order filters are exactly the `Ish(G)` regions. Each region
//! is recorded as a ceiling diagram: `(w, pi)` with `pi` a nonnesting
//! partition of positions for Shi, `(w, eps)` with an increasing level
//! vector for Ish. The diagrams determine the region's ceilings, its
//! ceiling partition in endpoint notation, and its degrees of freedom, all
//! without touching geometry, which is exactly what makes them useful as an
//! independent cross-check of the geometric oracle.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arrangement::{Arrangement, Kind};
use crate::census::Census;
use crate::geometry::{witness_for_signs, Region, Sign};
use crate::graph::Graph;
use crate::partitions::{binomial, factorial, stirling2, EndpointPair, SetPartition};
use crate::{Error, Result};

/// A permutation of `[n]` in one-line notation: `value(i) = w(i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    one_line: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            one_line: (1..=n).collect(),
        }
    }

    pub fn from_one_line(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v < 1 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{one_line:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Perm { one_line })
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    /// `w(i)` for a 1-based position.
    pub fn value(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    /// `w^{-1}(v)` for a 1-based value.
    pub fn position(&self, v: usize) -> usize {
        self.one_line.iter().position(|&x| x == v).expect("value in range") + 1
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(t, &v)| v == t + 1)
    }

    /// All permutations of `[n]` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut values: Vec<usize> = (1..=n).collect();
        let mut prefix = Vec::with_capacity(n);
        fn recurse(values: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Perm>) {
            if values.is_empty() {
                out.push(Perm {
                    one_line: prefix.clone(),
                });
                return;
            }
            for t in 0..values.len() {
                let v = values.remove(t);
                prefix.push(v);
                recurse(values, prefix, out);
                prefix.pop();
                values.insert(t, v);
            }
        }
        recurse(&mut values, &mut prefix, &mut out);
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, v) in self.one_line.iter().enumerate() {
            if t > 0 && self.n() > 9 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Which family of diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramKind {
    Shi,
    Ish,
}

/// The poset of affine Shi hyperplanes meeting the cone `wC`. Elements are
/// position pairs `(i, j)`, `i < j`, with `w(i) < w(j)` and `{w(i), w(j)}`
/// an edge; the hyperplane is `x_{w(i)} - x_{w(j)} = 1`. The order is arc
/// nesting: `(i', j') <= (i, j)` iff `i <= i'` and `j' <= j`.
#[derive(Debug, Clone)]
pub struct ShiPoset {
    w: Perm,
    elements: Vec<(usize, usize)>,
}

impl ShiPoset {
    pub fn new(g: &Graph, w: &Perm) -> Result<Self> {
        if g.n() != w.n() {
            return Err(Error::DimensionMismatch(format!(
                "graph on {} vertices vs permutation of {}",
                g.n(),
                w.n()
            )));
        }
        let n = g.n();
        let mut elements = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                if w.value(i) < w.value(j) && g.contains(w.value(i), w.value(j)) {
                    elements.push((i, j));
                }
            }
        }
        Ok(ShiPoset {
            w: w.clone(),
            elements,
        })
    }

    pub fn elements(&self) -> &[(usize, usize)] {
        &self.elements
    }

    pub fn w(&self) -> &Perm {
        &self.w
    }

    /// `a <= b` in nesting order: `a` fits inside `b`.
    pub fn leq(a: (usize, usize), b: (usize, usize)) -> bool {
        b.0 <= a.0 && a.1 <= b.1
    }

    /// All antichains, each sorted; the empty antichain comes first.
    /// Antichains are in bijection with order ideals via maximal elements.
    pub fn antichains(&self) -> Vec<Vec<(usize, usize)>> {
        enumerate_antichains(&self.elements, Self::leq)
    }

    /// The order ideal generated by an antichain.
    pub fn down_closure(&self, antichain: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
        self.elements
            .iter()
            .copied()
            .filter(|&e| antichain.iter().any(|&a| Self::leq(e, a)))
            .collect()
    }
}

/// The poset of affine Ish hyperplanes meeting the cone `wC`. Elements are
/// pairs `(i, j)` standing for `x_1 - x_j = i`, present when `ij` is an
/// edge (`i < j`) and `j` stands to the right of `1` in `w`. The order
/// increases with the level and to the left: `(i, j) <= (i', j')` iff
/// `i <= i'` and `w^{-1}(j') <= w^{-1}(j)`.
#[derive(Debug, Clone)]
pub struct IshPoset {
    w: Perm,
    elements: Vec<(usize, usize)>,
}

impl IshPoset {
    pub fn new(g: &Graph, w: &Perm) -> Result<Self> {
        if g.n() != w.n() {
            return Err(Error::DimensionMismatch(format!(
                "graph on {} vertices vs permutation of {}",
                g.n(),
                w.n()
            )));
        }
        let pos1 = w.position(1);
        let mut elements: Vec<(usize, usize)> = g
            .edges()
            .filter(|&(_, j)| w.position(j) > pos1)
            .collect();
        elements.sort_unstable();
        Ok(IshPoset {
            w: w.clone(),
            elements,
        })
    }

    pub fn elements(&self) -> &[(usize, usize)] {
        &self.elements
    }

    pub fn w(&self) -> &Perm {
        &self.w
    }

    pub fn leq(&self, a: (usize, usize), b: (usize, usize)) -> bool {
        a.0 <= b.0 && self.w.position(b.1) <= self.w.position(a.1)
    }

    /// All antichains; in bijection with order filters via minimal elements.
    pub fn antichains(&self) -> Vec<Vec<(usize, usize)>> {
        enumerate_antichains(&self.elements, |a, b| self.leq(a, b))
    }

    /// The order filter generated by an antichain.
    pub fn up_closure(&self, antichain: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
        self.elements
            .iter()
            .copied()
            .filter(|&e| antichain.iter().any(|&a| self.leq(a, e)))
            .collect()
    }
}

fn enumerate_antichains<F>(elements: &[(usize, usize)], leq: F) -> Vec<Vec<(usize, usize)>>
where
    F: Fn((usize, usize), (usize, usize)) -> bool,
{
    let comparable =
        |a: (usize, usize), b: (usize, usize)| -> bool { leq(a, b) || leq(b, a) };
    let mut out = Vec::new();
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    fn recurse(
        elements: &[(usize, usize)],
        start: usize,
        chosen: &mut Vec<(usize, usize)>,
        comparable: &dyn Fn((usize, usize), (usize, usize)) -> bool,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        out.push(chosen.clone());
        for t in start..elements.len() {
            let candidate = elements[t];
            if chosen.iter().all(|&c| !comparable(c, candidate)) {
                chosen.push(candidate);
                recurse(elements, t + 1, chosen, comparable, out);
                chosen.pop();
            }
        }
    }
    recurse(elements, 0, &mut chosen, &comparable, &mut out);
    out
}

/// The ceiling diagram `(w, pi)` of a `Shi(G)` region in the cone `wC`:
/// `pi` is a nonnesting partition of the positions whose arcs are the
/// region's ceilings (the maximal elements of the corresponding ideal).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiCeilingDiagram {
    pub w: Perm,
    pub pi: SetPartition,
}

impl ShiCeilingDiagram {
    pub fn new(g: &Graph, w: Perm, pi: SetPartition) -> Result<Self> {
        if g.n() != w.n() || pi.n() != w.n() {
            return Err(Error::DimensionMismatch(
                "graph, permutation and partition sizes differ".into(),
            ));
        }
        if !pi.is_nonnesting() {
            return Err(Error::InvalidDiagram(format!("{pi} is nesting")));
        }
        for (i, j) in pi.arcs() {
            if w.value(i) >= w.value(j) {
                return Err(Error::InvalidDiagram(format!(
                    "arc ({i},{j}) is an inversion of {w}"
                )));
            }
            if !g.contains(w.value(i), w.value(j)) {
                return Err(Error::InvalidDiagram(format!(
                    "arc ({i},{j}) maps to the non-edge {{{},{}}}",
                    w.value(i),
                    w.value(j)
                )));
            }
        }
        Ok(ShiCeilingDiagram { w, pi })
    }

    /// Ceiling count: the number of arcs.
    pub fn ceiling_count(&self) -> usize {
        self.pi.n() - self.pi.block_count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": "shi",
            "w": self.w.one_line(),
            "arcs": self.pi.arcs(),
        })
    }
}

/// The ceiling diagram `(w, eps)` of an `Ish(G)` region in the cone `wC`:
/// `eps[i - 1]` is the level of the ceiling `x_1 - x_{w(i)} = eps_i` above
/// position `i`, zero when there is none. Nonzero levels sit strictly right
/// of the position of 1, are bounded by `eps_i < w(i)` with
/// `{eps_i, w(i)}` an edge, and strictly increase left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IshCeilingDiagram {
    pub w: Perm,
    pub eps: Vec<usize>,
}

impl IshCeilingDiagram {
    pub fn new(g: &Graph, w: Perm, eps: Vec<usize>) -> Result<Self> {
        let n = w.n();
        if g.n() != n || eps.len() != n {
            return Err(Error::DimensionMismatch(
                "graph, permutation and level vector sizes differ".into(),
            ));
        }
        let pos1 = w.position(1);
        let mut last_nonzero = 0usize;
        for i in 1..=n {
            let e = eps[i - 1];
            if e == 0 {
                continue;
            }
            if i <= pos1 {
                return Err(Error::InvalidDiagram(format!(
                    "level at position {i} not right of 1 (position {pos1})"
                )));
            }
            if e >= w.value(i) {
                return Err(Error::InvalidDiagram(format!(
                    "level {e} not below the symbol {}",
                    w.value(i)
                )));
            }
            if !g.contains(e, w.value(i)) {
                return Err(Error::InvalidDiagram(format!(
                    "{{{e},{}}} is not an edge",
                    w.value(i)
                )));
            }
            if e <= last_nonzero {
                return Err(Error::InvalidDiagram(
                    "nonzero levels must strictly increase".into(),
                ));
            }
            last_nonzero = e;
        }
        Ok(IshCeilingDiagram { w, eps })
    }

    /// Ceiling count: the number of nonzero levels.
    pub fn ceiling_count(&self) -> usize {
        self.eps.iter().filter(|&&e| e != 0).count()
    }

    /// The minimal antichain `(level, value)` this diagram encodes.
    pub fn antichain(&self) -> Vec<(usize, usize)> {
        (1..=self.w.n())
            .filter(|&i| self.eps[i - 1] != 0)
            .map(|i| (self.eps[i - 1], self.w.value(i)))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": "ish",
            "w": self.w.one_line(),
            "eps": self.eps,
        })
    }
}

/// The poset of Shi hyperplanes meeting `wC`.
pub fn shi_poset(g: &Graph, w: &Perm) -> Result<ShiPoset> {
    ShiPoset::new(g, w)
}

/// The poset of Ish hyperplanes meeting `wC`.
pub fn ish_poset(g: &Graph, w: &Perm) -> Result<IshPoset> {
    IshPoset::new(g, w)
}

/// One diagram per order ideal of the Shi poset in `wC`; the arcs of `pi`
/// are the ideal's maximal elements.
pub fn enumerate_shi_diagrams(g: &Graph, w: &Perm) -> Result<Vec<ShiCeilingDiagram>> {
    let poset = ShiPoset::new(g, w)?;
    poset
        .antichains()
        .into_iter()
        .map(|arcs| {
            let pi = SetPartition::from_pairs(g.n(), arcs.iter().copied())?;
            ShiCeilingDiagram::new(g, w.clone(), pi)
        })
        .collect()
}

/// One diagram per order filter of the Ish poset in `wC`; the nonzero
/// levels of `eps` are the filter's minimal elements.
pub fn enumerate_ish_diagrams(g: &Graph, w: &Perm) -> Result<Vec<IshCeilingDiagram>> {
    let poset = IshPoset::new(g, w)?;
    poset
        .antichains()
        .into_iter()
        .map(|antichain| {
            let mut eps = vec![0usize; g.n()];
            for (level, j) in antichain {
                eps[w.position(j) - 1] = level;
            }
            IshCeilingDiagram::new(g, w.clone(), eps)
        })
        .collect()
}

/// Degrees of freedom of a Shi region: the number of connected components
/// of its diagram's partition.
pub fn shi_dof(d: &ShiCeilingDiagram) -> usize {
    d.pi.connected_components()
}

/// Degrees of freedom of an Ish region: `n - k + w^{-1}(1)` where `k` is
/// the last position with a nonzero level (or `w^{-1}(1)` when none).
pub fn ish_dof(d: &IshCeilingDiagram) -> usize {
    let n = d.w.n();
    let pos1 = d.w.position(1);
    let k = (1..=n)
        .rev()
        .find(|&i| d.eps[i - 1] != 0)
        .unwrap_or(pos1);
    n - k + pos1
}

/// The ceiling partition of a Shi region: `w . pi`, in endpoint notation.
pub fn shi_ceiling_partition(d: &ShiCeilingDiagram) -> EndpointPair {
    d.pi
        .relabel(d.w.one_line())
        .expect("permutation relabeling keeps a valid partition")
        .to_endpoint()
}

/// The ceiling partition of an Ish region: `alpha` the nonzero levels in
/// position order, `beta` the symbols they sit above.
pub fn ish_ceiling_partition(d: &IshCeilingDiagram) -> EndpointPair {
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    for i in 1..=d.w.n() {
        if d.eps[i - 1] != 0 {
            alpha.push(d.eps[i - 1]);
            beta.push(d.w.value(i));
        }
    }
    let pair = EndpointPair {
        n: d.w.n(),
        alpha,
        beta,
    };
    debug_assert!(pair.to_partition().is_ok());
    pair
}

fn expect_kind(arr: &Arrangement, expected: Kind) -> Result<&Graph> {
    if arr.kind() != expected {
        return Err(Error::KindMismatch {
            expected: if expected == Kind::Shi { "shi" } else { "ish" },
            got: arr.kind().to_string(),
        });
    }
    arr.graph().ok_or(Error::KindMismatch {
        expected: "graph-built",
        got: "graphless".to_string(),
    })
}

/// The region of `Shi(G)` a diagram labels: Coxeter signs from `w`, affine
/// signs from membership in the ideal generated by the diagram's arcs.
pub fn shi_diagram_to_region(d: &ShiCeilingDiagram, arr: &Arrangement) -> Result<Region> {
    let g = expect_kind(arr, Kind::Shi)?;
    let poset = ShiPoset::new(g, &d.w)?;
    let ideal = poset.down_closure(&d.pi.arcs());
    let mut signs = Vec::with_capacity(arr.len());
    for h in arr.hyperplanes() {
        let (a, b) = h
            .difference_form()
            .expect("Shi builder emits difference hyperplanes");
        let sign = if h.rhs == 0 {
            if d.w.position(a) < d.w.position(b) {
                Sign::Plus
            } else {
                Sign::Minus
            }
        } else {
            let (pi_pos, pj_pos) = (d.w.position(a), d.w.position(b));
            if pi_pos < pj_pos && !ideal.contains(&(pi_pos, pj_pos)) {
                Sign::Plus
            } else {
                Sign::Minus
            }
        };
        signs.push(sign);
    }
    let witness = witness_for_signs(arr, &signs)
        .ok_or_else(|| Error::NoSuchRegion(format!("diagram ({}, {})", d.w, d.pi)))?;
    Ok(Region { signs, witness })
}

/// The region of `Ish(G)` a diagram labels.
pub fn ish_diagram_to_region(d: &IshCeilingDiagram, arr: &Arrangement) -> Result<Region> {
    let g = expect_kind(arr, Kind::Ish)?;
    let poset = IshPoset::new(g, &d.w)?;
    let filter = poset.up_closure(&d.antichain());
    let pos1 = d.w.position(1);
    let mut signs = Vec::with_capacity(arr.len());
    for h in arr.hyperplanes() {
        let (a, b) = h
            .difference_form()
            .expect("Ish builder emits difference hyperplanes");
        let sign = if h.rhs == 0 {
            if d.w.position(a) < d.w.position(b) {
                Sign::Plus
            } else {
                Sign::Minus
            }
        } else {
            debug_assert_eq!(a, 1);
            let level = h.rhs as usize;
            if d.w.position(b) > pos1 && !filter.contains(&(level, b)) {
                Sign::Plus
            } else {
                Sign::Minus
            }
        };
        signs.push(sign);
    }
    let witness = witness_for_signs(arr, &signs)
        .ok_or_else(|| Error::NoSuchRegion(format!("diagram ({}, {:?})", d.w, d.eps)))?;
    Ok(Region { signs, witness })
}

/// The cone a region sits in, read from its witness: coordinates sorted in
/// strictly decreasing order give the one-line notation.
pub fn cone_of_witness(witness: &[BigRational]) -> Result<Perm> {
    let n = witness.len();
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by(|&a, &b| witness[b - 1].cmp(&witness[a - 1]));
    for pair in order.windows(2) {
        if witness[pair[0] - 1] == witness[pair[1] - 1] {
            return Err(Error::TiedWitness(pair[0], pair[1]));
        }
    }
    Perm::from_one_line(order)
}

/// Rebuilds the Shi ceiling diagram of a region from its witness and its
/// geometric ceilings: ceiling `x_a - x_b = 1` becomes the arc
/// `(w^{-1}(a), w^{-1}(b))`.
pub fn region_to_shi_diagram(arr: &Arrangement, region: &Region) -> Result<ShiCeilingDiagram> {
    let g = expect_kind(arr, Kind::Shi)?;
    let w = cone_of_witness(&region.witness)?;
    let arcs: Vec<(usize, usize)> = crate::geometry::ceilings(arr, region)
        .into_iter()
        .map(|k| {
            let (a, b) = arr.hyperplanes()[k]
                .difference_form()
                .expect("difference hyperplane");
            (w.position(a), w.position(b))
        })
        .collect();
    let pi = SetPartition::from_pairs(g.n(), arcs)?;
    ShiCeilingDiagram::new(g, w, pi)
}

/// Rebuilds the Ish ceiling diagram of a region: ceiling `x_1 - x_b = i`
/// puts level `i` at position `w^{-1}(b)`.
pub fn region_to_ish_diagram(arr: &Arrangement, region: &Region) -> Result<IshCeilingDiagram> {
    let g = expect_kind(arr, Kind::Ish)?;
    let w = cone_of_witness(&region.witness)?;
    let mut eps = vec![0usize; g.n()];
    for k in crate::geometry::ceilings(arr, region) {
        let h = &arr.hyperplanes()[k];
        let (a, b) = h.difference_form().expect("difference hyperplane");
        debug_assert_eq!(a, 1);
        eps[w.position(b) - 1] = h.rhs as usize;
    }
    IshCeilingDiagram::new(g, w, eps)
}

/// The ceiling partition of a region read geometrically: merge the value
/// pair of every ceiling (`{a, b}` for a Shi ceiling `x_a - x_b = 1`,
/// `{i, b}` for an Ish ceiling `x_1 - x_b = i`).
pub fn geometric_ceiling_partition(arr: &Arrangement, region: &Region) -> Result<EndpointPair> {
    let n = arr.n();
    let mut pairs = Vec::new();
    for k in crate::geometry::ceilings(arr, region) {
        let h = &arr.hyperplanes()[k];
        let (a, b) = h
            .difference_form()
            .ok_or_else(|| Error::NoSuchRegion("non-difference hyperplane".into()))?;
        match arr.kind() {
            Kind::Shi => pairs.push((a, b)),
            Kind::Ish => pairs.push((h.rhs as usize, b)),
            _ => {
                return Err(Error::KindMismatch {
                    expected: "shi or ish",
                    got: arr.kind().to_string(),
                })
            }
        }
    }
    Ok(SetPartition::from_pairs(n, pairs)?.to_endpoint())
}

/// The boundary point attached to an order filter: for each value `v`,
/// `z_v` is minus the highest level among minimal elements at positions up
/// to `w^{-1}(v)` (zero when there are none). The point lies in the closed
/// cone of `w`, satisfies every hyperplane of the filter weakly, and lies
/// exactly on each ceiling; it can leave the region's closure across
/// hyperplanes outside the filter.
pub fn ish_filter_witness(d: &IshCeilingDiagram) -> Vec<BigRational> {
    let n = d.w.n();
    let antichain = d.antichain();
    (1..=n)
        .map(|v| {
            let level = antichain
                .iter()
                .filter(|&&(_, k)| d.w.position(k) <= d.w.position(v))
                .map(|&(level, _)| level)
                .max()
                .unwrap_or(0);
            BigRational::from_integer((-(level as i64)).into())
        })
        .collect()
}

/// The bijection between dominant Shi and Ish regions: in the identity
/// cone, an ideal with maximal arc set `S` pairs with the filter generated
/// by the same pairs read as levels, preserving the ceiling count.
pub fn dominant_bijection(g: &Graph) -> Result<Vec<(ShiCeilingDiagram, IshCeilingDiagram)>> {
    let id = Perm::identity(g.n());
    enumerate_shi_diagrams(g, &id)?
        .into_iter()
        .map(|shi| {
            let mut eps = vec![0usize; g.n()];
            for (i, j) in shi.pi.arcs() {
                eps[j - 1] = i;
            }
            let ish = IshCeilingDiagram::new(g, id.clone(), eps)?;
            debug_assert_eq!(shi.ceiling_count(), ish.ceiling_count());
            Ok((shi, ish))
        })
        .collect()
}

/// Number of regions (of either arrangement) with the given ceiling
/// partition: `n!/(n - k + 1)!` when every arc is an edge, zero otherwise.
pub fn count_by_ceiling_partition(g: &Graph, e: &EndpointPair) -> Result<BigUint> {
    e.to_partition()?;
    if e.n != g.n() {
        return Err(Error::DimensionMismatch(
            "partition and graph sizes differ".into(),
        ));
    }
    if e.alpha.iter().zip(&e.beta).any(|(&a, &b)| !g.contains(a, b)) {
        return Ok(BigUint::zero());
    }
    let k = e.n - e.len();
    Ok(factorial(e.n) / factorial(e.n - k + 1))
}

/// Number of regions with the given ceiling partition and `d` degrees of
/// freedom: `d (n-d-1)! (k-1)! / ((n-k-1)! (k-d)!)`, with the conventions
/// that the count vanishes for `d > k` or a non-G arc, and that the empty
/// partition (`k = n`, one ceilingless region per cone) contributes `n!` at
/// `d = n` and nothing elsewhere.
pub fn count_by_ceiling_partition_and_dof(g: &Graph, e: &EndpointPair, d: usize) -> Result<BigUint> {
    assert!(d >= 1, "degrees of freedom are at least 1");
    e.to_partition()?;
    if e.n != g.n() {
        return Err(Error::DimensionMismatch(
            "partition and graph sizes differ".into(),
        ));
    }
    if e.alpha.iter().zip(&e.beta).any(|(&a, &b)| !g.contains(a, b)) {
        return Ok(BigUint::zero());
    }
    let n = e.n;
    let k = n - e.len();
    if d > k {
        return Ok(BigUint::zero());
    }
    if k == n {
        return Ok(if d == n { factorial(n) } else { BigUint::zero() });
    }
    let numer = BigUint::from(d) * factorial(n - d - 1) * factorial(k - 1);
    let denom = factorial(n - k - 1) * factorial(k - d);
    Ok(numer / denom)
}

/// The full (c, d) census computed purely combinatorially: enumerate the
/// diagrams cone by cone and apply the degrees-of-freedom rules. Dominant
/// regions are the ones in the identity cone.
pub fn labeling_census(g: &Graph, kind: DiagramKind) -> Result<Census> {
    let mut census = Census::default();
    for w in Perm::all(g.n()) {
        let dominant = w.is_identity();
        match kind {
            DiagramKind::Shi => {
                for d in enumerate_shi_diagrams(g, &w)? {
                    census.record(d.ceiling_count(), shi_dof(&d), dominant);
                }
            }
            DiagramKind::Ish => {
                for d in enumerate_ish_diagrams(g, &w)? {
                    census.record(d.ceiling_count(), ish_dof(&d), dominant);
                }
            }
        }
    }
    Ok(census)
}

/// Checks `(n+1)^(n-1) = sum_k Stir(n,k) n!/(n-k+1)!` with exact integers.
pub fn stirling_identity_check(n: usize) -> bool {
    assert!(n >= 1);
    let lhs = BigUint::from(n + 1).pow(n as u32 - 1);
    let rhs: BigUint = (1..=n)
        .map(|k| stirling2(n, k) * factorial(n) / factorial(n - k + 1))
        .sum();
    lhs == rhs
}

/// Narayana number `N(n, k) = (1/n) C(n, k) C(n, k-1)`; the dominant
/// regions of the complete-graph arrangements with `c` ceilings number
/// `N(n, c + 1)`.
pub fn narayana(n: usize, k: usize) -> BigUint {
    if k < 1 || k > n {
        return BigUint::zero();
    }
    binomial(n, k) * binomial(n, k - 1) / BigUint::from(n)
}

/// Expected dominant-by-ceilings count for the chain graph: `C(n-1, c)`.
pub fn chain_dominant_count(n: usize, c: usize) -> BigUint {
    binomial(n - 1, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{build_ish, build_shi};
    use crate::geometry::{enumerate_regions, recession_dim, region_stats};
    use num_traits::One;

    fn worked_w() -> Perm {
        Perm::from_one_line(vec![5, 1, 2, 8, 6, 3, 4, 7]).unwrap()
    }

    #[test]
    fn perm_basics() {
        let w = worked_w();
        assert_eq!(w.value(4), 8);
        assert_eq!(w.position(1), 2);
        assert_eq!(Perm::all(3).len(), 6);
        assert_eq!(Perm::all(3)[0], Perm::identity(3));
        assert!(Perm::from_one_line(vec![1, 1, 3]).is_err());
    }

    #[test]
    fn shi_poset_is_nesting_order_on_non_inversions() {
        let w = Perm::from_one_line(vec![3, 2, 1]).unwrap();
        let empty = ShiPoset::new(&Graph::complete(3), &w).unwrap();
        assert!(empty.elements().is_empty());
        let poset = ShiPoset::new(&Graph::complete(3), &Perm::identity(3)).unwrap();
        assert_eq!(poset.elements(), &[(1, 2), (1, 3), (2, 3)]);
        assert!(ShiPoset::leq((1, 2), (1, 3)));
        assert!(!ShiPoset::leq((1, 2), (2, 3)));
        assert_eq!(poset.antichains().len(), 5);
    }

    #[test]
    fn ish_poset_boxes_per_symbol() {
        let w = worked_w();
        let poset = IshPoset::new(&Graph::complete(8), &w).unwrap();
        for j in 2..=8 {
            let boxes = poset.elements().iter().filter(|&&(_, b)| b == j).count();
            let expected = if w.position(j) > w.position(1) { j - 1 } else { 0 };
            assert_eq!(boxes, expected, "symbol {j}");
        }
    }

    #[test]
    fn diagram_counts_match_region_totals_on_k3() {
        let g = Graph::complete(3);
        let shi_total: usize = Perm::all(3)
            .iter()
            .map(|w| enumerate_shi_diagrams(&g, w).unwrap().len())
            .sum();
        assert_eq!(shi_total, 16);
        let ish_total: usize = Perm::all(3)
            .iter()
            .map(|w| enumerate_ish_diagrams(&g, w).unwrap().len())
            .sum();
        assert_eq!(ish_total, 16);
    }

    #[test]
    fn empty_graph_has_one_diagram_per_cone() {
        let g = Graph::empty(4);
        for w in Perm::all(4) {
            assert_eq!(enumerate_shi_diagrams(&g, &w).unwrap().len(), 1);
            assert_eq!(enumerate_ish_diagrams(&g, &w).unwrap().len(), 1);
        }
    }

    #[test]
    fn worked_shi_diagram() {
        let g = Graph::complete(8);
        let pi = SetPartition::from_blocks(
            8,
            [vec![1, 4], vec![2, 5], vec![3], vec![6, 8], vec![7]],
        )
        .unwrap();
        let d = ShiCeilingDiagram::new(&g, worked_w(), pi).unwrap();
        assert_eq!(shi_dof(&d), 2);
        let e = shi_ceiling_partition(&d);
        assert_eq!(e.alpha, vec![1, 3, 5]);
        assert_eq!(e.beta, vec![6, 7, 8]);
        assert_eq!(e.to_string(), "(135,678)");
        // the diagram appears in the enumeration for this cone
        let all = enumerate_shi_diagrams(&g, &worked_w()).unwrap();
        assert!(all.contains(&d));
    }

    #[test]
    fn worked_ish_diagram() {
        let g = Graph::complete(8);
        let d =
            IshCeilingDiagram::new(&g, worked_w(), vec![0, 0, 0, 1, 0, 0, 3, 5]).unwrap();
        assert_eq!(ish_dof(&d), 2);
        let e = ish_ceiling_partition(&d);
        assert_eq!(e.alpha, vec![1, 3, 5]);
        assert_eq!(e.beta, vec![8, 4, 7]);
        assert_eq!(e.to_string(), "(135,847)");
        let all = enumerate_ish_diagrams(&g, &worked_w()).unwrap();
        assert!(all.contains(&d));
    }

    #[test]
    fn ish_diagram_rejects_violations() {
        let g = Graph::complete(4);
        let w = Perm::from_one_line(vec![2, 1, 4, 3]).unwrap();
        // nonzero level left of the position of 1
        assert!(IshCeilingDiagram::new(&g, w.clone(), vec![1, 0, 0, 0]).is_err());
        // level not below symbol
        assert!(IshCeilingDiagram::new(&g, w.clone(), vec![0, 0, 0, 3]).is_err());
        // nonzero levels must strictly increase
        assert!(IshCeilingDiagram::new(&g, w.clone(), vec![0, 0, 3, 2]).is_err());
        assert!(IshCeilingDiagram::new(&g, w, vec![0, 0, 3, 0]).is_ok());
    }

    #[test]
    fn dof_extremes() {
        let g = Graph::complete(5);
        let id = Perm::identity(5);
        let empty = ShiCeilingDiagram::new(&g, id.clone(), SetPartition::singletons(5)).unwrap();
        assert_eq!(shi_dof(&empty), 5);
        let whole = SetPartition::from_blocks(5, [vec![1, 2, 3, 4, 5]]).unwrap();
        let full = ShiCeilingDiagram::new(&g, id.clone(), whole).unwrap();
        assert_eq!(shi_dof(&full), 1);
        let ish_empty = IshCeilingDiagram::new(&g, id, vec![0; 5]).unwrap();
        assert_eq!(ish_dof(&ish_empty), 5);
    }

    #[test]
    fn ish_relatively_bounded_condition() {
        // dof 1 iff w(1) = 1 and the last position carries a level
        let g = Graph::complete(3);
        for w in Perm::all(3) {
            for d in enumerate_ish_diagrams(&g, &w).unwrap() {
                let rb = ish_dof(&d) == 1;
                assert_eq!(rb, d.w.value(1) == 1 && d.eps[2] != 0, "({}, {:?})", d.w, d.eps);
            }
        }
    }

    #[test]
    fn diagram_region_round_trip_on_three() {
        let g = Graph::complete(3);
        let shi = build_shi(&g);
        let regions = enumerate_regions(&shi, 22).unwrap();
        assert_eq!(regions.len(), 16);
        for region in &regions {
            let d = region_to_shi_diagram(&shi, region).unwrap();
            let back = shi_diagram_to_region(&d, &shi).unwrap();
            assert_eq!(back.signs, region.signs);
        }
        let ish = build_ish(&g);
        for region in enumerate_regions(&ish, 22).unwrap() {
            let d = region_to_ish_diagram(&ish, &region).unwrap();
            let back = ish_diagram_to_region(&d, &ish).unwrap();
            assert_eq!(back.signs, region.signs);
        }
    }

    #[test]
    fn dominant_ceilingless_region_is_identity_empty_diagram() {
        let g = Graph::complete(3);
        let shi = build_shi(&g);
        let d = ShiCeilingDiagram::new(&g, Perm::identity(3), SetPartition::singletons(3)).unwrap();
        let region = shi_diagram_to_region(&d, &shi).unwrap();
        let stats = region_stats(&shi, &region);
        assert!(stats.dominant);
        assert!(stats.ceilings.is_empty());
        assert_eq!(region_to_shi_diagram(&shi, &region).unwrap(), d);
    }

    #[test]
    fn filter_witness_examples() {
        let g = Graph::complete(4);
        let id = Perm::identity(4);
        let empty = IshCeilingDiagram::new(&g, id.clone(), vec![0; 4]).unwrap();
        let origin = ish_filter_witness(&empty);
        assert!(origin.iter().all(|z| z.is_zero()));
        // single minimal element x_1 - x_3 = 2: -2 from position 3 onward
        let single = IshCeilingDiagram::new(&g, id, vec![0, 0, 2, 0]).unwrap();
        let z = ish_filter_witness(&single);
        let expected: Vec<i64> = vec![0, 0, -2, -2];
        assert_eq!(
            z,
            expected
                .into_iter()
                .map(|v| BigRational::from_integer(v.into()))
                .collect::<Vec<_>>()
        );
    }

    /// What the filter point provably satisfies: it stays in the closed
    /// cone, meets every filter hyperplane weakly, and touches each ceiling
    /// exactly. (Full region-closure membership fails in general: with the
    /// identity cone on K_3 and the single ceiling x1-x2=1, the region needs
    /// x1-x3 >= 2 on its closure while the point has x1-x3 = 1.)
    fn check_filter_witness(g: &Graph, d: &IshCeilingDiagram) {
        let z = ish_filter_witness(d);
        for i in 1..d.w.n() {
            assert!(z[d.w.value(i) - 1] >= z[d.w.value(i + 1) - 1], "cone order");
        }
        let poset = IshPoset::new(g, &d.w).unwrap();
        let filter = poset.up_closure(&d.antichain());
        for &(level, j) in &filter {
            let gap = &z[0] - &z[j - 1] - BigRational::from_integer((level as i64).into());
            assert!(gap <= BigRational::zero(), "filter constraint ({level},{j})");
        }
        for &(level, j) in &d.antichain() {
            let gap = &z[0] - &z[j - 1] - BigRational::from_integer((level as i64).into());
            assert!(gap.is_zero(), "ceiling contact ({level},{j})");
        }
    }

    #[test]
    fn filter_witness_properties() {
        let g = Graph::complete(8);
        let d = IshCeilingDiagram::new(&g, worked_w(), vec![0, 0, 0, 1, 0, 0, 3, 5]).unwrap();
        check_filter_witness(&g, &d);
        for graph in Graph::all_graphs(3) {
            for w in Perm::all(3) {
                for d in enumerate_ish_diagrams(&graph, &w).unwrap() {
                    check_filter_witness(&graph, &d);
                }
            }
        }
    }

    #[test]
    fn worked_regions_have_two_recession_dimensions() {
        // eight vertices is over the enumeration guard, but a single region
        // can still be built from its diagram and measured directly
        let g = Graph::complete(8);
        let pi = SetPartition::from_blocks(
            8,
            [vec![1, 4], vec![2, 5], vec![3], vec![6, 8], vec![7]],
        )
        .unwrap();
        let shi_d = ShiCeilingDiagram::new(&g, worked_w(), pi).unwrap();
        let shi = build_shi(&g);
        let region = shi_diagram_to_region(&shi_d, &shi).unwrap();
        assert_eq!(recession_dim(&shi, &region), 2);

        let ish_d =
            IshCeilingDiagram::new(&g, worked_w(), vec![0, 0, 0, 1, 0, 0, 3, 5]).unwrap();
        let ish = build_ish(&g);
        let region = ish_diagram_to_region(&ish_d, &ish).unwrap();
        assert_eq!(recession_dim(&ish, &region), 2);
    }

    #[test]
    fn dominant_bijection_counts() {
        let pairs = dominant_bijection(&Graph::complete(3)).unwrap();
        assert_eq!(pairs.len(), 5);
        let mut by_c = std::collections::BTreeMap::new();
        for (shi, ish) in &pairs {
            assert_eq!(shi.ceiling_count(), ish.ceiling_count());
            *by_c.entry(shi.ceiling_count()).or_insert(0u64) += 1;
        }
        assert_eq!(by_c, std::collections::BTreeMap::from([(0, 1), (1, 3), (2, 1)]));
        for c in 0..3 {
            assert_eq!(BigUint::from(by_c[&c]), narayana(3, c + 1));
        }
        assert_eq!(dominant_bijection(&Graph::empty(3)).unwrap().len(), 1);
        let chain_pairs = dominant_bijection(&Graph::chain(4)).unwrap();
        let mut chain_by_c = std::collections::BTreeMap::new();
        for (shi, _) in &chain_pairs {
            *chain_by_c.entry(shi.ceiling_count()).or_insert(0u64) += 1;
        }
        for c in 0..4 {
            assert_eq!(
                BigUint::from(chain_by_c.get(&c).copied().unwrap_or(0)),
                chain_dominant_count(4, c)
            );
        }
    }

    #[test]
    fn bijection_does_not_always_preserve_dof() {
        let pairs = dominant_bijection(&Graph::complete(3)).unwrap();
        let mismatched = pairs
            .iter()
            .filter(|(shi, ish)| shi_dof(shi) != ish_dof(ish))
            .count();
        assert!(mismatched > 0);
    }

    #[test]
    fn ceiling_partition_counts_on_three() {
        let g = Graph::complete(3);
        let one_arc = EndpointPair {
            n: 3,
            alpha: vec![1],
            beta: vec![2],
        };
        assert_eq!(count_by_ceiling_partition(&g, &one_arc).unwrap(), BigUint::from(3u32));
        assert_eq!(
            count_by_ceiling_partition_and_dof(&g, &one_arc, 1).unwrap(),
            BigUint::one()
        );
        assert_eq!(
            count_by_ceiling_partition_and_dof(&g, &one_arc, 2).unwrap(),
            BigUint::from(2u32)
        );
        let empty = EndpointPair {
            n: 3,
            alpha: vec![],
            beta: vec![],
        };
        assert_eq!(count_by_ceiling_partition(&g, &empty).unwrap(), BigUint::from(6u32));
        assert_eq!(
            count_by_ceiling_partition_and_dof(&g, &empty, 3).unwrap(),
            BigUint::from(6u32)
        );
        assert_eq!(
            count_by_ceiling_partition_and_dof(&g, &empty, 2).unwrap(),
            BigUint::zero()
        );
        let two_arcs = EndpointPair {
            n: 3,
            alpha: vec![1, 2],
            beta: vec![2, 3],
        };
        assert_eq!(count_by_ceiling_partition(&g, &two_arcs).unwrap(), BigUint::one());
        // non-edge arc vanishes on the chain
        let chain = Graph::chain(3);
        let skip = EndpointPair {
            n: 3,
            alpha: vec![1],
            beta: vec![3],
        };
        assert_eq!(count_by_ceiling_partition(&chain, &skip).unwrap(), BigUint::zero());
    }

    #[test]
    fn labeling_census_matches_reference_tables() {
        let k3 = Graph::complete(3);
        let chain3 = Graph::chain(3);
        let complete_expected: std::collections::BTreeMap<(usize, usize), u64> =
            [((0, 3), 6), ((1, 1), 3), ((1, 2), 6), ((2, 1), 1)].into();
        let chain_expected: std::collections::BTreeMap<(usize, usize), u64> =
            [((0, 3), 6), ((1, 1), 2), ((1, 2), 4), ((2, 1), 1)].into();
        for kind in [DiagramKind::Shi, DiagramKind::Ish] {
            assert_eq!(labeling_census(&k3, kind).unwrap().by_cd, complete_expected);
            assert_eq!(labeling_census(&chain3, kind).unwrap().by_cd, chain_expected);
        }
        assert_eq!(labeling_census(&Graph::complete(4), DiagramKind::Shi).unwrap().total, 125);
        assert_eq!(labeling_census(&Graph::complete(4), DiagramKind::Ish).unwrap().total, 125);
    }

    #[test]
    fn combinatorial_dof_matches_geometry_on_k3() {
        let g = Graph::complete(3);
        let shi = build_shi(&g);
        for w in Perm::all(3) {
            for d in enumerate_shi_diagrams(&g, &w).unwrap() {
                let region = shi_diagram_to_region(&d, &shi).unwrap();
                assert_eq!(shi_dof(&d), recession_dim(&shi, &region));
            }
        }
        let ish = build_ish(&g);
        for w in Perm::all(3) {
            for d in enumerate_ish_diagrams(&g, &w).unwrap() {
                let region = ish_diagram_to_region(&d, &ish).unwrap();
                assert_eq!(ish_dof(&d), recession_dim(&ish, &region));
            }
        }
    }

    #[test]
    fn identity_examples() {
        assert!(stirling_identity_check(1));
        assert!(stirling_identity_check(3));
        assert!(stirling_identity_check(8));
        // n = 3 term by term: 16 = 1*1 + 3*3 + 1*6
        let total: BigUint = (1..=3u32)
            .map(|k| stirling2(3, k as usize) * factorial(3) / factorial(3 - k as usize + 1))
            .sum();
        assert_eq!(total, BigUint::from(16u32));
    }

    #[test]
    fn diagram_json_shapes() {
        let g = Graph::complete(3);
        let d = ShiCeilingDiagram::new(
            &g,
            Perm::identity(3),
            SetPartition::from_blocks(3, [vec![1, 2], vec![3]]).unwrap(),
        )
        .unwrap();
        let v = d.to_json();
        assert_eq!(v["kind"], "shi");
        assert_eq!(v["arcs"][0][0], 1);
        let ish = IshCeilingDiagram::new(&g, Perm::identity(3), vec![0, 1, 0]).unwrap();
        assert_eq!(ish.to_json()["eps"][1], 1);
    }
}
