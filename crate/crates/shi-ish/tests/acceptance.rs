//! Acceptance suite: the project's exit criteria, one test per criterion,
//! each printing a PASS line with the values it checked. Run with
//! `cargo test -p shi-ish --test acceptance -- --nocapture` to see them.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use shi_ish::arrangement::{
    build_ish, build_shi, charpoly_closed_form, charpoly_product_form, zaslavsky_regions,
    zaslavsky_relatively_bounded,
};
use shi_ish::census::Census;
use shi_ish::geometry::{enumerate_regions, recession_dim, region_census};
use shi_ish::graph::Graph;
use shi_ish::labelings::{
    count_by_ceiling_partition, count_by_ceiling_partition_and_dof, enumerate_ish_diagrams,
    enumerate_shi_diagrams, geometric_ceiling_partition, ish_ceiling_partition,
    ish_diagram_to_region, ish_dof, labeling_census, region_to_ish_diagram,
    region_to_shi_diagram, shi_ceiling_partition, shi_diagram_to_region, shi_dof,
    stirling_identity_check, DiagramKind, IshCeilingDiagram, Perm, ShiCeilingDiagram,
};
use shi_ish::partitions::{
    enumerate_nonnesting, enumerate_partitions, component_refined_count, kreweras_count, SetPartition,
    TypeVector,
};
use shi_ish::poly::IntPolynomial;

const GUARD: usize = 22;
const MOBIUS_GUARD: usize = 14;

fn poly_p_times_p_minus_n_pow(n: usize) -> IntPolynomial {
    let mut chi = IntPolynomial::x();
    for _ in 0..(n - 1) {
        chi = &chi * &IntPolynomial::x_minus(n as i64);
    }
    chi
}

/// Characteristic polynomials of the complete-graph arrangements equal
/// p(p-n)^(n-1) for n = 2..5, by finite-field interpolation, exactly.
#[test]
fn a01_complete_graph_charpoly() {
    for n in 2..=5 {
        let g = Graph::complete(n);
        let expected = poly_p_times_p_minus_n_pow(n);
        let shi = build_shi(&g).charpoly_interpolated().unwrap();
        let ish = build_ish(&g).charpoly_interpolated().unwrap();
        assert_eq!(shi, expected, "Shi({n})");
        assert_eq!(ish, expected, "Ish({n})");
        println!("PASS a01: n={n}: chi_Shi = chi_Ish = {}", expected.factored_hint("p"));
    }
}

/// Interpolated, closed-form and Moebius polynomials agree exactly for all
/// 8 graphs on [3] and 20 seeded random graphs on [4], both arrangements.
#[test]
fn a02_three_way_polynomial_agreement() {
    let mut graphs = Graph::all_graphs(3);
    graphs.extend((0..20).map(|t| Graph::random_with_seed(4, 1000 + t)));
    let total = graphs.len();
    for g in graphs {
        let closed = charpoly_closed_form(&g);
        for arr in [build_shi(&g), build_ish(&g)] {
            assert_eq!(arr.charpoly_interpolated().unwrap(), closed, "{} {}", arr.kind(), g);
            assert_eq!(
                arr.charpoly_via_mobius(MOBIUS_GUARD).unwrap(),
                closed,
                "{} {}",
                arr.kind(),
                g
            );
        }
    }
    println!("PASS a02: three-way agreement on {total} graphs, both arrangements");
}

/// Geometric region counts: 16 for Shi(3)/Ish(3), 13 for both chain
/// arrangements on [3], 125 for Shi(4)/Ish(4); relatively bounded counts 4
/// (complete) and 3 (chain) by Zaslavsky and by the dof = 1 census.
#[test]
fn a03_region_counts() {
    let cases: [(&str, Graph, u64, Option<u64>); 3] = [
        ("complete:3", Graph::complete(3), 16, Some(4)),
        ("chain:3", Graph::chain(3), 13, Some(3)),
        ("complete:4", Graph::complete(4), 125, None),
    ];
    for (name, g, expected_regions, expected_bounded) in cases {
        for arr in [build_shi(&g), build_ish(&g)] {
            let regions = enumerate_regions(&arr, GUARD).unwrap();
            assert_eq!(regions.len() as u64, expected_regions, "{} {}", arr.kind(), name);
            let chi = arr.charpoly_interpolated().unwrap();
            assert_eq!(
                zaslavsky_regions(&chi, arr.n()),
                BigUint::from(expected_regions),
                "{} {}",
                arr.kind(),
                name
            );
            if let Some(bounded) = expected_bounded {
                assert_eq!(
                    zaslavsky_relatively_bounded(&chi, arr.rank()),
                    BigUint::from(bounded),
                    "{} {}",
                    arr.kind(),
                    name
                );
                let dof_one = regions
                    .iter()
                    .filter(|r| recession_dim(&arr, r) == 1)
                    .count() as u64;
                assert_eq!(dof_one, bounded, "{} {}", arr.kind(), name);
            }
        }
        println!(
            "PASS a03: {name}: {expected_regions} regions{}",
            expected_bounded
                .map(|b| format!(", {b} relatively bounded (two routes)"))
                .unwrap_or_default()
        );
    }
}

/// Exhaustive shared-statistics verification on [4]: for all 64 graphs the two
/// arrangements share the characteristic polynomial, the dominant-by-c
/// table and the full (c, d) census, with the geometric and combinatorial
/// censuses agreeing independently.
#[test]
fn a04_shared_statistics_on_all_four_vertex_graphs() {
    let graphs = Graph::all_graphs(4);
    assert_eq!(graphs.len(), 64);
    for g in &graphs {
        let chi_shi = build_shi(g).charpoly_interpolated().unwrap();
        let chi_ish = build_ish(g).charpoly_interpolated().unwrap();
        assert_eq!(chi_shi, chi_ish, "charpoly for {g}");

        let shi_geo = region_census(&build_shi(g), GUARD).unwrap();
        let ish_geo = region_census(&build_ish(g), GUARD).unwrap();
        let shi_lab = labeling_census(g, DiagramKind::Shi).unwrap();
        let ish_lab = labeling_census(g, DiagramKind::Ish).unwrap();
        assert_eq!(shi_geo.by_cd, shi_lab.by_cd, "shi geometric vs combinatorial for {g}");
        assert_eq!(ish_geo.by_cd, ish_lab.by_cd, "ish geometric vs combinatorial for {g}");
        assert_eq!(
            shi_geo.dominant_by_cd, shi_lab.dominant_by_cd,
            "shi dominant geometric vs combinatorial for {g}"
        );
        assert_eq!(
            ish_geo.dominant_by_cd, ish_lab.dominant_by_cd,
            "ish dominant geometric vs combinatorial for {g}"
        );
        assert_eq!(shi_geo.by_cd, ish_geo.by_cd, "joint (c,d) census for {g}");
        assert_eq!(
            shi_geo.dominant_by_c, ish_geo.dominant_by_c,
            "dominant-by-c for {g}"
        );
    }
    println!("PASS a04: 64/64 graphs on [4] verified (charpoly, dominant-by-c, full census)");
}

/// The refined counts of regions by ceiling partition and degrees of
/// freedom equal the closed formulas for every partition of [4], every d,
/// every graph, both arrangements (with the k = n convention).
#[test]
fn a05_refined_counts_by_ceiling_partition() {
    let partitions = enumerate_partitions(4);
    let mut checked = 0usize;
    for g in Graph::all_graphs(4) {
        for arr in [build_shi(&g), build_ish(&g)] {
            let mut oracle: BTreeMap<(String, usize), u64> = BTreeMap::new();
            let mut oracle_any_d: BTreeMap<String, u64> = BTreeMap::new();
            for region in enumerate_regions(&arr, GUARD).unwrap() {
                let e = geometric_ceiling_partition(&arr, &region).unwrap();
                let d = recession_dim(&arr, &region);
                *oracle.entry((e.to_string(), d)).or_insert(0) += 1;
                *oracle_any_d.entry(e.to_string()).or_insert(0) += 1;
            }
            for p in &partitions {
                let e = p.to_endpoint();
                let count = count_by_ceiling_partition(&g, &e).unwrap();
                assert_eq!(
                    count,
                    BigUint::from(oracle_any_d.get(&e.to_string()).copied().unwrap_or(0)),
                    "{} {} {}",
                    arr.kind(),
                    g,
                    e
                );
                for d in 1..=4usize {
                    let refined = count_by_ceiling_partition_and_dof(&g, &e, d).unwrap();
                    assert_eq!(
                        refined,
                        BigUint::from(
                            oracle.get(&(e.to_string(), d)).copied().unwrap_or(0)
                        ),
                        "{} {} {} d={}",
                        arr.kind(),
                        g,
                        e,
                        d
                    );
                    checked += 1;
                }
            }
        }
    }
    println!("PASS a05: {checked} (graph, arrangement, partition, d) cells match the formulas");
}

/// The Kreweras and component-refined counting formulas match brute-force
/// enumeration of nonnesting partitions for every type and every d, n <= 9.
#[test]
fn a06_counting_formulas_vs_enumeration() {
    for n in 1..=9usize {
        let mut by_type: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        let mut by_type_d: BTreeMap<(Vec<usize>, usize), u64> = BTreeMap::new();
        for p in enumerate_nonnesting(n) {
            let r = p.type_vector().r;
            *by_type.entry(r.clone()).or_insert(0) += 1;
            *by_type_d.entry((r, p.connected_components())).or_insert(0) += 1;
        }
        let mut types: Vec<Vec<usize>> = Vec::new();
        for p in enumerate_partitions(n) {
            let r = p.type_vector().r;
            if !types.contains(&r) {
                types.push(r);
            }
        }
        for r in types {
            let t = TypeVector::new(n, r.clone()).unwrap();
            assert_eq!(
                kreweras_count(&t),
                BigUint::from(by_type.get(&r).copied().unwrap_or(0)),
                "n={n} type {r:?}"
            );
            for d in 1..=n {
                assert_eq!(
                    component_refined_count(&t, d),
                    BigUint::from(by_type_d.get(&(r.clone(), d)).copied().unwrap_or(0)),
                    "n={n} type {r:?} d={d}"
                );
            }
        }
        println!("PASS a06: n={n}: both counting formulas match enumeration");
    }
}

/// The combinatorial degrees-of-freedom rules equal the geometric recession-cone
/// dimension under the bijection, for all graphs on [3] and [4] and for the
/// complete and chain graphs on [5].
#[test]
fn a07_degrees_of_freedom_rules() {
    let mut corpus: Vec<Graph> = Graph::all_graphs(3);
    corpus.extend(Graph::all_graphs(4));
    corpus.push(Graph::complete(5));
    corpus.push(Graph::chain(5));
    let mut regions_checked = 0usize;
    for g in &corpus {
        let shi = build_shi(g);
        for region in enumerate_regions(&shi, GUARD).unwrap() {
            let d = region_to_shi_diagram(&shi, &region).unwrap();
            assert_eq!(shi_dof(&d), recession_dim(&shi, &region), "shi {g}");
            regions_checked += 1;
        }
        let ish = build_ish(g);
        for region in enumerate_regions(&ish, GUARD).unwrap() {
            let d = region_to_ish_diagram(&ish, &region).unwrap();
            assert_eq!(ish_dof(&d), recession_dim(&ish, &region), "ish {g}");
            regions_checked += 1;
        }
    }
    println!(
        "PASS a07: dof rules match recession dimension on {regions_checked} regions across {} graphs",
        corpus.len()
    );
}

/// The eight-vertex worked examples: the Shi diagram with
/// w = 51286347 and arcs {14, 25, 68} has ceiling partition (135,678) and 2
/// degrees of freedom; the Ish diagram with eps = (0,0,0,1,0,0,3,5) has
/// ceiling partition (135,847) and 2 degrees of freedom.
#[test]
fn a08_worked_examples() {
    let g = Graph::complete(8);
    let w = Perm::from_one_line(vec![5, 1, 2, 8, 6, 3, 4, 7]).unwrap();
    let pi = SetPartition::from_blocks(
        8,
        [vec![1, 4], vec![2, 5], vec![3], vec![6, 8], vec![7]],
    )
    .unwrap();
    let shi = ShiCeilingDiagram::new(&g, w.clone(), pi).unwrap();
    assert_eq!(shi_ceiling_partition(&shi).to_string(), "(135,678)");
    assert_eq!(shi_dof(&shi), 2);
    let ish = IshCeilingDiagram::new(&g, w, vec![0, 0, 0, 1, 0, 0, 3, 5]).unwrap();
    assert_eq!(ish_ceiling_partition(&ish).to_string(), "(135,847)");
    assert_eq!(ish_dof(&ish), 2);
    println!("PASS a08: worked examples give (135,678) and (135,847), both with dof 2");
}

/// Negative controls: the dominant-by-(c,d) tables differ between Shi(3)
/// and Ish(3) (2 vs 3 relatively bounded dominant regions), and the product
/// formula rejects the chain on [3] with a witness triple.
#[test]
fn a09_negative_controls() {
    let g = Graph::complete(3);
    let shi = region_census(&build_shi(&g), GUARD).unwrap();
    let ish = region_census(&build_ish(&g), GUARD).unwrap();
    assert_ne!(shi.dominant_by_cd, ish.dominant_by_cd);
    assert_eq!(shi.dominant_relatively_bounded(), 2);
    assert_eq!(ish.dominant_relatively_bounded(), 3);
    match charpoly_product_form(&Graph::chain(3)) {
        Err(shi_ish::Error::NotClosedForProductFormula(1, 2, 3)) => {}
        other => panic!("expected witness triple (1,2,3), got {other:?}"),
    }
    println!(
        "PASS a09: dominant (c,d) tables differ (2 vs 3 relatively bounded); chain rejected with witness (1,2,3)"
    );
}

/// The polynomial identity (n+1)^(n-1) = sum_k Stir(n,k) n!/(n-k+1)! holds
/// exactly for n <= 10.
#[test]
fn a10_stirling_identity() {
    for n in 1..=10 {
        assert!(stirling_identity_check(n), "identity fails at n={n}");
    }
    println!("PASS a10: identity holds for n = 1..=10");
}

/// Sanity net under the criteria: the diagram enumeration used throughout
/// really does label each region exactly once on [3].
#[test]
fn a00_bijection_smoke() {
    let g = Graph::complete(3);
    let shi = build_shi(&g);
    let mut seen: Vec<String> = Vec::new();
    for w in Perm::all(3) {
        for d in enumerate_shi_diagrams(&g, &w).unwrap() {
            let region = shi_diagram_to_region(&d, &shi).unwrap();
            seen.push(region.signs_string());
        }
    }
    seen.sort();
    seen.dedup();
    assert_eq!(seen.len(), 16);
    let ish = build_ish(&g);
    let mut seen_ish: Vec<String> = Vec::new();
    for w in Perm::all(3) {
        for d in enumerate_ish_diagrams(&g, &w).unwrap() {
            let region = ish_diagram_to_region(&d, &ish).unwrap();
            seen_ish.push(region.signs_string());
        }
    }
    seen_ish.sort();
    seen_ish.dedup();
    assert_eq!(seen_ish.len(), 16);
    println!("PASS a00: 16 distinct regions reached by 16 diagrams, both arrangements");
}

/// The census type used in the criteria reports consistent totals.
#[test]
fn a00_census_totals_consistent() {
    let census: Census = region_census(&build_shi(&Graph::complete(4)), GUARD).unwrap();
    assert_eq!(census.total, 125);
    assert_eq!(census.by_c().values().sum::<u64>(), 125);
    assert_eq!(
        BigInt::from(census.relatively_bounded()),
        BigInt::from(27) // (n-1)^(n-1) = 27 for n = 4
    );
    println!("PASS a00: census totals consistent (125 regions, 27 relatively bounded)");
}
