use geom_graph::{
    bfs_distances, distance_matrix, distance_rows, energy_stretch, gabriel_edges, is_gudg_embedding,
    parse_embedded_graph, udg_from_points, write_embedded_graph, Dist, EmbeddedGraph, Fixed, GeomError, Graph,
    GudgViolation, Point2, DEFAULT_MARGIN,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn p(x: &str, y: &str) -> Point2 {
    Point2::parse(x, y).unwrap()
}

fn random_points(rng: &mut ChaCha8Rng, count: usize, side: i64) -> Vec<Point2> {
    let mut pts: Vec<Point2> = Vec::new();
    while pts.len() < count {
        let q = Point2::from_scaled(rng.gen_range(0..side * 10_000), rng.gen_range(0..side * 10_000));
        if !pts.contains(&q) {
            pts.push(q);
        }
    }
    pts
}

#[test]
fn unit_distance_is_an_edge_and_two_is_not() {
    let g = udg_from_points(&[p("0", "0"), p("1", "0")]).unwrap();
    assert!(g.graph().has_edge(0, 1));
    let g = udg_from_points(&[p("0", "0"), p("0", "2")]).unwrap();
    assert_eq!(g.graph().edge_count(), 0);
}

#[test]
fn near_boundary_pair_from_variable_interior_is_adjacent() {
    let g = udg_from_points(&[p("-0.7", "1.61"), p("0.28", "1.43")]).unwrap();
    assert!(g.graph().has_edge(0, 1));
}

#[test]
fn duplicate_points_are_rejected_with_their_indices() {
    let err = udg_from_points(&[p("0", "0"), p("1", "1"), p("0", "0")]).unwrap_err();
    assert_eq!(err, GeomError::DuplicatePoint { first: 0, second: 2 });
}

#[test]
fn midpoint_excludes_the_long_edge() {
    let g = udg_from_points(&[p("0", "0"), p("0.5", "0"), p("1", "0")]).unwrap();
    assert_eq!(g.graph().edge_count(), 3);
    assert_eq!(gabriel_edges(&g), vec![(0, 1), (1, 2)]);
}

#[test]
fn equilateral_triangle_keeps_every_edge() {
    // Side lengths are within 1e-4 of one another; all three are Gabriel.
    let g = udg_from_points(&[p("0", "0"), p("1", "0"), p("0.5", "0.866")]).unwrap();
    assert_eq!(g.graph().edge_count(), 3);
    assert_eq!(gabriel_edges(&g).len(), 3);
}

#[test]
fn pendant_edge_survives_its_twin_as_witness() {
    let a1 = p("1.57", "-0.74");
    let f10 = p("0.62", "-0.48");
    let b1 = p("1.55", "-0.81");
    let g = udg_from_points(&[a1, f10, b1]).unwrap();
    assert!(g.graph().has_edge(0, 1));
    assert!(gabriel_edges(&g).contains(&(0, 1)));
}

#[test]
fn unit_spaced_path_is_a_gudg_embedding() {
    let pts = vec![p("0", "0"), p("1", "0"), p("2", "0")];
    let path = EmbeddedGraph::new(Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap(), pts.clone()).unwrap();
    assert!(is_gudg_embedding(&path, DEFAULT_MARGIN).passed());

    let extra = EmbeddedGraph::new(Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap(), pts).unwrap();
    let report = is_gudg_embedding(&extra, DEFAULT_MARGIN);
    assert!(report.violations.contains(&GudgViolation::LongEdge { u: 0, v: 2, dist2: 4 * 100_000_000 }));
}

#[test]
fn margin_and_missing_edges_are_reported() {
    let pts = vec![p("0", "0"), p("1.0005", "0"), p("0", "0.9")];
    let g = EmbeddedGraph::new(Graph::empty(3), pts).unwrap();
    let report = is_gudg_embedding(&g, DEFAULT_MARGIN);
    assert_eq!(
        report.violations,
        vec![
            GudgViolation::Margin { u: 0, v: 1, dist2: 10005 * 10005 },
            GudgViolation::MissingEdge { u: 0, v: 2, dist2: 9000 * 9000 },
        ]
    );
}

#[test]
fn bfs_on_a_path_and_unreachable_vertices() {
    let g = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
    assert_eq!(
        bfs_distances(&g, 0).unwrap(),
        vec![Dist::Finite(0), Dist::Finite(1), Dist::Finite(2), Dist::Infinite]
    );
    assert!(matches!(bfs_distances(&g, 9), Err(GeomError::VertexOutOfRange { vertex: 9, count: 4 })));
    assert!(Dist::Finite(u32::MAX) < Dist::Infinite);
}

#[test]
fn distance_matrix_small_cases() {
    let single = distance_matrix(&Graph::empty(1));
    assert_eq!(single.row(0).unwrap(), &[Dist::Finite(0)]);
    let triangle = distance_matrix(&Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap());
    for u in 0..3 {
        for v in 0..3 {
            let expect = if u == v { 0 } else { 1 };
            assert_eq!(triangle.get(u, v), Some(Dist::Finite(expect)));
        }
    }
}

#[test]
fn partial_rows_answer_symmetric_queries() {
    let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    let dm = distance_rows(&g, &[3]).unwrap();
    assert_eq!(dm.get(0, 3), Some(Dist::Finite(3)));
    assert_eq!(dm.get(0, 1), None);
    assert!(!dm.is_complete());
}

#[test]
fn stretch_of_identity_is_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let g = udg_from_points(&random_points(&mut rng, 25, 3)).unwrap();
    assert_eq!(energy_stretch(&g, g.graph(), Fixed::ONE).unwrap(), 1.0);
}

#[test]
fn stretch_rejects_non_subgraphs_and_small_exponents() {
    let g = udg_from_points(&[p("0", "0"), p("1", "0"), p("5", "0")]).unwrap();
    let other = Graph::from_edges(3, [(1, 2)]).unwrap();
    assert_eq!(energy_stretch(&g, &other, Fixed::ONE), Err(GeomError::NotSubgraph { u: 1, v: 2 }));
    assert!(energy_stretch(&g, g.graph(), "0.5".parse().unwrap()).is_err());
    assert_eq!(energy_stretch(&g, &Graph::empty(3), Fixed::ONE).unwrap(), f64::INFINITY);
}

#[test]
fn gabriel_subgraph_is_an_optimal_energy_spanner() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..10 {
        let g = udg_from_points(&random_points(&mut rng, 40, 4)).unwrap();
        let sub = Graph::from_edges(g.vertex_count(), gabriel_edges(&g)).unwrap();
        let stretch = energy_stretch(&g, &sub, Fixed::from_int(2)).unwrap();
        assert!((stretch - 1.0).abs() <= 1e-9, "stretch {stretch}");
    }
}

#[test]
fn text_format_reports_line_numbers() {
    let err = parse_embedded_graph("v 0 0 0\nv 1 1 0\ne 0 7\n").unwrap_err();
    assert!(matches!(err, GeomError::Parse { line: 3, .. }));
    let err = parse_embedded_graph("v 0 0 0.00001\n").unwrap_err();
    assert!(matches!(err, GeomError::Parse { line: 1, .. }));
    let err = parse_embedded_graph("q 1\n").unwrap_err();
    assert!(matches!(err, GeomError::Parse { line: 1, .. }));
    let g = parse_embedded_graph("# comment\nv 1 1 0\nv 0 0 0\nname 0 a\ne 1 0\n").unwrap();
    assert_eq!(g.point(1), p("1", "0"));
    assert!(g.graph().has_edge(0, 1));
}

fn arb_points() -> impl Strategy<Value = Vec<Point2>> {
    prop::collection::btree_set((0i64..30_000, 0i64..30_000), 1..30)
        .prop_map(|s| s.into_iter().map(|(x, y)| Point2::from_scaled(x, y)).collect())
}

proptest! {
    #[test]
    fn rederiving_edges_is_idempotent(points in arb_points()) {
        let g = udg_from_points(&points).unwrap();
        let again = udg_from_points(g.points()).unwrap();
        prop_assert_eq!(&g, &again);
        let only_gabriel = is_gudg_embedding(&g, Fixed::ZERO)
            .violations
            .iter()
            .all(|v| matches!(v, GudgViolation::NonGabriel { .. }));
        prop_assert!(only_gabriel);
    }

    #[test]
    fn gabriel_edges_keep_components(points in arb_points()) {
        let g = udg_from_points(&points).unwrap();
        let kept = gabriel_edges(&g);
        prop_assert!(kept.iter().all(|&(u, v)| g.graph().has_edge(u, v)));
        let sub = Graph::from_edges(g.vertex_count(), kept).unwrap();
        prop_assert_eq!(sub.component_labels(), g.graph().component_labels());
    }

    #[test]
    fn hop_distances_are_one_lipschitz_and_symmetric(points in arb_points()) {
        let g = udg_from_points(&points).unwrap();
        let dm = distance_matrix(g.graph());
        let n = g.vertex_count();
        for x in 0..n {
            prop_assert_eq!(dm.get(x, x), Some(Dist::Finite(0)));
            let sequential = bfs_distances(g.graph(), x).unwrap();
            prop_assert_eq!(dm.row(x).unwrap(), &sequential[..]);
            for y in 0..n {
                prop_assert_eq!(dm.get(x, y), dm.get(y, x));
            }
        }
        for &(u, v) in g.graph().edges() {
            for x in 0..n {
                match (dm.get(u, x).unwrap(), dm.get(v, x).unwrap()) {
                    (Dist::Finite(a), Dist::Finite(b)) => prop_assert!(a.abs_diff(b) <= 1),
                    (a, b) => prop_assert_eq!(a, b),
                }
            }
        }
    }

    #[test]
    fn text_round_trip(points in arb_points()) {
        let g = udg_from_points(&points).unwrap();
        prop_assert_eq!(parse_embedded_graph(&write_embedded_graph(&g)).unwrap(), g);
    }
}
