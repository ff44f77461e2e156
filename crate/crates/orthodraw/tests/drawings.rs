use orthodraw::{
    edge_direction, parse_drawing, random_plane_grid, simple_orthogonal_draw, validate_drawing, write_drawing,
    DiGraph, Direction, DrawError, Drawing, DrawingViolation, EdgePath, End, GridPoint, PlaneGridParams,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pt(x: i64, y: i64) -> GridPoint {
    GridPoint::new(x, y)
}

fn path(points: &[(i64, i64)]) -> EdgePath {
    EdgePath::new(points.iter().map(|&(x, y)| pt(x, y)).collect())
}

type ArcPath<'a> = ((usize, usize), &'a [(i64, i64)]);

fn drawing(placement: &[(i64, i64)], paths: &[ArcPath<'_>]) -> Drawing {
    let mut d = Drawing::new(placement.iter().map(|&(x, y)| pt(x, y)).collect());
    for &((u, v), p) in paths {
        d.insert_path(u, v, path(p));
    }
    d
}

/// Clause-variable graph of `{x, y, z̄}, {x̄, ȳ, z}`: x, y, z, then c1, c2.
fn fig1_left() -> (DiGraph, Drawing) {
    let g = DiGraph::from_arcs(5, [(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
    let d = drawing(
        &[(-2, 0), (0, 0), (1, 0), (0, 1), (0, -1)],
        &[
            ((0, 3), &[(-2, 0), (-2, 1), (-1, 1), (0, 1)]),
            ((0, 4), &[(-2, 0), (-2, -1), (-1, -1), (0, -1)]),
            ((1, 3), &[(0, 0), (0, 1)]),
            ((1, 4), &[(0, 0), (0, -1)]),
            ((2, 3), &[(1, 0), (1, 1), (0, 1)]),
            ((2, 4), &[(1, 0), (1, -1), (0, -1)]),
        ],
    );
    (g, d)
}

/// The same instance after both long paths of x were split: x, y, z, h1,
/// h2, c1, c2, c1', c2'.
fn fig1_right() -> (DiGraph, Drawing) {
    let arcs = [(0, 7), (0, 8), (1, 5), (1, 6), (2, 5), (2, 6), (3, 7), (3, 5), (4, 8), (4, 6)];
    let g = DiGraph::from_arcs(9, arcs).unwrap();
    let d = drawing(
        &[(-2, 0), (0, 0), (1, 0), (-1, 1), (-1, -1), (0, 1), (0, -1), (-2, 1), (-2, -1)],
        &[
            ((0, 7), &[(-2, 0), (-2, 1)]),
            ((0, 8), &[(-2, 0), (-2, -1)]),
            ((1, 5), &[(0, 0), (0, 1)]),
            ((1, 6), &[(0, 0), (0, -1)]),
            ((2, 5), &[(1, 0), (1, 1), (0, 1)]),
            ((2, 6), &[(1, 0), (1, -1), (0, -1)]),
            ((3, 7), &[(-1, 1), (-2, 1)]),
            ((3, 5), &[(-1, 1), (0, 1)]),
            ((4, 8), &[(-1, -1), (-2, -1)]),
            ((4, 6), &[(-1, -1), (0, -1)]),
        ],
    );
    (g, d)
}

#[test]
fn disjoint_straight_paths_pass() {
    let g = DiGraph::from_arcs(4, [(0, 1), (2, 3)]).unwrap();
    let d = drawing(
        &[(0, 0), (3, 0), (0, 1), (3, 1)],
        &[((0, 1), &[(0, 0), (1, 0), (2, 0), (3, 0)]), ((2, 3), &[(0, 1), (1, 1), (2, 1), (3, 1)])],
    );
    assert!(validate_drawing(&g, &d).passed());
}

#[test]
fn crossing_paths_report_the_shared_point() {
    let g = DiGraph::from_arcs(4, [(0, 1), (2, 3)]).unwrap();
    let d = drawing(
        &[(-1, 0), (1, 0), (0, -1), (0, 1)],
        &[((0, 1), &[(-1, 0), (0, 0), (1, 0)]), ((2, 3), &[(0, -1), (0, 0), (0, 1)])],
    );
    let report = validate_drawing(&g, &d);
    assert_eq!(
        report.violations,
        vec![DrawingViolation::Crossing { first: (0, 1), second: (2, 3), point: pt(0, 0) }]
    );
}

#[test]
fn figure_one_drawings_pass() {
    for (g, d) in [fig1_left(), fig1_right()] {
        let report = validate_drawing(&g, &d);
        assert!(report.passed(), "{:?}", report.violations);
    }
    assert_eq!(fig1_left().1.max_path_len(), 3);
    assert_eq!(fig1_right().1.max_path_len(), 2);
}

#[test]
fn every_malformation_is_listed() {
    let g = DiGraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
    let d = drawing(&[(0, 0), (2, 0), (0, 0)], &[((0, 1), &[(0, 0), (2, 0)]), ((2, 0), &[(0, 0), (0, 1)])]);
    let v = validate_drawing(&g, &d).violations;
    assert!(v.contains(&DrawingViolation::SharedPlacement { u: 0, v: 2, point: pt(0, 0) }));
    assert!(v.contains(&DrawingViolation::MissingPath { u: 1, v: 2 }));
    assert!(v.contains(&DrawingViolation::UnknownPath { u: 2, v: 0 }));
    assert!(v.contains(&DrawingViolation::NonUnitStep { u: 0, v: 1, index: 0 }));

    let g = DiGraph::from_arcs(3, [(0, 1)]).unwrap();
    let d = drawing(&[(0, 0), (2, 0), (1, 0)], &[((0, 1), &[(0, 0), (1, 0), (2, 0)])]);
    assert_eq!(validate_drawing(&g, &d).violations, vec![DrawingViolation::ThroughVertex { u: 0, v: 1, vertex: 2 }]);

    let d = drawing(&[(0, 0), (2, 0), (5, 5)], &[((0, 1), &[(0, 0), (1, 0), (1, 1), (1, 0), (2, 0)])]);
    assert!(validate_drawing(&g, &d).violations.contains(&DrawingViolation::RepeatedPoint { u: 0, v: 1, point: pt(1, 0) }));

    let d = drawing(&[(0, 0), (2, 0), (5, 5)], &[((0, 1), &[(0, 0), (1, 0)])]);
    assert_eq!(validate_drawing(&g, &d).violations, vec![DrawingViolation::WrongEndpoint { u: 0, v: 1 }]);

    let d = drawing(&[(0, 0), (2, 0), (5, 5)], &[((0, 1), &[(0, 0)])]);
    assert_eq!(validate_drawing(&g, &d).violations, vec![DrawingViolation::TooShort { u: 0, v: 1 }]);

    let d = drawing(&[(0, 0)], &[]);
    assert_eq!(validate_drawing(&g, &d).violations, vec![DrawingViolation::PlacementCount { expected: 3, found: 1 }]);
}

#[test]
fn directions_follow_the_coordinate_rules() {
    let right = path(&[(0, 0), (1, 0)]);
    assert_eq!(edge_direction(&right, End::Source).unwrap(), Direction::FromLeft);
    assert_eq!(edge_direction(&right, End::Target).unwrap(), Direction::ToRight);
    let up = path(&[(0, 0), (0, 1)]);
    assert_eq!(edge_direction(&up, End::Source).unwrap(), Direction::FromBottom);
    assert_eq!(edge_direction(&up, End::Target).unwrap(), Direction::ToTop);
    let left_then_down = path(&[(0, 0), (-1, 0), (-1, -1)]);
    assert_eq!(edge_direction(&left_then_down, End::Source).unwrap(), Direction::FromRight);
    assert_eq!(edge_direction(&left_then_down, End::Target).unwrap(), Direction::ToBottom);
    assert_eq!(edge_direction(&path(&[(0, 0), (0, -1)]), End::Source).unwrap(), Direction::FromTop);
    assert_eq!(edge_direction(&path(&[(0, 0), (-1, 0)]), End::Target).unwrap(), Direction::ToLeft);
    assert_eq!(edge_direction(&path(&[(0, 0)]), End::Source), Err(DrawError::EmptyPath));
}

fn unit_walk(steps: &[u8]) -> EdgePath {
    let mut p = pt(0, 0);
    let mut points = vec![p];
    for s in steps {
        p = match s % 4 {
            0 => pt(p.x + 1, p.y),
            1 => pt(p.x - 1, p.y),
            2 => pt(p.x, p.y + 1),
            _ => pt(p.x, p.y - 1),
        };
        points.push(p);
    }
    EdgePath::new(points)
}

proptest! {
    #[test]
    fn source_of_a_path_matches_target_of_its_reverse(steps in prop::collection::vec(any::<u8>(), 1..12)) {
        let p = unit_walk(&steps);
        let source = edge_direction(&p, End::Source).unwrap();
        let target = edge_direction(&p.reversed(), End::Target).unwrap();
        let expected = match source {
            Direction::FromLeft => Direction::ToLeft,
            Direction::FromRight => Direction::ToRight,
            Direction::FromTop => Direction::ToTop,
            Direction::FromBottom => Direction::ToBottom,
            other => panic!("source end classified as {other}"),
        };
        prop_assert_eq!(target, expected);
    }
}

#[test]
fn drawer_handles_small_graphs() {
    let g = DiGraph::from_arcs(2, [(0, 1)]).unwrap();
    let d = simple_orthogonal_draw(&g).unwrap();
    assert!(validate_drawing(&g, &d).passed());

    let c4 = DiGraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let d = simple_orthogonal_draw(&c4).unwrap();
    assert!(validate_drawing(&c4, &d).passed());

    let (g, _) = fig1_left();
    let d = simple_orthogonal_draw(&g).unwrap();
    assert!(validate_drawing(&g, &d).passed());

    let empty = DiGraph::from_arcs(0, []).unwrap();
    assert!(simple_orthogonal_draw(&empty).unwrap().placement.is_empty());
}

#[test]
fn drawer_rejects_degree_five() {
    let g = DiGraph::from_arcs(6, (1..6).map(|v| (0, v))).unwrap();
    assert_eq!(simple_orthogonal_draw(&g), Err(DrawError::DegreeTooLarge { vertex: 0, degree: 5 }));
}

#[test]
fn drawer_output_validates_on_random_plane_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut drawn = 0;
    while drawn < 100 {
        let params = PlaneGridParams { width: 4, height: 4, min_degree: 1, ..PlaneGridParams::default() };
        let grid = random_plane_grid(&mut rng, params);
        if grid.edges.is_empty() {
            continue;
        }
        let g = DiGraph::from_arcs(grid.cells.len(), grid.edges.iter().copied()).unwrap();
        let d = simple_orthogonal_draw(&g).unwrap_or_else(|e| panic!("{e} on {:?}", grid.edges));
        let report = validate_drawing(&g, &d);
        assert!(report.passed(), "{:?}", report.violations);
        drawn += 1;
    }
}

#[test]
fn generated_plane_grids_carry_valid_drawings() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let grid = random_plane_grid(&mut rng, PlaneGridParams::default());
        let g = DiGraph::from_arcs(grid.cells.len(), grid.edges.iter().copied()).unwrap();
        let report = validate_drawing(&g, &grid.drawing);
        assert!(report.passed(), "{:?}", report.violations);
        for v in 0..g.vertex_count() {
            assert!((2..=3).contains(&g.degree(v)));
        }
        for &(u, v) in &grid.edges {
            assert_ne!(grid.parity(u), grid.parity(v));
        }
    }
}

#[test]
fn oriented_reverses_paths_stored_backwards() {
    let (g, d) = fig1_left();
    let flipped_arcs: Vec<(usize, usize)> = g.arcs().iter().map(|&(u, v)| (v, u)).collect();
    let flipped = DiGraph::from_arcs(5, flipped_arcs).unwrap();
    let re = d.oriented(&flipped).unwrap();
    assert!(validate_drawing(&flipped, &re).passed());
    assert_eq!(re.oriented(&g).unwrap(), d);
    let other = DiGraph::from_arcs(5, [(3, 4)]).unwrap();
    assert_eq!(d.oriented(&other), Err(DrawError::MissingPath(3, 4)));
}

#[test]
fn drawing_text_round_trip() {
    let (_, d) = fig1_right();
    let text = write_drawing(&d);
    assert!(text.starts_with("n 0 -2 0\n"));
    assert_eq!(parse_drawing(&text).unwrap(), d);
}

#[test]
fn drawing_parse_errors_carry_lines() {
    assert!(matches!(parse_drawing("n 0 1"), Err(DrawError::Parse { line: 1, .. })));
    assert!(matches!(parse_drawing("n 0 0 0\nq 1"), Err(DrawError::Parse { line: 2, .. })));
    assert!(matches!(parse_drawing("n 0 0 0\nn 0 1 1"), Err(DrawError::Parse { line: 2, .. })));
    assert!(matches!(parse_drawing("n 0 0 0\nn 1 1 0\np 0 1 0 0 1"), Err(DrawError::Parse { line: 3, .. })));
    assert!(matches!(parse_drawing("n 1 0 0"), Err(DrawError::Parse { .. })));
}

#[test]
fn digraph_rejects_bad_arcs() {
    assert_eq!(DiGraph::from_arcs(2, [(0, 0)]), Err(DrawError::SelfLoop(0)));
    assert_eq!(DiGraph::from_arcs(2, [(0, 1), (1, 0)]), Err(DrawError::DuplicateArc(1, 0)));
    assert_eq!(DiGraph::from_arcs(2, [(0, 2)]), Err(DrawError::VertexOutOfRange { vertex: 2, count: 2 }));
}
