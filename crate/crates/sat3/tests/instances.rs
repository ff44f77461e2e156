use orthodraw::{validate_drawing, Drawing, EdgePath, GridPoint};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sat3::{
    brute_force_sat, clause_variable_graph, parse_dimacs, random_instance, shorten_edge_paths, validate_instance,
    write_dimacs, Clause, InstanceViolation, Literal, NameRules, RandomInstanceParams, SatError, SatInstance,
    TruthAssignment,
};

fn instance(vars: &[&str], clauses: &[&[i64]]) -> SatInstance {
    let clauses = clauses
        .iter()
        .enumerate()
        .map(|(j, lits)| {
            let lits = lits.iter().map(|&l| Literal { var: l.unsigned_abs() as usize - 1, positive: l > 0 }).collect();
            Clause::new(format!("c{}", j + 1), lits)
        })
        .collect();
    SatInstance::new(vars.iter().map(|s| s.to_string()).collect(), clauses)
}

/// `{x, y, ¬z}, {¬x, ¬y, z}`.
fn fig1() -> SatInstance {
    instance(&["x", "y", "z"], &[&[1, 2, -3], &[-1, -2, 3]])
}

fn pts(points: &[(i64, i64)]) -> EdgePath {
    EdgePath::new(points.iter().map(|&(x, y)| GridPoint::new(x, y)).collect())
}

type ArcPath<'a> = ((usize, usize), &'a [(i64, i64)]);

fn drawing(placement: &[(i64, i64)], paths: &[ArcPath<'_>]) -> Drawing {
    let mut d = Drawing::new(placement.iter().map(|&(x, y)| GridPoint::new(x, y)).collect());
    for &((u, v), p) in paths {
        d.insert_path(u, v, pts(p));
    }
    d
}

/// Fig. 1 with the x paths of length 3.
fn fig1_drawing() -> Drawing {
    drawing(
        &[(-2, 0), (0, 0), (1, 0), (0, 1), (0, -1)],
        &[
            ((0, 3), &[(-2, 0), (-2, 1), (-1, 1), (0, 1)]),
            ((0, 4), &[(-2, 0), (-2, -1), (-1, -1), (0, -1)]),
            ((1, 3), &[(0, 0), (0, 1)]),
            ((1, 4), &[(0, 0), (0, -1)]),
            ((2, 3), &[(1, 0), (1, 1), (0, 1)]),
            ((2, 4), &[(1, 0), (1, -1), (0, -1)]),
        ],
    )
}

/// Fig. 1 spread out: the x and z paths have length 4, the y paths length 2.
fn fig1_long_drawing() -> Drawing {
    drawing(
        &[(-2, 0), (0, 0), (2, 0), (0, 2), (0, -2)],
        &[
            ((0, 3), &[(-2, 0), (-2, 1), (-2, 2), (-1, 2), (0, 2)]),
            ((0, 4), &[(-2, 0), (-2, -1), (-2, -2), (-1, -2), (0, -2)]),
            ((1, 3), &[(0, 0), (0, 1), (0, 2)]),
            ((1, 4), &[(0, 0), (0, -1), (0, -2)]),
            ((2, 3), &[(2, 0), (2, 1), (2, 2), (1, 2), (0, 2)]),
            ((2, 4), &[(2, 0), (2, -1), (2, -2), (1, -2), (0, -2)]),
        ],
    )
}

/// `(a ∨ b), (¬a ∨ c), (¬b ∨ c), (e ∨ f), (¬e ∨ d), (¬f ∨ d), (¬c ∨ ¬d)`:
/// the first three clauses force c, the next three force d.
fn unsatisfiable() -> SatInstance {
    instance(
        &["a", "b", "c", "d", "e", "f"],
        &[&[1, 2], &[-1, 3], &[-2, 3], &[5, 6], &[-5, 4], &[-6, 4], &[-3, -4]],
    )
}

fn assert_valid_pair(psi: &SatInstance, d: &Drawing) {
    let report = validate_instance(psi);
    assert!(report.passed(), "{:?}", report.violations);
    let cvg = clause_variable_graph(psi);
    let check = validate_drawing(&cvg.graph, d);
    assert!(check.passed(), "{:?}", check.violations);
}

#[test]
fn figure_one_instance_is_valid() {
    assert!(validate_instance(&fig1()).passed());
    assert!(validate_instance(&unsatisfiable()).passed());
}

#[test]
fn all_positive_three_clause_is_rejected() {
    let psi = instance(&["x", "y", "z"], &[&[1, 2, 3], &[-1, -2, -3]]);
    let v = validate_instance(&psi).violations;
    assert!(v.contains(&InstanceViolation::NoNegativeLiteral { clause: 0 }));
    assert!(v.iter().all(|x| !matches!(x, InstanceViolation::OccurrenceCount { .. })));
}

#[test]
fn variable_negated_twice_is_rejected() {
    let psi = instance(&["x", "y"], &[&[-1, 2], &[-1, -2]]);
    assert_eq!(validate_instance(&psi).violations, vec![InstanceViolation::NegativeCount { var: 0, count: 2 }]);
}

#[test]
fn other_rule_breaks_are_listed() {
    let psi = instance(&["x", "y", "x"], &[&[1], &[1, -1], &[-2, 2, 3, -3]]);
    let v = validate_instance(&psi).violations;
    assert!(v.contains(&InstanceViolation::DuplicateName("x".into())));
    assert!(v.contains(&InstanceViolation::ClauseSize { clause: 0, size: 1 }));
    assert!(v.contains(&InstanceViolation::ClauseSize { clause: 2, size: 4 }));
    assert!(v.contains(&InstanceViolation::RepeatedVariable { clause: 1, var: 0 }));
    let psi = instance(&["x"], &[&[1, 2]]);
    assert!(validate_instance(&psi).violations.contains(&InstanceViolation::UnknownVariable { clause: 0, var: 1 }));
}

#[test]
fn brute_force_finds_the_lexicographically_first_model() {
    let psi = fig1();
    let a = brute_force_sat(&psi).unwrap().unwrap();
    assert_eq!(a, TruthAssignment::all_false(3));
    assert!(psi.is_satisfied_by(&TruthAssignment(vec![true, false, true])));
    // Forbid the all-false model. 001 breaks the first clause, so 010 wins.
    let psi = instance(&["x", "y", "z"], &[&[1, 2, -3], &[-1, -2, 3], &[3, 2]]);
    assert_eq!(brute_force_sat(&psi).unwrap().unwrap(), TruthAssignment(vec![false, true, false]));
}

#[test]
fn brute_force_edge_cases() {
    let empty = SatInstance::new(vec!["x".into(), "y".into()], vec![]);
    assert_eq!(brute_force_sat(&empty).unwrap(), Some(TruthAssignment::all_false(2)));
    assert_eq!(brute_force_sat(&unsatisfiable()).unwrap(), None);
    let big = SatInstance::new((0..31).map(|i| format!("v{i}")).collect(), vec![]);
    assert_eq!(brute_force_sat(&big), Err(SatError::TooManyVariables { count: 31, limit: 30 }));
}

#[test]
fn clause_variable_graph_shape() {
    let cvg = clause_variable_graph(&fig1());
    assert_eq!(cvg.graph.vertex_count(), 5);
    assert_eq!(cvg.graph.arcs(), &[(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)]);
    for c in 0..2 {
        assert_eq!(cvg.graph.in_degree(cvg.clause_vertex(c)), 3);
    }
    let psi = instance(&["x", "y"], &[&[1, 2], &[-1, -2]]);
    assert_eq!(clause_variable_graph(&psi).graph.arcs().len(), 4);
    let psi = instance(&["x", "y", "z"], &[&[1, -2], &[1, -3], &[-1, 2, 3]]);
    let cvg = clause_variable_graph(&psi);
    assert_eq!(cvg.graph.out_degree(0), 3);
    for v in 0..cvg.graph.vertex_count() {
        assert!(cvg.graph.degree(v) <= 3);
    }
}

#[test]
fn dimacs_round_trip_keeps_names() {
    let psi = fig1();
    let text = write_dimacs(&psi);
    assert!(text.starts_with("p cnf 3 2\nc var 1 x\n"));
    assert_eq!(parse_dimacs(&text, NameRules::Input).unwrap(), psi);
    let plain = parse_dimacs("c hello\np cnf 2 1\n1\n-2 0\n", NameRules::Input).unwrap();
    assert_eq!(plain.variables, vec!["x1", "x2"]);
    assert_eq!(plain.clauses[0], Clause::new("c1", vec![Literal::pos(0), Literal::neg(1)]));
}

#[test]
fn dimacs_errors() {
    let reserved = "p cnf 1 0\nc var 1 h#1\n";
    assert_eq!(parse_dimacs(reserved, NameRules::Input), Err(SatError::ReservedName("h#1".into())));
    assert!(parse_dimacs(reserved, NameRules::AllowReserved).is_ok());
    for (text, line) in [
        ("1 2 0", 1),
        ("p cnf 2 1\n1 3 0", 2),
        ("p cnf 2 1\n1 x 0", 2),
        ("p cnf 2 2\n1 2 0", 2),
        ("p cnf 2 1\n1 2", 2),
        ("p dnf 2 1", 1),
        ("p cnf 1 0\np cnf 1 0", 2),
    ] {
        match parse_dimacs(text, NameRules::Input) {
            Err(SatError::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
            other => panic!("{text:?} gave {other:?}"),
        }
    }
}

#[test]
fn short_paths_are_left_alone() {
    let psi = instance(&["x", "y"], &[&[1, 2], &[-1, -2]]);
    let d = drawing(
        &[(0, 0), (2, 0), (1, 1), (1, -1)],
        &[
            ((0, 2), &[(0, 0), (0, 1), (1, 1)]),
            ((0, 3), &[(0, 0), (0, -1), (1, -1)]),
            ((1, 2), &[(2, 0), (2, 1), (1, 1)]),
            ((1, 3), &[(2, 0), (2, -1), (1, -1)]),
        ],
    );
    assert_eq!(shorten_edge_paths(&psi, &d).unwrap(), (psi, d));
}

#[test]
fn length_three_path_becomes_three_unit_paths() {
    let (psi, d) = shorten_edge_paths(&fig1(), &fig1_drawing()).unwrap();
    assert_valid_pair(&psi, &d);
    assert_eq!(psi.variables, vec!["x", "y", "z", "h#1", "h#2"]);
    let names: Vec<&str> = psi.clauses.iter().map(|c| c.name.as_str()).collect();
    assert_eq!(names, vec!["c1", "c2", "c#1", "c#2"]);
    // Positive x in c1: c#1 = {x, ¬h#1} and c1 receives h#1.
    assert_eq!(psi.clauses[0].literals, vec![Literal::pos(3), Literal::pos(1), Literal::neg(2)]);
    assert_eq!(psi.clauses[2].literals, vec![Literal::pos(0), Literal::neg(3)]);
    // Negated x in c2, which also holds ¬y: c#2 = {¬x, ¬h#2} and c2 receives h#2.
    assert_eq!(psi.clauses[1].literals, vec![Literal::pos(4), Literal::neg(1), Literal::pos(2)]);
    assert_eq!(psi.clauses[3].literals, vec![Literal::neg(0), Literal::neg(4)]);
    // The new vertices sit on the old path: c#1 at p2, h#1 at p3.
    assert_eq!(d.placement[3], GridPoint::new(-1, 1));
    assert_eq!(d.placement[7], GridPoint::new(-2, 1));
    assert_eq!(d.path(0, 7).unwrap().len(), 1);
    assert_eq!(d.path(3, 7).unwrap().len(), 1);
    assert_eq!(d.path(3, 5).unwrap().len(), 1);
    assert_eq!(d.max_path_len(), 2);
}

#[test]
fn only_negated_literal_of_a_three_clause_keeps_a_negation() {
    // c2 = {¬x, y, z} with a long path for x.
    let psi = instance(&["x", "y", "z"], &[&[1, -2, -3], &[-1, 2, 3]]);
    let (out, d) = shorten_edge_paths(&psi, &fig1_drawing()).unwrap();
    assert_valid_pair(&out, &d);
    assert_eq!(out.clauses[1].literals[0], Literal::neg(4));
    assert_eq!(out.clauses[3].literals, vec![Literal::neg(0), Literal::pos(4)]);
}

#[test]
fn figure_one_long_drawing_shortens_to_length_two() {
    let psi = fig1();
    let (out, d) = shorten_edge_paths(&psi, &fig1_long_drawing()).unwrap();
    assert_valid_pair(&out, &d);
    assert!(d.max_path_len() <= 2);
    assert_eq!(out.variable_count(), 7);
    assert_eq!(brute_force_sat(&out).unwrap().is_some(), brute_force_sat(&psi).unwrap().is_some());
}

#[test]
fn shortening_rejects_bad_drawings() {
    let mut d = fig1_drawing();
    d.paths.remove(&(0, 3));
    assert!(matches!(shorten_edge_paths(&fig1(), &d), Err(SatError::InvalidDrawing(_))));
    let bad = instance(&["x", "y", "z"], &[&[1, 2, 3], &[-1, -2, -3]]);
    assert!(matches!(shorten_edge_paths(&bad, &fig1_drawing()), Err(SatError::InvalidInstance(_))));
}

/// Each generated variable occurs exactly twice, once negated.
fn new_variables_occur_twice(psi: &SatInstance, original: usize) -> bool {
    (original..psi.variable_count()).all(|h| {
        let occ = psi.occurrences(h);
        occ.len() == 2 && occ.iter().filter(|(_, l)| !l.positive).count() == 1
    })
}

#[test]
fn shortening_preserves_satisfiability_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let params = RandomInstanceParams::default();
    let (mut sat, mut unsat, mut checked) = (0, 0, 0);
    while checked < 100 {
        let (psi, d) = random_instance(&mut rng, params).unwrap();
        assert_valid_pair(&psi, &d);
        let (out, d2) = shorten_edge_paths(&psi, &d).unwrap();
        assert_valid_pair(&out, &d2);
        assert!(d2.max_path_len() <= 2);
        assert!(new_variables_occur_twice(&out, psi.variable_count()));
        if out.variable_count() > 24 {
            continue;
        }
        let before = brute_force_sat(&psi).unwrap();
        let after = brute_force_sat(&out).unwrap();
        assert_eq!(before.is_some(), after.is_some(), "{psi}");
        if let Some(a) = after {
            assert!(out.is_satisfied_by(&a));
            let restricted = TruthAssignment(a.0[..psi.variable_count()].to_vec());
            assert!(psi.is_satisfied_by(&restricted));
            sat += 1;
        } else {
            unsat += 1;
        }
        checked += 1;
    }
    assert_eq!(sat + unsat, 100);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_instances_shorten_to_valid_pairs(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (psi, d) = random_instance(&mut rng, RandomInstanceParams::default()).unwrap();
        prop_assert!(validate_instance(&psi).passed());
        let (out, d2) = shorten_edge_paths(&psi, &d).unwrap();
        prop_assert!(validate_instance(&out).passed());
        prop_assert!(validate_drawing(&clause_variable_graph(&out).graph, &d2).passed());
        prop_assert!(d2.max_path_len() <= 2);
        let (again, d3) = shorten_edge_paths(&out, &d2).unwrap();
        prop_assert_eq!(again, out);
        prop_assert_eq!(d3, d2);
    }
}
