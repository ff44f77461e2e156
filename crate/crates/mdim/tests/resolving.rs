use geom_graph::{distance_matrix, distance_rows, Graph};
use mdim::{
    exhaustive_metric_dimension, greedy_resolving, is_resolving, metric_dimension_exact, parse_landmarks,
    resolution_witness, resolves, restricted_min_resolving, twin_classes, unsolved_pairs, write_landmarks,
    ExactOutcome, LandmarkSet, MdimError, Resolution, Verdict,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
    Graph::from_edges(n, edges).unwrap()
}

fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
}

fn set(v: &[usize]) -> LandmarkSet {
    LandmarkSet::new(v.iter().copied()).unwrap()
}

fn optimal(g: &Graph) -> (usize, LandmarkSet) {
    match metric_dimension_exact(g, None).unwrap() {
        ExactOutcome::Optimal { k, set } => (k, set),
        other => panic!("unexpected {other:?}"),
    }
}

/// A random connected graph: a random spanning tree plus extra edges.
fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    let extra = rng.gen_range(0..=n);
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let e = (u.min(v), u.max(v));
        if u != v && !edges.contains(&e) && !edges.contains(&(e.1, e.0)) {
            edges.push(e);
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

#[test]
fn endpoint_of_path_resolves_the_other_two() {
    let dm = distance_matrix(&path(3));
    assert!(resolves(&dm, 0, 1, 2).unwrap());
    assert!(!resolves(&dm, 1, 0, 2).unwrap());
}

#[test]
fn a_vertex_resolves_every_pair_containing_it() {
    let dm = distance_matrix(&cycle(6));
    for u in 0..6 {
        for v in 0..6 {
            if u != v {
                assert!(resolves(&dm, u, u, v).unwrap());
            }
        }
    }
}

#[test]
fn invalid_ids_are_rejected() {
    let dm = distance_matrix(&path(3));
    assert_eq!(resolves(&dm, 3, 0, 1), Err(MdimError::VertexOutOfRange { vertex: 3, count: 3 }));
    assert!(is_resolving(&dm, &set(&[5])).is_err());
    assert_eq!(LandmarkSet::new([1, 1]), Err(MdimError::DuplicateLandmark(1)));
}

#[test]
fn path_endpoint_is_resolving() {
    for n in 1..8 {
        let dm = distance_matrix(&path(n));
        let s = if n == 0 { LandmarkSet::empty() } else { set(&[0]) };
        assert_eq!(is_resolving(&dm, &s).unwrap(), Verdict::Resolving);
    }
}

#[test]
fn two_landmarks_in_k4_leave_the_other_two_unsolved() {
    let dm = distance_matrix(&complete(4));
    for a in 0..4 {
        for b in (a + 1)..4 {
            let rest: Vec<usize> = (0..4).filter(|&v| v != a && v != b).collect();
            assert_eq!(is_resolving(&dm, &set(&[a, b])).unwrap(), Verdict::Unsolved { u: rest[0], v: rest[1] });
            assert_eq!(unsolved_pairs(&dm, &set(&[a, b])).unwrap(), vec![(rest[0], rest[1])]);
        }
    }
}

#[test]
fn full_vertex_set_leaves_nothing_unsolved() {
    let g = cycle(7);
    let dm = distance_matrix(&g);
    assert!(unsolved_pairs(&dm, &set(&(0..7).collect::<Vec<_>>())).unwrap().is_empty());
}

#[test]
fn one_landmark_on_c4_leaves_its_two_neighbours() {
    let dm = distance_matrix(&cycle(4));
    assert_eq!(unsolved_pairs(&dm, &set(&[0])).unwrap(), vec![(1, 3)]);
    assert_eq!(unsolved_pairs(&dm, &set(&[2])).unwrap(), vec![(1, 3)]);
    assert_eq!(unsolved_pairs(&dm, &set(&[1])).unwrap(), vec![(0, 2)]);
}

#[test]
fn witness_names_the_smallest_resolver() {
    let dm = distance_matrix(&path(5));
    let w = resolution_witness(&dm, &set(&[2, 4]), 3, 1).unwrap();
    assert_eq!((w.u, w.v, w.status), (1, 3, Resolution::ResolvedBy(4)));
    let w = resolution_witness(&dm, &set(&[2]), 1, 3).unwrap();
    assert_eq!(w.status, Resolution::Unsolved);
}

#[test]
fn exact_values_on_small_families() {
    for n in 2..8 {
        assert_eq!(optimal(&path(n)), (1, set(&[0])));
    }
    assert_eq!(optimal(&complete(4)), (3, set(&[0, 1, 2])));
    assert_eq!(optimal(&cycle(6)), (2, set(&[0, 1])));
    assert_eq!(optimal(&star(4)).0, 3);
    assert_eq!(optimal(&Graph::from_edges(1, []).unwrap()).0, 0);
}

#[test]
fn exact_solver_honours_the_upper_bound() {
    assert_eq!(metric_dimension_exact(&complete(5), Some(3)).unwrap(), ExactOutcome::ExceedsBound { bound: 3 });
    assert_eq!(optimal(&complete(5)).0, 4);
}

#[test]
fn exact_solver_rejects_disconnected_graphs() {
    let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    assert_eq!(metric_dimension_exact(&g, None), Err(MdimError::Disconnected(2)));
}

#[test]
fn twin_classes_of_a_star_are_its_leaves() {
    let dm = distance_matrix(&star(4));
    assert_eq!(twin_classes(&dm).unwrap(), vec![vec![1, 2, 3, 4]]);
}

#[test]
fn greedy_on_small_families() {
    let dm = distance_matrix(&path(3));
    assert_eq!(greedy_resolving(&dm).unwrap(), set(&[0]));
    assert_eq!(greedy_resolving(&distance_matrix(&complete(4))).unwrap().len(), 3);
    let dm = distance_matrix(&star(4));
    let s = greedy_resolving(&dm).unwrap();
    assert_eq!(s.len(), 3);
    assert_eq!(is_resolving(&dm, &s).unwrap(), Verdict::Resolving);
}

#[test]
fn greedy_needs_every_row() {
    let g = path(4);
    let dm = distance_rows(&g, &[0]).unwrap();
    assert_eq!(greedy_resolving(&dm), Err(MdimError::MissingRow(1)));
    assert_eq!(is_resolving(&dm, &set(&[0])).unwrap(), Verdict::Resolving);
}

#[test]
fn restricted_search_returns_forced_set_when_already_resolving() {
    let dm = distance_matrix(&path(6));
    let found = restricted_min_resolving(&dm, &set(&[0]), &[]).unwrap().unwrap();
    assert!(found.choices.is_empty());
    assert_eq!(found.landmarks, set(&[0]));
}

#[test]
fn restricted_search_picks_the_first_working_choice() {
    // C6 needs two adjacent landmarks; with 0 forced the group order decides.
    let dm = distance_matrix(&cycle(6));
    let found = restricted_min_resolving(&dm, &set(&[0]), &[vec![3, 2, 1]]).unwrap().unwrap();
    assert_eq!(found.choices, vec![2]);
    assert_eq!(found.landmarks, set(&[0, 2]));
    assert_eq!(restricted_min_resolving(&dm, &set(&[0]), &[vec![3]]).unwrap(), None);
}

#[test]
fn restricted_search_matches_brute_force_over_choices() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let n = rng.gen_range(4..11);
        let g = random_connected(&mut rng, n);
        let dm = distance_matrix(&g);
        let mut order: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            order.swap(i, rng.gen_range(0..=i));
        }
        let forced = set(&order[..1]);
        let groups: Vec<Vec<usize>> = order[1..].chunks(3).take(2).map(|c| c.to_vec()).collect();
        let mut expected = None;
        let mut stack = vec![Vec::new()];
        // Enumerate selections lexicographically.
        let mut all: Vec<Vec<usize>> = Vec::new();
        while let Some(prefix) = stack.pop() {
            if prefix.len() == groups.len() {
                all.push(prefix);
                continue;
            }
            for &c in groups[prefix.len()].iter().rev() {
                let mut next = prefix.clone();
                next.push(c);
                stack.push(next);
            }
        }
        for choice in all {
            let s = forced.union(&set(&choice));
            if is_resolving(&dm, &s).unwrap() == Verdict::Resolving {
                expected = Some(choice);
                break;
            }
        }
        let got = restricted_min_resolving(&dm, &forced, &groups).unwrap().map(|s| s.choices);
        assert_eq!(got, expected);
    }
}

#[test]
fn restricted_search_rejects_overlapping_groups() {
    let dm = distance_matrix(&path(5));
    assert_eq!(
        restricted_min_resolving(&dm, &LandmarkSet::empty(), &[vec![1, 2], vec![3, 2]]),
        Err(MdimError::OverlappingGroups { first: 0, second: 1, vertex: 2 })
    );
}

#[test]
fn landmark_text_round_trip_and_errors() {
    let s = set(&[7, 2, 40]);
    let text = write_landmarks(&s);
    assert_eq!(text, "s 2\ns 7\ns 40\n");
    assert_eq!(parse_landmarks(&format!("# comment\n\n{text}")).unwrap(), s);
    assert!(matches!(parse_landmarks("s x"), Err(MdimError::Parse { line: 1, .. })));
    assert!(matches!(parse_landmarks("s 1\nv 2"), Err(MdimError::Parse { line: 2, .. })));
    assert!(matches!(parse_landmarks("s 1 2"), Err(MdimError::Parse { line: 1, .. })));
    assert_eq!(parse_landmarks("s 1\ns 1"), Err(MdimError::DuplicateLandmark(1)));
}

#[test]
fn exact_matches_exhaustive_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..200 {
        let n = rng.gen_range(2..=12);
        let g = random_connected(&mut rng, n);
        let (k, s) = optimal(&g);
        let (k_ref, s_ref) = exhaustive_metric_dimension(&g).unwrap();
        assert_eq!((k, &s), (k_ref, &s_ref), "graph {:?}", g.edges());
        let dm = distance_matrix(&g);
        let greedy = greedy_resolving(&dm).unwrap();
        assert_eq!(is_resolving(&dm, &greedy).unwrap(), Verdict::Resolving);
        assert!(greedy.len() >= k);
    }
}

proptest! {
    #[test]
    fn supersets_of_resolving_sets_resolve(seed in any::<u64>(), n in 2usize..14) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected(&mut rng, n);
        let dm = distance_matrix(&g);
        let base = greedy_resolving(&dm).unwrap();
        let extra: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.3)).collect();
        let bigger = base.union(&set(&extra));
        prop_assert_eq!(is_resolving(&dm, &bigger).unwrap(), Verdict::Resolving);
    }

    #[test]
    fn unsolved_pairs_shrink_as_landmarks_grow(seed in any::<u64>(), n in 2usize..14) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected(&mut rng, n);
        let dm = distance_matrix(&g);
        let small: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.3)).collect();
        let large: Vec<usize> = (0..n).filter(|v| small.contains(v) || rng.gen_bool(0.3)).collect();
        let before = unsolved_pairs(&dm, &set(&small)).unwrap();
        let after = unsolved_pairs(&dm, &set(&large)).unwrap();
        prop_assert!(after.iter().all(|p| before.contains(p)));
        for &(u, v) in &after {
            prop_assert!(large.iter().all(|&s| !resolves(&dm, s, u, v).unwrap()));
        }
    }
}
