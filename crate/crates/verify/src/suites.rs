//! The verification suites.

use std::collections::BTreeSet;

use assembler::{
    assignment_to_landmarks, forced_landmarks, fourth_landmark_groups, landmarks_to_assignment, Assembly,
    ForcedLandmarks, PendantChoice, FOURTH_LANDMARK_GROUP,
};
use gadgets::{gadget, GadgetKind, VARIABLE_INTERIOR};
use geom_graph::{
    bfs_distances, distance_rows, energy_stretch, gabriel_edges, is_gudg_embedding, udg_from_points, Dist, Fixed,
    Graph, Point2, DEFAULT_MARGIN,
};
use mdim::{
    exhaustive_metric_dimension, is_resolving, metric_dimension_exact, restricted_min_resolving, unsolved_pairs,
    ExactOutcome, LandmarkSet, Verdict,
};
use orthodraw::{validate_drawing, Drawing};
use sat3::{brute_force_sat, clause_variable_graph, shorten_edge_paths, validate_instance, SatInstance, TruthAssignment};

use crate::tables::clause_table;
use crate::{SuiteReport, VerifyError};

/// Largest shortened instance accepted by [`theorem_equivalence`].
pub const MAX_EQUIVALENCE_VARIABLES: usize = 8;

fn show(d: &[Dist]) -> String {
    let parts: Vec<String> = d.iter().map(|x| x.finite().map_or("∞".to_string(), |v| v.to_string())).collect();
    format!("({})", parts.join(","))
}

fn choice_name(choice: PendantChoice) -> &'static str {
    match choice {
        PendantChoice::A => "a",
        PendantChoice::B => "b",
    }
}

/// Every tabulated interior vertex of every variable copy is at the listed
/// hop distances from the copy's `a₁, a₂, a₃`.
pub fn golden_variable_distances(a: &Assembly) -> Result<SuiteReport, VerifyError> {
    let mut r = SuiteReport::new("golden_variable_distances");
    for x in 0..a.variable_copies.len() {
        let copy = a.variable_copy(x);
        let sources: Vec<usize> = ["a1", "a2", "a3"].iter().map(|n| copy.vertex(n).expect("pendant")).collect();
        let dm = distance_rows(&a.graph, &sources)?;
        for row in VARIABLE_INTERIOR {
            let Some(v) = copy.vertex(row.label) else {
                r.note(format!("x{x} ({}) has no vertex {}", copy.kind, row.label));
                continue;
            };
            let got: Vec<Dist> = sources.iter().map(|&s| dm.get(s, v).expect("row computed")).collect();
            let want: Vec<Dist> = row.d.iter().map(|&d| Dist::Finite(d)).collect();
            r.check(format!("x{x}.{}", row.label), got == want, || format!("got {} expected {}", show(&got), show(&want)));
        }
    }
    Ok(r)
}

/// For every three-literal clause copy, each tabulated vertex is at the
/// listed distances from the nearest forced landmark of the variable on
/// pair 1, 2 and 3. One check per table entry.
pub fn golden_clause_distances(a: &Assembly, choice: PendantChoice) -> Result<SuiteReport, VerifyError> {
    let mut r = SuiteReport::new("golden_clause_distances");
    let forced = forced_landmarks(a, choice);
    let table = clause_table();
    let mut found = false;
    for c in 0..a.clause_copies.len() {
        let copy = a.clause_copy(c);
        if copy.kind != GadgetKind::G3c {
            continue;
        }
        found = true;
        let mut nearest: Vec<Vec<Dist>> = Vec::new();
        for i in 1..=3 {
            let x = a.clause_pair_variable(c, i).ok_or_else(|| VerifyError::Precondition(format!("clause {c} pair {i} unattached")))?;
            let dm = distance_rows(&a.graph, &forced.per_variable[x])?;
            let best: Vec<Dist> = (0..a.vertex_count())
                .map(|v| forced.per_variable[x].iter().map(|&s| dm.get(s, v).expect("row computed")).min().expect("three"))
                .collect();
            nearest.push(best);
        }
        for (label, want) in &table {
            let v = copy.vertex(label).expect("clause vertex");
            for (k, axis) in ["x", "y", "z"].iter().enumerate() {
                let got = nearest[k][v];
                r.check(format!("c{c}.{label}.d{axis}"), got == Dist::Finite(want[k]), || {
                    format!("got {} expected {}", show(&[got]), want[k])
                });
            }
        }
    }
    if !found {
        r.note("no three-literal clause in this instance");
    }
    Ok(r)
}

/// No vertex outside `{aᵢ, bᵢ}` tells `aᵢ` from `bᵢ`, so every resolving set
/// holds one of them.
pub fn lemma_min3(a: &Assembly) -> Result<SuiteReport, VerifyError> {
    let mut r = SuiteReport::new("lemma_min3");
    for x in 0..a.variable_copies.len() {
        let copy = a.variable_copy(x);
        for i in 1..=3 {
            let (ai, bi) = (copy.vertex(&format!("a{i}")).expect("pendant"), copy.vertex(&format!("b{i}")).expect("pendant"));
            let da = bfs_distances(&a.graph, ai)?;
            let db = bfs_distances(&a.graph, bi)?;
            let bad = (0..a.vertex_count()).find(|&s| s != ai && s != bi && da[s] != db[s]);
            r.check(format!("x{x}.a{i}/b{i}"), bad.is_none(), || {
                let s = bad.expect("failed");
                format!("{} sees {} and {}", a.names[s], show(&[da[s]]), show(&[db[s]]))
            });
        }
    }
    Ok(r)
}

/// The pairs left unsolved by the forced landmarks are exactly `{T₁,T₂}`
/// and `{N₁,F}` of every variable copy and `{w₁,w₂}` of every clause copy.
pub fn lemma_resolve_all(a: &Assembly, forced: &ForcedLandmarks) -> Result<SuiteReport, VerifyError> {
    let mut r = SuiteReport::new("lemma_resolve_all");
    let set = forced.set();
    let dm = distance_rows(&a.graph, set.vertices())?;
    let got: BTreeSet<(usize, usize)> = unsolved_pairs(&dm, &set)?.into_iter().collect();
    let mut want: BTreeSet<(usize, usize)> = BTreeSet::new();
    let ordered = |u: usize, v: usize| (u.min(v), u.max(v));
    for x in 0..a.variable_copies.len() {
        let copy = a.variable_copy(x);
        for (p, q) in [("T1", "T2"), ("N1", "F")] {
            want.insert(ordered(copy.vertex(p).expect("interior"), copy.vertex(q).expect("interior")));
        }
    }
    for c in 0..a.clause_copies.len() {
        let copy = a.clause_copy(c);
        want.insert(ordered(copy.vertex("w1").expect("clause"), copy.vertex("w2").expect("clause")));
    }
    for &(u, v) in &want {
        r.check(format!("unsolved {}/{}", a.names[u], a.names[v]), got.contains(&(u, v)), || "resolved by a forced landmark".into());
    }
    let extra: Vec<&(usize, usize)> = got.difference(&want).collect();
    r.check("no other unsolved pairs", extra.is_empty(), || {
        let &(u, v) = extra[0];
        format!("{} extra, first {}/{}", extra.len(), a.names[u], a.names[v])
    });
    r.note(format!("{} unsolved pairs for {} variables and {} clauses", got.len(), a.variable_copies.len(), a.clause_copies.len()));
    Ok(r)
}

/// The vertices telling `T₁` from `T₂` are exactly `T₁, T₂, N₁, N₂, F` of the
/// same copy.
pub fn lemma_t1t2(a: &Assembly) -> Result<SuiteReport, VerifyError> {
    let mut r = SuiteReport::new("lemma_t1t2");
    for x in 0..a.variable_copies.len() {
        let copy = a.variable_copy(x);
        let (t1, t2) = (copy.vertex("T1").expect("interior"), copy.vertex("T2").expect("interior"));
        let d1 = bfs_distances(&a.graph, t1)?;
        let d2 = bfs_distances(&a.graph, t2)?;
        let got: BTreeSet<usize> = (0..a.vertex_count()).filter(|&s| d1[s] != d2[s]).collect();
        let want: BTreeSet<usize> = FOURTH_LANDMARK_GROUP.iter().map(|n| copy.vertex(n).expect("interior")).collect();
        r.check(format!("x{x} resolvers of T1/T2"), got == want, || {
            let names = |s: &BTreeSet<usize>| s.iter().map(|&v| a.names[v].clone()).collect::<Vec<_>>().join(" ");
            format!("got {{{}}}", names(&got))
        });
    }
    Ok(r)
}

/// Satisfiability of the shortened instance against resolving sets of size
/// `4·|X′|`, in both directions.
pub fn theorem_equivalence(original: &SatInstance, a: &Assembly, choice: PendantChoice) -> Result<SuiteReport, VerifyError> {
    let psi = &a.instance;
    let n = psi.variable_count();
    if n > MAX_EQUIVALENCE_VARIABLES {
        return Err(VerifyError::Precondition(format!("{n} variables after shortening exceed {MAX_EQUIVALENCE_VARIABLES}")));
    }
    let mut r = SuiteReport::new("theorem_equivalence");
    let forced = forced_landmarks(a, choice);
    let groups = fourth_landmark_groups(a);
    let mut sources: Vec<usize> = forced.set().vertices().to_vec();
    sources.extend(groups.iter().flatten().copied());
    let dm = distance_rows(&a.graph, &sources)?;

    let sat_original = brute_force_sat(original)?.is_some();
    let model = brute_force_sat(psi)?;
    r.check("shortening preserves satisfiability", sat_original == model.is_some(), || {
        format!("original {sat_original}, shortened {}", model.is_some())
    });

    let mut agree = true;
    let mut first_bad = String::new();
    let mut falsifying_w_unsolved = true;
    let w_pairs: Vec<(usize, usize)> = (0..a.clause_copies.len())
        .map(|c| {
            let copy = a.clause_copy(c);
            (copy.vertex("w1").expect("clause"), copy.vertex("w2").expect("clause"))
        })
        .collect();
    for code in 0..(1u64 << n) {
        let asg = TruthAssignment::from_code(n, code);
        let set = assignment_to_landmarks(a, &forced, &asg);
        let resolving = is_resolving(&dm, &set)? == Verdict::Resolving;
        let satisfied = psi.is_satisfied_by(&asg);
        if resolving != satisfied && agree {
            agree = false;
            first_bad = format!("assignment {code:0n$b}: satisfied {satisfied}, resolving {resolving}");
        }
        if !satisfied {
            let unsolved = unsolved_pairs(&dm, &set)?;
            if !w_pairs.iter().any(|p| unsolved.contains(p) || unsolved.contains(&(p.1, p.0))) {
                falsifying_w_unsolved = false;
            }
        }
    }
    r.check("assignment landmarks resolve exactly for models", agree, || first_bad.clone());
    r.check("every non-model leaves some w1/w2 unsolved", falsifying_w_unsolved, || "a falsifying set resolves all w pairs".into());

    let selection = restricted_min_resolving(&dm, &forced.set(), &groups)?;
    r.check("restricted search succeeds iff satisfiable", selection.is_some() == model.is_some(), || {
        format!("selection {}, satisfiable {}", selection.is_some(), model.is_some())
    });
    if let Some(sel) = &selection {
        r.check("selection has the budget size", sel.landmarks.len() == a.budget, || format!("{} landmarks", sel.landmarks.len()));
        let asg = landmarks_to_assignment(a, &forced, &sel.landmarks)?;
        r.check("extracted assignment satisfies the instance", psi.is_satisfied_by(&asg), || format!("{:?}", asg.0));
    }
    r.note(format!("|X'| = {n}, budget {}, {} vertices, pendant side {}", a.budget, a.vertex_count(), choice_name(choice)));
    Ok(r)
}

/// Maximum degree at most 6, pendants of degree 2, variable path interiors
/// of degree 2.
pub fn degree_check(a: &Assembly) -> SuiteReport {
    let mut r = SuiteReport::new("degree_check");
    let (argmax, deg) = a.graph.max_degree().unwrap_or((0, 0));
    r.check("max degree ≤ 6", deg <= 6, || format!("{} has degree {deg}", a.names[argmax]));
    r.note(format!("max degree {deg} at {}", a.names[argmax]));
    let mut pendant_ok = None;
    let mut path_ok = None;
    for x in 0..a.variable_copies.len() {
        let copy = a.variable_copy(x);
        let g = gadget(copy.kind);
        for (v, name) in g.names().iter().enumerate() {
            let d = a.graph.degree(copy.vertices[v]);
            let pendant = name.starts_with('a') || name.starts_with('b');
            let interior = name.split_once('_').is_some_and(|(_, j)| j.parse::<usize>().is_ok_and(|j| (1..14).contains(&j)));
            if pendant && d != 2 && pendant_ok.is_none() {
                pendant_ok = Some(format!("{} has degree {d}", a.names[copy.vertices[v]]));
            }
            if interior && d != 2 && path_ok.is_none() {
                path_ok = Some(format!("{} has degree {d}", a.names[copy.vertices[v]]));
            }
        }
    }
    r.check("pendants have degree 2", pendant_ok.is_none(), || pendant_ok.clone().unwrap_or_default());
    r.check("path interiors have degree 2", path_ok.is_none(), || path_ok.clone().unwrap_or_default());
    r
}

/// The assembled embedding is a Gabriel unit disk embedding with the
/// default margin.
pub fn gudg_check(a: &Assembly) -> SuiteReport {
    let mut r = SuiteReport::new("gudg_check");
    let report = is_gudg_embedding(&a.embedded(), DEFAULT_MARGIN);
    r.check("Gabriel unit disk embedding, margin 0.001", report.passed(), || {
        format!("{} violations, first {}", report.violations.len(), report.violations[0])
    });
    r.note(format!("{} vertices, {} edges", a.vertex_count(), a.graph.edge_count()));
    r
}

/// Every structural suite for one assembly under one pendant choice.
pub fn lemma_suites(a: &Assembly, choice: PendantChoice) -> Result<Vec<SuiteReport>, VerifyError> {
    let forced = forced_landmarks(a, choice);
    Ok(vec![lemma_min3(a)?, lemma_resolve_all(a, &forced)?, lemma_t1t2(a)?])
}

/// The exact solver agrees with exhaustive search on every graph.
pub fn solver_oracle(graphs: &[Graph]) -> Result<SuiteReport, VerifyError> {
    let mut r = SuiteReport::new("solver_oracle");
    for (k, g) in graphs.iter().enumerate() {
        let (want, _) = exhaustive_metric_dimension(g)?;
        let got = metric_dimension_exact(g, None)?;
        let ok = match &got {
            ExactOutcome::Optimal { k, set } => {
                let dm = geom_graph::distance_matrix(g);
                *k == want && set.len() == *k && is_resolving(&dm, set)? == Verdict::Resolving
            }
            ExactOutcome::ExceedsBound { .. } => false,
        };
        r.check(format!("graph {k} ({} vertices)", g.vertex_count()), ok, || format!("exhaustive {want}, exact {got:?}"));
    }
    Ok(r)
}

/// Shortening yields paths of length at most two, valid outputs and the same
/// satisfiability.
pub fn preprocessing(entries: &[(SatInstance, Drawing)]) -> Result<SuiteReport, VerifyError> {
    let mut r = SuiteReport::new("preprocessing");
    for (k, (psi, d)) in entries.iter().enumerate() {
        let (short, sd) = shorten_edge_paths(psi, d)?;
        r.check(format!("instance {k} path length"), sd.max_path_len() <= 2, || format!("max {}", sd.max_path_len()));
        let inst = validate_instance(&short);
        r.check(format!("instance {k} valid"), inst.passed(), || inst.violations[0].to_string());
        let draw = validate_drawing(&clause_variable_graph(&short).graph, &sd);
        r.check(format!("instance {k} drawing valid"), draw.passed(), || draw.violations[0].to_string());
        let (a, b) = (brute_force_sat(psi)?.is_some(), brute_force_sat(&short)?.is_some());
        r.check(format!("instance {k} satisfiability"), a == b, || format!("before {a}, after {b}"));
    }
    Ok(r)
}

/// The Gabriel subgraph keeps the cheapest `|uv|^α` paths of the unit disk
/// graph: stretch 1 for `α = 2`. The `α = 1` stretch is only reported.
pub fn spanner_property(point_sets: &[Vec<Point2>]) -> Result<SuiteReport, VerifyError> {
    let mut r = SuiteReport::new("spanner_property");
    let mut worst_one: f64 = 1.0;
    for (k, pts) in point_sets.iter().enumerate() {
        let udg = udg_from_points(pts)?;
        let sub = Graph::from_edges(pts.len(), gabriel_edges(&udg))?;
        let s2 = energy_stretch(&udg, &sub, Fixed::from_int(2))?;
        r.check(format!("point set {k} energy stretch"), (s2 - 1.0).abs() <= 1e-9, || format!("stretch {s2}"));
        worst_one = worst_one.max(energy_stretch(&udg, &sub, Fixed::ONE)?);
    }
    r.note(format!("largest distance stretch (alpha = 1): {worst_one:.6}"));
    Ok(r)
}

/// Landmark sets of the wrong shape are rejected.
pub fn landmark_shape_rejected(a: &Assembly, forced: &ForcedLandmarks) -> bool {
    landmarks_to_assignment(a, forced, &forced.set()).is_err()
        && landmarks_to_assignment(a, forced, &LandmarkSet::empty()).is_err()
}
