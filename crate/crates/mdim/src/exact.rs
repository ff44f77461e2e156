//! Exact metric dimension for small connected graphs.

use std::collections::HashSet;

use geom_graph::{distance_matrix, Dist, DistanceMatrix, Graph};

use crate::resolve::{classes, partition};
use crate::{LandmarkSet, MdimError};

/// Result of [`metric_dimension_exact`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactOutcome {
    /// The metric dimension and the lexicographically smallest optimal set.
    Optimal { k: usize, set: LandmarkSet },
    /// Every resolving set is larger than the supplied bound.
    ExceedsBound { bound: usize },
}

/// Classes of mutual twins: `u` and `v` are twins when
/// `d(u, w) = d(v, w)` for every `w ∉ {u, v}`. Classes of size one are
/// omitted. Needs a complete matrix.
pub fn twin_classes(dm: &DistanceMatrix) -> Result<Vec<Vec<usize>>, MdimError> {
    let n = dm.vertex_count();
    let rows: Vec<&[Dist]> = (0..n).map(|v| dm.row(v).ok_or(MdimError::MissingRow(v))).collect::<Result<_, _>>()?;
    let twins = |u: usize, v: usize| (0..n).all(|w| w == u || w == v || rows[u][w] == rows[v][w]);
    let mut class_of = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for u in 0..n {
        if class_of[u] != usize::MAX {
            continue;
        }
        let mut class = vec![u];
        class.extend(((u + 1)..n).filter(|&v| class_of[v] == usize::MAX && twins(u, v)));
        if class.len() > 1 {
            for &v in &class {
                class_of[v] = out.len();
            }
            out.push(class);
        }
    }
    Ok(out)
}

struct Search<'a> {
    dm: &'a DistanceMatrix,
    rows: Vec<&'a [Dist]>,
    twins: Vec<Vec<usize>>,
    order: Vec<usize>,
}

impl<'a> Search<'a> {
    fn first_unsolved(&self, chosen: &[usize]) -> Option<(usize, usize)> {
        let labels = partition(self.dm, chosen).expect("complete matrix");
        classes(&labels).first().map(|c| (c[0], c[1]))
    }

    /// Landmarks still needed by twin classes alone.
    fn twin_deficit(&self, chosen: &[usize]) -> usize {
        self.twins
            .iter()
            .map(|t| (t.len() - 1).saturating_sub(t.iter().filter(|v| chosen.contains(v)).count()))
            .sum()
    }

    /// Whether `chosen` extends to a resolving set with at most `budget`
    /// further vertices. Branches on the resolvers of the first unsolved pair.
    fn feasible(&self, chosen: &mut Vec<usize>, budget: usize, seen: &mut HashSet<Vec<usize>>) -> bool {
        let Some((u, v)) = self.first_unsolved(chosen) else { return true };
        if budget == 0 || self.twin_deficit(chosen) > budget {
            return false;
        }
        let mut key = chosen.clone();
        key.sort_unstable();
        if !seen.insert(key) {
            return false;
        }
        for &s in &self.order {
            if chosen.contains(&s) || self.rows[s][u] == self.rows[s][v] {
                continue;
            }
            chosen.push(s);
            let found = self.feasible(chosen, budget - 1, seen);
            chosen.pop();
            if found {
                return true;
            }
        }
        false
    }

    /// The lexicographically smallest resolving set of exactly `size`
    /// vertices extending `chosen` with vertices `>= start`.
    fn lex_first(&self, chosen: &mut Vec<usize>, start: usize, size: usize) -> bool {
        let n = self.rows.len();
        let remaining = size - chosen.len();
        let unsolved = self.first_unsolved(chosen);
        if remaining == 0 {
            return unsolved.is_none();
        }
        if self.twin_deficit(chosen) > remaining {
            return false;
        }
        for t in &self.twins {
            let kept = t.iter().filter(|&&v| chosen.contains(&v) || v >= start).count();
            if kept + 1 < t.len() {
                return false;
            }
        }
        if let Some((u, v)) = unsolved {
            if !(start..n).any(|s| self.rows[s][u] != self.rows[s][v]) {
                return false;
            }
        }
        for s in start..=(n - remaining) {
            chosen.push(s);
            let found = self.lex_first(chosen, s + 1, size);
            if found {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// Minimum resolving set of a connected graph.
///
/// Twin classes give a lower bound and prune the search: a resolving set
/// contains all but at most one vertex of each class. The size is found by
/// iterative deepening with branching on the resolvers of the first unsolved
/// pair, candidates ordered by their number of distinct distances; the
/// reported set is then the lexicographically smallest of that size.
///
/// With `upper_bound = Some(b)` the search stops once every size up to `b`
/// is ruled out.
pub fn metric_dimension_exact(g: &Graph, upper_bound: Option<usize>) -> Result<ExactOutcome, MdimError> {
    let n = g.vertex_count();
    if let Some(v) = g.component_labels().iter().position(|&c| c != 0) {
        return Err(MdimError::Disconnected(v));
    }
    if n <= 1 {
        return Ok(ExactOutcome::Optimal { k: 0, set: LandmarkSet::empty() });
    }
    let dm = distance_matrix(g);
    let rows: Vec<&[Dist]> = (0..n).map(|v| dm.row(v).expect("complete matrix")).collect();
    let twins = twin_classes(&dm)?;
    let mut order: Vec<usize> = (0..n).collect();
    let distinct = |v: usize| rows[v].iter().collect::<HashSet<_>>().len();
    order.sort_by_key(|&v| (std::cmp::Reverse(distinct(v)), v));
    let search = Search { dm: &dm, rows, twins, order };
    let lower = search.twin_deficit(&[]).max(1);
    for k in lower..=n {
        if upper_bound.is_some_and(|b| k > b) {
            return Ok(ExactOutcome::ExceedsBound { bound: upper_bound.unwrap_or_default() });
        }
        if search.feasible(&mut Vec::new(), k, &mut HashSet::new()) {
            let mut set = Vec::new();
            let found = search.lex_first(&mut set, 0, k);
            debug_assert!(found, "a feasible size has a lexicographically first witness");
            return Ok(ExactOutcome::Optimal { k, set: LandmarkSet::new(set)? });
        }
    }
    unreachable!("the full vertex set resolves every pair")
}

/// Exhaustive reference solver: tries all subsets by increasing size in
/// lexicographic order. Exponential; meant for graphs of a dozen vertices.
pub fn exhaustive_metric_dimension(g: &Graph) -> Result<(usize, LandmarkSet), MdimError> {
    let n = g.vertex_count();
    let dm = distance_matrix(g);
    for k in 0..=n {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            let labels = partition(&dm, &combo)?;
            if classes(&labels).is_empty() {
                return Ok((k, LandmarkSet::new(combo)?));
            }
            let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else { break };
            combo[i] += 1;
            for j in (i + 1)..k {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    unreachable!("the full vertex set resolves every pair")
}
