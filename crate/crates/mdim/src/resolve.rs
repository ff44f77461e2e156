//! Pair resolution, resolving-set checks and the greedy baseline.

use std::collections::HashMap;

use geom_graph::{Dist, DistanceMatrix};

use crate::{LandmarkSet, MdimError};

/// Whether a pair is resolved, and by which landmark.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Resolution {
    /// The smallest landmark with distinct distances to the two vertices.
    ResolvedBy(usize),
    /// No landmark distinguishes the two vertices.
    Unsolved,
}

/// A vertex pair together with its resolution status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResolutionWitness {
    /// Smaller vertex of the pair.
    pub u: usize,
    /// Larger vertex of the pair.
    pub v: usize,
    /// Resolution status under the queried landmark set.
    pub status: Resolution,
}

/// Result of [`is_resolving`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Every pair is resolved.
    Resolving,
    /// The lexicographically smallest unsolved pair, `u < v`.
    Unsolved { u: usize, v: usize },
}

fn check_vertex(dm: &DistanceMatrix, vertex: usize) -> Result<(), MdimError> {
    if vertex >= dm.vertex_count() {
        return Err(MdimError::VertexOutOfRange { vertex, count: dm.vertex_count() });
    }
    Ok(())
}

pub(crate) fn landmark_row(dm: &DistanceMatrix, s: usize) -> Result<&[Dist], MdimError> {
    check_vertex(dm, s)?;
    dm.row(s).ok_or(MdimError::MissingRow(s))
}

/// Whether `s` resolves `(u, v)`, i.e. `d(u, s) ≠ d(v, s)`.
pub fn resolves(dm: &DistanceMatrix, s: usize, u: usize, v: usize) -> Result<bool, MdimError> {
    for vertex in [s, u, v] {
        check_vertex(dm, vertex)?;
    }
    let du = dm.get(u, s).ok_or(MdimError::MissingRow(s))?;
    let dv = dm.get(v, s).ok_or(MdimError::MissingRow(s))?;
    Ok(du != dv)
}

/// Refines the vertex set by distance vectors to `landmarks`; returns one
/// class label per vertex. Labels are dense and assigned in order of first
/// appearance, so the partition is deterministic.
pub(crate) fn partition(dm: &DistanceMatrix, landmarks: &[usize]) -> Result<Vec<usize>, MdimError> {
    let n = dm.vertex_count();
    let mut labels = vec![0usize; n];
    for &s in landmarks {
        let row = landmark_row(dm, s)?;
        let mut relabel: HashMap<(usize, Dist), usize> = HashMap::new();
        for v in 0..n {
            let next = relabel.len();
            labels[v] = *relabel.entry((labels[v], row[v])).or_insert(next);
        }
    }
    Ok(labels)
}

/// Groups of at least two vertices sharing a class label, each ascending,
/// ordered by smallest member.
pub(crate) fn classes(labels: &[usize]) -> Vec<Vec<usize>> {
    let count = labels.iter().copied().max().map_or(0, |m| m + 1);
    let mut groups = vec![Vec::new(); count];
    for (v, &c) in labels.iter().enumerate() {
        groups[c].push(v);
    }
    let mut out: Vec<Vec<usize>> = groups.into_iter().filter(|g| g.len() > 1).collect();
    out.sort_unstable_by_key(|g| g[0]);
    out
}

/// Checks whether `landmarks` resolves every vertex pair; otherwise reports
/// the lexicographically smallest unsolved pair.
pub fn is_resolving(dm: &DistanceMatrix, landmarks: &LandmarkSet) -> Result<Verdict, MdimError> {
    landmarks.check_range(dm.vertex_count())?;
    let labels = partition(dm, landmarks.vertices())?;
    Ok(match classes(&labels).first() {
        Some(class) => Verdict::Unsolved { u: class[0], v: class[1] },
        None => Verdict::Resolving,
    })
}

/// Every pair `(u, v)`, `u < v`, not resolved by `landmarks`, ascending.
pub fn unsolved_pairs(dm: &DistanceMatrix, landmarks: &LandmarkSet) -> Result<Vec<(usize, usize)>, MdimError> {
    landmarks.check_range(dm.vertex_count())?;
    let labels = partition(dm, landmarks.vertices())?;
    let mut pairs = Vec::new();
    for class in classes(&labels) {
        for (i, &u) in class.iter().enumerate() {
            for &v in &class[i + 1..] {
                pairs.push((u, v));
            }
        }
    }
    pairs.sort_unstable();
    Ok(pairs)
}

/// The resolution status of one pair under `landmarks`.
pub fn resolution_witness(
    dm: &DistanceMatrix,
    landmarks: &LandmarkSet,
    u: usize,
    v: usize,
) -> Result<ResolutionWitness, MdimError> {
    let (u, v) = (u.min(v), u.max(v));
    for &s in landmarks.vertices() {
        if resolves(dm, s, u, v)? {
            return Ok(ResolutionWitness { u, v, status: Resolution::ResolvedBy(s) });
        }
    }
    check_vertex(dm, u)?;
    check_vertex(dm, v)?;
    Ok(ResolutionWitness { u, v, status: Resolution::Unsolved })
}

fn pairs_in(size: usize) -> usize {
    size * size.saturating_sub(1) / 2
}

/// Greedy baseline: repeatedly adds the vertex resolving the most currently
/// unsolved pairs, ties broken by smallest id. Needs a row for every vertex.
pub fn greedy_resolving(dm: &DistanceMatrix) -> Result<LandmarkSet, MdimError> {
    let n = dm.vertex_count();
    let rows: Vec<&[Dist]> = (0..n).map(|v| landmark_row(dm, v)).collect::<Result<_, _>>()?;
    let mut chosen: Vec<usize> = Vec::new();
    let mut labels = vec![0usize; n];
    loop {
        let groups = classes(&labels);
        if groups.is_empty() {
            break;
        }
        let mut best: Option<(usize, usize)> = None;
        for (candidate, row) in rows.iter().enumerate() {
            if chosen.contains(&candidate) {
                continue;
            }
            let mut gain = 0;
            for group in &groups {
                let mut parts: HashMap<Dist, usize> = HashMap::new();
                for &v in group {
                    *parts.entry(row[v]).or_default() += 1;
                }
                gain += pairs_in(group.len()) - parts.values().map(|&c| pairs_in(c)).sum::<usize>();
            }
            if best.is_none_or(|(_, g)| gain > g) {
                best = Some((candidate, gain));
            }
        }
        let (pick, _) = best.expect("an unsolved pair is resolved by either of its own vertices");
        chosen.push(pick);
        labels = partition(dm, &chosen)?;
    }
    LandmarkSet::new(chosen)
}
