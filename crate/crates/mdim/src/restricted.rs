//! Shape-restricted resolving-set search.

use std::collections::HashMap;

use geom_graph::DistanceMatrix;

use crate::resolve::{classes, landmark_row, partition};
use crate::{LandmarkSet, MdimError};

/// A successful restricted search: one choice per group plus the resulting
/// landmark set (the forced vertices together with the choices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Selection {
    /// The vertex chosen from each group, in group order.
    pub choices: Vec<usize>,
    /// `forced ∪ choices`.
    pub landmarks: LandmarkSet,
}

/// Searches for one vertex per group such that the forced set together
/// with the chosen vertices is resolving.
///
/// Choices are enumerated lexicographically (first group varies slowest,
/// members in the given order) and the first success is returned. Only pairs
/// left unsolved by `forced` are tracked, and a branch is cut as soon as a
/// pair can no longer be resolved by any later group.
pub fn restricted_min_resolving(
    dm: &DistanceMatrix,
    forced: &LandmarkSet,
    groups: &[Vec<usize>],
) -> Result<Option<Selection>, MdimError> {
    let n = dm.vertex_count();
    forced.check_range(n)?;
    let mut owner: HashMap<usize, usize> = HashMap::new();
    for (gi, group) in groups.iter().enumerate() {
        for &v in group {
            if v >= n {
                return Err(MdimError::VertexOutOfRange { vertex: v, count: n });
            }
            if let Some(&first) = owner.get(&v) {
                return Err(MdimError::OverlappingGroups { first, second: gi, vertex: v });
            }
            owner.insert(v, gi);
        }
    }
    let labels = partition(dm, forced.vertices())?;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for class in classes(&labels) {
        for (i, &u) in class.iter().enumerate() {
            for &v in &class[i + 1..] {
                pairs.push((u, v));
            }
        }
    }
    let words = pairs.len().div_ceil(64);
    let mut masks: Vec<Vec<Vec<u64>>> = Vec::with_capacity(groups.len());
    for group in groups {
        let mut group_masks = Vec::with_capacity(group.len());
        for &c in group {
            let row = landmark_row(dm, c)?;
            let mut mask = vec![0u64; words];
            for (p, &(u, v)) in pairs.iter().enumerate() {
                if row[u] != row[v] {
                    mask[p / 64] |= 1 << (p % 64);
                }
            }
            group_masks.push(mask);
        }
        masks.push(group_masks);
    }
    // deadline[i]: pairs whose last chance of resolution is group i.
    let mut deadline: Vec<Vec<usize>> = vec![Vec::new(); groups.len()];
    for p in 0..pairs.len() {
        let last = (0..groups.len()).rev().find(|&gi| masks[gi].iter().any(|m| m[p / 64] >> (p % 64) & 1 == 1));
        match last {
            Some(gi) => deadline[gi].push(p),
            None => return Ok(None),
        }
    }
    let mut choice = Vec::with_capacity(groups.len());
    let found = descend(&masks, &deadline, 0, &vec![0u64; words], &mut choice);
    if !found {
        return Ok(None);
    }
    let choices: Vec<usize> = choice.iter().enumerate().map(|(gi, &k)| groups[gi][k]).collect();
    let landmarks = forced.union(&LandmarkSet::new(choices.iter().copied())?);
    Ok(Some(Selection { choices, landmarks }))
}

fn descend(
    masks: &[Vec<Vec<u64>>],
    deadline: &[Vec<usize>],
    depth: usize,
    resolved: &[u64],
    choice: &mut Vec<usize>,
) -> bool {
    if depth == masks.len() {
        return true;
    }
    for (k, mask) in masks[depth].iter().enumerate() {
        let next: Vec<u64> = resolved.iter().zip(mask).map(|(a, b)| a | b).collect();
        if deadline[depth].iter().any(|&p| next[p / 64] >> (p % 64) & 1 == 0) {
            continue;
        }
        choice.push(k);
        if descend(masks, deadline, depth + 1, &next, choice) {
            return true;
        }
        choice.pop();
    }
    false
}
