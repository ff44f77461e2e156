//! Validity check for planar orthogonal grid drawings.

use std::collections::HashMap;
use std::fmt;

use crate::{DiGraph, Drawing, GridPoint};

/// One reason a drawing is invalid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DrawingViolation {
    /// The placement does not have one point per vertex.
    PlacementCount { expected: usize, found: usize },
    /// Two vertices share a grid point.
    SharedPlacement { u: usize, v: usize, point: GridPoint },
    /// An arc has no stored path.
    MissingPath { u: usize, v: usize },
    /// A stored path belongs to no arc.
    UnknownPath { u: usize, v: usize },
    /// A path has fewer than two points.
    TooShort { u: usize, v: usize },
    /// A path does not start at `ρ(u)` or does not end at `ρ(v)`.
    WrongEndpoint { u: usize, v: usize },
    /// Points `index` and `index + 1` are not grid neighbours.
    NonUnitStep { u: usize, v: usize, index: usize },
    /// A path visits a point twice.
    RepeatedPoint { u: usize, v: usize, point: GridPoint },
    /// A path passes through the placement of a vertex other than its ends.
    ThroughVertex { u: usize, v: usize, vertex: usize },
    /// Two paths meet somewhere other than a shared endpoint placement.
    Crossing { first: (usize, usize), second: (usize, usize), point: GridPoint },
}

impl fmt::Display for DrawingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DrawingViolation::PlacementCount { expected, found } => {
                write!(f, "placement has {found} points for {expected} vertices")
            }
            DrawingViolation::SharedPlacement { u, v, point } => write!(f, "vertices {u} and {v} both placed at {point}"),
            DrawingViolation::MissingPath { u, v } => write!(f, "arc ({u}, {v}) has no path"),
            DrawingViolation::UnknownPath { u, v } => write!(f, "path ({u}, {v}) belongs to no arc"),
            DrawingViolation::TooShort { u, v } => write!(f, "path ({u}, {v}) has fewer than two points"),
            DrawingViolation::WrongEndpoint { u, v } => write!(f, "path ({u}, {v}) does not join its endpoints"),
            DrawingViolation::NonUnitStep { u, v, index } => {
                write!(f, "path ({u}, {v}) step {index} is not a unit grid step")
            }
            DrawingViolation::RepeatedPoint { u, v, point } => write!(f, "path ({u}, {v}) visits {point} twice"),
            DrawingViolation::ThroughVertex { u, v, vertex } => {
                write!(f, "path ({u}, {v}) passes through vertex {vertex}")
            }
            DrawingViolation::Crossing { first, second, point } => {
                write!(f, "paths {first:?} and {second:?} meet at {point}")
            }
        }
    }
}

/// Every violation found, in a deterministic order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<DrawingViolation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks placement injectivity, the shape of every path and that distinct
/// paths share no point except the placement of a common endpoint.
pub fn validate_drawing(g: &DiGraph, d: &Drawing) -> ValidationReport {
    let mut violations = Vec::new();
    let n = g.vertex_count();
    if d.placement.len() != n {
        violations.push(DrawingViolation::PlacementCount { expected: n, found: d.placement.len() });
        return ValidationReport { violations };
    }
    let mut vertex_at: HashMap<GridPoint, usize> = HashMap::new();
    for (v, &p) in d.placement.iter().enumerate() {
        if let Some(&u) = vertex_at.get(&p) {
            violations.push(DrawingViolation::SharedPlacement { u, v, point: p });
        } else {
            vertex_at.insert(p, v);
        }
    }
    for &(u, v) in g.arcs() {
        if !d.paths.contains_key(&(u, v)) {
            violations.push(DrawingViolation::MissingPath { u, v });
        }
    }
    let arcs: std::collections::HashSet<(usize, usize)> = g.arcs().iter().copied().collect();
    let mut owner: HashMap<GridPoint, (usize, usize)> = HashMap::new();
    for (&(u, v), path) in &d.paths {
        if !arcs.contains(&(u, v)) {
            violations.push(DrawingViolation::UnknownPath { u, v });
            continue;
        }
        let pts = &path.points;
        if pts.len() < 2 {
            violations.push(DrawingViolation::TooShort { u, v });
            continue;
        }
        if pts[0] != d.placement[u] || pts[pts.len() - 1] != d.placement[v] {
            violations.push(DrawingViolation::WrongEndpoint { u, v });
        }
        for (index, w) in pts.windows(2).enumerate() {
            if w[0].manhattan(w[1]) != 1 {
                violations.push(DrawingViolation::NonUnitStep { u, v, index });
            }
        }
        let mut seen = std::collections::HashSet::new();
        for (i, &p) in pts.iter().enumerate() {
            if !seen.insert(p) {
                violations.push(DrawingViolation::RepeatedPoint { u, v, point: p });
                continue;
            }
            let is_end = i == 0 || i == pts.len() - 1;
            if is_end {
                continue;
            }
            if let Some(&vertex) = vertex_at.get(&p) {
                violations.push(DrawingViolation::ThroughVertex { u, v, vertex });
            }
            if let Some(&first) = owner.get(&p) {
                violations.push(DrawingViolation::Crossing { first, second: (u, v), point: p });
            } else {
                owner.insert(p, (u, v));
            }
        }
    }
    ValidationReport { violations }
}
