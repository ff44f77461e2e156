//! Rigid point maps on tiles and vertex relabelings of the edge gadget.

use std::fmt;

use geom_graph::Point2;

/// A rotation or reflection of the plane about the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Transform {
    /// `(x, y) ↦ (−y, x)`.
    Rot90,
    /// `(x, y) ↦ (−x, −y)`.
    Rot180,
    /// `(x, y) ↦ (y, −x)`.
    Rot270,
    /// `(x, y) ↦ (−x, y)`.
    MirrorH,
    /// `(x, y) ↦ (x, −y)`.
    MirrorV,
}

impl Transform {
    pub const ALL: [Transform; 5] =
        [Transform::Rot90, Transform::Rot180, Transform::Rot270, Transform::MirrorH, Transform::MirrorV];

    pub fn apply(self, p: Point2) -> Point2 {
        let Point2 { x, y } = p;
        match self {
            Transform::Rot90 => Point2::new(-y, x),
            Transform::Rot180 => Point2::new(-x, -y),
            Transform::Rot270 => Point2::new(y, -x),
            Transform::MirrorH => Point2::new(-x, y),
            Transform::MirrorV => Point2::new(x, -y),
        }
    }

    /// Applies the map to integer unit coordinates.
    pub fn apply_units(self, (x, y): (i64, i64)) -> (i64, i64) {
        match self {
            Transform::Rot90 => (-y, x),
            Transform::Rot180 => (-x, -y),
            Transform::Rot270 => (y, -x),
            Transform::MirrorH => (-x, y),
            Transform::MirrorV => (x, -y),
        }
    }

    /// Whether the map reverses clockwise order.
    pub fn is_reflection(self) -> bool {
        matches!(self, Transform::MirrorH | Transform::MirrorV)
    }

    /// The map undoing this one.
    pub fn inverse(self) -> Transform {
        match self {
            Transform::Rot90 => Transform::Rot270,
            Transform::Rot270 => Transform::Rot90,
            other => other,
        }
    }

    /// The eight symmetries of the square as transform sequences, starting
    /// with the identity.
    pub fn dihedral() -> [&'static [Transform]; 8] {
        [
            &[],
            &[Transform::Rot90],
            &[Transform::Rot180],
            &[Transform::Rot270],
            &[Transform::MirrorH],
            &[Transform::MirrorH, Transform::Rot90],
            &[Transform::MirrorH, Transform::Rot180],
            &[Transform::MirrorH, Transform::Rot270],
        ]
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Transform::Rot90 => "rot90",
            Transform::Rot180 => "rot180",
            Transform::Rot270 => "rot270",
            Transform::MirrorH => "mirrorH",
            Transform::MirrorV => "mirrorV",
        })
    }
}

impl std::str::FromStr for Transform {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Transform::ALL.into_iter().find(|t| t.to_string() == s).ok_or_else(|| format!("unknown transform {s:?}"))
    }
}

/// An automorphism of the edge gadget that moves the embedding between
/// vertices: reversing both paths and exchanging the t- and f-paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relabel {
    /// `t_k ↔ t_{38−k}` and `f_k ↔ f_{38−k}`.
    Reverse,
    /// `t_k ↔ f_k`.
    SwapTf,
}

impl Relabel {
    /// The four relabelings generated by the two involutions.
    pub fn all_combinations() -> [&'static [Relabel]; 4] {
        [&[], &[Relabel::Reverse], &[Relabel::SwapTf], &[Relabel::Reverse, Relabel::SwapTf]]
    }
}

impl fmt::Display for Relabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relabel::Reverse => "reverse",
            Relabel::SwapTf => "swapTF",
        })
    }
}
