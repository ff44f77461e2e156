//! How an edge path leaves its source and enters its target.

use std::fmt;

use crate::{DrawError, EdgePath};

/// Which end of a path is inspected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum End {
    Source,
    Target,
}

/// Direction class of a path end. Source ends use the `From*` variants and
/// target ends the `To*` variants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    FromLeft,
    FromRight,
    FromTop,
    FromBottom,
    ToLeft,
    ToRight,
    ToTop,
    ToBottom,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Direction::FromLeft => "from-left",
            Direction::FromRight => "from-right",
            Direction::FromTop => "from-top",
            Direction::FromBottom => "from-bottom",
            Direction::ToLeft => "to-left",
            Direction::ToRight => "to-right",
            Direction::ToTop => "to-top",
            Direction::ToBottom => "to-bottom",
        };
        f.write_str(name)
    }
}

/// Classifies the first step (source end) or the last step (target end).
///
/// Source end with first step `p₁ → p₂`: `x₂ > x₁` is from-left, `x₂ < x₁`
/// from-right, `y₂ < y₁` from-top, `y₂ > y₁` from-bottom. Target end with
/// last step `pₙ₋₁ → pₙ`: `xₙ < xₙ₋₁` is to-left, `xₙ > xₙ₋₁` to-right,
/// `yₙ > yₙ₋₁` to-top, `yₙ < yₙ₋₁` to-bottom.
pub fn edge_direction(path: &EdgePath, end: End) -> Result<Direction, DrawError> {
    let p = &path.points;
    if p.len() < 2 {
        return Err(DrawError::EmptyPath);
    }
    Ok(match end {
        End::Source => {
            let (a, b) = (p[0], p[1]);
            if b.x > a.x {
                Direction::FromLeft
            } else if b.x < a.x {
                Direction::FromRight
            } else if b.y < a.y {
                Direction::FromTop
            } else {
                Direction::FromBottom
            }
        }
        End::Target => {
            let (a, b) = (p[p.len() - 2], p[p.len() - 1]);
            if b.x < a.x {
                Direction::ToLeft
            } else if b.x > a.x {
                Direction::ToRight
            } else if b.y > a.y {
                Direction::ToTop
            } else {
                Direction::ToBottom
            }
        }
    })
}
