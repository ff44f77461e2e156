//! Rectilinear regions occupied by tiles: the square and the six polygons of
//! three squares used by edge-tile triples.

use std::fmt;

use geom_graph::{Fixed, Point2, SCALE};

/// Half the side of a tile square, in units.
pub const HALF_SIDE: i64 = 6;
/// Side of a tile square, in units.
pub const TILE_SIDE: i64 = 12;

/// One side of a square (or one open end of a polygon), listed clockwise
/// starting from the top.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Top,
    Right,
    Bottom,
    Left,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::Top, Side::Right, Side::Bottom, Side::Left];

    /// Position in the clockwise enumeration.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Side {
        Side::ALL[i % 4]
    }

    pub fn opposite(self) -> Side {
        Side::from_index(self.index() + 2)
    }

    /// Unit step pointing out of the square through this side (y-up).
    pub fn outward(self) -> (i64, i64) {
        match self {
            Side::Top => (0, 1),
            Side::Right => (1, 0),
            Side::Bottom => (0, -1),
            Side::Left => (-1, 0),
        }
    }

    /// The side whose outward step is `(dx, dy)`.
    pub fn from_step(dx: i64, dy: i64) -> Option<Side> {
        Side::ALL.into_iter().find(|s| s.outward() == (dx.signum(), dy.signum()) && (dx == 0 || dy == 0))
    }

    /// The side of a boundary point: left or right when `|x| > |y|`, top or
    /// bottom otherwise.
    pub fn of_point(p: Point2) -> Side {
        let (x, y) = (p.x.raw(), p.y.raw());
        if x.abs() > y.abs() {
            if x > 0 {
                Side::Right
            } else {
                Side::Left
            }
        } else if y > 0 {
            Side::Top
        } else {
            Side::Bottom
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Top => "top",
            Side::Right => "right",
            Side::Bottom => "bottom",
            Side::Left => "left",
        })
    }
}

/// The region of a tile or tile triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Region {
    /// `[-6,6]²`.
    Square,
    /// Horizontal bar `[-18,18]×[-6,6]`.
    P1,
    /// Vertical bar `[-6,6]×[-18,18]`.
    P2,
    /// L-shape open to the left and to the bottom.
    P3,
    /// L-shape open to the left and to the top.
    P4,
    /// L-shape open to the bottom and to the right.
    P5,
    /// L-shape open to the top and to the right.
    P6,
}

impl Region {
    pub const ALL: [Region; 7] =
        [Region::Square, Region::P1, Region::P2, Region::P3, Region::P4, Region::P5, Region::P6];

    /// Polygon corners in units, counter-clockwise or clockwise.
    pub fn corners(self) -> Vec<(i64, i64)> {
        match self {
            Region::Square => vec![(-6, -6), (6, -6), (6, 6), (-6, 6)],
            Region::P1 => vec![(-18, -6), (18, -6), (18, 6), (-18, 6)],
            Region::P2 => vec![(-6, -18), (6, -18), (6, 18), (-6, 18)],
            Region::P3 => vec![(-18, 6), (6, 6), (6, -18), (-6, -18), (-6, -6), (-18, -6)],
            Region::P4 => vec![(-18, -6), (6, -6), (6, 18), (-6, 18), (-6, 6), (-18, 6)],
            Region::P5 => vec![(-6, 6), (18, 6), (18, -6), (6, -6), (6, -18), (-6, -18)],
            Region::P6 => vec![(-6, -6), (18, -6), (18, 6), (6, 6), (6, 18), (-6, 18)],
        }
    }

    /// The two sides through which a triple connects, or all four for the
    /// square.
    pub fn open_sides(self) -> Vec<Side> {
        match self {
            Region::Square => Side::ALL.to_vec(),
            Region::P1 => vec![Side::Left, Side::Right],
            Region::P2 => vec![Side::Top, Side::Bottom],
            Region::P3 => vec![Side::Left, Side::Bottom],
            Region::P4 => vec![Side::Left, Side::Top],
            Region::P5 => vec![Side::Bottom, Side::Right],
            Region::P6 => vec![Side::Top, Side::Right],
        }
    }

    /// The triple region with the given two open sides.
    pub fn triple_with_sides(a: Side, b: Side) -> Option<Region> {
        Region::ALL[1..].iter().copied().find(|r| {
            let s = r.open_sides();
            (s[0] == a && s[1] == b) || (s[0] == b && s[1] == a)
        })
    }

    /// Distance in units from the region's center to its slot line on `side`.
    pub fn reach(self, side: Side) -> i64 {
        if self == Region::Square {
            HALF_SIDE
        } else if self.open_sides().contains(&side) {
            3 * HALF_SIDE
        } else {
            HALF_SIDE
        }
    }

    /// The two slot positions on `side`, in units, or `None` when the side
    /// carries no slots.
    pub fn slots(self, side: Side) -> Option<[(i64, i64); 2]> {
        if !self.open_sides().contains(&side) {
            return None;
        }
        let r = self.reach(side);
        Some(match side {
            Side::Top => [(-1, r), (1, r)],
            Side::Right => [(r, 1), (r, -1)],
            Side::Bottom => [(1, -r), (-1, -r)],
            Side::Left => [(-r, -1), (-r, 1)],
        })
    }

    /// The side whose slots contain `p`.
    pub fn slot_side(self, p: Point2) -> Option<Side> {
        if p.x.raw() % SCALE != 0 || p.y.raw() % SCALE != 0 {
            return None;
        }
        let q = (p.x.raw() / SCALE, p.y.raw() / SCALE);
        self.open_sides().into_iter().find(|&s| self.slots(s).is_some_and(|sl| sl.contains(&q)))
    }

    /// Whether `p` lies strictly inside the polygon.
    pub fn contains_strictly(self, p: Point2) -> bool {
        let (px, py) = (p.x.raw(), p.y.raw());
        let corners: Vec<(i64, i64)> = self.corners().into_iter().map(|(x, y)| (x * SCALE, y * SCALE)).collect();
        let mut inside = false;
        for k in 0..corners.len() {
            let (a, b) = (corners[k], corners[(k + 1) % corners.len()]);
            if segment_dist2(p, a, b) == 0 {
                return false;
            }
            // Vertical edges only matter for a horizontal ray to the right.
            if a.0 == b.0 && a.0 > px {
                let (lo, hi) = (a.1.min(b.1), a.1.max(b.1));
                if lo <= py && py < hi {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// Squared distance (scaled by `SCALE²`) from `p` to the polygon boundary.
    pub fn boundary_dist2(self, p: Point2) -> i128 {
        let corners: Vec<(i64, i64)> = self.corners().into_iter().map(|(x, y)| (x * SCALE, y * SCALE)).collect();
        (0..corners.len())
            .map(|k| segment_dist2(p, corners[k], corners[(k + 1) % corners.len()]))
            .min()
            .expect("polygons have corners")
    }

    /// Whether `p` is inside the polygon at distance at least `clearance`
    /// from its boundary.
    pub fn contains_with_clearance(self, p: Point2, clearance: Fixed) -> bool {
        let c = i128::from(clearance.raw());
        self.contains_strictly(p) && self.boundary_dist2(p) >= c * c
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Region::Square => "square",
            Region::P1 => "P1",
            Region::P2 => "P2",
            Region::P3 => "P3",
            Region::P4 => "P4",
            Region::P5 => "P5",
            Region::P6 => "P6",
        })
    }
}

/// Squared distance from `p` to an axis-parallel segment `ab`, all scaled.
fn segment_dist2(p: Point2, a: (i64, i64), b: (i64, i64)) -> i128 {
    let (px, py) = (p.x.raw(), p.y.raw());
    let cx = px.clamp(a.0.min(b.0), a.0.max(b.0));
    let cy = py.clamp(a.1.min(b.1), a.1.max(b.1));
    let (dx, dy) = (i128::from(px - cx), i128::from(py - cy));
    dx * dx + dy * dy
}

impl Region {
    /// The region covered after applying `op` to every point.
    pub fn transformed(self, op: crate::Transform) -> Region {
        let mut mapped: Vec<(i64, i64)> = self.corners().into_iter().map(|c| op.apply_units(c)).collect();
        mapped.sort_unstable();
        Region::ALL
            .into_iter()
            .find(|r| {
                let mut c = r.corners();
                c.sort_unstable();
                c == mapped
            })
            .expect("the region family is closed under the square's symmetries")
    }
}
