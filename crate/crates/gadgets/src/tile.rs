//! Tiles: a gadget together with an embedding into a region.

use std::fmt;

use geom_graph::{is_gudg_embedding, EmbeddedGraph, Fixed, GudgViolation, Point2, DEFAULT_MARGIN};

use crate::connection::{ConnectionVector, Entry, Orientation, TileType};
use crate::gadget::{gadget, Gadget, GadgetKind, TfPair};
use crate::region::{Region, Side};
use crate::transform::{Relabel, Transform};
use crate::GadgetError;

/// A gadget embedded in a square or in a triple polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tile {
    pub kind: GadgetKind,
    pub region: Region,
    /// Identifies the tile: the data file stem followed by any derivation
    /// steps, e.g. `var_top_bottom_left-mirrorH-rot90`.
    pub variant: String,
    points: Vec<Point2>,
}

/// One way a tile can fail to be valid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TileViolation {
    /// A pair vertex is not on a slot of the region.
    OffSlot { pair: usize, vertex: usize },
    /// The t- and f-vertex of a pair lie on different sides.
    SplitPair { pair: usize },
    /// Two pairs share a side.
    SharedSide { side: Side },
    /// A side that should carry a pair carries none.
    UnusedSide { side: Side },
    /// A vertex outside every pair is closer than one unit to the boundary
    /// or outside the region.
    Clearance { vertex: usize },
    /// The embedding is not a Gabriel unit disk embedding of the gadget.
    Gudg(GudgViolation),
}

impl fmt::Display for TileViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TileViolation::OffSlot { pair, vertex } => write!(f, "pair {pair}: vertex {vertex} is not on a slot"),
            TileViolation::SplitPair { pair } => write!(f, "pair {pair} spans two sides"),
            TileViolation::SharedSide { side } => write!(f, "two pairs on the {side} side"),
            TileViolation::UnusedSide { side } => write!(f, "open {side} side carries no pair"),
            TileViolation::Clearance { vertex } => write!(f, "vertex {vertex} too close to the region boundary"),
            TileViolation::Gudg(v) => v.fmt(f),
        }
    }
}

impl Tile {
    /// Builds a tile from coordinates listed in gadget vertex order.
    pub fn new(kind: GadgetKind, region: Region, variant: impl Into<String>, points: Vec<Point2>) -> Result<Tile, GadgetError> {
        let expected = gadget(kind).vertex_count();
        if points.len() != expected {
            return Err(GadgetError::PointCount { expected, found: points.len() });
        }
        Ok(Tile { kind, region, variant: variant.into(), points })
    }

    /// Reads `<label> <x> <y>` lines, one per gadget vertex in any order.
    /// Blank lines and `#` comments are skipped.
    pub fn parse(kind: GadgetKind, region: Region, variant: impl Into<String>, text: &str) -> Result<Tile, GadgetError> {
        let g = gadget(kind);
        let mut points: Vec<Option<Point2>> = vec![None; g.vertex_count()];
        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = content.split_whitespace().collect();
            let [label, x, y] = tokens[..] else {
                return Err(GadgetError::Parse { line, message: "expected `<label> <x> <y>`".into() });
            };
            let v = g.id(label).ok_or_else(|| GadgetError::UnknownLabel { kind, label: label.into() })?;
            let p = Point2::parse(x, y).map_err(|e| GadgetError::Parse { line, message: e.to_string() })?;
            if points[v].replace(p).is_some() {
                return Err(GadgetError::DuplicateLabel { label: label.into() });
            }
        }
        let points = points
            .into_iter()
            .enumerate()
            .map(|(v, p)| p.ok_or_else(|| GadgetError::MissingLabel { label: g.name(v).to_string() }))
            .collect::<Result<Vec<_>, _>>()?;
        Tile::new(kind, region, variant, points)
    }

    pub fn gadget(&self) -> &'static Gadget {
        gadget(self.kind)
    }

    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    pub fn point(&self, v: usize) -> Point2 {
        self.points[v]
    }

    /// The position of the named vertex.
    pub fn point_of(&self, name: &str) -> Option<Point2> {
        self.gadget().id(name).map(|v| self.points[v])
    }

    /// The gadget graph with this embedding.
    pub fn embedding(&self) -> EmbeddedGraph {
        EmbeddedGraph::new(self.gadget().graph.clone(), self.points.clone()).expect("point count matches the gadget")
    }

    /// The tile restricted to the vertices of a smaller gadget, matched by
    /// label.
    pub fn restricted(&self, kind: GadgetKind, suffix: &str) -> Result<Tile, GadgetError> {
        let from = self.gadget();
        let to = gadget(kind);
        let points = to
            .names()
            .iter()
            .map(|n| from.id(n).map(|v| self.points[v]).ok_or_else(|| GadgetError::MissingLabel { label: n.clone() }))
            .collect::<Result<Vec<_>, _>>()?;
        Tile::new(kind, self.region, format!("{}-{suffix}", self.variant), points)
    }

    /// Applies `op` to every coordinate and to the region.
    pub fn transformed(&self, op: Transform) -> Tile {
        Tile {
            kind: self.kind,
            region: self.region.transformed(op),
            variant: format!("{}-{op}", self.variant),
            points: self.points.iter().map(|&p| op.apply(p)).collect(),
        }
    }

    /// Applies a sequence of transforms, first element first.
    pub fn transformed_all(&self, ops: &[Transform]) -> Tile {
        ops.iter().fold(self.clone(), |t, &op| t.transformed(op))
    }

    /// Moves the embedding along an automorphism of the edge gadget.
    pub fn relabeled(&self, relabel: Relabel) -> Tile {
        assert_eq!(self.kind, GadgetKind::Ge, "relabelings apply to edge tiles only");
        let g = self.gadget();
        let mut points = self.points.clone();
        for (v, name) in g.names().iter().enumerate() {
            let (lab, k) = name.split_at(1);
            let k: usize = k.parse().expect("edge labels are t<k> or f<k>");
            let target = match relabel {
                Relabel::Reverse => format!("{lab}{}", crate::gadget::EDGE_PATH_LEN + 1 - k),
                Relabel::SwapTf => format!("{}{k}", if lab == "t" { "f" } else { "t" }),
            };
            points[g.vertex(&target)] = self.points[v];
        }
        Tile { kind: self.kind, region: self.region, variant: format!("{}-{relabel}", self.variant), points }
    }

    /// The side carrying `pair`, when both its vertices are on slots of
    /// that side.
    pub fn pair_side(&self, pair: &TfPair) -> Option<Side> {
        let s = self.region.slot_side(self.points[pair.t])?;
        (self.region.slot_side(self.points[pair.f]) == Some(s)).then_some(s)
    }

    /// TF when the t-vertex comes first on the clockwise boundary walk.
    pub fn orientation_of_pair(&self, pair: &TfPair) -> Option<Orientation> {
        let side = self.pair_side(pair)?;
        let slots = self.region.slots(side)?;
        let t = self.points[pair.t];
        let first = Point2::from_int(slots[0].0, slots[0].1);
        Some(if t == first { Orientation::TF } else { Orientation::FT })
    }

    /// Side and orientation of the pair with path index `index`.
    pub fn pair_placement(&self, index: usize) -> Option<(Side, Orientation)> {
        let pair = self.gadget().pair(index)?;
        Some((self.pair_side(pair)?, self.orientation_of_pair(pair)?))
    }

    /// Per side, the pair placed there and its mark; ε where no pair is.
    pub fn connection_vector(&self) -> ConnectionVector {
        let mut entries = [Entry::EMPTY; 4];
        for pair in &self.gadget().pairs {
            if let (Some(side), Some(o)) = (self.pair_side(pair), self.orientation_of_pair(pair)) {
                entries[side.index()] = Entry::new(o, pair.polarity);
            }
        }
        ConnectionVector(entries)
    }

    pub fn tile_type(&self) -> TileType {
        self.connection_vector().tile_type()
    }

    /// Checks slot positions, interior clearance and the Gabriel unit disk
    /// property with the given margin.
    pub fn violations(&self, margin: Fixed) -> Vec<TileViolation> {
        let g = self.gadget();
        let mut out = Vec::new();
        let mut used: Vec<Side> = Vec::new();
        for pair in &g.pairs {
            for v in [pair.t, pair.f] {
                if self.region.slot_side(self.points[v]).is_none() {
                    out.push(TileViolation::OffSlot { pair: pair.index, vertex: v });
                }
            }
            match self.pair_side(pair) {
                Some(side) if used.contains(&side) => out.push(TileViolation::SharedSide { side }),
                Some(side) => used.push(side),
                None => out.push(TileViolation::SplitPair { pair: pair.index }),
            }
        }
        if self.region != Region::Square {
            for side in self.region.open_sides() {
                if !used.contains(&side) {
                    out.push(TileViolation::UnusedSide { side });
                }
            }
        }
        for v in 0..g.vertex_count() {
            if !g.is_tf_vertex(v) && !self.region.contains_with_clearance(self.points[v], Fixed::ONE) {
                out.push(TileViolation::Clearance { vertex: v });
            }
        }
        out.extend(is_gudg_embedding(&self.embedding(), margin).violations.into_iter().map(TileViolation::Gudg));
        out
    }

    /// Whether [`Tile::violations`] is empty at the default margin.
    pub fn is_valid(&self) -> bool {
        self.violations(DEFAULT_MARGIN).is_empty()
    }
}
