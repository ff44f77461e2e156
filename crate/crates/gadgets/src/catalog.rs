//! The built-in tiles, the tile-type table and the lookups used to resolve
//! orientation conflicts.

use std::sync::OnceLock;

use crate::connection::{ConnectionVector, Link, Orientation, TileType};
use crate::gadget::{GadgetKind, Polarity};
use crate::region::{Region, Side};
use crate::tile::Tile;
use crate::transform::{Relabel, Transform};
use crate::GadgetError;

/// A built-in embedding file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TileSource {
    pub stem: &'static str,
    pub kind: GadgetKind,
    pub region: Region,
    pub text: &'static str,
}

macro_rules! source {
    ($stem:literal, $kind:expr, $region:expr) => {
        TileSource { stem: $stem, kind: $kind, region: $region, text: include_str!(concat!("../data/", $stem, ".txt")) }
    };
}

/// Every embedding shipped with the crate.
pub const SOURCES: [TileSource; 16] = [
    source!("var_top_bottom_left", GadgetKind::G3v, Region::Square),
    source!("var_right_bottom_left", GadgetKind::G3v, Region::Square),
    source!("var_top_right_bottom", GadgetKind::G3v, Region::Square),
    source!("var2a_top_right", GadgetKind::G2va, Region::Square),
    source!("var2b_top_left", GadgetKind::G2vb, Region::Square),
    source!("clause3_a", GadgetKind::G3c, Region::Square),
    source!("clause3_b", GadgetKind::G3c, Region::Square),
    source!("clause3_c", GadgetKind::G3c, Region::Square),
    source!("clause2_a", GadgetKind::G2c, Region::Square),
    source!("clause2_b", GadgetKind::G2c, Region::Square),
    source!("clause2_c", GadgetKind::G2c, Region::Square),
    source!("clause2_d", GadgetKind::G2c, Region::Square),
    source!("clause2_e", GadgetKind::G2c, Region::Square),
    source!("edge_tile", GadgetKind::Ge, Region::Square),
    source!("edge_triple_straight", GadgetKind::Ge, Region::P1),
    source!("edge_triple_bend", GadgetKind::Ge, Region::P3),
];

/// Parses a built-in embedding by file stem.
pub fn base_tile(stem: &str) -> Result<Tile, GadgetError> {
    let src = SOURCES.iter().find(|s| s.stem == stem).ok_or_else(|| GadgetError::UnknownTile(stem.into()))?;
    Tile::parse(src.kind, src.region, src.stem, src.text)
}

/// How a table row's tile is obtained from a built-in embedding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Table1Row {
    /// 1-based row number.
    pub row: usize,
    /// The connection vector as tabulated.
    pub vector: &'static str,
    pub kind: GadgetKind,
    pub stem: &'static str,
    /// Whether the embedding is restricted to `kind` before use.
    pub restrict: bool,
    pub mirrored: bool,
}

const fn row(
    row: usize,
    vector: &'static str,
    kind: GadgetKind,
    stem: &'static str,
    restrict: bool,
    mirrored: bool,
) -> Table1Row {
    Table1Row { row, vector, kind, stem, restrict, mirrored }
}

use GadgetKind::{G2c, G2va, G2vb, G3c, G3v};

/// The available tile types and the embedding realizing each.
pub const TABLE1: [Table1Row; 26] = [
    row(1, "[(TF,⊕),(ε,∅),(FT,⊖),(FT,⊕)]", G3v, "var_top_bottom_left", false, false),
    row(2, "[(TF,⊕),(ε,∅),(TF,⊖),(FT,⊕)]", G3v, "var_top_right_bottom", false, true),
    row(3, "[(ε,∅),(TF,⊕),(FT,⊖),(FT,⊕)]", G3v, "var_right_bottom_left", false, false),
    row(4, "[(ε,∅),(TF,⊕),(TF,⊖),(FT,⊕)]", G3v, "var_right_bottom_left", false, true),
    row(5, "[(FT,⊕),(TF,⊕),(FT,⊖),(ε,∅)]", G3v, "var_top_right_bottom", false, false),
    row(6, "[(FT,⊕),(TF,⊕),(TF,⊖),(ε,∅)]", G3v, "var_top_bottom_left", false, true),
    row(7, "[(ε,∅),(ε,∅),(FT,⊖),(FT,⊕)]", G2va, "var_top_bottom_left", true, false),
    row(8, "[(ε,∅),(ε,∅),(TF,⊖),(FT,⊕)]", G2vb, "var_right_bottom_left", true, true),
    row(9, "[(FT,⊕),(ε,∅),(FT,⊖),(ε,∅)]", G2va, "var_top_right_bottom", true, false),
    row(10, "[(FT,⊕),(ε,∅),(TF,⊖),(ε,∅)]", G2vb, "var_top_bottom_left", true, true),
    row(11, "[(ε,∅),(FT,⊕),(FT,⊖),(ε,∅)]", G2va, "var2a_top_right", false, false),
    row(12, "[(ε,∅),(FT,⊕),(TF,⊖),(ε,∅)]", G2vb, "var2b_top_left", false, true),
    row(13, "[(TF,∅),(TF,∅),(FT,∅),(ε,∅)]", G3c, "clause3_a", false, false),
    row(14, "[(TF,∅),(FT,∅),(FT,∅),(ε,∅)]", G3c, "clause3_a", false, true),
    row(15, "[(TF,∅),(FT,∅),(TF,∅),(ε,∅)]", G3c, "clause3_b", false, false),
    row(16, "[(FT,∅),(TF,∅),(FT,∅),(ε,∅)]", G3c, "clause3_b", false, true),
    row(17, "[(FT,∅),(TF,∅),(TF,∅),(ε,∅)]", G3c, "clause3_c", false, false),
    row(18, "[(FT,∅),(FT,∅),(TF,∅),(ε,∅)]", G3c, "clause3_c", false, true),
    row(19, "[(TF,∅),(ε,∅),(TF,∅),(ε,∅)]", G2c, "clause2_a", false, false),
    row(20, "[(FT,∅),(ε,∅),(FT,∅),(ε,∅)]", G2c, "clause2_a", false, true),
    row(21, "[(TF,∅),(FT,∅),(ε,∅),(ε,∅)]", G2c, "clause2_b", false, false),
    row(22, "[(TF,∅),(TF,∅),(ε,∅),(ε,∅)]", G2c, "clause2_c", false, false),
    row(23, "[(FT,∅),(FT,∅),(ε,∅),(ε,∅)]", G2c, "clause2_c", false, true),
    row(24, "[(FT,∅),(ε,∅),(TF,∅),(ε,∅)]", G2c, "clause2_d", false, false),
    row(25, "[(TF,∅),(ε,∅),(FT,∅),(ε,∅)]", G2c, "clause2_d", false, true),
    row(26, "[(FT,∅),(TF,∅),(ε,∅),(ε,∅)]", G2c, "clause2_e", false, false),
];

impl Table1Row {
    /// The tabulated connection vector.
    pub fn connection_vector(&self) -> ConnectionVector {
        self.vector.parse().expect("table vectors are well formed")
    }

    /// The tile realizing this row.
    pub fn tile(&self) -> Result<Tile, GadgetError> {
        let mut t = base_tile(self.stem)?;
        if self.restrict {
            let dropped = if self.kind == G2va { "drop3" } else { "drop2" };
            t = t.restricted(self.kind, dropped)?;
        }
        if self.mirrored {
            t = t.transformed(Transform::MirrorH);
        }
        Ok(t)
    }
}

/// A catalog member: a table row's tile in one of its four rotations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub row: usize,
    /// Quarter turns applied counter-clockwise.
    pub rotation: usize,
    pub tile: Tile,
    pub tile_type: TileType,
}

fn build_catalog() -> Vec<CatalogEntry> {
    let rotations: [&[Transform]; 4] = [&[], &[Transform::Rot90], &[Transform::Rot180], &[Transform::Rot270]];
    let mut out = Vec::new();
    for r in &TABLE1 {
        let base = r.tile().expect("built-in tiles parse");
        for (rotation, ops) in rotations.iter().enumerate() {
            let tile = base.transformed_all(ops);
            let tile_type = tile.tile_type();
            out.push(CatalogEntry { row: r.row, rotation, tile, tile_type });
        }
    }
    out
}

/// Every table row in all four rotations, built once.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

/// The first catalog tile of a variable or clause kind class whose
/// connection vector is exactly `vector`.
pub fn find_vertex_tile(variable: bool, vector: &ConnectionVector) -> Option<&'static Tile> {
    catalog()
        .iter()
        .find(|e| {
            let class = if variable { e.tile.kind.is_variable() } else { e.tile.kind.is_clause() };
            class && e.tile.connection_vector() == *vector
        })
        .map(|e| &e.tile)
}

/// The variable tile with the ⊖ pair reversed in place and every ⊕ pair
/// on the same slots.
pub fn variable_flip_lookup(tile: &Tile) -> Result<&'static Tile, GadgetError> {
    if !tile.kind.is_variable() {
        return Err(GadgetError::NotVariable(tile.variant.clone()));
    }
    let mut target = tile.connection_vector();
    for e in target.0.iter_mut() {
        if e.polarity == Polarity::Minus {
            *e = e.flipped();
        }
    }
    find_vertex_tile(true, &target).ok_or_else(|| GadgetError::NoMate(tile.variant.clone()))
}

/// The clause tiles keeping every pair's side and realizing the other three
/// orientation combinations on the pairs with indices `i` and `j`, in the
/// order (flip i), (flip j), (flip both). A third pair keeps its side with
/// any orientation.
pub fn clause_variant_lookup(tile: &Tile, i: usize, j: usize) -> Result<[&'static Tile; 3], GadgetError> {
    if !tile.kind.is_clause() {
        return Err(GadgetError::NotClause(tile.variant.clone()));
    }
    let miss = || GadgetError::NoMate(tile.variant.clone());
    let (si, _) = tile.pair_placement(i).ok_or_else(miss)?;
    let (sj, _) = tile.pair_placement(j).ok_or_else(miss)?;
    if si == sj {
        return Err(miss());
    }
    let base = tile.connection_vector();
    let find = |flip_i: bool, flip_j: bool| -> Result<&'static Tile, GadgetError> {
        catalog()
            .iter()
            .map(|e| &e.tile)
            .find(|t| {
                t.kind == tile.kind
                    && Side::ALL.into_iter().all(|s| {
                        let want = base.0[s.index()];
                        let got = t.connection_vector().0[s.index()];
                        if s == si {
                            got == if flip_i { want.flipped() } else { want }
                        } else if s == sj {
                            got == if flip_j { want.flipped() } else { want }
                        } else {
                            (got.link == Link::Empty) == (want.link == Link::Empty)
                        }
                    })
            })
            .ok_or_else(miss)
    };
    Ok([find(true, false)?, find(false, true)?, find(true, true)?])
}

fn build_edge_tiles() -> Vec<Tile> {
    let mut out: Vec<Tile> = Vec::new();
    for stem in ["edge_tile", "edge_triple_straight", "edge_triple_bend"] {
        let base = base_tile(stem).expect("built-in tiles parse");
        for ops in Transform::dihedral() {
            for relabels in Relabel::all_combinations() {
                let mut t = base.transformed_all(ops);
                for &r in relabels {
                    t = t.relabeled(r);
                }
                if !out.iter().any(|o| o.region == t.region && o.points() == t.points()) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// All symmetric images and relabelings of the three edge embeddings.
pub fn edge_tiles() -> &'static [Tile] {
    static EDGES: OnceLock<Vec<Tile>> = OnceLock::new();
    EDGES.get_or_init(build_edge_tiles)
}

/// The edge tile in `region` whose pair 1 sits on `near` with orientation
/// `orientation` and whose pair 2 sits on `far`.
pub fn edge_tile(region: Region, near: Side, orientation: Orientation, far: Side) -> Option<&'static Tile> {
    edge_tiles().iter().find(|t| {
        t.region == region && t.pair_placement(1) == Some((near, orientation)) && t.pair_placement(2).is_some_and(|(s, _)| s == far)
    })
}
