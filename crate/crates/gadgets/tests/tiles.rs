use std::collections::BTreeSet;

use gadgets::{
    base_tile, catalog, clause_variant_lookup, edge_tile, edge_tiles, parse_names, variable_flip_lookup,
    write_tile_dump, ConnectionVector, GadgetKind, Orientation, Polarity, Region, Side, Tile, Transform, SOURCES,
    TABLE1,
};
use geom_graph::{parse_embedded_graph, Point2, DEFAULT_MARGIN};

fn assert_valid(t: &Tile) {
    let v = t.violations(DEFAULT_MARGIN);
    assert!(v.is_empty(), "{}: {}", t.variant, v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; "));
}

#[test]
fn every_source_tile_is_valid() {
    for src in SOURCES {
        assert_valid(&base_tile(src.stem).unwrap());
    }
}

#[test]
fn every_catalog_tile_is_valid() {
    for e in catalog() {
        assert_valid(&e.tile);
    }
    assert_eq!(catalog().len(), 4 * TABLE1.len());
}

#[test]
fn every_edge_tile_is_valid() {
    for t in edge_tiles() {
        assert_valid(t);
    }
}

#[test]
fn table_rows_match_their_tiles() {
    for r in &TABLE1 {
        let t = r.tile().unwrap();
        assert_eq!(t.kind, r.kind, "row {}", r.row);
        assert_eq!(t.tile_type(), r.connection_vector().tile_type(), "row {}: got {}", r.row, t.connection_vector());
    }
}

#[test]
fn first_row_has_the_tabulated_vector() {
    let t = TABLE1[0].tile().unwrap();
    let want: ConnectionVector = "[(TF,⊕),(ε,∅),(FT,⊖),(FT,⊕)]".parse().unwrap();
    assert_eq!(t.tile_type(), want.tile_type());
    let row20 = TABLE1[19].tile().unwrap();
    assert_eq!(row20.kind, GadgetKind::G2c);
    assert_eq!(row20.tile_type(), "[(FT,∅),(ε,∅),(FT,∅),(ε,∅)]".parse::<ConnectionVector>().unwrap().tile_type());
}

#[test]
fn six_distinct_variable_types_and_one_type_per_row() {
    let g3v: BTreeSet<_> =
        TABLE1.iter().filter(|r| r.kind == GadgetKind::G3v).map(|r| r.tile().unwrap().tile_type()).collect();
    assert_eq!(g3v.len(), 6);
    for e in catalog() {
        let row = &TABLE1[e.row - 1];
        assert_eq!(e.tile_type, row.connection_vector().tile_type());
    }
    let all: BTreeSet<_> = TABLE1.iter().map(|r| r.connection_vector().tile_type()).collect();
    // Rows 24 and 25 are rotations of each other.
    assert_eq!(all.len(), 25);
}

#[test]
fn rotation_preserves_type_and_shifts_the_vector() {
    for r in &TABLE1 {
        let t = r.tile().unwrap();
        let rotated = t.transformed(Transform::Rot90);
        assert_eq!(rotated.tile_type(), t.tile_type());
        assert_eq!(rotated.connection_vector(), t.connection_vector().rotated(1));
        let mirrored = t.transformed(Transform::MirrorH);
        assert_eq!(mirrored.connection_vector(), t.connection_vector().mirrored_h());
    }
}

#[test]
fn transforms_on_points() {
    let p = Point2::from_int(6, -1);
    assert_eq!(Transform::MirrorH.apply(p), Point2::from_int(-6, -1));
    for op in Transform::ALL {
        assert_eq!(op.inverse().apply(op.apply(p)), p);
    }
    let t = base_tile("var_top_bottom_left").unwrap();
    assert_eq!(t.transformed(Transform::Rot90).transformed(Transform::Rot270).points(), t.points());
}

#[test]
fn orientation_convention() {
    let t = base_tile("edge_tile").unwrap();
    let g = t.gadget();
    // t1 at (-6,1) above f1 at (-6,-1): the clockwise walk goes up the left side.
    assert_eq!(t.point_of("t1"), Some(Point2::from_int(-6, 1)));
    assert_eq!(t.orientation_of_pair(&g.pairs[0]), Some(Orientation::FT));
    assert_eq!(t.orientation_of_pair(&g.pairs[1]), Some(Orientation::TF));
    let swapped = t.relabeled(gadgets::Relabel::SwapTf);
    assert_eq!(swapped.orientation_of_pair(&g.pairs[0]), Some(Orientation::TF));
}

#[test]
fn region_transforms() {
    assert_eq!(Region::P3.transformed(Transform::Rot90), Region::P5);
    assert_eq!(Region::P3.transformed(Transform::Rot180), Region::P6);
    assert_eq!(Region::P3.transformed(Transform::Rot270), Region::P4);
    assert_eq!(Region::P1.transformed(Transform::Rot90), Region::P2);
    assert_eq!(Region::Square.transformed(Transform::MirrorV), Region::Square);
    assert!(Region::P3.contains_strictly(Point2::from_int(0, -10)));
    assert!(!Region::P3.contains_strictly(Point2::from_int(10, -10)));
}

#[test]
fn flip_lookup_reverses_only_the_negative_pair() {
    for e in catalog().iter().filter(|e| e.tile.kind.is_variable()) {
        let mate = variable_flip_lookup(&e.tile).unwrap();
        let (a, b) = (e.tile.connection_vector(), mate.connection_vector());
        for s in 0..4 {
            if a.0[s].polarity == Polarity::Minus {
                assert_eq!(b.0[s], a.0[s].flipped());
            } else {
                assert_eq!(b.0[s], a.0[s]);
            }
        }
        let back = variable_flip_lookup(mate).unwrap();
        assert_eq!(back.connection_vector(), a);
    }
}

#[test]
fn two_occurrence_flip_changes_gadget() {
    let row9 = catalog().iter().find(|e| e.row == 9 && e.rotation == 0).unwrap();
    let mate = variable_flip_lookup(&row9.tile).unwrap();
    assert_eq!(mate.kind, GadgetKind::G2vb);
}

#[test]
fn clause_variants_cover_all_orientations() {
    for e in catalog().iter().filter(|e| e.tile.kind.is_clause()) {
        let idx: Vec<usize> = e.tile.gadget().pairs.iter().map(|p| p.index).collect();
        for (a, &i) in idx.iter().enumerate() {
            for &j in &idx[a + 1..] {
                let mates = clause_variant_lookup(&e.tile, i, j).unwrap();
                let (si, oi) = e.tile.pair_placement(i).unwrap();
                let (sj, oj) = e.tile.pair_placement(j).unwrap();
                let mut combos = BTreeSet::from([(oi, oj)]);
                for m in mates {
                    let v = m.connection_vector();
                    let o = |s: Side| v.0[s.index()].link.orientation().unwrap();
                    combos.insert((o(si), o(sj)));
                    assert_eq!(m.kind, e.tile.kind);
                }
                assert_eq!(combos.len(), 4, "row {} pairs {i},{j}", e.row);
            }
        }
    }
}

#[test]
fn edge_tiles_cover_every_side_and_orientation() {
    for near in Side::ALL {
        for o in [Orientation::TF, Orientation::FT] {
            let t = edge_tile(Region::Square, near, o, near.opposite()).expect("square edge tile");
            assert_eq!(t.pair_placement(1), Some((near, o)));
            for far in Side::ALL.into_iter().filter(|&f| f != near) {
                let region = if far == near.opposite() {
                    if near == Side::Left || near == Side::Right { Region::P1 } else { Region::P2 }
                } else {
                    Region::triple_with_sides(near, far).unwrap()
                };
                assert!(edge_tile(region, near, o, far).is_some(), "{region} {near} {o} {far}");
            }
        }
    }
}

#[test]
fn dump_round_trips() {
    let t = catalog()[5].tile.clone();
    let text = write_tile_dump(&t);
    let g = parse_embedded_graph(&text).unwrap();
    assert_eq!(g.points(), t.points());
    assert_eq!(g.graph(), &t.gadget().graph);
    let names = parse_names(&text).unwrap();
    assert_eq!(names.len(), t.gadget().vertex_count());
    assert_eq!(names[&0], "T1");
}

#[test]
fn parse_errors() {
    let err = Tile::parse(GadgetKind::Ge, Region::Square, "x", "t1 0 0\nzz 1 1\n").unwrap_err();
    assert!(matches!(err, gadgets::GadgetError::UnknownLabel { .. }));
    let err = Tile::parse(GadgetKind::Ge, Region::Square, "x", "t1 0 0\nt1 1 1\n").unwrap_err();
    assert!(matches!(err, gadgets::GadgetError::DuplicateLabel { .. }));
    let err = Tile::parse(GadgetKind::Ge, Region::Square, "x", "t1 0\n").unwrap_err();
    assert!(matches!(err, gadgets::GadgetError::Parse { line: 1, .. }));
    let err = Tile::parse(GadgetKind::Ge, Region::Square, "x", "t1 0 0\n").unwrap_err();
    assert!(matches!(err, gadgets::GadgetError::MissingLabel { .. }));
}

#[test]
fn connection_vector_text() {
    let v: ConnectionVector = "[(TF,+),(e,0),(FT,-),(FT,+)]".parse().unwrap();
    assert_eq!(v.to_string(), "[(TF,⊕),(ε,∅),(FT,⊖),(FT,⊕)]");
    assert_eq!(ConnectionVector::EMPTY.tile_type().representative(), ConnectionVector::EMPTY);
    assert!("[(TF,+)]".parse::<ConnectionVector>().is_err());
}
