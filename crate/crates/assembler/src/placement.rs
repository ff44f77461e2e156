//! Choosing tiles for every variable, clause and edge of a drawn instance
//! and removing orientation conflicts.

use std::collections::BTreeMap;
use std::fmt;

use gadgets::{
    catalog, clause_variant_lookup, edge_tile, variable_flip_lookup, GadgetKind, Orientation, Polarity, Region, Side,
    Tile,
};
use orthodraw::{edge_direction, validate_drawing, Direction, Drawing, EdgePath, End, GridPoint};
use sat3::{clause_variable_graph, validate_instance, SatInstance};

use crate::AssemblyError;

/// Distance in units between the centers of neighbouring grid points.
const PITCH: i64 = 24;

/// A tile with the translation placing it in the plane, in units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlacedTile {
    pub tile: Tile,
    pub origin: (i64, i64),
}

/// One arc of the clause-variable graph with its drawn path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeRoute {
    pub variable: usize,
    pub clause: usize,
    /// Whether the variable occurs positively in the clause.
    pub positive: bool,
    pub path: EdgePath,
    /// Side of the variable tile the path leaves through.
    pub variable_side: Side,
    /// Side of the clause tile the path enters through.
    pub clause_side: Side,
}

impl EdgeRoute {
    /// Side of the edge tile facing the variable.
    pub fn near_side(&self) -> Side {
        self.variable_side.opposite()
    }

    /// Side of the edge tile facing the clause.
    pub fn far_side(&self) -> Side {
        self.clause_side.opposite()
    }
}

/// Tiles for every gadget copy and the cells they occupy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Placement {
    pub variables: Vec<PlacedTile>,
    pub clauses: Vec<PlacedTile>,
    pub edges: Vec<PlacedTile>,
    /// Routes in arc order of the clause-variable graph.
    pub routes: Vec<EdgeRoute>,
    /// Half-grid cell → owner description. Grid points use `2p`, unit
    /// segments `p + q`.
    pub cells: BTreeMap<(i64, i64), String>,
    pub stats: ResolutionStats,
}

/// Counts of local replacements made while resolving conflicts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ResolutionStats {
    pub edge_replacements: usize,
    pub clause_replacements: usize,
    pub variable_flips: usize,
}

/// A place where an identified pair would meet with t on f.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Conflict {
    /// Between the variable tile and the edge tile of route `route`.
    Variable { route: usize },
    /// Between the edge tile of route `route` and the clause tile.
    Clause { route: usize },
}

impl fmt::Display for Conflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conflict::Variable { route } => write!(f, "variable end of edge {route}"),
            Conflict::Clause { route } => write!(f, "clause end of edge {route}"),
        }
    }
}

fn side_at_source(d: Direction) -> Side {
    match d {
        Direction::FromLeft => Side::Right,
        Direction::FromRight => Side::Left,
        Direction::FromTop => Side::Bottom,
        _ => Side::Top,
    }
}

fn side_at_target(d: Direction) -> Side {
    match d {
        Direction::ToLeft => Side::Right,
        Direction::ToRight => Side::Left,
        Direction::ToTop => Side::Bottom,
        _ => Side::Top,
    }
}

fn scaled(p: GridPoint, k: i64) -> (i64, i64) {
    (p.x * k, p.y * k)
}

/// Orientation of the pair a tile shows on `side`.
fn orientation_on(tile: &Tile, side: Side) -> Option<Orientation> {
    tile.connection_vector().0[side.index()].link.orientation()
}

/// Region and origin of the edge tile for a route.
fn edge_geometry(route: &EdgeRoute) -> (Region, (i64, i64)) {
    let p = &route.path.points;
    if p.len() == 2 {
        let (a, b) = (scaled(p[0], 12), scaled(p[1], 12));
        (Region::Square, (a.0 + b.0, a.1 + b.1))
    } else {
        let (near, far) = (route.near_side(), route.far_side());
        let region = if near == far.opposite() {
            if matches!(near, Side::Left | Side::Right) {
                Region::P1
            } else {
                Region::P2
            }
        } else {
            Region::triple_with_sides(near, far).expect("adjacent sides form a bend")
        };
        (region, scaled(p[1], PITCH))
    }
}

fn pick_edge_tile(route: &EdgeRoute, near_orientation: Orientation) -> Result<Tile, AssemblyError> {
    let (region, _) = edge_geometry(route);
    edge_tile(region, route.near_side(), near_orientation, route.far_side()).cloned().ok_or_else(|| {
        AssemblyError::NoTile(format!("edge in {region} from {} ({near_orientation}) to {}", route.near_side(), route.far_side()))
    })
}

/// Picks a tile for every gadget copy so that pairs sit on the sides the
/// drawing requires, with ⊖ on the side of the negated occurrence. Edge
/// tiles start in TF orientation at the variable end; orientations are not
/// reconciled here.
pub fn select_tiles(psi: &SatInstance, drawing: &Drawing) -> Result<Placement, AssemblyError> {
    if let Some(v) = validate_instance(psi).violations.first() {
        return Err(AssemblyError::InvalidInstance(v.to_string()));
    }
    let cvg = clause_variable_graph(psi);
    if let Some(v) = validate_drawing(&cvg.graph, drawing).violations.first() {
        return Err(AssemblyError::InvalidDrawing(v.to_string()));
    }
    let n = psi.variable_count();
    let mut routes = Vec::new();
    for &(u, v) in cvg.graph.arcs() {
        let path = drawing.paths[&(u, v)].clone();
        let clause = v - n;
        if path.len() > 2 {
            return Err(AssemblyError::PathTooLong { variable: u, clause, len: path.len() });
        }
        let literal = psi.clauses[clause].literal_of(u).expect("arcs come from occurrences");
        let src = edge_direction(&path, End::Source).map_err(|e| AssemblyError::InvalidDrawing(e.to_string()))?;
        let dst = edge_direction(&path, End::Target).map_err(|e| AssemblyError::InvalidDrawing(e.to_string()))?;
        routes.push(EdgeRoute {
            variable: u,
            clause,
            positive: literal.positive,
            path,
            variable_side: side_at_source(src),
            clause_side: side_at_target(dst),
        });
    }

    let mut cells: BTreeMap<(i64, i64), String> = BTreeMap::new();
    let mut claim = |cell: (i64, i64), owner: String| -> Result<(), AssemblyError> {
        if cells.insert(cell, owner).is_some() {
            return Err(AssemblyError::CellCollision(cell.0, cell.1));
        }
        Ok(())
    };

    let mut variables = Vec::with_capacity(n);
    for x in 0..n {
        let mut profile: [Option<Polarity>; 4] = [None; 4];
        for r in routes.iter().filter(|r| r.variable == x) {
            profile[r.variable_side.index()] = Some(if r.positive { Polarity::Plus } else { Polarity::Minus });
        }
        let tile = catalog()
            .iter()
            .map(|e| &e.tile)
            .find(|t| {
                t.kind.is_variable()
                    && t.connection_vector().0.iter().zip(&profile).all(|(e, want)| match want {
                        Some(p) => e.link.orientation().is_some() && e.polarity == *p,
                        None => e.link.orientation().is_none(),
                    })
            })
            .ok_or_else(|| AssemblyError::NoTile(format!("variable {} with profile {profile:?}", psi.variables[x])))?;
        let at = drawing.placement[x];
        claim((2 * at.x, 2 * at.y), format!("variable {x}"))?;
        variables.push(PlacedTile { tile: tile.clone(), origin: scaled(at, PITCH) });
    }

    let mut clauses = Vec::with_capacity(psi.clause_count());
    for (c, clause) in psi.clauses.iter().enumerate() {
        let kind = if clause.literals.len() == 3 { GadgetKind::G3c } else { GadgetKind::G2c };
        let mut used = [false; 4];
        for r in routes.iter().filter(|r| r.clause == c) {
            used[r.clause_side.index()] = true;
        }
        let tile = catalog()
            .iter()
            .map(|e| &e.tile)
            .find(|t| {
                t.kind == kind && t.connection_vector().0.iter().zip(&used).all(|(e, &u)| e.link.orientation().is_some() == u)
            })
            .ok_or_else(|| AssemblyError::NoTile(format!("{kind} clause {} with sides {used:?}", clause.name)))?;
        let at = drawing.placement[n + c];
        claim((2 * at.x, 2 * at.y), format!("clause {c}"))?;
        clauses.push(PlacedTile { tile: tile.clone(), origin: scaled(at, PITCH) });
    }

    let mut edges = Vec::with_capacity(routes.len());
    for (k, r) in routes.iter().enumerate() {
        let pts = &r.path.points;
        for w in pts.windows(2) {
            claim((w[0].x + w[1].x, w[0].y + w[1].y), format!("edge {k}"))?;
        }
        for p in &pts[1..pts.len() - 1] {
            claim((2 * p.x, 2 * p.y), format!("edge {k}"))?;
        }
        let (_, origin) = edge_geometry(r);
        edges.push(PlacedTile { tile: pick_edge_tile(r, Orientation::TF)?, origin });
    }
    Ok(Placement { variables, clauses, edges, routes, cells, stats: ResolutionStats::default() })
}

/// Every place where an identified pair would meet t-on-f. Along a shared
/// side the two clockwise walks run in opposite directions, so matching
/// pairs carry opposite orientation labels.
pub fn conflicts(p: &Placement) -> Vec<Conflict> {
    let mut out = Vec::new();
    for (k, r) in p.routes.iter().enumerate() {
        let edge = &p.edges[k].tile;
        let v = orientation_on(&p.variables[r.variable].tile, r.variable_side);
        if v.is_none() || v == orientation_on(edge, r.near_side()) {
            out.push(Conflict::Variable { route: k });
        }
        let c = orientation_on(&p.clauses[r.clause].tile, r.clause_side);
        if c.is_none() || c == orientation_on(edge, r.far_side()) {
            out.push(Conflict::Clause { route: k });
        }
    }
    out
}

/// The orientation a clause must show on the side of route `k`.
fn clause_needs(p: &Placement, k: usize) -> Orientation {
    let r = &p.routes[k];
    orientation_on(&p.edges[k].tile, r.far_side()).expect("edge tiles carry both pairs").flipped()
}

/// Makes every edge tile agree with its variable, then fixes each clause.
/// A two-literal clause takes a variant of its tile. A three-literal clause
/// takes the tile showing exactly the needed orientations; when all three
/// sides need the same orientation no such tile exists, and the ⊖ pair of
/// the variable behind a negated literal is reversed first.
pub fn resolve_orientation_conflicts(mut p: Placement) -> Result<Placement, AssemblyError> {
    if conflicts(&p).is_empty() {
        return Ok(p);
    }
    for k in 0..p.routes.len() {
        let r = &p.routes[k];
        let want = orientation_on(&p.variables[r.variable].tile, r.variable_side)
            .ok_or_else(|| AssemblyError::ResidualConflict(format!("variable tile lacks side {}", r.variable_side)))?
            .flipped();
        if orientation_on(&p.edges[k].tile, r.near_side()) != Some(want) {
            p.edges[k].tile = pick_edge_tile(r, want)?;
            p.stats.edge_replacements += 1;
        }
    }
    for c in 0..p.clauses.len() {
        let ks: Vec<usize> = (0..p.routes.len()).filter(|&k| p.routes[k].clause == c).collect();
        if clause_matches(&p, c, &p.clauses[c].tile, &ks) {
            continue;
        }
        let tile = p.clauses[c].tile.clone();
        if tile.kind == GadgetKind::G2c {
            let idx: Vec<usize> = tile.gadget().pairs.iter().map(|pr| pr.index).collect();
            let mates = clause_variant_lookup(&tile, idx[0], idx[1])?;
            let m = mates
                .into_iter()
                .find(|m| clause_matches(&p, c, m, &ks))
                .ok_or_else(|| AssemblyError::ResidualConflict(format!("two-literal clause {c}")))?;
            p.clauses[c].tile = m.clone();
            p.stats.clause_replacements += 1;
            continue;
        }
        if exact_clause_tile(&p, c, &ks).is_none() {
            // All three sides need the same orientation, which no tile
            // shows. Reverse the ⊖ pair of the negated literal's variable.
            let neg = *ks
                .iter()
                .find(|&&k| !p.routes[k].positive)
                .ok_or_else(|| AssemblyError::ResidualConflict(format!("clause {c} has no negated literal")))?;
            let x = p.routes[neg].variable;
            p.variables[x].tile = variable_flip_lookup(&p.variables[x].tile)?.clone();
            p.stats.variable_flips += 1;
            let want = orientation_on(&p.variables[x].tile, p.routes[neg].variable_side).expect("flip keeps sides").flipped();
            p.edges[neg].tile = pick_edge_tile(&p.routes[neg], want)?;
            p.stats.edge_replacements += 1;
        }
        let m = exact_clause_tile(&p, c, &ks).ok_or_else(|| AssemblyError::ResidualConflict(format!("clause {c}")))?;
        p.clauses[c].tile = m.clone();
        p.stats.clause_replacements += 1;
    }
    if let Some(c) = conflicts(&p).first() {
        return Err(AssemblyError::ResidualConflict(c.to_string()));
    }
    Ok(p)
}

fn clause_matches(p: &Placement, c: usize, tile: &Tile, ks: &[usize]) -> bool {
    tile.kind == p.clauses[c].tile.kind
        && ks.iter().all(|&k| orientation_on(tile, p.routes[k].clause_side) == Some(clause_needs(p, k)))
}

fn exact_clause_tile(p: &Placement, c: usize, ks: &[usize]) -> Option<&'static Tile> {
    catalog().iter().map(|e| &e.tile).find(|t| {
        clause_matches(p, c, t, ks) && t.gadget().pairs.len() == ks.len()
    })
}
