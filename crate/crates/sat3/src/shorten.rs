//! Splitting long edge paths so every path has length at most two.

use std::collections::{BTreeMap, HashSet};

use orthodraw::{validate_drawing, Drawing, EdgePath, GridPoint};

use crate::{clause_variable_graph, validate_instance, Clause, Literal, SatError, SatInstance, RESERVED_MARK};

/// Splits every edge path of length at least three.
///
/// For the arc `(x, c)` drawn along `p₁ … p_k` a fresh variable `h` and a
/// fresh two-literal clause `c′` are created, `c′` is placed at `p₂` and `h`
/// at `p₃`, and the arc is replaced by the arcs `(x, c′)` along `p₁ p₂`,
/// `(h, c′)` along `p₃ p₂` and `(h, c)` along `p₃ … p_k`. The literal of `x`
/// in `c` is replaced by a literal of `h`:
///
/// * `x` positive in `c`: `c′ = {x, ¬h}` and `c` receives `h`;
/// * `x` negated in `c`: `c′ = {¬x, ¬h}` and `c` receives `h`, except when
///   `c` has three literals and `¬x` is its only negated one; then
///   `c′ = {¬x, h}` and `c` receives `¬h`, so `c` keeps a negated literal.
///
/// In every case `h` occurs once negated and once positively and the new
/// instance is satisfiable exactly when the old one is. Arcs are processed in
/// edge order and each is split until its remaining path is short. Fresh
/// names are `h#k` and `c#k` from one counter. New variables follow the old
/// ones and new clauses follow the old clauses; the returned drawing uses the
/// vertex numbering of the new clause-variable graph.
pub fn shorten_edge_paths(psi: &SatInstance, drawing: &Drawing) -> Result<(SatInstance, Drawing), SatError> {
    let report = validate_instance(psi);
    if let Some(v) = report.violations.first() {
        return Err(SatError::InvalidInstance(v.to_string()));
    }
    let cvg = clause_variable_graph(psi);
    let check = validate_drawing(&cvg.graph, drawing);
    if let Some(v) = check.violations.first() {
        return Err(SatError::InvalidDrawing(v.to_string()));
    }
    let n = psi.variable_count();
    let mut out = psi.clone();
    let mut var_at: Vec<GridPoint> = drawing.placement[..n].to_vec();
    let mut clause_at: Vec<GridPoint> = drawing.placement[n..].to_vec();
    // Paths keyed by (variable index, clause index) in the growing instance.
    let mut paths: BTreeMap<(usize, usize), EdgePath> = BTreeMap::new();
    for &(u, v) in cvg.graph.arcs() {
        paths.insert((u, v - n), drawing.paths[&(u, v)].clone());
    }
    let mut taken: HashSet<String> = psi.variables.iter().chain(psi.clauses.iter().map(|c| &c.name)).cloned().collect();
    let mut counter = 0usize;
    for &(u, v) in cvg.graph.arcs() {
        let (mut x, c) = (u, v - n);
        while paths[&(x, c)].len() >= 3 {
            let (h_name, c_name) = loop {
                counter += 1;
                let h = format!("h{RESERVED_MARK}{counter}");
                let cn = format!("c{RESERVED_MARK}{counter}");
                if !taken.contains(&h) && !taken.contains(&cn) {
                    break (h, cn);
                }
            };
            taken.insert(h_name.clone());
            taken.insert(c_name.clone());
            let points = paths.remove(&(x, c)).expect("path present").points;
            let h = out.variables.len();
            let c_new = out.clauses.len();
            out.variables.push(h_name);
            var_at.push(points[2]);
            clause_at.push(points[1]);
            let clause = &out.clauses[c];
            let lit = clause.literal_of(x).expect("arc comes from an occurrence");
            let only_negative =
                !lit.positive && clause.literals.len() == 3 && clause.literals.iter().filter(|l| !l.positive).count() == 1;
            let h_in_c = if only_negative { Literal::neg(h) } else { Literal::pos(h) };
            let h_in_new = Literal { var: h, positive: !h_in_c.positive };
            let slot = out.clauses[c].literals.iter().position(|l| l.var == x).expect("occurrence");
            out.clauses[c].literals[slot] = h_in_c;
            out.clauses.push(Clause::new(c_name, vec![lit, h_in_new]));
            paths.insert((x, c_new), EdgePath::new(vec![points[0], points[1]]));
            paths.insert((h, c_new), EdgePath::new(vec![points[2], points[1]]));
            paths.insert((h, c), EdgePath::new(points[2..].to_vec()));
            x = h;
        }
    }
    let n2 = out.variable_count();
    let mut placement = var_at;
    placement.extend(clause_at);
    let mut new_drawing = Drawing::new(placement);
    for ((x, c), path) in paths {
        new_drawing.insert_path(x, n2 + c, path);
    }
    Ok((out, new_drawing))
}
