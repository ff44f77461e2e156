//! Random valid instances generated together with a drawing.

use rand::seq::SliceRandom;
use rand::Rng;

use orthodraw::{random_plane_grid, Drawing, PlaneGridParams};

use crate::{clause_variable_graph, validate_instance, Clause, Literal, SatError, SatInstance};

/// Parameters of [`random_instance`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomInstanceParams {
    /// Shape of the underlying plane grid graph.
    pub grid: PlaneGridParams,
    /// Fewest variables accepted.
    pub min_variables: usize,
    /// Fewest clauses accepted.
    pub min_clauses: usize,
    /// Attempts before giving up.
    pub max_attempts: usize,
}

impl Default for RandomInstanceParams {
    fn default() -> Self {
        RandomInstanceParams { grid: PlaneGridParams::default(), min_variables: 2, min_clauses: 2, max_attempts: 1000 }
    }
}

/// Generates a valid instance and a valid drawing of its clause-variable
/// graph.
///
/// A random plane grid graph is drawn first; it is bipartite by lattice
/// parity, and one parity class (chosen at random) becomes the variables.
/// Every three-literal clause is matched to a distinct neighbouring variable
/// that occurs negated there; every other variable negates a random one of
/// its occurrences. Graphs where no such matching exists are discarded.
pub fn random_instance<R: Rng + ?Sized>(
    rng: &mut R,
    params: RandomInstanceParams,
) -> Result<(SatInstance, Drawing), SatError> {
    for _ in 0..params.max_attempts {
        let grid = random_plane_grid(rng, params.grid);
        let var_parity = rng.gen_range(0..2);
        let vars: Vec<usize> = (0..grid.cells.len()).filter(|&v| grid.parity(v) == var_parity).collect();
        let clauses: Vec<usize> = (0..grid.cells.len()).filter(|&v| grid.parity(v) != var_parity).collect();
        if vars.len() < params.min_variables || clauses.len() < params.min_clauses {
            continue;
        }
        let var_id = |v: usize| vars.binary_search(&v).ok();
        let clause_id = |v: usize| clauses.binary_search(&v).ok();
        // Occurrences per clause as (variable index) lists.
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); clauses.len()];
        for &(a, b) in &grid.edges {
            let (x, c) = match (var_id(a), clause_id(b)) {
                (Some(x), Some(c)) => (x, c),
                _ => (var_id(b).expect("bipartite"), clause_id(a).expect("bipartite")),
            };
            members[c].push(x);
        }
        for m in &mut members {
            m.sort_unstable();
        }
        let Some(mut negated_in) = negative_choice(rng, vars.len(), &members) else { continue };
        for (x, slot) in negated_in.iter_mut().enumerate() {
            if slot.is_none() {
                let options: Vec<usize> = (0..clauses.len()).filter(|&c| members[c].contains(&x)).collect();
                *slot = options.choose(rng).copied();
            }
        }
        let variables: Vec<String> = (1..=vars.len()).map(|i| format!("x{i}")).collect();
        let clause_list: Vec<Clause> = members
            .iter()
            .enumerate()
            .map(|(c, m)| {
                let literals = m.iter().map(|&x| Literal { var: x, positive: negated_in[x] != Some(c) }).collect();
                Clause::new(format!("c{}", c + 1), literals)
            })
            .collect();
        let psi = SatInstance::new(variables, clause_list);
        if !validate_instance(&psi).passed() {
            continue;
        }
        let cvg = clause_variable_graph(&psi);
        let n = vars.len();
        let mut placement = Vec::with_capacity(grid.cells.len());
        placement.extend(vars.iter().map(|&v| grid.drawing.placement[v]));
        placement.extend(clauses.iter().map(|&v| grid.drawing.placement[v]));
        let mut renamed = Drawing::new(placement);
        for (&(a, b), path) in &grid.drawing.paths {
            match (var_id(a), clause_id(b)) {
                (Some(x), Some(c)) => renamed.insert_path(x, n + c, path.clone()),
                _ => {
                    let (x, c) = (var_id(b).expect("bipartite"), clause_id(a).expect("bipartite"));
                    renamed.insert_path(x, n + c, path.reversed());
                }
            }
        }
        let drawing = renamed.oriented(&cvg.graph)?;
        return Ok((psi, drawing));
    }
    Err(SatError::GenerationFailed(params.max_attempts))
}

/// Matches every three-literal clause to a distinct member variable with
/// augmenting paths. Returns for every variable the clause where it is
/// negated, if already fixed.
fn negative_choice<R: Rng + ?Sized>(rng: &mut R, n: usize, members: &[Vec<usize>]) -> Option<Vec<Option<usize>>> {
    let mut owner: Vec<Option<usize>> = vec![None; n];
    let mut order: Vec<usize> = (0..members.len()).filter(|&c| members[c].len() == 3).collect();
    order.shuffle(rng);
    for &c in &order {
        let mut seen = vec![false; n];
        if !augment(c, members, &mut owner, &mut seen) {
            return None;
        }
    }
    Some(owner)
}

fn augment(c: usize, members: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &x in &members[c] {
        if seen[x] {
            continue;
        }
        seen[x] = true;
        if owner[x].is_none_or(|other| augment(other, members, owner, seen)) {
            owner[x] = Some(c);
            return true;
        }
    }
    false
}
