use orthodraw::DiGraph;

use crate::SatInstance;

/// The directed clause-variable graph: variable `i` is vertex `i`, clause
/// `j` is vertex `n + j`, and every occurrence of a variable in a clause is
/// an arc from the variable to the clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseVariableGraph {
    pub graph: DiGraph,
    pub variable_count: usize,
    pub clause_count: usize,
}

impl ClauseVariableGraph {
    pub fn clause_vertex(&self, clause: usize) -> usize {
        self.variable_count + clause
    }

    /// Whether vertex `v` is a variable vertex.
    pub fn is_variable(&self, v: usize) -> bool {
        v < self.variable_count
    }
}

/// Builds the clause-variable graph. Arcs are listed variable by variable,
/// each in clause order; this order numbers the edges.
pub fn clause_variable_graph(psi: &SatInstance) -> ClauseVariableGraph {
    let n = psi.variable_count();
    let mut arcs = Vec::new();
    for var in 0..n {
        for (c, _) in psi.occurrences(var) {
            arcs.push((var, n + c));
        }
    }
    let graph = DiGraph::from_arcs(n + psi.clause_count(), arcs).expect("a clause mentions each variable at most once");
    ClauseVariableGraph { graph, variable_count: n, clause_count: psi.clause_count() }
}
