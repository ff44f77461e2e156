use std::collections::HashSet;
use std::fmt;

/// A variable index with a polarity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, positive: false }
    }

    /// Whether the literal is true under `value` for its variable.
    pub fn holds(self, value: bool) -> bool {
        value == self.positive
    }
}

/// A named clause.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Clause {
    pub name: String,
    pub literals: Vec<Literal>,
}

impl Clause {
    pub fn new(name: impl Into<String>, literals: Vec<Literal>) -> Self {
        Clause { name: name.into(), literals }
    }

    /// The literal over `var`, if any.
    pub fn literal_of(&self, var: usize) -> Option<Literal> {
        self.literals.iter().copied().find(|l| l.var == var)
    }
}

/// Variables (by name, in order) and clauses.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SatInstance {
    pub variables: Vec<String>,
    pub clauses: Vec<Clause>,
}

impl SatInstance {
    pub fn new(variables: Vec<String>, clauses: Vec<Clause>) -> Self {
        SatInstance { variables, clauses }
    }

    pub fn variable_count(&self) -> usize {
        self.variables.len()
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    /// `(clause index, literal)` for every occurrence of `var`, in clause order.
    pub fn occurrences(&self, var: usize) -> Vec<(usize, Literal)> {
        self.clauses
            .iter()
            .enumerate()
            .filter_map(|(c, clause)| clause.literal_of(var).map(|l| (c, l)))
            .collect()
    }

    /// Whether every clause has a true literal.
    pub fn is_satisfied_by(&self, a: &TruthAssignment) -> bool {
        self.clauses.iter().all(|c| c.literals.iter().any(|l| l.holds(a.value(l.var))))
    }

    /// Human-readable literal, e.g. `x` or `¬x`.
    pub fn literal_name(&self, l: Literal) -> String {
        let name = self.variables.get(l.var).map_or("?", String::as_str);
        if l.positive {
            name.to_string()
        } else {
            format!("¬{name}")
        }
    }
}

impl fmt::Display for SatInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.clauses.iter().enumerate() {
            if i > 0 {
                write!(f, " ∧ ")?;
            }
            let lits: Vec<String> = c.literals.iter().map(|&l| self.literal_name(l)).collect();
            write!(f, "({})", lits.join(" ∨ "))?;
        }
        Ok(())
    }
}

/// A value for every variable, indexed like the instance's variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruthAssignment(pub Vec<bool>);

impl TruthAssignment {
    pub fn all_false(n: usize) -> Self {
        TruthAssignment(vec![false; n])
    }

    pub fn value(&self, var: usize) -> bool {
        self.0[var]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The assignment whose bits read `code` with variable 0 as the most
    /// significant bit.
    pub fn from_code(n: usize, code: u64) -> Self {
        TruthAssignment((0..n).map(|i| code >> (n - 1 - i) & 1 == 1).collect())
    }
}

/// One broken rule of the fragment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceViolation {
    /// A literal refers to a variable index that does not exist.
    UnknownVariable { clause: usize, var: usize },
    /// Two variables or two clauses share a name.
    DuplicateName(String),
    /// A variable occurs in fewer than two or more than three clauses.
    OccurrenceCount { var: usize, count: usize },
    /// A variable does not occur negated exactly once.
    NegativeCount { var: usize, count: usize },
    /// A clause has fewer than two or more than three literals.
    ClauseSize { clause: usize, size: usize },
    /// A three-literal clause has no negated literal.
    NoNegativeLiteral { clause: usize },
    /// A clause mentions a variable twice.
    RepeatedVariable { clause: usize, var: usize },
}

impl fmt::Display for InstanceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceViolation::UnknownVariable { clause, var } => {
                write!(f, "clause {clause} refers to unknown variable {var}")
            }
            InstanceViolation::DuplicateName(n) => write!(f, "name {n:?} used twice"),
            InstanceViolation::OccurrenceCount { var, count } => {
                write!(f, "variable {var} occurs in {count} clauses, expected 2 or 3")
            }
            InstanceViolation::NegativeCount { var, count } => {
                write!(f, "variable {var} occurs negated {count} times, expected once")
            }
            InstanceViolation::ClauseSize { clause, size } => {
                write!(f, "clause {clause} has {size} literals, expected 2 or 3")
            }
            InstanceViolation::NoNegativeLiteral { clause } => {
                write!(f, "three-literal clause {clause} has no negated literal")
            }
            InstanceViolation::RepeatedVariable { clause, var } => {
                write!(f, "clause {clause} mentions variable {var} twice")
            }
        }
    }
}

/// All violations, variables first, then clauses.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InstanceReport {
    pub violations: Vec<InstanceViolation>,
}

impl InstanceReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the combinatorial rules of the fragment. Planarity is not checked.
pub fn validate_instance(psi: &SatInstance) -> InstanceReport {
    let mut violations = Vec::new();
    let mut names = HashSet::new();
    for name in psi.variables.iter().chain(psi.clauses.iter().map(|c| &c.name)) {
        if !names.insert(name) {
            violations.push(InstanceViolation::DuplicateName(name.clone()));
        }
    }
    let n = psi.variable_count();
    let mut total = vec![0usize; n];
    let mut negative = vec![0usize; n];
    let mut clause_violations = Vec::new();
    for (c, clause) in psi.clauses.iter().enumerate() {
        let size = clause.literals.len();
        if !(2..=3).contains(&size) {
            clause_violations.push(InstanceViolation::ClauseSize { clause: c, size });
        }
        if size == 3 && clause.literals.iter().all(|l| l.positive) {
            clause_violations.push(InstanceViolation::NoNegativeLiteral { clause: c });
        }
        let mut seen = HashSet::new();
        for l in &clause.literals {
            if l.var >= n {
                clause_violations.push(InstanceViolation::UnknownVariable { clause: c, var: l.var });
                continue;
            }
            if !seen.insert(l.var) {
                clause_violations.push(InstanceViolation::RepeatedVariable { clause: c, var: l.var });
            }
            total[l.var] += 1;
            if !l.positive {
                negative[l.var] += 1;
            }
        }
    }
    for var in 0..n {
        if !(2..=3).contains(&total[var]) {
            violations.push(InstanceViolation::OccurrenceCount { var, count: total[var] });
        }
        if negative[var] != 1 {
            violations.push(InstanceViolation::NegativeCount { var, count: negative[var] });
        }
    }
    violations.extend(clause_violations);
    InstanceReport { violations }
}
