//! DIMACS CNF with optional name comments.
//!
//! `c var <i> <name>` names variable `i` (1-based) and `c clause <j> <name>`
//! names clause `j`. Unnamed variables become `x<i>` and unnamed clauses
//! `c<j>`. Clauses may span lines and end with `0`.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::{Clause, Literal, SatError, SatInstance, RESERVED_MARK};

/// Whether names from the reserved generated namespace are accepted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NameRules {
    /// User input: reserved names are rejected.
    Input,
    /// Output of an earlier shortening run: reserved names are accepted.
    AllowReserved,
}

fn parse_err(line: usize, message: impl Into<String>) -> SatError {
    SatError::Parse { line, message: message.into() }
}

/// Parses a DIMACS CNF file. The instance is not validated.
pub fn parse_dimacs(text: &str, rules: NameRules) -> Result<SatInstance, SatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut var_names: HashMap<usize, String> = HashMap::new();
    let mut clause_names: HashMap<usize, String> = HashMap::new();
    let mut clauses: Vec<Vec<Literal>> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut last_line = 0;
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        last_line = line;
        let content = raw.trim();
        if content.is_empty() || content == "%" {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens[0] == "c" {
            if tokens.len() == 4 && (tokens[1] == "var" || tokens[1] == "clause") {
                let id: usize = tokens[2].parse().map_err(|_| parse_err(line, "invalid index in name comment"))?;
                let name = tokens[3].to_string();
                if rules == NameRules::Input && name.contains(RESERVED_MARK) {
                    return Err(SatError::ReservedName(name));
                }
                let table = if tokens[1] == "var" { &mut var_names } else { &mut clause_names };
                if id == 0 || table.insert(id, name).is_some() {
                    return Err(parse_err(line, format!("{} {id} named twice or index 0", tokens[1])));
                }
            }
            continue;
        }
        if tokens[0] == "p" {
            if header.is_some() {
                return Err(parse_err(line, "second problem line"));
            }
            if tokens.len() != 4 || tokens[1] != "cnf" {
                return Err(parse_err(line, "expected `p cnf <variables> <clauses>`"));
            }
            let n = tokens[2].parse().map_err(|_| parse_err(line, "invalid variable count"))?;
            let m = tokens[3].parse().map_err(|_| parse_err(line, "invalid clause count"))?;
            header = Some((n, m));
            continue;
        }
        let (n, _) = header.ok_or_else(|| parse_err(line, "clause before the problem line"))?;
        for token in tokens {
            let value: i64 = token.parse().map_err(|_| parse_err(line, format!("invalid literal {token:?}")))?;
            if value == 0 {
                clauses.push(std::mem::take(&mut current));
                continue;
            }
            let var = value.unsigned_abs() as usize;
            if var > n {
                return Err(parse_err(line, format!("literal {value} exceeds {n} variables")));
            }
            current.push(Literal { var: var - 1, positive: value > 0 });
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(last_line, "missing problem line"))?;
    if !current.is_empty() {
        return Err(parse_err(last_line, "last clause lacks its terminating 0"));
    }
    if clauses.len() != m {
        return Err(parse_err(last_line, format!("header announces {m} clauses, found {}", clauses.len())));
    }
    if let Some(id) = var_names.keys().copied().filter(|&id| id > n).min() {
        return Err(parse_err(last_line, format!("name given for variable {id} beyond {n}")));
    }
    if let Some(id) = clause_names.keys().copied().filter(|&id| id > m).min() {
        return Err(parse_err(last_line, format!("name given for clause {id} beyond {m}")));
    }
    let variables = (1..=n).map(|i| var_names.remove(&i).unwrap_or_else(|| format!("x{i}"))).collect();
    let clauses = clauses
        .into_iter()
        .enumerate()
        .map(|(j, lits)| Clause::new(clause_names.remove(&(j + 1)).unwrap_or_else(|| format!("c{}", j + 1)), lits))
        .collect();
    Ok(SatInstance { variables, clauses })
}

/// Writes DIMACS CNF with name comments for every variable and clause.
pub fn write_dimacs(psi: &SatInstance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p cnf {} {}", psi.variable_count(), psi.clause_count());
    for (i, name) in psi.variables.iter().enumerate() {
        let _ = writeln!(out, "c var {} {name}", i + 1);
    }
    for (j, clause) in psi.clauses.iter().enumerate() {
        let _ = writeln!(out, "c clause {} {}", j + 1, clause.name);
    }
    for clause in &psi.clauses {
        for l in &clause.literals {
            let v = l.var as i64 + 1;
            let _ = write!(out, "{} ", if l.positive { v } else { -v });
        }
        out.push_str("0\n");
    }
    out
}
