//! Hand-built instances and the committed random corpus.

use std::path::{Path, PathBuf};

use orthodraw::{parse_drawing, write_drawing, Drawing, EdgePath, GridPoint};
use sat3::{parse_dimacs, write_dimacs, Clause, Literal, NameRules, SatInstance};

use crate::VerifyError;

/// An instance with a drawing of its clause-variable graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub instance: SatInstance,
    pub drawing: Drawing,
}

/// Builds an instance from signed 1-based literals; clauses are named
/// `c1, c2, …`.
pub fn instance(vars: &[&str], clauses: &[&[i64]]) -> SatInstance {
    let clauses = clauses
        .iter()
        .enumerate()
        .map(|(j, lits)| {
            let lits = lits.iter().map(|&l| Literal { var: l.unsigned_abs() as usize - 1, positive: l > 0 }).collect();
            Clause::new(format!("c{}", j + 1), lits)
        })
        .collect();
    SatInstance::new(vars.iter().map(|s| s.to_string()).collect(), clauses)
}

/// An arc `(u, v)` with the grid points of its path.
pub type ArcPath<'a> = ((usize, usize), &'a [(i64, i64)]);

/// A drawing from vertex positions and arc paths.
pub fn drawing(placement: &[(i64, i64)], paths: &[ArcPath<'_>]) -> Drawing {
    let mut d = Drawing::new(placement.iter().map(|&(x, y)| GridPoint::new(x, y)).collect());
    for &((u, v), p) in paths {
        d.insert_path(u, v, EdgePath::new(p.iter().map(|&(x, y)| GridPoint::new(x, y)).collect()));
    }
    d
}

/// `{x, y, ¬z}, {¬x, ¬y, z}` drawn with the x paths of length 3, so that
/// shortening adds two variables.
pub fn figure_one() -> CorpusEntry {
    let instance = instance(&["x", "y", "z"], &[&[1, 2, -3], &[-1, -2, 3]]);
    let drawing = drawing(
        &[(-2, 0), (0, 0), (1, 0), (0, 1), (0, -1)],
        &[
            ((0, 3), &[(-2, 0), (-2, 1), (-1, 1), (0, 1)]),
            ((0, 4), &[(-2, 0), (-2, -1), (-1, -1), (0, -1)]),
            ((1, 3), &[(0, 0), (0, 1)]),
            ((1, 4), &[(0, 0), (0, -1)]),
            ((2, 3), &[(1, 0), (1, 1), (0, 1)]),
            ((2, 4), &[(1, 0), (1, -1), (0, -1)]),
        ],
    );
    CorpusEntry { name: "figure-one".into(), instance, drawing }
}

/// `(a ∨ b), (¬a ∨ c), (¬b ∨ c), (e ∨ f), (¬e ∨ d), (¬f ∨ d), (¬c ∨ ¬d)`:
/// the first three clauses force c, the next three force d, the last
/// forbids both. Every path has length 1.
pub fn unsatisfiable() -> CorpusEntry {
    let instance = instance(
        &["a", "b", "c", "d", "e", "f"],
        &[&[1, 2], &[-1, 3], &[-2, 3], &[5, 6], &[-5, 4], &[-6, 4], &[-3, -4]],
    );
    // a b c d e f, then c1 … c7.
    let at = [(0, 0), (2, 0), (1, 1), (1, 3), (0, 4), (2, 4), (1, 0), (0, 1), (2, 1), (1, 4), (0, 3), (2, 3), (1, 2)];
    let arcs = [(0, 6), (0, 7), (1, 6), (1, 8), (2, 7), (2, 8), (2, 12), (3, 10), (3, 11), (3, 12), (4, 9), (4, 10), (5, 9), (5, 11)];
    let mut d = Drawing::new(at.iter().map(|&(x, y)| GridPoint::new(x, y)).collect());
    for (u, v) in arcs {
        let (p, q) = (at[u], at[v]);
        d.insert_path(u, v, EdgePath::new(vec![GridPoint::new(p.0, p.1), GridPoint::new(q.0, q.1)]));
    }
    CorpusEntry { name: "unsatisfiable".into(), instance, drawing: d }
}

/// The directory holding the committed corpus.
pub fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

/// Reads every `<name>.cnf` with its `<name>.draw` from `dir`, sorted by
/// name.
pub fn load_corpus(dir: &Path) -> Result<Vec<CorpusEntry>, VerifyError> {
    let io = |e: std::io::Error| VerifyError::Io(format!("{}: {e}", dir.display()));
    let mut names: Vec<String> = std::fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok())
        .filter_map(|e| e.file_name().to_str().and_then(|n| n.strip_suffix(".cnf")).map(str::to_string))
        .collect();
    names.sort();
    names
        .into_iter()
        .map(|name| {
            let cnf = std::fs::read_to_string(dir.join(format!("{name}.cnf"))).map_err(io)?;
            let draw = std::fs::read_to_string(dir.join(format!("{name}.draw"))).map_err(io)?;
            let instance = parse_dimacs(&cnf, NameRules::Input)?;
            let drawing = parse_drawing(&draw).map_err(|e| VerifyError::Io(format!("{name}.draw: {e}")))?;
            Ok(CorpusEntry { name, instance, drawing })
        })
        .collect()
}

/// Writes `<name>.cnf` and `<name>.draw` into `dir`.
pub fn save_corpus_entry(dir: &Path, entry: &CorpusEntry) -> Result<(), VerifyError> {
    let io = |e: std::io::Error| VerifyError::Io(format!("{}: {e}", dir.display()));
    std::fs::create_dir_all(dir).map_err(io)?;
    std::fs::write(dir.join(format!("{}.cnf", entry.name)), write_dimacs(&entry.instance)).map_err(io)?;
    std::fs::write(dir.join(format!("{}.draw", entry.name)), write_drawing(&entry.drawing)).map_err(io)?;
    Ok(())
}
