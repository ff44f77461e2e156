//! Computational checks of the reduction: golden distance tables, the
//! structural lemmas, the satisfiability equivalence and the supporting
//! solver, preprocessing and spanner properties.

mod fixtures;
mod pipeline;
mod report;
mod suites;
mod tables;

pub use fixtures::{
    corpus_dir, drawing, figure_one, ArcPath, instance, load_corpus, save_corpus_entry, unsatisfiable, CorpusEntry,
};
pub use pipeline::{verify_reduction, ReductionReport};
pub use report::{write_summary, Check, SuiteReport};
pub use suites::{
    degree_check, golden_clause_distances, golden_variable_distances, gudg_check, landmark_shape_rejected,
    lemma_min3, lemma_resolve_all, lemma_suites, lemma_t1t2, preprocessing, solver_oracle, spanner_property,
    theorem_equivalence, MAX_EQUIVALENCE_VARIABLES,
};
pub use tables::clause_table;

/// Errors that stop a suite from running at all.
#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Assembly(#[from] assembler::AssemblyError),
    #[error(transparent)]
    Mdim(#[from] mdim::MdimError),
    #[error(transparent)]
    Sat(#[from] sat3::SatError),
    #[error(transparent)]
    Geom(#[from] geom_graph::GeomError),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("{0}")]
    Io(String),
}
