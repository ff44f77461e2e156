//! Running every reduction suite on one instance.

use assembler::{build, Assembly, PendantChoice};

use crate::fixtures::CorpusEntry;
use crate::suites::{
    degree_check, golden_clause_distances, golden_variable_distances, gudg_check, lemma_suites, theorem_equivalence,
};
use crate::{SuiteReport, VerifyError};

/// All suite outcomes for one instance.
#[derive(Clone, Debug)]
pub struct ReductionReport {
    pub name: String,
    pub variables_after_shortening: usize,
    pub vertices: usize,
    pub suites: Vec<SuiteReport>,
}

impl ReductionReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.name == name)
    }
}

fn tagged(mut r: SuiteReport, choice: PendantChoice) -> SuiteReport {
    r.name = format!("{}[{}]", r.name, if choice == PendantChoice::A { "a" } else { "b" });
    r
}

/// Builds the assembly and runs the geometric, golden, lemma and theorem
/// suites, the last three under both pendant choices.
pub fn verify_reduction(entry: &CorpusEntry) -> Result<(Assembly, ReductionReport), VerifyError> {
    let a = build(&entry.instance, &entry.drawing)?;
    let mut suites = vec![gudg_check(&a), degree_check(&a), golden_variable_distances(&a)?];
    for choice in [PendantChoice::A, PendantChoice::B] {
        suites.push(tagged(golden_clause_distances(&a, choice)?, choice));
        for s in lemma_suites(&a, choice)? {
            suites.push(tagged(s, choice));
        }
        suites.push(tagged(theorem_equivalence(&entry.instance, &a, choice)?, choice));
    }
    let report = ReductionReport {
        name: entry.name.clone(),
        variables_after_shortening: a.instance.variable_count(),
        vertices: a.vertex_count(),
        suites,
    };
    Ok((a, report))
}
