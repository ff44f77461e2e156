use crate::{SatError, SatInstance, TruthAssignment};

/// Largest variable count accepted by [`brute_force_sat`].
pub const MAX_BRUTE_FORCE_VARIABLES: usize = 30;

/// The first satisfying assignment in lexicographic order (variable 0 is the
/// most significant bit, false before true), or `None`.
pub fn brute_force_sat(psi: &SatInstance) -> Result<Option<TruthAssignment>, SatError> {
    let n = psi.variable_count();
    if n > MAX_BRUTE_FORCE_VARIABLES {
        return Err(SatError::TooManyVariables { count: n, limit: MAX_BRUTE_FORCE_VARIABLES });
    }
    let bit = |var: usize| 1u64 << (n - 1 - var);
    let masks: Vec<(u64, u64)> = psi
        .clauses
        .iter()
        .map(|c| {
            c.literals.iter().fold((0, 0), |(pos, neg), l| {
                if l.positive {
                    (pos | bit(l.var), neg)
                } else {
                    (pos, neg | bit(l.var))
                }
            })
        })
        .collect();
    let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    for code in 0..=full {
        if masks.iter().all(|&(pos, neg)| code & pos != 0 || !code & neg != 0) {
            return Ok(Some(TruthAssignment::from_code(n, code)));
        }
    }
    Ok(None)
}
