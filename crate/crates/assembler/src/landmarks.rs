//! Forced landmarks and the translation between truth assignments and
//! landmark sets.

use mdim::LandmarkSet;
use sat3::TruthAssignment;

use crate::{Assembly, AssemblyError};

/// The vertices of a variable copy one of which completes its landmarks.
pub const FOURTH_LANDMARK_GROUP: [&str; 5] = ["T1", "T2", "N1", "N2", "F"];

/// Which vertex of each pendant pair `aᵢ, bᵢ` is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PendantChoice {
    A,
    B,
}

/// One vertex per pendant pair per variable copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcedLandmarks {
    /// Per variable, the chosen pendant vertices for `i = 1, 2, 3`.
    pub per_variable: Vec<Vec<usize>>,
}

impl ForcedLandmarks {
    pub fn len(&self) -> usize {
        self.per_variable.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn set(&self) -> LandmarkSet {
        LandmarkSet::new(self.per_variable.iter().flatten().copied()).expect("pendants of distinct copies are distinct")
    }
}

/// The same pendant choice in every variable copy.
pub fn forced_landmarks(a: &Assembly, choice: PendantChoice) -> ForcedLandmarks {
    forced_landmarks_mixed(a, &vec![choice; a.variable_copies.len()])
}

/// A pendant choice per variable copy.
pub fn forced_landmarks_mixed(a: &Assembly, choices: &[PendantChoice]) -> ForcedLandmarks {
    assert_eq!(choices.len(), a.variable_copies.len(), "one choice per variable");
    let per_variable = choices
        .iter()
        .enumerate()
        .map(|(x, &choice)| {
            let copy = a.variable_copy(x);
            let letter = if choice == PendantChoice::A { "a" } else { "b" };
            (1..=3).map(|i| copy.vertex(&format!("{letter}{i}")).expect("every variable copy has three pendant pairs")).collect()
        })
        .collect();
    ForcedLandmarks { per_variable }
}

/// Per variable copy, the global ids of `T₁, T₂, N₁, N₂, F`.
pub fn fourth_landmark_groups(a: &Assembly) -> Vec<Vec<usize>> {
    (0..a.variable_copies.len())
        .map(|x| {
            let copy = a.variable_copy(x);
            FOURTH_LANDMARK_GROUP.iter().map(|n| copy.vertex(n).expect("interior vertex")).collect()
        })
        .collect()
}

/// The forced landmarks plus `T₁` of every true variable and `F` of every
/// false one.
pub fn assignment_to_landmarks(a: &Assembly, forced: &ForcedLandmarks, assignment: &TruthAssignment) -> LandmarkSet {
    assert_eq!(assignment.len(), a.variable_copies.len(), "assignment covers every variable");
    let extra = (0..assignment.len()).map(|x| {
        let name = if assignment.value(x) { "T1" } else { "F" };
        a.variable_copy(x).vertex(name).expect("interior vertex")
    });
    forced.set().union(&LandmarkSet::new(extra).expect("distinct copies"))
}

/// Reads an assignment off a landmark set made of the forced landmarks and
/// one of `T₁, T₂, N₁, N₂, F` per variable copy: a variable is false exactly
/// when its extra landmark is `F`.
pub fn landmarks_to_assignment(
    a: &Assembly,
    forced: &ForcedLandmarks,
    set: &LandmarkSet,
) -> Result<TruthAssignment, AssemblyError> {
    let forced_set = forced.set();
    if let Some(&v) = forced_set.vertices().iter().find(|&&v| !set.contains(v)) {
        return Err(AssemblyError::LandmarkShape(format!("forced landmark {} missing", a.names[v])));
    }
    let groups = fourth_landmark_groups(a);
    let mut values = Vec::with_capacity(groups.len());
    for (x, group) in groups.iter().enumerate() {
        let chosen: Vec<usize> = group.iter().copied().filter(|&v| set.contains(v)).collect();
        if chosen.len() != 1 {
            return Err(AssemblyError::LandmarkShape(format!(
                "variable copy {x} holds {} of T1, T2, N1, N2, F",
                chosen.len()
            )));
        }
        values.push(chosen[0] != group[4]);
    }
    let expected = forced_set.len() + groups.len();
    if set.len() != expected {
        return Err(AssemblyError::LandmarkShape(format!("{} landmarks, expected {expected}", set.len())));
    }
    Ok(TruthAssignment(values))
}
