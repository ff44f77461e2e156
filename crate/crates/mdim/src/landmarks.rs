use std::fmt;

use crate::MdimError;

/// An ordered set of landmark vertices, stored ascending without duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LandmarkSet(Vec<usize>);

impl LandmarkSet {
    /// Builds a set, rejecting repeated vertices.
    pub fn new<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self, MdimError> {
        let mut list: Vec<usize> = vertices.into_iter().collect();
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(MdimError::DuplicateLandmark(w[0]));
        }
        Ok(LandmarkSet(list))
    }

    /// The empty set.
    pub fn empty() -> Self {
        LandmarkSet(Vec::new())
    }

    /// Members in ascending order.
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Number of landmarks.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Whether the set is empty.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Whether `v` is a member.
    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// The union with another set.
    pub fn union(&self, other: &LandmarkSet) -> LandmarkSet {
        let mut list: Vec<usize> = self.0.iter().chain(&other.0).copied().collect();
        list.sort_unstable();
        list.dedup();
        LandmarkSet(list)
    }

    /// A copy with `v` added.
    pub fn with(&self, v: usize) -> LandmarkSet {
        self.union(&LandmarkSet(vec![v]))
    }

    pub(crate) fn check_range(&self, count: usize) -> Result<(), MdimError> {
        match self.0.last() {
            Some(&vertex) if vertex >= count => Err(MdimError::VertexOutOfRange { vertex, count }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for LandmarkSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
