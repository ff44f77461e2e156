//! Landmark file format: one `s <id>` line per landmark.

use std::fmt::Write as _;

use crate::{LandmarkSet, MdimError};

/// Reads a landmark set. Blank lines and `#` comments are skipped.
pub fn parse_landmarks(text: &str) -> Result<LandmarkSet, MdimError> {
    let mut ids = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let mut tokens = content.split_whitespace();
        if tokens.next() != Some("s") {
            return Err(MdimError::Parse { line, message: "expected a line of the form `s <id>`".into() });
        }
        let token = tokens.next().ok_or(MdimError::Parse { line, message: "missing vertex id".into() })?;
        let id = token.parse().map_err(|_| MdimError::Parse { line, message: format!("invalid vertex id {token:?}") })?;
        if tokens.next().is_some() {
            return Err(MdimError::Parse { line, message: "trailing tokens".into() });
        }
        ids.push(id);
    }
    LandmarkSet::new(ids)
}

/// Writes a landmark set in ascending order.
pub fn write_landmarks(set: &LandmarkSet) -> String {
    let mut out = String::new();
    for v in set.vertices() {
        let _ = writeln!(out, "s {v}");
    }
    out
}
