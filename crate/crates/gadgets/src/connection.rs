//! Pair orientations, connection vectors and tile types.

use std::fmt;
use std::str::FromStr;

use crate::gadget::Polarity;

/// Order of a pair's t- and f-vertex along the clockwise boundary walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    TF,
    FT,
}

impl Orientation {
    pub fn flipped(self) -> Orientation {
        match self {
            Orientation::TF => Orientation::FT,
            Orientation::FT => Orientation::TF,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::TF => "TF",
            Orientation::FT => "FT",
        })
    }
}

/// What a side carries: an oriented pair or nothing (ε).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Link {
    TF,
    FT,
    Empty,
}

impl Link {
    pub fn orientation(self) -> Option<Orientation> {
        match self {
            Link::TF => Some(Orientation::TF),
            Link::FT => Some(Orientation::FT),
            Link::Empty => None,
        }
    }
}

impl From<Orientation> for Link {
    fn from(o: Orientation) -> Link {
        match o {
            Orientation::TF => Link::TF,
            Orientation::FT => Link::FT,
        }
    }
}

/// One component of a connection vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entry {
    pub link: Link,
    pub polarity: Polarity,
}

impl Entry {
    pub const EMPTY: Entry = Entry { link: Link::Empty, polarity: Polarity::Unmarked };

    pub fn new(orientation: Orientation, polarity: Polarity) -> Entry {
        Entry { link: orientation.into(), polarity }
    }

    /// The entry with its orientation reversed.
    pub fn flipped(self) -> Entry {
        match self.link.orientation() {
            Some(o) => Entry::new(o.flipped(), self.polarity),
            None => self,
        }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let link = match self.link {
            Link::TF => "TF",
            Link::FT => "FT",
            Link::Empty => "ε",
        };
        write!(f, "({link},{})", self.polarity)
    }
}

/// Entries for the top, right, bottom and left side, in that order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConnectionVector(pub [Entry; 4]);

impl ConnectionVector {
    pub const EMPTY: ConnectionVector = ConnectionVector([Entry::EMPTY; 4]);

    /// The vector of the tile rotated by `quarter_turns · 90°` counter-clockwise.
    pub fn rotated(self, quarter_turns: usize) -> ConnectionVector {
        let mut out = self.0;
        for (i, e) in out.iter_mut().enumerate() {
            *e = self.0[(i + quarter_turns) % 4];
        }
        ConnectionVector(out)
    }

    /// The vector of the tile mirrored by `(x, y) ↦ (−x, y)`.
    pub fn mirrored_h(self) -> ConnectionVector {
        let [a1, a2, a3, a4] = self.0;
        ConnectionVector([a1.flipped(), a4.flipped(), a3.flipped(), a2.flipped()])
    }

    /// Canonical representative of the rotation class.
    pub fn tile_type(self) -> TileType {
        TileType((0..4).map(|k| self.rotated(k)).min().expect("four rotations"))
    }
}

impl fmt::Display for ConnectionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Entry::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for ConnectionVector {
    type Err = String;

    /// Reads `[(TF,⊕),(ε,∅),(FT,⊖),(FT,⊕)]`. The ASCII spellings `e`, `+`,
    /// `-` and `0` are accepted for `ε`, `⊕`, `⊖` and `∅`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let mut entries = Vec::new();
        for chunk in body.split(')') {
            let chunk = chunk.trim().trim_start_matches(',').trim().trim_start_matches('(');
            if chunk.is_empty() {
                continue;
            }
            let (link, mark) = chunk.split_once(',').ok_or_else(|| format!("malformed entry {chunk:?}"))?;
            let link = match link.trim() {
                "TF" => Link::TF,
                "FT" => Link::FT,
                "ε" | "e" => Link::Empty,
                other => return Err(format!("unknown orientation {other:?}")),
            };
            let polarity = match mark.trim() {
                "⊕" | "+" => Polarity::Plus,
                "⊖" | "-" => Polarity::Minus,
                "∅" | "0" => Polarity::Unmarked,
                other => return Err(format!("unknown mark {other:?}")),
            };
            entries.push(Entry { link, polarity });
        }
        let entries: [Entry; 4] =
            entries.try_into().map_err(|v: Vec<Entry>| format!("expected 4 entries, found {}", v.len()))?;
        Ok(ConnectionVector(entries))
    }
}

/// A rotation class of connection vectors, stored as its lexicographically
/// smallest member under `TF < FT < ε` and `⊕ < ⊖ < ∅`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TileType(ConnectionVector);

impl TileType {
    pub fn representative(self) -> ConnectionVector {
        self.0
    }
}

impl fmt::Display for TileType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
