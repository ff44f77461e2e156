//! Coordinates of the variable-gadget interior and its hop distances to the
//! three pendant vertices `a1`, `a2`, `a3`.

/// One interior vertex: label, coordinates and `(d(v,a1), d(v,a2), d(v,a3))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InteriorRow {
    pub label: &'static str,
    pub x: &'static str,
    pub y: &'static str,
    pub d: [u32; 3],
}

const fn row(label: &'static str, x: &'static str, y: &'static str, d: [u32; 3]) -> InteriorRow {
    InteriorRow { label, x, y, d }
}

/// The tabulated interior of the variable gadget. `T1` is listed once.
pub const VARIABLE_INTERIOR: [InteriorRow; 22] = [
    row("T1", "-0.7", "1.61", [4, 3, 3]),
    row("T2", "-0.45", "0.85", [4, 3, 3]),
    row("N1", "-0.36", "0.65", [3, 3, 3]),
    row("F", "-0.35", "-0.75", [3, 3, 3]),
    row("a1", "1.57", "-0.74", [0, 4, 3]),
    row("a2", "-1.68", "-0.86", [4, 0, 4]),
    row("a3", "1.62", "0.34", [3, 4, 0]),
    row("b1", "1.55", "-0.81", [1, 4, 3]),
    row("b2", "-1.62", "-0.9", [4, 1, 4]),
    row("b3", "1.6", "0.26", [3, 4, 1]),
    row("t1_0", "-0.15", "-1.11", [2, 4, 3]),
    row("f1_0", "0.62", "-0.48", [1, 3, 2]),
    row("t2_0", "-1.35", "0.9", [4, 2, 4]),
    row("f2_0", "-1.08", "-0.06", [3, 1, 3]),
    row("t3_0", "0.28", "1.43", [3, 4, 2]),
    row("f3_0", "0.64", "0.51", [2, 3, 1]),
    row("t1_1", "-0.25", "-1.87", [3, 5, 4]),
    row("f1_1", "0.79", "-1.46", [2, 4, 3]),
    row("t2_1", "-1.97", "1.27", [5, 3, 5]),
    row("f2_1", "-2.03", "0.14", [4, 2, 4]),
    row("t3_1", "0.58", "2.12", [4, 5, 3]),
    row("f3_1", "1.27", "1.28", [3, 4, 2]),
];

/// Coordinates actually used by the tiles where they differ from the table.
/// `b1` and `b3` sit at distance exactly 0.07 and 0.08 from `a1`, `a3` in the
/// table; the nudges keep them off the Gabriel disk of `a_i f_i0`.
pub const INTERIOR_NUDGES: [(&str, &str, &str); 2] = [("b1", "1.55", "-0.807"), ("b3", "1.6", "0.262")];

/// The interior vertex `N2`, which has no tabulated row. It is adjacent to
/// `N1`, `F` and the three `f_i0`, and to nothing else.
pub const N2_POSITION: (&str, &str) = ("-0.09", "-0.1");
