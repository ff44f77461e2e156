//! Drawing file format: `n <vertex> <x> <y>` lines, then
//! `p <u> <v> <x1> <y1> … <xk> <yk>` lines. Blank lines and `#` comments are
//! skipped.

use std::fmt::Write as _;

use crate::{DrawError, Drawing, EdgePath, GridPoint};

fn parse_err(line: usize, message: impl Into<String>) -> DrawError {
    DrawError::Parse { line, message: message.into() }
}

/// Reads a drawing. Vertices must be numbered `0..n` without gaps.
pub fn parse_drawing(text: &str) -> Result<Drawing, DrawError> {
    let mut placed: Vec<Option<GridPoint>> = Vec::new();
    let mut drawing = Drawing::default();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let tag = tokens.next().unwrap_or_default();
        let rest: Vec<&str> = tokens.collect();
        match tag {
            "n" => {
                if rest.len() != 3 {
                    return Err(parse_err(line, "expected `n <vertex> <x> <y>`"));
                }
                let v: usize = rest[0].parse().map_err(|_| parse_err(line, format!("invalid vertex {:?}", rest[0])))?;
                let x = parse_int(line, rest[1])?;
                let y = parse_int(line, rest[2])?;
                if placed.len() <= v {
                    placed.resize(v + 1, None);
                }
                if placed[v].replace(GridPoint::new(x, y)).is_some() {
                    return Err(parse_err(line, format!("vertex {v} placed twice")));
                }
            }
            "p" => {
                if rest.len() < 4 || rest.len() % 2 != 0 {
                    return Err(parse_err(line, "expected `p <u> <v>` followed by coordinate pairs"));
                }
                let u: usize = rest[0].parse().map_err(|_| parse_err(line, format!("invalid vertex {:?}", rest[0])))?;
                let v: usize = rest[1].parse().map_err(|_| parse_err(line, format!("invalid vertex {:?}", rest[1])))?;
                let coords: Vec<i64> = rest[2..].iter().map(|t| parse_int(line, t)).collect::<Result<_, _>>()?;
                let points = coords.chunks(2).map(|c| GridPoint::new(c[0], c[1])).collect();
                if drawing.paths.insert((u, v), EdgePath::new(points)).is_some() {
                    return Err(parse_err(line, format!("path ({u}, {v}) given twice")));
                }
            }
            other => return Err(parse_err(line, format!("unknown record {other:?}"))),
        }
    }
    drawing.placement = placed
        .into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or_else(|| parse_err(0, format!("vertex {v} has no placement"))))
        .collect::<Result<_, _>>()?;
    Ok(drawing)
}

fn parse_int(line: usize, token: &str) -> Result<i64, DrawError> {
    token.parse().map_err(|_| parse_err(line, format!("invalid coordinate {token:?}")))
}

/// Writes a drawing: placements in vertex order, then paths by arc.
pub fn write_drawing(d: &Drawing) -> String {
    let mut out = String::new();
    for (v, p) in d.placement.iter().enumerate() {
        let _ = writeln!(out, "n {v} {} {}", p.x, p.y);
    }
    for (&(u, v), path) in &d.paths {
        let _ = write!(out, "p {u} {v}");
        for p in &path.points {
            let _ = write!(out, " {} {}", p.x, p.y);
        }
        out.push('\n');
    }
    out
}
