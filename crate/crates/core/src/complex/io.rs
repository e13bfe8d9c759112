use std::fmt::Write as _;

use super::OrderedTriangulation;
use crate::error::{Error, Result};

/// Parses the plain triangulation format:
///
/// ```text
/// dim 4
/// vertices 6
/// 0 1 2 3 4
/// ...
/// ```
///
/// Blank lines and `#` comments are ignored. Facets must be ascending.
pub fn parse_triangulation(text: &str) -> Result<OrderedTriangulation> {
    let mut dim = None;
    let mut vertices = None;
    let mut facets = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line: no + 1, msg };
        let mut words = line.split_whitespace();
        let first = words.next().unwrap();
        match first {
            "dim" | "vertices" => {
                let v: usize = words
                    .next()
                    .ok_or_else(|| err(format!("missing value after `{first}`")))?
                    .parse()
                    .map_err(|e| err(format!("bad integer: {e}")))?;
                if words.next().is_some() {
                    return Err(err("trailing tokens".into()));
                }
                if first == "dim" {
                    dim = Some(v);
                } else {
                    vertices = Some(v);
                }
            }
            _ => {
                let d = dim.ok_or_else(|| err("facet before `dim` header".into()))?;
                let facet = line
                    .split_whitespace()
                    .map(|w| w.parse::<usize>().map_err(|e| err(format!("bad vertex `{w}`: {e}"))))
                    .collect::<Result<Vec<_>>>()?;
                if facet.len() != d + 1 {
                    return Err(err(format!("expected {} vertices, found {}", d + 1, facet.len())));
                }
                facets.push(facet);
            }
        }
    }
    let dim = dim.ok_or(Error::Parse { line: 0, msg: "missing `dim` header".into() })?;
    let vertices = vertices.ok_or(Error::Parse { line: 0, msg: "missing `vertices` header".into() })?;
    OrderedTriangulation::validate(dim, vertices, facets)
}

pub fn write_triangulation(t: &OrderedTriangulation) -> String {
    let mut s = String::new();
    writeln!(s, "dim {}", t.dim()).unwrap();
    writeln!(s, "vertices {}", t.v0()).unwrap();
    for f in t.facets() {
        let words: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        writeln!(s, "{}", words.join(" ")).unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::boundary_of_5simplex;

    #[test]
    fn round_trip() {
        let s = boundary_of_5simplex();
        let back = parse_triangulation(&write_triangulation(&s)).unwrap();
        assert_eq!(back.facets(), s.facets());
        assert_eq!(back.eps(), s.eps());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_triangulation("vertices 3\n0 1 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_triangulation("dim 2\nvertices 3\n0 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_triangulation("dim 2\nvertices 3\n0 1 x\n"), Err(Error::Parse { .. })));
    }
}
