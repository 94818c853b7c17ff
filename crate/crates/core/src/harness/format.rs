//! Plain-text polytope files.
//!
//! ```text
//! # P_2
//! 3 2
//! 0 0
//! 2 0
//! 0 1
//! ```
//!
//! The header is `<num_vertices> <ambient_rank>`, followed by one point per
//! line. Anything after `#` is ignored. Listed points need not be extreme;
//! the polytope is their convex hull.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice_algebra::IntVector;
use crate::polytope::LatticePolytope;

fn tokens(line: &str) -> Vec<&str> {
    let body = line.split('#').next().unwrap_or("");
    body.split_whitespace().collect()
}

fn integer(tok: &str, line: usize) -> Result<BigInt> {
    tok.parse::<BigInt>()
        .map_err(|_| Error::parse(line, format!("invalid integer `{tok}`")))
}

pub fn parse_polytope(text: &str) -> Result<LatticePolytope> {
    let mut rows = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, tokens(l)))
        .filter(|(_, t)| !t.is_empty());
    let (header_line, header) = rows.next().ok_or_else(|| Error::parse(1, "missing header line"))?;
    if header.len() != 2 {
        return Err(Error::parse(
            header_line,
            format!("header needs 2 fields, found {}", header.len()),
        ));
    }
    let count = header[0]
        .parse::<usize>()
        .map_err(|_| Error::parse(header_line, format!("invalid vertex count `{}`", header[0])))?;
    let rank = header[1]
        .parse::<usize>()
        .map_err(|_| Error::parse(header_line, format!("invalid ambient rank `{}`", header[1])))?;
    if count == 0 {
        return Err(Error::parse(header_line, "a polytope needs at least one vertex"));
    }
    let mut points = Vec::with_capacity(count);
    let mut last_line = header_line;
    for (line, toks) in rows {
        if points.len() == count {
            return Err(Error::parse(line, format!("expected {count} rows, found more")));
        }
        if toks.len() != rank {
            return Err(Error::parse(
                line,
                format!("expected {rank} coordinates, found {}", toks.len()),
            ));
        }
        let coords = toks.iter().map(|t| integer(t, line)).collect::<Result<Vec<_>>>()?;
        points.push(IntVector::new(coords));
        last_line = line;
    }
    if points.len() != count {
        return Err(Error::parse(
            last_line + 1,
            format!("expected {count} rows, found {}", points.len()),
        ));
    }
    LatticePolytope::hull(&points, rank)
}

/// Canonical text: the sorted vertex set, with a trailing newline.
pub fn serialize_polytope(p: &LatticePolytope) -> String {
    let mut out = format!("{} {}\n", p.vertices().len(), p.ambient_rank());
    for v in p.vertices() {
        let row: Vec<String> = v.coords().iter().map(BigInt::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_p2() {
        let p = parse_polytope("3 2\n0 0\n2 0\n0 1\n").unwrap();
        assert_eq!(p, LatticePolytope::from_i64_points(&[&[0, 0], &[2, 0], &[0, 1]]).unwrap());
    }

    #[test]
    fn round_trip_is_canonical() {
        let text = "# square with a midpoint\n5 2\n1 1\n0 0\n 1 0 \n0 1\n\n1 0 # again\n";
        let p = parse_polytope(text).unwrap();
        let canonical = "4 2\n0 0\n0 1\n1 0\n1 1\n";
        assert_eq!(serialize_polytope(&p), canonical);
        assert_eq!(parse_polytope(canonical).unwrap(), p);
    }

    #[test]
    fn errors_are_line_numbered() {
        assert_eq!(
            parse_polytope("2 2\n0 0\n"),
            Err(Error::Parse {
                line: 3,
                message: "expected 2 rows, found 1".into()
            })
        );
        assert!(matches!(parse_polytope("1 2\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_polytope("1 2\n0 0 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_polytope("1 2\n0 0\n1 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_polytope(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_polytope("3\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn big_coordinates_survive() {
        let text = "2 1\n0\n123456789012345678901234567890\n";
        assert_eq!(serialize_polytope(&parse_polytope(text).unwrap()), text);
    }
}
