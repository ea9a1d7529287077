//! Table files:
//!
//! ```text
//! # comments start with '#'
//! rank 2
//! radius 1
//! e,x,X 2
//! e,x,X,y,Y 1/3
//! ```
//!
//! One record per line: a round-graph in comma-separated form, whitespace,
//! and a value.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::rational::{format_decimal, parse_decimal, parse_rational, Q};
use crate::words::Basis;

use super::round_graph::RoundGraph;
use super::table::WeightTable;

fn parse_with(text: &str, value: impl Fn(&str) -> Option<Q>) -> Result<WeightTable> {
    let mut rank: Option<usize> = None;
    let mut table: Option<WeightTable> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let bad = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(t) = table.as_mut() {
            let (graph, v) = line
                .rsplit_once(char::is_whitespace)
                .ok_or_else(|| bad(format!("expected '<round-graph> <value>', got '{line}'")))?;
            let v = value(v).ok_or_else(|| bad(format!("bad value '{v}'")))?;
            let graph = RoundGraph::parse(t.basis(), t.radius(), graph.trim())
                .map_err(|e| e.at_line(line_no))?;
            t.add(graph, v).map_err(|e| e.at_line(line_no))?;
        } else if let Some(r) = line.strip_prefix("rank") {
            rank = Some(
                r.trim()
                    .parse()
                    .map_err(|_| bad(format!("bad rank '{r}'")))?,
            );
        } else if let Some(r) = line.strip_prefix("radius") {
            let radius: usize = r
                .trim()
                .parse()
                .map_err(|_| bad(format!("bad radius '{r}'")))?;
            let rank = rank.ok_or_else(|| bad("'rank' must precede 'radius'".into()))?;
            let basis = Basis::new(rank).map_err(|e| bad(e.to_string()))?;
            table = Some(WeightTable::new(basis, radius));
        } else {
            return Err(bad(format!("unexpected line '{line}'")));
        }
    }
    table.ok_or(Error::Parse {
        line: 0,
        message: "missing 'rank' / 'radius' header".into(),
    })
}

/// Parses a table with exact values (`p/q` or integers).
pub fn parse_table(text: &str) -> Result<WeightTable> {
    parse_with(text, parse_rational)
}

/// Parses a table whose values may be decimals, rationalized with the given
/// denominator bound.
pub fn parse_table_lenient(text: &str, max_denominator: u64) -> Result<WeightTable> {
    parse_with(text, |s| parse_decimal(s, max_denominator))
}

pub fn write_table(t: &WeightTable) -> String {
    let mut s = format!("rank {}\nradius {}\n", t.rank(), t.radius());
    for (graph, v) in t.entries() {
        let _ = writeln!(s, "{graph} {v}");
    }
    s
}

/// Human-oriented variant with decimal values.
pub fn write_table_decimal(t: &WeightTable, digits: usize) -> String {
    let mut s = format!("rank {}\nradius {}\n", t.rank(), t.radius());
    for (graph, v) in t.entries() {
        let _ = writeln!(s, "{graph} {}", format_decimal(v, digits));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn round_trip() {
        let text = "# demo\nrank 2\nradius 1\ne,x,X 2/4\nX,e,x,y,Y 1/3 # comment\n";
        let t = parse_table(text).unwrap();
        assert_eq!(t.len(), 2);
        let out = write_table(&t);
        assert_eq!(out, "rank 2\nradius 1\ne,x,X 1/2\ne,x,X,y,Y 1/3\n");
        assert_eq!(parse_table(&out).unwrap(), t);
    }

    #[test]
    fn lenient_values() {
        let t = parse_table_lenient("rank 2\nradius 1\ne,x,X 0.3333333333\n", 1_000_000).unwrap();
        let key = RoundGraph::parse(Basis::new(2).unwrap(), 1, "e,x,X").unwrap();
        assert_eq!(t.get(&key), q(1, 3));
        assert!(parse_table("rank 2\nradius 1\ne,x,X 0.5\n").is_err());
    }

    #[test]
    fn malformed() {
        assert!(matches!(
            parse_table("rank 2\nradius 1\ne,x 1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(parse_table("radius 1\n").is_err());
        assert!(parse_table("rank 2\n").is_err());
        assert!(parse_table("rank 2\nradius 1\ne,x,X -1\n").is_err());
    }
}
