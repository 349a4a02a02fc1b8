//! Text encodings: graph6 and a plain edge list.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 0-based vertex
//! indices. Blank lines and lines starting with `#` are skipped. Output is
//! normalized to `u < v` in row-major pair order.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

const GRAPH6_HEADER: &str = ">>graph6<<";

fn graph6_size_prefix(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

/// graph6 string (no header, no trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    graph6_size_prefix(n, &mut out);
    // graph6 walks the upper triangle column by column: (0,1),(0,2),(1,2),(0,3),...
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b:#04x} outside 63..=126")));
    }
    let value = |s: &[u8]| s.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
    let (n, body) = match bytes {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6("truncated size field".into()));
            }
            (value(&rest[..6]), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated size field".into()));
            }
            (value(&rest[..3]), &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let bit_len = n * n.saturating_sub(1) / 2;
    let expected = bit_len.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.insert_edge(Edge::of(i, j))?;
            }
            k += 1;
        }
    }
    if (bit_len..expected * 6).any(bit) {
        return Err(Error::Graph6("non-zero padding bits".into()));
    }
    Ok(g)
}

pub fn encode_edgelist(g: &Graph) -> String {
    let mut out = String::new();
    let edges = g.edges();
    writeln!(out, "{} {}", g.n(), edges.len()).unwrap();
    for e in edges {
        writeln!(out, "{} {}", e.u(), e.v()).unwrap();
    }
    out
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse {
            line: lineno,
            message: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line: lineno,
            message: format!("{what} {tok:?} is not a non-negative integer"),
        })
    };
    let a = next("first value")?;
    let b = next("second value")?;
    if let Some(extra) = it.next() {
        return Err(Error::Parse {
            line: lineno,
            message: format!("unexpected trailing token {extra:?}"),
        });
    }
    Ok((a, b))
}

pub fn decode_edgelist(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing header line \"n m\"".into(),
    })?;
    let (n, m) = parse_pair(header, hline)?;
    let mut g = Graph::empty(n);
    let mut seen = 0;
    for (lineno, line) in lines {
        let (a, b) = parse_pair(line, lineno)?;
        let e = Edge::new(a, b)?;
        if e.v() >= n {
            return Err(Error::VertexOutOfRange { vertex: e.v(), n });
        }
        if g.has(e) {
            return Err(Error::DuplicateEdge(e));
        }
        g.insert_edge(e)?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::Parse {
            line: hline,
            message: format!("header declares {m} edges but {seen} were listed"),
        });
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_graph6_strings() {
        // Reference strings from the public graph6 description / nauty's showg.
        assert_eq!(encode_graph6(&Graph::complete(3)), "Bw");
        assert_eq!(encode_graph6(&Graph::complete(4)), "C~");
        assert_eq!(encode_graph6(&Graph::complete(5)), "D~{");
        assert_eq!(encode_graph6(&Graph::empty(0)), "?");
        assert_eq!(encode_graph6(&Graph::empty(1)), "@");
        // Worked example from the format description.
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g), "DQc");
        assert_eq!(decode_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn graph6_long_size_field() {
        let g = Graph::cycle(70).unwrap();
        let s = encode_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_rejects_bad_input() {
        assert!(decode_graph6("").is_err());
        assert!(decode_graph6("D~").is_err());
        assert!(decode_graph6("D~{?").is_err());
        assert!(decode_graph6("Bx").is_err(), "padding bits must be zero");
        assert!(decode_graph6("B w").is_err());
        assert_eq!(decode_graph6(">>graph6<<Bw\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn edgelist_k3() {
        let g = decode_edgelist("3 3\n0 1\n0 2\n1 2\n").unwrap();
        assert_eq!(g, Graph::complete(3));
        assert_eq!(encode_edgelist(&g), "3 3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn edgelist_normalizes_orientation() {
        let g = decode_edgelist("# comment\n4 2\n\n3 0\n2 1\n").unwrap();
        assert_eq!(encode_edgelist(&g), "4 2\n0 3\n1 2\n");
    }

    #[test]
    fn edgelist_errors() {
        assert_eq!(
            decode_edgelist("3 2\n2 2\n2 2\n"),
            Err(Error::SelfLoop(2))
        );
        assert_eq!(
            decode_edgelist("3 2\n0 2\n2 0\n"),
            Err(Error::DuplicateEdge(Edge::of(0, 2)))
        );
        assert!(matches!(
            decode_edgelist("3 3\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(decode_edgelist("3 1\n0 x\n"), Err(Error::Parse { .. })));
        assert!(matches!(decode_edgelist(""), Err(Error::Parse { .. })));
        assert_eq!(
            decode_edgelist("3 1\n0 3\n"),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }
}
