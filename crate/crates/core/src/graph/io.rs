//! graph6 and edge-list text formats.
//!
//! graph6 follows the format description shipped with nauty: a size header
//! (one byte `n + 63` for `n <= 62`), then the upper triangle of the adjacency
//! matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six
//! bits per byte, big-endian, each byte offset by 63 and zero-padded.

use super::{Graph, MAX_VERTICES};
use crate::error::{ParseError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Graph6 => parse_graph6(text),
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(ParseError::InvalidCharacter { ch: bytes[pos] as char, pos }.into());
    }
    let Some(&first) = bytes.first() else {
        return Err(ParseError::MalformedHeader("empty input".into()).into());
    };
    if first == b'~' {
        // Multi-byte sizes encode n >= 63.
        let n = decode_long_size(bytes)?;
        return Err(ParseError::TooManyVertices { n, max: MAX_VERTICES }.into());
    }
    let n = (first - 63) as usize;
    if n > MAX_VERTICES {
        return Err(ParseError::TooManyVertices { n, max: MAX_VERTICES }.into());
    }
    let body = &bytes[1..];
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(ParseError::BadLength { expected, found: body.len() }.into());
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.set_edge(i, j, true);
            }
            k += 1;
        }
    }
    // Padding bits must be zero.
    if !nbits.is_multiple_of(6) {
        let last = body[body.len() - 1] - 63;
        if last & ((1u8 << (6 - nbits % 6)) - 1) != 0 {
            return Err(ParseError::MalformedHeader("nonzero padding bits".into()).into());
        }
    }
    Ok(g)
}

fn decode_long_size(bytes: &[u8]) -> Result<usize> {
    let bad = || ParseError::MalformedHeader("truncated size header".into());
    let digits = if bytes.get(1) == Some(&b'~') {
        bytes.get(2..8).ok_or_else(bad)?
    } else {
        bytes.get(1..4).ok_or_else(bad)?
    };
    Ok(digits.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = vec![n as u8 + 63];
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// First line `n`, then one `u v` pair per line (0-indexed). Blank lines and
/// lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines
        .next()
        .ok_or_else(|| ParseError::MalformedHeader("missing vertex count".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| ParseError::MalformedHeader(format!("vertex count {header:?}")))?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let malformed = || ParseError::MalformedEdge { line, text: l.to_string() };
        let mut it = l.split_whitespace();
        let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
            return Err(malformed().into());
        };
        let u: usize = a.parse().map_err(|_| malformed())?;
        let v: usize = b.parse().map_err(|_| malformed())?;
        edges.push((u, v));
    }
    if n > MAX_VERTICES {
        return Err(ParseError::TooManyVertices { n, max: MAX_VERTICES }.into());
    }
    Graph::from_edges(n, &edges)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn decode_small_strings() {
        let p3 = parse_graph6("Bg").unwrap();
        assert_eq!(p3.n(), 3);
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);

        let k1 = parse_graph6("@").unwrap();
        assert_eq!(k1.n(), 1);
        assert_eq!(k1.edge_count(), 0);

        // Standard graph6: only bit x(0,1) is set.
        assert_eq!(parse_graph6("B_").unwrap().edges(), vec![(0, 1)]);
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
    }

    #[test]
    fn known_encodings() {
        // Reference strings produced by networkx.
        assert_eq!(to_graph6(&Graph::path(4).unwrap()), "Ch");
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(to_graph6(&star), "Cs");
        assert_eq!(parse_graph6("Cr").unwrap().edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(parse_graph6("CF").unwrap().edges(), vec![(0, 3), (1, 3), (2, 3)]);
        assert_eq!(parse_graph6(">>graph6<<Bg\n").unwrap(), parse_graph6("Bg").unwrap());
    }

    #[test]
    fn edge_list_matches_graph6() {
        let g = parse_edge_list("3\n0 1\n1 2").unwrap();
        assert_eq!(g, parse_graph6("Bg").unwrap());
        assert_eq!(parse_edge_list(&format_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn decode_errors_are_distinct() {
        assert!(matches!(parse_graph6(""), Err(Error::Parse(ParseError::MalformedHeader(_)))));
        assert!(matches!(parse_graph6("B"), Err(Error::Parse(ParseError::BadLength { .. }))));
        assert!(matches!(parse_graph6("B a"), Err(Error::Parse(ParseError::InvalidCharacter { .. }))));
        assert!(matches!(parse_graph6("~?@?"), Err(Error::Parse(ParseError::TooManyVertices { n: 64, .. }))));
        assert!(matches!(parse_graph6("Ba"), Err(Error::Parse(ParseError::MalformedHeader(_)))));
        assert!(matches!(
            parse_edge_list("3\n0 3"),
            Err(Error::Parse(ParseError::VertexOutOfRange { vertex: 3, n: 3 }))
        ));
        assert!(matches!(
            parse_edge_list("3\n0 1\n1 0"),
            Err(Error::Parse(ParseError::DuplicateEdge(0, 1)))
        ));
        assert!(matches!(parse_edge_list("x\n"), Err(Error::Parse(ParseError::MalformedHeader(_)))));
        assert!(matches!(parse_edge_list("3\n0"), Err(Error::Parse(ParseError::MalformedEdge { line: 2, .. }))));
    }

    #[test]
    fn labeled_round_trip_all_six_vertex_graphs() {
        for bits in 0u32..(1 << 15) {
            let mut g = Graph::empty(6).unwrap();
            let mut k = 0;
            for j in 1..6 {
                for i in 0..j {
                    if bits & (1 << k) != 0 {
                        g.set_edge(i, j, true);
                    }
                    k += 1;
                }
            }
            assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }
}
