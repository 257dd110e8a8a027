//! graph6 serialization, bit-exact per the standard format.
//!
//! Bipartite graphs travel as the flattened simple graph (X vertices first,
//! then Y) with a one-line sidecar header `"m n"` carrying the side sizes.

use crate::graph::{BipartiteGraph, GeneralGraph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 input (byte {0})")]
    Empty(usize),
    #[error("invalid graph6 byte {byte:#04x} at offset {offset}")]
    InvalidByte { byte: u8, offset: usize },
    #[error("truncated graph6 input at offset {0}")]
    Truncated(usize),
    #[error("trailing data at offset {0}")]
    Trailing(usize),
    #[error("graph order {0} exceeds the supported graph6 range")]
    OrderTooLarge(usize),
    #[error("malformed bipartite header line {0:?}")]
    BadHeader(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const MAX_SHORT_ORDER: usize = 62;
const MAX_LONG_ORDER: usize = 258_047;

/// Encode a simple graph in graph6.
pub fn to_graph6(g: &GeneralGraph) -> Result<String, Graph6Error> {
    let n = g.order();
    let mut bytes = Vec::new();
    if n <= MAX_SHORT_ORDER {
        bytes.push(63 + n as u8);
    } else if n <= MAX_LONG_ORDER {
        bytes.push(b'~');
        bytes.push(63 + ((n >> 12) & 0x3f) as u8);
        bytes.push(63 + ((n >> 6) & 0x3f) as u8);
        bytes.push(63 + (n & 0x3f) as u8);
    } else {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                bytes.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(bytes).expect("graph6 bytes are printable ascii"))
}

/// Decode a graph6 string. Leading `>>graph6<<` headers and a trailing
/// newline are tolerated; anything else out of place errors with its byte
/// offset.
pub fn from_graph6(s: &str) -> Result<GeneralGraph, Graph6Error> {
    let raw = s.as_bytes();
    let mut pos = 0;
    if raw.len() >= 10 && &raw[..10] == b">>graph6<<" {
        pos = 10;
    }
    let end = raw.len() - raw.iter().rev().take_while(|&&b| b == b'\n' || b == b'\r').count();
    let data = &raw[..end];
    if pos >= data.len() {
        return Err(Graph6Error::Empty(pos));
    }
    let check = |offset: usize, byte: u8| -> Result<u8, Graph6Error> {
        if !(63..=126).contains(&byte) {
            Err(Graph6Error::InvalidByte { byte, offset })
        } else {
            Ok(byte - 63)
        }
    };
    let n: usize;
    if data[pos] == b'~' {
        if data.len() < pos + 4 {
            return Err(Graph6Error::Truncated(data.len()));
        }
        if data[pos + 1] == b'~' {
            return Err(Graph6Error::OrderTooLarge(MAX_LONG_ORDER + 1));
        }
        let a = check(pos + 1, data[pos + 1])? as usize;
        let b = check(pos + 2, data[pos + 2])? as usize;
        let c = check(pos + 3, data[pos + 3])? as usize;
        n = (a << 12) | (b << 6) | c;
        pos += 4;
    } else {
        n = check(pos, data[pos])? as usize;
        pos += 1;
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let byte_count = bit_count.div_ceil(6);
    if data.len() < pos + byte_count {
        return Err(Graph6Error::Truncated(data.len()));
    }
    let mut g = GeneralGraph::empty(n);
    let mut bit = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let b = check(pos + bit / 6, data[pos + bit / 6])?;
            if (b >> (5 - bit % 6)) & 1 != 0 {
                g.add_edge(i, j);
            }
            bit += 1;
            if bit >= bit_count {
                break 'outer;
            }
        }
    }
    pos += byte_count;
    if pos != data.len() {
        return Err(Graph6Error::Trailing(pos));
    }
    Ok(g)
}

/// Bipartite serialization: header line "m n", then the graph6 line of the
/// flattened graph.
pub fn bipartite_to_graph6(g: &BipartiteGraph) -> Result<String, Graph6Error> {
    Ok(format!("{} {}\n{}\n", g.m(), g.n(), to_graph6(&g.to_general())?))
}

/// Parse a graph file: with an "m n" header line it is bipartite, without
/// one it is a bare graph6 general graph.
pub enum ParsedGraph {
    Bipartite(BipartiteGraph),
    General(GeneralGraph),
}

pub fn parse_graph_text(text: &str) -> Result<ParsedGraph, Graph6Error> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let first = lines.next().ok_or(Graph6Error::Empty(0))?;
    let fields: Vec<&str> = first.split_whitespace().collect();
    let header: Option<(usize, usize)> = match fields.as_slice() {
        [a, b] => match (a.parse(), b.parse()) {
            (Ok(m), Ok(n)) => Some((m, n)),
            _ => None,
        },
        _ => None,
    };
    match header {
        Some((m, n)) => {
            let g6 = lines.next().ok_or_else(|| Graph6Error::BadHeader(first.to_string()))?;
            let g = from_graph6(g6)?;
            Ok(ParsedGraph::Bipartite(BipartiteGraph::from_general_split(&g, m, n)?))
        }
        None => Ok(ParsedGraph::General(from_graph6(first)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_two_vertex_graph_is_a_question_mark() {
        let g = GeneralGraph::empty(2);
        assert_eq!(to_graph6(&g).unwrap(), "A?");
    }

    #[test]
    fn known_five_vertex_vector() {
        // 5 vertices, edges 0-2, 0-4, 1-3, 3-4 encodes as "DQc"
        let g = GeneralGraph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
        let back = from_graph6("DQc").unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn complete_bipartite_round_trip() {
        let b = BipartiteGraph::from_edges(2, 3, &[(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)])
            .unwrap();
        let text = bipartite_to_graph6(&b).unwrap();
        match parse_graph_text(&text).unwrap() {
            ParsedGraph::Bipartite(back) => {
                assert_eq!(back, b);
                assert_eq!(back.edge_count(), 6);
            }
            ParsedGraph::General(_) => panic!("expected bipartite"),
        }
    }

    #[test]
    fn empty_input_is_a_parse_error() {
        assert_eq!(from_graph6(""), Err(Graph6Error::Empty(0)));
    }

    #[test]
    fn invalid_byte_reports_offset() {
        let err = from_graph6("DQ\x1f").unwrap_err();
        assert_eq!(err, Graph6Error::InvalidByte { byte: 0x1f, offset: 2 });
    }

    #[test]
    fn truncation_reports_offset() {
        assert_eq!(from_graph6("D"), Err(Graph6Error::Truncated(1)));
    }

    #[test]
    fn trailing_junk_is_rejected() {
        assert_eq!(from_graph6("A?zz"), Err(Graph6Error::Trailing(2)));
    }

    #[test]
    fn large_order_uses_the_long_header() {
        let mut g = GeneralGraph::empty(100);
        g.add_edge(0, 99);
        g.add_edge(98, 99);
        let s = to_graph6(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn header_prefix_is_tolerated() {
        let g = from_graph6(">>graph6<<A_").unwrap();
        assert_eq!(g.edge_count(), 1);
    }
}
