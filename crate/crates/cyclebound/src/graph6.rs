/*!
graph6 codec: compact printable encoding for undirected simple graphs.

A record is a size prefix followed by the upper-triangle adjacency bits in
column-major order x(0,1), x(0,2), x(1,2), x(0,3), …, packed six bits per
byte (most significant first) and offset by 63 into the printable range.
Sizes n ≤ 62 use a single byte `n+63`; larger sizes use the standard
multi-byte extensions (`~` prefix for 18-bit, `~~` for 36-bit sizes).
The optional `>>graph6<<` header is accepted and never emitted.
*/

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} outside the graph6 range 63..=126")]
    BadByte { pos: usize, byte: u8 },
    #[error("record describes a graph on 0 vertices")]
    ZeroVertices,
    #[error("record truncated: expected {expected} payload bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("record has {found} payload bytes, expected {expected}")]
    TrailingData { expected: usize, found: usize },
    #[error("nonzero padding bits after the adjacency data")]
    NonzeroPadding,
    #[error("vertex count {n} exceeds the decoder cap {cap}")]
    TooLarge { n: u64, cap: u64 },
}

const HEADER: &str = ">>graph6<<";

/// Decoder refuses sizes above this; a legitimate record near the cap is
/// already ~50 MB of text.
const MAX_N: u64 = 1 << 20;

fn sextet(b: u8, pos: usize) -> Result<u64, Graph6Error> {
    if !(63..=126).contains(&b) {
        return Err(Graph6Error::BadByte { pos, byte: b });
    }
    Ok((b - 63) as u64)
}

/// Parses one graph6 record (with or without the `>>graph6<<` header).
pub fn parse_graph6(record: &str) -> Result<Graph, Graph6Error> {
    let record = record.strip_prefix(HEADER).unwrap_or(record);
    let bytes = record.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }

    // size prefix
    let (n, body_at) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            if bytes.len() < 8 {
                return Err(Graph6Error::Truncated { expected: 8, found: bytes.len() });
            }
            let mut n = 0u64;
            for (i, &b) in bytes[2..8].iter().enumerate() {
                n = n << 6 | sextet(b, 2 + i)?;
            }
            (n, 8)
        } else {
            if bytes.len() < 4 {
                return Err(Graph6Error::Truncated { expected: 4, found: bytes.len() });
            }
            let mut n = 0u64;
            for (i, &b) in bytes[1..4].iter().enumerate() {
                n = n << 6 | sextet(b, 1 + i)?;
            }
            (n, 4)
        }
    } else {
        (sextet(bytes[0], 0)?, 1)
    };

    if n == 0 {
        return Err(Graph6Error::ZeroVertices);
    }
    if n > MAX_N {
        return Err(Graph6Error::TooLarge { n, cap: MAX_N });
    }
    let n = n as usize;

    let pair_bits = n * (n - 1) / 2;
    let expected = pair_bits.div_ceil(6);
    let body = &bytes[body_at..];
    if body.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData { expected, found: body.len() });
    }

    let mut g = Graph::edgeless(n).expect("n >= 1");
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let word = sextet(body[k / 6], body_at + k / 6)?;
            if word >> (5 - k % 6) & 1 == 1 {
                g.add_edge_unchecked(u, v);
            }
            k += 1;
        }
    }
    // padding bits must be zero
    while k < expected * 6 {
        let word = sextet(body[k / 6], body_at + k / 6)?;
        if word >> (5 - k % 6) & 1 == 1 {
            return Err(Graph6Error::NonzeroPadding);
        }
        k += 1;
    }
    Ok(g)
}

/// Encodes a graph as a single graph6 record (no header, no newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
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
    let mut acc = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
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

/// Reads a newline-separated multi-record file; blank lines are skipped and
/// a leading `>>graph6<<` header (standalone or prefixed) is tolerated.
pub fn parse_graph6_file(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line == HEADER {
            continue;
        }
        out.push(parse_graph6(line).map_err(|e| (lineno + 1, e))?);
    }
    Ok(out)
}

/// Serializes graphs one record per line.
pub fn encode_graph6_file(graphs: &[Graph]) -> String {
    let mut s = String::new();
    for g in graphs {
        s.push_str(&encode_graph6(g));
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn single_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(encode_graph6(&g), "@");
    }

    #[test]
    fn complete_graphs_pinned() {
        // hand-encoded: K_4 has six upper-triangle bits, all 1 -> '~';
        // K_5 has ten bits 1111111111 padded to 111111 111100.
        let k4 = parse_graph6("C~").unwrap();
        assert!(k4.is_complete() && k4.n() == 4);
        assert_eq!(encode_graph6(&Graph::complete(4).unwrap()), "C~");
        let k5 = parse_graph6("D~{").unwrap();
        assert!(k5.is_complete() && k5.n() == 5);
        assert_eq!(encode_graph6(&Graph::complete(5).unwrap()), "D~{");
    }

    #[test]
    fn header_accepted() {
        let g = parse_graph6(">>graph6<<C~").unwrap();
        assert!(g.is_complete() && g.n() == 4);
    }

    #[test]
    fn bit_order_matches_column_major() {
        // single edge (0,2) on 3 vertices: bits x(0,1)=0, x(0,2)=1, x(1,2)=0
        // -> 010 000 -> byte 63+16='O'
        let g = Graph::from_edge_list(3, &[(0, 2)]).unwrap();
        assert_eq!(encode_graph6(&g), "BO");
        let back = parse_graph6("BO").unwrap();
        assert_eq!(back.edges(), vec![(0, 2)]);
    }

    #[test]
    fn malformed_records() {
        assert_eq!(parse_graph6("").unwrap_err(), Graph6Error::Empty);
        assert_eq!(parse_graph6("?").unwrap_err(), Graph6Error::ZeroVertices);
        assert!(matches!(
            parse_graph6("B\u{1f}").unwrap_err(),
            Graph6Error::BadByte { pos: 1, .. }
        ));
        assert_eq!(
            parse_graph6("C").unwrap_err(),
            Graph6Error::Truncated { expected: 1, found: 0 }
        );
        assert_eq!(
            parse_graph6("C~~").unwrap_err(),
            Graph6Error::TrailingData { expected: 1, found: 2 }
        );
        // K_3 is "Bw"; flipping a padding bit must be rejected
        assert_eq!(parse_graph6("Bw").unwrap().edge_count(), 3);
        assert_eq!(parse_graph6("Bx").unwrap_err(), Graph6Error::NonzeroPadding);
    }

    #[test]
    fn multibyte_size_roundtrip() {
        for n in [63usize, 64, 100] {
            let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
            let g = Graph::from_edge_list(n, &edges).unwrap();
            let enc = encode_graph6(&g);
            assert_eq!(enc.as_bytes()[0], 126);
            let back = parse_graph6(&enc).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn file_roundtrip() {
        let graphs = vec![
            Graph::complete(4).unwrap(),
            Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap(),
            Graph::edgeless(3).unwrap(),
        ];
        let text = encode_graph6_file(&graphs);
        let back = parse_graph6_file(&text).unwrap();
        assert_eq!(back, graphs);
        // header line and blank lines are tolerated
        let with_header = format!(">>graph6<<\n\n{text}");
        assert_eq!(parse_graph6_file(&with_header).unwrap(), graphs);
    }
}
