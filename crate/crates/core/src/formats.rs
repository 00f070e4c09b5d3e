//! Graph interchange formats: graph6 lines and a plain edge-list text format.
//!
//! graph6 reference: the byte layout used by the nauty tool suite. Only the
//! undirected graph6 variant is handled, without the optional `>>graph6<<`
//! header; sparse6 and digraph6 are out of scope.

use thiserror::Error;

use crate::graph::{bit, Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty graph6 input")]
    Empty,
    #[error("invalid graph6 byte {byte:#04x} at position {pos}")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("graph6 order {n} outside the supported range 1..={MAX_VERTICES}")]
    OrderOutOfRange { n: usize },
    #[error("graph6 line truncated: expected {expected} bytes, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("trailing bytes after graph6 data: expected {expected} bytes, got {got}")]
    TrailingGarbage { expected: usize, got: usize },
    #[error("nonzero padding bits in final graph6 byte")]
    NonzeroPadding,
    #[error("edge list parse error at line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
}

/// Decodes one graph6 line (no header prefix, no trailing newline).
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(FormatError::InvalidByte { pos, byte: b });
        }
    }

    // Order field: one byte below 63 vertices, '~' + 3 bytes up to 258047,
    // '~~' + 6 bytes beyond that (always out of range here).
    let (n, header_len) = if bytes[0] != b'~' {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] == b'~' {
        return Err(FormatError::OrderOutOfRange { n: usize::MAX });
    } else {
        if bytes.len() < 4 {
            return Err(FormatError::Truncated {
                expected: 4,
                got: bytes.len(),
            });
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, 4)
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(FormatError::OrderOutOfRange { n });
    }

    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    let expected = header_len + nbytes;
    if bytes.len() < expected {
        return Err(FormatError::Truncated {
            expected,
            got: bytes.len(),
        });
    }
    if bytes.len() > expected {
        return Err(FormatError::TrailingGarbage {
            expected,
            got: bytes.len(),
        });
    }

    let mut adj = vec![0u64; n];
    let mut pos = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[header_len + pos / 6] - 63;
            if byte >> (5 - pos % 6) & 1 != 0 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            pos += 1;
        }
    }
    // Unused low bits of the final byte must be zero.
    if nbytes > 0 {
        let pad = nbytes * 6 - nbits;
        let last = bytes[expected - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(FormatError::NonzeroPadding);
        }
    }
    Ok(Graph::from_adj_unchecked(adj))
}

/// Encodes a graph as one graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut used = 0u32;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses the edge-list text format: a `n m` header line followed by `m`
/// lines `u v` with 0-based endpoints. Blank lines and `#` comments are
/// skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, header) = lines.next().ok_or(FormatError::EdgeList {
        line: 0,
        msg: "missing `n m` header".into(),
    })?;
    let mut it = header.split_whitespace();
    let parse_num = |tok: Option<&str>, line: usize, what: &str| -> Result<usize, FormatError> {
        tok.ok_or_else(|| FormatError::EdgeList {
            line,
            msg: format!("missing {what}"),
        })?
        .parse()
        .map_err(|_| FormatError::EdgeList {
            line,
            msg: format!("bad {what}"),
        })
    };
    let n = parse_num(it.next(), line_no, "vertex count")?;
    let m = parse_num(it.next(), line_no, "edge count")?;
    if it.next().is_some() {
        return Err(FormatError::EdgeList {
            line: line_no,
            msg: "extra tokens after `n m`".into(),
        });
    }

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, l) = lines.next().ok_or(FormatError::EdgeList {
            line: 0,
            msg: format!("expected {m} edge lines"),
        })?;
        let mut it = l.split_whitespace();
        let u = parse_num(it.next(), line_no, "endpoint")?;
        let v = parse_num(it.next(), line_no, "endpoint")?;
        if it.next().is_some() {
            return Err(FormatError::EdgeList {
                line: line_no,
                msg: "extra tokens after edge".into(),
            });
        }
        edges.push((u, v));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(FormatError::EdgeList {
            line: line_no,
            msg: "trailing content after edge list".into(),
        });
    }
    Graph::from_edges(n, &edges).map_err(|e| FormatError::EdgeList {
        line: 0,
        msg: e.to_string(),
    })
}

/// Writes the edge-list text format, inverse of [`parse_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for e in edges {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}
