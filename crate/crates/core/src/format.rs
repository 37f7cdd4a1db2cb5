//! Text formats: graph6 and a plain edge list.
//!
//! graph6 stores `n` in a bias-63 size header followed by the upper triangle
//! of the adjacency matrix in column order (`(0,1), (0,2), (1,2), (0,3), ...`),
//! packed six bits per byte, most significant bit first.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

/// Largest vertex count [`to_graph6`] will encode (single-byte size header).
pub const GRAPH6_MAX_ENCODE: usize = 62;

fn format_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Format {
        offset,
        message: message.into(),
    }
}

/// Parses one graph6 line. A trailing newline and the optional `>>graph6<<`
/// header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (base, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(format_err(
                base + i,
                format!("byte 0x{b:02x} outside 63..=126"),
            ));
        }
    }

    let (n, header_len) = match body {
        [] => return Err(format_err(base, "missing size header")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(format_err(
                    base + body.len(),
                    "truncated 8-byte size header",
                ));
            }
            let n = rest[..6]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
            (n, 8)
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(format_err(
                    base + body.len(),
                    "truncated 4-byte size header",
                ));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
            (n, 4)
        }
        [b, ..] => ((b - BIAS) as usize, 1),
    };

    let pairs = n * n.saturating_sub(1) / 2;
    let data_len = pairs.div_ceil(6);
    let data = &body[header_len..];
    if data.len() < data_len {
        return Err(format_err(
            base + body.len(),
            format!(
                "expected {data_len} data bytes for {n} vertices, found {}",
                data.len()
            ),
        ));
    }
    if data.len() > data_len {
        return Err(format_err(
            base + header_len + data_len,
            "trailing bytes after adjacency data",
        ));
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = data[data_len - 1] - BIAS;
        let pad = 6 - pairs % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(format_err(
                base + header_len + data_len - 1,
                "nonzero padding bits",
            ));
        }
    }
    Ok(g)
}

/// Encodes a graph with at most 62 vertices as a graph6 line (no newline).
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_ENCODE {
        return Err(Error::UnsupportedSize(format!(
            "graph6 encoding supports at most {GRAPH6_MAX_ENCODE} vertices, got {n}"
        )));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + pairs.div_ceil(6));
    out.push(n as u8 + BIAS);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + BIAS);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Parses an edge list: the vertex count as the first token, then one
/// `u v` pair per line. Blank lines and `#` comments are ignored; duplicate
/// edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (first_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing vertex count".into(),
    })?;
    let mut tokens = header.split_whitespace();
    let n = parse_token(tokens.next().unwrap_or(""), first_line)?;
    if tokens.next().is_some() {
        return Err(Error::Parse {
            line: first_line,
            message: "vertex count line must hold a single integer".into(),
        });
    }

    let mut g = Graph::empty(n);
    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected two vertex labels, found {}", tokens.len()),
            });
        }
        let u = parse_token(tokens[0], line)?;
        let v = parse_token(tokens[1], line)?;
        if u >= n || v >= n {
            return Err(Error::Parse {
                line,
                message: format!("vertex label out of range 0..{n}"),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line,
                message: format!("self-loop at vertex {u}"),
            });
        }
        g.set_edge(u, v);
    }
    Ok(g)
}

fn parse_token(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("not a non-negative integer: {token:?}"),
    })
}
