//! graph6 encoding: order prefix, then the upper triangle of the adjacency
//! matrix in column-major order, packed six bits per printable byte.

use crate::graph::{Graph, GraphError, MAX_ORDER};

fn malformed(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Encode `g` as graph6 text (no `>>graph6<<` header, no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decode graph6 text. An optional `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let trimmed = text.trim();
    let (base, body) = match trimmed.strip_prefix(">>graph6<<") {
        Some(rest) => (text.find(">>graph6<<").unwrap_or(0) + 10, rest.as_bytes()),
        None => (text.len() - text.trim_start().len(), trimmed.as_bytes()),
    };
    if body.is_empty() {
        return Err(malformed(base, "empty input"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(malformed(
                base + i,
                format!("byte {b:#04x} outside 63..=126"),
            ));
        }
    }
    let (n, mut pos) = if body[0] != 126 {
        ((body[0] - 63) as usize, 1)
    } else {
        if body.len() < 4 {
            return Err(malformed(base + body.len(), "truncated order prefix"));
        }
        if body[1] == 126 {
            return Err(malformed(base + 1, "orders above 258047 are not supported"));
        }
        let n = body[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 4)
    };
    if n > MAX_ORDER {
        return Err(GraphError::OrderTooLarge(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    let have = body.len() - pos;
    if have != need {
        return Err(malformed(
            base + pos + have.min(need),
            format!("expected {need} data bytes for order {n}, found {have}"),
        ));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0;
    let mut cur = 0u8;
    for j in 1..n {
        for i in 0..j {
            if bit % 6 == 0 {
                cur = body[pos] - 63;
                pos += 1;
            }
            if cur >> (5 - bit % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            bit += 1;
        }
    }
    if bit % 6 != 0 {
        let pad = 6 - bit % 6;
        if cur & ((1 << pad) - 1) != 0 {
            return Err(malformed(base + pos - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}
