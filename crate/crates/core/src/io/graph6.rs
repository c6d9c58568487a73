use crate::graph::Graph;

use super::ParseError;

const HEADER: &str = ">>graph6<<";

/// Parses one graph6 line (an optional `>>graph6<<` prefix and trailing
/// newline are accepted).
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (bytes, base) = match line.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (line.as_bytes(), 0),
    };
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::new(base + i, format!("byte {b:#04x} is outside the graph6 range")));
        }
    }
    let (n, start) = match bytes.first() {
        None => return Err(ParseError::new(base, "empty graph6 string")),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                return Err(ParseError::new(base + 1, "eight-byte size headers are not supported"));
            }
            if bytes.len() < 4 {
                return Err(ParseError::new(base + bytes.len(), "truncated size header"));
            }
            let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let body = &bytes[start..];
    if body.len() != need {
        let at = base + start + body.len().min(need);
        return Err(ParseError::new(at, format!("expected {need} data bytes for {n} vertices, found {}", body.len())));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    // padding bits must be zero for a canonical encoding
    if (bits..need * 6).any(bit) {
        return Err(ParseError::new(base + start + need - 1, "nonzero padding bits"));
    }
    Graph::new(n, edges).map_err(|e| ParseError::new(base, e.to_string()))
}

/// The graph6 encoding of `g`, without prefix or newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| 63 + x as u8));
    }
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push(63 + acc);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(63 + (acc << (6 - used)));
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
