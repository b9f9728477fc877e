//! Text formats: graph6, a plain edge list, and DOT export.
//!
//! graph6 follows the standard definition: a size header (`n + 63` for
//! `n <= 62`, otherwise `~` and three 6-bit bytes) followed by the upper
//! triangle of the adjacency matrix in column-major order, packed six bits
//! per byte, each byte offset by 63.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(((acc << (6 - bits)) + 63) as char);
    }
    out
}

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let err = |msg: &str| Error::Graph6(format!("{msg} in {text:?}"));

    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(err(&format!("character {:?} out of range", b as char)));
    }
    let (n, body) = match bytes.first() {
        None => return Err(err("empty string")),
        Some(b'~') => {
            if bytes.get(1) == Some(&b'~') {
                return Err(err("graph too large"));
            }
            if bytes.len() < 4 {
                return Err(err("truncated size header"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &bytes[4..])
        }
        Some(&b) => ((b - 63) as usize, &bytes[1..]),
    };
    if n > MAX_VERTICES {
        return Err(Error::Capacity(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(err(&format!(
            "expected {} data bytes for {n} vertices, found {}",
            nbits.div_ceil(6),
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.link(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[body.len() - 1] - 63;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(err("nonzero padding bits"));
        }
    }
    Ok(g)
}

/// `n m` on the first line, then one `u v` line per edge in ascending order.
pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn decode_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::EdgeList("missing header line".into()))?;
    let [n, m] = parse_pair(header)?;
    let mut g = Graph::empty(n)?;
    let mut count = 0;
    for line in lines {
        let [u, v] = parse_pair(line)?;
        if u >= n || v >= n || u == v {
            return Err(Error::EdgeList(format!("invalid edge `{line}`")));
        }
        if g.has_edge(u, v) {
            return Err(Error::EdgeList(format!("duplicate edge `{line}`")));
        }
        g.link(u, v);
        count += 1;
    }
    if count != m {
        return Err(Error::EdgeList(format!(
            "header announces {m} edges, found {count}"
        )));
    }
    Ok(g)
}

fn parse_pair(line: &str) -> Result<[usize; 2]> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok([a, b]),
        _ => Err(Error::EdgeList(format!("expected two integers, got `{line}`"))),
    }
}

/// Reads either format, deciding by the first non-blank line.
pub fn decode_any(text: &str) -> Result<Graph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first {
        Some(l) if l.split_whitespace().count() == 2 => decode_edge_list(text),
        Some(l) => decode_graph6(l),
        None => Err(Error::Graph6("empty input".into())),
    }
}

/// DOT text. `labels`, when given, names each vertex.
pub fn to_dot(g: &Graph, name: &str, labels: Option<&[String]>) -> String {
    let mut out = format!("graph \"{}\" {{\n", name.replace('"', "'"));
    for v in 0..g.order() {
        match labels.and_then(|l| l.get(v)) {
            Some(l) => {
                let _ = writeln!(out, "  {v} [label=\"{l}\"];");
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_encodes_to_bw() {
        // bits (0,1),(0,2),(1,2) = 111, padded 111000 = 56, 56 + 63 = 'w'
        assert_eq!(encode_graph6(&Graph::complete(3).unwrap()), "Bw");
    }

    #[test]
    fn all_zero_block_is_empty() {
        assert_eq!(decode_graph6("B?").unwrap(), Graph::empty(3).unwrap());
    }

    #[test]
    fn known_reference_string() {
        // five vertices, edges 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g), "DQc");
        assert_eq!(decode_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn long_header_round_trip() {
        let g = Graph::from_edges(64, (0..63).map(|i| (i, i + 1))).unwrap();
        let s = encode_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode_graph6(&s).unwrap(), g);
        let g63 = Graph::complete(63).unwrap();
        assert_eq!(decode_graph6(&encode_graph6(&g63)).unwrap(), g63);
    }

    #[test]
    fn malformed_graph6() {
        assert!(decode_graph6("").is_err());
        assert!(decode_graph6("B").is_err());
        assert!(decode_graph6("Bww").is_err());
        assert!(decode_graph6("B\x7f").is_err());
        assert!(decode_graph6("Bx").is_err()); // padding bit set
        assert!(decode_graph6(" B?").is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let text = encode_edge_list(&g);
        assert_eq!(text, "4 4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(decode_edge_list(&text).unwrap(), g);
        assert_eq!(decode_any(&text).unwrap(), g);
        assert_eq!(decode_any("Bw\n").unwrap(), Graph::complete(3).unwrap());
    }

    #[test]
    fn malformed_edge_list() {
        assert!(decode_edge_list("").is_err());
        assert!(decode_edge_list("3 1\n0 0\n").is_err());
        assert!(decode_edge_list("3 2\n0 1\n").is_err());
        assert!(decode_edge_list("3 1\n0 5\n").is_err());
        assert!(decode_edge_list("3 1\n0 x\n").is_err());
    }

    #[test]
    fn dot_lists_every_edge() {
        let dot = to_dot(&Graph::complete(3).unwrap(), "k3", None);
        assert!(dot.contains("0 -- 1;") && dot.contains("1 -- 2;"));
    }
}
