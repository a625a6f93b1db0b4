//! graph6 and plain edge-list text formats.
//!
//! graph6 follows the standard definition: the order `N(n)` followed by the
//! upper triangle of the adjacency matrix in column order
//! `(0,1), (0,2), (1,2), (0,3), ...`, packed into 6-bit groups offset by 63.

use crate::graph::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + n * n / 12);
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

fn bad(msg: impl Into<String>) -> GraphError {
    GraphError::MalformedGraph6(msg.into())
}

pub fn graph6_decode(s: &str) -> Result<Graph, GraphError> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(format!("byte {b} outside 63..=126")));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, body) = match bytes {
        [] => return Err(bad("empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(bad("truncated order"));
            }
            let n = rest[..6].iter().fold(0, |acc, &b| (acc << 6) | six(b));
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated order"));
            }
            let n = rest[..3].iter().fold(0, |acc, &b| (acc << 6) | six(b));
            (n, &rest[3..])
        }
        [first, rest @ ..] => (six(*first), rest),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(bad(format!(
            "expected {} data bytes for order {n}, found {}",
            nbits.div_ceil(6),
            body.len()
        )));
    }
    let mut g = Graph::try_empty(n)?;
    let bit = |k: usize| (six(body[k / 6]) >> (5 - k % 6)) & 1 == 1;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if (nbits..body.len() * 6).any(bit) {
        return Err(bad("nonzero padding bits"));
    }
    Ok(g)
}

/// Edge-list text: one `u v` pair per line, 0-based. Lines starting with `#`
/// are comments, except `# order: N` which fixes the order (otherwise it is
/// one more than the largest index).
pub fn edge_list_decode(text: &str) -> Result<Graph, GraphError> {
    let mut order = None;
    let mut pairs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(n) = comment.trim().strip_prefix("order:") {
                let n = n.trim().parse::<usize>().map_err(|e| {
                    GraphError::MalformedEdgeList(format!("line {}: {e}", lineno + 1))
                })?;
                order = Some(n);
            }
            continue;
        }
        let nums: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = nums[..] else {
            return Err(GraphError::MalformedEdgeList(format!(
                "line {}: expected two vertex indices",
                lineno + 1
            )));
        };
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|e| GraphError::MalformedEdgeList(format!("line {}: {e}", lineno + 1)))
        };
        pairs.push((parse(a)?, parse(b)?));
    }
    let implied = pairs.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
    let n = order.unwrap_or(implied);
    Graph::from_edges(n, &pairs)
}

pub fn edge_list_encode(g: &Graph) -> String {
    let mut s = format!("# order: {}\n", g.order());
    for (u, v) in g.edges().pairs() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Reads either format: a first data line holding two integers means an edge
/// list, anything else is graph6 (first non-empty line).
pub fn parse_graph_text(text: &str) -> Result<Graph, GraphError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    let looks_like_edges = text.trim_start().starts_with('#')
        || first.is_some_and(|l| {
            let toks: Vec<_> = l.split_whitespace().collect();
            toks.len() == 2 && toks.iter().all(|t| t.parse::<usize>().is_ok())
        });
    if looks_like_edges {
        edge_list_decode(text)
    } else {
        graph6_decode(first.unwrap_or(""))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use proptest::prelude::*;

    #[test]
    fn reference_strings() {
        assert_eq!(graph6_encode(&named::complete(3)), "Bw");
        assert_eq!(graph6_encode(&Graph::empty(1)), "@");
        assert_eq!(graph6_encode(&Graph::empty(0)), "?");
        // a 5-vertex graph with edges 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(graph6_encode(&g), "DQc");
        assert_eq!(graph6_encode(&named::petersen()).len(), 1 + 45usize.div_ceil(6));
    }

    #[test]
    fn long_order_prefix() {
        let g = named::cycle(100);
        let s = graph6_encode(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 63 + 36]);
        assert_eq!(graph6_decode(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert!(graph6_decode("").is_err());
        assert!(graph6_decode("B").is_err());
        assert!(graph6_decode("Bww").is_err());
        assert!(graph6_decode("B\x7f").is_err());
        // K3 uses 3 of 6 bits; setting a padding bit is rejected
        assert!(graph6_decode("Bx").is_err());
        assert_eq!(graph6_decode(">>graph6<<Bw\n").unwrap(), named::complete(3));
    }

    #[test]
    fn edge_lists() {
        let g = edge_list_decode("# a triangle\n0 1\n1 2\n\n2 0\n").unwrap();
        assert_eq!(g, named::complete(3));
        let h = edge_list_decode("# order: 5\n0 1\n").unwrap();
        assert_eq!(h.order(), 5);
        assert!(edge_list_decode("0 1 2\n").is_err());
        assert!(edge_list_decode("0 x\n").is_err());
        assert!(edge_list_decode("3 3\n").is_err());
        let p = named::petersen();
        assert_eq!(edge_list_decode(&edge_list_encode(&p)).unwrap(), p);
        assert_eq!(parse_graph_text(&edge_list_encode(&p)).unwrap(), p);
        assert_eq!(parse_graph_text("0 1\n").unwrap(), named::path(2));
        assert_eq!(parse_graph_text("Bw\n").unwrap(), named::complete(3));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=20).prop_flat_map(|n| {
            let m = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), m).prop_map(move |bits| {
                let mut g = Graph::empty(n);
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            g.add_edge(i, j);
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_graph()) {
            let s = graph6_encode(&g);
            prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
            prop_assert_eq!(graph6_decode(&s).unwrap(), g);
        }
    }
}
