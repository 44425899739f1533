//! graph6 text encoding: a size prefix followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable with the one- and four-byte size prefixes.
pub const MAX_ORDER: usize = 258_047;

const HEADER: &[u8] = b">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_ORDER, "graph6 encoding supports at most {MAX_ORDER} vertices");
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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

pub fn from_graph6(text: &[u8]) -> Result<Graph> {
    let mut s = text;
    while let Some((&last, rest)) = s.split_last() {
        if last == b'\n' || last == b'\r' {
            s = rest;
        } else {
            break;
        }
    }
    let mut pos = 0;
    if s.starts_with(HEADER) {
        pos = HEADER.len();
    }
    let err = |offset: usize, message: &str| Error::Parse {
        offset,
        message: message.to_string(),
    };
    let byte = |i: usize| -> Result<u8> {
        match s.get(i) {
            None => Err(err(i, "unexpected end of input")),
            Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
            Some(_) => Err(err(i, "byte outside the graph6 range 63..=126")),
        }
    };

    let n = if s.get(pos) == Some(&126) {
        if s.get(pos + 1) == Some(&126) {
            return Err(err(pos + 1, "orders above 258047 are not supported"));
        }
        let mut n = 0usize;
        for k in 1..=3 {
            n = (n << 6) | byte(pos + k)? as usize;
        }
        pos += 4;
        n
    } else {
        let n = byte(pos)? as usize;
        pos += 1;
        n
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &s[pos.min(s.len())..];
    if body.len() != expected {
        let offset = pos + body.len().min(expected);
        return Err(err(
            offset,
            &format!("expected {expected} data bytes for {n} vertices, found {}", body.len()),
        ));
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let b = byte(pos + k / 6)?;
            if (b >> (5 - k % 6)) & 1 == 1 {
                g.set_edge(i, j, true);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = byte(pos + expected - 1)?;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(err(pos + expected - 1, "non-zero padding bits"));
        }
    }
    Ok(g)
}

/// Parses one graph per non-empty line.
pub fn parse_lines(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = vec![];
    let mut line_start = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim_end_matches(['\n', '\r']);
        if !trimmed.is_empty() {
            graphs.push(from_graph6(trimmed.as_bytes()).map_err(|e| match e {
                Error::Parse { offset, message } => Error::Parse {
                    offset: offset + line_start,
                    message,
                },
                other => other,
            })?);
        }
        line_start += line.len();
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::lattice_graph;
    use proptest::prelude::*;

    #[test]
    fn hand_encoded_examples() {
        assert_eq!(to_graph6(&Graph::complete(3)), "Bw");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        // petgraph's fixture: 5 vertices, edges 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
    }

    #[test]
    fn lattice_round_trip() {
        let g = lattice_graph(4).unwrap();
        assert_eq!(from_graph6(to_graph6(&g).as_bytes()).unwrap(), g);
    }

    #[test]
    fn large_prefix() {
        let g = Graph::from_fn(70, |u, v| (u + v) % 3 == 0);
        let s = to_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 69]);
        assert_eq!(from_graph6(s.as_bytes()).unwrap(), g);
    }

    #[test]
    fn header_and_newline_accepted() {
        assert_eq!(from_graph6(b">>graph6<<Bw\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn parse_errors_carry_offsets() {
        assert_eq!(
            from_graph6(b"B").unwrap_err(),
            Error::Parse {
                offset: 1,
                message: "expected 1 data bytes for 3 vertices, found 0".into()
            }
        );
        assert!(matches!(from_graph6(b"C~ "), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(from_graph6(b"Bx"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(from_graph6(b""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(
            parse_lines("Bw\nB!\n"),
            Err(Error::Parse { offset: 4, .. })
        ));
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..=62, seed in any::<u64>()) {
            let g = Graph::from_fn(n, |u, v| {
                let h = (u as u64 * 31 + v as u64 * 17).wrapping_mul(seed | 1).rotate_left(17);
                h % 3 == 0
            });
            prop_assert_eq!(from_graph6(to_graph6(&g).as_bytes()).unwrap(), g);
        }
    }
}
