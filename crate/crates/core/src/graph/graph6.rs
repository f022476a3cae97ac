//! graph6 interchange format.
//!
//! Layout: a size header `N(n)` followed by the upper triangle of the
//! adjacency matrix in column order (`(i, j)` with `i < j`, ordered by `j`
//! then `i`), packed big-endian into 6-bit groups, each written as the
//! group value plus 63. The last group is zero-padded.

use std::io::BufRead;

use thiserror::Error;

use super::{Graph, GraphBuilder, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed graph6 size header")]
    MalformedHeader,
    #[error("graph6 body truncated: expected {expected} bytes, found {found}")]
    TruncatedBody { expected: usize, found: usize },
    #[error("{0} unexpected bytes after the graph6 body")]
    TrailingGarbage(usize),
    #[error("graph6 order {0} exceeds the capacity of {MAX_ORDER} vertices")]
    CapacityExceeded(usize),
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("nonzero padding bits in the last graph6 byte")]
    NonZeroPadding,
    #[error("graph6 line {line}: {source}")]
    Line { line: usize, source: Box<Graph6Error> },
    #[error("reading graph6 input: {0}")]
    Io(String),
}

const BIAS: u8 = 63;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

impl Graph {
    /// Encodes the graph as graph6 bytes (no trailing newline).
    pub fn encode_graph6(&self) -> Vec<u8> {
        let n = self.order();
        let mut out = Vec::with_capacity(4 + body_len(n));
        if n <= 62 {
            out.push(n as u8 + BIAS);
        } else {
            out.push(126);
            for shift in [12, 6, 0] {
                out.push(((n >> shift) & 0x3f) as u8 + BIAS);
            }
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            let row = self.row(j);
            for i in 0..j {
                acc = (acc << 1) | row.contains(i) as u8;
                filled += 1;
                if filled == 6 {
                    out.push(acc + BIAS);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + BIAS);
        }
        out
    }

    pub fn to_graph6(&self) -> String {
        // every byte is in 63..=126
        String::from_utf8(self.encode_graph6()).expect("graph6 is ASCII")
    }

    /// Decodes exactly one graph6 string. No surrounding whitespace is accepted.
    pub fn decode_graph6(bytes: &[u8]) -> Result<Graph, Graph6Error> {
        let (n, header) = decode_header(bytes)?;
        let body = &bytes[header..];
        let expected = body_len(n);
        if body.len() < expected {
            return Err(Graph6Error::TruncatedBody { expected, found: body.len() });
        }
        if body.len() > expected {
            return Err(Graph6Error::TrailingGarbage(body.len() - expected));
        }
        for (i, &b) in body.iter().enumerate() {
            if !(BIAS..=126).contains(&b) {
                return Err(Graph6Error::InvalidByte { offset: header + i, byte: b });
            }
        }
        let bits = n * n.saturating_sub(1) / 2;
        if bits % 6 != 0 {
            let pad = 6 - bits % 6;
            let last = body[expected - 1] - BIAS;
            if last & ((1 << pad) - 1) != 0 {
                return Err(Graph6Error::NonZeroPadding);
            }
        }
        let mut g = GraphBuilder::new(n).map_err(|_| Graph6Error::CapacityExceeded(n))?;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let group = body[k / 6] - BIAS;
                if group & (0x20 >> (k % 6)) != 0 {
                    g.add_edge(i, j).expect("indices in range");
                }
                k += 1;
            }
        }
        Ok(g.build())
    }
}

fn decode_header(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let digit = |b: u8| {
        if (BIAS..=126).contains(&b) {
            Ok((b - BIAS) as usize)
        } else {
            Err(Graph6Error::MalformedHeader)
        }
    };
    match bytes {
        [] => Err(Graph6Error::MalformedHeader),
        [126, 126, ..] => {
            // 36-bit form, always n >= 258048
            if bytes.len() < 8 {
                return Err(Graph6Error::MalformedHeader);
            }
            let mut n = 0usize;
            for &b in &bytes[2..8] {
                n = (n << 6) | digit(b)?;
            }
            Err(Graph6Error::CapacityExceeded(n))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Graph6Error::MalformedHeader);
            }
            let mut n = 0usize;
            for &b in &rest[..3] {
                n = (n << 6) | digit(b)?;
            }
            if n < 63 {
                // short sizes must use the one-byte form
                return Err(Graph6Error::MalformedHeader);
            }
            if n > MAX_ORDER {
                return Err(Graph6Error::CapacityExceeded(n));
            }
            Ok((n, 4))
        }
        [b, ..] => {
            let n = digit(*b)?;
            if n == 0 {
                return Err(Graph6Error::CapacityExceeded(0));
            }
            Ok((n, 1))
        }
    }
}

/// Reads one graph6 string per line. Blank lines are skipped; a trailing
/// `\r` is tolerated.
pub fn read_graph6_lines<R: BufRead>(reader: R) -> Result<Vec<Graph>, Graph6Error> {
    let mut graphs = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Graph6Error::Io(e.to_string()))?;
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        let g = Graph::decode_graph6(line.as_bytes()).map_err(|e| Graph6Error::Line {
            line: idx + 1,
            source: Box::new(e),
        })?;
        graphs.push(g);
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent reference encoder: builds the bit string first, then packs.
    fn reference_encode(n: usize, edges: &[(usize, usize)]) -> String {
        let mut bits = Vec::new();
        for j in 1..n {
            for i in 0..j {
                bits.push(edges.iter().any(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i)));
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(false);
        }
        let mut s = String::new();
        if n <= 62 {
            s.push((n as u8 + 63) as char);
        } else {
            s.push('~');
            for shift in [12, 6, 0] {
                s.push((((n >> shift) & 63) as u8 + 63) as char);
            }
        }
        for chunk in bits.chunks(6) {
            let v = chunk.iter().fold(0u8, |acc, &b| (acc << 1) | b as u8);
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn k2_and_single_vertex() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.to_graph6(), "A_");
        assert_eq!(reference_encode(2, &[(0, 1)]), "A_");
        assert_eq!(Graph::empty(1).unwrap().to_graph6(), "@");
    }

    #[test]
    fn matches_reference_encoder() {
        let edges = [(0, 2), (0, 4), (1, 3), (3, 4)];
        let g = Graph::new(5, &edges).unwrap();
        assert_eq!(g.to_graph6(), reference_encode(5, &edges));
        // the same graph as a well-known published example
        assert_eq!(g.to_graph6(), "DQc");
        let big: Vec<_> = (0..63).map(|i| (i, (i * 7 + 3) % 64)).filter(|(a, b)| a != b).collect();
        let g = Graph::new(64, &big).unwrap();
        assert_eq!(g.to_graph6(), reference_encode(64, &big));
    }

    #[test]
    fn long_header_round_trip() {
        let g = Graph::new(63, &[(0, 62), (5, 6)]).unwrap();
        let enc = g.encode_graph6();
        assert_eq!(&enc[..4], b"~??~");
        assert_eq!(Graph::decode_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn decode_errors() {
        assert_eq!(Graph::decode_graph6(b""), Err(Graph6Error::MalformedHeader));
        assert_eq!(Graph::decode_graph6(b"\x20"), Err(Graph6Error::MalformedHeader));
        assert_eq!(Graph::decode_graph6(b"?"), Err(Graph6Error::CapacityExceeded(0)));
        assert_eq!(
            Graph::decode_graph6(b"D"),
            Err(Graph6Error::TruncatedBody { expected: 2, found: 0 })
        );
        assert_eq!(Graph::decode_graph6(b"A_?"), Err(Graph6Error::TrailingGarbage(1)));
        assert_eq!(Graph::decode_graph6(b"A`"), Err(Graph6Error::NonZeroPadding));
        assert_eq!(
            Graph::decode_graph6(b"D\x7fc"),
            Err(Graph6Error::InvalidByte { offset: 1, byte: 0x7f })
        );
        // n = 65 via the long header
        assert_eq!(Graph::decode_graph6(b"~??\x80"), Err(Graph6Error::MalformedHeader));
        assert_eq!(Graph::decode_graph6(b"~?@@"), Err(Graph6Error::CapacityExceeded(65)));
        assert_eq!(Graph::decode_graph6(b"~~??????"), Err(Graph6Error::CapacityExceeded(0)));
    }

    #[test]
    fn reads_lines() {
        let input = b"A_\n\n@\r\nDQc\n";
        let gs = read_graph6_lines(&input[..]).unwrap();
        assert_eq!(gs.len(), 3);
        let err = read_graph6_lines(&b"A_\nA\n"[..]).unwrap_err();
        assert!(matches!(err, Graph6Error::Line { line: 2, .. }));
    }
}
