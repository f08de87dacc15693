//! graph6 encoding.
//!
//! The order `n` is written as one byte `n + 63` for `n <= 62`, as `~` plus
//! three 6-bit groups for `n <= 258047`, and as `~~` plus six groups beyond
//! that. The upper triangle follows column by column (`x(0,1), x(0,2),
//! x(1,2), x(0,3), ...`), packed into 6-bit groups, big-endian, padded with
//! zeros, each group offset by 63.

use super::Graph;
use crate::error::{Error, Result};

const BIAS: u8 = 63;

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(8 + n * n / 12);
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(acc + BIAS);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + BIAS);
    }
    String::from_utf8(out).expect("printable ascii")
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.extend_from_slice(b"~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
}

pub fn decode(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b:#04x} outside the printable range 63..=126")));
    }
    let (n, body) = decode_order(bytes)?;
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != needed {
        return Err(Error::Graph6(format!(
            "expected {needed} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if k % 6 != 0 && (body[k / 6] - BIAS) & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(Error::Graph6("non-zero padding bits".into()));
    }
    Ok(g)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let group = |bs: &[u8]| bs.iter().fold(0usize, |acc, &b| acc << 6 | (b - BIAS) as usize);
    match bytes {
        [] => Err(Error::Graph6("empty input".into())),
        [b'~', b'~', rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6("truncated 8-byte order header".into()));
            }
            Ok((group(&rest[..6]), &rest[6..]))
        }
        [b'~', rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated 4-byte order header".into()));
            }
            Ok((group(&rest[..3]), &rest[3..]))
        }
        [b, rest @ ..] => Ok(((b - BIAS) as usize, rest)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn known_strings() {
        // from the format description: the 5-vertex graph with edges
        // 02, 04, 13, 34
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(encode(&Graph::empty(0).unwrap()), "?");
        assert_eq!(encode(&complete(1).unwrap()), "@");
        assert_eq!(encode(&complete(2).unwrap()), "A_");
        assert_eq!(encode(&complete(3).unwrap()), "Bw");
        assert_eq!(encode(&cycle(5).unwrap()), "Dhc");
    }

    #[test]
    fn extended_header() {
        let g = Graph::empty(63).unwrap();
        let s = encode(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(decode(&s).unwrap(), g);
        let p = path(100).unwrap();
        assert_eq!(decode(&encode(&p)).unwrap(), p);
    }

    #[test]
    fn rejects_malformed() {
        assert!(decode("").is_err());
        assert!(decode("Dh").is_err());
        assert!(decode("Dhcc").is_err());
        assert!(decode("D\u{7f}c").is_err());
        // padding must be zero: n = 2 uses one bit
        assert!(decode("A`").is_err());
        assert_eq!(decode(">>graph6<<Bw\n").unwrap(), complete(3).unwrap());
    }
}
