//! graph6 interchange format.
//!
//! Upper-triangle bits in column order `(0,1),(0,2),(1,2),(0,3),…`, packed six
//! to a byte, big-endian within each group, each group offset by 63.

use super::Graph;
use crate::error::{Error, Result};

const BIAS: u8 = 63;
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LONG_MAX: usize = 68_719_476_735;

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= SHORT_MAX {
        out.push(n as u8 + BIAS);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
}

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

fn sextet(bytes: &[u8], at: usize) -> Result<u8> {
    match bytes.get(at) {
        None => Err(parse_err(at, "unexpected end of input")),
        Some(&b) if (BIAS..=BIAS + 63).contains(&b) => Ok(b - BIAS),
        Some(&b) => Err(parse_err(at, format!("byte 0x{b:02x} outside the graph6 range"))),
    }
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = sextet(bytes, 0)?;
    if first < 63 {
        return Ok((first as usize, 1));
    }
    if bytes.get(1) == Some(&126) {
        let mut n = 0usize;
        for k in 0..6 {
            n = (n << 6) | sextet(bytes, 2 + k)? as usize;
        }
        if n <= MEDIUM_MAX || n > LONG_MAX {
            return Err(parse_err(0, format!("order {n} not in the 8-byte header range")));
        }
        Ok((n, 8))
    } else {
        let mut n = 0usize;
        for k in 0..3 {
            n = (n << 6) | sextet(bytes, 1 + k)? as usize;
        }
        if n <= SHORT_MAX {
            return Err(parse_err(0, format!("order {n} not in the 4-byte header range")));
        }
        Ok((n, 4))
    }
}

/// Decodes one graph6 string; surrounding whitespace and an optional
/// `>>graph6<<` header are ignored.
pub fn graph6_decode(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    let body = trimmed.strip_prefix(">>graph6<<").unwrap_or(trimmed);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(0, "empty graph6 string"));
    }
    let (n, header) = decode_order(bytes)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != header + nbytes {
        return Err(parse_err(
            bytes.len().min(header + nbytes),
            format!("expected {} bytes for order {n}, found {}", header + nbytes, bytes.len()),
        ));
    }
    let mut g = Graph::empty(n);
    let (mut i, mut j) = (0usize, 1usize);
    for k in 0..nbytes {
        let at = header + k;
        let s = sextet(bytes, at)?;
        for bit in (0..6).rev() {
            let idx = k * 6 + (5 - bit);
            let on = s >> bit & 1 == 1;
            if idx >= nbits {
                if on {
                    return Err(parse_err(at, "nonzero padding bits"));
                }
                continue;
            }
            if on {
                g.set_edge(i, j, true);
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Ok(g)
}
