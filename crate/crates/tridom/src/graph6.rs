//! graph6 encoding and decoding.
//!
//! graph6 is the compact ASCII format used by nauty's `geng` and friends:
//! one graph per line, a size byte (`n + 63` for `n <= 62`), then the upper
//! triangle of the adjacency matrix in column order, packed six bits per
//! byte (most significant first) with 63 added to land in printable ASCII.
//!
//! Only the single-byte size form is supported, which covers every graph
//! this crate can represent minus two sizes (63 and 64 need the multi-byte
//! form and never occur in desk-scale corpora). Padding bits must be zero,
//! so for any valid line `encode_graph6(parse_graph6(line))` reproduces the
//! line byte for byte.

use std::io::BufRead;

use thiserror::Error;

use crate::graph::Graph;

/// Optional header emitted by some nauty tools at the start of a file.
pub const HEADER: &str = ">>graph6<<";

const OFFSET: u8 = 63;
const MAX_SINGLE_BYTE_N: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty line")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} outside graph6 range 0x3f..=0x7e")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("multi-byte size form at offset 0 not supported (n > 62)")]
    UnsupportedSize,
    #[error("graph of order 0 not supported")]
    ZeroVertices,
    #[error("expected {expected} data bytes after the size byte, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing byte at offset {offset} past the end of the graph")]
    TrailingGarbage { offset: usize },
    #[error("nonzero padding bits in final byte at offset {offset}")]
    NonzeroPadding { offset: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EncodeError {
    #[error("graph of order {0} not encodable in single-byte graph6 (max 62)")]
    TooLarge(usize),
}

fn data_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Decodes one graph6 line (without any `>>graph6<<` header).
pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(0x3f..=0x7e).contains(&byte) {
            return Err(ParseError::InvalidByte { offset, byte });
        }
    }
    if bytes[0] == 0x7e {
        return Err(ParseError::UnsupportedSize);
    }
    let n = (bytes[0] - OFFSET) as usize;
    if n == 0 {
        return Err(ParseError::ZeroVertices);
    }
    let expected = data_len(n);
    let found = bytes.len() - 1;
    if found < expected {
        return Err(ParseError::Truncated { expected, found });
    }
    if found > expected {
        return Err(ParseError::TrailingGarbage {
            offset: 1 + expected,
        });
    }

    let mut adj = vec![0u64; n];
    let mut bit = 0usize;
    for col in 1..n {
        for row in 0..col {
            let byte = bytes[1 + bit / 6] - OFFSET;
            if byte >> (5 - bit % 6) & 1 == 1 {
                adj[row] |= 1 << col;
                adj[col] |= 1 << row;
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let byte = bytes[1 + bit / 6] - OFFSET;
        let pad_mask = (1 << (6 - bit % 6)) - 1;
        if byte & pad_mask != 0 {
            return Err(ParseError::NonzeroPadding {
                offset: 1 + bit / 6,
            });
        }
    }
    Ok(Graph::from_adjacency_masks(n, adj))
}

/// Encodes a graph as a single graph6 line (no trailing newline).
pub fn encode_graph6(g: &Graph) -> Result<String, EncodeError> {
    let n = g.n();
    if n > MAX_SINGLE_BYTE_N {
        return Err(EncodeError::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + OFFSET);
    let mut acc = 0u8;
    let mut bit = 0usize;
    for col in 1..n {
        for row in 0..col {
            acc = acc << 1 | g.has_edge(row, col) as u8;
            bit += 1;
            if bit.is_multiple_of(6) {
                out.push(acc + OFFSET);
                acc = 0;
            }
        }
    }
    if !bit.is_multiple_of(6) {
        out.push((acc << (6 - bit % 6)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}:{line}: {source}")]
    Parse {
        path: String,
        line: usize,
        source: ParseError,
    },
}

/// Reads newline-delimited graph6 from `reader`, yielding each graph with
/// its original line text and 1-based line number. A `>>graph6<<` header is
/// skipped whether it sits on its own line or is glued to the first graph;
/// blank lines are ignored. `path` only labels errors.
pub fn read_graph6_lines<R: BufRead>(
    reader: R,
    path: &str,
) -> impl Iterator<Item = Result<(usize, String, Graph), ReadError>> {
    let path = path.to_string();
    let mut lines = reader.lines().enumerate();
    let mut first = true;
    std::iter::from_fn(move || loop {
        let (idx, line) = match lines.next()? {
            (idx, Ok(line)) => (idx, line),
            (_, Err(source)) => {
                return Some(Err(ReadError::Io {
                    path: path.clone(),
                    source,
                }));
            }
        };
        let mut text = line.trim_end_matches('\r');
        if first {
            first = false;
            if let Some(rest) = text.strip_prefix(HEADER) {
                text = rest;
            }
        }
        if text.is_empty() {
            continue;
        }
        return Some(match parse_graph6(text) {
            Ok(g) => Ok((idx + 1, text.to_string(), g)),
            Err(source) => Err(ReadError::Parse {
                path: path.clone(),
                line: idx + 1,
                source,
            }),
        });
    })
}
