//! graph6 text encoding and the JSON edge-list form.
//!
//! graph6: a size header `N(n)` followed by the upper triangle of the
//! adjacency matrix, column by column (`(0,1), (0,2), (1,2), (0,3), ...`),
//! packed six bits per byte, each byte offset by 63.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

const OFFSET: u8 = 63;
const OPTIONAL_HEADER: &str = ">>graph6<<";

fn bad(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
}

fn sextet(bytes: &[u8]) -> usize {
    bytes
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - OFFSET))
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    match bytes {
        [] => Err(bad("empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(bad("truncated 8-byte size header"));
            }
            Ok((sextet(&rest[..6]), 8))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated 4-byte size header"));
            }
            let n = sextet(&rest[..3]);
            if n <= 62 {
                return Err(bad(format!("non-minimal size header for n = {n}")));
            }
            Ok((n, 4))
        }
        [b, ..] => Ok((usize::from(*b - OFFSET), 1)),
    }
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.adjacent(i, j));
            bits += 1;
            if bits == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 output is printable ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(OPTIONAL_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(format!("byte {b:#04x} outside the printable range 63..=126")));
    }
    let (n, header) = decode_size(bytes)?;
    let data = &bytes[header..];
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if data.len() != nbytes {
        return Err(bad(format!(
            "expected {nbytes} data bytes for n = {n}, found {}",
            data.len()
        )));
    }
    let bit = |k: usize| (data[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    if (nbits..nbytes * 6).any(bit) {
        return Err(bad("nonzero padding bits"));
    }
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
    Graph::new(n, &edges)
}

/// Parses one graph per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}

/// `{"n": 3, "edges": [[0, 1], [1, 2]]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for EdgeList {
    fn from(g: &Graph) -> Self {
        EdgeList {
            n: g.order(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<EdgeList> for Graph {
    type Error = Error;

    fn try_from(list: EdgeList) -> Result<Graph> {
        let edges: Vec<_> = list.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(list.n, &edges)
    }
}

pub fn parse_edge_list_json(text: &str) -> Result<Graph> {
    let list: EdgeList = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    list.try_into()
}

pub fn write_edge_list_json(g: &Graph) -> String {
    serde_json::to_string(&EdgeList::from(g)).expect("edge list serializes")
}
