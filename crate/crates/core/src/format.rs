//! graph6 and edge-list text formats.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with `0 <= u < v < n`.
//! graph6: the size prefix (one byte `63 + n` for `n <= 62`, otherwise `~`
//! and three bytes) followed by the upper triangle of the adjacency matrix in
//! column order `(0,1),(0,2),(1,2),(0,3),...`, six bits per byte, each byte
//! offset by 63 and the last group zero-padded.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{bit, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("graph6: {0}")]
    Graph6(String),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let rows: Vec<u64> = (0..g.order()).map(|v| g.neighbor_mask(v)).collect();
    encode_graph6_rows(g.order(), &rows)
}

/// Encodes adjacency rows (`rows[u]` has bit `v` set iff `uv` is an edge).
pub(crate) fn encode_graph6_rows(n: usize, rows: &[u64]) -> String {
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push((63 + n as u8) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((63 + ((n >> shift) & 0x3f) as u8) as char);
        }
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for row in rows.iter().take(j) {
            group = (group << 1) | u8::from(row & bit(j) != 0);
            filled += 1;
            if filled == 6 {
                out.push((63 + group) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((63 + (group << (6 - filled))) as char);
    }
    out
}

pub fn decode_graph6(text: &str) -> Result<Graph, FormatError> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(FormatError::Graph6(format!("invalid byte {b:#04x}")));
    }
    let (n, body) = match bytes {
        [] => return Err(FormatError::Graph6("empty input".into())),
        [b'~', b'~', ..] => return Err(FormatError::Graph6("vertex count too large".into())),
        [b'~', a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [b'~', ..] => return Err(FormatError::Graph6("truncated size prefix".into())),
        [first, rest @ ..] => ((*first - 63) as usize, rest),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(FormatError::Graph6(format!(
            "expected {} data bytes for {n} vertices, found {}",
            pairs.div_ceil(6),
            body.len()
        )));
    }
    let mut g = Graph::empty(n).map_err(|e| FormatError::Graph6(e.to_string()))?;
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[idx / 6] - 63;
            if byte & (0x20 >> (idx % 6)) != 0 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    if !edges.is_empty() {
        g = g
            .edit_edges(&edges, &[])
            .map_err(|e| FormatError::Graph6(e.to_string()))?;
    }
    Ok(g)
}

/// Parses every nonblank line of `text` as a graph6 string.
pub fn decode_graph6_lines(text: &str) -> Result<Vec<Graph>, FormatError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            decode_graph6(l).map_err(|e| match e {
                FormatError::Graph6(msg) => syntax(i + 1, format!("graph6: {msg}")),
                other => other,
            })
        })
        .collect()
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.order(), g.size()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "missing header line \"n m\""))?;
    let [n, m] = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, l) in lines {
        if edges.len() == m {
            return Err(syntax(line, format!("more than the {m} declared edges")));
        }
        let [u, v] = parse_pair(line, l)?;
        if u >= n || v >= n {
            let vertex = u.max(v);
            return Err(FormatError::Graph {
                line,
                source: GraphError::VertexOutOfRange { vertex, n },
            });
        }
        if u == v {
            return Err(FormatError::Graph {
                line,
                source: GraphError::SelfLoop(u),
            });
        }
        edges.push((u, v));
        last_line = line;
    }
    if edges.len() != m {
        return Err(syntax(
            last_line,
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, &edges).map_err(|source| FormatError::Graph {
        line: hline,
        source,
    })
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2], FormatError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(syntax(
            line,
            format!("expected two integers, found {:?}", text),
        ));
    }
    let mut out = [0; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f
            .parse()
            .map_err(|_| syntax(line, format!("not a nonnegative integer: {f:?}")))?;
    }
    Ok(out)
}
