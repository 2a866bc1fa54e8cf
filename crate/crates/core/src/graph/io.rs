//! Text formats: the `n; u-v ...` edge list and standard graph6.

use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

impl GraphFormat {
    /// Guess from a file name: `.g6`/`.graph6` is graph6, anything else an
    /// edge list.
    pub fn from_path(path: &str) -> Self {
        if path.ends_with(".g6") || path.ends_with(".graph6") {
            GraphFormat::Graph6
        } else {
            GraphFormat::EdgeList
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, GraphError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => {
            let mut graphs = parse_graph6_lines(text)?;
            match graphs.len() {
                1 => Ok(graphs.pop().unwrap()),
                0 => Err(GraphError::Malformed("no graph6 line found".into())),
                k => Err(GraphError::Malformed(format!(
                    "expected one graph6 line, found {k}"
                ))),
            }
        }
    }
}

fn strip_comments(text: &str) -> String {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n")
}

fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let cleaned = strip_comments(text);
    let mut tokens = cleaned
        .split(|c: char| c.is_whitespace() || c == ';' || c == ',')
        .filter(|t| !t.is_empty());
    let head = tokens
        .next()
        .ok_or_else(|| GraphError::Malformed("empty input".into()))?;
    let n: usize = head
        .parse()
        .map_err(|_| GraphError::Malformed(format!("vertex count {head:?} is not an integer")))?;
    let mut edges = Vec::new();
    for tok in tokens {
        let (a, b) = tok
            .split_once('-')
            .ok_or_else(|| GraphError::Malformed(format!("edge {tok:?} is not of the form u-v")))?;
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| GraphError::Malformed(format!("bad vertex {s:?} in edge {tok:?}")))
        };
        edges.push((parse(a)?, parse(b)?));
    }
    Graph::new(n, &edges)
}

/// Parses every non-empty line as a graph6 string. A leading `>>graph6<<`
/// header is accepted.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, GraphError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| decode_graph6(l.strip_prefix(">>graph6<<").unwrap_or(l)))
        .collect()
}

fn decode_graph6(line: &str) -> Result<Graph, GraphError> {
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(GraphError::Malformed(format!(
            "byte {b:#x} outside the graph6 range"
        )));
    }
    let data: Vec<u32> = bytes.iter().map(|&b| u32::from(b) - 63).collect();
    let (n, body) = match data.as_slice() {
        [63, 63, rest @ ..] if rest.len() >= 6 => {
            let n = rest[..6]
                .iter()
                .fold(0u64, |acc, &x| (acc << 6) | u64::from(x));
            (n as usize, &rest[6..])
        }
        [63, rest @ ..] if rest.len() >= 3 => {
            let n = rest[..3]
                .iter()
                .fold(0u64, |acc, &x| (acc << 6) | u64::from(x));
            (n as usize, &rest[3..])
        }
        [first, rest @ ..] if *first < 63 => (*first as usize, rest),
        _ => return Err(GraphError::Malformed("truncated graph6 size".into())),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if body.len() != needed {
        return Err(GraphError::Malformed(format!(
            "graph6 body has {} bytes, expected {needed} for n = {n}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] >> (5 - k % 6)) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Graph::new(n, &edges)
}

pub(super) fn encode_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}
