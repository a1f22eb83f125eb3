//! Text formats: a plain edge list and standard graph6.
//!
//! Edge list: the first significant line holds the order `n`, each further
//! line one edge `u v`. Anything after `#` on a line is a comment.

use std::str::FromStr;

use super::Graph;
use crate::error::{Error, ParseError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "edge-list" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            other => Err(Error::ParameterOutOfRange(format!(
                "unknown graph format '{other}'"
            ))),
        }
    }
}

const GRAPH6_HEADER: &str = ">>graph6<<";

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

/// Edge list when the first significant line is a lone integer, graph6
/// otherwise. graph6 never uses ASCII digits, so the rule is unambiguous.
pub fn detect_format(text: &str) -> GraphFormat {
    let first = text
        .lines()
        .map(|l| strip_comment(l).trim())
        .find(|l| !l.is_empty());
    match first {
        Some(line) if line.parse::<usize>().is_ok() => GraphFormat::EdgeList,
        _ => GraphFormat::Graph6,
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    let mut graphs = parse_graphs(text, format)?;
    match graphs.len() {
        1 => Ok(graphs.pop().unwrap()),
        0 => Err(ParseError::new(1, 0, "no graph in input").into()),
        k => Err(ParseError::new(1, 0, format!("expected one graph, found {k}")).into()),
    }
}

/// Parses every graph in `text`: one graph6 string per line, or consecutive
/// edge-list blocks each opened by its order line.
pub fn parse_graphs(text: &str, format: GraphFormat) -> Result<Vec<Graph>> {
    match format {
        GraphFormat::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| decode_graph6(l.trim(), i + 1))
            .collect(),
        GraphFormat::EdgeList => parse_edge_lists(text),
    }
}

/// Declared order, header line number and edges of the graph being read.
type PendingGraph = (usize, usize, Vec<(usize, usize)>);

fn parse_edge_lists(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    let mut current: Option<PendingGraph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(raw);
        let tokens: Vec<(usize, &str)> = line
            .split_whitespace()
            .map(|t| (t.as_ptr() as usize - line.as_ptr() as usize, t))
            .collect();
        let number = |(offset, tok): (usize, &str)| {
            tok.parse::<usize>().map_err(|_| {
                ParseError::new(
                    lineno,
                    offset,
                    format!("expected a vertex index, found '{tok}'"),
                )
            })
        };
        match tokens.len() {
            0 => continue,
            1 => {
                if let Some(done) = current.take() {
                    graphs.push(finish_edge_list(done)?);
                }
                let n = number(tokens[0])?;
                current = Some((n, lineno, Vec::new()));
            }
            2 => {
                let Some((n, _, edges)) = current.as_mut() else {
                    return Err(
                        ParseError::new(lineno, tokens[0].0, "edge before the order line").into(),
                    );
                };
                let (u, v) = (number(tokens[0])?, number(tokens[1])?);
                if u >= *n || v >= *n {
                    return Err(ParseError::new(
                        lineno,
                        tokens[0].0,
                        format!("edge {u} {v} out of range for order {n}"),
                    )
                    .into());
                }
                edges.push((u, v));
            }
            _ => {
                return Err(ParseError::new(
                    lineno,
                    tokens[2].0,
                    "expected 'u v' or a single order",
                )
                .into());
            }
        }
    }
    if let Some(done) = current.take() {
        graphs.push(finish_edge_list(done)?);
    }
    Ok(graphs)
}

fn finish_edge_list((n, line, edges): (usize, usize, Vec<(usize, usize)>)) -> Result<Graph> {
    Graph::from_edges(n, edges).map_err(|e| match e {
        Error::InvalidGraph(msg) => ParseError::new(line, 0, msg).into(),
        other => other,
    })
}

/// One graph as text ending in a newline, so outputs concatenate into a
/// valid multi-graph stream.
pub fn serialize_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graph6 => encode_graph6(g) + "\n",
        GraphFormat::EdgeList => {
            let mut out = format!("{}\n", g.order());
            for (u, v) in g.edges() {
                out.push_str(&format!("{u} {v}\n"));
            }
            out
        }
    }
}

pub(crate) fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
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
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub(crate) fn decode_graph6(text: &str, line: usize) -> Result<Graph> {
    let body = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let base = text.len() - body.len();
    let bytes = body.as_bytes();
    let err =
        |offset: usize, msg: &str| -> Error { ParseError::new(line, base + offset, msg).into() };
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(err(pos, "byte outside the graph6 range"));
    }
    let (n, start) = match bytes {
        [] => return Err(err(0, "empty graph6 string")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(err(2, "truncated order field"));
            }
            (
                rest[..6]
                    .iter()
                    .fold(0usize, |a, &b| (a << 6) | (b - 63) as usize),
                8,
            )
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err(1, "truncated order field"));
            }
            (
                rest[..3]
                    .iter()
                    .fold(0usize, |a, &b| (a << 6) | (b - 63) as usize),
                4,
            )
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    if n == 0 {
        return Err(err(0, "order must be at least 1"));
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    let data = &bytes[start..];
    if data.len() != expected {
        return Err(err(
            start,
            &format!("expected {expected} data bytes, found {}", data.len()),
        ));
    }
    let bit = |k: usize| ((data[k / 6] - 63) >> (5 - k % 6)) & 1 == 1;
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
    Graph::from_edges(n, edges)
}
