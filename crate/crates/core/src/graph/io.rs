//! Text interchange formats: graph6, edge lists and DIMACS.
//!
//! Edge-list and DIMACS labels are relabeled to `0..n` in first-seen order.
//! DIMACS is 1-indexed on disk.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    Edges,
    Dimacs,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edges" | "edgelist" | "edge-list" => Ok(Format::Edges),
            "dimacs" | "col" => Ok(Format::Dimacs),
            other => Err(Error::InvalidArgument(format!(
                "unknown graph format '{other}'"
            ))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Graph6 => "graph6",
            Format::Edges => "edges",
            Format::Dimacs => "dimacs",
        })
    }
}

const G6_HEADER: &str = ">>graph6<<";

/// Guesses the format of a document from its first meaningful line.
pub fn sniff_format(text: &str) -> Format {
    let Some(line) = text.lines().map(str::trim).find(|l| !l.is_empty()) else {
        return Format::Edges;
    };
    let line = line.strip_prefix(G6_HEADER).unwrap_or(line);
    if line.starts_with("p ") || line.starts_with("c ") || line == "c" || line.starts_with("e ") {
        Format::Dimacs
    } else if !line.contains(char::is_whitespace)
        && !line.starts_with("n=")
        && line.bytes().all(|b| (63..=126).contains(&b))
    {
        Format::Graph6
    } else {
        Format::Edges
    }
}

/// Parses every graph in `text`. graph6 documents may hold one graph per
/// line; the other formats hold exactly one.
pub fn parse_graphs(text: &str, format: Format) -> Result<Vec<Graph>> {
    match format {
        Format::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                decode_graph6(l.trim()).map_err(|e| match e {
                    Error::Parse { msg, .. } => parse_err(i + 1, msg),
                    other => other,
                })
            })
            .collect(),
        Format::Edges => Ok(vec![parse_edge_list(text)?]),
        Format::Dimacs => Ok(vec![parse_dimacs(text)?]),
    }
}

/// Parses exactly one graph.
pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    let mut graphs = parse_graphs(text, format)?;
    match graphs.len() {
        1 => Ok(graphs.pop().expect("one graph")),
        0 => Err(parse_err(1, "no graph found")),
        k => Err(parse_err(1, format!("expected one graph, found {k}"))),
    }
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => encode_graph6(g) + "\n",
        Format::Edges => write_edge_list(g),
        Format::Dimacs => write_dimacs(g),
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn decode_graph6(s: &str) -> Result<Graph> {
    let s = s.strip_prefix(G6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(parse_err(1, format!("invalid graph6 byte 0x{b:02x}")));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, body) = match bytes {
        [] => return Err(parse_err(1, "empty graph6 string")),
        [126, 126, rest @ ..] if rest.len() >= 6 => (
            rest[..6].iter().fold(0, |acc, &b| (acc << 6) | six(b)),
            &rest[6..],
        ),
        [126, rest @ ..] if rest.len() >= 3 => (
            rest[..3].iter().fold(0, |acc, &b| (acc << 6) | six(b)),
            &rest[3..],
        ),
        [126, ..] => return Err(parse_err(1, "truncated graph6 size field")),
        [b, rest @ ..] => (six(*b), rest),
    };
    let total = n * n.saturating_sub(1) / 2;
    let expected = total.div_ceil(6);
    if body.len() != expected {
        return Err(parse_err(
            1,
            format!(
                "graph6 body has {} bytes, expected {expected} for n={n}",
                body.len()
            ),
        ));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = six(body[k / 6]);
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Edge-list text: one `u v` pair per line, optional `n=<int>` header for
/// trailing isolated vertices, `#` comments.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut labels: HashMap<String, usize> = HashMap::new();
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n=") {
            let n = rest
                .trim()
                .parse()
                .map_err(|_| parse_err(i + 1, format!("bad vertex count '{rest}'")))?;
            declared = Some(n);
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(i + 1, format!("expected 'u v', got '{line}'")));
        }
        let mut ids = [0; 2];
        for (slot, tok) in ids.iter_mut().zip(&toks) {
            let next = labels.len();
            *slot = *labels.entry((*tok).to_string()).or_insert(next);
        }
        if ids[0] == ids[1] {
            return Err(parse_err(i + 1, format!("self-loop on '{}'", toks[0])));
        }
        edges.push((ids[0], ids[1]));
    }
    let n = match declared {
        Some(n) if n < labels.len() => {
            return Err(parse_err(
                1,
                format!("header declares n={n} but {} labels appear", labels.len()),
            ))
        }
        Some(n) => n,
        None => labels.len(),
    };
    Graph::from_edges(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if toks.len() != 4 || !matches!(toks[1], "edge" | "col") {
                    return Err(parse_err(i + 1, "expected 'p edge <n> <m>'"));
                }
                let n = toks[2]
                    .parse()
                    .map_err(|_| parse_err(i + 1, format!("bad vertex count '{}'", toks[2])))?;
                g = Some(Graph::new(n));
            }
            Some("e") => {
                let graph = g
                    .as_mut()
                    .ok_or_else(|| parse_err(i + 1, "edge line before problem line"))?;
                if toks.len() != 3 {
                    return Err(parse_err(i + 1, "expected 'e <u> <v>'"));
                }
                let mut ends = [0usize; 2];
                for (slot, tok) in ends.iter_mut().zip(&toks[1..]) {
                    let v: usize = tok
                        .parse()
                        .map_err(|_| parse_err(i + 1, format!("bad vertex '{tok}'")))?;
                    if v == 0 || v > graph.n() {
                        return Err(parse_err(i + 1, format!("vertex {v} out of range")));
                    }
                    *slot = v - 1;
                }
                graph
                    .add_edge(ends[0], ends[1])
                    .map_err(|e| parse_err(i + 1, e.to_string()))?;
            }
            Some(other) => {
                return Err(parse_err(
                    i + 1,
                    format!("unknown DIMACS line type '{other}'"),
                ))
            }
        }
    }
    g.ok_or_else(|| parse_err(1, "missing 'p edge' line"))
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn graph6_known_strings() {
        // 5-vertex graph with edges 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g), "DQc");
        assert_eq!(encode_graph6(&Graph::petersen()), "IheA@GUAo");
        assert_eq!(decode_graph6("IheA@GUAo").unwrap(), Graph::petersen());
        assert_eq!(encode_graph6(&Graph::new(0)), "?");
        assert_eq!(decode_graph6(">>graph6<<DQc").unwrap(), g);
    }

    #[test]
    fn graph6_large_size_field() {
        let g = Graph::path(100);
        let s = encode_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_rejects_bad_input() {
        assert!(decode_graph6("D Q").is_err());
        assert!(decode_graph6("DQ").is_err());
        assert!(decode_graph6("~?").is_err());
    }

    #[test]
    fn edge_list_relabels_in_first_seen_order() {
        let g = parse_edge_list("# triangle plus pendant\nn=5\nb a\na c\nc b\nc zed\n").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (1, 2), (2, 3)]
        );
        assert_eq!(g.degree(4), 0);
        assert!(parse_edge_list("n=2\n0 1\n1 2\n").is_err());
        assert!(parse_edge_list("0 0\n").is_err());
        assert!(parse_edge_list("0 1 2\n").is_err());
    }

    #[test]
    fn dimacs_is_one_indexed() {
        let g = parse_dimacs("c example\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(write_dimacs(&g), "p edge 3 2\ne 1 2\ne 2 3\n");
        assert!(parse_dimacs("p edge 3 1\ne 0 1\n").is_err());
        assert!(parse_dimacs("e 1 2\n").is_err());
    }

    #[test]
    fn sniffing() {
        assert_eq!(sniff_format("IheA@GUAo\n"), Format::Graph6);
        assert_eq!(sniff_format("p edge 2 1\ne 1 2\n"), Format::Dimacs);
        assert_eq!(sniff_format("0 1\n1 2\n"), Format::Edges);
        assert_eq!(sniff_format("n=3\n"), Format::Edges);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..70).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut g = Graph::new(n);
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bits[k] {
                            g.add_edge(u, v).unwrap();
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
        fn every_format_round_trips(g in arb_graph()) {
            prop_assert_eq!(&decode_graph6(&encode_graph6(&g)).unwrap(), &g);
            prop_assert_eq!(&parse_edge_list(&write_edge_list(&g)).unwrap().degree_sequence(), &g.degree_sequence());
            prop_assert_eq!(&parse_dimacs(&write_dimacs(&g)).unwrap(), &g);
        }
    }
}
