//! Text formats: DIMACS-style graph files, certificate files and PACE tree
//! decompositions. Files use 1-based vertex ids; everything in memory is 0-based.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn is_skippable(line: &str) -> bool {
    let t = line.trim();
    t.is_empty() || t.starts_with('c')
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| parse_err(line, format!("{what} `{tok}` is not a nonnegative integer")))
}

fn parse_vertex(tok: Option<&str>, line: usize, n: usize) -> Result<usize> {
    let v = parse_num(tok, line, "vertex id")?;
    if v == 0 || v > n {
        return Err(parse_err(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

/// Parses `p edge <n> <m>` followed by `m` lines `e <u> <v>`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut graph: Option<(Graph, usize, usize)> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        if is_skippable(raw) {
            continue;
        }
        let mut toks = raw.split_whitespace();
        match toks.next() {
            Some("p") => {
                if graph.is_some() {
                    return Err(parse_err(line, "second `p` header"));
                }
                if toks.next() != Some("edge") {
                    return Err(parse_err(line, "expected `p edge <n> <m>`"));
                }
                let n = parse_num(toks.next(), line, "vertex count")?;
                let m = parse_num(toks.next(), line, "edge count")?;
                graph = Some((Graph::new(n), m, line));
            }
            Some("e") => {
                let (g, _, _) = graph
                    .as_mut()
                    .ok_or_else(|| parse_err(line, "edge line before the `p edge` header"))?;
                let n = g.n();
                let u = parse_vertex(toks.next(), line, n)?;
                let v = parse_vertex(toks.next(), line, n)?;
                if u == v {
                    return Err(parse_err(line, format!("self-loop at vertex {}", u + 1)));
                }
                if g.has_edge(u, v) {
                    return Err(parse_err(line, format!("duplicate edge {} {}", u + 1, v + 1)));
                }
                g.add_edge(u, v).expect("checked");
            }
            Some(other) => return Err(parse_err(line, format!("unexpected line type `{other}`"))),
            None => unreachable!("blank lines are skipped"),
        }
        if toks.next().is_some() {
            return Err(parse_err(line, "trailing tokens"));
        }
    }
    let (g, m, header) = graph.ok_or_else(|| parse_err(last_line.max(1), "missing `p edge` header"))?;
    if g.m() != m {
        return Err(parse_err(header, format!("header announces {m} edges, found {}", g.m())));
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Parses a certificate file: `NO`, or `YES <count>` followed by `count`
/// lines `a <u> <v>`. Returns `None` for `NO`.
pub fn parse_certificate(text: &str, n: usize) -> Result<Option<Vec<(usize, usize)>>> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !is_skippable(l));
    let (idx, head) = lines.next().ok_or_else(|| parse_err(1, "empty certificate"))?;
    let mut toks = head.split_whitespace();
    let count = match toks.next() {
        Some("NO") => {
            if let Some((idx, _)) = lines.next() {
                return Err(parse_err(idx + 1, "content after NO"));
            }
            return Ok(None);
        }
        Some("YES") => parse_num(toks.next(), idx + 1, "edge count")?,
        _ => return Err(parse_err(idx + 1, "expected `YES <count>` or `NO`")),
    };
    let mut edges = Vec::with_capacity(count);
    for (idx, raw) in lines {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        if toks.next() != Some("a") {
            return Err(parse_err(line, "expected `a <u> <v>`"));
        }
        let u = parse_vertex(toks.next(), line, n)?;
        let v = parse_vertex(toks.next(), line, n)?;
        if toks.next().is_some() {
            return Err(parse_err(line, "trailing tokens"));
        }
        edges.push((u, v));
    }
    if edges.len() != count {
        return Err(parse_err(idx + 1, format!("header announces {count} edges, found {}", edges.len())));
    }
    Ok(Some(edges))
}

pub fn write_certificate(edges: Option<&[(usize, usize)]>) -> String {
    match edges {
        None => "NO\n".to_string(),
        Some(edges) => {
            let mut out = format!("YES {}\n", edges.len());
            for &(u, v) in edges {
                writeln!(out, "a {} {}", u + 1, v + 1).unwrap();
            }
            out
        }
    }
}

/// A tree decomposition as read from a PACE `.td` file, 0-based throughout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawDecomposition {
    pub n: usize,
    pub bags: Vec<Vec<usize>>,
    pub tree_edges: Vec<(usize, usize)>,
}

/// Parses `s td <num_bags> <max_bag_size> <n>`, lines `b <id> <v...>` and
/// tree edges `<id> <id>`.
pub fn parse_decomposition(text: &str) -> Result<RawDecomposition> {
    let mut header: Option<(usize, usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut tree_edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if is_skippable(raw) {
            continue;
        }
        let mut toks = raw.split_whitespace().peekable();
        match *toks.peek().unwrap() {
            "s" => {
                toks.next();
                if header.is_some() {
                    return Err(parse_err(line, "second `s td` header"));
                }
                if toks.next() != Some("td") {
                    return Err(parse_err(line, "expected `s td <bags> <width+1> <n>`"));
                }
                let nb = parse_num(toks.next(), line, "bag count")?;
                let mb = parse_num(toks.next(), line, "max bag size")?;
                let n = parse_num(toks.next(), line, "vertex count")?;
                header = Some((nb, mb, n, line));
                bags = vec![None; nb];
            }
            "b" => {
                toks.next();
                let (nb, mb, n, _) =
                    header.ok_or_else(|| parse_err(line, "bag line before the `s td` header"))?;
                let id = parse_num(toks.next(), line, "bag id")?;
                if id == 0 || id > nb {
                    return Err(parse_err(line, format!("bag id {id} outside 1..={nb}")));
                }
                if bags[id - 1].is_some() {
                    return Err(parse_err(line, format!("bag {id} defined twice")));
                }
                let mut bag = Vec::new();
                for tok in toks.by_ref() {
                    bag.push(parse_vertex(Some(tok), line, n)?);
                }
                bag.sort_unstable();
                bag.dedup();
                if bag.len() > mb {
                    return Err(parse_err(line, format!("bag {id} has {} vertices, header allows {mb}", bag.len())));
                }
                bags[id - 1] = Some(bag);
            }
            _ => {
                let (nb, _, _, _) =
                    header.ok_or_else(|| parse_err(line, "tree edge before the `s td` header"))?;
                let a = parse_num(toks.next(), line, "bag id")?;
                let b = parse_num(toks.next(), line, "bag id")?;
                if a == 0 || a > nb || b == 0 || b > nb {
                    return Err(parse_err(line, format!("tree edge {a} {b} references an unknown bag")));
                }
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens"));
                }
                tree_edges.push((a - 1, b - 1));
            }
        }
    }
    let (_, _, n, hline) = header.ok_or_else(|| parse_err(1, "missing `s td` header"))?;
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| parse_err(hline, format!("bag {} never defined", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    Ok(RawDecomposition { n, bags, tree_edges })
}

pub fn write_decomposition(d: &RawDecomposition) -> String {
    let width = d.bags.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = format!("s td {} {} {}\n", d.bags.len(), width, d.n);
    for (i, bag) in d.bags.iter().enumerate() {
        write!(out, "b {}", i + 1).unwrap();
        for v in bag {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    for &(a, b) in &d.tree_edges {
        writeln!(out, "{} {}", a + 1, b + 1).unwrap();
    }
    out
}

/// Parses one whitespace-separated integer sequence per nonblank line.
pub fn parse_sequences(text: &str) -> Result<Vec<Vec<usize>>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(idx, l)| {
            l.split_whitespace()
                .map(|t| parse_num(Some(t), idx + 1, "degree"))
                .collect::<Result<Vec<_>>>()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_file_round_trip() {
        let text = "c a path\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g, Graph::path(4));
        assert_eq!(write_graph(&g), "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
    }

    #[test]
    fn duplicate_edge_names_the_line() {
        let err = parse_graph("p edge 3 2\ne 1 2\ne 2 1\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 3, message: "duplicate edge 2 1".into() });
    }

    #[test]
    fn graph_file_errors() {
        assert!(matches!(parse_graph("e 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("p edge 2 1\ne 1 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("p edge 2 2\ne 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("p edge 2 1\ne 1 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn certificate_round_trip() {
        let text = write_certificate(Some(&[(0, 3), (1, 2)]));
        assert_eq!(text, "YES 2\na 1 4\na 2 3\n");
        assert_eq!(parse_certificate(&text, 4).unwrap(), Some(vec![(0, 3), (1, 2)]));
        assert_eq!(parse_certificate("NO\n", 4).unwrap(), None);
        assert!(parse_certificate("YES 2\na 1 4\n", 4).is_err());
        assert!(parse_certificate("YES 1\na 1 9\n", 4).is_err());
    }

    #[test]
    fn decomposition_file() {
        let text = "c path\ns td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n";
        let d = parse_decomposition(text).unwrap();
        assert_eq!(d.bags, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(d.tree_edges, vec![(0, 1)]);
        assert_eq!(parse_decomposition(&write_decomposition(&d)).unwrap(), d);
        assert!(parse_decomposition("s td 1 1 2\nb 1 1 2\n").is_err());
        assert!(parse_decomposition("s td 2 2 2\nb 1 1 2\n").is_err());
    }

    #[test]
    fn sequences() {
        assert_eq!(parse_sequences("2 2 2\n\n3 3 3 1\n").unwrap(), vec![vec![2, 2, 2], vec![3, 3, 3, 1]]);
        assert!(parse_sequences("2 -1\n").is_err());
    }
}
