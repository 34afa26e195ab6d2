//! PACE 2017 text formats: `.gr` graphs and `.td` tree decompositions.
//! Files use 1-based vertex and bag ids; everything in memory is 0-based.

use std::fmt::Write as _;

use crate::error::{ParseError, ParseErrorKind};
use crate::graph::{Graph, VertexSet};
use crate::triangulation::TreeDecomposition;

#[derive(Clone, Debug)]
pub struct ParsedGraph {
    pub graph: Graph,
    /// External label of each internal vertex (its 1-based file id).
    pub labels: Vec<usize>,
    /// Edge lines dropped as self-loops or duplicates.
    pub dropped: usize,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn parse_fields<const N: usize>(tokens: &[&str], line: usize, raw: &str) -> Result<[usize; N], ParseError> {
    let bad = || err(line, ParseErrorKind::BadLine(raw.trim().to_string()));
    if tokens.len() != N {
        return Err(bad());
    }
    let mut out = [0; N];
    for (slot, t) in out.iter_mut().zip(tokens) {
        *slot = t.parse().map_err(|_| bad())?;
    }
    Ok(out)
}

fn vertex_id(id: usize, n: usize, line: usize) -> Result<usize, ParseError> {
    if id == 0 || id > n {
        return Err(err(line, ParseErrorKind::IdOutOfRange { id, n }));
    }
    Ok(id - 1)
}

/// Parses a `.gr` file: comment lines start with `c`, one header
/// `p tw <n> <m>`, then exactly `m` edge lines `<u> <v>`.
pub fn parse_graph(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut edge_lines = 0;
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.first() {
            None | Some(&"c") => continue,
            Some(&"p") => {
                if header.is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateHeader));
                }
                let bad = || err(line, ParseErrorKind::BadHeader(raw.trim().to_string()));
                if tokens.len() != 4 || tokens[1] != "tw" {
                    return Err(bad());
                }
                let n = tokens[2].parse().map_err(|_| bad())?;
                let m = tokens[3].parse().map_err(|_| bad())?;
                header = Some((n, m));
            }
            Some(_) => {
                let (n, _) = header.ok_or_else(|| err(line, ParseErrorKind::MissingHeader))?;
                let [u, v] = parse_fields::<2>(&tokens, line, raw)?;
                edges.push((vertex_id(u, n, line)?, vertex_id(v, n, line)?));
                edge_lines += 1;
            }
        }
    }
    let (n, m) = header.ok_or_else(|| err(last_line.max(1), ParseErrorKind::MissingHeader))?;
    if edge_lines != m {
        return Err(err(
            last_line.max(1),
            ParseErrorKind::CountMismatch {
                what: "edges",
                declared: m,
                found: edge_lines,
            },
        ));
    }
    let graph = Graph::from_edges(n, edges).expect("ids checked while parsing");
    Ok(ParsedGraph {
        dropped: m - graph.m(),
        labels: (1..=n).collect(),
        graph,
    })
}

/// Writes a graph as a `.gr` file.
pub fn emit_graph(g: &Graph) -> String {
    let mut out = format!("p tw {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Writes a decomposition as a `.td` file. The output depends only on the
/// decomposition, so identical inputs give identical bytes.
pub fn emit_decomposition(td: &TreeDecomposition, n: usize) -> String {
    let mut out = format!("s td {} {} {}\n", td.bags.len(), td.max_bag_size(), n);
    for (i, bag) in td.bags.iter().enumerate() {
        write!(out, "b {}", i + 1).unwrap();
        for v in bag.iter() {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    for &(a, b) in &td.edges {
        writeln!(out, "{} {}", a + 1, b + 1).unwrap();
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedDecomposition {
    /// Vertex count declared by the solution line.
    pub n: usize,
    pub td: TreeDecomposition,
}

/// Parses a `.td` file. Vertex ids are only checked against the declared
/// `n`; whether they fit a particular graph is up to the validator.
pub fn parse_decomposition(text: &str) -> Result<ParsedDecomposition, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut bags: Vec<Option<VertexSet>> = Vec::new();
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.first() {
            None | Some(&"c") => continue,
            Some(&"s") => {
                if header.is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateHeader));
                }
                let bad = || err(line, ParseErrorKind::BadHeader(raw.trim().to_string()));
                if tokens.len() != 5 || tokens[1] != "td" {
                    return Err(bad());
                }
                let nums: Vec<usize> = tokens[2..]
                    .iter()
                    .map(|t| t.parse().map_err(|_| bad()))
                    .collect::<Result<_, _>>()?;
                header = Some((nums[0], nums[2]));
                bags = vec![None; nums[0]];
            }
            Some(&"b") => {
                let (nb, n) = header.ok_or_else(|| err(line, ParseErrorKind::MissingHeader))?;
                let bad = || err(line, ParseErrorKind::BadLine(raw.trim().to_string()));
                let idx: usize = tokens.get(1).and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                if idx == 0 || idx > nb {
                    return Err(err(line, ParseErrorKind::BagOutOfRange(idx)));
                }
                if bags[idx - 1].is_some() {
                    return Err(bad());
                }
                let mut bag = VertexSet::new();
                for t in &tokens[2..] {
                    let v: usize = t.parse().map_err(|_| bad())?;
                    bag.insert(vertex_id(v, n, line)?);
                }
                bags[idx - 1] = Some(bag);
            }
            Some(_) => {
                let (nb, _) = header.ok_or_else(|| err(line, ParseErrorKind::MissingHeader))?;
                let [a, b] = parse_fields::<2>(&tokens, line, raw)?;
                for idx in [a, b] {
                    if idx == 0 || idx > nb {
                        return Err(err(line, ParseErrorKind::BagOutOfRange(idx)));
                    }
                }
                edges.push((a - 1, b - 1));
            }
        }
    }
    let (nb, n) = header.ok_or_else(|| err(last_line.max(1), ParseErrorKind::MissingHeader))?;
    let found = bags.iter().filter(|b| b.is_some()).count();
    if found != nb {
        return Err(err(
            last_line.max(1),
            ParseErrorKind::CountMismatch {
                what: "bags",
                declared: nb,
                found,
            },
        ));
    }
    Ok(ParsedDecomposition {
        n,
        td: TreeDecomposition {
            bags: bags.into_iter().map(Option::unwrap).collect(),
            edges,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path() {
        let p = parse_graph("c a path\np tw 3 2\n1 2\n2 3\n").unwrap();
        assert_eq!(p.graph.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(p.dropped, 0);
        assert_eq!(p.labels, vec![1, 2, 3]);
    }

    #[test]
    fn drops_loops_and_duplicates() {
        let p = parse_graph("p tw 3 4\n1 2\n3 3\n2 1\n2 3\n").unwrap();
        assert_eq!(p.graph.m(), 2);
        assert_eq!(p.dropped, 2);
    }

    #[test]
    fn parse_errors_carry_lines() {
        let e = parse_graph("p tw 3 5\n1 2\n2 3\n1 3\n3 1\n").unwrap_err();
        assert_eq!(
            e.kind,
            ParseErrorKind::CountMismatch {
                what: "edges",
                declared: 5,
                found: 4
            }
        );
        assert!(e.to_string().contains("declares 5 edges, found 4"));
        assert_eq!(parse_graph("c\np tw 3 1\n1 4\n").unwrap_err().line, 3);
        assert!(matches!(
            parse_graph("1 2\n").unwrap_err().kind,
            ParseErrorKind::MissingHeader
        ));
        assert!(matches!(
            parse_graph("p td 3 1\n").unwrap_err().kind,
            ParseErrorKind::BadHeader(_)
        ));
        assert!(matches!(
            parse_graph("p tw 3 1\n1 x\n").unwrap_err().kind,
            ParseErrorKind::BadLine(_)
        ));
        assert!(matches!(
            parse_graph("p tw 3 0\np tw 3 0\n").unwrap_err().kind,
            ParseErrorKind::DuplicateHeader
        ));
    }

    #[test]
    fn emits_triangle_and_p3() {
        let td = TreeDecomposition {
            bags: vec![VertexSet::from([0, 1, 2])],
            edges: vec![],
        };
        assert_eq!(emit_decomposition(&td, 3), "s td 1 3 3\nb 1 1 2 3\n");
        let td = TreeDecomposition {
            bags: vec![VertexSet::from([0, 1]), VertexSet::from([1, 2])],
            edges: vec![(0, 1)],
        };
        assert_eq!(emit_decomposition(&td, 3), "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
    }

    #[test]
    fn decomposition_round_trip() {
        let td = TreeDecomposition {
            bags: vec![VertexSet::from([0, 1]), VertexSet::new(), VertexSet::from([1, 2])],
            edges: vec![(0, 1), (0, 2)],
        };
        let parsed = parse_decomposition(&emit_decomposition(&td, 3)).unwrap();
        assert_eq!(parsed.n, 3);
        assert_eq!(parsed.td, td);
    }

    #[test]
    fn decomposition_errors() {
        assert!(matches!(
            parse_decomposition("s td 1 1 2\nb 2 1\n").unwrap_err().kind,
            ParseErrorKind::BagOutOfRange(2)
        ));
        assert!(matches!(
            parse_decomposition("s td 2 1 2\nb 1 1\n").unwrap_err().kind,
            ParseErrorKind::CountMismatch { what: "bags", .. }
        ));
        assert!(matches!(
            parse_decomposition("s td 1 1 2\nb 1 3\n").unwrap_err().kind,
            ParseErrorKind::IdOutOfRange { id: 3, n: 2 }
        ));
        assert!(matches!(
            parse_decomposition("b 1 1\n").unwrap_err().kind,
            ParseErrorKind::MissingHeader
        ));
    }

    #[test]
    fn graph_round_trip() {
        let g = Graph::grid(3, 3);
        assert_eq!(parse_graph(&emit_graph(&g)).unwrap().graph, g);
    }
}
