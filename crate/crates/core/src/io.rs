//! Edge-list text input, and forest output as edge lists or DOT.

use std::fmt::Write as _;

use crate::algo::Forest;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Edges,
    Dot,
}

/// Parses `u v` lines. Blank lines and lines starting with `#` are skipped;
/// `n` is one more than the largest vertex id.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut pairs = Vec::new();
    let mut max_id = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse = |tok: &str| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                reason: format!("malformed token {tok:?}"),
            })
        };
        let mut tokens = line.split_whitespace();
        let (Some(u), Some(v), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(Error::Parse { line: line_no, reason: "expected exactly two vertex ids".into() });
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u == v {
            return Err(Error::Parse { line: line_no, reason: format!("loop edge at vertex {u}") });
        }
        max_id = max_id.max(u).max(v);
        pairs.push((line_no, Edge::new(u, v)));
    }
    if pairs.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut sorted: Vec<&(usize, Edge)> = pairs.iter().collect();
    sorted.sort_by_key(|&&(line, e)| (e, line));
    if let Some(w) = sorted.windows(2).find(|w| w[0].1 == w[1].1) {
        return Err(Error::Parse { line: w[1].0, reason: format!("duplicate edge {}", w[1].1) });
    }
    Graph::from_edges(max_id + 1, pairs.into_iter().map(|(_, e)| e))
}

/// One `u v` line per edge, in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.a(), e.b());
    }
    out
}

pub fn write_forest(forest: &Forest<'_>, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Edges => {
            for e in forest.edges() {
                let _ = writeln!(out, "{} {}", e.a(), e.b());
            }
            for comp in forest.components() {
                let members: Vec<String> = comp.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "# component: {}", members.join(" "));
            }
        }
        Format::Dot => {
            out.push_str("graph perfect_forest {\n");
            for &e in forest.host().edges() {
                let style = if forest.edges().binary_search(&e).is_ok() { "solid" } else { "dashed" };
                let _ = writeln!(out, "  {} -- {} [style={style}];", e.a(), e.b());
            }
            out.push_str("}\n");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let g = parse_edge_list("0 1\n1 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        let k2 = parse_edge_list("# c\n\n0 1\n").unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));
        let spaced = parse_edge_list("  3\t0  \r\n").unwrap();
        assert_eq!(spaced.edges(), &[Edge::new(0, 3)]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_edge_list("0 x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 1\n2 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("0 1\n1 2\n1 0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_edge_list("0 1 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("-1 2\n"), Err(Error::Parse { .. })));
        assert_eq!(parse_edge_list("# nothing\n\n"), Err(Error::EmptyInput));
        assert_eq!(parse_edge_list(""), Err(Error::EmptyInput));
    }

    #[test]
    fn forest_edges_format() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let f = Forest::new(&c4, vec![Edge::new(0, 1), Edge::new(2, 3)]).unwrap();
        assert_eq!(write_forest(&f, Format::Edges), "0 1\n2 3\n# component: 0 1\n# component: 2 3\n");

        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        let f = Forest::new(&k2, vec![Edge::new(0, 1)]).unwrap();
        assert_eq!(write_forest(&f, Format::Edges), "0 1\n# component: 0 1\n");
    }

    #[test]
    fn forest_dot_format() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let f = Forest::new(&c4, vec![Edge::new(0, 1), Edge::new(2, 3)]).unwrap();
        let dot = write_forest(&f, Format::Dot);
        assert!(dot.starts_with("graph "));
        assert_eq!(dot.matches("style=solid").count(), 2);
        assert_eq!(dot.matches("style=dashed").count(), 2);
        assert!(dot.contains("  0 -- 3 [style=dashed];\n"));
    }
}
