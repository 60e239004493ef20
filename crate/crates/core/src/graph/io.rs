use serde::{Deserialize, Serialize};

use super::Multigraph;
use crate::error::{Error, Result};

/// `{"vertices": n, "edges": [[u, v], ...]}`; repeated pairs encode multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn into_graph(self) -> Result<Multigraph> {
        Multigraph::from_edges(self.vertices, self.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

/// Parses either the JSON graph format or the plain edge-list format
/// (first non-comment line `n`, then one `u v` pair per line, `#` starts a comment).
pub fn parse_graph(text: &str) -> Result<Multigraph> {
    if text.trim_start().starts_with('{') {
        let json: GraphJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("graph JSON: {e}")))?;
        json.into_graph()
    } else {
        parse_edge_list(text)
    }
}

fn parse_edge_list(text: &str) -> Result<Multigraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("edge list is empty: expected a vertex count".into()))?;
    let n: usize = header.parse().map_err(|_| {
        Error::Parse(format!(
            "line {line_no}: expected vertex count, got `{header}`"
        ))
    })?;

    let mut edges = Vec::new();
    for (line_no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = fields.as_slice() else {
            return Err(Error::Parse(format!(
                "line {line_no}: expected `u v`, got `{line}`"
            )));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("line {line_no}: bad vertex id `{s}`")))
        };
        edges.push((parse(a)?, parse(b)?));
    }
    Multigraph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_double_edge() {
        let g = parse_graph(r#"{"vertices":2,"edges":[[0,1],[0,1]]}"#).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.mu(0, 1), 2);
    }

    #[test]
    fn json_loop_is_rejected() {
        let err = parse_graph(r#"{"vertices":1,"edges":[[0,0]]}"#).unwrap_err();
        assert_eq!(err, Error::Loop(0));
    }

    #[test]
    fn json_c4() {
        let g = parse_graph(r#"{"vertices":4,"edges":[[0,1],[1,2],[2,3],[3,0]]}"#).unwrap();
        assert_eq!(g, super::super::make_cycle(4).unwrap());
    }

    #[test]
    fn json_out_of_range_and_malformed() {
        assert!(matches!(
            parse_graph(r#"{"vertices":2,"edges":[[0,5]]}"#),
            Err(Error::VertexOutOfRange { id: 5, n: 2 })
        ));
        assert!(matches!(
            parse_graph(r#"{"vertices":2,"edges":[[0]]}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(parse_graph("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn edge_list_with_comments() {
        let text = "# a triangle\n3\n0 1\n1 2 # closing soon\n\n2 0\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g, super::super::make_cycle(3).unwrap());
        assert!(matches!(parse_graph("3\n0 1 2\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_graph("# nothing\n"), Err(Error::Parse(_))));
    }

    #[test]
    fn json_round_trip() {
        let g = super::super::make_gk(3).unwrap();
        let text = serde_json::to_string(&g.to_json()).unwrap();
        assert_eq!(parse_graph(&text).unwrap(), g);
    }
}
