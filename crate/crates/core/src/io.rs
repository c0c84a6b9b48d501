//! Serialization of the domain types: ideals, graphs, complexes, Betti
//! tables and profiles. The JSON shapes are stable and shared by the CLI.

use serde::{Deserialize, Serialize};

use crate::betti::{BettiTable, GProfile};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monomial::{MonomialIdeal, SquarefreeMonomial};

/// `{"vars": ["x1", ...], "gens": [[1,2], [2,3], ...]}` with 1-based index
/// lists into `vars`. The reader minimalizes and re-derives the ambient
/// ring, so unused variable names disappear.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdealJson {
    pub vars: Vec<String>,
    pub gens: Vec<Vec<usize>>,
}

impl IdealJson {
    pub fn from_ideal(ideal: &MonomialIdeal) -> Self {
        Self {
            vars: (1..=ideal.ambient()).map(|i| format!("x{i}")).collect(),
            gens: ideal.generators().iter().map(|g| g.indices()).collect(),
        }
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        let n = self.vars.len();
        let mut mons = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            if g.iter().any(|&i| i == 0 || i > n) {
                return Err(Error::Parse(format!(
                    "generator index out of range 1..={n}: {g:?}"
                )));
            }
            mons.push(SquarefreeMonomial::from_indices(g)?);
        }
        MonomialIdeal::minimalize(mons)
    }
}

/// `{"n": 4, "edges": [[1,2], [2,3], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        Self {
            n: g.n(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[a, b]| (a, b)).collect();
        Graph::new(self.n, &edges)
    }
}

/// `{"vertices": n, "facets": [[...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: usize,
    pub facets: Vec<Vec<usize>>,
}

impl ComplexJson {
    pub fn from_complex(cx: &SimplicialComplex) -> Self {
        Self { vertices: cx.n(), facets: cx.facets() }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets(self.vertices, &self.facets)
    }
}

/// `{"n": n, "entries": [[i, j, rank], ...]}` sorted lexicographically.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BettiJson {
    pub n: usize,
    pub entries: Vec<[u64; 3]>,
}

impl BettiJson {
    pub fn from_table(t: &BettiTable) -> Self {
        Self {
            n: t.ambient(),
            entries: t
                .entries()
                .map(|((i, j), v)| [i as u64, j as u64, v])
                .collect(),
        }
    }
}

/// `{"nu": ν, "d": [...], "depth": [...], "g": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProfileJson {
    pub nu: usize,
    pub d: Vec<usize>,
    pub depth: Vec<usize>,
    pub g: Vec<usize>,
}

impl ProfileJson {
    pub fn from_profile(p: &GProfile) -> Self {
        Self { nu: p.nu, d: p.d.clone(), depth: p.depth.clone(), g: p.g.clone() }
    }

    pub fn to_profile(&self) -> GProfile {
        GProfile {
            nu: self.nu,
            d: self.d.clone(),
            depth: self.depth.clone(),
            g: self.g.clone(),
        }
    }
}

/// What an input file turned out to contain.
#[derive(Clone, Debug)]
pub enum Input {
    Ideal(MonomialIdeal),
    Graph(Graph),
}

/// Parses an input string: a JSON object with `gens` is an ideal, one with
/// `edges` is a graph, anything else is tried as the plain graph format
/// (first line the vertex count, then one `u v` pair per line).
pub fn parse_input(text: &str) -> Result<Input> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(trimmed)
            .map_err(|e| Error::Parse(format!("invalid json: {e}")))?;
        if value.get("gens").is_some() {
            let ideal: IdealJson = serde_json::from_value(value)
                .map_err(|e| Error::Parse(format!("invalid ideal json: {e}")))?;
            return Ok(Input::Ideal(ideal.to_ideal()?));
        }
        if value.get("edges").is_some() {
            let graph: GraphJson = serde_json::from_value(value)
                .map_err(|e| Error::Parse(format!("invalid graph json: {e}")))?;
            return Ok(Input::Graph(graph.to_graph()?));
        }
        return Err(Error::Parse(
            "json object is neither an ideal (gens) nor a graph (edges)".into(),
        ));
    }
    parse_graph_text(text).map(Input::Graph)
}

/// Plain graph format: first non-empty line `n`, then one `u v` per line.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("empty graph file".into()))?
        .trim()
        .parse()
        .map_err(|_| Error::Parse("first line must be the vertex count".into()))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
            return Err(Error::Parse(format!("expected 'u v' pair, got '{line}'")));
        };
        let a: usize = a
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex '{a}'")))?;
        let b: usize = b
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex '{b}'")))?;
        edges.push((a, b));
    }
    Graph::new(n, &edges)
}

pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (a, b) in g.edges() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::ideal_from_supports;

    #[test]
    fn ideal_round_trip() {
        let i = ideal_from_supports(&[&[1, 2], &[2, 3]]);
        let json = IdealJson::from_ideal(&i);
        assert_eq!(json.vars, vec!["x1", "x2", "x3"]);
        assert_eq!(json.to_ideal().unwrap(), i);
    }

    #[test]
    fn ideal_reader_minimalizes() {
        let json: IdealJson =
            serde_json::from_str(r#"{"vars":["a","b","c"],"gens":[[1,2],[1,2,3]]}"#).unwrap();
        let i = json.to_ideal().unwrap();
        assert_eq!(i.generators().len(), 1);
        assert_eq!(i.ambient(), 2);
    }

    #[test]
    fn ideal_reader_rejects_bad_indices() {
        let json: IdealJson =
            serde_json::from_str(r#"{"vars":["a"],"gens":[[1,2]]}"#).unwrap();
        assert!(json.to_ideal().is_err());
    }

    #[test]
    fn complex_round_trip() {
        let cx = crate::complex::SimplicialComplex::from_facets(
            4,
            &[vec![1, 2, 3], vec![3, 4]],
        )
        .unwrap();
        let json = ComplexJson::from_complex(&cx);
        assert_eq!(json.vertices, 4);
        assert_eq!(json.to_complex().unwrap(), cx);
    }

    #[test]
    fn graph_text_round_trip() {
        let g = Graph::new(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let text = graph_to_text(&g);
        assert_eq!(parse_graph_text(&text).unwrap(), g);
        match parse_input(&text).unwrap() {
            Input::Graph(h) => assert_eq!(h, g),
            _ => panic!("expected graph"),
        }
    }

    #[test]
    fn input_sniffing() {
        let ideal_text = r#"{"vars":["x1","x2"],"gens":[[1,2]]}"#;
        assert!(matches!(parse_input(ideal_text).unwrap(), Input::Ideal(_)));
        let graph_text = r#"{"n":2,"edges":[[1,2]]}"#;
        assert!(matches!(parse_input(graph_text).unwrap(), Input::Graph(_)));
        assert!(parse_input("not a file").is_err());
        assert!(parse_input(r#"{"foo":1}"#).is_err());
    }
}
