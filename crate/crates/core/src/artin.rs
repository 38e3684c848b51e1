//! Oriented labelled Artin graphs and their dual presentations.
//!
//! An edge `{v, w}` with label `m ≥ 3` has one target `o(e)` and start
//! `i(e)` the other endpoint. Label-2 edges are bioriented: both endpoints
//! are targets.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::table::{check_symbol, ProductTable, TableBuilder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    /// Index of the target vertex.
    Toward(usize),
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArtinEdge {
    /// Endpoints with `a < b` in vertex order.
    pub a: usize,
    pub b: usize,
    pub label: u32,
    pub orient: Orientation,
}

impl ArtinEdge {
    pub fn is_target(&self, v: usize) -> bool {
        match self.orient {
            Orientation::Both => v == self.a || v == self.b,
            Orientation::Toward(t) => v == t,
        }
    }

    pub fn other(&self, v: usize) -> usize {
        if v == self.a {
            self.b
        } else {
            self.a
        }
    }

    /// `(i(e), o(e))`; for bioriented edges `(a, b)`.
    pub fn start_target(&self) -> (usize, usize) {
        match self.orient {
            Orientation::Toward(t) => (self.other(t), t),
            Orientation::Both => (self.a, self.b),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid vertex name {0:?}")]
    InvalidName(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("undeclared vertex {0}")]
    UndeclaredVertex(String),
    #[error("loop at {0}")]
    Loop(String),
    #[error("parallel edges between {0} and {1}")]
    ParallelEdge(String, String),
    #[error("edge {0}-{1}: label must be at least 2, got {2}")]
    BadLabel(String, String, u32),
    #[error("edge {0}-{1}: orient=both is legal iff label=2")]
    Biorientation(String, String),
    #[error("edge {0}-{1}: orientation target {2} is not an endpoint")]
    BadTarget(String, String, String),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<GraphError>,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OrientedLabeledGraph {
    vertices: Vec<String>,
    edges: Vec<ArtinEdge>,
}

impl OrientedLabeledGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<usize, GraphError> {
        if check_symbol(name).is_err() {
            return Err(GraphError::InvalidName(name.to_string()));
        }
        if self.vertex(name).is_some() {
            return Err(GraphError::DuplicateVertex(name.to_string()));
        }
        self.vertices.push(name.to_string());
        Ok(self.vertices.len() - 1)
    }

    /// `target` is an endpoint name, or `None` for a bioriented edge.
    pub fn add_edge(&mut self, v: &str, w: &str, label: u32, target: Option<&str>) -> Result<(), GraphError> {
        let idx = |n: &str| {
            self.vertex(n)
                .ok_or_else(|| GraphError::UndeclaredVertex(n.to_string()))
        };
        let (i, j) = (idx(v)?, idx(w)?);
        let (vs, ws) = (v.to_string(), w.to_string());
        if i == j {
            return Err(GraphError::Loop(vs));
        }
        let (a, b) = (i.min(j), i.max(j));
        if self.edges.iter().any(|e| e.a == a && e.b == b) {
            return Err(GraphError::ParallelEdge(vs, ws));
        }
        if label < 2 {
            return Err(GraphError::BadLabel(vs, ws, label));
        }
        let orient = match target {
            None => Orientation::Both,
            Some(t) => {
                let ti = self
                    .vertex(t)
                    .filter(|&x| x == i || x == j)
                    .ok_or_else(|| GraphError::BadTarget(vs.clone(), ws.clone(), t.to_string()))?;
                Orientation::Toward(ti)
            }
        };
        if (orient == Orientation::Both) != (label == 2) {
            return Err(GraphError::Biorientation(vs, ws));
        }
        self.edges.push(ArtinEdge { a, b, label, orient });
        self.edges.sort();
        Ok(())
    }

    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// Sorted by endpoint pair; an edge's position is its id minus one.
    pub fn edges(&self) -> &[ArtinEdge] {
        &self.edges
    }

    fn edge_between(&self, v: usize, w: usize) -> Option<&ArtinEdge> {
        let (a, b) = (v.min(w), v.max(w));
        self.edges.iter().find(|e| e.a == a && e.b == b)
    }

    /// Parses `vertex: <name>` and `edge: <v> <w> label=<m> orient=<v|w|both>`
    /// lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut g = Self::new();
        for (no, raw) in text.lines().enumerate() {
            let line = no + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let at = |e: GraphError| GraphError::AtLine {
                line,
                source: Box::new(e),
            };
            let syntax = |msg: &str| GraphError::Syntax {
                line,
                msg: msg.to_string(),
            };
            if let Some(rest) = body.strip_prefix("vertex:") {
                for name in rest.split_whitespace() {
                    g.add_vertex(name).map_err(at)?;
                }
            } else if let Some(rest) = body.strip_prefix("edge:") {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                let [v, w, label, orient] = toks[..] else {
                    return Err(syntax("expected `edge: <v> <w> label=<m> orient=<v|w|both>`"));
                };
                let label: u32 = label
                    .strip_prefix("label=")
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| syntax("expected label=<integer>"))?;
                let orient = orient
                    .strip_prefix("orient=")
                    .ok_or_else(|| syntax("expected orient=<v|w|both>"))?;
                let target = (orient != "both").then_some(orient);
                g.add_edge(v, w, label, target).map_err(at)?;
            } else {
                return Err(syntax("expected `vertex:` or `edge:`"));
            }
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            out.push_str(&format!("vertex: {v}\n"));
        }
        for e in &self.edges {
            let orient = match e.orient {
                Orientation::Both => "both",
                Orientation::Toward(t) => &self.vertices[t],
            };
            out.push_str(&format!(
                "edge: {} {} label={} orient={}\n",
                self.vertices[e.a], self.vertices[e.b], e.label, orient
            ));
        }
        out
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    /// Triangles `a < b < c` in vertex order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let adj = self.adjacency();
        let mut out = Vec::new();
        for a in 0..self.vertices.len() {
            for &b in adj[a].iter().filter(|&&b| b > a) {
                for &c in adj[b].iter().filter(|&&c| c > b) {
                    if adj[a].binary_search(&c).is_ok() {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// Embedded 4-cycles `[a, b, c, d]`, each once, with `a` the smallest
    /// vertex and `b < d`.
    pub fn four_cycles(&self) -> Vec<[usize; 4]> {
        let adj = self.adjacency();
        let mut out = Vec::new();
        for a in 0..self.vertices.len() {
            for &b in adj[a].iter().filter(|&&b| b > a) {
                for &c in adj[b].iter().filter(|&&c| c > a && c != b) {
                    for &d in adj[c].iter().filter(|&&d| d > b && d != c) {
                        if adj[a].binary_search(&d).is_ok() {
                            out.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn names_of(&self, vs: &[usize]) -> Vec<String> {
        vs.iter().map(|&v| self.vertices[v].clone()).collect()
    }
}

impl fmt::Display for OrientedLabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Triangles in which some vertex is not the target of exactly one of the
/// three edges. Empty iff every 3-cycle is directed.
pub fn check_three_cycles_directed(g: &OrientedLabeledGraph) -> Vec<[usize; 3]> {
    g.triangles()
        .into_iter()
        .filter(|tri| {
            let es: Vec<&ArtinEdge> = (0..3)
                .map(|k| g.edge_between(tri[k], tri[(k + 1) % 3]).expect("triangle edge"))
                .collect();
            tri.iter()
                .any(|&v| es.iter().filter(|e| e.is_target(v)).count() != 1)
        })
        .collect()
}

/// Misdirected 4-cycles `[a1, a2, a3, a4]`: `a2` is a target of both
/// `a1a2` and `a2a3`, and `a4` of both `a3a4` and `a4a1`.
pub fn check_four_cycles_not_misdirected(g: &OrientedLabeledGraph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for c in g.four_cycles() {
        let sink = |i: usize| {
            let v = c[i];
            let prev = g.edge_between(c[(i + 3) % 4], v).expect("cycle edge");
            let next = g.edge_between(v, c[(i + 1) % 4]).expect("cycle edge");
            prev.is_target(v) && next.is_target(v)
        };
        for i in 0..2 {
            if sink(i) && sink(i + 2) {
                out.push([c[(i + 3) % 4], c[i], c[(i + 1) % 4], c[i + 2]]);
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArtinError {
    #[error("3-cycle {0:?} is not directed; the dual presentation is not restricted triangular")]
    UndirectedTriangle(Vec<String>),
}

#[derive(Debug, Clone)]
pub struct DualTable {
    pub table: ProductTable,
    /// One line per misdirected 4-cycle.
    pub warnings: Vec<String>,
}

pub fn vertex_symbol(g: &OrientedLabeledGraph, v: usize) -> String {
    format!("x_{}", g.vertices[v])
}

pub fn delta_symbol(edge_id: usize) -> String {
    format!("D_{edge_id}")
}

pub fn interpolant_symbol(edge_id: usize, k: u32) -> String {
    format!("t_{edge_id}_{k}")
}

/// The dual presentation. Refuses graphs with an undirected 3-cycle and
/// warns about misdirected 4-cycles.
pub fn dual_table(g: &OrientedLabeledGraph) -> Result<DualTable, ArtinError> {
    if let Some(tri) = check_three_cycles_directed(g).first() {
        return Err(ArtinError::UndirectedTriangle(g.names_of(tri)));
    }
    let warnings = check_four_cycles_not_misdirected(g)
        .iter()
        .map(|c| format!("misdirected 4-cycle {}", g.names_of(c).join(" ")))
        .collect();

    let mut b = TableBuilder::new();
    let xs: Vec<_> = (0..g.vertices.len())
        .map(|v| b.generator(&vertex_symbol(g, v)).expect("vertex names are valid"))
        .collect();
    for (idx, e) in g.edges.iter().enumerate() {
        let id = idx + 1;
        let d = b.generator(&delta_symbol(id)).expect("fresh symbol");
        let (i, j) = e.start_target();
        let (xi, xj) = (xs[i], xs[j]);
        if e.label == 2 {
            b.product_ids(xi, xj, d).expect("fresh products");
            b.product_ids(xj, xi, d).expect("fresh products");
            continue;
        }
        // x_i x_j = x_j t_1 = t_1 t_2 = ⋯ = t_{m-2} x_i = Δ_e
        let mut chain = vec![xi, xj];
        for k in 1..=e.label - 2 {
            chain.push(b.generator(&interpolant_symbol(id, k)).expect("fresh symbol"));
        }
        chain.push(xi);
        for w in chain.windows(2) {
            b.product_ids(w[0], w[1], d).expect("fresh products");
        }
    }
    Ok(DualTable {
        table: b.build(),
        warnings,
    })
}

/// `x` and `t` symbols weigh 1, `Δ_e` weighs 2.
pub fn dual_weights(g: &OrientedLabeledGraph) -> BTreeMap<String, u64> {
    let mut w = BTreeMap::new();
    for v in 0..g.vertices.len() {
        w.insert(vertex_symbol(g, v), 1);
    }
    for (idx, e) in g.edges.iter().enumerate() {
        w.insert(delta_symbol(idx + 1), 2);
        for k in 1..=e.label.saturating_sub(2) {
            w.insert(interpolant_symbol(idx + 1, k), 1);
        }
    }
    w
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("no weight for generator {0}")]
    MissingWeight(String),
}

/// True iff `weight(s) + weight(t) = weight(u)` for every entry.
pub fn grading_check(table: &ProductTable, weights: &BTreeMap<String, u64>) -> Result<bool, GradingError> {
    let w = |name: &str| {
        weights
            .get(name)
            .copied()
            .ok_or_else(|| GradingError::MissingWeight(name.to_string()))
    };
    for name in table.names() {
        w(name)?;
    }
    for (s, t, u) in table.named_products() {
        if w(s)? + w(t)? != w(u)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(text: &str) -> OrientedLabeledGraph {
        OrientedLabeledGraph::parse(text).unwrap()
    }

    #[test]
    fn single_edge_label_three() {
        let g = graph("vertex: 1 2\nedge: 1 2 label=3 orient=2\n");
        let d = dual_table(&g).unwrap();
        assert_eq!(d.table.names(), ["x_1", "x_2", "D_1", "t_1_1"]);
        let prods: Vec<_> = d.table.named_products().collect();
        assert_eq!(
            prods,
            [
                ("x_1", "x_2", "D_1"),
                ("x_2", "t_1_1", "D_1"),
                ("t_1_1", "x_1", "D_1")
            ]
        );
        assert!(d.warnings.is_empty());
        assert!(grading_check(&d.table, &dual_weights(&g)).unwrap());
    }

    #[test]
    fn single_edge_label_two() {
        let g = graph("vertex: 1 2\nedge: 1 2 label=2 orient=both\n");
        let d = dual_table(&g).unwrap();
        assert_eq!(d.table.names(), ["x_1", "x_2", "D_1"]);
        assert_eq!(d.table.num_products(), 2);
    }

    #[test]
    fn parse_errors() {
        let e = OrientedLabeledGraph::parse("vertex: a b\nedge: a b label=3 orient=both\n").unwrap_err();
        assert!(matches!(e, GraphError::AtLine { line: 2, .. }), "{e}");
        let e = OrientedLabeledGraph::parse("vertex: a b\nedge: a b label=2 orient=a\n").unwrap_err();
        assert!(e.to_string().contains("orient=both"));
        assert!(OrientedLabeledGraph::parse("vertex: a\nedge: a c label=3 orient=a\n").is_err());
        assert!(OrientedLabeledGraph::parse("edge: a b\n").is_err());
        assert!(OrientedLabeledGraph::parse("vertex: a b\nedge: a b label=1 orient=a\n").is_err());
        assert!(OrientedLabeledGraph::parse("vertex: a\nedge: a a label=3 orient=a\n").is_err());
        let g = graph("vertex: a b # two\n# comment\nedge: b a label=4 orient=a\n");
        assert_eq!(OrientedLabeledGraph::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn triangles() {
        let g = graph("vertex: a b c\nedge: a b label=3 orient=b\nedge: b c label=3 orient=c\nedge: c a label=3 orient=a\n");
        assert!(check_three_cycles_directed(&g).is_empty());
        let d = dual_table(&g).unwrap();
        assert_eq!(d.table.len(), 9);
        assert_eq!(d.table.num_products(), 9);
        let g = graph("vertex: a b c\nedge: a b label=2 orient=both\nedge: b c label=3 orient=c\nedge: c a label=3 orient=a\n");
        assert_eq!(check_three_cycles_directed(&g).len(), 1);
        assert!(matches!(dual_table(&g), Err(ArtinError::UndirectedTriangle(_))));
    }

    #[test]
    fn misdirection() {
        let cyclic = graph(
            "vertex: a b c d\nedge: a b label=3 orient=b\nedge: b c label=3 orient=c\n\
             edge: c d label=3 orient=d\nedge: d a label=3 orient=a\n",
        );
        assert_eq!(cyclic.four_cycles().len(), 1);
        assert!(check_four_cycles_not_misdirected(&cyclic).is_empty());
        let bad = graph(
            "vertex: a1 a2 a3 a4\nedge: a1 a2 label=3 orient=a2\nedge: a2 a3 label=3 orient=a2\n\
             edge: a3 a4 label=3 orient=a4\nedge: a4 a1 label=3 orient=a4\n",
        );
        let w = check_four_cycles_not_misdirected(&bad);
        assert_eq!(w.len(), 1);
        assert_eq!(bad.names_of(&w[0]), ["a1", "a2", "a3", "a4"]);
        let d = dual_table(&bad).unwrap();
        assert_eq!(d.warnings.len(), 1);
    }

    #[test]
    fn grading() {
        let t = ProductTable::new(["a", "b", "c"], [("a", "b", "c")]).unwrap();
        let ones: BTreeMap<String, u64> = ["a", "b", "c"].iter().map(|s| (s.to_string(), 1)).collect();
        assert_eq!(grading_check(&t, &ones), Ok(false));
        let mut partial = ones.clone();
        partial.remove("c");
        assert_eq!(
            grading_check(&t, &partial),
            Err(GradingError::MissingWeight("c".into()))
        );
    }
}
