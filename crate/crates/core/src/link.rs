//! The link of the identity vertex in the Cayley flag complex.
//!
//! Vertices are the signed generators `s` and `s⁻¹`. Each table entry
//! `s · t = u` contributes exactly three directed edges:
//!
//! * `s → u` labelled `t`,
//! * `s⁻¹ → t` labelled `u`,
//! * `u⁻¹ → t⁻¹` labelled `s`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::table::{Gen, ProductTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

/// Ordered by sign first (positives before negatives), then generator index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedVertex {
    pub sign: Sign,
    pub gen: Gen,
}

impl SignedVertex {
    pub fn pos(g: Gen) -> Self {
        Self {
            sign: Sign::Positive,
            gen: g,
        }
    }

    pub fn neg(g: Gen) -> Self {
        Self {
            sign: Sign::Negative,
            gen: g,
        }
    }

    pub fn is_positive(self) -> bool {
        self.sign == Sign::Positive
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinkEdge {
    pub from: SignedVertex,
    pub to: SignedVertex,
    pub label: Gen,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkError {
    #[error("vertex refers to generator {0} but the link has {1} generators")]
    UnknownVertex(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(String),
    #[error("more than one edge between {0} and {1}")]
    ParallelEdge(String, String),
    #[error("cycle is not embedded in the link: {0}")]
    NotEmbedded(String),
    #[error("cycle length {0} not supported (only 4 and 5)")]
    UnsupportedLength(usize),
    #[error("cycle has a diagonal")]
    HasDiagonal,
    #[error("table violates restricted-triangular consequences: 4-cycle {0} matches no pattern")]
    Unclassified(String),
}

/// Directed labelled graph on `2|S|` signed vertices, simple as an
/// undirected graph.
#[derive(Debug, Clone)]
pub struct LinkGraph {
    names: Vec<String>,
    edges: Vec<LinkEdge>,
    // dense ids: positive g -> g, negative g -> n + g
    directed: BTreeMap<(usize, usize), Gen>,
    adj: Vec<Vec<usize>>,
}

impl LinkGraph {
    /// Builds a graph from explicit edges. Rejects loops and more than one
    /// edge per unordered vertex pair.
    pub fn from_edges(names: Vec<String>, edges: Vec<LinkEdge>) -> Result<Self, LinkError> {
        let n = names.len();
        let mut g = LinkGraph {
            names,
            edges: Vec::with_capacity(edges.len()),
            directed: BTreeMap::new(),
            adj: vec![Vec::new(); 2 * n],
        };
        for e in edges {
            for v in [e.from, e.to] {
                if v.gen.0 >= n {
                    return Err(LinkError::UnknownVertex(v.gen.0, n));
                }
            }
            if e.label.0 >= n {
                return Err(LinkError::UnknownVertex(e.label.0, n));
            }
            let (a, b) = (g.id(e.from), g.id(e.to));
            if a == b {
                return Err(LinkError::Loop(g.vertex_name(e.from)));
            }
            if g.directed.contains_key(&(a, b)) || g.directed.contains_key(&(b, a)) {
                return Err(LinkError::ParallelEdge(
                    g.vertex_name(e.from),
                    g.vertex_name(e.to),
                ));
            }
            g.directed.insert((a, b), e.label);
            g.adj[a].push(b);
            g.adj[b].push(a);
            g.edges.push(e);
        }
        g.edges.sort();
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    pub fn num_generators(&self) -> usize {
        self.names.len()
    }

    pub fn num_vertices(&self) -> usize {
        2 * self.names.len()
    }

    pub fn edges(&self) -> &[LinkEdge] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = SignedVertex> + '_ {
        (0..self.num_vertices()).map(|i| self.vertex(i))
    }

    pub(crate) fn id(&self, v: SignedVertex) -> usize {
        match v.sign {
            Sign::Positive => v.gen.0,
            Sign::Negative => self.names.len() + v.gen.0,
        }
    }

    pub(crate) fn vertex(&self, id: usize) -> SignedVertex {
        let n = self.names.len();
        if id < n {
            SignedVertex::pos(Gen(id))
        } else {
            SignedVertex::neg(Gen(id - n))
        }
    }

    pub(crate) fn neighbours(&self, id: usize) -> &[usize] {
        &self.adj[id]
    }

    /// Label of the edge `a → b`, if present.
    pub fn edge_label(&self, a: SignedVertex, b: SignedVertex) -> Option<Gen> {
        self.directed.get(&(self.id(a), self.id(b))).copied()
    }

    pub fn has_edge(&self, a: SignedVertex, b: SignedVertex) -> bool {
        self.edge_label(a, b).is_some()
    }

    /// Adjacent in either direction.
    pub fn adjacent(&self, a: SignedVertex, b: SignedVertex) -> bool {
        self.has_edge(a, b) || self.has_edge(b, a)
    }

    pub(crate) fn adjacent_ids(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn vertex_name(&self, v: SignedVertex) -> String {
        let sign = match v.sign {
            Sign::Positive => '+',
            Sign::Negative => '-',
        };
        format!("{sign}{}", self.names[v.gen.0])
    }

    /// Number of edges from a positive to a negative vertex; zero for links
    /// built from tables.
    pub fn positive_to_negative_edges(&self) -> usize {
        self.edges
            .iter()
            .filter(|e| e.from.is_positive() && !e.to.is_positive())
            .count()
    }

    /// Line-oriented dump: `vertex: <sign><name>` then
    /// `edge: <from> <to> label=<gen>`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in self.vertices() {
            out.push_str(&format!("vertex: {}\n", self.vertex_name(v)));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "edge: {} {} label={}\n",
                self.vertex_name(e.from),
                self.vertex_name(e.to),
                self.names[e.label.0]
            ));
        }
        out
    }

    /// Graphviz digraph for external rendering.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph link {\n");
        for v in self.vertices() {
            let shape = if v.is_positive() { "circle" } else { "box" };
            out.push_str(&format!("  \"{}\" [shape={shape}];\n", self.vertex_name(v)));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                self.vertex_name(e.from),
                self.vertex_name(e.to),
                self.names[e.label.0]
            ));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for LinkGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Builds the link of the identity from a validated table.
///
/// # Panics
///
/// If two entries induce parallel link edges, which validation rules out.
pub fn build_link(table: &ProductTable) -> LinkGraph {
    try_build_link(table).expect("link of a validated table is a simple graph")
}

/// Like [`build_link`], but reports parallel edges from unvalidated tables.
pub fn try_build_link(table: &ProductTable) -> Result<LinkGraph, LinkError> {
    let mut edges = Vec::with_capacity(3 * table.num_products());
    for (s, t, u) in table.products() {
        edges.push(LinkEdge {
            from: SignedVertex::pos(s),
            to: SignedVertex::pos(u),
            label: t,
        });
        edges.push(LinkEdge {
            from: SignedVertex::neg(s),
            to: SignedVertex::pos(t),
            label: u,
        });
        edges.push(LinkEdge {
            from: SignedVertex::neg(u),
            to: SignedVertex::neg(t),
            label: s,
        });
    }
    LinkGraph::from_edges(table.names().to_vec(), edges)
}
