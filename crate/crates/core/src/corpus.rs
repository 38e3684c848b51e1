//! Built-in examples, runnable without input files.

use crate::artin::{dual_table, OrientedLabeledGraph};
use crate::free::counterexample_realization;
use crate::garside::{garside_table, AmalgamSpec};
use crate::table::ProductTable;

#[derive(Debug, Clone)]
pub enum CorpusItem {
    Table(ProductTable),
    Garside(AmalgamSpec),
    Artin(OrientedLabeledGraph),
}

impl CorpusItem {
    /// The product table behind the item; `None` for Artin graphs whose
    /// dual presentation is refused.
    pub fn table(&self) -> Option<ProductTable> {
        match self {
            CorpusItem::Table(t) => Some(t.clone()),
            CorpusItem::Garside(s) => Some(garside_table(s)),
            CorpusItem::Artin(g) => dual_table(g).ok().map(|d| d.table),
        }
    }

    /// Text in the matching input format.
    pub fn to_text(&self) -> String {
        match self {
            CorpusItem::Table(t) => t.to_text(),
            CorpusItem::Garside(s) => garside_table(s).to_text(),
            CorpusItem::Artin(g) => g.to_text(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CorpusItem::Table(_) => "table",
            CorpusItem::Garside(_) => "garside",
            CorpusItem::Artin(_) => "artin",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub description: String,
    pub item: CorpusItem,
}

/// Single factors `(n, m)` with `n, m ≤ 5` (and `m ≥ 2` once `n ≥ 2`), then
/// three amalgams.
pub fn garside_grid() -> Vec<AmalgamSpec> {
    let mut out = Vec::new();
    for n in 1..=5 {
        for m in 1..=5 {
            if n >= 2 && m < 2 {
                continue;
            }
            out.push(AmalgamSpec::single(n, m).expect("grid spec"));
        }
    }
    for s in ["1x2;1x3", "2x3;3x2", "1x2;1x3;1x4"] {
        out.push(s.parse().expect("grid spec"));
    }
    out
}

pub fn f2xf2_table() -> ProductTable {
    ProductTable::new(
        ["a", "b", "c", "d", "D1", "D2", "D3", "D4"],
        [
            ("a", "b", "D1"),
            ("b", "a", "D1"),
            ("b", "c", "D2"),
            ("c", "b", "D2"),
            ("c", "d", "D3"),
            ("d", "c", "D3"),
            ("d", "a", "D4"),
            ("a", "d", "D4"),
        ],
    )
    .expect("static table")
}

/// Two length-2 simples `ab`, `ac` with the common left divisor `a`.
pub fn shared_divisor_table() -> ProductTable {
    ProductTable::new(
        ["a", "b", "c", "ab", "ac", "r1", "r2", "D"],
        [
            ("a", "b", "ab"),
            ("a", "c", "ac"),
            ("b", "r1", "D"),
            ("c", "r2", "D"),
        ],
    )
    .expect("static table")
}

const ARTIN_GRAPHS: &[(&str, &str, &str)] = &[
    (
        "artin-triangle",
        "directed triangle, labels 3 3 3",
        "vertex: a b c\nedge: a b label=3 orient=b\nedge: b c label=3 orient=c\nedge: c a label=3 orient=a\n",
    ),
    (
        "artin-path",
        "path of two edges, labels 3 4",
        "vertex: a b c\nedge: a b label=3 orient=b\nedge: b c label=4 orient=c\n",
    ),
    (
        "artin-square",
        "4-cycle directed cyclically, labels 3 3 3 3",
        "vertex: a b c d\nedge: a b label=3 orient=b\nedge: b c label=3 orient=c\n\
         edge: c d label=3 orient=d\nedge: d a label=3 orient=a\n",
    ),
    (
        "artin-square-commuting",
        "4-cycle with one bioriented label-2 edge, not misdirected",
        "vertex: a b c d\nedge: a b label=2 orient=both\nedge: b c label=3 orient=c\n\
         edge: c d label=3 orient=d\nedge: d a label=3 orient=a\n",
    ),
    (
        "artin-star",
        "star with three outgoing label-3 edges",
        "vertex: o p q r\nedge: o p label=3 orient=p\nedge: o q label=3 orient=q\nedge: o r label=3 orient=r\n",
    ),
    (
        "artin-misdirected",
        "4-cycle with two opposite sinks",
        "vertex: a1 a2 a3 a4\nedge: a1 a2 label=3 orient=a2\nedge: a2 a3 label=3 orient=a2\n\
         edge: a3 a4 label=3 orient=a4\nedge: a4 a1 label=3 orient=a4\n",
    ),
    (
        "artin-undirected-triangle",
        "triangle with a bioriented edge; no dual table",
        "vertex: a b c\nedge: a b label=2 orient=both\nedge: b c label=3 orient=c\nedge: c a label=3 orient=a\n",
    ),
];

/// The oriented graphs whose dual tables are expected to be systolic.
pub fn systolic_artin_graphs() -> Vec<(&'static str, OrientedLabeledGraph)> {
    ARTIN_GRAPHS[..5]
        .iter()
        .map(|&(n, _, g)| (n, OrientedLabeledGraph::parse(g).expect("static graph")))
        .collect()
}

pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for i in 1..=5 {
        out.push(CorpusEntry {
            name: format!("free-r{i}"),
            description: format!("free counterexample failing only condition {i}"),
            item: CorpusItem::Table(counterexample_realization(i).table()),
        });
    }
    out.push(CorpusEntry {
        name: "f2xf2".into(),
        description: "F2 x F2, fails only condition 5".into(),
        item: CorpusItem::Table(f2xf2_table()),
    });
    out.push(CorpusEntry {
        name: "shared-divisor".into(),
        description: "two simples with a common proper divisor; fails the gcd test".into(),
        item: CorpusItem::Table(shared_divisor_table()),
    });
    for s in garside_grid() {
        out.push(CorpusEntry {
            name: format!("garside-{s}"),
            description: format!("Garside presentation of {s}"),
            item: CorpusItem::Garside(s),
        });
    }
    for &(name, desc, text) in ARTIN_GRAPHS {
        out.push(CorpusEntry {
            name: name.into(),
            description: desc.into(),
            item: CorpusItem::Artin(OrientedLabeledGraph::parse(text).expect("static graph")),
        });
    }
    out
}

pub fn corpus_entry(name: &str) -> Option<CorpusEntry> {
    corpus().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let c = corpus();
        let mut names: Vec<_> = c.iter().map(|e| e.name.clone()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), c.len());
        assert_eq!(garside_grid().len(), 24);
    }

    #[test]
    fn tables_validate() {
        for e in corpus() {
            match e.item.table() {
                Some(t) => assert!(t.validate().is_valid(), "{}", e.name),
                None => assert_eq!(e.name, "artin-undirected-triangle"),
            }
        }
    }
}
