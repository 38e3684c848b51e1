//! Embedded 4- and 5-cycles of a link, diagonals, and 6-largeness.

use std::collections::BTreeSet;

use crate::conditions::DEFAULT_WITNESS_CAP;
use crate::link::{LinkError, LinkGraph, SignedVertex};

/// A cycle through distinct vertices, consecutive ones adjacent in the
/// underlying undirected graph. Stored as the lexicographically smallest of
/// its rotations and reflections.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EmbeddedCycle {
    vertices: Vec<SignedVertex>,
}

impl EmbeddedCycle {
    /// Canonicalizes an arbitrary rotation/reflection of a cycle.
    pub fn new(vertices: Vec<SignedVertex>) -> Self {
        Self {
            vertices: canonical_rotation(&vertices),
        }
    }

    pub fn vertices(&self) -> &[SignedVertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn display(&self, link: &LinkGraph) -> String {
        let names: Vec<String> = self.vertices.iter().map(|&v| link.vertex_name(v)).collect();
        format!("({})", names.join(" "))
    }
}

fn canonical_rotation<T: Ord + Clone>(vs: &[T]) -> Vec<T> {
    let k = vs.len();
    let mut best: Option<Vec<T>> = None;
    for start in 0..k {
        for dir in [1isize, -1] {
            let cand: Vec<T> = (0..k)
                .map(|i| {
                    let j = (start as isize + dir * i as isize).rem_euclid(k as isize) as usize;
                    vs[j].clone()
                })
                .collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// All embedded cycles of `length` (4 or 5), canonical and sorted.
pub fn enumerate_embedded_cycles(link: &LinkGraph, length: usize) -> Result<Vec<EmbeddedCycle>, LinkError> {
    if !(4..=5).contains(&length) {
        return Err(LinkError::UnsupportedLength(length));
    }
    let mut found = BTreeSet::new();
    let mut path = Vec::with_capacity(length);
    for start in 0..link.num_vertices() {
        path.clear();
        path.push(start);
        extend(link, length, &mut path, &mut found);
    }
    Ok(found.into_iter().collect())
}

// Paths from the smallest vertex of the cycle through larger vertices only;
// the second vertex is smaller than the last to drop the reflection.
fn extend(link: &LinkGraph, length: usize, path: &mut Vec<usize>, found: &mut BTreeSet<EmbeddedCycle>) {
    let start = path[0];
    let last = *path.last().expect("nonempty path");
    if path.len() == length {
        if path[1] < last && link.adjacent_ids(last, start) {
            let vs = path.iter().map(|&id| link.vertex(id)).collect();
            found.insert(EmbeddedCycle::new(vs));
        }
        return;
    }
    for &next in link.neighbours(last) {
        if next <= start || path.contains(&next) {
            continue;
        }
        path.push(next);
        extend(link, length, path, found);
        path.pop();
    }
}

fn check_embedded(link: &LinkGraph, cycle: &EmbeddedCycle) -> Result<(), LinkError> {
    let vs = cycle.vertices();
    let distinct: BTreeSet<_> = vs.iter().collect();
    let n = link.num_generators();
    let ok = vs.len() >= 3
        && distinct.len() == vs.len()
        && vs.iter().all(|v| v.gen.0 < n)
        && (0..vs.len()).all(|i| link.adjacent(vs[i], vs[(i + 1) % vs.len()]));
    if ok {
        Ok(())
    } else {
        Err(LinkError::NotEmbedded(format!("{vs:?}")))
    }
}

/// Whether some edge, in either direction, joins two nonconsecutive vertices
/// of the cycle.
pub fn has_diagonal(link: &LinkGraph, cycle: &EmbeddedCycle) -> Result<bool, LinkError> {
    check_embedded(link, cycle)?;
    let vs = cycle.vertices();
    let k = vs.len();
    for i in 0..k {
        for j in (i + 2)..k {
            if i == 0 && j == k - 1 {
                continue;
            }
            if link.adjacent(vs[i], vs[j]) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SixLargeReport {
    pub four_cycles: usize,
    pub five_cycles: usize,
    /// Smallest diagonal-free cycles, 4-cycles first, at most the cap.
    pub diagonal_free: Vec<EmbeddedCycle>,
    pub total_diagonal_free: usize,
    pub truncated: bool,
}

impl SixLargeReport {
    pub fn passed(&self) -> bool {
        self.total_diagonal_free == 0
    }
}

pub fn check_six_large(link: &LinkGraph) -> SixLargeReport {
    check_six_large_with_cap(link, DEFAULT_WITNESS_CAP)
}

pub fn check_six_large_with_cap(link: &LinkGraph, cap: usize) -> SixLargeReport {
    let fours = enumerate_embedded_cycles(link, 4).expect("length 4 is supported");
    let fives = enumerate_embedded_cycles(link, 5).expect("length 5 is supported");
    let mut bad: Vec<EmbeddedCycle> = fours
        .iter()
        .chain(fives.iter())
        .filter(|c| !has_diagonal(link, c).expect("enumerated cycles are embedded"))
        .cloned()
        .collect();
    let total = bad.len();
    let truncated = total > cap;
    bad.truncate(cap);
    SixLargeReport {
        four_cycles: fours.len(),
        five_cycles: fives.len(),
        diagonal_free: bad,
        total_diagonal_free: total,
        truncated,
    }
}

/// The five diagonal-free 4-cycle shapes a link can contain, numbered like
/// the systolicity conditions they correspond to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CycleType {
    /// All positive, edges alternating in and out.
    AllPositive = 1,
    /// All negative, alternating.
    AllNegative = 2,
    /// One negative vertex, a source.
    NegativeSource = 3,
    /// One positive vertex, a sink, among negatives.
    PositiveSink = 4,
    /// Two nonadjacent negatives, both sources.
    TwoNegativeSources = 5,
}

impl CycleType {
    pub fn number(self) -> u8 {
        self as u8
    }

    pub const ALL: [CycleType; 5] = [
        CycleType::AllPositive,
        CycleType::AllNegative,
        CycleType::NegativeSource,
        CycleType::PositiveSink,
        CycleType::TwoNegativeSources,
    ];

    // Signs of (u, v, w, x) and, for each cycle edge (u v), (v w), (w x),
    // (x u), whether it points forward along that order.
    fn template(self) -> ([bool; 4], [bool; 4]) {
        // positive flags
        const P: bool = true;
        const N: bool = false;
        match self {
            // u → v ← w → x ← u
            CycleType::AllPositive => ([P, P, P, P], [true, false, true, false]),
            CycleType::AllNegative => ([N, N, N, N], [true, false, true, false]),
            // u⁻¹ → v → w ← x ← u⁻¹
            CycleType::NegativeSource => ([N, P, P, P], [true, true, false, false]),
            // u⁻¹ → v⁻¹ → w ← x⁻¹ ← u⁻¹
            CycleType::PositiveSink => ([N, N, P, N], [true, true, false, false]),
            // u⁻¹ → v ← w⁻¹ → x ← u⁻¹
            CycleType::TwoNegativeSources => ([N, P, N, P], [true, false, true, false]),
        }
    }

    fn matches(self, signs: &[bool; 4], forward: &[bool; 4]) -> bool {
        let (ts, tf) = self.template();
        for start in 0..4 {
            for rev in [false, true] {
                let mut ok = true;
                for i in 0..4 {
                    let (vi, fwd) = if !rev {
                        ((start + i) % 4, forward[(start + i) % 4])
                    } else {
                        // walking backwards: edge between positions p and p-1
                        let p = (start + 4 - i) % 4;
                        (p, !forward[(p + 3) % 4])
                    };
                    if signs[vi] != ts[i] || fwd != tf[i] {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    return true;
                }
            }
        }
        false
    }
}

/// Every shape the oriented, signed 4-cycle matches (up to symmetry).
pub fn matching_types(link: &LinkGraph, cycle: &EmbeddedCycle) -> Result<Vec<CycleType>, LinkError> {
    check_embedded(link, cycle)?;
    if cycle.len() != 4 {
        return Err(LinkError::UnsupportedLength(cycle.len()));
    }
    let vs = cycle.vertices();
    let signs = [0, 1, 2, 3].map(|i| vs[i].is_positive());
    let forward = [0, 1, 2, 3].map(|i| link.has_edge(vs[i], vs[(i + 1) % 4]));
    Ok(CycleType::ALL
        .into_iter()
        .filter(|t| t.matches(&signs, &forward))
        .collect())
}

/// Classifies a diagonal-free embedded 4-cycle.
pub fn classify_diagonal_free_4cycle(
    link: &LinkGraph,
    cycle: &EmbeddedCycle,
) -> Result<CycleType, LinkError> {
    if cycle.len() != 4 {
        return Err(LinkError::UnsupportedLength(cycle.len()));
    }
    if has_diagonal(link, cycle)? {
        return Err(LinkError::HasDiagonal);
    }
    match matching_types(link, cycle)?.as_slice() {
        [t] => Ok(*t),
        _ => Err(LinkError::Unclassified(cycle.display(link))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link::{build_link, LinkEdge};
    use crate::table::{Gen, ProductTable};

    fn k4() -> LinkGraph {
        let vs = [
            SignedVertex::pos(Gen(0)),
            SignedVertex::pos(Gen(1)),
            SignedVertex::neg(Gen(0)),
            SignedVertex::neg(Gen(1)),
        ];
        let mut edges = Vec::new();
        for i in 0..4 {
            for j in (i + 1)..4 {
                edges.push(LinkEdge {
                    from: vs[i],
                    to: vs[j],
                    label: Gen(0),
                });
            }
        }
        LinkGraph::from_edges(vec!["a".into(), "b".into()], edges).unwrap()
    }

    #[test]
    fn complete_graph_on_four_vertices() {
        let g = k4();
        let fours = enumerate_embedded_cycles(&g, 4).unwrap();
        assert_eq!(fours.len(), 3);
        for c in &fours {
            assert!(has_diagonal(&g, c).unwrap());
            assert_eq!(EmbeddedCycle::new(c.vertices().to_vec()), *c);
        }
        assert!(enumerate_embedded_cycles(&g, 5).unwrap().is_empty());
        assert!(check_six_large(&g).passed());
    }

    #[test]
    fn rejects_other_lengths() {
        assert_eq!(
            enumerate_embedded_cycles(&k4(), 6),
            Err(LinkError::UnsupportedLength(6))
        );
        assert!(enumerate_embedded_cycles(&k4(), 3).is_err());
    }

    #[test]
    fn hexagon_has_no_short_cycles() {
        let t = ProductTable::new(["x1", "x2", "D"], [("x1", "x2", "D"), ("x2", "x1", "D")]).unwrap();
        let l = build_link(&t);
        assert!(enumerate_embedded_cycles(&l, 4).unwrap().is_empty());
        assert!(enumerate_embedded_cycles(&l, 5).unwrap().is_empty());
        assert!(check_six_large(&l).passed());
    }

    #[test]
    fn not_embedded_is_an_error() {
        let g = k4();
        let bogus = EmbeddedCycle::new(vec![
            SignedVertex::pos(Gen(0)),
            SignedVertex::pos(Gen(0)),
            SignedVertex::pos(Gen(1)),
            SignedVertex::neg(Gen(0)),
        ]);
        assert!(matches!(has_diagonal(&g, &bogus), Err(LinkError::NotEmbedded(_))));
    }

    #[test]
    fn canonical_form_is_rotation_invariant() {
        let v = |i| SignedVertex::pos(Gen(i));
        let a = EmbeddedCycle::new(vec![v(3), v(1), v(2), v(0)]);
        let b = EmbeddedCycle::new(vec![v(0), v(2), v(1), v(3)]);
        assert_eq!(a, b);
        assert_eq!(a.vertices(), &[v(0), v(2), v(1), v(3)]);
    }

    #[test]
    fn f2xf2_cycle_is_type_five() {
        let t = ProductTable::new(
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
        .unwrap();
        let l = build_link(&t);
        let r = check_six_large(&l);
        assert!(!r.passed());
        let types: BTreeSet<CycleType> = r
            .diagonal_free
            .iter()
            .map(|c| classify_diagonal_free_4cycle(&l, c).unwrap())
            .collect();
        assert_eq!(
            types.into_iter().collect::<Vec<_>>(),
            [CycleType::TwoNegativeSources]
        );
    }
}
