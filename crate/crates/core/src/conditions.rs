//! The five diagonal conditions deciding whether the Cayley flag complex of a
//! restricted triangular presentation is systolic.
//!
//! Each condition describes one diagonal-free 4-cycle shape in the link of
//! the identity. A hypothesis instance is a tuple of generators realizing the
//! cycle; the instance is a witness when no generator `k` supplies the
//! conclusion.
//!
//! Two readings of the conclusion are available:
//!
//! * [`Reading::Diagonal`]: the 4-cycle described by the hypothesis has a
//!   diagonal in either of its two positions and either direction. Because
//!   every hypothesis is quantified over all tuples, this is the conclusion
//!   closed under the cycle's symmetries, and it is the reading that agrees
//!   with the link 6-largeness test on every validated table.
//! * [`Reading::Literal`]: exactly the two alternatives written in each
//!   condition (e.g. `w = uk` or `ua = udk` for condition 1). This can flag
//!   a cycle that does have a diagonal in the unwritten direction.

use std::thread;

use crate::table::{Gen, ProductTable};

pub const DEFAULT_WITNESS_CAP: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reading {
    Diagonal,
    Literal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    pub witness_cap: usize,
    pub reading: Reading,
    /// Worker threads for the per-condition searches; 1 runs inline.
    pub jobs: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            witness_cap: DEFAULT_WITNESS_CAP,
            reading: Reading::Diagonal,
            jobs: 1,
        }
    }
}

/// Variable names of each condition's hypothesis tuple, in witness order.
pub const CONDITION_VARIABLES: [&[&str]; 5] = [
    &["u", "w", "a", "b", "c", "d"],
    &["v", "x", "a", "b", "c", "d"],
    &["u", "v", "x", "b", "c"],
    &["v", "w", "x", "a", "d"],
    &["u", "v", "w", "x"],
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionOutcome {
    /// 1 through 5.
    pub condition: u8,
    pub variables: &'static [&'static str],
    /// Lexicographically smallest witnesses, at most the cap.
    pub witnesses: Vec<Vec<Gen>>,
    /// Number of distinct witnesses found before capping.
    pub total: usize,
    pub truncated: bool,
}

impl ConditionOutcome {
    pub fn passed(&self) -> bool {
        self.total == 0
    }

    pub(crate) fn from_witnesses(
        condition: u8,
        variables: &'static [&'static str],
        mut witnesses: Vec<Vec<Gen>>,
        cap: usize,
    ) -> Self {
        witnesses.sort();
        witnesses.dedup();
        let total = witnesses.len();
        let truncated = total > cap;
        witnesses.truncate(cap);
        Self {
            condition,
            variables,
            witnesses,
            total,
            truncated,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub outcomes: Vec<ConditionOutcome>,
}

impl ConditionReport {
    pub fn overall(&self) -> bool {
        self.outcomes.iter().all(ConditionOutcome::passed)
    }

    pub fn passed(&self, condition: u8) -> bool {
        self.outcomes[usize::from(condition) - 1].passed()
    }

    /// Condition numbers that fail, ascending.
    pub fn failing(&self) -> Vec<u8> {
        self.outcomes
            .iter()
            .filter(|o| !o.passed())
            .map(|o| o.condition)
            .collect()
    }

    pub fn verdicts(&self) -> [bool; 5] {
        let mut v = [true; 5];
        for o in &self.outcomes {
            v[usize::from(o.condition) - 1] = o.passed();
        }
        v
    }
}

/// Runs the five checks with default options (diagonal reading, cap 100).
pub fn check_systolic_conditions(table: &ProductTable) -> ConditionReport {
    check_systolic_conditions_with(table, &CheckOptions::default())
}

/// Runs the five checks with the literal conclusion clauses.
pub fn check_literal_conditions(table: &ProductTable) -> ConditionReport {
    check_systolic_conditions_with(
        table,
        &CheckOptions {
            reading: Reading::Literal,
            ..CheckOptions::default()
        },
    )
}

pub fn check_systolic_conditions_with(table: &ProductTable, opts: &CheckOptions) -> ConditionReport {
    let run = |c: u8| {
        let ws = condition_witnesses(table, c, opts.reading);
        ConditionOutcome::from_witnesses(c, CONDITION_VARIABLES[usize::from(c) - 1], ws, opts.witness_cap)
    };
    let outcomes = if opts.jobs > 1 {
        thread::scope(|scope| {
            let handles: Vec<_> = (1..=5u8).map(|c| scope.spawn(move || run(c))).collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("condition worker panicked"))
                .collect()
        })
    } else {
        (1..=5u8).map(run).collect()
    };
    ConditionReport { outcomes }
}

/// `s → t` between positive link vertices: `t = s k`.
#[inline]
fn pos_edge(t: &ProductTable, s: Gen, u: Gen) -> bool {
    t.right_quotient(s, u).is_some()
}

/// `s⁻¹ → t⁻¹` between negative link vertices: `s = k t`.
#[inline]
fn neg_edge(t: &ProductTable, s: Gen, u: Gen) -> bool {
    t.left_quotient(u, s).is_some()
}

#[inline]
fn pos_adj(t: &ProductTable, a: Gen, b: Gen) -> bool {
    pos_edge(t, a, b) || pos_edge(t, b, a)
}

#[inline]
fn neg_adj(t: &ProductTable, a: Gen, b: Gen) -> bool {
    neg_edge(t, a, b) || neg_edge(t, b, a)
}

/// All hypothesis tuples of `condition` whose conclusion fails.
pub fn condition_witnesses(table: &ProductTable, condition: u8, reading: Reading) -> Vec<Vec<Gen>> {
    let t = table;
    let lit = reading == Reading::Literal;
    let mut out = Vec::new();
    match condition {
        // u ≠ w, a ≠ d, ua = wb ∈ S, ud = wc ∈ S  ⇒  w = uk or ua = udk
        1 => {
            for u in t.generators() {
                for w in t.generators().filter(|&w| w != u) {
                    for &(a, v) in t.with_left(u) {
                        let Some(b) = t.right_quotient(w, v) else { continue };
                        for &(d, x) in t.with_left(u) {
                            if d == a {
                                continue;
                            }
                            let Some(c) = t.right_quotient(w, x) else { continue };
                            let ok = if lit {
                                pos_edge(t, u, w) || pos_edge(t, x, v)
                            } else {
                                pos_adj(t, u, w) || pos_adj(t, v, x)
                            };
                            if !ok {
                                out.push(vec![u, w, a, b, c, d]);
                            }
                        }
                    }
                }
            }
        }
        // v ≠ x, a ≠ b, bv = cx ∈ S, av = dx ∈ S  ⇒  v = kx or av = kbv
        2 => {
            for v in t.generators() {
                for x in t.generators().filter(|&x| x != v) {
                    for &(b, p) in t.with_right(v) {
                        let Some(c) = t.left_quotient(x, p) else { continue };
                        for &(a, q) in t.with_right(v) {
                            if a == b {
                                continue;
                            }
                            let Some(d) = t.left_quotient(x, q) else { continue };
                            let ok = if lit {
                                neg_edge(t, v, x) || neg_edge(t, q, p)
                            } else {
                                neg_adj(t, v, x) || neg_adj(t, p, q)
                            };
                            if !ok {
                                out.push(vec![v, x, a, b, c, d]);
                            }
                        }
                    }
                }
            }
        }
        // v ≠ x, ux ∈ S, uv ∈ S, vb = xc ∈ S  ⇒  uvb ∈ S or v = xk
        3 => {
            for u in t.generators() {
                for &(v, _) in t.with_left(u) {
                    for &(x, _) in t.with_left(u) {
                        if x == v {
                            continue;
                        }
                        for &(b, w) in t.with_left(v) {
                            let Some(c) = t.right_quotient(x, w) else { continue };
                            let ok =
                                t.is_defined(u, w) || if lit { pos_edge(t, x, v) } else { pos_adj(t, v, x) };
                            if !ok {
                                out.push(vec![u, v, x, b, c]);
                            }
                        }
                    }
                }
            }
        }
        // v ≠ x, vw ∈ S, xw ∈ S, dx = av ∈ S  ⇒  avw ∈ S or x = kv
        4 => {
            for w in t.generators() {
                for &(v, _) in t.with_right(w) {
                    for &(x, _) in t.with_right(w) {
                        if x == v {
                            continue;
                        }
                        for &(a, u) in t.with_right(v) {
                            let Some(d) = t.left_quotient(x, u) else { continue };
                            let ok =
                                t.is_defined(u, w) || if lit { neg_edge(t, x, v) } else { neg_adj(t, v, x) };
                            if !ok {
                                out.push(vec![v, w, x, a, d]);
                            }
                        }
                    }
                }
            }
        }
        // v ≠ x, u ≠ w, wv, wx, uv, ux ∈ S  ⇒  w = ku or x = vk
        5 => {
            for u in t.generators() {
                for &(v, _) in t.with_left(u) {
                    for &(x, _) in t.with_left(u) {
                        if x == v {
                            continue;
                        }
                        for &(w, _) in t.with_right(v) {
                            if w == u || !t.is_defined(w, x) {
                                continue;
                            }
                            let ok = if lit {
                                neg_edge(t, w, u) || pos_edge(t, v, x)
                            } else {
                                neg_adj(t, u, w) || pos_adj(t, v, x)
                            };
                            if !ok {
                                out.push(vec![u, v, w, x]);
                            }
                        }
                    }
                }
            }
        }
        _ => panic!("condition number {condition} outside 1..=5"),
    }
    out
}

/// Re-checks that `tuple` instantiates the hypothesis of `condition`.
pub fn hypothesis_holds(t: &ProductTable, condition: u8, tuple: &[Gen]) -> bool {
    let p = |a: Gen, b: Gen| t.product(a, b);
    match (condition, tuple) {
        (1, &[u, w, a, b, c, d]) => {
            u != w
                && a != d
                && p(u, a).is_some()
                && p(u, a) == p(w, b)
                && p(u, d).is_some()
                && p(u, d) == p(w, c)
        }
        (2, &[v, x, a, b, c, d]) => {
            v != x
                && a != b
                && p(b, v).is_some()
                && p(b, v) == p(c, x)
                && p(a, v).is_some()
                && p(a, v) == p(d, x)
        }
        (3, &[u, v, x, b, c]) => {
            v != x && p(u, x).is_some() && p(u, v).is_some() && p(v, b).is_some() && p(v, b) == p(x, c)
        }
        (4, &[v, w, x, a, d]) => {
            v != x && p(v, w).is_some() && p(x, w).is_some() && p(d, x).is_some() && p(d, x) == p(a, v)
        }
        (5, &[u, v, w, x]) => {
            v != x
                && u != w
                && [(w, v), (w, x), (u, v), (u, x)]
                    .iter()
                    .all(|&(a, b)| p(a, b).is_some())
        }
        _ => false,
    }
}
