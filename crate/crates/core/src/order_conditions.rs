//! The five conditions restated through the divisibility orders `≤_L`, `≤_R`.
//!
//! Every condition quantifies over the four vertex labels `(u, v, w, x)` of a
//! 4-cycle in the link. Distinctness is required between labels whose link
//! vertices have the same sign; a negative vertex `u⁻¹` and a positive vertex
//! `w` are distinct even when `u = w` as generators.

use crate::conditions::{CheckOptions, ConditionOutcome, ConditionReport, Reading};
use crate::order::{DivisibilityOrder, OrderViolation};
use crate::table::{Gen, ProductTable, Side};

const VARS: &[&str] = &["u", "v", "w", "x"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderFailure {
    pub side: Side,
    pub violations: Vec<OrderViolation>,
}

impl std::fmt::Display for OrderFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{:?} divisibility relation is not a partial order ({} violations)",
            self.side,
            self.violations.len()
        )
    }
}

impl std::error::Error for OrderFailure {}

pub fn check_conditions_via_orders(table: &ProductTable) -> Result<ConditionReport, OrderFailure> {
    check_conditions_via_orders_with(table, &CheckOptions::default())
}

pub fn check_conditions_via_orders_with(
    table: &ProductTable,
    opts: &CheckOptions,
) -> Result<ConditionReport, OrderFailure> {
    let left = DivisibilityOrder::left(table);
    let right = DivisibilityOrder::right(table);
    for ord in [&left, &right] {
        let violations = ord.violations();
        if !violations.is_empty() {
            return Err(OrderFailure {
                side: ord.side(),
                violations,
            });
        }
    }
    let ctx = Ctx {
        t: table,
        l: &left,
        r: &right,
        lit: opts.reading == Reading::Literal,
    };
    let outcomes = (1..=5u8)
        .map(|c| ConditionOutcome::from_witnesses(c, VARS, ctx.witnesses(c), opts.witness_cap))
        .collect();
    Ok(ConditionReport { outcomes })
}

struct Ctx<'a> {
    t: &'a ProductTable,
    l: &'a DivisibilityOrder,
    r: &'a DivisibilityOrder,
    lit: bool,
}

impl Ctx<'_> {
    /// Strict lower bounds of `g` inside `S`.
    fn strict_lower(&self, g: Gen, side: Side) -> Vec<Gen> {
        self.t
            .products()
            .filter_map(|(s, t, u)| {
                (u == g).then_some(match side {
                    Side::Left => s,
                    Side::Right => t,
                })
            })
            .collect()
    }

    fn strict_upper(&self, g: Gen, side: Side) -> Vec<Gen> {
        match side {
            Side::Left => self.t.with_left(g).iter().map(|&(_, u)| u).collect(),
            Side::Right => self.t.with_right(g).iter().map(|&(_, u)| u).collect(),
        }
    }

    fn witnesses(&self, c: u8) -> Vec<Vec<Gen>> {
        let (t, l, r, lit) = (self.t, self.l, self.r, self.lit);
        let mut out = Vec::new();
        match c {
            // u, v, w, x distinct; u, w ≤_L v and u, w ≤_L x
            //   ⇒ u ≤_L w or x ≤_L v
            1 => {
                let lower: Vec<Vec<Gen>> = t.generators().map(|g| self.strict_lower(g, Side::Left)).collect();
                for v in t.generators() {
                    for x in t.generators().filter(|&x| x != v) {
                        let common: Vec<Gen> = lower[v.0]
                            .iter()
                            .copied()
                            .filter(|g| lower[x.0].contains(g))
                            .collect();
                        for &u in &common {
                            for &w in common.iter().filter(|&&w| w != u) {
                                let ok = if lit {
                                    l.leq_gen(u, w) || l.leq_gen(x, v)
                                } else {
                                    l.comparable(u, w) || l.comparable(v, x)
                                };
                                if !ok {
                                    out.push(vec![u, v, w, x]);
                                }
                            }
                        }
                    }
                }
            }
            // u, v, w, x distinct; v, x ≤_R u and v, x ≤_R w
            //   ⇒ u ≤_R w or v ≤_R x
            2 => {
                let lower: Vec<Vec<Gen>> = t
                    .generators()
                    .map(|g| self.strict_lower(g, Side::Right))
                    .collect();
                for u in t.generators() {
                    for w in t.generators().filter(|&w| w != u) {
                        let common: Vec<Gen> = lower[u.0]
                            .iter()
                            .copied()
                            .filter(|g| lower[w.0].contains(g))
                            .collect();
                        for &v in &common {
                            for &x in common.iter().filter(|&&x| x != v) {
                                let ok = if lit {
                                    r.leq_gen(u, w) || r.leq_gen(v, x)
                                } else {
                                    r.comparable(u, w) || r.comparable(v, x)
                                };
                                if !ok {
                                    out.push(vec![u, v, w, x]);
                                }
                            }
                        }
                    }
                }
            }
            // v, w, x distinct; uv, ux ∈ S; v, x ≤_L w  ⇒  uw ∈ S or v ≤_L x
            3 => {
                for u in t.generators() {
                    let right: Vec<Gen> = t.with_left(u).iter().map(|&(g, _)| g).collect();
                    for &v in &right {
                        for &x in right.iter().filter(|&&x| x != v) {
                            let up_x = self.strict_upper(x, Side::Left);
                            for w in self.strict_upper(v, Side::Left) {
                                if !up_x.contains(&w) {
                                    continue;
                                }
                                let ok = t.is_defined(u, w)
                                    || if lit { l.leq_gen(v, x) } else { l.comparable(v, x) };
                                if !ok {
                                    out.push(vec![u, v, w, x]);
                                }
                            }
                        }
                    }
                }
            }
            // u, v, x distinct; vw, xw ∈ S; v, x ≤_R u  ⇒  uw ∈ S or v ≤_R x
            4 => {
                for w in t.generators() {
                    let left: Vec<Gen> = t.with_right(w).iter().map(|&(g, _)| g).collect();
                    for &v in &left {
                        for &x in left.iter().filter(|&&x| x != v) {
                            let up_x = self.strict_upper(x, Side::Right);
                            for u in self.strict_upper(v, Side::Right) {
                                if !up_x.contains(&u) {
                                    continue;
                                }
                                let ok = t.is_defined(u, w)
                                    || if lit { r.leq_gen(v, x) } else { r.comparable(v, x) };
                                if !ok {
                                    out.push(vec![u, v, w, x]);
                                }
                            }
                        }
                    }
                }
            }
            // u ≠ w, v ≠ x; uv, ux, wv, wx ∈ S  ⇒  v ≤_L x or w ≤_R u
            5 => {
                for u in t.generators() {
                    let right: Vec<Gen> = t.with_left(u).iter().map(|&(g, _)| g).collect();
                    for &v in &right {
                        for &x in right.iter().filter(|&&x| x != v) {
                            for &(w, _) in t.with_right(v) {
                                if w == u || !t.is_defined(w, x) {
                                    continue;
                                }
                                let ok = if lit {
                                    l.leq_gen(v, x) || r.leq_gen(w, u)
                                } else {
                                    l.comparable(v, x) || r.comparable(u, w)
                                };
                                if !ok {
                                    out.push(vec![u, v, w, x]);
                                }
                            }
                        }
                    }
                }
            }
            _ => panic!("condition number {c} outside 1..=5"),
        }
        out
    }
}
