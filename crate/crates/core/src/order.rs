//! Left and right divisibility relations on `S ∪ {e}` read off a table.
//!
//! `a ≤_L b` iff `a = b`, `a = e`, or `a · c = b` is an entry for some `c`.
//! `a ≤_R b` iff `a = b`, `a = e`, or `c · a = b` is an entry for some `c`.
//! On validated tables both are partial orders; [`DivisibilityOrder::violations`]
//! reports where they are not.

use thiserror::Error;

use crate::table::{Elem, Gen, ProductTable, Side};

#[derive(Debug, Clone)]
pub struct DivisibilityOrder {
    side: Side,
    n: usize,
    // (n+1)², index n is the identity
    leq: Vec<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderViolation {
    Antisymmetry(Elem, Elem),
    Transitivity(Elem, Elem, Elem),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeetError {
    #[error("not a meet-semilattice within S: maximal common lower bounds {antichain:?}")]
    NotMeetSemilattice { antichain: Vec<Elem> },
}

impl DivisibilityOrder {
    pub fn new(table: &ProductTable, side: Side) -> Self {
        let n = table.len();
        let m = n + 1;
        let mut leq = vec![false; m * m];
        for i in 0..m {
            leq[i * m + i] = true;
            leq[n * m + i] = true;
        }
        for (s, t, u) in table.products() {
            let lower = match side {
                Side::Left => s,
                Side::Right => t,
            };
            leq[lower.0 * m + u.0] = true;
        }
        Self { side, n, leq }
    }

    pub fn left(table: &ProductTable) -> Self {
        Self::new(table, Side::Left)
    }

    pub fn right(table: &ProductTable) -> Self {
        Self::new(table, Side::Right)
    }

    pub fn side(&self) -> Side {
        self.side
    }

    fn slot(&self, e: Elem) -> usize {
        match e {
            Elem::Identity => self.n,
            Elem::Gen(g) => g.0,
        }
    }

    fn elem(&self, i: usize) -> Elem {
        if i == self.n {
            Elem::Identity
        } else {
            Elem::Gen(Gen(i))
        }
    }

    /// Elements of `S ∪ {e}`, identity first.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        std::iter::once(Elem::Identity).chain((0..self.n).map(|i| Elem::Gen(Gen(i))))
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        let m = self.n + 1;
        self.leq[self.slot(a) * m + self.slot(b)]
    }

    #[inline]
    pub fn leq_gen(&self, a: Gen, b: Gen) -> bool {
        self.leq[a.0 * (self.n + 1) + b.0]
    }

    /// `a ≤ b` or `b ≤ a`.
    #[inline]
    pub fn comparable(&self, a: Gen, b: Gen) -> bool {
        self.leq_gen(a, b) || self.leq_gen(b, a)
    }

    /// Antisymmetry and transitivity failures, in element order.
    pub fn violations(&self) -> Vec<OrderViolation> {
        let m = self.n + 1;
        let mut out = Vec::new();
        for i in 0..m {
            for j in (i + 1)..m {
                if self.leq[i * m + j] && self.leq[j * m + i] {
                    out.push(OrderViolation::Antisymmetry(self.elem(i), self.elem(j)));
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                if i == j || !self.leq[i * m + j] {
                    continue;
                }
                for k in 0..m {
                    if k != j && self.leq[j * m + k] && !self.leq[i * m + k] {
                        out.push(OrderViolation::Transitivity(
                            self.elem(i),
                            self.elem(j),
                            self.elem(k),
                        ));
                    }
                }
            }
        }
        out
    }

    /// Greatest common lower bound of `a` and `b` inside `S ∪ {e}`.
    pub fn meet(&self, a: Elem, b: Elem) -> Result<Elem, MeetError> {
        let lower: Vec<Elem> = self
            .elements()
            .filter(|&c| self.leq(c, a) && self.leq(c, b))
            .collect();
        let maximal: Vec<Elem> = lower
            .iter()
            .copied()
            .filter(|&c| !lower.iter().any(|&d| d != c && self.leq(c, d)))
            .collect();
        match maximal.as_slice() {
            [m] => Ok(*m),
            _ => Err(MeetError::NotMeetSemilattice { antichain: maximal }),
        }
    }
}
