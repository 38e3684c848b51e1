//! Garside presentations of `G_{n,m}` and of Δ-amalgams
//! `(∗ G_{nᵢ,mᵢ}) / (Δᵢ = Δⱼ)`, using the nontrivial simple elements as
//! generators.
//!
//! In `G_{n,m}` the simple elements other than `e` and `Δ` are the pieces
//! `x_i x_{i+1} … ` of length `k`, `1 ≤ k < m`, indices taken mod `n`.
//! Pieces of distinct factors of an amalgam never multiply to a simple
//! element; the Garside element is shared.

mod classify;
mod monoid;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::order::{DivisibilityOrder, MeetError};
use crate::table::{Elem, Gen, ProductTable, Side, TableBuilder};

pub use classify::{classify_garside, ClassifyError};
pub use monoid::{monoid_bfs_oracle, MonoidClasses, OracleError, MAX_ORACLE_WORDS};

/// Name of the shared Garside element in generated tables.
pub const DELTA_NAME: &str = "D";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GarsideFactor {
    /// Number of letters `x_1 … x_n`.
    pub n: usize,
    /// Length of the cyclic products identified with `Δ`.
    pub m: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("empty amalgam spec")]
    Empty,
    #[error("factor {0}x{1}: n and m must be positive")]
    NonPositive(usize, usize),
    #[error("factor {0}x{1}: m must be at least 2 when n is at least 2")]
    DegeneratePeriod(usize, usize),
    #[error("malformed factor {0:?}, expected `<n>x<m>`")]
    Syntax(String),
}

impl GarsideFactor {
    pub fn new(n: usize, m: usize) -> Result<Self, SpecError> {
        if n == 0 || m == 0 {
            return Err(SpecError::NonPositive(n, m));
        }
        if n >= 2 && m < 2 {
            return Err(SpecError::DegeneratePeriod(n, m));
        }
        Ok(Self { n, m })
    }

    /// Number of pieces, `n (m − 1)`.
    pub fn num_pieces(self) -> usize {
        self.n * (self.m - 1)
    }
}

impl fmt::Display for GarsideFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.n, self.m)
    }
}

/// A nonempty list of factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AmalgamSpec {
    factors: Vec<GarsideFactor>,
}

impl AmalgamSpec {
    pub fn new(factors: Vec<GarsideFactor>) -> Result<Self, SpecError> {
        if factors.is_empty() {
            return Err(SpecError::Empty);
        }
        for f in &factors {
            GarsideFactor::new(f.n, f.m)?;
        }
        Ok(Self { factors })
    }

    pub fn single(n: usize, m: usize) -> Result<Self, SpecError> {
        Self::new(vec![GarsideFactor::new(n, m)?])
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self, SpecError> {
        let factors = pairs
            .iter()
            .map(|&(n, m)| GarsideFactor::new(n, m))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(factors)
    }

    pub fn factors(&self) -> &[GarsideFactor] {
        &self.factors
    }

    /// Drops `1x1` factors from amalgams of more than one factor (they are
    /// absorbed by the shared `Δ`) and sorts by `(n, m)`.
    pub fn canonical(&self) -> AmalgamSpec {
        let mut fs: Vec<GarsideFactor> = self.factors.iter().copied().filter(|f| f.m >= 2).collect();
        if fs.is_empty() {
            fs.push(GarsideFactor { n: 1, m: 1 });
        }
        fs.sort();
        AmalgamSpec { factors: fs }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    /// `Σ nᵢ(mᵢ − 1) + 1`.
    pub fn num_simples(&self) -> usize {
        self.factors.iter().map(|f| f.num_pieces()).sum::<usize>() + 1
    }
}

impl fmt::Display for AmalgamSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(";"))
    }
}

impl FromStr for AmalgamSpec {
    type Err = SpecError;

    /// Parses `"n1xm1;n2xm2;..."`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut factors = Vec::new();
        for part in s.split(';') {
            let part = part.trim();
            let (n, m) = part
                .split_once('x')
                .ok_or_else(|| SpecError::Syntax(part.to_string()))?;
            let parse = |x: &str| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| SpecError::Syntax(part.to_string()))
            };
            factors.push(GarsideFactor::new(parse(n)?, parse(m)?)?);
        }
        AmalgamSpec::new(factors)
    }
}

/// A simple element of a Δ-amalgam. Factor indices are 0-based positions in
/// the spec; `start` is in `1..=n` and `len` in `1..m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SimpleElement {
    Identity,
    Delta,
    Piece { factor: usize, start: usize, len: usize },
}

impl SimpleElement {
    /// Piece with its start index reduced into `1..=n`.
    pub fn piece(spec: &AmalgamSpec, factor: usize, start: usize, len: usize) -> Self {
        let n = spec.factors[factor].n;
        SimpleElement::Piece {
            factor,
            start: (start + n - 1) % n + 1,
            len,
        }
    }

    /// Generator name used in generated tables.
    pub fn name(self) -> String {
        match self {
            SimpleElement::Identity => crate::table::IDENTITY_NAME.to_string(),
            SimpleElement::Delta => DELTA_NAME.to_string(),
            SimpleElement::Piece { factor, start, len: 1 } => {
                format!("f{}_x{}", factor + 1, start)
            }
            SimpleElement::Piece { factor, start, len } => {
                format!("f{}_x{}_k{}", factor + 1, start, len)
            }
        }
    }

    /// Word in the 0-based letters of `factor`, or `None` for Identity.
    /// `Δ` is spelled as the length-`m` piece starting at `x_1` of `factor`.
    pub fn word(self, spec: &AmalgamSpec, factor: usize) -> Vec<usize> {
        let f = spec.factors[factor];
        let (start, len) = match self {
            SimpleElement::Identity => return Vec::new(),
            SimpleElement::Delta => (1, f.m),
            SimpleElement::Piece { start, len, .. } => (start, len),
        };
        (0..len).map(|r| (start - 1 + r) % f.n).collect()
    }
}

/// Nontrivial simple elements: pieces by factor, then length, then start;
/// `Δ` last.
pub fn simples(spec: &AmalgamSpec) -> Vec<SimpleElement> {
    let mut out = Vec::with_capacity(spec.num_simples());
    for (fi, f) in spec.factors.iter().enumerate() {
        for len in 1..f.m {
            for start in 1..=f.n {
                out.push(SimpleElement::Piece {
                    factor: fi,
                    start,
                    len,
                });
            }
        }
    }
    out.push(SimpleElement::Delta);
    out
}

/// `s · t` when it is a simple element: pieces `(i, k)` and `(j, l)` of the
/// same factor with `j ≡ i + k (mod n)` and `k + l ≤ m`.
pub fn simple_product(spec: &AmalgamSpec, s: SimpleElement, t: SimpleElement) -> Option<SimpleElement> {
    match (s, t) {
        (
            SimpleElement::Piece {
                factor: f1,
                start: i,
                len: k,
            },
            SimpleElement::Piece {
                factor: f2,
                start: j,
                len: l,
            },
        ) if f1 == f2 => {
            let GarsideFactor { n, m } = spec.factors[f1];
            if (i + k - 1) % n + 1 != j || k + l > m {
                None
            } else if k + l == m {
                Some(SimpleElement::Delta)
            } else {
                Some(SimpleElement::Piece {
                    factor: f1,
                    start: i,
                    len: k + l,
                })
            }
        }
        _ => None,
    }
}

fn length_in(spec: &AmalgamSpec, e: SimpleElement, factor: usize) -> usize {
    match e {
        SimpleElement::Identity => 0,
        SimpleElement::Delta => spec.factors[factor].m,
        SimpleElement::Piece { len, .. } => len,
    }
}

fn gcd(spec: &AmalgamSpec, s: SimpleElement, t: SimpleElement, side: Side) -> SimpleElement {
    use SimpleElement::*;
    match (s, t) {
        (Identity, _) | (_, Identity) => Identity,
        (Delta, x) | (x, Delta) => x,
        (
            Piece {
                factor: f1,
                start: i1,
                len: k1,
            },
            Piece {
                factor: f2,
                start: i2,
                len: k2,
            },
        ) => {
            if f1 != f2 {
                return Identity;
            }
            debug_assert_eq!(length_in(spec, s, f1), k1);
            let n = spec.factors[f1].n;
            // shorter first
            let ((i, k), (j, l)) = if k1 <= k2 {
                ((i1, k1), (i2, k2))
            } else {
                ((i2, k2), (i1, k1))
            };
            let shorter = if k1 <= k2 { s } else { t };
            let agree = match side {
                Side::Left => i == j,
                Side::Right => (i + k) % n == (j + l) % n,
            };
            if agree {
                shorter
            } else {
                Identity
            }
        }
    }
}

/// Greatest common left divisor by the closed form.
pub fn left_gcd(spec: &AmalgamSpec, s: SimpleElement, t: SimpleElement) -> SimpleElement {
    gcd(spec, s, t, Side::Left)
}

/// Greatest common right divisor by the closed form.
pub fn right_gcd(spec: &AmalgamSpec, s: SimpleElement, t: SimpleElement) -> SimpleElement {
    gcd(spec, s, t, Side::Right)
}

/// The Garside presentation of the canonical form of `spec` as a table.
pub fn garside_table(spec: &AmalgamSpec) -> ProductTable {
    GarsideTable::new(spec).table
}

/// A generated table together with the simple element behind each generator.
#[derive(Debug, Clone)]
pub struct GarsideTable {
    pub spec: AmalgamSpec,
    pub table: ProductTable,
    pub elements: Vec<SimpleElement>,
}

impl GarsideTable {
    pub fn new(spec: &AmalgamSpec) -> Self {
        let spec = spec.canonical();
        let elements = simples(&spec);
        let mut b = TableBuilder::new();
        for e in &elements {
            b.generator(&e.name())
                .expect("generated names are valid and unique");
        }
        for (i, &s) in elements.iter().enumerate() {
            for (j, &t) in elements.iter().enumerate() {
                if let Some(u) = simple_product(&spec, s, t) {
                    let k = elements
                        .iter()
                        .position(|&x| x == u)
                        .expect("closed under products");
                    b.product_ids(Gen(i), Gen(j), Gen(k))
                        .expect("products are functional");
                }
            }
        }
        Self {
            spec,
            table: b.build(),
            elements,
        }
    }

    pub fn element(&self, g: Gen) -> SimpleElement {
        self.elements[g.0]
    }

    pub fn gen_of(&self, e: SimpleElement) -> Option<Elem> {
        match e {
            SimpleElement::Identity => Some(Elem::Identity),
            _ => self
                .elements
                .iter()
                .position(|&x| x == e)
                .map(|i| Elem::Gen(Gen(i))),
        }
    }

    pub fn elem(&self, e: Elem) -> SimpleElement {
        match e {
            Elem::Identity => SimpleElement::Identity,
            Elem::Gen(g) => self.element(g),
        }
    }
}

/// Weights making `weight(s) + weight(t) = weight(s·t)`: a piece of factor
/// `i` weighs `len · L / mᵢ` and `Δ` weighs `L`, with `L = lcm(mᵢ)`. For a
/// single factor this is the piece length.
pub fn garside_weights(spec: &AmalgamSpec) -> BTreeMap<String, u64> {
    let spec = spec.canonical();
    let lcm = spec.factors.iter().fold(1u64, |acc, f| lcm(acc, f.m as u64));
    simples(&spec)
        .into_iter()
        .map(|e| {
            let w = match e {
                SimpleElement::Piece { factor, len, .. } => {
                    len as u64 * (lcm / spec.factors[factor].m as u64)
                }
                _ => lcm,
            };
            (e.name(), w)
        })
        .collect()
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

pub fn poset_meet_left(table: &ProductTable, s: Elem, t: Elem) -> Result<Elem, MeetError> {
    DivisibilityOrder::left(table).meet(s, t)
}

pub fn poset_meet_right(table: &ProductTable, s: Elem, t: Elem) -> Result<Elem, MeetError> {
    DivisibilityOrder::right(table).meet(s, t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GcdWitness {
    pub side: Side,
    pub s: Gen,
    pub t: Gen,
    pub meet: Elem,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdReport {
    pub witnesses: Vec<GcdWitness>,
}

impl GcdReport {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Passes iff every pairwise left and right meet lies in `{e, s, t}`.
pub fn check_gcd_condition(table: &ProductTable) -> Result<GcdReport, MeetError> {
    let mut witnesses = Vec::new();
    for ord in [DivisibilityOrder::left(table), DivisibilityOrder::right(table)] {
        for s in table.generators() {
            for t in table.generators().filter(|&t| t > s) {
                let meet = ord.meet(Elem::Gen(s), Elem::Gen(t))?;
                if ![Elem::Identity, Elem::Gen(s), Elem::Gen(t)].contains(&meet) {
                    witnesses.push(GcdWitness {
                        side: ord.side(),
                        s,
                        t,
                        meet,
                    });
                }
            }
        }
    }
    Ok(GcdReport { witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditions::check_systolic_conditions;

    fn p(spec: &AmalgamSpec, start: usize, len: usize) -> SimpleElement {
        SimpleElement::piece(spec, 0, start, len)
    }

    #[test]
    fn spec_parsing() {
        let s: AmalgamSpec = "1x2;1x3".parse().unwrap();
        assert_eq!(s.factors().len(), 2);
        assert_eq!(s.to_string(), "1x2;1x3");
        assert!("0x2".parse::<AmalgamSpec>().is_err());
        assert!("2x1".parse::<AmalgamSpec>().is_err());
        assert!("2x".parse::<AmalgamSpec>().is_err());
        assert!("".parse::<AmalgamSpec>().is_err());
        assert!("1x1".parse::<AmalgamSpec>().is_ok());
    }

    #[test]
    fn canonical_absorbs_trivial_factors() {
        let s = AmalgamSpec::from_pairs(&[(3, 2), (1, 1), (2, 3)]).unwrap();
        assert_eq!(s.canonical().to_string(), "2x3;3x2");
        let s = AmalgamSpec::from_pairs(&[(1, 1), (1, 1)]).unwrap();
        assert_eq!(s.canonical().to_string(), "1x1");
    }

    #[test]
    fn simples_of_small_specs() {
        let s = AmalgamSpec::single(2, 3).unwrap();
        let names: Vec<String> = simples(&s).into_iter().map(SimpleElement::name).collect();
        assert_eq!(names, ["f1_x1", "f1_x2", "f1_x1_k2", "f1_x2_k2", "D"]);
        assert_eq!(
            simples(&AmalgamSpec::single(1, 1).unwrap()),
            [SimpleElement::Delta]
        );
        let torus = AmalgamSpec::from_pairs(&[(1, 2), (1, 3)]).unwrap();
        assert_eq!(simples(&torus).len(), 4);
        assert_eq!(torus.num_simples(), 4);
    }

    #[test]
    fn product_rule() {
        let s = AmalgamSpec::single(2, 3).unwrap();
        assert_eq!(simple_product(&s, p(&s, 1, 1), p(&s, 2, 1)), Some(p(&s, 1, 2)));
        assert_eq!(
            simple_product(&s, p(&s, 1, 1), p(&s, 2, 2)),
            Some(SimpleElement::Delta)
        );
        assert_eq!(simple_product(&s, p(&s, 1, 1), p(&s, 1, 2)), None);
        assert_eq!(simple_product(&s, SimpleElement::Delta, p(&s, 1, 1)), None);
        assert_eq!(simple_product(&s, SimpleElement::Identity, p(&s, 1, 1)), None);
    }

    #[test]
    fn gcd_formulas() {
        let s = AmalgamSpec::single(3, 4).unwrap();
        assert_eq!(left_gcd(&s, p(&s, 1, 2), p(&s, 1, 3)), p(&s, 1, 2));
        assert_eq!(left_gcd(&s, p(&s, 1, 3), p(&s, 1, 2)), p(&s, 1, 2));
        assert_eq!(left_gcd(&s, p(&s, 1, 1), p(&s, 2, 1)), SimpleElement::Identity);
        assert_eq!(right_gcd(&s, p(&s, 2, 1), p(&s, 1, 2)), p(&s, 2, 1));
        assert_eq!(left_gcd(&s, SimpleElement::Delta, p(&s, 3, 2)), p(&s, 3, 2));
        assert_eq!(right_gcd(&s, p(&s, 3, 2), p(&s, 3, 2)), p(&s, 3, 2));
    }

    #[test]
    fn small_tables() {
        let t = garside_table(&AmalgamSpec::single(2, 2).unwrap());
        assert_eq!(t.names(), ["f1_x1", "f1_x2", "D"]);
        assert_eq!(t.num_products(), 2);
        let t = garside_table(&AmalgamSpec::single(2, 3).unwrap());
        assert_eq!(t.len(), 5);
        assert_eq!(t.num_products(), 6);
        assert!(t.validate().is_valid());
        let t = garside_table(&AmalgamSpec::single(1, 3).unwrap());
        let prods: Vec<_> = t.named_products().collect();
        assert_eq!(
            prods,
            [
                ("f1_x1", "f1_x1", "f1_x1_k2"),
                ("f1_x1", "f1_x1_k2", "D"),
                ("f1_x1_k2", "f1_x1", "D")
            ]
        );
    }

    #[test]
    fn meets_on_generated_tables() {
        let s = AmalgamSpec::single(2, 3).unwrap();
        let g = GarsideTable::new(&s);
        let a = g.gen_of(p(&s, 1, 1)).unwrap();
        let b = g.gen_of(p(&s, 2, 1)).unwrap();
        assert_eq!(poset_meet_left(&g.table, a, b), Ok(Elem::Identity));
        assert_eq!(poset_meet_left(&g.table, a, a), Ok(a));
        let s = AmalgamSpec::single(3, 4).unwrap();
        let g = GarsideTable::new(&s);
        let x = g.gen_of(p(&s, 1, 2)).unwrap();
        let y = g.gen_of(p(&s, 1, 3)).unwrap();
        assert_eq!(poset_meet_left(&g.table, x, y), Ok(x));
    }

    #[test]
    fn shared_atom_divisor_fails_gcd_and_condition_three() {
        let t = ProductTable::new(
            ["a", "b", "c", "ab", "ac", "r1", "r2", "D"],
            [
                ("a", "b", "ab"),
                ("a", "c", "ac"),
                ("b", "r1", "D"),
                ("c", "r2", "D"),
            ],
        )
        .unwrap();
        assert!(t.validate().is_valid());
        let r = check_gcd_condition(&t).unwrap();
        let a = t.gen("a").unwrap();
        assert!(r.witnesses.contains(&GcdWitness {
            side: Side::Left,
            s: t.gen("ab").unwrap(),
            t: t.gen("ac").unwrap(),
            meet: Elem::Gen(a),
        }));
        assert!(!check_systolic_conditions(&t).passed(3));
    }

    #[test]
    fn amalgam_weights() {
        let w = garside_weights(&AmalgamSpec::from_pairs(&[(1, 2), (1, 3)]).unwrap());
        assert_eq!(w["D"], 6);
        assert_eq!(w["f1_x1"], 3);
        assert_eq!(w["f2_x1"], 2);
        assert_eq!(w["f2_x1_k2"], 4);
    }
}
