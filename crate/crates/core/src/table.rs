//! Partial multiplication tables standing in for restricted triangular
//! presentations.
//!
//! A defined entry `s · t = u` encodes the relator `s t u⁻¹`. Generators are
//! stored positively only; inverses never appear as symbols. The identity is
//! not a generator and is represented separately by [`Elem::Identity`].
//!
//! A table is the unit of trust: [`ProductTable::validate`] checks necessary
//! conditions for the table to come from a group, but it cannot certify that
//! an arbitrary table does. The constructive backends (Garside, Artin dual,
//! free-group counterexamples) produce tables that are realizable by
//! construction.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

/// Index of a generator in its table's declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen(pub usize);

impl Gen {
    #[inline]
    pub fn idx(self) -> usize {
        self.0
    }
}

/// An element of `S ∪ {e}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Elem {
    Identity,
    Gen(Gen),
}

/// Name reserved for the adjoined identity element.
pub const IDENTITY_NAME: &str = "e";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("invalid generator symbol {0:?}")]
    InvalidSymbol(String),
    #[error("generator {0:?} declared twice")]
    DuplicateGenerator(String),
    #[error("undeclared symbol {0:?}")]
    UndeclaredSymbol(String),
    #[error("conflicting products: {left} {right} = {existing} and {left} {right} = {new}")]
    ConflictingProduct {
        left: String,
        right: String,
        existing: String,
        new: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error(transparent)]
    Table(#[from] TableError),
}

/// Checks the generator symbol grammar: nonempty, no whitespace, none of
/// `^ # = :`, and not the reserved identity name.
pub fn check_symbol(name: &str) -> Result<(), TableError> {
    let bad = name.is_empty()
        || name == IDENTITY_NAME
        || name
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '^' | '#' | '=' | ':'));
    if bad {
        Err(TableError::InvalidSymbol(name.to_string()))
    } else {
        Ok(())
    }
}

/// Finite generator set with a partial product map `(s, t) ⇀ u`.
///
/// Immutable after construction. Lookup indexes by left factor, right factor
/// and value are built once so that the condition checkers run as nested
/// loops over small neighbourhoods.
#[derive(Clone)]
pub struct ProductTable {
    names: Vec<String>,
    index: HashMap<String, Gen>,
    entries: BTreeMap<(Gen, Gen), Gen>,
    prod: Vec<Option<Gen>>,
    // (s, u) -> t with s·t = u
    right_quot: Vec<Option<Gen>>,
    // (t, u) -> s with s·t = u
    left_quot: Vec<Option<Gen>>,
    by_left: Vec<Vec<(Gen, Gen)>>,
    by_right: Vec<Vec<(Gen, Gen)>>,
    is_value: Vec<bool>,
}

impl fmt::Debug for ProductTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProductTable")
            .field("generators", &self.names)
            .field("products", &self.named_products().collect::<Vec<_>>())
            .finish()
    }
}

impl PartialEq for ProductTable {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.entries == other.entries
    }
}

impl Eq for ProductTable {}

#[derive(Debug, Default, Clone)]
pub struct TableBuilder {
    names: Vec<String>,
    index: HashMap<String, Gen>,
    entries: BTreeMap<(Gen, Gen), Gen>,
}

impl TableBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn generator(&mut self, name: &str) -> Result<Gen, TableError> {
        check_symbol(name)?;
        if self.index.contains_key(name) {
            return Err(TableError::DuplicateGenerator(name.to_string()));
        }
        let g = Gen(self.names.len());
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), g);
        Ok(g)
    }

    fn lookup(&self, name: &str) -> Result<Gen, TableError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| TableError::UndeclaredSymbol(name.to_string()))
    }

    /// Adds `left · right = value`. Re-adding an identical entry is a no-op.
    pub fn product(&mut self, left: &str, right: &str, value: &str) -> Result<(), TableError> {
        let (s, t, u) = (self.lookup(left)?, self.lookup(right)?, self.lookup(value)?);
        self.product_ids(s, t, u)
    }

    pub fn product_ids(&mut self, s: Gen, t: Gen, u: Gen) -> Result<(), TableError> {
        match self.entries.get(&(s, t)) {
            Some(&old) if old != u => Err(TableError::ConflictingProduct {
                left: self.names[s.0].clone(),
                right: self.names[t.0].clone(),
                existing: self.names[old.0].clone(),
                new: self.names[u.0].clone(),
            }),
            _ => {
                self.entries.insert((s, t), u);
                Ok(())
            }
        }
    }

    pub fn build(self) -> ProductTable {
        ProductTable::from_parts(self.names, self.index, self.entries)
    }
}

impl ProductTable {
    /// Builds a table from generator names and `(left, right, value)` triples.
    pub fn new<'a, G, P>(generators: G, products: P) -> Result<Self, TableError>
    where
        G: IntoIterator<Item = &'a str>,
        P: IntoIterator<Item = (&'a str, &'a str, &'a str)>,
    {
        let mut b = TableBuilder::new();
        for g in generators {
            b.generator(g)?;
        }
        for (s, t, u) in products {
            b.product(s, t, u)?;
        }
        Ok(b.build())
    }

    fn from_parts(
        names: Vec<String>,
        index: HashMap<String, Gen>,
        entries: BTreeMap<(Gen, Gen), Gen>,
    ) -> Self {
        let n = names.len();
        let mut prod = vec![None; n * n];
        let mut right_quot = vec![None; n * n];
        let mut left_quot = vec![None; n * n];
        let mut by_left = vec![Vec::new(); n];
        let mut by_right = vec![Vec::new(); n];
        let mut is_value = vec![false; n];
        for (&(s, t), &u) in &entries {
            prod[s.0 * n + t.0] = Some(u);
            right_quot[s.0 * n + u.0].get_or_insert(t);
            left_quot[t.0 * n + u.0].get_or_insert(s);
            by_left[s.0].push((t, u));
            by_right[t.0].push((s, u));
            is_value[u.0] = true;
        }
        Self {
            names,
            index,
            entries,
            prod,
            right_quot,
            left_quot,
            by_left,
            by_right,
            is_value,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn num_products(&self) -> usize {
        self.entries.len()
    }

    pub fn generators(&self) -> impl Iterator<Item = Gen> + '_ {
        (0..self.names.len()).map(Gen)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: Gen) -> &str {
        &self.names[g.0]
    }

    pub fn elem_name(&self, e: Elem) -> &str {
        match e {
            Elem::Identity => IDENTITY_NAME,
            Elem::Gen(g) => self.name(g),
        }
    }

    pub fn gen(&self, name: &str) -> Option<Gen> {
        self.index.get(name).copied()
    }

    /// `s · t`, if it is a table entry.
    #[inline]
    pub fn product(&self, s: Gen, t: Gen) -> Option<Gen> {
        self.prod[s.0 * self.len() + t.0]
    }

    #[inline]
    pub fn is_defined(&self, s: Gen, t: Gen) -> bool {
        self.product(s, t).is_some()
    }

    /// The `t` with `s · t = u`, if any.
    #[inline]
    pub fn right_quotient(&self, s: Gen, u: Gen) -> Option<Gen> {
        self.right_quot[s.0 * self.len() + u.0]
    }

    /// The `s` with `s · t = u`, if any.
    #[inline]
    pub fn left_quotient(&self, t: Gen, u: Gen) -> Option<Gen> {
        self.left_quot[t.0 * self.len() + u.0]
    }

    /// Entries `(t, s·t)` with `s` as left factor, sorted by `t`.
    pub fn with_left(&self, s: Gen) -> &[(Gen, Gen)] {
        &self.by_left[s.0]
    }

    /// Entries `(s, s·t)` with `t` as right factor, sorted by `s`.
    pub fn with_right(&self, t: Gen) -> &[(Gen, Gen)] {
        &self.by_right[t.0]
    }

    pub fn is_product_value(&self, u: Gen) -> bool {
        self.is_value[u.0]
    }

    /// All entries `(s, t, u)` in `(s, t)` order.
    pub fn products(&self) -> impl Iterator<Item = (Gen, Gen, Gen)> + '_ {
        self.entries.iter().map(|(&(s, t), &u)| (s, t, u))
    }

    pub fn named_products(&self) -> impl Iterator<Item = (&str, &str, &str)> + '_ {
        self.products()
            .map(|(s, t, u)| (self.name(s), self.name(t), self.name(u)))
    }

    /// Set of named triples, independent of generator order.
    pub fn product_set(&self) -> BTreeSet<(String, String, String)> {
        self.named_products()
            .map(|(s, t, u)| (s.to_string(), t.to_string(), u.to_string()))
            .collect()
    }

    /// Equal generator sets and equal product sets, ignoring declaration order.
    pub fn same_structure(&self, other: &ProductTable) -> bool {
        let a: BTreeSet<&str> = self.names.iter().map(String::as_str).collect();
        let b: BTreeSet<&str> = other.names.iter().map(String::as_str).collect();
        a == b && self.product_set() == other.product_set()
    }

    /// Applies a renaming to every symbol. Names missing from `map` are kept.
    pub fn renamed(&self, map: &BTreeMap<String, String>) -> Result<ProductTable, TableError> {
        let rename = |s: &str| map.get(s).cloned().unwrap_or_else(|| s.to_string());
        let mut b = TableBuilder::new();
        for n in &self.names {
            b.generator(&rename(n))?;
        }
        for (s, t, u) in self.named_products() {
            b.product(&rename(s), &rename(t), &rename(u))?;
        }
        Ok(b.build())
    }

    /// Parses the plain-text table format:
    ///
    /// ```text
    /// # comment
    /// generators: a b ab
    /// product: a b = ab
    /// ```
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut b = TableBuilder::new();
        let mut pending: Vec<(usize, [String; 3])> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let err = |kind: ParseErrorKind| ParseError { line: line_no, kind };
            let line = strip_comment(raw).trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line.split_once(':').ok_or_else(|| {
                err(ParseErrorKind::Syntax(format!(
                    "expected `key: ...`, got {line:?}"
                )))
            })?;
            match key.trim() {
                "generators" => {
                    for name in rest.split_whitespace() {
                        b.generator(name).map_err(|e| err(e.into()))?;
                    }
                }
                "product" => {
                    let toks: Vec<&str> = rest.split_whitespace().collect();
                    match toks.as_slice() {
                        [s, t, "=", u] => {
                            pending.push((line_no, [s.to_string(), t.to_string(), u.to_string()]))
                        }
                        _ => {
                            return Err(err(ParseErrorKind::Syntax(format!(
                                "expected `product: s t = u`, got {line:?}"
                            ))))
                        }
                    }
                }
                other => {
                    return Err(err(ParseErrorKind::Syntax(format!(
                        "unknown directive {other:?}"
                    ))))
                }
            }
        }
        for (line, [s, t, u]) in pending {
            b.product(&s, &t, &u)
                .map_err(|e| ParseError { line, kind: e.into() })?;
        }
        Ok(b.build())
    }

    /// Serializes in the format accepted by [`ProductTable::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "# {} generators, {} products\n",
            self.len(),
            self.num_products()
        ));
        out.push_str("generators:");
        for n in &self.names {
            out.push(' ');
            out.push_str(n);
        }
        out.push('\n');
        for (s, t, u) in self.named_products() {
            out.push_str(&format!("product: {s} {t} = {u}\n"));
        }
        out
    }

    /// Checks the structural invariants every group-realizable table has.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (s, t, u) in self.products() {
            if u == s || u == t {
                violations.push(Violation::SelfAbsorption { s, t, u });
            }
        }
        for s in self.generators() {
            let mut seen: BTreeMap<Gen, Gen> = BTreeMap::new();
            for &(t, u) in self.with_left(s) {
                if let Some(&t0) = seen.get(&u) {
                    violations.push(Violation::LeftCancellation { s, t1: t0, t2: t, u });
                } else {
                    seen.insert(u, t);
                }
            }
        }
        for t in self.generators() {
            let mut seen: BTreeMap<Gen, Gen> = BTreeMap::new();
            for &(s, u) in self.with_right(t) {
                if let Some(&s0) = seen.get(&u) {
                    violations.push(Violation::RightCancellation { s1: s0, s2: s, t, u });
                } else {
                    seen.insert(u, s);
                }
            }
        }
        // (a·b)·c = q  ⇒  b·c defined and a·(b·c) = q
        for (a, b, p) in self.products() {
            for &(c, q) in self.with_left(p) {
                match self.product(b, c) {
                    None => violations.push(Violation::Closure {
                        a,
                        b,
                        c,
                        missing: Side::Right,
                    }),
                    Some(r) => {
                        if self.product(a, r) != Some(q) {
                            violations.push(Violation::Associativity { a, b, c });
                        }
                    }
                }
            }
        }
        // a·(b·c) = q  ⇒  a·b defined and (a·b)·c = q
        for (b, c, r) in self.products() {
            for &(a, q) in self.with_right(r) {
                match self.product(a, b) {
                    None => violations.push(Violation::Closure {
                        a,
                        b,
                        c,
                        missing: Side::Left,
                    }),
                    Some(p) => {
                        if self.product(p, c) != Some(q) {
                            violations.push(Violation::Associativity { a, b, c });
                        }
                    }
                }
            }
        }
        violations.sort();
        violations.dedup();
        ValidationReport { violations }
    }

    pub fn describe_violation(&self, v: &Violation) -> String {
        let n = |g: Gen| self.name(g);
        match *v {
            Violation::SelfAbsorption { s, t, u } => {
                format!("self-absorption: {} {} = {}", n(s), n(t), n(u))
            }
            Violation::LeftCancellation { s, t1, t2, u } => format!(
                "left cancellation: {} {} = {} {} = {}",
                n(s),
                n(t1),
                n(s),
                n(t2),
                n(u)
            ),
            Violation::RightCancellation { s1, s2, t, u } => format!(
                "right cancellation: {} {} = {} {} = {}",
                n(s1),
                n(t),
                n(s2),
                n(t),
                n(u)
            ),
            Violation::Closure { a, b, c, missing } => {
                let (x, y) = match missing {
                    Side::Right => (b, c),
                    Side::Left => (a, b),
                };
                format!(
                    "restricted closure: {} {} {} lies in S but {} {} is undefined",
                    n(a),
                    n(b),
                    n(c),
                    n(x),
                    n(y)
                )
            }
            Violation::Associativity { a, b, c } => format!(
                "associativity: ({} {}) {} and {} ({} {}) disagree",
                n(a),
                n(b),
                n(c),
                n(a),
                n(b),
                n(c)
            ),
        }
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    /// `s · t = u` with `u ∈ {s, t}`.
    SelfAbsorption { s: Gen, t: Gen, u: Gen },
    /// `s · t1 = s · t2 = u` with `t1 ≠ t2`.
    LeftCancellation { s: Gen, t1: Gen, t2: Gen, u: Gen },
    /// `s1 · t = s2 · t = u` with `s1 ≠ s2`.
    RightCancellation { s1: Gen, s2: Gen, t: Gen, u: Gen },
    /// `abc ∈ S` but the product on the `missing` side is not an entry.
    Closure { a: Gen, b: Gen, c: Gen, missing: Side },
    /// Both bracketings of `abc` are defined but disagree, or one is missing
    /// its outer product.
    Associativity { a: Gen, b: Gen, c: Gen },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Free-function form of [`ProductTable::validate`].
pub fn validate_table(table: &ProductTable) -> ValidationReport {
    table.validate()
}

/// Searches for a bijection of generators carrying one table's products onto
/// the other's. Backtracking with degree pruning; intended for the small
/// tables this crate generates.
pub fn find_isomorphism(a: &ProductTable, b: &ProductTable) -> Option<Vec<Gen>> {
    if a.len() != b.len() || a.num_products() != b.num_products() {
        return None;
    }
    let sig = |t: &ProductTable, g: Gen| {
        let as_value = t.products().filter(|&(_, _, u)| u == g).count();
        (t.with_left(g).len(), t.with_right(g).len(), as_value)
    };
    let sa: Vec<_> = a.generators().map(|g| sig(a, g)).collect();
    let sb: Vec<_> = b.generators().map(|g| sig(b, g)).collect();
    let mut map: Vec<Option<Gen>> = vec![None; a.len()];
    let mut used = vec![false; b.len()];

    fn consistent(a: &ProductTable, b: &ProductTable, map: &[Option<Gen>]) -> bool {
        for (s, t, u) in a.products() {
            if let (Some(s2), Some(t2)) = (map[s.0], map[t.0]) {
                match (b.product(s2, t2), map[u.0]) {
                    (None, _) => return false,
                    (Some(v), Some(u2)) if v != u2 => return false,
                    _ => {}
                }
            }
        }
        true
    }

    fn go(
        i: usize,
        a: &ProductTable,
        b: &ProductTable,
        sa: &[(usize, usize, usize)],
        sb: &[(usize, usize, usize)],
        map: &mut Vec<Option<Gen>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == a.len() {
            return true;
        }
        for j in 0..b.len() {
            if used[j] || sa[i] != sb[j] {
                continue;
            }
            map[i] = Some(Gen(j));
            used[j] = true;
            if consistent(a, b, map) && go(i + 1, a, b, sa, sb, map, used) {
                return true;
            }
            map[i] = None;
            used[j] = false;
        }
        false
    }

    if go(0, a, b, &sa, &sb, &mut map, &mut used) {
        Some(map.into_iter().map(|g| g.expect("complete map")).collect())
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(gens: &[&str], prods: &[(&str, &str, &str)]) -> ProductTable {
        ProductTable::new(gens.iter().copied(), prods.iter().copied()).unwrap()
    }

    #[test]
    fn self_absorption_is_reported() {
        let t = table(&["a", "b"], &[("a", "b", "a")]);
        let r = t.validate();
        assert!(r.violations.contains(&Violation::SelfAbsorption {
            s: Gen(0),
            t: Gen(1),
            u: Gen(0)
        }));
    }

    #[test]
    fn missing_closure_is_reported() {
        let t = table(&["a", "b", "c", "p", "q"], &[("a", "b", "p"), ("p", "c", "q")]);
        let r = t.validate();
        assert!(r.violations.contains(&Violation::Closure {
            a: Gen(0),
            b: Gen(1),
            c: Gen(2),
            missing: Side::Right
        }));
    }

    #[test]
    fn cancellation_failures() {
        let t = table(&["a", "b", "c", "u"], &[("a", "b", "u"), ("a", "c", "u")]);
        assert!(matches!(
            t.validate().violations[0],
            Violation::LeftCancellation { .. }
        ));
        let t = table(&["a", "b", "c", "u"], &[("a", "c", "u"), ("b", "c", "u")]);
        assert!(matches!(
            t.validate().violations[0],
            Violation::RightCancellation { .. }
        ));
    }

    #[test]
    fn associativity_mismatch() {
        // (a·b)·c = q but a·(b·c) = r ≠ q
        let t = table(
            &["a", "b", "c", "p", "q", "r", "s"],
            &[("a", "b", "p"), ("p", "c", "q"), ("b", "c", "s"), ("a", "s", "r")],
        );
        assert!(t
            .validate()
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Associativity { .. })));
    }

    #[test]
    fn single_generator_is_valid() {
        assert!(table(&["x"], &[]).validate().is_valid());
    }

    #[test]
    fn parse_round_trip() {
        let text = "# z2\ngenerators: a b\ngenerators: D  # more\nproduct: a b = D\nproduct: b a = D\nproduct: a b = D\n";
        let t = ProductTable::parse(text).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.num_products(), 2);
        assert_eq!(ProductTable::parse(&t.to_text()).unwrap(), t);
    }

    #[test]
    fn parse_errors_carry_lines() {
        let e = ProductTable::parse("generators: a b\nproduct: a b = c\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(matches!(
            e.kind,
            ParseErrorKind::Table(TableError::UndeclaredSymbol(_))
        ));
        let e = ProductTable::parse("generators: a b c\nproduct: a b = c\nproduct: a b = a\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(matches!(
            e.kind,
            ParseErrorKind::Table(TableError::ConflictingProduct { .. })
        ));
        let e = ProductTable::parse("generators: a^2\n").unwrap_err();
        assert!(matches!(
            e.kind,
            ParseErrorKind::Table(TableError::InvalidSymbol(_))
        ));
        assert!(ProductTable::parse("product a b = c\n").is_err());
        assert!(ProductTable::parse("generators: e\n").is_err());
    }

    #[test]
    fn products_may_reference_later_generators() {
        let t = ProductTable::parse("product: a b = c\ngenerators: a b c\n").unwrap();
        assert_eq!(t.num_products(), 1);
    }

    #[test]
    fn isomorphism_search() {
        let a = table(&["p", "q", "D"], &[("p", "q", "D"), ("q", "p", "D")]);
        let b = table(&["Z", "x", "y"], &[("x", "y", "Z"), ("y", "x", "Z")]);
        let m = find_isomorphism(&a, &b).unwrap();
        assert_eq!(m[2], Gen(0));
        let c = table(&["Z", "x", "y"], &[("x", "y", "Z")]);
        assert!(find_isomorphism(&a, &c).is_none());
    }
}
