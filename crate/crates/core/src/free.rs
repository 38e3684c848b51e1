//! Free-group words and the five eight-generator counterexamples.
//!
//! Letters are lowercase characters; in text form an uppercase letter is the
//! inverse of its lowercase letter.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::table::{ProductTable, TableError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub sym: char,
    pub inverse: bool,
}

impl Letter {
    pub fn new(sym: char) -> Self {
        Self { sym, inverse: false }
    }

    pub fn inv(self) -> Self {
        Self {
            sym: self.sym,
            inverse: !self.inverse,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord(pub Vec<Letter>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid letter {0:?} in free word")]
pub struct WordParseError(pub char);

impl FreeWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn letter(sym: char) -> Self {
        Self(vec![Letter::new(sym)])
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Free reduction with a stack.
    pub fn reduce(&self) -> FreeWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord(out)
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1].inv())
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// Reduced product.
    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        self.concat(other).reduce()
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        FreeWord(v)
    }
}

impl FromStr for FreeWord {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| {
                if c.is_lowercase() {
                    Ok(Letter::new(c))
                } else if c.is_uppercase() && c.to_lowercase().count() == 1 {
                    Ok(Letter::new(c.to_lowercase().next().expect("one char")).inv())
                } else {
                    Err(WordParseError(c))
                }
            })
            .collect::<Result<_, _>>()
            .map(FreeWord)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            let c = if l.inverse {
                l.sym.to_uppercase().next().unwrap_or(l.sym)
            } else {
                l.sym
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Images of generators in a free group on `basis`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub basis: Vec<char>,
    pub images: BTreeMap<char, FreeWord>,
}

impl Realization {
    pub fn image(&self, s: char) -> &FreeWord {
        &self.images[&s]
    }
}

/// The eight generators and one of the five relation sets, `(p, q, r)`
/// meaning `p · q = r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub index: u8,
    pub symbols: Vec<char>,
    pub triples: Vec<(char, char, char)>,
    pub realization: Realization,
}

pub const COUNTEREXAMPLE_SYMBOLS: [char; 8] = ['u', 'v', 'w', 'x', 'a', 'b', 'c', 'd'];

/// # Panics
///
/// If `i` is not in `1..=5`.
pub fn counterexample_realization(i: u8) -> Counterexample {
    let (triples, basis, derived): (&str, &str, &[(char, &str)]) = match i {
        1 => (
            "uav wbv udx wcx",
            "uwad",
            &[('v', "ua"), ('x', "ud"), ('b', "Wua"), ('c', "Wud")],
        ),
        2 => (
            "bvw cxw avu dxu",
            "vxab",
            &[('w', "bv"), ('u', "av"), ('c', "bvX"), ('d', "avX")],
        ),
        3 => (
            "vbw xcw uxd uva",
            "uvwx",
            &[('a', "uv"), ('b', "Vw"), ('c', "Xw"), ('d', "ux")],
        ),
        4 => (
            "dxu avu vwb xwc",
            "avwx",
            &[('u', "av"), ('b', "vw"), ('c', "xw"), ('d', "avX")],
        ),
        5 => (
            "vua vwb xwc xud",
            "uvwx",
            &[('a', "vu"), ('b', "vw"), ('c', "xw"), ('d', "xu")],
        ),
        _ => panic!("counterexample index {i} outside 1..=5"),
    };
    let triples = triples
        .split_whitespace()
        .map(|t| {
            let c: Vec<char> = t.chars().collect();
            (c[0], c[1], c[2])
        })
        .collect();
    let mut images: BTreeMap<char, FreeWord> = basis.chars().map(|c| (c, FreeWord::letter(c))).collect();
    for &(s, w) in derived {
        images.insert(s, w.parse().expect("static word"));
    }
    Counterexample {
        index: i,
        symbols: COUNTEREXAMPLE_SYMBOLS.to_vec(),
        triples,
        realization: Realization {
            basis: basis.chars().collect(),
            images,
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FreeFailure {
    /// `αβγ` is trivial.
    TrivialProduct,
    /// `αβγ` equals a generator.
    ProductInS(char),
    /// `αβγ⁻¹ = 1` but the triple is not a relation.
    UnlistedRelation,
    /// The triple is a relation but `αβγ⁻¹ ≠ 1`.
    FalseRelation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeVerification {
    pub triples_checked: usize,
    pub first_failure: Option<((char, char, char), FreeFailure)>,
}

impl FreeVerification {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// For all `(α, β, γ) ∈ S³`: `αβγ ≠ 1`, `αβγ ∉ S`, and `αβγ⁻¹ = 1` iff the
/// triple is listed.
pub fn verify_restricted_triangular_free(
    symbols: &[char],
    triples: &[(char, char, char)],
    realization: &Realization,
) -> FreeVerification {
    let img = |s: char| realization.image(s);
    let mut checked = 0;
    for &a in symbols {
        for &b in symbols {
            let ab = img(a).mul(img(b));
            for &c in symbols {
                checked += 1;
                let triple = (a, b, c);
                let abc = ab.mul(img(c));
                let failure = if abc.is_empty() {
                    Some(FreeFailure::TrivialProduct)
                } else if let Some(&s) = symbols.iter().find(|&&s| *img(s) == abc) {
                    Some(FreeFailure::ProductInS(s))
                } else {
                    let trivial = ab.mul(&img(c).inverse()).is_empty();
                    match (trivial, triples.contains(&triple)) {
                        (true, false) => Some(FreeFailure::UnlistedRelation),
                        (false, true) => Some(FreeFailure::FalseRelation),
                        _ => None,
                    }
                };
                if let Some(f) = failure {
                    return FreeVerification {
                        triples_checked: checked,
                        first_failure: Some((triple, f)),
                    };
                }
            }
        }
    }
    FreeVerification {
        triples_checked: checked,
        first_failure: None,
    }
}

pub fn table_from_triples(
    symbols: &[char],
    triples: &[(char, char, char)],
) -> Result<ProductTable, TableError> {
    let names: Vec<String> = symbols.iter().map(|c| c.to_string()).collect();
    let prods: Vec<(String, String, String)> = triples
        .iter()
        .map(|&(p, q, r)| (p.to_string(), q.to_string(), r.to_string()))
        .collect();
    ProductTable::new(
        names.iter().map(String::as_str),
        prods.iter().map(|(p, q, r)| (p.as_str(), q.as_str(), r.as_str())),
    )
}

impl Counterexample {
    pub fn verify(&self) -> FreeVerification {
        verify_restricted_triangular_free(&self.symbols, &self.triples, &self.realization)
    }

    pub fn table(&self) -> ProductTable {
        table_from_triples(&self.symbols, &self.triples).expect("static relation set")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditions::check_systolic_conditions;

    fn w(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    #[test]
    fn reduction() {
        assert_eq!(w("uvVw").reduce(), w("uw"));
        assert!(w("uU").reduce().is_empty());
        assert_eq!(w("abc").reduce(), w("abc"));
        assert_eq!(w("aBbA").reduce().to_string(), "1");
        assert!(w("ab").is_reduced());
        assert!("a1".parse::<FreeWord>().is_err());
    }

    #[test]
    fn relators_vanish() {
        for i in 1..=5 {
            let c = counterexample_realization(i);
            for &(p, q, r) in &c.triples {
                let im = |s| c.realization.image(s).clone();
                assert!(
                    im(p).mul(&im(q)).mul(&im(r).inverse()).is_empty(),
                    "R{i} {p}{q}{r}"
                );
            }
            for b in &c.realization.basis {
                assert_eq!(c.realization.image(*b), &FreeWord::letter(*b));
            }
        }
    }

    #[test]
    fn all_five_verify_and_fail_their_condition() {
        for i in 1..=5u8 {
            let c = counterexample_realization(i);
            let v = c.verify();
            assert!(v.passed(), "R{i}: {:?}", v.first_failure);
            assert_eq!(v.triples_checked, 512);
            let t = c.table();
            assert!(t.validate().is_valid(), "R{i}");
            assert_eq!(check_systolic_conditions(&t).failing(), vec![i], "R{i}");
        }
    }

    #[test]
    fn broken_relation_sets() {
        let c = counterexample_realization(3);
        let fewer: Vec<_> = c
            .triples
            .iter()
            .copied()
            .filter(|&t| t != ('v', 'b', 'w'))
            .collect();
        let v = verify_restricted_triangular_free(&c.symbols, &fewer, &c.realization);
        assert_eq!(
            v.first_failure,
            Some((('v', 'b', 'w'), FreeFailure::UnlistedRelation))
        );
        let mut more = c.triples.clone();
        more.push(('a', 'a', 'b'));
        let v = verify_restricted_triangular_free(&c.symbols, &more, &c.realization);
        assert_eq!(
            v.first_failure,
            Some((('a', 'a', 'b'), FreeFailure::FalseRelation))
        );
    }
}
