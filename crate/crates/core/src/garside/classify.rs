//! Recovering the amalgam spec of a Garside table from its atoms.

use thiserror::Error;

use super::{AmalgamSpec, GarsideFactor};
use crate::table::{Gen, ProductTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("table is empty")]
    Empty,
    #[error("no unique Garside element: candidates {0:?}")]
    NoDelta(Vec<String>),
    #[error("not systolic Garside: atom {atom} has {count} atom successors")]
    Successor { atom: String, count: usize },
    #[error("not systolic Garside: successor map is not a permutation (atom {0} has two predecessors)")]
    NotPermutation(String),
    #[error("malformed table: Garside element not reached from atom {0}")]
    DeltaUnreached(String),
}

/// Reads off the spec: atoms are the generators that are never a product
/// value, `ξ(a)` is the unique atom `b` with `a·b` defined, each cycle of `ξ`
/// gives a factor `(n, m)` where `m` is the number of atoms multiplied along
/// the cycle to reach `Δ`.
pub fn classify_garside(table: &ProductTable) -> Result<AmalgamSpec, ClassifyError> {
    if table.is_empty() {
        return Err(ClassifyError::Empty);
    }
    if table.len() == 1 && table.num_products() == 0 {
        return Ok(AmalgamSpec::single(1, 1).expect("1x1 is valid"));
    }
    let is_factor = |g: Gen| !table.with_left(g).is_empty() || !table.with_right(g).is_empty();
    let deltas: Vec<Gen> = table
        .generators()
        .filter(|&g| table.is_product_value(g) && !is_factor(g))
        .collect();
    let [delta] = deltas[..] else {
        return Err(ClassifyError::NoDelta(
            deltas.iter().map(|&g| table.name(g).to_string()).collect(),
        ));
    };
    let atoms: Vec<Gen> = table
        .generators()
        .filter(|&g| !table.is_product_value(g))
        .collect();
    let mut xi = vec![None; table.len()];
    for &a in &atoms {
        let succ: Vec<Gen> = table
            .with_left(a)
            .iter()
            .map(|&(b, _)| b)
            .filter(|b| atoms.contains(b))
            .collect();
        match succ[..] {
            [b] => xi[a.0] = Some(b),
            _ => {
                return Err(ClassifyError::Successor {
                    atom: table.name(a).to_string(),
                    count: succ.len(),
                })
            }
        }
    }
    let mut seen_as_target = vec![false; table.len()];
    for &a in &atoms {
        let b = xi[a.0].expect("set above");
        if std::mem::replace(&mut seen_as_target[b.0], true) {
            return Err(ClassifyError::NotPermutation(table.name(b).to_string()));
        }
    }

    let mut visited = vec![false; table.len()];
    let mut factors = Vec::new();
    for &a in &atoms {
        if visited[a.0] {
            continue;
        }
        let mut n = 0;
        let mut c = a;
        while !visited[c.0] {
            visited[c.0] = true;
            n += 1;
            c = xi[c.0].expect("atom");
        }
        // multiply a · ξ(a) · ξ²(a) ⋯ until Δ
        let mut cur = a;
        let mut next = xi[a.0].expect("atom");
        let mut m = 1;
        while cur != delta {
            if m > table.len() + 1 {
                return Err(ClassifyError::DeltaUnreached(table.name(a).to_string()));
            }
            cur = table
                .product(cur, next)
                .ok_or_else(|| ClassifyError::DeltaUnreached(table.name(a).to_string()))?;
            next = xi[next.0].expect("atom");
            m += 1;
        }
        factors.push(GarsideFactor { n, m });
    }
    Ok(AmalgamSpec::new(factors)
        .expect("factors are positive")
        .canonical())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::garside_table;

    #[test]
    fn round_trips() {
        for s in ["2x3", "1x2;1x3", "1x1", "2x2", "3x2;2x3", "1x5"] {
            let spec: AmalgamSpec = s.parse().unwrap();
            assert_eq!(
                classify_garside(&garside_table(&spec)).unwrap(),
                spec.canonical(),
                "{s}"
            );
        }
    }

    #[test]
    fn rejects_non_garside() {
        let t = ProductTable::new(["a", "b", "c"], []).unwrap();
        assert!(matches!(classify_garside(&t), Err(ClassifyError::NoDelta(_))));
        // two atoms both followed by b
        let t = ProductTable::new(
            ["a", "b", "c", "ab", "cb", "D"],
            [("a", "b", "ab"), ("c", "b", "cb"), ("ab", "c", "D")],
        )
        .unwrap();
        assert!(classify_garside(&t).is_err());
    }
}
