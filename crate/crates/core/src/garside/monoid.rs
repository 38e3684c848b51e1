//! Brute-force positive monoid of `G_{n,m}` up to a word length.
//!
//! The defining relations identify all `n` cyclic rotations of the
//! `m`-periodic word `x_1 x_2 ⋯`. They preserve length, so classes of words of
//! length `L` are closed under rewriting and can be computed one length at a
//! time with union-find.

use thiserror::Error;

use super::GarsideFactor;

/// Refuse to enumerate more words than this.
pub const MAX_ORACLE_WORDS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("monoid oracle for {factor} up to length {max_len} needs more than {limit} words")]
    TooLarge {
        factor: GarsideFactor,
        max_len: usize,
        limit: usize,
    },
}

/// Equivalence classes of positive words, letters `0..n`.
#[derive(Debug, Clone)]
pub struct MonoidClasses {
    n: usize,
    max_len: usize,
    // per length, class representative (smallest code) of each word code
    reps: Vec<Vec<usize>>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.0[hi] = lo;
        }
    }
}

fn encode(n: usize, w: &[usize]) -> usize {
    w.iter().fold(0, |acc, &c| acc * n + c)
}

fn decode(n: usize, len: usize, mut code: usize) -> Vec<usize> {
    let mut w = vec![0; len];
    for slot in w.iter_mut().rev() {
        *slot = code % n;
        code /= n;
    }
    w
}

pub fn monoid_bfs_oracle(factor: GarsideFactor, max_len: usize) -> Result<MonoidClasses, OracleError> {
    let GarsideFactor { n, m } = factor;
    let mut total = 0usize;
    for len in 0..=max_len {
        total = n
            .checked_pow(len as u32)
            .and_then(|c| total.checked_add(c))
            .filter(|&t| t <= MAX_ORACLE_WORDS)
            .ok_or(OracleError::TooLarge {
                factor,
                max_len,
                limit: MAX_ORACLE_WORDS,
            })?;
    }
    let sides: Vec<Vec<usize>> = (0..n).map(|r| (0..m).map(|q| (r + q) % n).collect()).collect();
    let mut reps = Vec::with_capacity(max_len + 1);
    for len in 0..=max_len {
        let count = n.pow(len as u32);
        let mut uf = UnionFind((0..count).collect());
        if len >= m && n > 1 {
            for code in 0..count {
                let w = decode(n, len, code);
                for p in 0..=len - m {
                    if !sides.iter().any(|s| w[p..p + m] == s[..]) {
                        continue;
                    }
                    for s in &sides {
                        let mut v = w.clone();
                        v[p..p + m].copy_from_slice(s);
                        uf.union(code, encode(n, &v));
                    }
                }
            }
        }
        reps.push((0..count).map(|c| uf.find(c)).collect());
    }
    Ok(MonoidClasses { n, max_len, reps })
}

impl MonoidClasses {
    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// `(length, representative code)`, or `None` for words that are too
    /// long or use letters outside `0..n`.
    pub fn class_of(&self, w: &[usize]) -> Option<(usize, usize)> {
        if w.len() > self.max_len || w.iter().any(|&c| c >= self.n) {
            return None;
        }
        Some((w.len(), self.reps[w.len()][encode(self.n, w)]))
    }

    pub fn equivalent(&self, a: &[usize], b: &[usize]) -> bool {
        match (self.class_of(a), self.class_of(b)) {
            (Some(x), Some(y)) => x == y,
            _ => false,
        }
    }

    /// All words in the class of `w`, sorted.
    pub fn class_members(&self, w: &[usize]) -> Vec<Vec<usize>> {
        let Some((len, rep)) = self.class_of(w) else {
            return Vec::new();
        };
        self.reps[len]
            .iter()
            .enumerate()
            .filter(|&(_, &r)| r == rep)
            .map(|(c, _)| decode(self.n, len, c))
            .collect()
    }

    pub fn num_classes(&self, len: usize) -> usize {
        let reps = &self.reps[len];
        reps.iter().enumerate().filter(|&(c, &r)| c == r).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: usize, m: usize) -> GarsideFactor {
        GarsideFactor::new(n, m).unwrap()
    }

    #[test]
    fn braid_relation() {
        let c = monoid_bfs_oracle(f(2, 3), 3).unwrap();
        assert_eq!(c.class_members(&[0, 1, 0]), [vec![0, 1, 0], vec![1, 0, 1]]);
        assert!(!c.equivalent(&[0, 1], &[1, 0]));
        assert_eq!(c.num_classes(3), 7);
    }

    #[test]
    fn one_letter() {
        let c = monoid_bfs_oracle(f(1, 2), 2).unwrap();
        assert_eq!(c.class_members(&[0, 0]), [vec![0, 0]]);
    }

    #[test]
    fn guard() {
        assert!(matches!(
            monoid_bfs_oracle(f(10, 2), 7),
            Err(OracleError::TooLarge { .. })
        ));
    }
}
