//! Seeded random tables that pass validation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::table::{Gen, ProductTable, TableBuilder};

/// Greedily adds random entries `s · t = u`, keeping each one only if the
/// table still validates.
pub fn random_valid_table<R: Rng>(rng: &mut R, max_generators: usize) -> ProductTable {
    let n = rng.gen_range(1..=max_generators.max(1));
    let attempts = rng.gen_range(0..=4 * n);
    let mut entries: Vec<(Gen, Gen, Gen)> = Vec::new();
    for _ in 0..attempts {
        let (s, t, u) = (
            Gen(rng.gen_range(0..n)),
            Gen(rng.gen_range(0..n)),
            Gen(rng.gen_range(0..n)),
        );
        if u == s || u == t || entries.iter().any(|&(a, b, _)| (a, b) == (s, t)) {
            continue;
        }
        entries.push((s, t, u));
        if !build(n, &entries).validate().is_valid() {
            entries.pop();
        }
    }
    build(n, &entries)
}

fn build(n: usize, entries: &[(Gen, Gen, Gen)]) -> ProductTable {
    let mut b = TableBuilder::new();
    for i in 0..n {
        b.generator(&format!("g{i}")).expect("fresh name");
    }
    for &(s, t, u) in entries {
        b.product_ids(s, t, u).expect("distinct keys");
    }
    b.build()
}

/// `count` validated tables with at most `max_generators` generators, fixed
/// by `seed`.
pub fn random_valid_tables(seed: u64, count: usize, max_generators: usize) -> Vec<ProductTable> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_valid_table(&mut rng, max_generators))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_and_valid() {
        let a = random_valid_tables(7, 20, 12);
        let b = random_valid_tables(7, 20, 12);
        for (x, y) in a.iter().zip(&b) {
            assert!(x.validate().is_valid());
            assert!(x.len() <= 12);
            assert_eq!(x.to_text(), y.to_text());
        }
        assert!(a.iter().any(|t| t.num_products() > 2));
    }
}
