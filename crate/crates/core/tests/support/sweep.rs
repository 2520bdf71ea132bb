//! The parameter set used to check the family predictions mechanically.

#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stretched_core::family::{enumerate_params, sample_params, FamilyParams};

/// Every valid parameter set for `b ≤ 4, e ≤ 9`, plus a seeded sample of
/// `per_cell` sets for each `(b, e)` with `10 ≤ e ≤ 15`.
pub fn sweep_params(per_cell: usize) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for b in 2..=4 {
        for e in 4..=9 {
            out.extend(enumerate_params(b, e));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(66);
    for b in 2..=4 {
        for e in 10..=15 {
            out.extend((0..per_cell).map(|_| sample_params(b, e, &mut rng)));
        }
    }
    out
}
