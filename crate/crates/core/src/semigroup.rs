//! Numerical semigroups and their Apéry tables.
//!
//! A numerical semigroup `H ⊆ ℕ` is stored through its Apéry set with respect
//! to the multiplicity `e`: `apery[i]` is the least element of `H` congruent to
//! `i` modulo `e`. Membership, the Frobenius number and the minimal generating
//! set all fall out of that table.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    apery: Vec<i64>,
    frobenius: i64,
}

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// Shortest paths over the residue classes mod `e`, edges weighted by the
/// generators. Converges in at most `e` rounds.
fn apery_table(gens: &[i64], e: i64) -> Vec<i64> {
    let m = e as usize;
    let mut dist = vec![i64::MAX; m];
    dist[0] = 0;
    for _ in 0..m {
        let mut changed = false;
        for i in 0..m {
            if dist[i] == i64::MAX {
                continue;
            }
            for &g in gens {
                let j = (i + (g % e) as usize) % m;
                let cand = dist[i] + g;
                if cand < dist[j] {
                    dist[j] = cand;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    dist
}

impl NumericalSemigroup {
    /// Builds `⟨gens⟩`. Redundant generators are accepted and dropped.
    pub fn new(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&g) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(g));
        }
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::NotCoprime { gcd: g });
        }
        let e = *gens.iter().min().expect("nonempty");
        let apery = apery_table(gens, e);
        debug_assert!(apery.iter().all(|&a| a != i64::MAX));
        let frobenius = apery.iter().max().copied().unwrap_or(0) - e;
        let mut semigroup = NumericalSemigroup {
            generators: Vec::new(),
            apery,
            frobenius,
        };
        semigroup.generators = semigroup.compute_minimal_generators();
        Ok(semigroup)
    }

    fn compute_minimal_generators(&self) -> Vec<i64> {
        let e = self.multiplicity();
        let mut out = vec![e];
        for (i, &w) in self.apery.iter().enumerate().skip(1) {
            // w is decomposable iff w - apery[j] ∈ H for some other nonzero class j
            let decomposable = self
                .apery
                .iter()
                .enumerate()
                .skip(1)
                .any(|(j, &a)| j != i && a < w && self.contains(w - a));
            if !decomposable {
                out.push(w);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn multiplicity(&self) -> i64 {
        self.apery.len() as i64
    }

    pub fn apery(&self) -> &[i64] {
        &self.apery
    }

    /// Largest integer outside `H`; `-1` for `H = ℕ`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// The minimal generating set, sorted.
    pub fn minimal_generators(&self) -> &[i64] {
        &self.generators
    }

    /// Embedding dimension `μ(m)`.
    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && x >= self.apery[x.rem_euclid(self.multiplicity()) as usize]
    }
}

/// All `x ≤ bound` that are nonnegative integer combinations of `gens`, by a
/// plain reachability sweep over `[0, bound]`.
pub fn brute_force_elements(gens: &[i64], bound: i64) -> BTreeSet<i64> {
    if bound < 0 {
        return BTreeSet::new();
    }
    let n = bound as usize;
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for x in 1..=n {
        reach[x] = gens
            .iter()
            .any(|&g| g > 0 && (g as usize) <= x && reach[x - g as usize]);
    }
    reach
        .iter()
        .enumerate()
        .filter(|(_, &r)| r)
        .map(|(x, _)| x as i64)
        .collect()
}
