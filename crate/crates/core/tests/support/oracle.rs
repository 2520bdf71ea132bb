//! Brute-force model of `k[[H]]` and its monomial ideals as explicit sets of
//! exponents up to a fixed bound. Shares no code with the threshold engine.

#![allow(dead_code)]

/// Exponents `0..=bound` with membership flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSet {
    pub bound: i64,
    pub bits: Vec<bool>,
}

impl TruncatedSet {
    pub fn empty(bound: i64) -> Self {
        TruncatedSet {
            bound,
            bits: vec![false; bound as usize + 1],
        }
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && x <= self.bound && self.bits[x as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = i64> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i as i64)
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_subset(&self, other: &TruncatedSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b)
    }
}

/// The semigroup generated by `gens`, up to `bound`.
pub fn semigroup(gens: &[i64], bound: i64) -> TruncatedSet {
    let mut s = TruncatedSet::empty(bound);
    s.bits[0] = true;
    for x in 1..=bound {
        s.bits[x as usize] = gens.iter().any(|&g| g <= x && s.bits[(x - g) as usize]);
    }
    s
}

pub struct Oracle {
    pub h: TruncatedSet,
}

impl Oracle {
    pub fn new(gens: &[i64], bound: i64) -> Self {
        Oracle {
            h: semigroup(gens, bound),
        }
    }

    pub fn bound(&self) -> i64 {
        self.h.bound
    }

    /// `⋃ (g + H)` truncated.
    pub fn ideal(&self, exps: &[i64]) -> TruncatedSet {
        let mut s = TruncatedSet::empty(self.bound());
        for &g in exps {
            for h in self.h.elements() {
                if g + h <= self.bound() {
                    s.bits[(g + h) as usize] = true;
                }
            }
        }
        s
    }

    pub fn product(&self, a: &TruncatedSet, b: &TruncatedSet) -> TruncatedSet {
        let mut s = TruncatedSet::empty(self.bound());
        let bs: Vec<i64> = b.elements().collect();
        for x in a.elements() {
            for &y in &bs {
                if x + y > self.bound() {
                    break;
                }
                s.bits[(x + y) as usize] = true;
            }
        }
        s
    }

    pub fn power(&self, a: &TruncatedSet, k: usize) -> TruncatedSet {
        let mut acc = self.h.clone();
        for _ in 0..k {
            acc = self.product(&acc, a);
        }
        acc
    }

    pub fn union(&self, a: &TruncatedSet, b: &TruncatedSet) -> TruncatedSet {
        let mut s = a.clone();
        for (x, &y) in s.bits.iter_mut().zip(&b.bits) {
            *x |= y;
        }
        s
    }

    pub fn intersection(&self, a: &TruncatedSet, b: &TruncatedSet) -> TruncatedSet {
        let mut s = a.clone();
        for (x, &y) in s.bits.iter_mut().zip(&b.bits) {
            *x &= y;
        }
        s
    }

    /// Elements of `a` not of the form `x + h` with `x ∈ a`, `h ∈ H ∖ {0}`.
    pub fn minimal_generators(&self, a: &TruncatedSet) -> Vec<i64> {
        a.elements()
            .filter(|&x| {
                !self
                    .h
                    .elements()
                    .skip(1)
                    .take_while(|&h| h <= x)
                    .any(|h| a.contains(x - h))
            })
            .collect()
    }

    /// `{x ∈ H : x + J ⊆ I}` for `x ≤ limit`, using the generators of `J`;
    /// `limit + max gen(J)` must not exceed the bound.
    pub fn colon(&self, i: &TruncatedSet, j: &TruncatedSet, limit: i64) -> TruncatedSet {
        let gens = self.minimal_generators(j);
        let mut s = TruncatedSet::empty(limit);
        for x in self.h.elements().take_while(|&x| x <= limit) {
            s.bits[x as usize] = gens.iter().all(|&g| i.contains(x + g));
        }
        s
    }

    /// `|I ∖ J|` for `J ⊆ I` whose complements lie below the bound.
    pub fn length(&self, big: &TruncatedSet, small: &TruncatedSet) -> usize {
        big.count() - small.count()
    }
}

/// Materializes a threshold vector as a truncated set.
pub fn from_thresholds(thresholds: &[i64], bound: i64) -> TruncatedSet {
    let e = thresholds.len() as i64;
    let mut s = TruncatedSet::empty(bound);
    for x in 0..=bound {
        s.bits[x as usize] = x >= thresholds[x.rem_euclid(e) as usize];
    }
    s
}

/// `ℓ(A/I^{n+1})` by direct counting: gaps of `I^{n+1}` inside `H`.
pub fn hilbert_function(gens: &[i64], ideal_exps: &[i64], n: usize, bound: i64) -> usize {
    let o = Oracle::new(gens, bound);
    let i = o.ideal(ideal_exps);
    let p = o.power(&i, n + 1);
    o.length(&o.h, &p)
}
