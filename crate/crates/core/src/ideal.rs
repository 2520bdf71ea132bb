//! Monomial ideals of `k[[H]]` in threshold form.
//!
//! An ideal `J ⊆ H` (a set with `J + H ⊆ J`) is determined by its least
//! element in each residue class mod `e`. Products become min-plus cyclic
//! convolutions of the threshold vectors, sums and intersections become
//! pointwise min and max, and lengths are counted class by class.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone)]
pub struct HIdeal {
    ring: Arc<NumericalSemigroup>,
    thresholds: Vec<i64>,
}

impl fmt::Debug for HIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HIdeal")
            .field("thresholds", &self.thresholds)
            .finish()
    }
}

impl PartialEq for HIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.thresholds == other.thresholds && same_ring(&self.ring, &other.ring)
    }
}

impl Eq for HIdeal {}

fn same_ring(a: &Arc<NumericalSemigroup>, b: &Arc<NumericalSemigroup>) -> bool {
    Arc::ptr_eq(a, b) || a.apery() == b.apery()
}

impl HIdeal {
    /// The ideal generated by the monomials `u^g`, `g ∈ exps`.
    pub fn from_exponents(ring: &Arc<NumericalSemigroup>, exps: &[i64]) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let e = ring.multiplicity();
        let ap = ring.apery();
        let mut thresholds = vec![i64::MAX; e as usize];
        for &g in exps {
            if g == 0 {
                return Err(Error::ZeroExponent);
            }
            if !ring.contains(g) {
                return Err(Error::ExponentNotInSemigroup(g));
            }
            let gr = g.rem_euclid(e) as usize;
            for (j, &a) in ap.iter().enumerate() {
                let c = (gr + j) % e as usize;
                thresholds[c] = thresholds[c].min(g + a);
            }
        }
        Ok(HIdeal {
            ring: Arc::clone(ring),
            thresholds,
        })
    }

    /// Validating constructor from a raw threshold table.
    pub fn from_thresholds(ring: &Arc<NumericalSemigroup>, thresholds: Vec<i64>) -> Result<Self> {
        let e = ring.multiplicity();
        if thresholds.len() != e as usize {
            return Err(Error::InvalidThresholds(format!(
                "expected {e} entries, got {}",
                thresholds.len()
            )));
        }
        let ap = ring.apery();
        for (i, &t) in thresholds.iter().enumerate() {
            if t.rem_euclid(e) as usize != i {
                return Err(Error::InvalidThresholds(format!(
                    "entry {i} = {t} is in the wrong residue class"
                )));
            }
            if t < ap[i] {
                return Err(Error::InvalidThresholds(format!(
                    "entry {i} = {t} lies below the Apéry element {}",
                    ap[i]
                )));
            }
        }
        for &g in ring.minimal_generators() {
            for (i, &t) in thresholds.iter().enumerate() {
                let c = (i + g.rem_euclid(e) as usize) % e as usize;
                if thresholds[c] > t + g {
                    return Err(Error::InvalidThresholds(format!(
                        "not closed under adding generator {g} at class {i}"
                    )));
                }
            }
        }
        Ok(HIdeal {
            ring: Arc::clone(ring),
            thresholds,
        })
    }

    /// `A` itself; thresholds equal the Apéry table.
    pub fn unit(ring: &Arc<NumericalSemigroup>) -> Self {
        HIdeal {
            ring: Arc::clone(ring),
            thresholds: ring.apery().to_vec(),
        }
    }

    pub fn maximal(ring: &Arc<NumericalSemigroup>) -> Self {
        let mut thresholds = ring.apery().to_vec();
        thresholds[0] = ring.multiplicity();
        HIdeal {
            ring: Arc::clone(ring),
            thresholds,
        }
    }

    pub fn principal(ring: &Arc<NumericalSemigroup>, v: i64) -> Result<Self> {
        Self::from_exponents(ring, &[v])
    }

    pub fn ring(&self) -> &Arc<NumericalSemigroup> {
        &self.ring
    }

    pub fn thresholds(&self) -> &[i64] {
        &self.thresholds
    }

    fn e(&self) -> usize {
        self.thresholds.len()
    }

    fn check_parent(&self, other: &HIdeal) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    fn with_thresholds(&self, thresholds: Vec<i64>) -> Self {
        HIdeal {
            ring: Arc::clone(&self.ring),
            thresholds,
        }
    }

    /// Least valuation of an element of the ideal.
    pub fn min_valuation(&self) -> i64 {
        *self.thresholds.iter().min().expect("e >= 1")
    }

    pub fn max_threshold(&self) -> i64 {
        *self.thresholds.iter().max().expect("e >= 1")
    }

    pub fn is_unit(&self) -> bool {
        self.thresholds[0] == 0
    }

    pub fn multiply(&self, other: &HIdeal) -> Result<Self> {
        self.check_parent(other)?;
        let e = self.e();
        let mut out = vec![i64::MAX; e];
        for (i, &a) in self.thresholds.iter().enumerate() {
            let mut c = i;
            for &b in &other.thresholds {
                let s = a + b;
                if s < out[c] {
                    out[c] = s;
                }
                c += 1;
                if c == e {
                    c = 0;
                }
            }
        }
        Ok(self.with_thresholds(out))
    }

    /// `I^n` by iterated multiplication; `I^0 = A`.
    pub fn power(&self, n: usize) -> Self {
        let mut acc = HIdeal::unit(&self.ring);
        for _ in 0..n {
            acc = acc.multiply(self).expect("same ring");
        }
        acc
    }

    /// `[I^0, I^1, ..., I^upto]`.
    pub fn powers(&self, upto: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(upto + 1);
        out.push(HIdeal::unit(&self.ring));
        for k in 1..=upto {
            let next = out[k - 1].multiply(self).expect("same ring");
            out.push(next);
        }
        out
    }

    pub fn module_sum(&self, other: &HIdeal) -> Result<Self> {
        self.check_parent(other)?;
        let t = self
            .thresholds
            .iter()
            .zip(&other.thresholds)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Ok(self.with_thresholds(t))
    }

    pub fn intersect(&self, other: &HIdeal) -> Result<Self> {
        self.check_parent(other)?;
        let t = self
            .thresholds
            .iter()
            .zip(&other.thresholds)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Ok(self.with_thresholds(t))
    }

    /// `(self :_A divisor) = {x ∈ H : x + divisor ⊆ self}`.
    pub fn colon(&self, divisor: &HIdeal) -> Result<Self> {
        self.check_parent(divisor)?;
        let e = self.e();
        let ap = self.ring.apery();
        let t = (0..e)
            .map(|c| {
                let raw = divisor
                    .thresholds
                    .iter()
                    .enumerate()
                    .map(|(i, &d)| self.thresholds[(c + i) % e] - d)
                    .max()
                    .expect("e >= 1");
                raw.max(ap[c])
            })
            .collect();
        Ok(self.with_thresholds(t))
    }

    /// Multiplication by the monomial `u^c`.
    pub fn shift(&self, c: i64) -> Result<Self> {
        if !self.ring.contains(c) {
            return Err(Error::ShiftNotInSemigroup(c));
        }
        let e = self.e();
        let off = c.rem_euclid(e as i64) as usize;
        let mut t = vec![0; e];
        for (i, &a) in self.thresholds.iter().enumerate() {
            t[(i + off) % e] = a + c;
        }
        Ok(self.with_thresholds(t))
    }

    /// `sub ⊆ self`.
    pub fn is_subideal(&self, sub: &HIdeal) -> Result<bool> {
        self.check_parent(sub)?;
        Ok(self
            .thresholds
            .iter()
            .zip(&sub.thresholds)
            .all(|(a, b)| b >= a))
    }

    pub fn contains_element(&self, x: i64) -> bool {
        x >= 0 && x >= self.thresholds[x.rem_euclid(self.e() as i64) as usize]
    }

    /// `ℓ(self / sub)`; requires `sub ⊆ self`.
    pub fn length_between(&self, sub: &HIdeal) -> Result<u64> {
        if !self.is_subideal(sub)? {
            return Err(Error::NotSubideal);
        }
        let e = self.e() as i64;
        Ok(self
            .thresholds
            .iter()
            .zip(&sub.thresholds)
            .map(|(a, b)| ((b - a) / e) as u64)
            .sum())
    }

    /// `ℓ(A / self)`.
    pub fn colength(&self) -> u64 {
        HIdeal::unit(&self.ring)
            .length_between(self)
            .expect("every ideal lies in A")
    }

    /// Exponents of a minimal monomial generating set.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let m = HIdeal::maximal(&self.ring);
        let mi = self.multiply(&m).expect("same ring");
        let mut out: Vec<i64> = self
            .thresholds
            .iter()
            .zip(mi.thresholds())
            .filter(|(a, b)| a < b)
            .map(|(&a, _)| a)
            .collect();
        out.sort_unstable();
        out
    }
}
