//! Hilbert function, h-polynomial and Hilbert coefficients in dimension one.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::filtration::{default_cap, Filtration};
use crate::ideal::HIdeal;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub e0: i64,
    pub e1: i64,
    pub hpoly: Vec<i64>,
    /// Least `N` with `ℓ(A/I^{n+1}) = e0(n+1) − e1` for every `n ≥ N`.
    pub postulation: usize,
    /// `ℓ(A/I^{n+1})` for `n = 0..=r+2`.
    pub hf: Vec<u64>,
}

impl HilbertData {
    /// The Hilbert polynomial `e0(n+1) − e1`.
    pub fn polynomial_at(&self, n: i64) -> i64 {
        self.e0 * (n + 1) - self.e1
    }
}

/// `ℓ(A/I^{n+1})`.
pub fn hilbert_function(ideal: &HIdeal, n: usize) -> u64 {
    ideal.power(n + 1).colength()
}

pub fn hilbert_data(ideal: &HIdeal, q: &HIdeal) -> Result<HilbertData> {
    let f = Filtration::with_reduction(ideal, q, default_cap(ideal.ring().multiplicity()))?;
    from_filtration(&f)
}

/// The series `Σ ℓ(I^n/I^{n+1}) z^n` is constant `e0` from degree `r` on, so
/// `h(z) = (1 − z)·HS(z)` has degree at most `r`.
pub fn from_filtration(f: &Filtration) -> Result<HilbertData> {
    let r = f.reduction_number();
    let top = r + 2;
    let hf: Vec<u64> = (0..=top).map(|n| f.power(n + 1).colength()).collect();
    let graded: Vec<i64> = (0..=top)
        .map(|n| {
            f.power(n)
                .length_between(f.power(n + 1))
                .expect("I^{n+1} ⊆ I^n") as i64
        })
        .collect();
    let mut hpoly: Vec<i64> = std::iter::once(graded[0])
        .chain(graded.windows(2).map(|w| w[1] - w[0]))
        .collect();
    while hpoly.len() > 1 && hpoly.last() == Some(&0) {
        hpoly.pop();
    }

    let e0: i64 = hpoly.iter().sum();
    let colength_q = f.reduction().colength() as i64;
    if e0 != colength_q || e0 != graded[top] {
        return Err(Error::InternalInconsistency(format!(
            "h(1) = {e0}, ℓ(A/Q) = {colength_q}, stable graded length = {}",
            graded[top]
        )));
    }

    let e1_series: i64 = hpoly.iter().enumerate().map(|(j, &h)| j as i64 * h).sum();
    let length_i_mod_q = f.ideal().length_between(f.reduction()).expect("Q ⊆ I") as i64;
    let alpha_sum: i64 = (1..r)
        .map(|k| {
            f.power(k + 1)
                .length_between(f.reduced(k))
                .expect("QI^k ⊆ I^{k+1}") as i64
        })
        .sum();
    let e1_alpha = length_i_mod_q + alpha_sum;
    if e1_series != e1_alpha {
        return Err(Error::InternalInconsistency(format!(
            "e1 from h-polynomial = {e1_series}, e1 from Σ ℓ(I^(k+1)/QI^k) = {e1_alpha}"
        )));
    }

    let poly = |n: usize| e0 * (n as i64 + 1) - e1_series;
    let postulation = (0..=top)
        .rev()
        .take_while(|&n| hf[n] as i64 == poly(n))
        .last()
        .unwrap_or(top + 1);

    Ok(HilbertData {
        e0,
        e1: e1_series,
        hpoly,
        postulation,
        hf,
    })
}
