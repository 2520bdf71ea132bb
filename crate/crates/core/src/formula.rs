//! Closed-form Hilbert data of stretched ideals in arbitrary dimension `d`.
//!
//! Nothing here touches a ring: the inputs are abstract invariant profiles and
//! the outputs are the Hilbert coefficients and h-polynomials the closed forms
//! predict. [`coefficients_from_hpoly`] is the independent route used to check
//! the closed forms against their own h-polynomials.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `C(a, b)`, zero outside `0 ≤ b ≤ a`.
pub fn binomial(a: i64, b: i64) -> i64 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: i64 = 1;
    for i in 0..b {
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

/// Invariants of a stretched ideal used as formula inputs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StretchedProfile {
    pub d: u32,
    pub e0: i64,
    /// `ℓ(A/I)`.
    pub colength: i64,
    pub n_i: i64,
    pub r: i64,
    /// `min{n ≥ 1 : Q ∩ I^{n+1} ≠ QI^n}`, present iff `r = n_i + 1`.
    pub s: Option<i64>,
    pub tau: Option<i64>,
    pub mu: Option<i64>,
}

impl StretchedProfile {
    /// Profile of a dimension-one instance from its computed invariants.
    pub fn from_report(rep: &crate::filtration::FiltrationReport) -> Self {
        let n_i = rep.n as i64;
        let r = rep.r as i64;
        StretchedProfile {
            d: 1,
            e0: rep.v,
            colength: rep.colength as i64,
            n_i,
            r,
            s: if r == n_i + 1 {
                rep.s_first.map(|s| s as i64)
            } else {
                None
            },
            tau: Some(rep.tau as i64),
            mu: Some(rep.mu as i64),
        }
    }
}

/// Predicted `e_0, …, e_d` (index `k` holds `e_k`) and h-polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertPrediction {
    pub coefficients: Vec<i64>,
    pub hpoly: Vec<i64>,
}

fn stretched_hpoly(p: &StretchedProfile, top: i64, skip: Option<i64>) -> Vec<i64> {
    let mut h = vec![p.colength, p.e0 - p.colength - p.n_i + 1];
    h.extend((2..=top).map(|i| i64::from(Some(i) != skip)));
    h
}

/// Stretched with `r = n + 1`.
pub fn predict_theorem11(p: &StretchedProfile) -> Result<HilbertPrediction> {
    if p.r != p.n_i + 1 {
        return Err(Error::ProfileMismatch(format!(
            "expected r = n + 1, got r = {}, n = {}",
            p.r, p.n_i
        )));
    }
    let s = match p.s {
        Some(s) if (2..=p.n_i).contains(&s) => s,
        other => {
            return Err(Error::ProfileMismatch(format!(
                "s must satisfy 2 <= s <= n = {}, got {other:?}",
                p.n_i
            )))
        }
    };
    let n = p.n_i;
    let mut coefficients = vec![p.e0, p.e0 - p.colength + binomial(n + 1, 2) - s + 1];
    coefficients.extend((2..=p.d as i64).map(|k| binomial(n + 2, k + 1) - binomial(s, k)));
    coefficients.truncate(p.d as usize + 1);
    Ok(HilbertPrediction {
        coefficients,
        hpoly: stretched_hpoly(p, n + 1, Some(s)),
    })
}

/// Stretched with `r = n` (the Cohen-Macaulay case).
pub fn predict_cor42(p: &StretchedProfile) -> Result<HilbertPrediction> {
    if p.r != p.n_i {
        return Err(Error::ProfileMismatch(format!(
            "expected r = n, got r = {}, n = {}",
            p.r, p.n_i
        )));
    }
    if p.n_i < 2 {
        return Err(Error::ProfileMismatch(format!(
            "stretched ideals have n >= 2, got {}",
            p.n_i
        )));
    }
    let n = p.n_i;
    let mut coefficients = vec![p.e0, p.e0 - p.colength + binomial(n, 2)];
    coefficients.extend((2..=p.d as i64).map(|k| binomial(n + 1, k + 1)));
    coefficients.truncate(p.d as usize + 1);
    Ok(HilbertPrediction {
        coefficients,
        hpoly: stretched_hpoly(p, n, None),
    })
}

/// `e_k = Σ_j C(j, k)·h_j` for `0 ≤ k ≤ d`.
pub fn coefficients_from_hpoly(hpoly: &[i64], d: u32) -> Vec<i64> {
    (0..=d as i64)
        .map(|k| {
            hpoly
                .iter()
                .enumerate()
                .map(|(j, &h)| binomial(j as i64, k) * h)
                .sum()
        })
        .collect()
}

/// `ℓ(A/I^{n+1})` as the `z^n` coefficient of `h(z)/(1−z)^{d+1}`.
pub fn colength_from_hpoly(hpoly: &[i64], d: u32, n: i64) -> i64 {
    let d = d as i64;
    hpoly
        .iter()
        .enumerate()
        .map(|(j, &h)| h * binomial(n - j as i64 + d, d))
        .sum()
}

/// `Σ_k (−1)^k e_k C(n+d−k, d−k)`.
pub fn hilbert_polynomial(coefficients: &[i64], n: i64) -> i64 {
    let d = coefficients.len() as i64 - 1;
    coefficients
        .iter()
        .enumerate()
        .map(|(k, &e)| {
            let k = k as i64;
            let sign = if k % 2 == 0 { 1 } else { -1 };
            sign * e * binomial(n + d - k, d - k)
        })
        .sum()
}
