//! Invariants of the `I`-adic filtration relative to a principal reduction.
//!
//! Everything here is read off a [`Filtration`]: the powers `I^0..I^{r+2}`
//! together with the products `QI^k`. The reduction is always the monomial
//! `Q = (u^v)` with `v` the least valuation in `I`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formula::binomial;
use crate::ideal::HIdeal;

/// Iteration cap for the reduction number: `4·e`.
pub fn default_cap(multiplicity: i64) -> usize {
    4 * multiplicity.max(1) as usize
}

/// The monomial minimal reduction `(u^v)` of `I`.
pub fn minimal_reduction(ideal: &HIdeal) -> Result<HIdeal> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    HIdeal::principal(ideal.ring(), ideal.min_valuation())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationReport {
    /// Valuation of the reduction generator; equals `e_0(I)`.
    pub v: i64,
    pub r: usize,
    pub n: usize,
    /// `α_k = ℓ(I^{k+1}/QI^k)` for `k = 1..r-1` (index 0 holds `α_1`).
    pub alphas: Vec<u64>,
    /// `β_k = ℓ(QI^{k-1} ∩ I^{k+1}/QI^k)` for `k = 1..r-1`.
    pub betas: Vec<u64>,
    pub lambda: Vec<usize>,
    #[serde(rename = "s")]
    pub s_first: Option<usize>,
    pub stretched: bool,
    pub tau: u64,
    pub mu: u64,
    pub depth_g: u8,
    /// `ℓ(I^{k+1}/Q^kI)` for `k = 1..=r+1`.
    pub sally: Vec<u64>,
    /// `ℓ(A/I)`.
    pub colength: u64,
    /// `ℓ(I/I^2)`.
    pub cotangent: u64,
}

impl FiltrationReport {
    pub fn alpha(&self, k: usize) -> u64 {
        if k == 0 {
            return 0;
        }
        self.alphas.get(k - 1).copied().unwrap_or(0)
    }

    pub fn beta(&self, k: usize) -> u64 {
        if k == 0 {
            return 0;
        }
        self.betas.get(k - 1).copied().unwrap_or(0)
    }

    /// Whether `τ(I) < ℓ(I/I²) − 2ℓ(A/I) + 1`, the type bound at dimension one.
    pub fn type_bound_holds(&self) -> bool {
        (self.tau as i64) < self.cotangent as i64 - 2 * self.colength as i64 + 1
    }

    /// The identities every stretched ideal must satisfy. Empty when all hold
    /// (or when the ideal is not stretched, apart from `r ≥ n`).
    pub fn identity_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.r < self.n {
            out.push(format!("r = {} < n = {}", self.r, self.n));
        }
        if !self.stretched {
            return out;
        }
        let (r, n) = (self.r as i64, self.n as i64);
        if r < 2 || n < 2 {
            out.push(format!(
                "stretched with r = {r}, n = {n} (both must be >= 2)"
            ));
            return out;
        }
        if self.alpha(1) as i64 != n - 1 {
            out.push(format!("α_1 = {} but n - 1 = {}", self.alpha(1), n - 1));
        }
        for w in self.alphas.windows(2) {
            if w[1] > w[0] {
                out.push(format!("α not non-increasing: {:?}", self.alphas));
                break;
            }
        }
        if let Some(b) = self.betas.iter().find(|&&b| b > 1) {
            out.push(format!("β_k = {b} > 1"));
        }
        let mut beta_sum = 0i64;
        for k in 1..self.r {
            beta_sum += self.beta(k) as i64;
            let want = n - k as i64 + beta_sum;
            if self.alpha(k) as i64 != want {
                out.push(format!("α_{k} = {} but n - k + Σβ = {want}", self.alpha(k)));
            }
        }
        if self.lambda.len() as i64 != r - n {
            out.push(format!("|Λ| = {} but r - n = {}", self.lambda.len(), r - n));
        }
        let alpha_sum: i64 = self.alphas.iter().map(|&a| a as i64).sum();
        let lambda_sum: i64 = self.lambda.iter().map(|&s| s as i64).sum();
        let want = binomial(r, 2) - lambda_sum + self.lambda.len() as i64;
        if alpha_sum != want {
            out.push(format!("Σα = {alpha_sum} but C(r,2) - ΣΛ + |Λ| = {want}"));
        }
        if self.r == self.n + 1 {
            match self.s_first {
                Some(s) if self.lambda == [s] => {}
                s => out.push(format!("r = n + 1 but Λ = {:?}, s = {s:?}", self.lambda)),
            }
        }
        out
    }
}

/// `(alphas, betas, lambda, s_first)` as returned by [`alpha_beta_lambda`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaBeta {
    pub alphas: Vec<u64>,
    pub betas: Vec<u64>,
    pub lambda: Vec<usize>,
    pub s_first: Option<usize>,
}

/// Powers of `I` and the products `QI^k`, built until `I^{r+1} = QI^r`.
#[derive(Clone, Debug)]
pub struct Filtration {
    ideal: HIdeal,
    reduction: HIdeal,
    powers: Vec<HIdeal>,
    reduced: Vec<HIdeal>,
    r: usize,
}

impl Filtration {
    /// Uses the monomial minimal reduction and the default cap.
    pub fn new(ideal: &HIdeal) -> Result<Self> {
        let q = minimal_reduction(ideal)?;
        Self::with_reduction(ideal, &q, default_cap(ideal.ring().multiplicity()))
    }

    pub fn with_reduction(ideal: &HIdeal, q: &HIdeal, cap: usize) -> Result<Self> {
        if !ideal.is_subideal(q)? {
            return Err(Error::NotSubideal);
        }
        if ideal.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let mut powers = vec![HIdeal::unit(ideal.ring()), ideal.clone()];
        let mut reduced = vec![q.clone()];
        let mut n = 0;
        // once I^{n+1} = QI^n it stays so, so the first hit is r
        let r = loop {
            if powers[n + 1] == reduced[n] {
                break n;
            }
            if n >= cap {
                return Err(Error::CapExceeded {
                    cap,
                    multiplicity: ideal.ring().multiplicity(),
                    valuation: q.min_valuation(),
                });
            }
            n += 1;
            powers.push(powers[n].multiply(ideal)?);
            reduced.push(q.multiply(&powers[n])?);
        };
        let mut f = Filtration {
            ideal: ideal.clone(),
            reduction: q.clone(),
            powers,
            reduced,
            r,
        };
        f.extend_to(r.max(1) + 3);
        Ok(f)
    }

    fn extend_to(&mut self, top: usize) {
        while self.powers.len() <= top {
            let k = self.powers.len();
            let next = self.powers[k - 1].multiply(&self.ideal).expect("same ring");
            self.powers.push(next);
        }
        while self.reduced.len() < top {
            let k = self.reduced.len();
            let next = self.reduction.multiply(&self.powers[k]).expect("same ring");
            self.reduced.push(next);
        }
    }

    pub fn ideal(&self) -> &HIdeal {
        &self.ideal
    }

    pub fn reduction(&self) -> &HIdeal {
        &self.reduction
    }

    /// `I^k` for `k ≤ r + 3`.
    pub fn power(&self, k: usize) -> &HIdeal {
        &self.powers[k]
    }

    /// `QI^k` for `k ≤ r + 2`.
    pub fn reduced(&self, k: usize) -> &HIdeal {
        &self.reduced[k]
    }

    pub fn reduction_number(&self) -> usize {
        self.r
    }

    pub fn nilpotency_index(&self) -> usize {
        (0..=self.r)
            .find(|&k| {
                self.reduction
                    .is_subideal(&self.powers[k + 1])
                    .expect("same ring")
            })
            .expect("I^{r+1} = QI^r ⊆ Q")
    }

    fn len(&self, big: &HIdeal, small: &HIdeal) -> u64 {
        big.length_between(small).expect("nested by construction")
    }

    fn q_cap(&self, k: usize) -> HIdeal {
        self.reduction
            .intersect(&self.powers[k + 1])
            .expect("same ring")
    }

    pub fn alpha_beta_lambda(&self) -> AlphaBeta {
        let r = self.r;
        let alphas = (1..r)
            .map(|k| self.len(&self.powers[k + 1], &self.reduced[k]))
            .collect();
        let betas: Vec<u64> = (1..r)
            .map(|k| {
                let cap = self.reduced[k - 1]
                    .intersect(&self.powers[k + 1])
                    .expect("same ring");
                self.len(&cap, &self.reduced[k])
            })
            .collect();
        let lambda = betas
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .map(|(i, _)| i + 1)
            .collect();
        let s_first = (1..=r).find(|&k| self.q_cap(k) != self.reduced[k]);
        AlphaBeta {
            alphas,
            betas,
            lambda,
            s_first,
        }
    }

    pub fn is_stretched(&self) -> bool {
        if self.q_cap(1) != self.reduced[1] {
            return false;
        }
        let q = &self.reduction;
        let upper = self.powers[2].module_sum(q).expect("same ring");
        let lower = self.powers[3].module_sum(q).expect("same ring");
        self.len(&upper, &lower) == 1
    }

    /// `τ(I) = ℓ(((Q:I) ∩ I)/Q)`.
    pub fn cm_type(&self) -> u64 {
        let socle = self
            .reduction
            .colon(&self.ideal)
            .and_then(|c| c.intersect(&self.ideal))
            .expect("same ring");
        self.len(&socle, &self.reduction)
    }

    /// `μ(I) = ℓ(I/mI)`.
    pub fn minimal_generator_count(&self) -> u64 {
        let m = HIdeal::maximal(self.ideal.ring());
        let mi = m.multiply(&self.ideal).expect("same ring");
        self.len(&self.ideal, &mi)
    }

    /// 1 when `G(I)` is Cohen-Macaulay, i.e. `Q ∩ I^{k+1} = QI^k` for all `k`.
    pub fn depth_assoc_graded(&self) -> u8 {
        let cm = (1..=self.r).all(|k| self.q_cap(k) == self.reduced[k]);
        u8::from(cm)
    }

    /// `ℓ(I^{k+1}/Q^kI)` for `k = 1..=upto`.
    pub fn sally_lengths(&self, upto: usize) -> Vec<u64> {
        let mut powers = self.powers.clone();
        while powers.len() <= upto + 1 {
            let next = powers[powers.len() - 1]
                .multiply(&self.ideal)
                .expect("same ring");
            powers.push(next);
        }
        let mut q_pow_i = self.ideal.clone();
        (1..=upto)
            .map(|k| {
                q_pow_i = self.reduction.multiply(&q_pow_i).expect("same ring");
                self.len(&powers[k + 1], &q_pow_i)
            })
            .collect()
    }

    /// Every invariant, unchecked.
    pub fn report_unchecked(&self) -> FiltrationReport {
        let ab = self.alpha_beta_lambda();
        FiltrationReport {
            v: self.reduction.min_valuation(),
            r: self.r,
            n: self.nilpotency_index(),
            alphas: ab.alphas,
            betas: ab.betas,
            lambda: ab.lambda,
            s_first: ab.s_first,
            stretched: self.is_stretched(),
            tau: self.cm_type(),
            mu: self.minimal_generator_count(),
            depth_g: self.depth_assoc_graded(),
            sally: self.sally_lengths(self.r + 1),
            colength: self.ideal.colength(),
            cotangent: self.len(&self.ideal, &self.powers[2]),
        }
    }

    /// Every invariant; fails if a stretched identity does not hold.
    pub fn report(&self) -> Result<FiltrationReport> {
        let rep = self.report_unchecked();
        let bad = rep.identity_violations();
        if bad.is_empty() {
            Ok(rep)
        } else {
            Err(Error::StretchedIdentity(bad.join("; ")))
        }
    }
}

pub fn reduction_number(ideal: &HIdeal, q: &HIdeal, cap: usize) -> Result<usize> {
    Ok(Filtration::with_reduction(ideal, q, cap)?.reduction_number())
}

fn default_filtration(ideal: &HIdeal, q: &HIdeal) -> Result<Filtration> {
    Filtration::with_reduction(ideal, q, default_cap(ideal.ring().multiplicity()))
}

pub fn nilpotency_index(ideal: &HIdeal, q: &HIdeal) -> Result<usize> {
    Ok(default_filtration(ideal, q)?.nilpotency_index())
}

pub fn alpha_beta_lambda(ideal: &HIdeal, q: &HIdeal) -> Result<AlphaBeta> {
    Ok(default_filtration(ideal, q)?.alpha_beta_lambda())
}

pub fn is_stretched(ideal: &HIdeal, q: &HIdeal) -> Result<bool> {
    Ok(default_filtration(ideal, q)?.is_stretched())
}

pub fn cm_type(ideal: &HIdeal, q: &HIdeal) -> Result<u64> {
    Ok(default_filtration(ideal, q)?.cm_type())
}

pub fn depth_assoc_graded(ideal: &HIdeal, q: &HIdeal) -> Result<u8> {
    Ok(default_filtration(ideal, q)?.depth_assoc_graded())
}

pub fn sally_lengths(ideal: &HIdeal, q: &HIdeal, upto: usize) -> Result<Vec<u64>> {
    Ok(default_filtration(ideal, q)?.sally_lengths(upto))
}

pub fn analyze(ideal: &HIdeal) -> Result<FiltrationReport> {
    Filtration::new(ideal)?.report()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::NumericalSemigroup;
    use std::sync::Arc;

    fn maximal(gens: &[i64]) -> HIdeal {
        HIdeal::maximal(&Arc::new(NumericalSemigroup::new(gens).unwrap()))
    }

    fn report(gens: &[i64]) -> FiltrationReport {
        analyze(&maximal(gens)).unwrap()
    }

    #[test]
    fn minimal_reductions() {
        let m = maximal(&[7, 15, 18, 26, 27]);
        assert_eq!(
            minimal_reduction(&m).unwrap(),
            HIdeal::principal(m.ring(), 7).unwrap()
        );
        let m = maximal(&[6, 13, 41]);
        assert_eq!(minimal_reduction(&m).unwrap().min_valuation(), 6);
        let unit = HIdeal::unit(m.ring());
        assert_eq!(minimal_reduction(&unit), Err(Error::UnitIdeal));
    }

    #[test]
    fn principal_ideal_is_trivial() {
        let h = Arc::new(NumericalSemigroup::new(&[5, 7, 9]).unwrap());
        let q = HIdeal::principal(&h, 7).unwrap();
        let rep = analyze(&q).unwrap();
        assert_eq!((rep.r, rep.n, rep.depth_g), (0, 0, 1));
        assert!(!rep.stretched);
        assert!(rep.sally.iter().all(|&x| x == 0));
        assert_eq!(reduction_number(&q, &q, 4).unwrap(), 0);
    }

    #[test]
    fn reduction_and_nilpotency_examples() {
        assert_eq!(report(&[7, 15, 18, 26, 27]).r, 3);
        let rep = report(&[8, 17, 29, 38, 39]);
        assert_eq!((rep.r, rep.n), (4, 4));
        assert_eq!(report(&[8, 17, 21, 30, 39, 52]).n, 3);
        assert_eq!(report(&[6, 13, 33, 34, 41]).n, 2);
    }

    #[test]
    fn lambda_examples() {
        let rep = report(&[6, 13, 33, 34, 41]);
        assert_eq!(rep.lambda, [2]);
        assert_eq!(rep.s_first, Some(2));
        let rep = report(&[10, 21, 26, 37, 48, 59, 64, 75]);
        assert_eq!(rep.lambda, [3, 4]);
        let rep = report(&[6, 13, 34, 41]);
        assert_eq!(rep.r, rep.n);
        assert!(rep.lambda.is_empty());
        assert_eq!(rep.s_first, None);
    }

    #[test]
    fn stretchedness() {
        assert!(report(&[7, 15, 18, 26, 27]).stretched);
        // minimal multiplicity: m^2 = Qm
        let rep = report(&[3, 4, 5]);
        assert!(!rep.stretched);
        assert_eq!(rep.r, 1);
        // the discrete valuation ring
        let rep = report(&[1]);
        assert!(!rep.stretched);
        assert_eq!(rep.r, 0);
    }

    #[test]
    fn cohen_macaulay_type() {
        assert_eq!(report(&[7, 15, 18, 26, 27]).tau, 2);
        assert_eq!(report(&[8, 17, 21, 30, 39, 52]).tau, 3);
        assert_eq!(report(&[10, 21, 26, 37, 48, 59, 64, 75]).tau, 5);
        assert_eq!(report(&[6, 13, 34, 41]).tau, 6 - 3);
    }

    #[test]
    fn depth_examples() {
        assert_eq!(report(&[6, 13, 34, 41]).depth_g, 1);
        assert_eq!(report(&[6, 13, 33, 34, 41]).depth_g, 0);
        let rep = report(&[6, 13, 33, 40, 41]);
        assert_eq!((rep.r, rep.n, rep.depth_g), (4, 2, 0));
        assert_eq!(rep.lambda, [2, 3]);
        let rep = report(&[9, 19, 42, 52, 53]);
        assert_eq!((rep.r, rep.n, rep.depth_g), (5, 5, 1));
    }

    #[test]
    fn sally_lengths_stabilize() {
        let m = maximal(&[7, 15, 18, 26, 27]);
        let q = minimal_reduction(&m).unwrap();
        let sally = sally_lengths(&m, &q, 8).unwrap();
        assert_eq!(sally[0], 2);
        let r = reduction_number(&m, &q, 28).unwrap();
        assert!(sally[r - 1..].windows(2).all(|w| w[0] == w[1]), "{sally:?}");
    }

    #[test]
    fn free_functions_agree_with_report() {
        let m = maximal(&[8, 17, 21, 30, 39, 52]);
        let q = minimal_reduction(&m).unwrap();
        let rep = analyze(&m).unwrap();
        assert_eq!(nilpotency_index(&m, &q).unwrap(), rep.n);
        assert_eq!(cm_type(&m, &q).unwrap(), rep.tau);
        assert_eq!(depth_assoc_graded(&m, &q).unwrap(), rep.depth_g);
        assert_eq!(is_stretched(&m, &q).unwrap(), rep.stretched);
        let ab = alpha_beta_lambda(&m, &q).unwrap();
        assert_eq!(ab.alphas, rep.alphas);
        assert_eq!(ab.lambda, [3]);
    }

    #[test]
    fn cap_exceeded_for_non_reduction() {
        // (u^10) inside m of ⟨7,10⟩ is not a reduction of m
        let m = maximal(&[7, 10]);
        let q = HIdeal::principal(m.ring(), 10).unwrap();
        assert!(matches!(
            reduction_number(&m, &q, 6),
            Err(Error::CapExceeded { cap: 6, .. })
        ));
    }

    #[test]
    fn identity_checks_flag_tampering() {
        let mut rep = report(&[6, 13, 33, 40, 41]);
        assert!(rep.identity_violations().is_empty());
        rep.alphas[0] += 1;
        assert!(!rep.identity_violations().is_empty());
    }
}
