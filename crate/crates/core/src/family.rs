//! Stretched semigroup rings `H = ⟨e, be+1, b_n e + n : ℓ+1 ≤ n ≤ e−1⟩`
//! with prescribed gap between reduction number and index of nilpotency.
//!
//! Writing `a = u^e`, `a_1 = u^{be+1}`, `a_n = u^{b_n e + n}`, the maximal
//! ideal is `(a, a_1, a_{ℓ+1}, …, a_{e−1})`, `Q = (a)`, and every invariant of
//! the filtration is governed by how deep `a_1^n` sits in the chain `Qm^k`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::filtration::{Filtration, FiltrationReport};
use crate::formula::binomial;
use crate::hilbert::{self, HilbertData};
use crate::ideal::HIdeal;
use crate::semigroup::NumericalSemigroup;

fn ceil_half(b: i64) -> i64 {
    (b + 1) / 2
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub b: i64,
    pub e: i64,
    pub ell: i64,
    /// `n ↦ b_n` for `ℓ+1 ≤ n ≤ e−1`; `b_1 = b` is implicit.
    pub b_values: BTreeMap<i64, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    BaseTooSmall { b: i64 },
    MultiplicityTooSmall { e: i64 },
    EllOutOfRange { ell: i64, e: i64 },
    MissingValue { n: i64 },
    UnexpectedValue { n: i64 },
    LowerBound { n: i64, value: i64, bound: i64 },
    FirstUpperBound { n: i64, value: i64, bound: i64 },
    Growth { n: i64, value: i64, bound: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BaseTooSmall { b } => write!(f, "b >= 2 violated: b = {b}"),
            Violation::MultiplicityTooSmall { e } => write!(f, "e >= 4 violated: e = {e}"),
            Violation::EllOutOfRange { ell, e } => {
                write!(f, "2 <= ℓ <= e-1 violated: ℓ = {ell}, e = {e}")
            }
            Violation::MissingValue { n } => write!(f, "b_{n} is not assigned"),
            Violation::UnexpectedValue { n } => {
                write!(f, "b_{n} assigned outside ℓ+1 <= n <= e-1")
            }
            Violation::LowerBound { n, value, bound } => write!(
                f,
                "⌈b/2⌉·n + 1 <= b_n violated at n = {n}: b_{n} = {value} < {bound}"
            ),
            Violation::FirstUpperBound { n, value, bound } => {
                write!(f, "b_{{ℓ+1}} <= bℓ+b-1 violated: b_{n} = {value} > {bound}")
            }
            Violation::Growth { n, value, bound } => write!(
                f,
                "b_{{n+1}} <= b_n + ⌈b/2⌉ violated at n = {}: b_{n} = {value} > {bound}",
                n - 1
            ),
        }
    }
}

impl FamilyParams {
    pub fn new(b: i64, e: i64, ell: i64, b_values: impl IntoIterator<Item = (i64, i64)>) -> Self {
        FamilyParams {
            b,
            e,
            ell,
            b_values: b_values.into_iter().collect(),
        }
    }

    /// `b_n`, with `b_1 = b`.
    pub fn b_n(&self, n: i64) -> Option<i64> {
        if n == 1 {
            Some(self.b)
        } else {
            self.b_values.get(&n).copied()
        }
    }

    fn b_at(&self, n: i64) -> i64 {
        self.b_n(n).expect("validated parameters")
    }

    /// `max({n < e : b_n > bn − n + 1} ∪ {ℓ})`.
    pub fn predicted_r(&self) -> i64 {
        self.b_values
            .iter()
            .filter(|&(&n, &bn)| n < self.e && bn > self.b * n - n + 1)
            .map(|(&n, _)| n)
            .max()
            .unwrap_or(self.ell)
            .max(self.ell)
    }

    pub fn generators(&self) -> Vec<i64> {
        let mut gens = vec![self.e, self.b * self.e + 1];
        gens.extend(self.b_values.iter().map(|(&n, &bn)| bn * self.e + n));
        gens
    }
}

pub fn validate_family(p: &FamilyParams) -> Vec<Violation> {
    let mut out = Vec::new();
    if p.b < 2 {
        out.push(Violation::BaseTooSmall { b: p.b });
    }
    if p.e < 4 {
        out.push(Violation::MultiplicityTooSmall { e: p.e });
    }
    if p.ell < 2 || p.ell > p.e - 1 {
        out.push(Violation::EllOutOfRange { ell: p.ell, e: p.e });
    }
    if !out.is_empty() {
        return out;
    }
    let range = p.ell + 1..p.e;
    for &n in p.b_values.keys() {
        if !range.contains(&n) {
            out.push(Violation::UnexpectedValue { n });
        }
    }
    let c = ceil_half(p.b);
    for n in range.clone() {
        let Some(bn) = p.b_values.get(&n).copied() else {
            out.push(Violation::MissingValue { n });
            continue;
        };
        if bn < c * n + 1 {
            out.push(Violation::LowerBound {
                n,
                value: bn,
                bound: c * n + 1,
            });
        }
        if n == p.ell + 1 && bn > p.b * p.ell + p.b - 1 {
            out.push(Violation::FirstUpperBound {
                n,
                value: bn,
                bound: p.b * p.ell + p.b - 1,
            });
        }
        if n > p.ell + 1 {
            if let Some(prev) = p.b_values.get(&(n - 1)) {
                if bn > prev + c {
                    out.push(Violation::Growth {
                        n,
                        value: bn,
                        bound: prev + c,
                    });
                }
            }
        }
    }
    out
}

fn require_valid(p: &FamilyParams) -> Result<()> {
    let v = validate_family(p);
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::ConstraintViolation(v))
    }
}

pub fn build_family_semigroup(p: &FamilyParams) -> Result<NumericalSemigroup> {
    require_valid(p)?;
    NumericalSemigroup::new(&p.generators())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyPrediction {
    pub n: i64,
    pub r: i64,
    pub lambda: Vec<i64>,
    pub tau: i64,
    pub mu: i64,
    /// Constant in `ℓ(A/m^{n+1}) = e(n+1) − e1`, valid for `n ≥ r − 1`.
    pub e1: i64,
    pub cohen_macaulay: bool,
}

pub fn predicted_report(p: &FamilyParams) -> Result<FamilyPrediction> {
    require_valid(p)?;
    let r = p.predicted_r();
    let mut lambda: Vec<i64> = (p.ell + 1..=r).map(|n| p.b * n - p.b_at(n) + 1).collect();
    lambda.sort_unstable();
    let e1 = p.e - 1
        + binomial(p.ell, 2)
        + (p.ell + 1..=r)
            .map(|n| p.b_at(n) - p.b * n + n - 1)
            .sum::<i64>();
    Ok(FamilyPrediction {
        n: p.ell,
        r,
        lambda,
        tau: p.e - p.ell,
        mu: p.e - p.ell + 1,
        e1,
        cohen_macaulay: r == p.ell,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FillStrategy {
    /// `b_n = (b−1)n + 1`, the largest value keeping `m^n = Qm^{n−1}`.
    RBoundary,
    /// Caller-supplied values for `ℓ+3 ≤ n ≤ e−1`.
    Explicit(BTreeMap<i64, i64>),
}

/// Parameters with `r = ℓ + 1` and `Λ = {s}`: `b_{ℓ+1} = b(ℓ+1) + 1 − s`,
/// `b_{ℓ+2} = (b−1)(ℓ+2) + 1`, the rest from `fill`.
pub fn corollary67_params(
    b: i64,
    e: i64,
    ell: i64,
    s: i64,
    fill: &FillStrategy,
) -> Result<FamilyParams> {
    if b < 2 || s < 2 || s > ell || ell > e - 3 {
        return Err(Error::ConstraintViolation(vec![Violation::EllOutOfRange {
            ell,
            e,
        }]));
    }
    let mut values = BTreeMap::new();
    values.insert(ell + 1, b * (ell + 1) + 1 - s);
    values.insert(ell + 2, (b - 1) * (ell + 2) + 1);
    for n in ell + 3..e {
        let bn = match fill {
            FillStrategy::RBoundary => (b - 1) * n + 1,
            FillStrategy::Explicit(m) => match m.get(&n) {
                Some(&v) => v,
                None => {
                    return Err(Error::ConstraintViolation(vec![Violation::MissingValue {
                        n,
                    }]))
                }
            },
        };
        values.insert(n, bn);
    }
    let p = FamilyParams {
        b,
        e,
        ell,
        b_values: values,
    };
    require_valid(&p)?;
    Ok(p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaCheck {
    pub name: String,
    pub detail: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &str, detail: String, passed: bool) {
        self.checks.push(LemmaCheck {
            name: name.to_string(),
            detail,
            passed,
        });
    }

    /// Folds many instances of one check into a single line.
    fn push_all(&mut self, name: &str, failures: Vec<String>, total: usize) {
        let passed = failures.is_empty();
        let detail = if passed {
            format!("checked {total}")
        } else {
            format!(
                "{} of {total} failed: {}",
                failures.len(),
                failures.join(", ")
            )
        };
        self.push(name, detail, passed);
    }
}

/// Re-derives the structural facts behind the construction directly in the
/// ideal engine.
pub fn check_construction_lemmas(p: &FamilyParams) -> Result<LemmaReport> {
    require_valid(p)?;
    let ring = Arc::new(NumericalSemigroup::new(&p.generators())?);
    let (b, e, ell) = (p.b, p.e, p.ell);
    let a1 = b * e + 1;
    let m = HIdeal::maximal(&ring);
    let q = HIdeal::principal(&ring, e)?;
    let deepest = (ell + 1..e)
        .map(|n| b * n - p.b_at(n) + 2)
        .max()
        .unwrap_or(0);
    let top = (e + 1).max(deepest) as usize;
    let m_pow = m.powers(top);
    let q_m: Vec<HIdeal> = m_pow.iter().map(|x| q.multiply(x)).collect::<Result<_>>()?;
    let mut report = LemmaReport::default();

    // product rules for a_{n1} a_{n2} and their nonnegative a-exponents
    let mut indices = vec![1];
    indices.extend(ell + 1..e);
    let val = |n: i64| p.b_at(n) * e + n;
    let mut failures = Vec::new();
    let mut total = 0;
    for &n1 in &indices {
        for &n2 in &indices {
            let sum = n1 + n2;
            if sum < e {
                let Some(b_sum) = p.b_n(sum) else { continue };
                total += 1;
                let power_of_a = p.b_at(n1) + p.b_at(n2) - b_sum;
                if val(n1) + val(n2) != power_of_a * e + val(sum) || power_of_a < 0 {
                    failures.push(format!("({n1},{n2})"));
                }
            } else {
                total += 1;
                let qn = sum - e;
                let power_of_a = p.b_at(n1) + p.b_at(n2) + 1 - b * qn;
                if val(n1) + val(n2) != power_of_a * e + a1 * qn || power_of_a <= 0 {
                    failures.push(format!("({n1},{n2})"));
                }
            }
        }
    }
    report.push_all("product rule for a_{n1}·a_{n2}", failures, total);

    let qm1 = &q_m[1];
    let mut failures = Vec::new();
    let mut total = 0;
    for &n1 in &indices {
        for &n2 in &indices {
            if n1 == 1 && n2 == 1 {
                continue;
            }
            total += 1;
            if !qm1.contains_element(val(n1) + val(n2)) {
                failures.push(format!("({n1},{n2})"));
            }
        }
    }
    report.push_all("a_{n1}·a_{n2} ∈ Qm unless n1 = n2 = 1", failures, total);

    report.push(
        "a_1^ℓ ∉ Q",
        format!("u^{}", a1 * ell),
        !q.contains_element(a1 * ell),
    );
    let q_big = HIdeal::principal(&ring, e * a1)?;
    report.push(
        "a_1^e ∈ Q^{be+1}",
        format!("u^{}", a1 * e),
        q_big.contains_element(a1 * e),
    );

    let mut failures = Vec::new();
    for n in 2..=e as usize {
        let rhs = q_m[n - 1].module_sum(&HIdeal::principal(&ring, a1 * n as i64)?)?;
        if m_pow[n] != rhs {
            failures.push(format!("n={n}"));
        }
    }
    report.push_all(
        "m^n = Qm^{n-1} + (a_1^n) for 2 <= n <= e",
        failures,
        e as usize - 1,
    );

    let f = Filtration::with_reduction(&m, &q, crate::filtration::default_cap(e))?;
    report.push(
        "Q is a reduction with m^e = Qm^{e-1}",
        format!("r = {}", f.reduction_number()),
        m_pow[e as usize] == q_m[e as usize - 1],
    );
    report.push(
        "ℓ((m² + Q)/(m³ + Q)) = 1",
        String::new(),
        m_pow[2]
            .module_sum(&q)?
            .length_between(&m_pow[3].module_sum(&q)?)?
            == 1,
    );

    let mut failures = Vec::new();
    let mut total = 0;
    for mm in ell + 1..e {
        for n in 1..mm {
            total += 1;
            let member = q_m[n as usize].contains_element(a1 * mm);
            if member != (p.b_at(mm) <= b * mm - n) {
                failures.push(format!("(m={mm},n={n})"));
            }
        }
    }
    report.push_all("a_1^m ∈ Qm^n ⟺ b_m <= bm − n", failures, total);

    let mut failures = Vec::new();
    for n in ell + 1..e {
        let depth = b * n - p.b_at(n);
        let ok = depth >= 0
            && (depth as usize) < q_m.len() - 1
            && q_m[depth as usize].contains_element(a1 * n)
            && !q_m[depth as usize + 1].contains_element(a1 * n);
        let stable = (m_pow[n as usize] == q_m[n as usize - 1]) == (p.b_at(n) <= b * n - n + 1);
        if !ok || !stable {
            failures.push(format!("n={n}"));
        }
    }
    report.push_all(
        "a_1^n ∈ Qm^{bn−b_n} ∖ Qm^{bn−b_n+1}; m^n = Qm^{n−1} ⟺ b_n <= bn−n+1",
        failures,
        (e - ell - 1) as usize,
    );

    let rep = f.report_unchecked();
    let mut failures = Vec::new();
    let r = p.predicted_r();
    for n in ell + 1..=r {
        let k = b * n - p.b_at(n) + 1;
        if k < 1 || rep.beta(k as usize) == 0 {
            failures.push(format!("n={n} (β_{k} = 0)"));
        }
    }
    report.push_all(
        "β_{bn−b_n+1} ≠ 0 for ℓ+1 <= n <= r",
        failures,
        (r - ell).max(0) as usize,
    );

    Ok(report)
}

/// Predicted against computed invariants of one family member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyEvaluation {
    pub params: FamilyParams,
    pub generators: Vec<i64>,
    pub predicted: FamilyPrediction,
    pub filtration: FiltrationReport,
    pub hilbert: HilbertData,
    pub mismatches: Vec<String>,
}

impl FamilyEvaluation {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn evaluate_family(p: &FamilyParams) -> Result<FamilyEvaluation> {
    let predicted = predicted_report(p)?;
    let ring = Arc::new(build_family_semigroup(p)?);
    let m = HIdeal::maximal(&ring);
    let f = Filtration::new(&m)?;
    let filtration = f.report()?;
    let hilbert = hilbert::from_filtration(&f)?;

    let mut mismatches = Vec::new();
    fn cmp(out: &mut Vec<String>, what: &str, got: i64, want: i64) {
        if got != want {
            out.push(format!("{what}: computed {got}, predicted {want}"));
        }
    }
    cmp(&mut mismatches, "n", filtration.n as i64, predicted.n);
    cmp(&mut mismatches, "r", filtration.r as i64, predicted.r);
    cmp(&mut mismatches, "tau", filtration.tau as i64, predicted.tau);
    cmp(
        &mut mismatches,
        "mu",
        ring.embedding_dimension() as i64,
        predicted.mu,
    );
    cmp(&mut mismatches, "e1", hilbert.e1, predicted.e1);
    cmp(&mut mismatches, "e0", hilbert.e0, p.e);
    cmp(
        &mut mismatches,
        "depth_g",
        i64::from(filtration.depth_g),
        i64::from(predicted.cohen_macaulay),
    );
    let computed_lambda: Vec<i64> = filtration.lambda.iter().map(|&x| x as i64).collect();
    if computed_lambda != predicted.lambda {
        mismatches.push(format!(
            "lambda: computed {computed_lambda:?}, predicted {:?}",
            predicted.lambda
        ));
    }
    if !filtration.stretched {
        mismatches.push("not stretched".into());
    }
    let from = (predicted.r - 1).max(0) as usize;
    for n in from..hilbert.hf.len() {
        cmp(
            &mut mismatches,
            &format!("ℓ(A/m^{})", n + 1),
            hilbert.hf[n] as i64,
            p.e * (n as i64 + 1) - predicted.e1,
        );
    }

    Ok(FamilyEvaluation {
        params: p.clone(),
        generators: ring.minimal_generators().to_vec(),
        predicted,
        filtration,
        hilbert,
        mismatches,
    })
}

/// Every valid parameter set with the given `b` and `e`, all `ℓ`.
pub fn enumerate_params(b: i64, e: i64) -> Vec<FamilyParams> {
    let c = ceil_half(b);
    let mut out = Vec::new();
    for ell in 2..e {
        let mut stack: Vec<i64> = Vec::new();
        enumerate_rec(b, e, ell, c, &mut stack, &mut out);
    }
    out
}

fn enumerate_rec(
    b: i64,
    e: i64,
    ell: i64,
    c: i64,
    stack: &mut Vec<i64>,
    out: &mut Vec<FamilyParams>,
) {
    let n = ell + 1 + stack.len() as i64;
    if n >= e {
        out.push(FamilyParams::new(
            b,
            e,
            ell,
            stack
                .iter()
                .enumerate()
                .map(|(i, &v)| (ell + 1 + i as i64, v)),
        ));
        return;
    }
    let lo = c * n + 1;
    let hi = match stack.last() {
        None => b * ell + b - 1,
        Some(&prev) => prev + c,
    };
    for v in lo..=hi {
        stack.push(v);
        enumerate_rec(b, e, ell, c, stack, out);
        stack.pop();
    }
}

/// A random valid parameter set: `ℓ` uniform, then each `b_n` uniform in its
/// admissible window given `b_{n−1}`.
pub fn sample_params<R: Rng>(b: i64, e: i64, rng: &mut R) -> FamilyParams {
    let c = ceil_half(b);
    let ell = rng.gen_range(2..e);
    let mut values = BTreeMap::new();
    let mut prev = None;
    for n in ell + 1..e {
        let lo = c * n + 1;
        let hi = match prev {
            None => b * ell + b - 1,
            Some(p) => p + c,
        };
        let v = rng.gen_range(lo..=hi);
        values.insert(n, v);
        prev = Some(v);
    }
    FamilyParams {
        b,
        e,
        ell,
        b_values: values,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ex(ell: i64, vals: &[(i64, i64)]) -> FamilyParams {
        FamilyParams::new(2, 6, ell, vals.iter().copied())
    }

    #[test]
    fn validation_examples() {
        assert!(validate_family(&ex(3, &[(4, 5), (5, 6)])).is_empty());
        let v = validate_family(&ex(3, &[(4, 8), (5, 6)]));
        assert_eq!(
            v,
            [Violation::FirstUpperBound {
                n: 4,
                value: 8,
                bound: 7
            }]
        );
        assert!(v[0].to_string().contains("b_{ℓ+1} <= bℓ+b-1"));
        let v = validate_family(&ex(3, &[(4, 5), (5, 7)]));
        assert_eq!(
            v,
            [Violation::Growth {
                n: 5,
                value: 7,
                bound: 6
            }]
        );
        let v = validate_family(&ex(3, &[(4, 5)]));
        assert_eq!(v, [Violation::MissingValue { n: 5 }]);
    }

    #[test]
    fn generators_of_examples() {
        let h = build_family_semigroup(&ex(3, &[(4, 5), (5, 6)])).unwrap();
        assert_eq!(h.minimal_generators(), &[6, 13, 34, 41]);
        let h = build_family_semigroup(&ex(3, &[(4, 6), (5, 6)])).unwrap();
        assert_eq!(h.minimal_generators(), &[6, 13, 40, 41]);
        assert!(matches!(
            build_family_semigroup(&ex(3, &[(4, 8), (5, 6)])),
            Err(Error::ConstraintViolation(_))
        ));
    }

    #[test]
    fn predictions_of_examples() {
        let p = predicted_report(&ex(2, &[(3, 5), (4, 5), (5, 6)])).unwrap();
        assert_eq!((p.n, p.r, p.e1), (2, 3, 7));
        assert_eq!(p.lambda, [2]);
        let p = predicted_report(&ex(3, &[(4, 5), (5, 6)])).unwrap();
        assert_eq!((p.n, p.r, p.e1), (3, 3, 8));
        assert!(p.lambda.is_empty() && p.cohen_macaulay);
    }

    #[test]
    fn corollary_parameters() {
        let p = corollary67_params(2, 6, 2, 2, &FillStrategy::RBoundary).unwrap();
        assert_eq!(p.b_values, BTreeMap::from([(3, 5), (4, 5), (5, 6)]));
        let p = corollary67_params(2, 6, 3, 2, &FillStrategy::RBoundary).unwrap();
        assert_eq!(p.b_values, BTreeMap::from([(4, 7), (5, 6)]));
        let p = corollary67_params(2, 6, 3, 3, &FillStrategy::RBoundary).unwrap();
        assert_eq!(p.b_values, BTreeMap::from([(4, 6), (5, 6)]));
        // b = 4 boundary fill grows by b−1 = 3 > ⌈b/2⌉
        assert!(matches!(
            corollary67_params(4, 9, 2, 2, &FillStrategy::RBoundary),
            Err(Error::ConstraintViolation(_))
        ));
        let pred =
            predicted_report(&corollary67_params(3, 9, 4, 3, &FillStrategy::RBoundary).unwrap())
                .unwrap();
        assert_eq!((pred.n, pred.r), (4, 5));
        assert_eq!(pred.lambda, [3]);
        assert_eq!(pred.e1, 9 - 1 + binomial(5, 2) - 3 + 1);
    }

    #[test]
    fn lemma_checks_pass_on_examples() {
        for p in [
            ex(3, &[(4, 5), (5, 6)]),
            ex(2, &[(3, 5), (4, 5), (5, 6)]),
            ex(4, &[(5, 6)]),
            ex(3, &[(4, 7), (5, 6)]),
            ex(2, &[(3, 5), (4, 6), (5, 6)]),
        ] {
            let rep = check_construction_lemmas(&p).unwrap();
            assert!(rep.all_passed(), "{p:?}: {rep:?}");
        }
    }

    #[test]
    fn square_of_maximal_for_first_example() {
        let ring = Arc::new(build_family_semigroup(&ex(3, &[(4, 5), (5, 6)])).unwrap());
        let m = HIdeal::maximal(&ring);
        let q = HIdeal::principal(&ring, 6).unwrap();
        let rhs = q
            .multiply(&m)
            .unwrap()
            .module_sum(&HIdeal::principal(&ring, 26).unwrap())
            .unwrap();
        assert_eq!(m.power(2), rhs);
        assert!(!q.contains_element(39));
    }

    #[test]
    fn evaluation_agrees_on_examples() {
        for p in [ex(3, &[(4, 5), (5, 6)]), ex(2, &[(3, 5), (4, 6), (5, 6)])] {
            let ev = evaluate_family(&p).unwrap();
            assert!(ev.agrees(), "{:?}", ev.mismatches);
        }
    }

    #[test]
    fn enumeration_counts_and_sampling_validity() {
        assert_eq!(enumerate_params(2, 6).len(), 15);
        assert_eq!(enumerate_params(4, 5).len(), 23);
        assert!(enumerate_params(3, 7)
            .iter()
            .all(|p| validate_family(p).is_empty()));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let p = sample_params(4, 15, &mut rng);
            assert!(validate_family(&p).is_empty(), "{p:?}");
        }
    }
}
