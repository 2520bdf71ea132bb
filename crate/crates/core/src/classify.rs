//! Classification of stretched ideals with reduction number at most five.
//!
//! For `r ≤ 4` the admissible `Λ` and the resulting invariants are known
//! unconditionally; for `r = 5` only under the type bound
//! `τ(I) < ℓ(I/I²) − (d+1)ℓ(A/I) + 1`. The tables below are data, checked in
//! the tests against the general closed forms.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::filtration::FiltrationReport;
use crate::formula::StretchedProfile;

struct CaseRow {
    r: usize,
    lambda: &'static [usize],
    n_i: usize,
    alphas: &'static [u64],
    e1_offset: i64,
    /// `e_2, e_3, …`; later coefficients vanish.
    higher: &'static [i64],
    cohen_macaulay: bool,
    needs_type_bound: bool,
}

const fn row(
    r: usize,
    lambda: &'static [usize],
    n_i: usize,
    alphas: &'static [u64],
    e1_offset: i64,
    higher: &'static [i64],
    needs_type_bound: bool,
) -> CaseRow {
    CaseRow {
        r,
        lambda,
        n_i,
        alphas,
        e1_offset,
        higher,
        cohen_macaulay: lambda.is_empty(),
        needs_type_bound,
    }
}

#[rustfmt::skip]
const CASES: &[CaseRow] = &[
    row(2, &[],     2, &[1],          1,  &[1],             false),
    row(3, &[],     3, &[2, 1],       3,  &[4, 1],          false),
    row(3, &[2],    2, &[1, 1],       2,  &[3, 1],          false),
    row(4, &[],     4, &[3, 2, 1],    6,  &[10, 5, 1],      false),
    row(4, &[2],    3, &[2, 2, 1],    5,  &[9, 5, 1],       false),
    row(4, &[3],    3, &[2, 1, 1],    4,  &[7, 4, 1],       false),
    row(4, &[2, 3], 2, &[1, 1, 1],    3,  &[6, 4, 1],       false),
    row(5, &[],     5, &[4, 3, 2, 1], 10, &[20, 15, 6, 1],  true),
    row(5, &[3],    4, &[3, 2, 2, 1], 8,  &[17, 14, 6, 1],  true),
    row(5, &[4],    4, &[3, 2, 1, 1], 7,  &[14, 11, 5, 1],  true),
    row(5, &[3, 4], 3, &[2, 1, 1, 1], 5,  &[11, 10, 5, 1],  true),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseLabel {
    pub r: usize,
    pub lambda: Vec<usize>,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l: Vec<String> = self.lambda.iter().map(ToString::to_string).collect();
        write!(f, "r={} Λ={{{}}}", self.r, l.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CasePrediction {
    pub n_i: usize,
    pub alphas: Vec<u64>,
    /// `e_1 = e_0 − ℓ(A/I) + e1_offset`.
    pub e1_offset: i64,
    /// `e_0, …, e_d` for the profile's `e_0`, `ℓ(A/I)` and `d`.
    pub coefficients: Vec<i64>,
    pub cohen_macaulay: bool,
    /// `depth G` predicted for the profile's dimension.
    pub depth: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub case: CaseLabel,
    pub type_bound: bool,
    /// `None` when the tables say nothing (`r = 5` without the type bound).
    pub predictions: Option<CasePrediction>,
    #[serde(rename = "match")]
    pub matches: Option<bool>,
    pub mismatches: Vec<String>,
}

fn predictions_for(row: &CaseRow, p: &StretchedProfile) -> CasePrediction {
    let d = p.d as usize;
    let mut coefficients = vec![p.e0, p.e0 - p.colength + row.e1_offset];
    coefficients.extend((2..=d).map(|k| row.higher.get(k - 2).copied().unwrap_or(0)));
    coefficients.truncate(d + 1);
    CasePrediction {
        n_i: row.n_i,
        alphas: row.alphas.to_vec(),
        e1_offset: row.e1_offset,
        coefficients,
        cohen_macaulay: row.cohen_macaulay,
        depth: if row.cohen_macaulay { p.d } else { p.d - 1 },
    }
}

/// Locates the case of a stretched instance with `r ≤ 5` and compares the
/// computed invariants with the case's predictions. `computed_e1`, when
/// given, is compared too.
pub fn classify_small_reduction(
    rep: &FiltrationReport,
    p: &StretchedProfile,
    computed_e1: Option<i64>,
) -> Result<Classification> {
    if !rep.stretched {
        return Err(Error::NotApplicable("ideal is not stretched".into()));
    }
    if rep.r > 5 {
        return Err(Error::NotApplicable(format!(
            "reduction number {} exceeds 5",
            rep.r
        )));
    }
    let case = CaseLabel {
        r: rep.r,
        lambda: rep.lambda.clone(),
    };
    let d = i64::from(p.d);
    let type_bound = (rep.tau as i64) < rep.cotangent as i64 - (d + 1) * p.colength + 1;

    if type_bound && rep.r >= 2 {
        // with the type bound, α_2 = α_1 − 1 and β_2 = 0
        if rep.alpha(2) + 1 != rep.alpha(1) || rep.beta(2) != 0 {
            return Err(Error::UnclassifiedCase(format!(
                "{case}: type bound holds but α_1 = {}, α_2 = {}, β_2 = {}",
                rep.alpha(1),
                rep.alpha(2),
                rep.beta(2)
            )));
        }
    }

    let Some(row) = CASES
        .iter()
        .find(|c| c.r == rep.r && c.lambda == rep.lambda.as_slice())
    else {
        return Err(Error::UnclassifiedCase(format!(
            "{case} is not an admissible case"
        )));
    };
    if row.needs_type_bound && !type_bound {
        return Ok(Classification {
            case,
            type_bound,
            predictions: None,
            matches: None,
            mismatches: Vec::new(),
        });
    }

    let pred = predictions_for(row, p);
    let mut mismatches = Vec::new();
    if rep.n != pred.n_i {
        mismatches.push(format!("n: computed {}, predicted {}", rep.n, pred.n_i));
    }
    if rep.alphas != pred.alphas {
        mismatches.push(format!(
            "α: computed {:?}, predicted {:?}",
            rep.alphas, pred.alphas
        ));
    }
    if p.d == 1 && u32::from(rep.depth_g) != pred.depth {
        mismatches.push(format!(
            "depth G: computed {}, predicted {}",
            rep.depth_g, pred.depth
        ));
    }
    if let Some(e1) = computed_e1 {
        if e1 != pred.coefficients[1] {
            mismatches.push(format!(
                "e1: computed {e1}, predicted {}",
                pred.coefficients[1]
            ));
        }
    }
    Ok(Classification {
        case,
        type_bound,
        predictions: Some(pred),
        matches: Some(mismatches.is_empty()),
        mismatches,
    })
}
