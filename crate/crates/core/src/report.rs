//! The structured analysis document emitted by `analyze --json`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::classify::{classify_small_reduction, Classification};
use crate::error::{Error, Result};
use crate::filtration::{minimal_reduction, Filtration, FiltrationReport};
use crate::formula::StretchedProfile;
use crate::hilbert::{self, HilbertData};
use crate::ideal::HIdeal;
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupSection {
    pub generators: Vec<i64>,
    pub apery: Vec<i64>,
    pub frobenius: i64,
    /// Embedding dimension, i.e. `μ(m)`.
    pub mu: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSection {
    pub thresholds: Vec<i64>,
    pub generators: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisDocument {
    pub semigroup: SemigroupSection,
    pub ideal: IdealSection,
    pub filtration: FiltrationReport,
    pub hilbert: HilbertData,
    /// Present for stretched ideals with `r ≤ 5`.
    pub classification: Option<Classification>,
}

/// Analyzes the ideal generated by `ideal_exps` (the maximal ideal when
/// `None`) with respect to `Q = (u^v)`.
pub fn analyze_document(
    generators: &[i64],
    ideal_exps: Option<&[i64]>,
    cap: Option<usize>,
) -> Result<AnalysisDocument> {
    let ring = Arc::new(NumericalSemigroup::new(generators)?);
    let ideal = match ideal_exps {
        Some(exps) => HIdeal::from_exponents(&ring, exps)?,
        None => HIdeal::maximal(&ring),
    };
    let q = minimal_reduction(&ideal)?;
    let cap = cap.unwrap_or_else(|| crate::filtration::default_cap(ring.multiplicity()));
    let filt = Filtration::with_reduction(&ideal, &q, cap)?;
    let filtration = filt.report()?;
    let hilbert = hilbert::from_filtration(&filt)?;
    let classification = if filtration.stretched && filtration.r <= 5 {
        let profile = StretchedProfile::from_report(&filtration);
        match classify_small_reduction(&filtration, &profile, Some(hilbert.e1)) {
            Ok(c) => Some(c),
            Err(Error::NotApplicable(_)) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    Ok(AnalysisDocument {
        semigroup: SemigroupSection {
            generators: ring.minimal_generators().to_vec(),
            apery: ring.apery().to_vec(),
            frobenius: ring.frobenius(),
            mu: ring.embedding_dimension(),
        },
        ideal: IdealSection {
            thresholds: ideal.thresholds().to_vec(),
            generators: ideal.minimal_generators(),
        },
        filtration,
        hilbert,
        classification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn document_round_trips() {
        for gens in [&[7, 15, 18, 26, 27][..], &[6, 13, 33, 40, 41], &[3, 4, 5]] {
            let doc = analyze_document(gens, None, None).unwrap();
            let text = serde_json::to_string(&doc).unwrap();
            let back: AnalysisDocument = serde_json::from_str(&text).unwrap();
            assert_eq!(back, doc);
        }
    }

    #[test]
    fn field_names() {
        let doc = analyze_document(&[6, 13, 33, 40, 41], None, None).unwrap();
        let v = serde_json::to_value(&doc).unwrap();
        for key in [
            "v",
            "r",
            "n",
            "alphas",
            "betas",
            "lambda",
            "s",
            "stretched",
            "tau",
            "depth_g",
        ] {
            assert!(v["filtration"].get(key).is_some(), "{key}");
        }
        for key in ["e0", "e1", "hpoly", "postulation", "hf"] {
            assert!(v["hilbert"].get(key).is_some(), "{key}");
        }
        assert_eq!(v["classification"]["match"], true);
        assert_eq!(v["filtration"]["lambda"], serde_json::json!([2, 3]));
        assert_eq!(v["semigroup"]["mu"], 5);
    }

    #[test]
    fn non_maximal_ideal() {
        let doc = analyze_document(&[6, 13, 33, 40, 41], Some(&[12, 13]), None).unwrap();
        assert_eq!(doc.filtration.v, 12);
        assert!(doc.ideal.thresholds.iter().all(|&t| t >= 12));
    }

    #[test]
    fn input_errors() {
        assert!(matches!(
            analyze_document(&[4, 6], None, None),
            Err(Error::NotCoprime { .. })
        ));
        assert!(matches!(
            analyze_document(&[3, 4], Some(&[2]), None),
            Err(Error::ExponentNotInSemigroup(2))
        ));
    }
}
