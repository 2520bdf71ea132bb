//! Enumeration of numerical semigroups by minimal generating set.
//!
//! Generating sets are produced in lexicographic order of their sorted
//! generator tuples. Only minimal sets are visited: each new generator must
//! lie outside the semigroup spanned by the smaller ones, which is tracked
//! incrementally through the Apéry table of the multiplicity. Top-level
//! branches run on a rayon pool whose size can be set with
//! [`WORKERS_ENV`]; results are merged in branch order, so output does not
//! depend on the worker count.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::filter::{Facts, Predicate};
use crate::filtration::{Filtration, FiltrationReport};
use crate::hilbert::{self, HilbertData};
use crate::ideal::HIdeal;
use crate::semigroup::NumericalSemigroup;

/// Environment variable holding the number of search workers.
pub const WORKERS_ENV: &str = "STRETCHED_WORKERS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    /// Largest multiplicity (least generator) considered; at least 2.
    pub max_e: i64,
    /// Largest generator allowed.
    pub max_gen: i64,
    /// Largest embedding dimension allowed.
    pub max_gens_count: usize,
}

impl SearchBounds {
    fn is_empty(&self) -> bool {
        self.max_e < 2 || self.max_gen < 2 || self.max_gens_count < 2
    }
}

#[derive(Clone, Debug, Default)]
pub struct SearchSpec {
    pub bounds: Option<SearchBounds>,
    pub filter: Predicate,
    pub limit: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHit {
    pub generators: Vec<i64>,
    pub filtration: FiltrationReport,
    pub hilbert: HilbertData,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    /// Number of semigroups analyzed.
    pub examined: usize,
    /// Number that satisfied the predicate, before the limit.
    pub matched: usize,
    pub hits: Vec<SearchHit>,
}

const UNREACHED: i64 = i64::MAX;

/// Adds generator `g` to the Apéry table `ap` (w.r.t. `ap.len()`).
fn add_generator(ap: &mut [i64], g: i64) {
    let e = ap.len();
    let c = (g as usize) % e;
    let cycles = crate::semigroup::gcd(c as i64, e as i64) as usize;
    let cycle_len = e / cycles;
    for start in 0..cycles {
        let mut idx = start;
        // two laps around the cycle propagate from its minimum to every slot
        for _ in 0..2 * cycle_len {
            let next = (idx + c) % e;
            if ap[idx] != UNREACHED && ap[idx] + g < ap[next] {
                ap[next] = ap[idx] + g;
            }
            idx = next;
        }
    }
}

struct Walker<'a, T, F> {
    bounds: &'a SearchBounds,
    visit: &'a F,
    out: Vec<T>,
}

impl<T, F> Walker<'_, T, F>
where
    F: Fn(&[i64]) -> Option<T>,
{
    fn walk(&mut self, gens: &mut Vec<i64>, ap: &[i64], missing: usize) {
        if missing == 0 {
            if let Some(t) = (self.visit)(gens) {
                self.out.push(t);
            }
        }
        if gens.len() >= self.bounds.max_gens_count {
            return;
        }
        let e = ap.len() as i64;
        let start = gens.last().copied().unwrap_or(e) + 1;
        for g in start..=self.bounds.max_gen {
            let class = (g % e) as usize;
            if class == 0 || ap[class] <= g {
                continue;
            }
            let mut next = ap.to_vec();
            add_generator(&mut next, g);
            let still_missing = next.iter().filter(|&&x| x == UNREACHED).count();
            gens.push(g);
            self.walk(gens, &next, still_missing);
            gens.pop();
        }
    }
}

/// Calls `visit` on every minimal generating set within `bounds`, in
/// lexicographic order, and collects the `Some` results in that order.
pub fn map_semigroups<T, F>(bounds: &SearchBounds, visit: F) -> Vec<T>
where
    T: Send,
    F: Fn(&[i64]) -> Option<T> + Sync,
{
    if bounds.is_empty() {
        return Vec::new();
    }
    let branches: Vec<(i64, i64)> = (2..=bounds.max_e)
        .flat_map(|e| {
            (e + 1..=bounds.max_gen)
                .filter(move |g| g % e != 0)
                .map(move |g| (e, g))
        })
        .collect();
    let run = || -> Vec<T> {
        branches
            .par_iter()
            .map(|&(e, g)| {
                let mut ap = vec![UNREACHED; e as usize];
                ap[0] = 0;
                add_generator(&mut ap, g);
                let missing = ap.iter().filter(|&&x| x == UNREACHED).count();
                let mut walker = Walker {
                    bounds,
                    visit: &visit,
                    out: Vec::new(),
                };
                walker.walk(&mut vec![e, g], &ap, missing);
                walker.out
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    };
    match worker_pool() {
        Some(pool) => pool.install(run),
        None => run(),
    }
}

fn worker_pool() -> Option<rayon::ThreadPool> {
    let n: usize = std::env::var(WORKERS_ENV).ok()?.trim().parse().ok()?;
    if n == 0 {
        return None;
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build().ok()
}

/// Semigroup, filtration report and Hilbert data of one analyzed instance.
pub type Analysis = (Arc<NumericalSemigroup>, FiltrationReport, HilbertData);

/// Analyzes the maximal ideal of `k[[H]]` for `H = ⟨gens⟩`.
pub fn analyze_maximal(gens: &[i64]) -> Result<Analysis> {
    let h = Arc::new(NumericalSemigroup::new(gens)?);
    let f = Filtration::new(&HIdeal::maximal(&h))?;
    let rep = f.report()?;
    let hd = hilbert::from_filtration(&f)?;
    Ok((h, rep, hd))
}

/// Runs the search. Engine errors on any instance abort it.
pub fn search(spec: &SearchSpec) -> Result<SearchResult> {
    let Some(bounds) = spec.bounds else {
        return Ok(SearchResult {
            examined: 0,
            matched: 0,
            hits: Vec::new(),
        });
    };
    let outcomes: Vec<Result<Option<SearchHit>>> = map_semigroups(&bounds, |gens| {
        Some(analyze_maximal(gens).map(|(h, rep, hd)| {
            let facts = Facts {
                multiplicity: h.multiplicity(),
                embedding_dimension: h.embedding_dimension(),
                report: &rep,
                hilbert: &hd,
            };
            spec.filter.matches(&facts).then(|| SearchHit {
                generators: gens.to_vec(),
                filtration: rep.clone(),
                hilbert: hd.clone(),
            })
        }))
    });
    let examined = outcomes.len();
    let mut hits = Vec::new();
    for o in outcomes {
        if let Some(hit) = o? {
            hits.push(hit);
        }
    }
    let matched = hits.len();
    if let Some(limit) = spec.limit {
        hits.truncate(limit);
    }
    Ok(SearchResult {
        examined,
        matched,
        hits,
    })
}
