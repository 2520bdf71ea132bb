//! Random instances and the comparison of threshold arithmetic against the
//! set oracle.

#![allow(dead_code)]

use std::sync::Arc;

use rand::Rng;
use stretched_core::{HIdeal, NumericalSemigroup};

use super::oracle::{from_thresholds, Oracle, TruncatedSet};

#[derive(Clone, Debug)]
pub struct Case {
    pub gens: Vec<i64>,
    pub i: Vec<i64>,
    pub j: Vec<i64>,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A coprime generator list with least element `e ≤ max_e` and two ideals
/// given by one to three exponents each.
pub fn random_case<R: Rng>(rng: &mut R, max_e: i64) -> Case {
    let (gens, h) = loop {
        let e = rng.gen_range(2..=max_e);
        let k = rng.gen_range(1..=4);
        let mut gens = vec![e];
        gens.extend((0..k).map(|_| rng.gen_range(e + 1..=3 * e + 7)));
        if gens.iter().fold(0, |g, &x| gcd(g, x)) == 1 {
            let h = NumericalSemigroup::new(&gens).unwrap();
            break (gens, h);
        }
    };
    let top = h.frobenius() + 2 * h.multiplicity();
    let pick = |rng: &mut R| -> Vec<i64> {
        let k = rng.gen_range(1..=3);
        let mut out = Vec::new();
        while out.len() < k {
            let x = rng.gen_range(1..=top);
            if h.contains(x) {
                out.push(x);
            }
        }
        out
    };
    let i = pick(rng);
    let j = pick(rng);
    Case { gens, i, j }
}

fn expect_same(
    what: &str,
    case: &Case,
    engine: &HIdeal,
    oracle: &TruncatedSet,
) -> Result<(), String> {
    let got = from_thresholds(engine.thresholds(), oracle.bound);
    if &got != oracle {
        return Err(format!(
            "{what} differs for {case:?}: engine {:?}",
            engine.thresholds()
        ));
    }
    Ok(())
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(
    what: &str,
    case: &Case,
    got: T,
    want: T,
) -> Result<(), String> {
    if got != want {
        return Err(format!(
            "{what} differs for {case:?}: engine {got:?}, oracle {want:?}"
        ));
    }
    Ok(())
}

/// Checks products, powers up to 6, sums, intersections, colons and lengths.
/// Returns the number of comparisons made.
pub fn check_case(case: &Case) -> Result<usize, String> {
    let ring = Arc::new(NumericalSemigroup::new(&case.gens).map_err(|e| e.to_string())?);
    let i = HIdeal::from_exponents(&ring, &case.i).map_err(|e| e.to_string())?;
    let j = HIdeal::from_exponents(&ring, &case.j).map_err(|e| e.to_string())?;
    let max_t = i.max_threshold().max(j.max_threshold());
    let bound = ring.frobenius() + 6 * max_t;
    let o = Oracle::new(&case.gens, bound);
    let oi = o.ideal(&case.i);
    let oj = o.ideal(&case.j);
    let mut checks = 0;

    expect_same("I", case, &i, &oi)?;
    expect_same("J", case, &j, &oj)?;
    let ij = i.multiply(&j).map_err(|e| e.to_string())?;
    let oij = o.product(&oi, &oj);
    expect_same("IJ", case, &ij, &oij)?;
    checks += 3;

    let mut op = o.h.clone();
    for k in 0..=6 {
        expect_same(&format!("I^{k}"), case, &i.power(k), &op)?;
        op = o.product(&op, &oi);
        checks += 1;
    }

    let sum = i.module_sum(&j).map_err(|e| e.to_string())?;
    let osum = o.union(&oi, &oj);
    expect_same("I+J", case, &sum, &osum)?;
    let cap = i.intersect(&j).map_err(|e| e.to_string())?;
    let ocap = o.intersection(&oi, &oj);
    expect_same("I∩J", case, &cap, &ocap)?;
    checks += 2;

    for (name, num, den, onum, oden) in [("I:J", &i, &j, &oi, &oj), ("J:I", &j, &i, &oj, &oi)] {
        let c = num.colon(den).map_err(|e| e.to_string())?;
        let limit = bound - den.max_threshold();
        expect_same(name, case, &c, &o.colon(onum, oden, limit))?;
        checks += 1;
    }

    let colength = |x: &HIdeal| x.colength() as usize;
    expect_eq("ℓ(A/I)", case, colength(&i), o.length(&o.h, &oi))?;
    expect_eq("ℓ(A/IJ)", case, colength(&ij), o.length(&o.h, &oij))?;
    let len = |a: &HIdeal, b: &HIdeal| {
        a.length_between(b)
            .map(|x| x as usize)
            .map_err(|e| e.to_string())
    };
    expect_eq("ℓ(I/IJ)", case, len(&i, &ij)?, o.length(&oi, &oij))?;
    expect_eq(
        "ℓ((I+J)/(I∩J))",
        case,
        len(&sum, &cap)?,
        o.length(&osum, &ocap),
    )?;
    let i2 = i.power(2);
    expect_eq(
        "ℓ(I/I²)",
        case,
        len(&i, &i2)?,
        o.length(&oi, &o.product(&oi, &oi)),
    )?;
    checks += 5;

    expect_eq("J ⊆ I", case, i.is_subideal(&j).unwrap(), oj.is_subset(&oi))?;
    for x in 0..=bound.min(4 * max_t) {
        expect_eq(
            &format!("{x} ∈ I"),
            case,
            i.contains_element(x),
            oi.contains(x),
        )?;
    }
    checks += 2;

    let mut gens = i.minimal_generators();
    gens.sort_unstable();
    expect_eq("gens(I)", case, gens, o.minimal_generators(&oi))?;
    checks += 1;
    Ok(checks)
}
