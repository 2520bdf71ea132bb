//! A conjunction-only predicate language over named invariants.
//!
//! ```text
//! stretched && r == n+1 && e <= 8 && lambda == {2,3} && !cm
//! ```
//!
//! Clauses are joined by `&&`. A clause is a boolean atom (`stretched`,
//! `cm`), optionally negated with `!`, a comparison between two integer sums
//! (`ident`, integer literals, `+`, `-`; operators `== != < <= > >=` and
//! `≤ ≥ ≠`), or `lambda == {…}` / `lambda != {…}`. `s` reads as 0 when the
//! instance has no such index.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::filtration::FiltrationReport;
use crate::hilbert::HilbertData;

/// The values a predicate can refer to.
#[derive(Clone, Copy, Debug)]
pub struct Facts<'a> {
    pub multiplicity: i64,
    pub embedding_dimension: usize,
    pub report: &'a FiltrationReport,
    pub hilbert: &'a HilbertData,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Var {
    E,
    Mu,
    V,
    R,
    N,
    Tau,
    DepthG,
    E0,
    E1,
    S,
    Colength,
    Lambda,
}

impl Var {
    fn parse(name: &str) -> Option<Var> {
        Some(match name {
            "e" => Var::E,
            "mu" | "emb" => Var::Mu,
            "v" => Var::V,
            "r" => Var::R,
            "n" => Var::N,
            "tau" => Var::Tau,
            "depth_g" | "depth" => Var::DepthG,
            "e0" => Var::E0,
            "e1" => Var::E1,
            "s" => Var::S,
            "colength" => Var::Colength,
            "lambda" | "|lambda|" => Var::Lambda,
            _ => return None,
        })
    }

    /// `lambda` in arithmetic position means `|Λ|`.
    fn value(self, f: &Facts<'_>) -> i64 {
        let rep = f.report;
        match self {
            Var::E => f.multiplicity,
            Var::Mu => f.embedding_dimension as i64,
            Var::V => rep.v,
            Var::R => rep.r as i64,
            Var::N => rep.n as i64,
            Var::Tau => rep.tau as i64,
            Var::DepthG => i64::from(rep.depth_g),
            Var::E0 => f.hilbert.e0,
            Var::E1 => f.hilbert.e1,
            Var::S => rep.s_first.map_or(0, |s| s as i64),
            Var::Colength => rep.colength as i64,
            Var::Lambda => rep.lambda.len() as i64,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

impl Op {
    fn apply(self, a: i64, b: i64) -> bool {
        match self {
            Op::Eq => a == b,
            Op::Ne => a != b,
            Op::Lt => a < b,
            Op::Le => a <= b,
            Op::Gt => a > b,
            Op::Ge => a >= b,
        }
    }
}

const OPERATORS: &[(&str, Op)] = &[
    ("==", Op::Eq),
    ("!=", Op::Ne),
    ("<=", Op::Le),
    (">=", Op::Ge),
    ("≤", Op::Le),
    ("≥", Op::Ge),
    ("≠", Op::Ne),
    ("<", Op::Lt),
    (">", Op::Gt),
    ("=", Op::Eq),
];

#[derive(Clone, Debug, PartialEq, Eq)]
struct Sum {
    constant: i64,
    terms: Vec<(i64, Var)>,
}

impl Sum {
    fn eval(&self, f: &Facts<'_>) -> i64 {
        self.constant + self.terms.iter().map(|&(c, v)| c * v.value(f)).sum::<i64>()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Clause {
    Stretched(bool),
    CohenMacaulay(bool),
    Compare(Sum, Op, Sum),
    LambdaIs(BTreeSet<usize>, bool),
}

impl Clause {
    fn eval(&self, f: &Facts<'_>) -> bool {
        match self {
            Clause::Stretched(want) => f.report.stretched == *want,
            Clause::CohenMacaulay(want) => (f.report.depth_g == 1) == *want,
            Clause::Compare(a, op, b) => op.apply(a.eval(f), b.eval(f)),
            Clause::LambdaIs(set, want) => {
                let got: BTreeSet<usize> = f.report.lambda.iter().copied().collect();
                (&got == set) == *want
            }
        }
    }
}

/// A parsed predicate. The empty predicate accepts everything.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Predicate {
    clauses: Vec<Clause>,
    source: String,
}

impl Predicate {
    pub fn always() -> Self {
        Predicate::default()
    }

    pub fn matches(&self, facts: &Facts<'_>) -> bool {
        self.clauses.iter().all(|c| c.eval(facts))
    }

    /// True when the predicate can only hold for stretched instances.
    pub fn requires_stretched(&self) -> bool {
        self.clauses.contains(&Clause::Stretched(true))
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(src: &str) -> Result<Self> {
        let mut clauses = Vec::new();
        if !src.trim().is_empty() {
            for part in src.split("&&") {
                clauses.push(parse_clause(part.trim())?);
            }
        }
        Ok(Predicate {
            clauses,
            source: src.trim().to_string(),
        })
    }
}

fn err(msg: impl Into<String>) -> Error {
    Error::Filter(msg.into())
}

fn parse_clause(text: &str) -> Result<Clause> {
    if text.is_empty() {
        return Err(err("empty clause"));
    }
    let (negated, body) = match text.strip_prefix('!') {
        Some(rest) if !rest.starts_with('=') => (true, rest.trim()),
        _ => (false, text),
    };
    match body {
        "stretched" => return Ok(Clause::Stretched(!negated)),
        "cm" => return Ok(Clause::CohenMacaulay(!negated)),
        _ if negated => {
            return Err(err(format!(
                "`!` applies only to stretched or cm, got `{text}`"
            )))
        }
        _ => {}
    }

    let (pos, tok, op) = OPERATORS
        .iter()
        .filter_map(|&(tok, op)| body.find(tok).map(|pos| (pos, tok, op)))
        .min_by_key(|&(pos, tok, _)| (pos, std::cmp::Reverse(tok.len())))
        .ok_or_else(|| err(format!("no comparison operator in `{body}`")))?;
    let lhs = body[..pos].trim();
    let rhs = body[pos + tok.len()..].trim();

    if rhs.starts_with('{') || lhs.starts_with('{') {
        let (name, set) = if rhs.starts_with('{') {
            (lhs, rhs)
        } else {
            (rhs, lhs)
        };
        if name != "lambda" {
            return Err(err(format!(
                "set literals compare only with lambda, got `{name}`"
            )));
        }
        let want = match op {
            Op::Eq => true,
            Op::Ne => false,
            _ => return Err(err("lambda supports only == and !=")),
        };
        return Ok(Clause::LambdaIs(parse_set(set)?, want));
    }
    Ok(Clause::Compare(parse_sum(lhs)?, op, parse_sum(rhs)?))
}

fn parse_set(text: &str) -> Result<BTreeSet<usize>> {
    let inner = text
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| err(format!("malformed set literal `{text}`")))?;
    inner
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| err(format!("bad set element `{t}`"))))
        .collect()
}

fn parse_sum(text: &str) -> Result<Sum> {
    if text.is_empty() {
        return Err(err("missing operand"));
    }
    let mut sum = Sum {
        constant: 0,
        terms: Vec::new(),
    };
    let mut sign = 1;
    let mut expect_term = true;
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if expect_term {
            if c == '-' {
                sign = -sign;
                chars.next();
                continue;
            }
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' || d == '|' {
                    end = j + d.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            let word = &text[i..end];
            if word.is_empty() {
                return Err(err(format!("unexpected `{c}` in `{text}`")));
            }
            if let Ok(k) = word.parse::<i64>() {
                sum.constant += sign * k;
            } else if let Some(v) = Var::parse(word) {
                sum.terms.push((sign, v));
            } else {
                return Err(err(format!("unknown invariant `{word}`")));
            }
            expect_term = false;
        } else {
            sign = match c {
                '+' => 1,
                '-' => -1,
                _ => return Err(err(format!("expected + or - in `{text}`, found `{c}`"))),
            };
            chars.next();
            expect_term = true;
        }
    }
    if expect_term {
        return Err(err(format!("dangling operator in `{text}`")));
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtration::Filtration;
    use crate::hilbert;
    use crate::ideal::HIdeal;
    use crate::semigroup::NumericalSemigroup;
    use std::sync::Arc;

    fn check(gens: &[i64], pred: &str) -> bool {
        let h = Arc::new(NumericalSemigroup::new(gens).unwrap());
        let f = Filtration::new(&HIdeal::maximal(&h)).unwrap();
        let rep = f.report().unwrap();
        let hd = hilbert::from_filtration(&f).unwrap();
        let facts = Facts {
            multiplicity: h.multiplicity(),
            embedding_dimension: h.embedding_dimension(),
            report: &rep,
            hilbert: &hd,
        };
        pred.parse::<Predicate>().unwrap().matches(&facts)
    }

    #[test]
    fn evaluates_examples() {
        let ex = [6, 13, 33, 34, 41];
        assert!(check(&ex, "stretched && r == n+1 && e <= 8"));
        assert!(check(
            &ex,
            "stretched && r == n + 1 && e ≤ 8 && lambda == {2}"
        ));
        assert!(check(&ex, "!cm && depth == 0 && s == 2 && e1 = 7"));
        assert!(!check(&ex, "cm"));
        assert!(!check(&ex, "r == n"));
        assert!(check(
            &[6, 13, 33, 40, 41],
            "lambda == {3, 2} && lambda != {} && r - n == 2"
        ));
        assert!(check(&[3, 4, 5], "!stretched"));
        assert!(check(&[3, 4, 5], ""));
        assert!(check(&[3, 4, 5], "s == 0 && -1 < e - 3"));
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "r ==",
            "foo == 1",
            "!r",
            "r == n +",
            "stretched && ",
            "r ~ 1",
            "e == {1}",
            "lambda <= {1}",
            "r == n * 2",
        ] {
            assert!(bad.parse::<Predicate>().is_err(), "{bad}");
        }
    }

    #[test]
    fn stretched_requirement() {
        let p: Predicate = "stretched && r == n".parse().unwrap();
        assert!(p.requires_stretched());
        let p: Predicate = "!stretched".parse().unwrap();
        assert!(!p.requires_stretched());
        assert_eq!(p.to_string(), "!stretched");
    }
}
