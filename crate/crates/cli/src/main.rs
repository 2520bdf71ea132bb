use std::collections::BTreeMap;
use std::fmt::Display;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use stretched_core::family::{
    check_construction_lemmas, corollary67_params, evaluate_family, predicted_report,
    validate_family, FamilyEvaluation, FamilyParams, FamilyPrediction, FillStrategy, LemmaReport,
};
use stretched_core::filter::Predicate;
use stretched_core::fixtures::{fixture, fixtures, verify_fixture, FixtureOutcome};
use stretched_core::report::{analyze_document, AnalysisDocument};
use stretched_core::search::{search, SearchBounds, SearchResult, SearchSpec, WORKERS_ENV};
use stretched_core::Error;

const EXIT_INPUT: u8 = 1;
const EXIT_MISMATCH: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "stretched",
    version,
    about = "Invariants of stretched monomial ideals in numerical semigroup rings",
    after_help = format!(
        "Exit status: 0 success, 1 input error, 2 verification mismatch, 3 internal inconsistency.\n\
         Search workers: set {WORKERS_ENV}=<n>."
    )
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze an ideal of k[[H]] (the maximal ideal by default).
    Analyze(AnalyzeArgs),
    /// Build and check a member of the b_n-family.
    Family(FamilyArgs),
    /// Enumerate semigroups by minimal generating set and filter them.
    Search(SearchArgs),
    /// Re-derive the registered worked examples.
    VerifyPaper(VerifyArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Generators of H, comma separated.
    #[arg(
        long,
        value_delimiter = ',',
        required = true,
        allow_negative_numbers = true
    )]
    gens: Vec<i64>,
    /// Exponents generating the ideal, comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    ideal: Option<Vec<i64>>,
    /// Bound on the reduction-number iteration.
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    b: i64,
    #[arg(long)]
    e: i64,
    #[arg(long)]
    ell: i64,
    /// Assignments n=b_n, comma separated; with --cor67, values for n >= ℓ+3.
    #[arg(long, value_delimiter = ',', value_parser = parse_assignment)]
    bn: Vec<(i64, i64)>,
    /// Use b_{ℓ+1} = b(ℓ+1)+1−s and b_{ℓ+2} = (b−1)(ℓ+2)+1.
    #[arg(long, requires = "s")]
    cor67: bool,
    #[arg(long)]
    s: Option<i64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 8)]
    max_e: i64,
    #[arg(long, default_value_t = 40)]
    max_gen: i64,
    #[arg(long, default_value_t = 6)]
    max_gens_count: usize,
    /// Conjunction of clauses, e.g. "stretched && r == n+1 && lambda == {2}".
    #[arg(long, default_value = "")]
    filter: String,
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Only this fixture id.
    #[arg(long)]
    fixture: Option<String>,
    /// Print the fixture registry as JSON and exit.
    #[arg(long)]
    dump_fixtures: bool,
    #[arg(long)]
    json: bool,
}

fn parse_assignment(s: &str) -> Result<(i64, i64), String> {
    let (n, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected n=b_n, got `{s}`"))?;
    let n = n
        .trim()
        .parse()
        .map_err(|_| format!("bad index in `{s}`"))?;
    let v = v
        .trim()
        .parse()
        .map_err(|_| format!("bad value in `{s}`"))?;
    Ok((n, v))
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::InternalInconsistency(_) => EXIT_INTERNAL,
        Error::StretchedIdentity(_) | Error::UnclassifiedCase(_) => EXIT_MISMATCH,
        _ => EXIT_INPUT,
    }
}

fn fail(err: Error) -> ExitCode {
    match &err {
        Error::ConstraintViolation(vs) => {
            eprintln!("error: family constraints violated:");
            for v in vs {
                eprintln!("  {v}");
            }
        }
        _ => eprintln!("error: {err}"),
    }
    ExitCode::from(exit_code(&err))
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("documents serialize")
    );
}

fn list<T: Display>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INPUT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match cli.command {
        Command::Analyze(a) => run_analyze(a),
        Command::Family(a) => run_family(a),
        Command::Search(a) => run_search(a),
        Command::VerifyPaper(a) => run_verify(a),
    }
}

fn run_analyze(args: AnalyzeArgs) -> ExitCode {
    let doc = match analyze_document(&args.gens, args.ideal.as_deref(), args.cap) {
        Ok(doc) => doc,
        Err(e) => return fail(e),
    };
    if args.json {
        print_json(&doc);
    } else {
        print_analysis(&doc);
    }
    match &doc.classification {
        Some(c) if c.matches == Some(false) => ExitCode::from(EXIT_MISMATCH),
        _ => ExitCode::SUCCESS,
    }
}

fn print_analysis(doc: &AnalysisDocument) {
    let s = &doc.semigroup;
    let f = &doc.filtration;
    let h = &doc.hilbert;
    println!("semigroup     ⟨{}⟩", list(&s.generators));
    println!("apery         [{}]", list(&s.apery));
    println!("frobenius     {}", s.frobenius);
    println!("embedding dim {}", s.mu);
    println!("ideal         ({})", list(&doc.ideal.generators));
    println!("thresholds    [{}]", list(&doc.ideal.thresholds));
    println!("reduction     Q = (u^{})", f.v);
    println!("r             {}", f.r);
    println!("n             {}", f.n);
    println!("stretched     {}", f.stretched);
    println!("alpha         [{}]", list(&f.alphas));
    println!("beta          [{}]", list(&f.betas));
    println!("Lambda        {{{}}}", list(&f.lambda));
    match f.s_first {
        Some(s) => println!("s             {s}"),
        None => println!("s             -"),
    }
    println!("tau           {}", f.tau);
    println!("mu            {}", f.mu);
    println!("depth G       {}", f.depth_g);
    println!("l(A/I)        {}", f.colength);
    println!("sally         [{}]", list(&f.sally));
    println!("e0            {}", h.e0);
    println!("e1            {}", h.e1);
    println!("h-polynomial  [{}]", list(&h.hpoly));
    println!(
        "hilbert       l(A/I^(n+1)) = {}(n+1) - {} for n >= {}",
        h.e0, h.e1, h.postulation
    );
    println!("l(A/I^(n+1))  [{}] for n = 0..", list(&h.hf));
    if let Some(c) = &doc.classification {
        let verdict = match c.matches {
            Some(true) => "matches".to_string(),
            Some(false) => format!("MISMATCH: {}", c.mismatches.join("; ")),
            None => "no prediction without the type bound".to_string(),
        };
        println!(
            "case          {} (type bound {}) {verdict}",
            c.case,
            if c.type_bound { "holds" } else { "fails" }
        );
    }
}

#[derive(Serialize)]
struct FamilyDocument {
    params: FamilyParams,
    fill_note: Option<String>,
    violations: Vec<String>,
    generators: Vec<i64>,
    predicted: FamilyPrediction,
    evaluation: FamilyEvaluation,
    lemmas: LemmaReport,
    agrees: bool,
}

fn run_family(args: FamilyArgs) -> ExitCode {
    let (params, fill_note) = if args.cor67 {
        let s = args.s.expect("clap enforces --s");
        let fill = if args.bn.is_empty() {
            FillStrategy::RBoundary
        } else {
            FillStrategy::Explicit(args.bn.iter().copied().collect::<BTreeMap<_, _>>())
        };
        let note = match &fill {
            FillStrategy::RBoundary => {
                "b_n for n >= ℓ+3 filled with (b-1)n+1; this choice is not prescribed".to_string()
            }
            FillStrategy::Explicit(_) => "b_n for n >= ℓ+3 supplied with --bn".to_string(),
        };
        match corollary67_params(args.b, args.e, args.ell, s, &fill) {
            Ok(p) => (p, Some(note)),
            Err(e) => return fail(e),
        }
    } else {
        (FamilyParams::new(args.b, args.e, args.ell, args.bn), None)
    };

    let violations = validate_family(&params);
    if !violations.is_empty() {
        return fail(Error::ConstraintViolation(violations));
    }
    let result = predicted_report(&params).and_then(|pred| {
        let ev = evaluate_family(&params)?;
        let lemmas = check_construction_lemmas(&params)?;
        Ok((pred, ev, lemmas))
    });
    let (predicted, evaluation, lemmas) = match result {
        Ok(x) => x,
        Err(e) => return fail(e),
    };
    let agrees = evaluation.agrees() && lemmas.all_passed();
    let doc = FamilyDocument {
        generators: evaluation.generators.clone(),
        params,
        fill_note,
        violations: Vec::new(),
        predicted,
        evaluation,
        lemmas,
        agrees,
    };
    if args.json {
        print_json(&doc);
    } else {
        print_family(&doc);
    }
    if agrees {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    }
}

fn print_family(doc: &FamilyDocument) {
    let p = &doc.params;
    let bn: Vec<String> = p
        .b_values
        .iter()
        .map(|(n, v)| format!("b_{n}={v}"))
        .collect();
    println!(
        "parameters  b={} e={} ℓ={} {}",
        p.b,
        p.e,
        p.ell,
        bn.join(" ")
    );
    if let Some(note) = &doc.fill_note {
        println!("fill        {note}");
    }
    println!("constraints satisfied");
    println!("semigroup   ⟨{}⟩", list(&doc.generators));
    let pr = &doc.predicted;
    let f = &doc.evaluation.filtration;
    let h = &doc.evaluation.hilbert;
    println!("{:<10}{:>12}{:>12}", "", "predicted", "computed");
    let row = |name: &str, a: String, b: String| println!("{name:<10}{a:>12}{b:>12}");
    row("n", pr.n.to_string(), f.n.to_string());
    row("r", pr.r.to_string(), f.r.to_string());
    row(
        "Lambda",
        format!("{{{}}}", list(&pr.lambda)),
        format!("{{{}}}", list(&f.lambda)),
    );
    row("tau", pr.tau.to_string(), f.tau.to_string());
    row("mu", pr.mu.to_string(), f.mu.to_string());
    row("e1", pr.e1.to_string(), h.e1.to_string());
    row(
        "CM",
        pr.cohen_macaulay.to_string(),
        (f.depth_g == 1).to_string(),
    );
    for m in &doc.evaluation.mismatches {
        println!("MISMATCH    {m}");
    }
    for c in &doc.lemmas.checks {
        let mark = if c.passed { "ok  " } else { "FAIL" };
        println!("{mark} {} ({})", c.name, c.detail);
    }
    println!(
        "verdict     {}",
        if doc.agrees {
            "predicted = computed"
        } else {
            "predicted ≠ computed"
        }
    );
}

fn run_search(args: SearchArgs) -> ExitCode {
    let filter: Predicate = match args.filter.parse() {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let spec = SearchSpec {
        bounds: Some(SearchBounds {
            max_e: args.max_e,
            max_gen: args.max_gen,
            max_gens_count: args.max_gens_count,
        }),
        filter,
        limit: args.limit,
    };
    let result = match search(&spec) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    if args.json {
        print_json(&result);
    } else {
        print_search(&result);
    }
    ExitCode::SUCCESS
}

fn print_search(result: &SearchResult) {
    println!(
        "{:<28} {:>3} {:>3} {:>3} {:>9} {:>4} {:>3} {:>4} {:>5}",
        "generators", "e", "r", "n", "Lambda", "tau", "mu", "e1", "depth"
    );
    for hit in &result.hits {
        let f = &hit.filtration;
        println!(
            "{:<28} {:>3} {:>3} {:>3} {:>9} {:>4} {:>3} {:>4} {:>5}",
            format!("⟨{}⟩", list(&hit.generators)),
            hit.hilbert.e0,
            f.r,
            f.n,
            format!("{{{}}}", list(&f.lambda)),
            f.tau,
            f.mu,
            hit.hilbert.e1,
            f.depth_g
        );
    }
    println!(
        "{} shown, {} matched, {} examined",
        result.hits.len(),
        result.matched,
        result.examined
    );
}

fn run_verify(args: VerifyArgs) -> ExitCode {
    let selected = match &args.fixture {
        Some(id) => match fixture(id) {
            Some(f) => vec![f],
            None => {
                eprintln!("error: unknown fixture `{id}`");
                return ExitCode::from(EXIT_INPUT);
            }
        },
        None => fixtures(),
    };
    if args.dump_fixtures {
        print_json(&selected);
        return ExitCode::SUCCESS;
    }
    let mut outcomes: Vec<FixtureOutcome> = Vec::new();
    for f in &selected {
        match verify_fixture(f) {
            Ok(o) => outcomes.push(o),
            Err(e) => {
                eprintln!("{}: engine error", f.id);
                return fail(e);
            }
        }
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    if args.json {
        print_json(&outcomes);
    } else {
        for o in &outcomes {
            let c = &o.computed;
            println!(
                "{} {:<24} r={} n={} Λ={{{}}} τ={} μ={} e0={} e1={} depth={}",
                if o.passed { "PASS" } else { "FAIL" },
                o.id,
                c.r,
                c.n,
                list(&c.lambda),
                c.tau,
                c.mu,
                c.e0,
                c.e1,
                c.depth_g
            );
            for d in &o.diffs {
                println!(
                    "     {}: expected {}, computed {}",
                    d.field, d.expected, d.computed
                );
            }
            for er in &o.errata {
                println!(
                    "     erratum {}: printed {}, derived {}, computed {} ({})",
                    er.field,
                    er.printed,
                    er.derived,
                    er.computed,
                    if er.resolved {
                        "resolved"
                    } else {
                        "UNRESOLVED"
                    }
                );
            }
        }
        println!("{passed}/{} fixtures pass", outcomes.len());
    }
    if passed == outcomes.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use stretched_core::family::Violation;

    #[test]
    fn assignments() {
        assert_eq!(parse_assignment("4=5"), Ok((4, 5)));
        assert!(parse_assignment("4:5").is_err());
        assert!(parse_assignment("x=5").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::InternalInconsistency(String::new())), 3);
        assert_eq!(exit_code(&Error::StretchedIdentity(String::new())), 2);
        assert_eq!(exit_code(&Error::NotCoprime { gcd: 2 }), 1);
        assert_eq!(
            exit_code(&Error::ConstraintViolation(vec![Violation::BaseTooSmall {
                b: 1
            }])),
            1
        );
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
