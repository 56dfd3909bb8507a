//! Acceptance criteria, one printed line each. Every comparison is exact
//! (tolerance 0); runtime budgets are wall-clock ceilings.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use tableau_cli::bounds::DeskBounds;
use tableau_cli::suites::{bijection_check, run_suite, BijectionName, Ctx, Suite};
use tableau_cli::{Status, VerificationReport};

struct Outcome {
    passed: usize,
    failed: Vec<String>,
    skipped: usize,
}

impl Outcome {
    fn new() -> Outcome {
        Outcome { passed: 0, failed: Vec::new(), skipped: 0 }
    }

    fn absorb(&mut self, r: VerificationReport) {
        for c in r.checks {
            match c.status {
                Status::Pass => self.passed += 1,
                Status::Skipped => self.skipped += 1,
                Status::Fail => {
                    let n = c.n.map(|n| format!(" n={n}")).unwrap_or_default();
                    self.failed.push(format!("{} {}{n}", r.suite, c.name));
                }
            }
        }
    }
}

fn ctx() -> Ctx {
    Ctx { bounds: DeskBounds::default(), parallel: true, no_clamp: true, timings: false }
}

/// `max_n` of `None` keeps the per-family default ceilings.
fn suite(out: &mut Outcome, s: Suite, max_n: Option<usize>) {
    let mut sink = Vec::new();
    match run_suite(s, max_n, &ctx(), &mut sink) {
        Ok(r) => out.absorb(r),
        Err(e) => out.failed.push(format!("{}: {e}", s.id())),
    }
}

fn bijection(out: &mut Outcome, name: BijectionName, ns: std::ops::RangeInclusive<usize>) {
    let mut sink = Vec::new();
    for n in ns {
        match bijection_check(name, n, &ctx(), &mut sink) {
            Ok(r) => out.absorb(r),
            Err(e) => out.failed.push(format!("{name:?} n={n}: {e}")),
        }
    }
}

fn run_binary(args: &[&str]) -> (Vec<u8>, i32) {
    let o = Command::new(env!("CARGO_BIN_EXE_tableaux")).args(args).env_remove("TABLEAUX_MAX_N").output().expect("binary runs");
    (o.stdout, o.status.code().unwrap_or(-1))
}

fn determinism(out: &mut Outcome) {
    let commands: [&[&str]; 4] = [
        &["export", "--family", "tlt", "--n", "5", "--format", "json"],
        &["export", "--family", "ptb", "--n", "3", "--format", "csv"],
        &["verify", "thmA", "--max-n", "7", "--report", "json"],
        &["verify", "conj-ab", "--max-n", "6", "--report", "text"],
    ];
    for args in commands {
        let (first, code) = run_binary(args);
        let (second, _) = run_binary(args);
        let parallel: Vec<&str> = ["--parallel", "4"].into_iter().chain(args.iter().copied()).collect();
        let (third, _) = run_binary(&parallel);
        if code == 0 && !first.is_empty() && first == second && first == third {
            out.passed += 1;
        } else {
            out.failed.push(format!("{} (exit {code})", args.join(" ")));
        }
    }
}

type Criterion = (&'static str, Option<Duration>, fn(&mut Outcome));

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria: [Criterion; 10] = [
        ("type A corner counts, n = 1..8", secs(60), |o| suite(o, Suite::ThmA, Some(8))),
        ("type B corner counts, n = 1..5", secs(120), |o| suite(o, Suite::ThmB, Some(5))),
        ("occupied and non-occupied corners, size <= 8 and symmetric size <= 11", None, |o| {
            suite(o, Suite::PropOccupied, None);
            suite(o, Suite::CorNoc, None);
        }),
        ("alpha, gamma, zeta round trips and corner-count corollaries", None, |o| {
            bijection(o, BijectionName::Alpha, 1..=7);
            bijection(o, BijectionName::Gamma, 1..=7);
            bijection(o, BijectionName::AlphaSym, 1..=5);
            bijection(o, BijectionName::Zeta, 1..=5);
            for s in [Suite::Cor32, Suite::Cor36] {
                suite(o, s, Some(8));
            }
            for s in [Suite::Cor34, Suite::Cor39] {
                suite(o, s, Some(5));
            }
        }),
        ("column-label sets against descent sets, n <= 6 and signed n <= 4", None, |o| {
            suite(o, Suite::PhiContract, Some(6));
            suite(o, Suite::XiContract, Some(4));
        }),
        ("corners to runs bijective for n <= 6, run counts for n <= 9, worked examples", None, |o| {
            suite(o, Suite::CornersRuns, Some(6));
            suite(o, Suite::RunsEq1, Some(9));
        }),
        ("(a,b) polynomial identities, n <= 7", None, |o| {
            suite(o, Suite::PropNocAb, Some(7));
            suite(o, Suite::LemmaEuler, Some(7));
        }),
        ("(a,b) conjecture for n = 3..8, x-analogue table for n = 2..7", None, |o| {
            suite(o, Suite::ConjAb, Some(8));
            suite(o, Suite::ConjX, Some(7));
        }),
        ("displacement, excedance and double-descent totals, m = 3..8", None, |o| suite(o, Suite::Sec5Stats, Some(8))),
        ("byte-identical export and verify output, with and without --parallel", None, determinism),
    ];
    let mut all_ok = true;
    for (i, (title, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut o = Outcome::new();
        run(&mut o);
        let elapsed = start.elapsed();
        let in_budget = budget.is_none_or(|b| elapsed <= b);
        let ok = o.failed.is_empty() && o.skipped == 0 && o.passed > 0 && in_budget;
        all_ok &= ok;
        let budget_text = budget.map(|b| format!(", budget {} s", b.as_secs())).unwrap_or_default();
        println!(
            "criterion {}: {} {title}: {} checks passed, {} failed, {} skipped, tolerance exact, {:.1} s{budget_text}",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            o.passed,
            o.failed.len(),
            o.skipped,
            elapsed.as_secs_f64()
        );
        for f in &o.failed {
            println!("    failed: {f}");
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
