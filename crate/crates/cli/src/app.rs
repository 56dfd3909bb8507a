//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use tableau_corners::formulas::{
    closed_corner_count, closed_noc, closed_occupied, closed_tableau_count, enumerated_totals, eulerian_poly,
    expected_x, noc_ab_conjectured, noc_partition_sums, noc_x_conjectured, symmetric_sums, t_ab, tsym_x, tsym_xyz,
    weighted_sums, Poly,
};
use tableau_corners::tableaux::{generate_all, Family, GenOptions};

use crate::bounds::{DeskBounds, MAX_N_ENV};
use crate::error::{CliError, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use crate::render::{render, Format};
use crate::suites::{bijection_check, run_suite, BijectionName, Ctx, Suite};

#[derive(Debug, Parser)]
#[command(name = "tableaux", version, about = "Enumerate tableaux, count their corners and verify closed forms")]
pub struct Cli {
    /// Worker threads for enumeration; output does not depend on it.
    #[arg(long, global = true, default_value_t = 1, value_name = "K")]
    pub parallel: usize,
    /// Reserved; every command is deterministic and ignores it.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Run above the default bounds instead of clamping, with a warning.
    #[arg(long, global = true)]
    pub no_clamp: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// pt, at, tlt, ptb, atsym or tltsym.
    #[arg(long)]
    pub family: Family,
    /// Length for pt, at and ptb; size for tlt; 2n is the length for atsym and
    /// 2n+1 the size for tltsym.
    #[arg(long)]
    pub n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Stat {
    Tableaux,
    Corners,
    Occupied,
    Noc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolyKind {
    /// T_n(a,b) = (a+b)(a+b+1)...(a+b+n-2).
    TAb,
    /// T^sym_{2n+1}(x).
    TsymX,
    /// T^sym_{2n+1}(x,y,z).
    TsymXyz,
    /// A(n,k) for k = 1..n.
    Eulerian,
    /// Non-occupied corners of T_n weighted by a^top b^left, enumerated.
    NocAb,
    /// The conjectured closed form of noc-ab.
    NocAbConj,
    /// noc-ab split into its four classes, enumerated.
    NocParts,
    /// Non-occupied corners of T^sym_{2n+1} weighted by x^{left*}, enumerated.
    NocX,
    /// The conjectured closed form of noc-x.
    NocXConj,
    /// Expected number of corners of T_n weighted by a^top b^left.
    ExpectedX,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print every tableau of a family.
    Generate {
        #[command(flatten)]
        target: FamilyArgs,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Compare an enumerated statistic with its closed form.
    Count {
        #[command(flatten)]
        target: FamilyArgs,
        #[arg(long, value_enum, default_value = "corners")]
        stat: Stat,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        report: ReportFormat,
        /// Record wall-clock times, which makes reports differ between runs.
        #[arg(long)]
        timings: bool,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<String>,
    },
    /// Check one bijection on a whole domain.
    BijectionCheck {
        #[arg(long, value_enum)]
        name: BijectionName,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        report: ReportFormat,
    },
    /// Print a generating polynomial.
    Poly {
        #[arg(value_enum)]
        kind: PolyKind,
        #[arg(long)]
        n: usize,
        /// Value of a for expected-x, such as 1/2.
        #[arg(long, default_value = "1")]
        a: BigRational,
        /// Value of b for expected-x.
        #[arg(long, default_value = "1")]
        b: BigRational,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Write every tableau of a family to a file.
    Export {
        #[command(flatten)]
        target: FamilyArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Destination; stdout when absent.
        #[arg(long)]
        output: Option<String>,
    },
}

/// Stdout text and exit code of a command.
struct Outcome {
    stdout: String,
    code: i32,
}

impl Outcome {
    fn pass(stdout: String) -> Outcome {
        Outcome { stdout, code: EXIT_PASS }
    }
}

/// Parses `args` and runs the command, writing to `out` and `err`.
/// Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    if cli.parallel == 0 {
        let _ = writeln!(err, "error: --parallel needs at least one worker");
        return EXIT_USAGE;
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.parallel).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start workers: {e}");
            return EXIT_FAIL;
        }
    };
    let mut notes = Vec::new();
    let result = pool.install(|| dispatch(&cli, &mut notes));
    let _ = err.write_all(&notes);
    match result {
        Ok(outcome) => {
            if out.write_all(outcome.stdout.as_bytes()).and_then(|_| out.flush()).is_err() {
                return EXIT_FAIL;
            }
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let CliError::Tableau(tableau_corners::TableauError::BoundExceeded { .. })
            | CliError::Formula(tableau_corners::FormulaError::Tableau(
                tableau_corners::TableauError::BoundExceeded { .. },
            )) = e
            {
                let _ = writeln!(err, "hint: pass --no-clamp or set {MAX_N_ENV}");
            }
            e.exit_code()
        }
    }
}

fn dispatch(cli: &Cli, err: &mut Vec<u8>) -> Result<Outcome, CliError> {
    let bounds = DeskBounds::from_env(err);
    let parallel = cli.parallel > 1;
    let ctx = Ctx { bounds, parallel, no_clamp: cli.no_clamp, timings: false };
    // Explicit parameters are never clamped; --no-clamp admits them.
    let opts_for = |family: Family, n: usize| -> GenOptions {
        let mut b = bounds;
        if cli.no_clamp {
            b.admit(family, n);
        }
        b.gen_options(parallel)
    };
    match &cli.command {
        Command::Generate { target, format } => {
            let all = generate_all(target.family, target.n, &opts_for(target.family, target.n))?;
            Ok(Outcome::pass(render(*format, target.family, target.n, &all)))
        }
        Command::Export { target, format, output } => {
            let all = generate_all(target.family, target.n, &opts_for(target.family, target.n))?;
            let text = render(*format, target.family, target.n, &all);
            match output {
                Some(path) => {
                    write_file(path, &text)?;
                    Ok(Outcome::pass(String::new()))
                }
                None => Ok(Outcome::pass(text)),
            }
        }
        Command::Count { target, stat } => count(target.family, target.n, *stat, &opts_for(target.family, target.n)),
        Command::Verify { suite, max_n, report, timings, output } => {
            let ctx = Ctx { timings: *timings, ..ctx };
            let r = run_suite(*suite, *max_n, &ctx, err)?;
            let text = match report {
                ReportFormat::Text => r.to_text(),
                ReportFormat::Json => r.to_json(),
            };
            let code = if r.passed { EXIT_PASS } else { EXIT_FAIL };
            match output {
                Some(path) => {
                    write_file(path, &text)?;
                    Ok(Outcome { stdout: String::new(), code })
                }
                None => Ok(Outcome { stdout: text, code }),
            }
        }
        Command::BijectionCheck { name, n, report } => {
            let r = bijection_check(*name, *n, &ctx, err)?;
            let stdout = match report {
                ReportFormat::Text => r.to_text(),
                ReportFormat::Json => r.to_json(),
            };
            Ok(Outcome { stdout, code: if r.passed { EXIT_PASS } else { EXIT_FAIL } })
        }
        Command::Poly { kind, n, a, b, format } => {
            let family = if matches!(kind, PolyKind::NocX) { Family::TltSym } else { Family::Tlt };
            let m = if matches!(kind, PolyKind::ExpectedX) { n + 1 } else { *n };
            let entries = poly(*kind, *n, a, b, &opts_for(family, m))?;
            Ok(Outcome::pass(render_poly(*kind, *n, &entries, *format)))
        }
    }
}

fn write_file(path: &str, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.to_string(), source })
}

fn count(family: Family, n: usize, stat: Stat, opts: &GenOptions) -> Result<Outcome, CliError> {
    let totals = enumerated_totals(family, n, opts)?;
    let tree_like = matches!(family, Family::Tlt | Family::TltSym);
    let (closed, enumerated): (Option<BigInt>, u64) = match stat {
        Stat::Tableaux => (Some(closed_tableau_count(family, n)), totals.tableaux),
        Stat::Corners => (closed_corner_count(family, n).ok(), totals.corners),
        Stat::Occupied => (tree_like.then(|| closed_occupied(family, n)).transpose()?, totals.occupied),
        Stat::Noc => (tree_like.then(|| closed_noc(family, n)).transpose()?, totals.noc),
    };
    let stat_name = stat.to_possible_value().expect("named").get_name().to_string();
    let (closed_text, matched) = match &closed {
        Some(c) => (c.to_string(), Some(*c == BigInt::from(enumerated))),
        None => (String::new(), None),
    };
    let stdout = format!(
        "n,family,stat,closed,enumerated,match\n{n},{},{stat_name},{closed_text},{enumerated},{}\n",
        family.name(),
        matched.map(|m| m.to_string()).unwrap_or_default()
    );
    Ok(Outcome { stdout, code: if matched == Some(false) { EXIT_FAIL } else { EXIT_PASS } })
}

/// A labelled value with its JSON and text forms.
struct Entry {
    label: String,
    json: Value,
    text: String,
}

fn entry<const V: usize>(label: impl Into<String>, p: &Poly<V>) -> Entry {
    Entry { label: label.into(), json: p.to_json(), text: p.to_string() }
}

fn poly(kind: PolyKind, n: usize, a: &BigRational, b: &BigRational, opts: &GenOptions) -> Result<Vec<Entry>, CliError> {
    let size = 2 * n + 1;
    Ok(match kind {
        PolyKind::TAb => vec![entry("T_n(a,b)", &t_ab(n))],
        PolyKind::TsymX => vec![entry("T^sym_{2n+1}(x)", &tsym_x(size)?)],
        PolyKind::TsymXyz => vec![entry("T^sym_{2n+1}(x,y,z)", &tsym_xyz(size)?)],
        PolyKind::Eulerian => {
            let coeffs = eulerian_poly(n)?;
            (1..=n).map(|k| entry(format!("A({n},{k})"), &coeffs[k])).collect()
        }
        PolyKind::NocAb => vec![entry("noc_n(a,b)", &weighted_sums(n, opts)?.noc)],
        PolyKind::NocAbConj => vec![entry("noc_n(a,b) conjectured", &noc_ab_conjectured(n)?)],
        PolyKind::NocParts => {
            let p = noc_partition_sums(n, opts)?;
            vec![
                entry("NOC_{a,b}", &p.ab),
                entry("NOC_{a,1}", &p.a1),
                entry("NOC_{1,b}", &p.one_b),
                entry("NOC_{1,1}", &p.one_one),
            ]
        }
        PolyKind::NocX => vec![entry("noc^sym_{2n+1}(x)", &symmetric_sums(n, opts)?.noc)],
        PolyKind::NocXConj => vec![entry("noc^sym_{2n+1}(x) conjectured", &noc_x_conjectured(n)?)],
        PolyKind::ExpectedX => {
            let e = expected_x(n, a, b, opts)?;
            let r = |label: &str, v: &BigRational| Entry { label: label.into(), json: json!(v.to_string()), text: v.to_string() };
            vec![r("E(X) closed", &e.closed), r("E(X) by enumeration", &e.direct)]
        }
    })
}

fn render_poly(kind: PolyKind, n: usize, entries: &[Entry], format: ReportFormat) -> String {
    let name = kind.to_possible_value().expect("named").get_name().to_string();
    match format {
        ReportFormat::Text => entries.iter().map(|e| format!("{} [n={n}] = {}\n", e.label, e.text)).collect(),
        ReportFormat::Json => {
            let values: Vec<Value> = entries.iter().map(|e| json!({ "label": e.label, "value": e.json })).collect();
            serde_json::to_string_pretty(&json!({ "kind": name, "n": n, "values": values })).expect("serializes") + "\n"
        }
    }
}
