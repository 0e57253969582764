//! Command-line driver tying the modules together: build members, run
//! verification suites, analyze structures, emit tables and continued
//! fractions. Exit codes: 0 success, 1 verification failure, 2 usage,
//! 3 resource budget exceeded.

use crate::blockstruct::{self, representatives};
use crate::cardioid::{self, contfrac::Mode};
use crate::diffs;
use crate::error::Error;
use crate::exact::Rational;
use crate::falg;
use crate::green;
use crate::mod8;
use crate::primesfact::{self, PrimeIndexer};
use crate::report::Report;
use crate::rootseq::{self, RootKind};
use crate::tables;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use std::io::Write;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "parafermi", version, about = "exact workbench for parafermi operators, root sequences and their number theory")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    F,
    D,
    H,
}

impl From<KindArg> for RootKind {
    fn from(k: KindArg) -> RootKind {
        match k {
            KindArg::F => RootKind::F,
            KindArg::D => RootKind::D,
            KindArg::H => RootKind::H,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SymmetryArg {
    S1,
    S2,
    S3,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Simple,
    Alternating,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TargetArg {
    /// Arclength A_i at a = 1/4
    A,
    /// Co-arclength co-A_i at a = 1/4
    CoA,
    /// Intensional Catalan number C_{-1/k}
    Cneg,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a root-sequence member and write it out
    Build {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        p: u64,
        /// Output file; receives the JSON matrix, with the coefficient
        /// triangle CSV beside it as FILE.triangle.csv
        #[arg(long)]
        out: String,
    },
    /// Run a verification suite; exits nonzero on any failed assertion
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, value_enum)]
        symmetry: Option<SymmetryArg>,
    },
    /// Analyze a structure and print it
    Analyze {
        #[arg(long)]
        what: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Emit a verified table
    Table {
        #[arg(long)]
        name: String,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Continued-fraction expansions with the stability certificate
    Contfrac {
        #[arg(long, value_enum)]
        target: TargetArg,
        /// Stop index i for arclength targets
        #[arg(long)]
        index: Option<u32>,
        /// Intensional index k for the cneg target
        #[arg(long)]
        k: Option<u64>,
        #[arg(long, default_value_t = 24)]
        terms: usize,
        #[arg(long)]
        digits: Option<u32>,
        #[arg(long, value_enum, default_value = "simple")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
}

/// Default precision, overridable through PARAFERMI_DIGITS.
fn default_digits() -> u32 {
    std::env::var("PARAFERMI_DIGITS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(cardioid::DEFAULT_DIGITS)
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded(_) | Error::PrecisionExhausted(_) => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

/// Entry point used by both the binary and the tests.
pub fn run<W: Write>(args: &[&str], out: &mut W) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(out, "{e}");
            return EXIT_USAGE;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            exit_code_for(&e)
        }
    }
}

fn report_outcome<W: Write>(report: &Report, out: &mut W) -> i32 {
    let _ = write!(out, "{report}");
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

fn execute<W: Write>(cmd: Command, out: &mut W) -> crate::Result<i32> {
    match cmd {
        Command::Build { kind, p, out: path } => {
            let triangle = rootseq::build_member(kind.into(), p)?;
            let matrix = triangle.to_operator_matrix();
            let json = serde_json::to_string_pretty(&matrix.to_json())
                .expect("matrix serializes");
            std::fs::write(&path, json)
                .map_err(|e| Error::OutOfRange(format!("cannot write {path}: {e}")))?;
            let csv_path = format!("{path}.triangle.csv");
            std::fs::write(&csv_path, triangle.to_csv())
                .map_err(|e| Error::OutOfRange(format!("cannot write {csv_path}: {e}")))?;
            let _ = writeln!(out, "wrote {path} and {csv_path}");
            Ok(EXIT_OK)
        }
        Command::Verify { suite, p, symmetry } => {
            let report = match suite.as_str() {
                "green" => green::suite(p.unwrap_or(7))?,
                "rootseq" => {
                    let target = p.unwrap_or(31);
                    let mut r = Report::new(format!("rootseq suites to p={target}"));
                    for kind in [RootKind::F, RootKind::D, RootKind::H] {
                        r.merge(rootseq::suite(kind, target)?);
                    }
                    r
                }
                "blockstruct" => {
                    let target = p.unwrap_or(31);
                    let mut r = Report::new(format!("blockstruct suites to p={target}"));
                    r.merge(blockstruct::suite(RootKind::F, target)?);
                    r.merge(blockstruct::suite(RootKind::H, target)?);
                    r
                }
                "mod8" => {
                    let seq = rootseq::build_triangles(RootKind::F, p.unwrap_or(127))?;
                    let mut r = mod8::suite(&seq)?;
                    r.merge(falg::verify_mod8_algebra(15)?);
                    r
                }
                "falg" => falg_suite(p, symmetry)?,
                "diffs" => diffs::suite()?,
                "primesfact" => primesfact_suite()?,
                "cardioid" => cardioid_suite(default_digits())?,
                other => {
                    return Err(Error::OutOfRange(format!("unknown suite {other}")));
                }
            };
            Ok(report_outcome(&report, out))
        }
        Command::Analyze { what, p, format } => {
            let table = match what.as_str() {
                "representatives" => {
                    let p = p.unwrap_or(15);
                    let reps = representatives(&rootseq::build_member(RootKind::F, p)?)?;
                    tables::Table {
                        name: format!("representatives p={p}"),
                        columns: vec!["value".into(), "residue mod 8".into()],
                        rows: reps
                            .positions
                            .iter()
                            .map(|(v, r)| vec![v.to_string(), r.to_string()])
                            .collect(),
                    }
                }
                "mod8-pattern" => {
                    let p = p.unwrap_or(31);
                    let t = rootseq::build_member(RootKind::F, p)?;
                    let ll = blockstruct::navigate_str(&mod8::reduce_mod8(&t), "LL")?;
                    let d = mod8::pattern_descriptor(&ll)?;
                    let _ = writeln!(out, "LL(G^({p})) mod 8 = {d}");
                    return Ok(EXIT_OK);
                }
                "factorization" => {
                    let p = p.unwrap_or(31);
                    let reps = representatives(&rootseq::build_member(RootKind::F, p)?)?;
                    let mut rows = Vec::new();
                    for v in &reps.values {
                        let f = primesfact::factorize(v)?;
                        rows.push(vec![v.to_string(), f.to_string(), f.class().to_string()]);
                    }
                    tables::Table {
                        name: format!("factorizations p={p}"),
                        columns: vec!["value".into(), "factorization".into(), "class".into()],
                        rows,
                    }
                }
                "kissing" => tables::table_t7()?,
                "differences" => {
                    let p = p.unwrap_or(31);
                    let g = diffs::g_values(p)?;
                    let dg = diffs::naive_differences(&g);
                    let og = diffs::oblique_differences(&rootseq::build_member(RootKind::F, p)?)?;
                    tables::Table {
                        name: format!("differences p={p}"),
                        columns: vec!["kind".into(), "sequence".into()],
                        rows: vec![
                            vec!["naive".into(), join_bigints(&dg)],
                            vec!["oblique".into(), join_bigints(&og)],
                        ],
                    }
                }
                other => return Err(Error::OutOfRange(format!("unknown analysis {other}"))),
            };
            emit_table(&table, format, out);
            Ok(EXIT_OK)
        }
        Command::Table { name, format } => {
            let table = tables::by_name(&name, default_digits())?;
            emit_table(&table, format, out);
            Ok(EXIT_OK)
        }
        Command::Contfrac { target, index, k, terms, digits, mode, format } => {
            let digits = digits.unwrap_or_else(|| cardioid::digits_for_terms(terms).max(default_digits()));
            let mode = match mode {
                ModeArg::Simple => Mode::Simple,
                ModeArg::Alternating => Mode::Alternating,
            };
            let (label, cf) = match target {
                TargetArg::A => {
                    let i = index.ok_or_else(|| Error::OutOfRange("--index required for A".into()))?;
                    (format!("A_{i}"), cardioid::arclength_contfrac(i, false, terms, digits, mode)?)
                }
                TargetArg::CoA => {
                    let i = index.ok_or_else(|| Error::OutOfRange("--index required for coA".into()))?;
                    (format!("co-A_{i}"), cardioid::arclength_contfrac(i, true, terms, digits, mode)?)
                }
                TargetArg::Cneg => {
                    let k = k.ok_or_else(|| Error::OutOfRange("--k required for cneg".into()))?;
                    (format!("C_(-1/{k})"), cardioid::intensional_contfrac(k, terms, digits, mode)?)
                }
            };
            match format {
                FormatArg::Json => {
                    let quotients: Vec<String> = cf
                        .quotients
                        .iter()
                        .take(cf.stable_prefix)
                        .map(|q| q.to_string())
                        .collect();
                    let v = serde_json::json!({
                        "target": label,
                        "digits": digits,
                        "stable_prefix": cf.stable_prefix,
                        "quotients": quotients,
                    });
                    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"));
                }
                _ => {
                    let _ = writeln!(out, "{label} = {cf} ({} stable of {} computed, D={digits})",
                        cf.stable_prefix, cf.quotients.len());
                }
            }
            if cf.stable_prefix < terms {
                return Err(Error::PrecisionExhausted(format!(
                    "only {} of {terms} quotients stabilized at D={digits}",
                    cf.stable_prefix
                )));
            }
            Ok(EXIT_OK)
        }
    }
}

fn join_bigints(v: &[BigInt]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn emit_table<W: Write>(table: &tables::Table, format: FormatArg, out: &mut W) {
    match format {
        FormatArg::Text => {
            let _ = write!(out, "{}", table.to_text());
        }
        FormatArg::Json => {
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&table.to_json()).expect("json")
            );
        }
        FormatArg::Csv => {
            let _ = write!(out, "{}", table.to_csv());
        }
    }
}

fn falg_suite(p: Option<u64>, symmetry: Option<SymmetryArg>) -> crate::Result<Report> {
    let mut report = Report::new("falg suite");
    match p {
        Some(p) if p >= 15 => {
            report.merge(falg::verify_mod8_algebra(p)?);
        }
        Some(p) => {
            report.merge(falg::verify_f_algebra(p)?);
            let sym = match symmetry {
                Some(SymmetryArg::S1) => falg::Symmetry::S1,
                Some(SymmetryArg::S2) => falg::Symmetry::S2,
                Some(SymmetryArg::S3) => falg::Symmetry::S3,
                None => falg::Symmetry::None,
            };
            let f = rootseq::build_member(RootKind::F, p)?.to_int_matrix();
            let (g, factors) = falg::solve_heterotic(p, sym)?;
            report.merge(falg::verify_commutator_identity(&f, &g));
            report.check(
                format!("normalizing factors under {sym}"),
                true,
                match factors {
                    Some(fs) => format!("chi={}, sigma={}, tau={}, gamma={}", fs.chi, fs.sigma, fs.tau, fs.gamma),
                    None => "{}".into(),
                },
            );
        }
        None => {
            report.merge(falg::verify_f_algebra(3)?);
            report.merge(falg::verify_f_algebra(7)?);
            for sym in [falg::Symmetry::S1, falg::Symmetry::S2, falg::Symmetry::S3] {
                let (_, factors) = falg::solve_heterotic(7, sym)?;
                report.check(
                    format!("g(7) factors under {sym}"),
                    factors.is_some(),
                    factors
                        .map(|fs| format!("chi={}, sigma={}, tau={}, gamma={}", fs.chi, fs.sigma, fs.tau, fs.gamma))
                        .unwrap_or_else(|| "{}".into()),
                );
            }
        }
    }
    Ok(report)
}

fn primesfact_suite() -> crate::Result<Report> {
    let mut report = Report::new("primesfact suite");
    let sieve = PrimeIndexer::with_limit(3_000_000);
    let r31 = representatives(&rootseq::build_member(RootKind::F, 31)?)?;
    report.merge(primesfact::interpolation_report(&sieve, &r31)?);
    report.merge(primesfact::verify_euler_tiling(&sieve, 4095)?);
    let rows = primesfact::order_comparison_table(&sieve)?;
    report.check("order table has 11 rows", rows.len() == 11, "");
    Ok(report)
}

fn cardioid_suite(digits: u32) -> crate::Result<Report> {
    let quarter = Rational::new(BigInt::from(1), BigInt::from(4));
    let mut report = Report::new("cardioid suite");
    let d = digits.min(200);
    report.merge(cardioid::verify_radicals_against_series(10, d));
    report.merge(cardioid::verify_self_action(12, &quarter, d.max(80), 50)?);
    report.merge(cardioid::verify_co_z_identity(7)?);
    let v30 = cardioid::vieta_product(30, d)?;
    let two_over_pi = cardioid::real::HighPrecReal::from_integer(2, d)
        .div(&cardioid::real::pi(d))?;
    report.check("vieta product m=30 within 1e-17 of 2/pi", v30.agrees_within(&two_over_pi, 17), "");
    report.merge(cardioid::leading_coefficient_recurrences(8, 200)?);
    for i in 3..=6 {
        let placement = cardioid::paraorder_placement(i, digits)?;
        report.check(format!("paraorder placement i={i}"), true, placement.to_string());
    }
    report.merge(cardioid::verify_l1_successorship(4, 12)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_to_string(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let code = run(args, &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn verify_green_passes() {
        let (code, text) = run_to_string(&["parafermi", "verify", "--suite", "green", "--p", "7"]);
        assert_eq!(code, EXIT_OK, "{text}");
    }

    #[test]
    fn invalid_paraorder_is_usage_error() {
        let (code, _) = run_to_string(&["parafermi", "build", "--kind", "f", "--p", "0", "--out", "/tmp/x.json"]);
        assert_eq!(code, EXIT_USAGE);
        let (code2, _) = run_to_string(&["parafermi", "nonsense"]);
        assert_eq!(code2, EXIT_USAGE);
    }

    #[test]
    fn table_t2_text_row() {
        let (code, text) = run_to_string(&["parafermi", "table", "--name", "T2"]);
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("15"));
        let line15 = text.lines().find(|l| l.trim_start().starts_with("15 ")).unwrap();
        assert!(line15.contains('6'), "{line15}");
    }

    #[test]
    fn deterministic_output() {
        let a = run_to_string(&["parafermi", "table", "--name", "T3", "--format", "json"]);
        let b = run_to_string(&["parafermi", "table", "--name", "T3", "--format", "json"]);
        assert_eq!(a, b);
    }

    #[test]
    fn build_writes_files() {
        let dir = std::env::temp_dir().join("parafermi-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("f15.json");
        let path_str = path.to_str().unwrap();
        let (code, _) = run_to_string(&["parafermi", "build", "--kind", "f", "--p", "15", "--out", path_str]);
        assert_eq!(code, EXIT_OK);
        let json: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let m = crate::exact::OperatorMatrix::from_json(&json).unwrap();
        assert_eq!(m.dim(), 16);
        let csv = std::fs::read_to_string(format!("{path_str}.triangle.csv")).unwrap();
        assert!(csv.lines().any(|l| l == "8,1,113"));
    }

    #[test]
    fn contfrac_budget_exit() {
        // demanding far more stable terms than the precision supports
        let (code, _) = run_to_string(&[
            "parafermi", "contfrac", "--target", "a", "--index", "4", "--terms", "400",
            "--digits", "40",
        ]);
        assert_eq!(code, EXIT_BUDGET);
    }

    #[test]
    fn analyze_mod8_pattern() {
        let (code, text) = run_to_string(&["parafermi", "analyze", "--what", "mod8-pattern", "--p", "31"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(
            text.trim(),
            "LL(G^(31)) mod 8 = sym(d_m(5 3/3 5),(3 3),(5 3/3 5),d_s(1 1))"
        );
    }
}
