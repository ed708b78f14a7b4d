//! Command-line front end: enumeration, invariants, claim audits, and
//! symbolic bundle computations, emitting JSON or CSV reports.
//!
//! Exit codes: 0 success, 2 input error, 3 strict-audit failure, 4
//! cross-pipeline disagreement.

use std::io::Write;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use blowdown::{
    cech_w, visit_maximal, AdmissibleSequence, AuditReport, CechOptions, Epsilon, Error, Rational,
    RationalExtension, RankRSequence, SplittingPair, DEFAULT_J_CAP,
};

const VERSION_WITH_SCHEMA: &str = concat!(env!("CARGO_PKG_VERSION"), " (schema 1)");

/// Environment override for the enumeration j cap.
const MAX_J_ENV: &str = "BLOWDOWN_MAX_J";

#[derive(Parser)]
#[command(
    name = "blowdown",
    version = VERSION_WITH_SCHEMA,
    about = "Splitting-type sequences, invariants, claim audits, and a Cech oracle \
             for rank-2 bundles near an exceptional curve"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClaimArg {
    Thm02,
    Thm05,
    Prop04,
    Lemma11,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BundleOp {
    Sequence,
    Cech,
    Invariants,
    Verify,
    Matrix,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RankROp {
    W,
    Bound,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate every admissible sequence from the pair (a, b), streaming
    /// one invariant report per sequence.
    Enumerate {
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Invariants of one sequence given in the text format "a,b;a,b;...".
    Invariants {
        #[arg(value_name = "SEQUENCE", allow_hyphen_values = true)]
        sequence: String,
    },
    /// Audit one claim against exhaustive enumeration.
    Audit {
        #[arg(long, value_enum)]
        claim: ClaimArg,
        #[arg(long)]
        j: i64,
        #[arg(long, default_value = "0", allow_negative_numbers = true)]
        epsilon: i64,
        /// Exit 3 when the claim fails instead of reporting quietly.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Symbolic computations on the canonical bundle with splitting type
    /// (j, -j) and extension coefficients p.
    Bundle {
        #[arg(long)]
        j: i64,
        /// Inline coefficient JSON: [{"i":1,"l":1,"c":"1/2"}, ...]
        #[arg(long, conflicts_with = "p_file", allow_hyphen_values = true)]
        p: Option<String>,
        /// Path to a file holding the coefficient JSON.
        #[arg(long)]
        p_file: Option<std::path::PathBuf>,
        #[arg(long, value_enum)]
        op: BundleOp,
        /// Override the construction truncation (default 2j + 2).
        #[arg(long)]
        n_trunc: Option<usize>,
        /// Override the Cech u-order.
        #[arg(long)]
        n_max: Option<usize>,
        /// Override the Cech z-window half-width.
        #[arg(long, allow_negative_numbers = true)]
        z_halfwidth: Option<i64>,
    },
    /// Rank-r splitting sequences: the exact w formula or its bound.
    RankR {
        #[arg(long, allow_hyphen_values = true)]
        tuples: String,
        #[arg(long, value_enum)]
        op: RankROp,
    },
}

struct Failure {
    code: u8,
    payload: String,
}

fn input_error(message: impl std::fmt::Display) -> Failure {
    Failure {
        code: 2,
        payload: json!({ "error": message.to_string() }).to_string(),
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotAdmissible(props) => Failure {
                code: 2,
                payload: json!({ "valid": false, "violations": props }).to_string(),
            },
            other => input_error(other),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            println!("{}", f.payload);
            ExitCode::from(f.code)
        }
    }
}

fn enumeration_cap() -> Result<i64, Failure> {
    match std::env::var(MAX_J_ENV) {
        Ok(v) => v
            .trim()
            .parse::<i64>()
            .map_err(|e| input_error(format!("bad {MAX_J_ENV} value \"{v}\": {e}"))),
        Err(_) => Ok(DEFAULT_J_CAP),
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Enumerate { a, b, format } => cmd_enumerate(a, b, format),
        Command::Invariants { sequence } => cmd_invariants(&sequence),
        Command::Audit {
            claim,
            j,
            epsilon,
            strict,
            format,
        } => cmd_audit(claim, j, epsilon, strict, format),
        Command::Bundle {
            j,
            p,
            p_file,
            op,
            n_trunc,
            n_max,
            z_halfwidth,
        } => cmd_bundle(j, p, p_file, op, n_trunc, n_max, z_halfwidth),
        Command::RankR { tuples, op } => cmd_rank_r(&tuples, op),
    }
}

fn cmd_enumerate(a: i64, b: i64, format: Format) -> Result<u8, Failure> {
    let start = SplittingPair::new(a, b).map_err(Failure::from)?;
    let cap = enumeration_cap()?;
    let stdout = std::io::stdout();

    match format {
        Format::Json => {
            let mut out = stdout.lock();
            let count = visit_maximal(start, cap, |pairs| {
                let seq =
                    AdmissibleSequence::from_pairs(pairs.iter().map(|p| p.as_tuple()).collect())?;
                let line = match seq.report() {
                    Ok(report) => report.to_json(),
                    Err(e) => json!({
                        "sequence": seq,
                        "t": seq.t(),
                        "error": e.to_string(),
                    })
                    .to_string(),
                };
                writeln!(out, "{line}").map_err(|e| Error::Internal(e.to_string()))
            })
            .map_err(Failure::from)?;
            writeln!(out, "{}", json!({ "count": count }))
                .map_err(|e| input_error(format!("write failed: {e}")))?;
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(stdout.lock());
            writer
                .write_record([
                    "sequence",
                    "t",
                    "w",
                    "c2_defect",
                    "z",
                    "j",
                    "epsilon",
                    "split",
                    "error",
                ])
                .map_err(input_error)?;
            let count = visit_maximal(start, cap, |pairs| {
                let seq =
                    AdmissibleSequence::from_pairs(pairs.iter().map(|p| p.as_tuple()).collect())?;
                let opt = |v: Option<i64>| v.map(|x| x.to_string()).unwrap_or_default();
                let record = match seq.report() {
                    Ok(r) => vec![
                        r.sequence.to_string(),
                        r.t.to_string(),
                        r.w.to_string(),
                        r.c2_defect.to_string(),
                        opt(r.z.map(|z| z as i64)),
                        opt(r.j),
                        opt(r.epsilon),
                        r.split.to_string(),
                        String::new(),
                    ],
                    Err(e) => vec![
                        seq.to_string(),
                        seq.t().to_string(),
                        String::new(),
                        seq.c2_defect().to_string(),
                        String::new(),
                        String::new(),
                        String::new(),
                        seq.is_split().to_string(),
                        e.to_string(),
                    ],
                };
                writer
                    .write_record(&record)
                    .map_err(|e| Error::Internal(e.to_string()))
            })
            .map_err(Failure::from)?;
            writer.flush().map_err(input_error)?;
            eprintln!("count: {count}");
        }
    }
    Ok(0)
}

fn cmd_invariants(sequence: &str) -> Result<u8, Failure> {
    let seq = AdmissibleSequence::from_str(sequence).map_err(Failure::from)?;
    let report = seq.report().map_err(Failure::from)?;
    println!("{}", report.to_json());
    Ok(0)
}

fn cmd_audit(
    claim: ClaimArg,
    j: i64,
    epsilon: i64,
    strict: bool,
    format: Format,
) -> Result<u8, Failure> {
    let eps = Epsilon::try_from(epsilon).map_err(Failure::from)?;
    let cap = enumeration_cap()?;
    let report = match claim {
        ClaimArg::Thm02 => blowdown::enumerate::audit_theorem02_capped(j, eps, cap),
        ClaimArg::Thm05 => blowdown::enumerate::audit_theorem05_capped(j, cap),
        ClaimArg::Prop04 => blowdown::enumerate::audit_prop04_capped(j, eps, cap),
        ClaimArg::Lemma11 => blowdown::enumerate::audit_lemma11_capped(j, eps, cap),
    }
    .map_err(Failure::from)?;

    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => print_audit_csv(&report)?,
    }
    if strict && !report.holds() {
        return Ok(3);
    }
    Ok(0)
}

fn print_audit_csv(report: &AuditReport) -> Result<(), Failure> {
    let mut writer = csv::Writer::from_writer(std::io::stdout().lock());
    match report {
        AuditReport::Pairs(a) => {
            writer.write_record(["z", "w"]).map_err(input_error)?;
            for (z, w) in &a.attained {
                writer
                    .write_record([z.to_string(), w.to_string()])
                    .map_err(input_error)?;
            }
        }
        AuditReport::Range(a) => {
            writer.write_record(["k"]).map_err(input_error)?;
            for k in &a.attained {
                writer
                    .write_record([k.to_string()])
                    .map_err(input_error)?;
            }
        }
        AuditReport::Split(a) => {
            writer
                .write_record(["role", "sequence"])
                .map_err(input_error)?;
            let mut write = |role: &str, seqs: &[AdmissibleSequence]| -> Result<(), Failure> {
                for s in seqs {
                    writer
                        .write_record([role.to_string(), s.to_string()])
                        .map_err(input_error)?;
                }
                Ok(())
            };
            write("attained", &a.attained)?;
            write("missing", &a.missing)?;
            write("extra", &a.extra)?;
            write("iii_counterexample", &a.iii_counterexamples)?;
        }
    }
    writer.flush().map_err(input_error)?;
    Ok(())
}

#[derive(Deserialize)]
struct PCoeff {
    i: i64,
    l: i64,
    c: String,
}

fn parse_extension(
    j: i64,
    p: Option<String>,
    p_file: Option<std::path::PathBuf>,
) -> Result<RationalExtension, Failure> {
    let text = match (p, p_file) {
        (Some(inline), None) => inline,
        (None, Some(path)) => std::fs::read_to_string(&path)
            .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => "[]".to_string(),
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    };
    let coeffs: Vec<PCoeff> = serde_json::from_str(&text)
        .map_err(|e| input_error(format!("bad coefficient JSON: {e}")))?;
    let mut parsed = Vec::with_capacity(coeffs.len());
    for c in coeffs {
        let value = Rational::from_str(&c.c)
            .map_err(|e| input_error(format!("bad rational \"{}\": {e}", c.c)))?;
        parsed.push(((c.i, c.l), value));
    }
    RationalExtension::new(j, parsed).map_err(Failure::from)
}

#[allow(clippy::too_many_arguments)]
fn cmd_bundle(
    j: i64,
    p: Option<String>,
    p_file: Option<std::path::PathBuf>,
    op: BundleOp,
    n_trunc: Option<usize>,
    n_max: Option<usize>,
    z_halfwidth: Option<i64>,
) -> Result<u8, Failure> {
    let ext = parse_extension(j, p, p_file)?;
    let matrix = match n_trunc {
        Some(n) => ext
            .transition_matrix_with_truncation(n)
            .map_err(Failure::from)?,
        None => ext.transition_matrix(),
    };
    let options = CechOptions { n_max, z_halfwidth };

    match op {
        BundleOp::Sequence => {
            let seq = matrix.associated_sequence().map_err(Failure::from)?;
            println!("{}", json!({ "sequence": seq, "t": seq.t() }));
            Ok(0)
        }
        BundleOp::Cech => {
            let w = cech_w(&matrix, &options).map_err(Failure::from)?;
            println!("{}", json!({ "w": w }));
            Ok(0)
        }
        BundleOp::Invariants => {
            let report = matrix.invariants().map_err(Failure::from)?;
            println!("{}", report.to_json());
            Ok(0)
        }
        BundleOp::Verify => {
            let verification = matrix.verify(&options).map_err(Failure::from)?;
            println!("{}", verification.to_json());
            Ok(if verification.agree { 0 } else { 4 })
        }
        BundleOp::Matrix => {
            println!("{}", matrix.dump().to_json());
            Ok(0)
        }
    }
}

fn cmd_rank_r(tuples: &str, op: RankROp) -> Result<u8, Failure> {
    let seq = RankRSequence::from_str(tuples).map_err(Failure::from)?;
    let (name, value) = match op {
        RankROp::W => ("w", seq.w_exact().map_err(Failure::from)?),
        RankROp::Bound => ("bound", seq.w_bound()),
    };
    println!(
        "{}",
        json!({ "sequence": seq.to_string(), "op": name, "value": value })
    );
    Ok(0)
}
