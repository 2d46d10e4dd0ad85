//! Command-line surface: decomposition onto generator systems,
//! invariant classification with certificates, rank tables, and the
//! structure-theorem self-verification suite.
//!
//! Every run writes exactly one JSON document to stdout; diagnostics go to
//! stderr. Exit codes: 0 on success, 1 for invalid input (the document is
//! then an error object), 2 for an internal invariant failure.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use hodgering::classify::{classify, Functional};
use hodgering::error::Error;
use hodgering::exactring::Polynomial;
use hodgering::hodge::{self, HodgePolynomial};
use hodgering::poincare::{self, PoincarePolynomial};
use hodgering::verify::{run_all, VerifyConfig};

const DEFAULT_DEGREE_CAP: u32 = 32;

#[derive(Parser)]
#[command(
    name = "hodgering",
    version,
    about = "Exact computer algebra for graded rings of Hodge, Betti and characteristic numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose an element onto a generator system.
    Decompose {
        /// Target generators: abc and els take Hodge tables, wxyz and
        /// lecp2 take Betti vectors.
        #[arg(long)]
        basis: Basis,
        /// Input JSON file; stdin when omitted or "-".
        #[arg(short, long)]
        input: Option<PathBuf>,
        /// Override the degree-two surface generator for the els basis
        /// (a Hodge table of dimension 2 with signature ±1).
        #[arg(long)]
        surface: Option<PathBuf>,
    },
    /// Classify a functional and emit its report with certificates.
    Classify {
        /// Input JSON file; stdin when omitted or "-".
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
    /// Print the rank table of all four graded rings.
    Ranks {
        #[arg(long)]
        max_degree: u32,
    },
    /// Run the structure-theorem verification suite.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
        /// Sample count for the randomized checks.
        #[arg(long, default_value_t = 100)]
        samples: u32,
    },
}

#[derive(ValueEnum, Clone, Copy)]
enum Basis {
    Abc,
    Els,
    Wxyz,
    Lecp2,
}

fn degree_cap() -> u32 {
    std::env::var("HODGERING_MAX_DEGREE")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_DEGREE_CAP)
}

fn check_degree(n: u32) -> Result<(), Error> {
    let cap = degree_cap();
    if n > cap {
        return Err(Error::Input(format!(
            "degree {n} exceeds the configured cap {cap} (set HODGERING_MAX_DEGREE to raise it)"
        )));
    }
    Ok(())
}

fn read_input(path: &Option<PathBuf>) -> Result<Value, Error> {
    let raw = match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", p.display())))?,
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Input(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    serde_json::from_str(&raw).map_err(|e| Error::Input(format!("malformed JSON: {e}")))
}

/// Render a generator polynomial as a flat coefficient object keyed by
/// monomial.
fn poly_to_coefficients(q: &Polynomial) -> Value {
    let mut map = Map::new();
    for (m, s) in q.terms() {
        let mut parts = Vec::new();
        for (i, e) in m.iter() {
            let name = q.vars().name(i);
            if e == 1 {
                parts.push(name.to_string());
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        let key = if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        };
        let value = match s {
            hodgering::exactring::Scalar::Int(v) => hodgering_bigint_json(v),
            hodgering::exactring::Scalar::Rat(_) => unreachable!("decompositions are integral"),
        };
        map.insert(key, value);
    }
    Value::Object(map)
}

fn hodgering_bigint_json(v: &num_bigint::BigInt) -> Value {
    const SAFE_MAX: i64 = 9_007_199_254_740_991;
    match i64::try_from(v.clone()) {
        Ok(n) if n.abs() <= SAFE_MAX => Value::from(n),
        _ => Value::from(v.to_string()),
    }
}

fn run_decompose(
    basis: Basis,
    input: &Option<PathBuf>,
    surface: &Option<PathBuf>,
) -> Result<Value, Error> {
    let doc = read_input(input)?;
    match basis {
        Basis::Abc | Basis::Els => {
            let h = HodgePolynomial::from_json(&doc)?;
            check_degree(h.dimension())?;
            let q = match basis {
                Basis::Abc => hodge::decompose_abc(&h)?,
                Basis::Els => match surface {
                    None => hodge::decompose_els_default(&h)?,
                    Some(p) => {
                        let s = HodgePolynomial::from_json(&read_input(&Some(p.clone()))?)?;
                        hodge::decompose_els(&h, &s)?
                    }
                },
                _ => unreachable!(),
            };
            Ok(poly_to_coefficients(&q))
        }
        Basis::Wxyz | Basis::Lecp2 => {
            let p = PoincarePolynomial::from_json(&doc)?;
            check_degree(p.dimension())?;
            let q = match basis {
                Basis::Wxyz => poincare::decompose_wxyz(&p)?.poly().clone(),
                Basis::Lecp2 => poincare::kahler_decompose(&p)?,
                _ => unreachable!(),
            };
            Ok(poly_to_coefficients(&q))
        }
    }
}

fn run_classify(input: &Option<PathBuf>) -> Result<Value, Error> {
    let doc = read_input(input)?;
    let f = Functional::from_json(&doc)?;
    check_degree(f.dimension)?;
    Ok(classify(&f)?.to_json())
}

fn run_ranks(max_degree: u32) -> Result<Value, Error> {
    check_degree(max_degree)?;
    let range = 0..=max_degree;
    Ok(json!({
        "max_degree": max_degree,
        "hodge": range.clone().map(|n| hodge::hodge_rank(n) as u64).collect::<Vec<_>>(),
        "poincare": range.clone().map(|n| poincare::poincare_rank(n) as u64).collect::<Vec<_>>(),
        "hirzebruch": range.clone().map(|n| hodge::hir_rank(n) as u64).collect::<Vec<_>>(),
        "chern_hodge": range.map(|n| hodgering::chernhodge::ch_rank(n) as u64).collect::<Vec<_>>(),
    }))
}

fn run_verify(max_degree: u32, samples: u32) -> Result<(Value, bool), Error> {
    check_degree(max_degree)?;
    let cfg = VerifyConfig {
        max_degree,
        samples,
        ..VerifyConfig::default()
    };
    let outcomes = run_all(&cfg);
    let all_passed = outcomes.iter().all(|o| o.passed);
    let checks: Vec<Value> = outcomes
        .iter()
        .map(|o| {
            json!({
                "tag": o.tag,
                "passed": o.passed,
                "detail": o.detail,
            })
        })
        .collect();
    Ok((
        json!({
            "max_degree": max_degree,
            "samples": samples,
            "checks": checks,
            "all_passed": all_passed,
        }),
        all_passed,
    ))
}

fn error_document(e: &Error) -> Value {
    json!({
        "error": {
            "kind": if e.is_internal() { "internal" } else { "input" },
            "message": e.to_string(),
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<(Value, u8), Error> = match &cli.command {
        Command::Decompose {
            basis,
            input,
            surface,
        } => run_decompose(*basis, input, surface).map(|v| (v, 0)),
        Command::Classify { input } => run_classify(input).map(|v| (v, 0)),
        Command::Ranks { max_degree } => run_ranks(*max_degree).map(|v| (v, 0)),
        Command::Verify {
            max_degree,
            samples,
        } => run_verify(*max_degree, *samples)
            .map(|(v, ok)| (v, if ok { 0 } else { 2 })),
    };
    match result {
        Ok((doc, code)) => {
            println!("{doc}");
            ExitCode::from(code)
        }
        Err(e) => {
            println!("{}", error_document(&e));
            eprintln!("error: {e}");
            ExitCode::from(if e.is_internal() { 2 } else { 1 })
        }
    }
}
