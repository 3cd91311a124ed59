use std::process::ExitCode;

use ackgoodstein::base_change::base_change;
use ackgoodstein::goodstein::{self, Variant};
use ackgoodstein::normal_form::to_tree;
use ackgoodstein::ordinal::{descent, Ordinal};
use ackgoodstein::ordinal_map::{chi, psi};
use ackgoodstein::verify::{self, LemmaConfig, OrdinalConfig, SuiteReport};
use ackgoodstein::{ack_eval, Error, Mode, Nat};
use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{ToPrimitive, Zero};
use serde_json::json;

const DEFAULT_BOUND: &str = "1e100000";

#[derive(Parser)]
#[command(
    name = "ackgoodstein",
    version,
    about = "Ackermannian Goodstein sequences and their ordinals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate A_a(k, b).
    Ack {
        a: String,
        k: u64,
        b: String,
        #[arg(long, default_value = DEFAULT_BOUND)]
        bound: String,
    },
    /// Print the k-normal form of c.
    Nf {
        c: String,
        k: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Unnested)]
        mode: ModeArg,
        #[arg(long)]
        json: bool,
    },
    /// Base change c[k <- k+1].
    Bc {
        c: String,
        k: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Unnested)]
        mode: ModeArg,
        #[arg(long, default_value = DEFAULT_BOUND)]
        bound: String,
    },
    /// Run a Goodstein process from l.
    Goodstein {
        l: String,
        #[arg(long, value_enum, default_value_t = VariantArg::Unnested)]
        variant: VariantArg,
        #[arg(long, default_value_t = 50)]
        max_steps: u64,
        #[arg(long, default_value = DEFAULT_BOUND)]
        bound: String,
        /// Add the ordinal of each value (not available for classic).
        #[arg(long)]
        ordinals: bool,
        #[arg(long)]
        json: bool,
    },
    /// Ordinal queries.
    Ordinal {
        #[command(subcommand)]
        query: OrdinalQuery,
    },
    /// Run the verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Exhaustive bound for the lemma sweeps.
        #[arg(long, default_value_t = 500)]
        bound: u64,
        #[arg(long, default_value_t = 3)]
        k_max: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Values above this are not materialized.
        #[arg(long, default_value = "1e10000")]
        cap: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum OrdinalQuery {
    /// psi_k c
    Psi { k: u64, c: String },
    /// chi_k c
    Chi { k: u64, c: String },
    /// alpha[k]
    Fund { alpha: String, k: u64 },
    /// Compare two ordinals: LT, EQ or GT.
    Cmp { alpha: String, beta: String },
    /// alpha, alpha[1], alpha[1][2], ...
    Descent {
        alpha: String,
        #[arg(long, default_value_t = 10)]
        max_steps: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Unnested,
    Nested,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Unnested => Mode::Unnested,
            ModeArg::Nested => Mode::Nested,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Classic,
    Unnested,
    Nested,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Classic => Variant::Classic,
            VariantArg::Unnested => Variant::Unnested,
            VariantArg::Nested => Variant::Nested,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Lemmas,
    Ordinals,
    All,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Decimal, or mantissa-exponent shorthand such as `1e500`.
fn parse_nat(s: &str) -> Result<Nat, Failure> {
    let bad = || Failure::Usage(format!("invalid natural number '{s}'"));
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    match s.split_once(['e', 'E']) {
        Some((mantissa, exp)) if digits(mantissa) && digits(exp) => {
            let exp: usize = exp.parse().map_err(|_| bad())?;
            let mantissa: Nat = mantissa.parse().map_err(|_| bad())?;
            Ok(mantissa * num_traits::pow(Nat::from(10u32), exp))
        }
        None if digits(s) => s.parse().map_err(|_| bad()),
        _ => Err(bad()),
    }
}

fn parse_ordinal(s: &str) -> Result<Ordinal, Failure> {
    s.parse()
        .map_err(|e: Error| Failure::Usage(format!("invalid ordinal '{s}': {e}")))
}

fn print_json(v: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("JSON serializes")
    );
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Ack { a, k, b, bound } => {
            let v = ack_eval(&parse_nat(&a)?, k, &parse_nat(&b)?, &parse_nat(&bound)?)?;
            println!("{v}");
        }
        Command::Nf { c, k, mode, json } => {
            let c = parse_nat(&c)?;
            let mode = Mode::from(mode);
            let tree = to_tree(&c, k, mode)?;
            if json {
                print_json(&json!({
                    "c": c.to_string(),
                    "k": k,
                    "mode": mode.as_str(),
                    "normal_form": tree.to_string(),
                    "tree": tree.to_json(),
                }));
            } else {
                println!("{tree}");
            }
        }
        Command::Bc { c, k, mode, bound } => {
            let v = base_change(&parse_nat(&c)?, k, &parse_nat(&bound)?, mode.into())?;
            println!("{v}");
        }
        Command::Goodstein {
            l,
            variant,
            max_steps,
            bound,
            ordinals,
            json,
        } => {
            let variant = Variant::from(variant);
            if ordinals && variant == Variant::Classic {
                return Err(Failure::Usage(
                    "--ordinals is not available for the classic variant".into(),
                ));
            }
            let trace = goodstein::run(
                variant,
                &parse_nat(&l)?,
                max_steps,
                &parse_nat(&bound)?,
                ordinals,
            );
            if json {
                print_json(&trace.to_json());
            } else {
                for s in &trace.steps {
                    let mut line = format!(
                        "k={} base={} value={} nf={}",
                        s.index, s.base, s.value, s.normal_form
                    );
                    if let Some(o) = &s.ordinal {
                        line.push_str(&format!(" ordinal={o}"));
                    }
                    println!("{line}");
                }
                match trace.truncated_reason {
                    None => println!("terminated"),
                    Some(r) => println!("truncated: {}", r.as_str()),
                }
            }
        }
        Command::Ordinal { query } => match query {
            OrdinalQuery::Psi { k, c } => println!("{}", psi(k, &parse_nat(&c)?)?),
            OrdinalQuery::Chi { k, c } => println!("{}", chi(k, &parse_nat(&c)?)?),
            OrdinalQuery::Fund { alpha, k } => println!("{}", parse_ordinal(&alpha)?.fund(k)),
            OrdinalQuery::Cmp { alpha, beta } => {
                let ord = parse_ordinal(&alpha)?.cmp(&parse_ordinal(&beta)?);
                println!(
                    "{}",
                    match ord {
                        std::cmp::Ordering::Less => "LT",
                        std::cmp::Ordering::Equal => "EQ",
                        std::cmp::Ordering::Greater => "GT",
                    }
                );
            }
            OrdinalQuery::Descent { alpha, max_steps } => {
                for o in descent(&parse_ordinal(&alpha)?, max_steps) {
                    println!("{o}");
                }
            }
        },
        Command::Verify {
            suite,
            bound,
            k_max,
            seed,
            cap,
            json,
        } => {
            if bound == 0 {
                return Err(Failure::Usage("--bound must be positive".into()));
            }
            if k_max < 2 {
                return Err(Failure::Usage("--k-max must be at least 2".into()));
            }
            let cap = parse_nat(&cap)?;
            if cap.is_zero() || cap.to_u64().is_some_and(|c| c < bound) {
                return Err(Failure::Usage("--cap must be at least --bound".into()));
            }
            let mut reports: Vec<SuiteReport> = Vec::new();
            if suite != SuiteArg::Ordinals {
                reports.extend(verify::lemma_suites(&LemmaConfig { bound, k_max, cap }));
            }
            if suite != SuiteArg::Lemmas {
                reports.extend(verify::ordinal_suites(&OrdinalConfig::with_seed(seed)));
            }
            if json {
                print_json(&serde_json::Value::Array(
                    reports.iter().map(SuiteReport::to_json).collect(),
                ));
            } else {
                for r in &reports {
                    println!("{r}");
                    for f in &r.failures {
                        println!(
                            "    input {} | expected {} | got {}",
                            f.input, f.expected, f.got
                        );
                    }
                }
            }
            if !reports.iter().all(SuiteReport::passed) {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
