//! Verification sweeps over the lemmas and the ordinal kernel.
//!
//! Every suite returns a [`SuiteReport`]. Inputs are generated up front (with
//! a seeded ChaCha8 stream for the sampled suites), checked in parallel, and
//! collected in input order, so a fixed seed gives identical reports.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_json::json;

use crate::ackmath::Nat;

pub mod lemmas;
pub mod ordinals;

/// One failed case with a reproducer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub got: String,
}

impl Failure {
    pub fn new(
        input: impl fmt::Display,
        expected: impl fmt::Display,
        got: impl fmt::Display,
    ) -> Self {
        Failure {
            input: input.to_string(),
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub bound: String,
    /// Cases actually checked.
    pub cases: u64,
    /// Cases skipped because a value could not be materialized.
    pub skipped: u64,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "suite": self.suite,
            "bound": self.bound,
            "cases": self.cases,
            "failures": self.failures.iter().map(|f| json!({
                "input": f.input,
                "expected": f.expected,
                "got": f.got,
            })).collect::<Vec<_>>(),
            "elapsed_ms": self.elapsed.as_millis() as u64,
        })
    }

    /// Merges reports of the same property over different parameters.
    pub fn merge(suite: &str, bound: String, parts: Vec<SuiteReport>) -> SuiteReport {
        let mut out = SuiteReport {
            suite: suite.to_string(),
            bound,
            cases: 0,
            skipped: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
        };
        for p in parts {
            out.cases += p.cases;
            out.skipped += p.skipped;
            out.failures.extend(p.failures);
            out.elapsed += p.elapsed;
        }
        out
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} [{}]: {} cases, {} skipped, {} failures, {} ms",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite,
            self.bound,
            self.cases,
            self.skipped,
            self.failures.len(),
            self.elapsed.as_millis()
        )
    }
}

/// Result of checking one input.
pub enum Outcome {
    Pass,
    Skip,
    Fail(Failure),
}

impl Outcome {
    /// `Pass` if `ok`, otherwise the failure built by `fail`.
    pub fn check(ok: bool, fail: impl FnOnce() -> Failure) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(fail())
        }
    }
}

/// Checks every input in parallel and collects the report in input order.
pub fn sweep<T, F>(suite: &str, bound: String, inputs: &[T], check: F) -> SuiteReport
where
    T: Sync,
    F: Fn(&T) -> Outcome + Sync,
{
    let start = Instant::now();
    let outcomes: Vec<Outcome> = inputs.par_iter().map(&check).collect();
    let mut report = SuiteReport {
        suite: suite.to_string(),
        bound,
        cases: 0,
        skipped: 0,
        failures: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for o in outcomes {
        match o {
            Outcome::Pass => report.cases += 1,
            Outcome::Skip => report.skipped += 1,
            Outcome::Fail(f) => {
                report.cases += 1;
                report.failures.push(f);
            }
        }
    }
    report.elapsed = start.elapsed();
    report
}

/// Parameters of the lemma sweeps.
#[derive(Debug, Clone)]
pub struct LemmaConfig {
    /// Exhaustive upper bound on the numbers swept.
    pub bound: u64,
    /// Bases run from 2 to `k_max`.
    pub k_max: u64,
    /// Values above this are not materialized; such cases are skipped.
    pub cap: Nat,
}

impl LemmaConfig {
    pub fn bases(&self) -> Vec<u64> {
        (2..=self.k_max).collect()
    }
}

/// Sample counts of the ordinal suites.
#[derive(Debug, Clone, Copy)]
pub struct OrdinalConfig {
    pub seed: u64,
    pub triples: usize,
    pub fund_samples: usize,
    pub bachmann_samples: usize,
    pub chains: usize,
    pub misc_samples: usize,
}

impl OrdinalConfig {
    pub fn with_seed(seed: u64) -> Self {
        OrdinalConfig {
            seed,
            triples: 10_000,
            fund_samples: 10_000,
            bachmann_samples: 1_000,
            chains: 1_000,
            misc_samples: 2_000,
        }
    }
}

/// Every lemma suite.
pub fn lemma_suites(cfg: &LemmaConfig) -> Vec<SuiteReport> {
    use crate::normal_form::Mode;
    let ks = cfg.bases();
    let n = cfg.bound;
    let half = (n / 2).max(1);
    let modes = [Mode::Unnested, Mode::Nested];
    let mut out = vec![
        lemmas::nf_uniqueness(n, &ks),
        lemmas::nf_round_trip(n, &ks, &modes),
        lemmas::nf_validity(n, &ks, &modes),
        lemmas::nf_iterates(&ks, 1_000_000),
        lemmas::nf_prefixes(n, &ks),
    ];
    for mode in modes {
        out.push(lemmas::bc_inflation(n, &ks, mode, &cfg.cap));
        out.push(lemmas::bc_monotone(n, &ks, mode, &cfg.cap));
        out.push(lemmas::bc_routes_agree(n, &ks, mode, &cfg.cap));
        out.push(lemmas::bc_preserves_nf(n, &ks, mode, &cfg.cap));
        out.push(lemmas::bc_small_identity(&ks, mode));
    }
    out.push(lemmas::map_monotone(Mode::Unnested, n, &ks));
    out.push(lemmas::map_monotone(Mode::Nested, half, &ks));
    out.push(lemmas::map_invariance(Mode::Unnested, n, &ks, &cfg.cap));
    out.push(lemmas::map_invariance(Mode::Nested, half, &ks, &cfg.cap));
    out.push(lemmas::map_majorization(Mode::Unnested, n, &ks, &cfg.cap));
    out.push(lemmas::map_majorization(Mode::Nested, half, &ks, &cfg.cap));
    out.push(lemmas::map_range(n, &ks));
    for mode in modes {
        out.push(lemmas::goodstein_descent(mode, 50, 15, &cfg.cap));
    }
    out.push(lemmas::o_value_anchor(&cfg.cap));
    out
}

/// Every ordinal suite.
pub fn ordinal_suites(cfg: &OrdinalConfig) -> Vec<SuiteReport> {
    vec![
        ordinals::order(cfg.seed, cfg.triples),
        ordinals::fund_decreasing(cfg.seed, cfg.fund_samples),
        ordinals::fund_fixpoint(cfg.seed, cfg.misc_samples),
        ordinals::bachmann(cfg.seed, cfg.bachmann_samples),
        ordinals::majorize(cfg.seed, cfg.chains),
        ordinals::add_laws(cfg.seed, cfg.misc_samples),
        ordinals::canonical_closure(cfg.seed, cfg.misc_samples),
        ordinals::text_round_trip(cfg.seed, cfg.misc_samples),
        ordinals::step_down_monotone(cfg.seed, cfg.misc_samples),
    ]
}
