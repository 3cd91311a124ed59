//! Goodstein processes.
//!
//! Starting from `x_0 = l`, step `k` writes `x_k` in normal form at base
//! `k + 2`, changes the base to `k + 3` and subtracts one. Zero is absorbing.
//! Three normal forms are supported: the classic hereditary exponential one,
//! and the unnested and nested Ackermannian ones.

mod hereditary;

pub use hereditary::{hereditary_rewrite, HereditaryTerm};

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::ackmath::{BoundedValue, Nat};
use crate::error::{check_base, Result};
use crate::normal_form::{eval_tree, to_tree, Mode};
use crate::ordinal::Ordinal;
use crate::ordinal_map::tree_ordinal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Classic,
    Unnested,
    Nested,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Classic => "classic",
            Variant::Unnested => "unnested",
            Variant::Nested => "nested",
        }
    }

    fn mode(self) -> Option<Mode> {
        match self {
            Variant::Classic => None,
            Variant::Unnested => Some(Mode::Unnested),
            Variant::Nested => Some(Mode::Nested),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum StepValue {
    Exact(Nat),
    TooLarge,
}

impl fmt::Display for StepValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepValue::Exact(v) => write!(f, "{v}"),
            StepValue::TooLarge => f.write_str("too_large"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepRecord {
    pub index: u64,
    /// Always `index + 2`.
    pub base: u64,
    pub value: StepValue,
    pub normal_form: String,
    pub ordinal: Option<Ordinal>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TruncatedReason {
    MaxSteps,
    ValueTooLarge,
}

impl TruncatedReason {
    pub fn as_str(self) -> &'static str {
        match self {
            TruncatedReason::MaxSteps => "max_steps",
            TruncatedReason::ValueTooLarge => "value_too_large",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodsteinTrace {
    pub variant: Variant,
    pub start: Nat,
    pub steps: Vec<StepRecord>,
    pub terminated: bool,
    pub truncated_reason: Option<TruncatedReason>,
}

/// One step at base `k`: base change to `k + 1`, then subtract one.
pub fn step(variant: Variant, value: &Nat, k: u64, bound: &Nat) -> Result<BoundedValue> {
    check_base(k)?;
    if value.is_zero() {
        return Ok(BoundedValue::Exact(Nat::zero()));
    }
    // The base-changed value is positive, so minus one it exceeds `bound`
    // exactly when it exceeds `bound + 1`.
    let raised = bound + 1u32;
    let changed = match variant.mode() {
        None => hereditary_rewrite(value, k, &raised)?,
        Some(mode) => eval_tree(&to_tree(value, k, mode)?, k + 1, &raised)?,
    };
    Ok(match changed {
        BoundedValue::Exact(v) => BoundedValue::Exact(v - 1u32),
        BoundedValue::ExceedsBound => BoundedValue::ExceedsBound,
    })
}

/// Runs the process from `start` for at most `max_steps` steps.
///
/// The trace stops at zero, after `max_steps` steps, or at the first value
/// beyond `bound`, which is recorded as [`StepValue::TooLarge`].
pub fn run(
    variant: Variant,
    start: &Nat,
    max_steps: u64,
    bound: &Nat,
    with_ordinals: bool,
) -> GoodsteinTrace {
    let mut steps = Vec::new();
    let mut value = start.clone();
    let mut index = 0u64;
    let (terminated, truncated_reason) = loop {
        let base = index + 2;
        let (normal_form, next, ordinal) = analyse(variant, &value, base, bound, with_ordinals);
        steps.push(StepRecord {
            index,
            base,
            value: StepValue::Exact(value.clone()),
            normal_form,
            ordinal,
        });
        if value.is_zero() {
            break (true, None);
        }
        if index == max_steps {
            break (false, Some(TruncatedReason::MaxSteps));
        }
        index += 1;
        match next {
            BoundedValue::Exact(v) => value = v,
            BoundedValue::ExceedsBound => {
                steps.push(StepRecord {
                    index,
                    base: index + 2,
                    value: StepValue::TooLarge,
                    normal_form: "too_large".to_string(),
                    ordinal: None,
                });
                break (false, Some(TruncatedReason::ValueTooLarge));
            }
        }
    };
    GoodsteinTrace {
        variant,
        start: start.clone(),
        steps,
        terminated,
        truncated_reason,
    }
}

/// Normal-form text, next value and optional ordinal of `value` at `base`.
fn analyse(
    variant: Variant,
    value: &Nat,
    base: u64,
    bound: &Nat,
    with_ordinals: bool,
) -> (String, BoundedValue, Option<Ordinal>) {
    let raised = bound + 1u32;
    let minus_one = |v: BoundedValue| match v {
        BoundedValue::Exact(v) if !v.is_zero() => BoundedValue::Exact(v - 1u32),
        other => other,
    };
    match variant.mode() {
        None => {
            let term = HereditaryTerm::new(value, base).expect("bases start at 2");
            (
                term.render(base),
                minus_one(term.eval(base + 1, &raised)),
                None,
            )
        }
        Some(mode) => {
            let tree = to_tree(value, base, mode).expect("bases start at 2");
            let next = eval_tree(&tree, base + 1, &raised).expect("bases start at 2");
            let ordinal = with_ordinals.then(|| tree_ordinal(&tree));
            (tree.to_string(), minus_one(next), ordinal)
        }
    }
}

#[derive(Serialize)]
struct TraceJson<'a> {
    variant: &'static str,
    start: String,
    terminated: bool,
    truncated_reason: Option<&'static str>,
    steps: Vec<StepJson<'a>>,
}

#[derive(Serialize)]
struct StepJson<'a> {
    k: u64,
    base: u64,
    value: String,
    normal_form: &'a str,
    ordinal: Option<String>,
}

impl GoodsteinTrace {
    pub fn to_json(&self) -> serde_json::Value {
        let view = TraceJson {
            variant: self.variant.as_str(),
            start: self.start.to_string(),
            terminated: self.terminated,
            truncated_reason: self.truncated_reason.map(TruncatedReason::as_str),
            steps: self
                .steps
                .iter()
                .map(|s| StepJson {
                    k: s.index,
                    base: s.base,
                    value: s.value.to_string(),
                    normal_form: &s.normal_form,
                    ordinal: s.ordinal.as_ref().map(Ordinal::to_string),
                })
                .collect(),
        };
        serde_json::to_value(view).expect("trace serializes")
    }

    /// Exact values in order, stopping at the first oversized one.
    pub fn values(&self) -> impl Iterator<Item = &Nat> {
        self.steps.iter().map_while(|s| match &s.value {
            StepValue::Exact(v) => Some(v),
            StepValue::TooLarge => None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> Nat {
        Nat::from(v)
    }

    fn pow(b: u64, e: usize) -> Nat {
        num_traits::pow(n(b), e)
    }

    fn g1_20() -> Nat {
        pow(3, 27) + 18u32 + 6u32 + 2u32
    }

    fn g2_20() -> Nat {
        pow(4, 256) + 32u32 + 8u32 + 1u32
    }

    #[test]
    fn step_examples() {
        assert_eq!(
            step(Variant::Classic, &n(20), 2, &pow(10, 50)).unwrap(),
            BoundedValue::Exact(g1_20())
        );
        assert_eq!(
            step(Variant::Unnested, &n(1), 2, &n(10)).unwrap(),
            BoundedValue::Exact(n(0))
        );
        assert_eq!(
            step(Variant::Unnested, &n(3), 2, &n(100)).unwrap(),
            BoundedValue::Exact(n(27))
        );
        assert_eq!(
            step(Variant::Unnested, &n(27), 3, &pow(10, 200)).unwrap(),
            BoundedValue::Exact(pow(4, 256) - 1u32)
        );
        assert_eq!(
            step(Variant::Nested, &n(0), 2, &n(1)).unwrap(),
            BoundedValue::Exact(n(0))
        );
        assert!(step(Variant::Classic, &n(3), 1, &n(10)).is_err());
    }

    #[test]
    fn step_bound_is_on_the_result() {
        // 3 -> 28 - 1 = 27 fits a bound of 27 even though 28 does not.
        assert_eq!(
            step(Variant::Unnested, &n(3), 2, &n(27)).unwrap(),
            BoundedValue::Exact(n(27))
        );
        assert_eq!(
            step(Variant::Unnested, &n(3), 2, &n(26)).unwrap(),
            BoundedValue::ExceedsBound
        );
    }

    #[test]
    fn run_examples() {
        let bound = pow(10, 9);
        let t = run(Variant::Unnested, &n(0), 10, &bound, false);
        assert_eq!(t.values().cloned().collect::<Vec<_>>(), vec![n(0)]);
        assert!(t.terminated && t.truncated_reason.is_none());

        let t = run(Variant::Unnested, &n(1), 10, &bound, false);
        assert_eq!(t.values().cloned().collect::<Vec<_>>(), vec![n(1), n(0)]);
        assert!(t.terminated);

        let t = run(Variant::Unnested, &n(3), 4, &pow(10, 1000), false);
        let vals: Vec<_> = t.values().cloned().collect();
        assert_eq!(&vals[..3], &[n(3), n(27), pow(4, 256) - 1u32]);
        assert_eq!(vals.len(), 5);
        assert!(!t.terminated);
        assert_eq!(t.truncated_reason, Some(TruncatedReason::MaxSteps));

        // g_2(20) > 4^256 > 10^154, so the bound has to clear that.
        let t = run(Variant::Classic, &n(20), 3, &pow(10, 200), false);
        let vals: Vec<_> = t.values().cloned().collect();
        assert_eq!(&vals[..3], &[n(20), g1_20(), g2_20()]);
    }

    #[test]
    fn records_index_and_base() {
        // 5 -> 54 -> 2*4^256 - 1, whose next image involves A_1(5, 0).
        let t = run(Variant::Nested, &n(5), 6, &pow(10, 300), true);
        assert_eq!(t.steps.len(), 4);
        for (i, s) in t.steps.iter().enumerate() {
            assert_eq!(s.index, i as u64);
            assert_eq!(s.base, s.index + 2);
            assert_eq!(s.ordinal.is_some(), s.value != StepValue::TooLarge);
        }
        let classic = run(Variant::Classic, &n(5), 3, &pow(10, 300), true);
        assert!(classic.steps.iter().all(|s| s.ordinal.is_none()));
    }

    #[test]
    fn oversized_values_truncate_the_trace() {
        let t = run(Variant::Unnested, &n(16), 5, &pow(10, 1000), false);
        assert_eq!(t.steps.len(), 2);
        assert_eq!(t.steps[1].value, StepValue::TooLarge);
        assert_eq!(t.truncated_reason, Some(TruncatedReason::ValueTooLarge));
        assert!(!t.terminated);
    }

    #[test]
    fn runs_are_deterministic() {
        let bound = pow(10, 500);
        for l in 0..30u64 {
            for v in [Variant::Classic, Variant::Unnested, Variant::Nested] {
                assert_eq!(
                    run(v, &n(l), 8, &bound, true),
                    run(v, &n(l), 8, &bound, true)
                );
            }
        }
    }

    #[test]
    fn small_starts_terminate() {
        // 2 -> 26 at base 3, then the digits wind down.
        let t = run(Variant::Classic, &n(3), 20, &pow(10, 100), false);
        assert!(t.terminated);
        assert_eq!(
            t.values().cloned().collect::<Vec<_>>(),
            vec![n(3), n(3), n(3), n(2), n(1), n(0)]
        );
    }

    #[test]
    fn json_keys() {
        let t = run(Variant::Unnested, &n(3), 2, &pow(10, 1000), true);
        let j = t.to_json();
        assert_eq!(j["variant"], "unnested");
        assert_eq!(j["start"], "3");
        assert_eq!(j["terminated"], false);
        assert_eq!(j["truncated_reason"], "max_steps");
        assert_eq!(j["steps"][1]["k"], 1);
        assert_eq!(j["steps"][1]["base"], 3);
        assert_eq!(j["steps"][1]["value"], "27");
        assert_eq!(j["steps"][1]["normal_form"], "A(1; 0)");
        assert_eq!(j["steps"][1]["ordinal"], "e(1)");
        let keys: Vec<_> = j.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys.len(), 5);
    }
}
