//! Exhaustive sweeps over the normal-form, base-change and ordinal-map lemmas.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, ToPrimitive, Zero};

use super::{sweep, Failure, Outcome, SuiteReport};
use crate::ackmath::{ack_eval, ack_iter, BoundedValue, Nat};
use crate::base_change::{base_change, bc_via_tree};
use crate::goodstein::{self, StepValue, Variant};
use crate::normal_form::{decompose, eval_tree, is_normal_form, to_tree, tree_cmp, Mode};
use crate::ordinal::Ordinal;
use crate::ordinal_map::{o_value, tree_ordinal};

fn n(v: u64) -> Nat {
    Nat::from(v)
}

fn ks_label(ks: &[u64]) -> String {
    let list: Vec<String> = ks.iter().map(u64::to_string).collect();
    format!("k in {{{}}}", list.join(","))
}

fn grid(max_c: u64, ks: &[u64], from: u64) -> Vec<(u64, u64)> {
    ks.iter()
        .flat_map(|&k| (from..=max_c).map(move |c| (k, c)))
        .collect()
}

/// `A_a(k, b)` by the defining recursion on machine words, saturating at
/// `cap + 1`. Independent of the big-integer evaluator.
pub fn naive_ack(a: u32, k: u64, b: u64, cap: u64) -> u64 {
    let over = cap.saturating_add(1);
    if a == 0 {
        let mut v = 1u64;
        for _ in 0..b {
            v = v.saturating_mul(k);
            if v > cap {
                return over;
            }
        }
        return v;
    }
    let mut x = if b == 0 {
        0
    } else {
        naive_ack(a, k, b - 1, cap)
    };
    if x > cap {
        return over;
    }
    for _ in 0..k {
        x = naive_ack(a - 1, k, x, cap);
        if x > cap {
            return over;
        }
    }
    x
}

/// `rows[a][b] = A_a(k, b)` for every value up to `cap`, each row followed by
/// its first value beyond `cap` (saturated to `cap + 1`). A final one-entry
/// row holds the first `A_a(k, 0)` beyond `cap`.
fn ack_table(k: u64, cap: u64) -> Vec<Vec<u64>> {
    let mut rows = Vec::new();
    for a in 0u32.. {
        let mut row = Vec::new();
        for b in 0u64.. {
            let v = naive_ack(a, k, b, cap);
            row.push(v);
            if v > cap {
                break;
            }
        }
        let done = row[0] > cap;
        rows.push(row);
        if done {
            break;
        }
    }
    rows
}

/// Exhaustive search for `(a, b, m, n)` with `A_a(k, b) <= c` satisfying:
/// (1) `c = A_a(k, b) * m + n`, (2) `A_a(k, 0) <= c < A_{a+1}(k, 0)`,
/// (3) `A_a(k, b) <= c < A_a(k, b + 1)`, (4) `n < A_a(k, b)`.
fn nf_solutions(table: &[Vec<u64>], c: u64) -> Vec<(u64, u64, u64, u64)> {
    let mut found = Vec::new();
    for a in 0..table.len() - 1 {
        let row = &table[a];
        let next_index = table[a + 1][0];
        for b in 0..row.len() - 1 {
            let power = row[b];
            if power > c {
                break;
            }
            for m in 0..=c / power {
                let n = c - power * m;
                let ok = row[0] <= c && c < next_index && power <= c && c < row[b + 1] && n < power;
                if ok {
                    found.push((a as u64, b as u64, m, n));
                }
            }
        }
    }
    found
}

fn decomposition_tuple(c: u64, k: u64) -> Option<(u64, u64, u64, u64)> {
    let d = decompose(&n(c), k).ok()?;
    Some((d.a.to_u64()?, d.b.to_u64()?, d.m.to_u64()?, d.n.to_u64()?))
}

/// Normal-form uniqueness against an exhaustive tuple search.
pub fn nf_uniqueness(max_c: u64, ks: &[u64]) -> SuiteReport {
    let tables: Vec<(u64, Vec<Vec<u64>>)> = ks.iter().map(|&k| (k, ack_table(k, max_c))).collect();
    let inputs = grid(max_c, ks, 1);
    sweep(
        "nf-uniqueness",
        format!("1<=c<={max_c}, {}", ks_label(ks)),
        &inputs,
        |&(k, c)| {
            let table = &tables.iter().find(|(kk, _)| *kk == k).expect("table").1;
            let solutions = nf_solutions(table, c);
            let got = decomposition_tuple(c, k);
            Outcome::check(solutions.len() == 1 && Some(solutions[0]) == got, || {
                Failure::new(
                    format!("c={c} k={k}"),
                    format!("unique solution equal to decompose, solutions {solutions:?}"),
                    format!("{got:?}"),
                )
            })
        },
    )
}

/// `eval_tree(to_tree(c)) = c`.
pub fn nf_round_trip(max_c: u64, ks: &[u64], modes: &[Mode]) -> SuiteReport {
    let inputs: Vec<(Mode, u64, u64)> = modes
        .iter()
        .flat_map(|&m| grid(max_c, ks, 0).into_iter().map(move |(k, c)| (m, k, c)))
        .collect();
    sweep(
        "nf-round-trip",
        format!("c<={max_c}, {}, both modes", ks_label(ks)),
        &inputs,
        |&(mode, k, c)| {
            let c = n(c);
            let got = to_tree(&c, k, mode).and_then(|t| eval_tree(&t, k, &c));
            Outcome::check(
                matches!(&got, Ok(BoundedValue::Exact(v)) if *v == c),
                || {
                    Failure::new(
                        format!("c={c} k={k} mode={mode}"),
                        format!("Exact({c})"),
                        format!("{got:?}"),
                    )
                },
            )
        },
    )
}

/// Trees built by `to_tree` pass `is_normal_form`.
pub fn nf_validity(max_c: u64, ks: &[u64], modes: &[Mode]) -> SuiteReport {
    let inputs: Vec<(Mode, u64, u64)> = modes
        .iter()
        .flat_map(|&m| grid(max_c, ks, 0).into_iter().map(move |(k, c)| (m, k, c)))
        .collect();
    sweep(
        "nf-validity",
        format!("c<={max_c}, {}, both modes", ks_label(ks)),
        &inputs,
        |&(mode, k, c)| {
            let ok = to_tree(&n(c), k, mode).is_ok_and(|t| is_normal_form(&t, k));
            Outcome::check(ok, || {
                Failure::new(
                    format!("c={c} k={k} mode={mode}"),
                    "is_normal_form",
                    "false",
                )
            })
        },
    )
}

/// `A_a^l(k, 0)` for `a <= 2`, `0 < l < k` is the normal form `A_a(k, A_a^{l-1}(k, 0))`.
pub fn nf_iterates(ks: &[u64], limit: u64) -> SuiteReport {
    let inputs: Vec<(u64, u64, u64)> = ks
        .iter()
        .flat_map(|&k| (0..=2u64).flat_map(move |a| (1..k).map(move |l| (k, a, l))))
        .collect();
    let limit_nat = n(limit);
    sweep(
        "nf-iterates",
        format!("a<=2, 0<l<k, value<={limit}, {}", ks_label(ks)),
        &inputs,
        |&(k, a, l)| {
            let value = ack_iter(&n(a), k, &Nat::zero(), &n(l), &limit_nat);
            let inner = ack_iter(&n(a), k, &Nat::zero(), &n(l - 1), &limit_nat);
            let (Ok(BoundedValue::Exact(v)), Ok(BoundedValue::Exact(b))) = (value, inner) else {
                return Outcome::Skip;
            };
            let d = decompose(&v, k).expect("positive");
            let tree_ok = to_tree(&v, k, Mode::Unnested).is_ok_and(|t| is_normal_form(&t, k));
            let ok = tree_ok && d.a == n(a) && d.b == b && d.m.is_one() && d.n.is_zero();
            Outcome::check(ok, || {
                Failure::new(
                    format!("a={a} k={k} l={l} value={v}"),
                    format!("normal form A_{a}({k}, {b})*1 + 0"),
                    format!(
                        "({}, {}, {}, {}), tree valid: {tree_ok}",
                        d.a, d.b, d.m, d.n
                    ),
                )
            })
        },
    )
}

/// If `A_a(k, b) * m + n` is a normal form, so is `A_a(k, l)` for `l < b`.
pub fn nf_prefixes(max_c: u64, ks: &[u64]) -> SuiteReport {
    let mut inputs = BTreeSet::new();
    for &k in ks {
        for c in 1..=max_c {
            let (a, b, _, _) = decomposition_tuple(c, k).expect("small decomposition");
            for l in 0..b {
                inputs.insert((k, a, b, l));
            }
        }
    }
    let inputs: Vec<_> = inputs.into_iter().collect();
    sweep(
        "nf-prefixes",
        format!("nodes of c<={max_c}, {}", ks_label(ks)),
        &inputs,
        |&(k, a, b, l)| {
            let v = ack_eval(&n(a), k, &n(l), &n(max_c))
                .expect("valid base")
                .exact()
                .expect("below the node value");
            let d = decompose(&v, k).expect("positive");
            let ok = d.a == n(a) && d.b == n(l) && d.m.is_one() && d.n.is_zero();
            Outcome::check(ok, || {
                Failure::new(
                    format!("node a={a} b={b} k={k}, l={l}"),
                    format!("A_{a}({k}, {l}) in normal form"),
                    format!("({}, {}, {}, {})", d.a, d.b, d.m, d.n),
                )
            })
        },
    )
}

fn images(max_c: u64, k: u64, mode: Mode, cap: &Nat) -> Vec<BoundedValue> {
    use rayon::prelude::*;
    (0..=max_c)
        .into_par_iter()
        .map(|c| base_change(&n(c), k, cap, mode).expect("valid base"))
        .collect()
}

fn cap_label(cap: &Nat) -> String {
    let digits = cap.to_string().len();
    if *cap == num_traits::pow(n(10), digits - 1) {
        format!("1e{}", digits - 1)
    } else {
        cap.to_string()
    }
}

/// `c <= c[k <- k+1]`.
pub fn bc_inflation(max_c: u64, ks: &[u64], mode: Mode, cap: &Nat) -> SuiteReport {
    let parts = ks
        .iter()
        .map(|&k| {
            let mapped = images(max_c, k, mode, cap);
            let inputs: Vec<u64> = (0..=max_c).collect();
            sweep("", String::new(), &inputs, |&c| match &mapped[c as usize] {
                // Only values above the cap are reported as exceeding it.
                BoundedValue::ExceedsBound => Outcome::check(n(c) <= *cap, || {
                    Failure::new(format!("c={c} k={k}"), "c <= bc(c)", "exceeds-bound")
                }),
                BoundedValue::Exact(v) => Outcome::check(n(c) <= *v, || {
                    Failure::new(format!("c={c} k={k}"), format!(">= {c}"), v)
                }),
            })
        })
        .collect();
    SuiteReport::merge(
        &format!("bc-inflation-{mode}"),
        format!("c<={max_c}, {}, cap {}", ks_label(ks), cap_label(cap)),
        parts,
    )
}

/// `c < d` implies `c[k <- k+1] < d[k <- k+1]`, as sortedness of the images.
///
/// When both images exceed the cap they are compared as trees at base `k + 1`.
pub fn bc_monotone(max_c: u64, ks: &[u64], mode: Mode, cap: &Nat) -> SuiteReport {
    let parts = ks
        .iter()
        .map(|&k| {
            let mapped = images(max_c, k, mode, cap);
            let inputs: Vec<u64> = (0..max_c).collect();
            sweep("", String::new(), &inputs, |&c| {
                let input = || format!("c={c} d={} k={k}", c + 1);
                match (&mapped[c as usize], &mapped[c as usize + 1]) {
                    (BoundedValue::Exact(x), BoundedValue::Exact(y)) => {
                        Outcome::check(x < y, || {
                            Failure::new(input(), format!("{x} < {y}"), "not less")
                        })
                    }
                    (BoundedValue::Exact(_), BoundedValue::ExceedsBound) => Outcome::Pass,
                    (BoundedValue::ExceedsBound, BoundedValue::Exact(y)) => Outcome::Fail(
                        Failure::new(input(), format!("bc(c) < {y}"), "bc(c) exceeds-bound"),
                    ),
                    (BoundedValue::ExceedsBound, BoundedValue::ExceedsBound) => {
                        let lhs = to_tree(&n(c), k, mode).expect("valid base");
                        let rhs = to_tree(&n(c + 1), k, mode).expect("valid base");
                        let ord = tree_cmp(&lhs, &rhs);
                        Outcome::check(ord == Ordering::Less, || {
                            Failure::new(input(), "image trees ordered Less", format!("{ord:?}"))
                        })
                    }
                }
            })
        })
        .collect();
    SuiteReport::merge(
        &format!("bc-monotone-{mode}"),
        format!("c<d<={max_c}, {}, cap {}", ks_label(ks), cap_label(cap)),
        parts,
    )
}

/// The numeric and tree routes of base change agree.
pub fn bc_routes_agree(max_c: u64, ks: &[u64], mode: Mode, cap: &Nat) -> SuiteReport {
    let inputs = grid(max_c, ks, 0);
    sweep(
        &format!("bc-routes-{mode}"),
        format!("c<={max_c}, {}, cap {}", ks_label(ks), cap_label(cap)),
        &inputs,
        |&(k, c)| {
            let numeric = base_change(&n(c), k, cap, mode).expect("valid base");
            let tree = bc_via_tree(&n(c), k, cap, mode).expect("valid base");
            Outcome::check(numeric == tree, || {
                Failure::new(
                    format!("c={c} k={k}"),
                    format!("tree route {tree}"),
                    format!("numeric route {numeric}"),
                )
            })
        },
    )
}

/// The image of a normal form is already in `(k+1)`-normal form: rebuilding
/// the tree of `c[k <- k+1]` at base `k + 1` gives back the tree of `c`.
pub fn bc_preserves_nf(max_c: u64, ks: &[u64], mode: Mode, cap: &Nat) -> SuiteReport {
    let inputs = grid(max_c, ks, 0);
    sweep(
        &format!("bc-preserves-nf-{mode}"),
        format!("c<={max_c}, {}, cap {}", ks_label(ks), cap_label(cap)),
        &inputs,
        |&(k, c)| {
            let BoundedValue::Exact(image) = base_change(&n(c), k, cap, mode).expect("valid base")
            else {
                return Outcome::Skip;
            };
            let before = to_tree(&n(c), k, mode).expect("valid base");
            let after = to_tree(&image, k + 1, mode).expect("valid base");
            Outcome::check(before == after, || {
                Failure::new(
                    format!("c={c} k={k}"),
                    before.to_string(),
                    after.to_string(),
                )
            })
        },
    )
}

/// Digits below the base are fixed.
pub fn bc_small_identity(ks: &[u64], mode: Mode) -> SuiteReport {
    let inputs: Vec<(u64, u64)> = ks
        .iter()
        .flat_map(|&k| (0..k).map(move |c| (k, c)))
        .collect();
    let cap = n(1_000_000);
    sweep(
        &format!("bc-small-identity-{mode}"),
        format!("c<k, {}", ks_label(ks)),
        &inputs,
        |&(k, c)| {
            let got = base_change(&n(c), k, &cap, mode).expect("valid base");
            Outcome::check(got == BoundedValue::Exact(n(c)), || {
                Failure::new(format!("c={c} k={k}"), c, got)
            })
        },
    )
}

fn map_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Unnested => "psi",
        Mode::Nested => "chi",
    }
}

fn ordinal_of(c: &Nat, k: u64, mode: Mode) -> Ordinal {
    tree_ordinal(&to_tree(c, k, mode).expect("valid base"))
}

/// `c < d` implies `psi_k c < psi_k d` (or `chi`), as sortedness.
pub fn map_monotone(mode: Mode, max_c: u64, ks: &[u64]) -> SuiteReport {
    use rayon::prelude::*;
    let parts = ks
        .iter()
        .map(|&k| {
            let ords: Vec<Ordinal> = (0..=max_c)
                .into_par_iter()
                .map(|c| ordinal_of(&n(c), k, mode))
                .collect();
            let inputs: Vec<u64> = (0..max_c).collect();
            sweep("", String::new(), &inputs, |&c| {
                let (x, y) = (&ords[c as usize], &ords[c as usize + 1]);
                Outcome::check(x < y, || {
                    Failure::new(
                        format!("c={c} d={} k={k}", c + 1),
                        format!("{x} < {y}"),
                        "not less",
                    )
                })
            })
        })
        .collect();
    SuiteReport::merge(
        &format!("{}-monotone", map_name(mode)),
        format!("c<d<={max_c}, {}", ks_label(ks)),
        parts,
    )
}

/// `psi_{k+1}(c[k <- k+1]) = psi_k c` (or `chi` with nested base change).
pub fn map_invariance(mode: Mode, max_c: u64, ks: &[u64], cap: &Nat) -> SuiteReport {
    let inputs = grid(max_c, ks, 0);
    sweep(
        &format!("{}-invariance", map_name(mode)),
        format!("c<={max_c}, {}, cap {}", ks_label(ks), cap_label(cap)),
        &inputs,
        |&(k, c)| {
            let BoundedValue::Exact(image) = base_change(&n(c), k, cap, mode).expect("valid base")
            else {
                return Outcome::Skip;
            };
            let before = ordinal_of(&n(c), k, mode);
            let after = ordinal_of(&image, k + 1, mode);
            Outcome::check(before == after, || {
                Failure::new(format!("c={c} k={k}"), &before, &after)
            })
        },
    )
}

/// `psi_{k+1}(c[k <- k+1] - 1) >= (psi_k c)[k]` (or `chi`).
pub fn map_majorization(mode: Mode, max_c: u64, ks: &[u64], cap: &Nat) -> SuiteReport {
    let inputs = grid(max_c, ks, 1);
    sweep(
        &format!("{}-majorization", map_name(mode)),
        format!("1<=c<={max_c}, {}, cap {}", ks_label(ks), cap_label(cap)),
        &inputs,
        |&(k, c)| {
            let BoundedValue::Exact(image) = base_change(&n(c), k, cap, mode).expect("valid base")
            else {
                return Outcome::Skip;
            };
            let lhs = ordinal_of(&(image - 1u32), k + 1, mode);
            let rhs = ordinal_of(&n(c), k, mode).fund(k);
            Outcome::check(lhs >= rhs, || {
                Failure::new(format!("c={c} k={k}"), format!(">= {rhs}"), &lhs)
            })
        },
    )
}

/// Epsilon subscripts of `psi` are finite; `chi` nests epsilons no deeper
/// than the index nesting of the nested normal form.
pub fn map_range(max_c: u64, ks: &[u64]) -> SuiteReport {
    let inputs = grid(max_c, ks, 0);
    sweep(
        "map-range",
        format!("c<={max_c}, {}", ks_label(ks)),
        &inputs,
        |&(k, c)| {
            let c = n(c);
            let psi = ordinal_of(&c, k, Mode::Unnested);
            let tree = to_tree(&c, k, Mode::Nested).expect("valid base");
            let chi = tree_ordinal(&tree);
            let ok = psi.has_finite_eps_subscripts() && chi.eps_depth() <= index_depth(&tree);
            Outcome::check(ok, || {
                Failure::new(
                    format!("c={c} k={k}"),
                    format!("finite psi subscripts, chi depth <= {}", index_depth(&tree)),
                    format!("psi {psi}, chi {chi} (depth {})", chi.eps_depth()),
                )
            })
        },
    )
}

/// Nesting depth of indices, counting each monomial as one level.
fn index_depth(t: &crate::normal_form::AckTerm) -> usize {
    use crate::normal_form::AckIndex;
    t.monomials()
        .iter()
        .map(|m| {
            let inner = match &m.index {
                AckIndex::Literal(_) => 0,
                AckIndex::Term(i) => index_depth(i),
            };
            (1 + inner).max(index_depth(&m.arg))
        })
        .max()
        .unwrap_or(0)
}

/// Ordinals strictly decrease along every recorded Goodstein trace; `0` and
/// `1` terminate.
pub fn goodstein_descent(mode: Mode, max_l: u64, steps: u64, cap: &Nat) -> SuiteReport {
    let variant = match mode {
        Mode::Unnested => Variant::Unnested,
        Mode::Nested => Variant::Nested,
    };
    let inputs: Vec<u64> = (0..=max_l).collect();
    sweep(
        &format!("goodstein-descent-{mode}"),
        format!("l<={max_l}, {steps} steps, cap {}", cap_label(cap)),
        &inputs,
        |&l| {
            let trace = goodstein::run(variant, &n(l), steps, cap, true);
            if l <= 1 {
                let values: Vec<String> = trace.steps.iter().map(|s| s.value.to_string()).collect();
                let expected: Vec<String> = (0..=l).rev().map(|v| v.to_string()).collect();
                if !trace.terminated || values != expected {
                    return Outcome::Fail(Failure::new(
                        format!("l={l}"),
                        format!("terminated trace {expected:?}"),
                        format!("{values:?}, terminated={}", trace.terminated),
                    ));
                }
            }
            let ords: Vec<(u64, &Ordinal)> = trace
                .steps
                .iter()
                .filter(|s| matches!(s.value, StepValue::Exact(_)))
                .map(|s| (s.index, s.ordinal.as_ref().expect("ordinals requested")))
                .collect();
            for pair in ords.windows(2) {
                let ((i, x), (_, y)) = (pair[0], pair[1]);
                if y >= x {
                    return Outcome::Fail(Failure::new(
                        format!("l={l} step={i}"),
                        format!("o(l,{}) < {x}", i + 1),
                        y,
                    ));
                }
            }
            Outcome::Pass
        },
    )
}

/// `o(A_l(2, 0), 0) = e_l` for `l` in `{1, 2}`.
pub fn o_value_anchor(cap: &Nat) -> SuiteReport {
    let inputs = [1u64, 2];
    sweep(
        "o-value-anchor",
        format!("l in {{1,2}}, cap {}", cap_label(cap)),
        &inputs,
        |&l| {
            let BoundedValue::Exact(start) =
                ack_eval(&n(l), 2, &Nat::zero(), cap).expect("valid base")
            else {
                return Outcome::Skip;
            };
            let expected = Ordinal::eps(&Ordinal::from(l));
            let got = o_value(&start, 0, Mode::Unnested, cap);
            Outcome::check(matches!(&got, Ok(Some(o)) if *o == expected), || {
                Failure::new(format!("l={l}"), &expected, format!("{got:?}"))
            })
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn naive_oracle_matches_known_values() {
        assert_eq!(naive_ack(0, 2, 3, 100), 8);
        assert_eq!(naive_ack(1, 2, 0, 100), 2);
        assert_eq!(naive_ack(1, 2, 1, 100), 16);
        assert_eq!(naive_ack(1, 3, 0, 100), 27);
        assert_eq!(naive_ack(1, 2, 2, 100), 101);
        assert_eq!(naive_ack(2, 2, 0, 1 << 20), (1 << 20) + 1);
    }

    #[test]
    fn exhaustive_search_finds_known_decompositions() {
        let t = ack_table(2, 100);
        assert_eq!(nf_solutions(&t, 2), vec![(1, 0, 1, 0)]);
        assert_eq!(nf_solutions(&t, 20), vec![(1, 1, 1, 4)]);
        assert_eq!(nf_solutions(&ack_table(3, 100), 27), vec![(1, 0, 1, 0)]);
    }

    #[test]
    fn small_sweeps_pass() {
        let cap = num_traits::pow(n(10), 1000);
        let ks = [2, 3];
        for r in [
            nf_uniqueness(300, &ks),
            nf_round_trip(300, &ks, &[Mode::Unnested, Mode::Nested]),
            nf_prefixes(300, &ks),
            nf_iterates(&ks, 1_000_000),
            bc_monotone(300, &ks, Mode::Nested, &cap),
            bc_preserves_nf(300, &ks, Mode::Unnested, &cap),
            map_monotone(Mode::Unnested, 300, &ks),
            map_invariance(Mode::Nested, 150, &ks, &cap),
            goodstein_descent(Mode::Unnested, 20, 10, &cap),
            o_value_anchor(&num_traits::pow(n(10), 100_000)),
        ] {
            assert!(r.passed(), "{r}: {:?}", r.failures.first());
            assert!(r.cases > 0, "{r}");
        }
    }

    #[test]
    fn majorization_fails_at_one() {
        // psi_2(1) = e_0 while 1[2 <- 3] - 1 = 0.
        let cap = n(1000);
        let r = map_majorization(Mode::Unnested, 1, &[2], &cap);
        assert_eq!(r.failures.len(), 1);
        assert_eq!(r.failures[0].input, "c=1 k=2");
    }
}
