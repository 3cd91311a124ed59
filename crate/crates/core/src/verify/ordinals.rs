//! Seeded property checks on the ordinal notation system.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{sweep, Failure, Outcome, SuiteReport};
use crate::ackmath::Nat;
use crate::ordinal::{descent, omega_tower, step_down_reachable, Ordinal, OrdinalGen, Reach};

/// An independent stream per suite, all derived from the one seed.
fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn small_gen() -> OrdinalGen {
    OrdinalGen {
        max_depth: 2,
        max_coeff: 3,
        max_eps_nesting: 1,
        max_monomials: 2,
    }
}

/// Trichotomy, antisymmetry and transitivity of `cmp`.
pub fn order(seed: u64, samples: usize) -> SuiteReport {
    let gen = OrdinalGen::default();
    let mut r = rng(seed, 1);
    let inputs: Vec<[Ordinal; 3]> = (0..samples)
        .map(|_| [gen.sample(&mut r), gen.sample(&mut r), gen.sample(&mut r)])
        .collect();
    sweep(
        "ord-order",
        format!("{samples} triples, seed {seed}"),
        &inputs,
        |[a, b, c]| {
            let ab = a.cmp(b);
            let exactly_one = [a < b, a == b, a > b].iter().filter(|&&x| x).count() == 1;
            let antisymmetric = b.cmp(a) == ab.reverse() && (ab == Ordering::Equal) == (a == b);
            let transitive = !(a <= b && b <= c) || a <= c;
            let strict = !(a < b && b < c) || a < c;
            Outcome::check(exactly_one && antisymmetric && transitive && strict, || {
                Failure::new(
                    format!("a={a} b={b} c={c}"),
                    "total order",
                    format!(
                        "trichotomy {exactly_one}, antisymmetry {antisymmetric}, transitivity {}",
                        transitive && strict
                    ),
                )
            })
        },
    )
}

/// `a[k] < a` for `a > 0` and `a[k] <= a[k+1]`.
pub fn fund_decreasing(seed: u64, samples: usize) -> SuiteReport {
    let gen = OrdinalGen::default();
    let mut r = rng(seed, 2);
    let inputs: Vec<Ordinal> = (0..samples).map(|_| gen.sample_positive(&mut r)).collect();
    sweep(
        "ord-fund-decreasing",
        format!("{samples} samples, k in 1..=4, seed {seed}"),
        &inputs,
        |a| {
            let seq: Vec<Ordinal> = (1..=4).map(|k| a.fund(k)).collect();
            if let Some(k) = (1..=3).find(|&k| seq[k - 1] >= *a) {
                return Outcome::Fail(Failure::new(
                    format!("a={a} k={k}"),
                    format!("< {a}"),
                    &seq[k - 1],
                ));
            }
            if let Some(k) = (1..=3).find(|&k| seq[k - 1] > seq[k]) {
                return Outcome::Fail(Failure::new(
                    format!("a={a} k={k}"),
                    format!("a[{k}] <= a[{}] = {}", k + 1, seq[k]),
                    &seq[k - 1],
                ));
            }
            Outcome::Pass
        },
    )
}

/// `a[k] = a` iff `a = 0`.
pub fn fund_fixpoint(seed: u64, samples: usize) -> SuiteReport {
    let gen = OrdinalGen::default();
    let mut r = rng(seed, 3);
    let mut inputs: Vec<(Ordinal, u64)> = (0..samples)
        .map(|_| (gen.sample(&mut r), r.gen_range(0..=4)))
        .collect();
    inputs.push((Ordinal::zero(), 3));
    sweep(
        "ord-fund-fixpoint",
        format!("{samples} samples, seed {seed}"),
        &inputs,
        |(a, k)| {
            let fixed = a.fund(*k) == *a;
            Outcome::check(fixed == a.is_zero(), || {
                Failure::new(
                    format!("a={a} k={k}"),
                    format!("fixed point iff zero ({})", a.is_zero()),
                    fixed,
                )
            })
        },
    )
}

/// Candidates for an ordinal strictly between `lo` and `hi`.
fn between<R: Rng>(r: &mut R, lo: &Ordinal, hi: &Ordinal, n: u64) -> Option<Ordinal> {
    let gen = OrdinalGen::default();
    let small = small_gen();
    for _ in 0..64 {
        let candidate = match r.gen_range(0..5) {
            0 => gen.sample(r),
            1 => lo.add(&small.sample_positive(r)),
            2 => hi.fund(n + r.gen_range(1..=6)),
            3 => hi.fund(n + r.gen_range(1..=6)).add(&small.sample(r)),
            _ => hi.fund(n + r.gen_range(1..=6)).fund(r.gen_range(1..=4)),
        };
        if *lo < candidate && candidate < *hi {
            return Some(candidate);
        }
    }
    None
}

/// `a[n] < b < a` implies `a[n] <= b[1]`.
pub fn bachmann(seed: u64, samples: usize) -> SuiteReport {
    let gen = OrdinalGen::default();
    let mut r = rng(seed, 4);
    let mut inputs: Vec<(Ordinal, u64, Ordinal)> = Vec::with_capacity(samples);
    while inputs.len() < samples {
        let a = gen.sample_positive(&mut r);
        let n = r.gen_range(1..=4);
        let lo = a.fund(n);
        if let Some(b) = between(&mut r, &lo, &a, n) {
            inputs.push((a, n, b));
        }
    }
    sweep(
        "ord-bachmann",
        format!("{samples} triples, seed {seed}"),
        &inputs,
        |(a, n, b)| {
            let lo = a.fund(*n);
            let b1 = b.fund(1);
            Outcome::check(lo <= b1, || {
                Failure::new(format!("a={a} n={n} b={b}"), format!("b[1] >= {lo}"), &b1)
            })
        },
    )
}

/// Sequences with `x_n[n+1] <= x_{n+1} <= x_n` stay above
/// `x_0[1][2]...[n]`.
pub fn majorize(seed: u64, chains: usize) -> SuiteReport {
    let gen = OrdinalGen::default();
    let small = small_gen();
    let mut r = rng(seed, 5);
    let inputs: Vec<Vec<Ordinal>> = (0..chains)
        .map(|_| {
            let len = r.gen_range(1..=6usize);
            let mut chain = vec![gen.sample_positive(&mut r)];
            for i in 0..len - 1 {
                let cur = chain[i].clone();
                let lo = cur.fund(i as u64 + 1);
                let next = match r.gen_range(0..4) {
                    0 => cur.clone(),
                    1 => lo.clone(),
                    2 => cur.fund(i as u64 + 1 + r.gen_range(1..=4)),
                    _ => {
                        let up = lo.add(&small.sample(&mut r));
                        if up <= cur {
                            up
                        } else {
                            lo.clone()
                        }
                    }
                };
                debug_assert!(lo <= next && next <= cur);
                chain.push(next);
            }
            chain
        })
        .collect();
    sweep(
        "ord-majorize",
        format!("{chains} chains of length <= 6, seed {seed}"),
        &inputs,
        |chain| {
            let floor = descent(&chain[0], chain.len() as u64 - 1);
            for (i, x) in chain.iter().enumerate() {
                let d = floor.get(i).cloned().unwrap_or_else(Ordinal::zero);
                if *x < d {
                    let shown: Vec<String> = chain.iter().map(Ordinal::to_string).collect();
                    return Outcome::Fail(Failure::new(
                        format!("chain [{}] n={i}", shown.join(", ")),
                        format!(">= {d}"),
                        x,
                    ));
                }
            }
            Outcome::Pass
        },
    )
}

/// Associativity of `add`, strict monotonicity in the right argument, and
/// `a < a + d` for `d > 0`.
pub fn add_laws(seed: u64, samples: usize) -> SuiteReport {
    let gen = OrdinalGen::default();
    let mut r = rng(seed, 6);
    let inputs: Vec<[Ordinal; 3]> = (0..samples)
        .map(|_| [gen.sample(&mut r), gen.sample(&mut r), gen.sample(&mut r)])
        .collect();
    sweep(
        "ord-add",
        format!("{samples} triples, seed {seed}"),
        &inputs,
        |[a, b, c]| {
            let assoc = a.add(b).add(c) == a.add(&b.add(c));
            let right_mono = match b.cmp(c) {
                Ordering::Less => a.add(b) < a.add(c),
                Ordering::Equal => a.add(b) == a.add(c),
                Ordering::Greater => a.add(b) > a.add(c),
            };
            let grows = b.is_zero() || *a < a.add(b);
            Outcome::check(assoc && right_mono && grows, || {
                Failure::new(
                    format!("a={a} b={b} c={c}"),
                    "associative, right-monotone, inflationary",
                    format!("{assoc}, {right_mono}, {grows}"),
                )
            })
        },
    )
}

/// Every operation returns canonical terms.
pub fn canonical_closure(seed: u64, samples: usize) -> SuiteReport {
    let gen = OrdinalGen::default();
    let mut r = rng(seed, 7);
    let inputs: Vec<(Ordinal, Ordinal, u64)> = (0..samples)
        .map(|_| (gen.sample(&mut r), gen.sample(&mut r), r.gen_range(0..=4)))
        .collect();
    sweep(
        "ord-canonical",
        format!("{samples} pairs, seed {seed}"),
        &inputs,
        |(a, b, k)| {
            let results = [
                ("add", a.add(b)),
                ("times", a.times(&Nat::from(*k))),
                ("omega_pow", Ordinal::omega_pow(a)),
                ("eps", Ordinal::eps(a)),
                ("fund", a.fund(*k)),
                ("omega_tower", omega_tower(*k % 3, a)),
            ];
            match results.iter().find(|(_, o)| !o.is_canonical()) {
                None => Outcome::Pass,
                Some((op, o)) => Outcome::Fail(Failure::new(
                    format!("{op} a={a} b={b} k={k}"),
                    "canonical",
                    o,
                )),
            }
        },
    )
}

/// `parse(print(a)) = a`.
pub fn text_round_trip(seed: u64, samples: usize) -> SuiteReport {
    let gen = OrdinalGen::default();
    let mut r = rng(seed, 8);
    let inputs: Vec<Ordinal> = (0..samples).map(|_| gen.sample(&mut r)).collect();
    sweep(
        "ord-text",
        format!("{samples} samples, seed {seed}"),
        &inputs,
        |a| {
            let printed = a.to_string();
            let back = printed.parse::<Ordinal>();
            Outcome::check(back.as_ref().is_ok_and(|b| b == a), || {
                Failure::new(&printed, &printed, format!("{back:?}"))
            })
        },
    )
}

/// Like [`step_down_reachable`], but also gives up once the chain's terms
/// grow past `max_size` monomials.
fn reach_within(
    from: &Ordinal,
    target: &Ordinal,
    k: u64,
    max_steps: u64,
    max_size: usize,
) -> Reach {
    let mut cur = from.clone();
    for _ in 0..max_steps {
        match step_down_reachable(&cur, target, k, 0) {
            Reach::Unknown => {}
            verdict => return verdict,
        }
        if cur.size() > max_size {
            return Reach::Unknown;
        }
        cur = cur.fund(k);
    }
    step_down_reachable(&cur, target, k, 0)
}

/// `a <=_k b` implies `a <=_{k+1} b`, for `a` reached from `b` by `[k]` steps.
///
/// Chains at `k + 1` can be astronomically long; cases that exhaust the step
/// or size budget are skipped.
pub fn step_down_monotone(seed: u64, samples: usize) -> SuiteReport {
    const STEP_CAP: u64 = 2_000;
    const SIZE_CAP: usize = 200;
    let gen = OrdinalGen::default();
    let mut r = rng(seed, 9);
    let inputs: Vec<(Ordinal, Ordinal, u64)> = (0..samples)
        .map(|_| {
            let b = gen.sample(&mut r);
            let k = r.gen_range(1..=3);
            let steps = r.gen_range(0..=5);
            let a = (0..steps).fold(b.clone(), |acc, _| acc.fund(k));
            (b, a, k)
        })
        .collect();
    sweep(
        "ord-step-down-monotone",
        format!("{samples} pairs, k in 1..=3, {STEP_CAP} steps, {SIZE_CAP} monomials, seed {seed}"),
        &inputs,
        |(b, a, k)| match reach_within(b, a, k + 1, STEP_CAP, SIZE_CAP) {
            Reach::Yes => Outcome::Pass,
            Reach::Unknown => Outcome::Skip,
            Reach::No => Outcome::Fail(Failure::new(
                format!("a={a} b={b} k={k}"),
                format!("a reachable from b by [{}]", k + 1),
                "passed below a",
            )),
        },
    )
}
