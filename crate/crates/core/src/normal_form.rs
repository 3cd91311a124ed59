//! Ackermannian k-normal forms.
//!
//! Every `c > 0` has a unique representation `c = A_a(k, b) * m + n` with
//!
//! 1. `A_a(k, 0) <= c < A_{a+1}(k, 0)` (so `a` is maximal),
//! 2. `A_a(k, b) <= c < A_a(k, b + 1)`,
//! 3. `n < A_a(k, b)`.
//!
//! Rewriting `b` and `n` recursively gives the unnested normal form; also
//! rewriting `a` gives the nested normal form. The remainder `n` always has a
//! strictly smaller leading term, so an [`AckTerm`] stores the chain
//! `c = A_{a_1}(k, b_1) * m_1 + (A_{a_2}(k, b_2) * m_2 + (...))` as a flat list
//! of monomials rather than nesting it.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::ackmath::{ack_eval, BoundedValue, Evaluator, Nat};
use crate::error::{check_base, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Unnested,
    Nested,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Unnested => "unnested",
            Mode::Nested => "nested",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The unique `(a, b, m, n)` of `c = A_a(k, b) * m + n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub a: Nat,
    pub b: Nat,
    pub m: Nat,
    pub n: Nat,
}

/// First argument of `A_a(k, b)` inside a tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AckIndex {
    Literal(Nat),
    Term(AckTerm),
}

/// One summand `A_index(k, arg) * coeff`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AckMonomial {
    pub index: AckIndex,
    pub arg: AckTerm,
    pub coeff: Nat,
}

/// Normal-form tree. The empty sum is the zero tree.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct AckTerm {
    monomials: Vec<AckMonomial>,
}

impl AckTerm {
    pub fn zero() -> Self {
        AckTerm::default()
    }

    /// `A_index(k, arg) * coeff + rest`.
    pub fn node(index: AckIndex, arg: AckTerm, coeff: Nat, rest: AckTerm) -> Self {
        let mut monomials = Vec::with_capacity(rest.monomials.len() + 1);
        monomials.push(AckMonomial { index, arg, coeff });
        monomials.extend(rest.monomials);
        AckTerm { monomials }
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[AckMonomial] {
        &self.monomials
    }

    /// Leading monomial and the remainder `n`.
    pub fn split_first(&self) -> Option<(&AckMonomial, AckTerm)> {
        let (head, tail) = self.monomials.split_first()?;
        Some((
            head,
            AckTerm {
                monomials: tail.to_vec(),
            },
        ))
    }

    /// The uniform mode of the tree, `None` for the zero tree or a tree
    /// mixing literal and nested indices.
    pub fn mode(&self) -> Option<Mode> {
        let mut found = None;
        self.uniform_mode(&mut found).then_some(found).flatten()
    }

    fn uniform_mode(&self, found: &mut Option<Mode>) -> bool {
        self.monomials.iter().all(|mono| {
            let here = match mono.index {
                AckIndex::Literal(_) => Mode::Unnested,
                AckIndex::Term(_) => Mode::Nested,
            };
            if *found.get_or_insert(here) != here {
                return false;
            }
            let index_ok = match &mono.index {
                AckIndex::Literal(_) => true,
                AckIndex::Term(t) => t.uniform_mode(found),
            };
            index_ok && mono.arg.uniform_mode(found)
        })
    }
}

/// Structural order on trees: lexicographic on `(index, arg, coeff)` and
/// then on the remainder. For genuine normal forms at a common base this is
/// the numeric order of the values.
pub fn tree_cmp(lhs: &AckTerm, rhs: &AckTerm) -> Ordering {
    for (l, r) in lhs.monomials.iter().zip(&rhs.monomials) {
        let ord = index_cmp(&l.index, &r.index)
            .then_with(|| tree_cmp(&l.arg, &r.arg))
            .then_with(|| l.coeff.cmp(&r.coeff));
        if ord != Ordering::Equal {
            return ord;
        }
    }
    lhs.monomials.len().cmp(&rhs.monomials.len())
}

fn index_cmp(lhs: &AckIndex, rhs: &AckIndex) -> Ordering {
    match (lhs, rhs) {
        (AckIndex::Literal(l), AckIndex::Literal(r)) => l.cmp(r),
        (AckIndex::Term(l), AckIndex::Term(r)) => tree_cmp(l, r),
        (AckIndex::Literal(_), AckIndex::Term(_)) => Ordering::Less,
        (AckIndex::Term(_), AckIndex::Literal(_)) => Ordering::Greater,
    }
}

/// Finds `(a, b, m, n)` for `c > 0` at base `k`.
pub fn decompose(c: &Nat, k: u64) -> Result<Decomposition> {
    check_base(k)?;
    if c.is_zero() {
        return Err(Error::ZeroHasNoNormalForm);
    }
    let ev = Evaluator::new(k, c);
    let mut a = 0u32;
    while ev.ack(a + 1, &Nat::zero()).is_some() {
        a += 1;
    }
    let (b, base) = if a == 0 {
        largest_power_below(k, c)
    } else {
        let mut b = Nat::zero();
        let mut base = ev.ack(a, &b).expect("A_a(k,0) <= c by choice of a");
        while let Some(next) = ev.ack(a, &(&b + 1u32)) {
            base = next;
            b += 1u32;
        }
        (b, base)
    };
    let (m, n) = c.div_rem(&base);
    Ok(Decomposition {
        a: Nat::from(a),
        b,
        m,
        n,
    })
}

/// Largest `b` with `k^b <= c`, together with `k^b`. Requires `c >= 1`.
fn largest_power_below(k: u64, c: &Nat) -> (Nat, Nat) {
    let k_big = Nat::from(k);
    // k^b <= c forces b < bits(c).
    let (mut lo, mut hi) = (0u64, c.bits());
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        let fits = crate::ackmath::bounded_pow(&k_big, &Nat::from(mid), c).is_some();
        if fits {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let power = crate::ackmath::bounded_pow(&k_big, &Nat::from(lo), c).expect("k^lo <= c");
    (Nat::from(lo), power)
}

/// Builds the normal-form tree of `c` at base `k`.
pub fn to_tree(c: &Nat, k: u64, mode: Mode) -> Result<AckTerm> {
    check_base(k)?;
    let mut monomials = Vec::new();
    let mut rem = c.clone();
    while !rem.is_zero() {
        let d = decompose(&rem, k)?;
        if d.a.is_zero() {
            // rem < A_1(k, 0): the rest of the chain is the base-k digit expansion.
            push_digits(&rem, k, mode, &mut monomials)?;
            break;
        }
        monomials.push(AckMonomial {
            index: make_index(d.a, k, mode)?,
            arg: to_tree(&d.b, k, mode)?,
            coeff: d.m,
        });
        rem = d.n;
    }
    Ok(AckTerm { monomials })
}

fn make_index(a: Nat, k: u64, mode: Mode) -> Result<AckIndex> {
    Ok(match mode {
        Mode::Unnested => AckIndex::Literal(a),
        Mode::Nested => AckIndex::Term(to_tree(&a, k, mode)?),
    })
}

fn push_digits(c: &Nat, k: u64, mode: Mode, out: &mut Vec<AckMonomial>) -> Result<()> {
    let digits: Vec<Nat> = match u32::try_from(k) {
        Ok(radix) if radix <= 256 => c.to_radix_le(radix).into_iter().map(Nat::from).collect(),
        _ => {
            let k_big = Nat::from(k);
            let mut rem = c.clone();
            let mut digits = Vec::new();
            while !rem.is_zero() {
                let (q, r) = rem.div_rem(&k_big);
                digits.push(r);
                rem = q;
            }
            digits
        }
    };
    for (pos, digit) in digits.into_iter().enumerate().rev() {
        if digit.is_zero() {
            continue;
        }
        out.push(AckMonomial {
            index: make_index(Nat::zero(), k, mode)?,
            arg: to_tree(&Nat::from(pos), k, mode)?,
            coeff: digit,
        });
    }
    Ok(())
}

/// Value of a tree read at base `k`, under the cutoff.
pub fn eval_tree(t: &AckTerm, k: u64, bound: &Nat) -> Result<BoundedValue> {
    check_base(k)?;
    Ok(BoundedValue::from_option(eval_bounded(t, k, bound)?))
}

fn eval_bounded(t: &AckTerm, k: u64, bound: &Nat) -> Result<Option<Nat>> {
    let mut total = Nat::zero();
    for mono in &t.monomials {
        let Some(term) = monomial_value(mono, k, bound)? else {
            return Ok(None);
        };
        total += term;
        if total > *bound {
            return Ok(None);
        }
    }
    Ok(Some(total))
}

fn monomial_value(mono: &AckMonomial, k: u64, bound: &Nat) -> Result<Option<Nat>> {
    // A_a(k, b) > max(a, b), so an index or argument beyond the bound
    // already settles the outcome.
    let a = match &mono.index {
        AckIndex::Literal(a) => a.clone(),
        AckIndex::Term(t) => match eval_bounded(t, k, bound)? {
            Some(a) => a,
            None => return Ok(None),
        },
    };
    let Some(b) = eval_bounded(&mono.arg, k, bound)? else {
        return Ok(None);
    };
    let Some(power) = ack_eval(&a, k, &b, bound)?.exact() else {
        return Ok(None);
    };
    if mono.coeff > *bound {
        return Ok(None);
    }
    let term = power * &mono.coeff;
    Ok((term <= *bound).then_some(term))
}

/// Ceiling used when validating arbitrary trees: 10^100000.
pub fn validation_cap() -> &'static Nat {
    static CAP: OnceLock<Nat> = OnceLock::new();
    CAP.get_or_init(|| num_traits::pow(Nat::from(10u32), 100_000))
}

/// Checks the normal-form conditions at every node of the tree.
///
/// Trees mixing literal and nested indices are rejected. Trees whose value
/// exceeds [`validation_cap`] cannot be checked and are reported as not in
/// normal form.
pub fn is_normal_form(t: &AckTerm, k: u64) -> bool {
    if k < 2 || (!t.is_zero() && t.mode().is_none()) {
        return false;
    }
    validated_value(t, k, validation_cap()).is_some()
}

/// Value of `t` if every node satisfies the normal-form conditions.
fn validated_value(t: &AckTerm, k: u64, cap: &Nat) -> Option<Nat> {
    let mut suffix = Nat::zero();
    for mono in t.monomials.iter().rev() {
        if mono.coeff.is_zero() {
            return None;
        }
        let a = match &mono.index {
            AckIndex::Literal(a) => a.clone(),
            AckIndex::Term(t) => validated_value(t, k, cap)?,
        };
        let b = validated_value(&mono.arg, k, cap)?;
        let power = ack_eval(&a, k, &b, cap).ok()?.exact()?;
        // n < A_a(k, b)
        if suffix >= power {
            return None;
        }
        let c = &power * &mono.coeff + &suffix;
        if c > *cap {
            return None;
        }
        // A_a(k, 0) <= A_a(k, b) <= c holds since m >= 1; the upper ends
        // need c < A_{a+1}(k, 0) and c < A_a(k, b + 1).
        let next_index = ack_eval(&(&a + 1u32), k, &Nat::zero(), &c).ok()?;
        let next_arg = ack_eval(&a, k, &(&b + 1u32), &c).ok()?;
        if !next_index.is_exceeded() || !next_arg.is_exceeded() {
            return None;
        }
        suffix = c;
    }
    Some(suffix)
}

impl fmt::Display for AckTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return f.write_str("0");
        }
        for (i, mono) in self.monomials.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match &mono.index {
                AckIndex::Literal(a) => write!(f, "A({a}; {})", mono.arg)?,
                AckIndex::Term(t) => write!(f, "A({t}; {})", mono.arg)?,
            }
            if !mono.coeff.is_one() {
                write!(f, "*{}", mono.coeff)?;
            }
        }
        Ok(())
    }
}

impl AckTerm {
    /// JSON view: `null` for zero, otherwise nested `{a, b, m, n}` objects
    /// with decimal-string literals.
    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::{json, Value};
        self.monomials.iter().rev().fold(Value::Null, |rest, mono| {
            let a = match &mono.index {
                AckIndex::Literal(a) => Value::String(a.to_string()),
                AckIndex::Term(t) => t.to_json(),
            };
            json!({
                "a": a,
                "b": mono.arg.to_json(),
                "m": mono.coeff.to_string(),
                "n": rest,
            })
        })
    }
}
