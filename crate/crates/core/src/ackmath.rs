//! Cutoff evaluation of the Ackermann function
//!
//! ```text
//! A_0(k, b)     = k^b
//! A_{a+1}(k, 0) = A_a^k(k, .)(0)
//! A_{a+1}(k, b+1) = A_a^k(k, .)(A_{a+1}(k, b))
//! ```
//!
//! where `A_a^k(k, .)` is the k-fold composition of `x -> A_a(k, x)`.
//!
//! Every evaluation takes an explicit `bound`. As soon as an intermediate
//! value exceeds it the evaluation stops and reports [`BoundedValue::ExceedsBound`].
//! This is sound because `x -> A_a(k, x)` is strictly increasing with
//! `A_a(k, x) > x`, so no later step can bring the value back under the bound.
//! No number larger than `bound^2` is ever built.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{check_base, Result};

/// Arbitrary-precision natural number.
pub type Nat = BigUint;

/// Outcome of an evaluation under a cutoff.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BoundedValue {
    Exact(Nat),
    ExceedsBound,
}

impl BoundedValue {
    pub fn exact(self) -> Option<Nat> {
        match self {
            BoundedValue::Exact(v) => Some(v),
            BoundedValue::ExceedsBound => None,
        }
    }

    pub fn as_exact(&self) -> Option<&Nat> {
        match self {
            BoundedValue::Exact(v) => Some(v),
            BoundedValue::ExceedsBound => None,
        }
    }

    pub fn is_exceeded(&self) -> bool {
        matches!(self, BoundedValue::ExceedsBound)
    }

    pub(crate) fn from_option(v: Option<Nat>) -> Self {
        v.map_or(BoundedValue::ExceedsBound, BoundedValue::Exact)
    }
}

impl std::fmt::Display for BoundedValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundedValue::Exact(v) => write!(f, "{v}"),
            BoundedValue::ExceedsBound => f.write_str("exceeds-bound"),
        }
    }
}

/// `A_a(k, b)`, or `ExceedsBound` if it is larger than `bound`.
pub fn ack_eval(a: &Nat, k: u64, b: &Nat, bound: &Nat) -> Result<BoundedValue> {
    check_base(k)?;
    let ev = Evaluator::new(k, bound);
    Ok(BoundedValue::from_option(ev.ack_big_index(a, b)))
}

/// `A_a^times(k, .)(x)`: `times`-fold iteration of `x -> A_a(k, x)`.
pub fn ack_iter(a: &Nat, k: u64, x: &Nat, times: &Nat, bound: &Nat) -> Result<BoundedValue> {
    check_base(k)?;
    let ev = Evaluator::new(k, bound);
    if times.is_zero() {
        return Ok(BoundedValue::from_option(ev.check(x.clone())));
    }
    // One application already exceeds the bound if the index does.
    let Some(a) = ev.small_index(a) else {
        return Ok(BoundedValue::ExceedsBound);
    };
    Ok(BoundedValue::from_option(ev.iterate(a, x.clone(), times)))
}

/// `k^b` under the bound, by left-to-right square and multiply.
pub fn bounded_pow(k: &Nat, b: &Nat, bound: &Nat) -> Option<Nat> {
    if b.is_zero() {
        return (Nat::one() <= *bound).then(Nat::one);
    }
    if k.is_zero() || k.is_one() {
        return (k <= bound).then(|| k.clone());
    }
    if k > bound {
        return None;
    }
    // k >= 2, so k^b >= 2^b > bound once b reaches the bit length of bound.
    let exp = match b.to_u64() {
        Some(e) if e < bound.bits() => e,
        _ => return None,
    };
    let mut acc = Nat::one();
    for i in (0..u64::BITS - exp.leading_zeros()).rev() {
        acc = &acc * &acc;
        if acc > *bound {
            return None;
        }
        if (exp >> i) & 1 == 1 {
            acc *= k;
            if acc > *bound {
                return None;
            }
        }
    }
    Some(acc)
}

/// Shared state for one bounded evaluation.
pub(crate) struct Evaluator<'b> {
    k: Nat,
    bound: &'b Nat,
}

/// Indices above this are first screened by scanning `A_i(k, 0)` upwards.
const DIRECT_INDEX_LIMIT: u32 = 16;

impl<'b> Evaluator<'b> {
    pub(crate) fn new(k: u64, bound: &'b Nat) -> Self {
        Evaluator {
            k: Nat::from(k),
            bound,
        }
    }

    fn check(&self, v: Nat) -> Option<Nat> {
        (v <= *self.bound).then_some(v)
    }

    /// Converts the index to a machine word, or `None` when `A_a(k, 0)`
    /// already exceeds the bound.
    ///
    /// `A_i(k, 0)` is strictly increasing in `i`, so a large index is
    /// resolved by scanning upwards until the bound is crossed, which
    /// happens after a handful of steps.
    fn small_index(&self, a: &Nat) -> Option<u32> {
        if let Some(small) = a.to_u32().filter(|&s| s <= DIRECT_INDEX_LIMIT) {
            return Some(small);
        }
        let mut i = 0u32;
        loop {
            self.ack(i, &Nat::zero())?;
            if Nat::from(i) == *a {
                return Some(i);
            }
            i += 1;
        }
    }

    fn ack_big_index(&self, a: &Nat, b: &Nat) -> Option<Nat> {
        let a = self.small_index(a)?;
        self.ack(a, b)
    }

    pub(crate) fn ack(&self, a: u32, b: &Nat) -> Option<Nat> {
        // A_a(k, b) > b.
        if b > self.bound {
            return None;
        }
        if a == 0 {
            return bounded_pow(&self.k, b, self.bound);
        }
        let mut v = self.iterate(a - 1, Nat::zero(), &self.k)?;
        let mut i = Nat::zero();
        while i < *b {
            v = self.iterate(a - 1, v, &self.k)?;
            i += 1u32;
        }
        Some(v)
    }

    fn iterate(&self, a: u32, mut x: Nat, times: &Nat) -> Option<Nat> {
        let mut i = Nat::zero();
        while i < *times {
            x = self.ack(a, &x)?;
            i += 1u32;
        }
        self.check(x)
    }
}
