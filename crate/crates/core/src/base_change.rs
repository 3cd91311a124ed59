//! Base change `c[k <- k+1]` on Ackermannian normal forms.
//!
//! Unnested: `A_a(k, b) * m + n  ->  A_a(k+1, b[k <- k+1]) * m + n[k <- k+1]`.
//! Nested: the index `a` is rewritten as well.
//!
//! [`bc_unnested`] and [`bc_nested`] work on the number, decomposing it
//! afresh at every level. [`bc_via_tree`] builds the k-normal-form tree once
//! and reads it at base `k + 1`. The two routes must agree.

use num_traits::Zero;

use crate::ackmath::{ack_eval, BoundedValue, Nat};
use crate::error::{check_base, Result};
use crate::normal_form::{decompose, eval_tree, to_tree, Mode};

/// Unnested base change `c[k <- k+1]` under the cutoff.
pub fn bc_unnested(c: &Nat, k: u64, bound: &Nat) -> Result<BoundedValue> {
    base_change(c, k, bound, Mode::Unnested)
}

/// Nested base change, rewriting the Ackermann index too.
pub fn bc_nested(c: &Nat, k: u64, bound: &Nat) -> Result<BoundedValue> {
    base_change(c, k, bound, Mode::Nested)
}

pub fn base_change(c: &Nat, k: u64, bound: &Nat, mode: Mode) -> Result<BoundedValue> {
    check_base(k)?;
    let k_next = k.checked_add(1).expect("base overflow");
    // Base change never decreases a number.
    if c > bound {
        return Ok(BoundedValue::ExceedsBound);
    }
    let mut total = Nat::zero();
    let mut rem = c.clone();
    while !rem.is_zero() {
        let d = decompose(&rem, k)?;
        let a = match mode {
            Mode::Unnested => d.a,
            Mode::Nested => match base_change(&d.a, k, bound, mode)? {
                BoundedValue::Exact(a) => a,
                BoundedValue::ExceedsBound => return Ok(BoundedValue::ExceedsBound),
            },
        };
        let BoundedValue::Exact(b) = base_change(&d.b, k, bound, mode)? else {
            return Ok(BoundedValue::ExceedsBound);
        };
        let BoundedValue::Exact(power) = ack_eval(&a, k_next, &b, bound)? else {
            return Ok(BoundedValue::ExceedsBound);
        };
        total += power * d.m;
        if total > *bound {
            return Ok(BoundedValue::ExceedsBound);
        }
        rem = d.n;
    }
    Ok(BoundedValue::Exact(total))
}

/// Base change by reading the k-normal-form tree at base `k + 1`.
pub fn bc_via_tree(c: &Nat, k: u64, bound: &Nat, mode: Mode) -> Result<BoundedValue> {
    let tree = to_tree(c, k, mode)?;
    eval_tree(&tree, k + 1, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal_form::to_tree;

    fn n(v: u64) -> Nat {
        Nat::from(v)
    }

    fn pow10(e: usize) -> Nat {
        num_traits::pow(n(10), e)
    }

    #[test]
    fn unnested_examples() {
        assert_eq!(
            bc_unnested(&n(0), 2, &n(10)).unwrap(),
            BoundedValue::Exact(n(0))
        );
        assert_eq!(
            bc_unnested(&n(2), 2, &pow10(6)).unwrap(),
            BoundedValue::Exact(n(27))
        );
        assert_eq!(
            bc_unnested(&n(3), 2, &pow10(6)).unwrap(),
            BoundedValue::Exact(n(28))
        );
        assert_eq!(
            bc_unnested(&n(27), 3, &pow10(200)).unwrap(),
            BoundedValue::Exact(num_traits::pow(n(4), 256))
        );
    }

    #[test]
    fn nested_examples() {
        assert_eq!(
            bc_nested(&n(0), 2, &n(10)).unwrap(),
            BoundedValue::Exact(n(0))
        );
        assert_eq!(
            bc_nested(&n(2), 2, &pow10(6)).unwrap(),
            BoundedValue::Exact(n(27))
        );
        let bound = pow10(60);
        for c in 0..=20u64 {
            assert_eq!(
                bc_nested(&n(c), 2, &bound).unwrap(),
                bc_unnested(&n(c), 2, &bound).unwrap(),
                "c={c}"
            );
        }
    }

    #[test]
    fn nested_trees_rewrite_the_index() {
        // A_2(2, 0) = 2^65536. Its index 2 = A_1(2, 0) moves to A_1(3, 0) = 27
        // under nested base change, so the two operators first differ here,
        // and both images are far beyond any bound.
        let c = num_traits::pow(n(2), 65536);
        let bound = pow10(100_000);
        assert_eq!(
            bc_nested(&c, 2, &bound).unwrap(),
            BoundedValue::ExceedsBound
        );
        assert_eq!(
            bc_unnested(&c, 2, &bound).unwrap(),
            BoundedValue::ExceedsBound
        );
        let t_un = to_tree(&c, 2, Mode::Unnested).unwrap();
        let t_ne = to_tree(&c, 2, Mode::Nested).unwrap();
        assert_eq!(t_un.to_string(), "A(2; 0)");
        assert_eq!(t_ne.to_string(), "A(A(A(0; 0); 0); 0)");
    }

    #[test]
    fn rejects_small_base() {
        assert!(bc_unnested(&n(3), 1, &n(10)).is_err());
    }

    #[test]
    fn routes_agree() {
        let bound = pow10(400);
        for k in 2..=4 {
            for mode in [Mode::Unnested, Mode::Nested] {
                for c in 0..=1500u64 {
                    assert_eq!(
                        base_change(&n(c), k, &bound, mode).unwrap(),
                        bc_via_tree(&n(c), k, &bound, mode).unwrap(),
                        "c={c} k={k} {mode}"
                    );
                }
            }
        }
    }

    #[test]
    fn digits_below_base_are_fixed() {
        for k in 2..=9u64 {
            for c in 0..k {
                assert_eq!(
                    bc_unnested(&n(c), k, &n(100)).unwrap(),
                    BoundedValue::Exact(n(c))
                );
                assert_eq!(
                    bc_nested(&n(c), k, &n(100)).unwrap(),
                    BoundedValue::Exact(n(c))
                );
            }
        }
    }
}
