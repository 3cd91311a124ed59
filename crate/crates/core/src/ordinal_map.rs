//! Ordinal assignments for Ackermannian normal forms.
//!
//! For `c =_NF A_a(k, b) * m + n`:
//!
//! ```text
//! psi_k c = w^(e_a + psi_k b) * m + psi_k n
//! chi_k c = w^(e_{chi_k a} + chi_k b) * m + chi_k n
//! ```
//!
//! Both only look at the shape of the normal-form tree, which base change
//! leaves untouched, so they are invariant under `c -> c[k <- k+1]`.

use crate::ackmath::Nat;
use crate::error::Result;
use crate::goodstein::{self, StepValue, Variant};
use crate::normal_form::{to_tree, AckIndex, AckTerm, Mode};
use crate::ordinal::Ordinal;

/// `psi_k c`, into `e_w`.
pub fn psi(k: u64, c: &Nat) -> Result<Ordinal> {
    Ok(tree_ordinal(&to_tree(c, k, Mode::Unnested)?))
}

/// `chi_k c`, into `phi_2(0)`.
pub fn chi(k: u64, c: &Nat) -> Result<Ordinal> {
    Ok(tree_ordinal(&to_tree(c, k, Mode::Nested)?))
}

/// The ordinal of a normal-form tree. Literal indices give `psi`, nested
/// indices give `chi`.
pub fn tree_ordinal(t: &AckTerm) -> Ordinal {
    t.monomials()
        .iter()
        .rev()
        .fold(Ordinal::zero(), |rest, mono| {
            let subscript = match &mono.index {
                AckIndex::Literal(a) => Ordinal::from_nat(a.clone()),
                AckIndex::Term(t) => tree_ordinal(t),
            };
            let exponent = Ordinal::eps(&subscript).add(&tree_ordinal(&mono.arg));
            Ordinal::omega_pow(&exponent).times(&mono.coeff).add(&rest)
        })
}

/// `o(l, k)`: the ordinal of the k-th Goodstein value of `l` at base `k + 2`.
///
/// `Ok(None)` when that value is beyond `bound`.
pub fn o_value(l: &Nat, k: u64, mode: Mode, bound: &Nat) -> Result<Option<Ordinal>> {
    let variant = match mode {
        Mode::Unnested => Variant::Unnested,
        Mode::Nested => Variant::Nested,
    };
    let trace = goodstein::run(variant, l, k, bound, false);
    let value = match trace.steps.get(k as usize) {
        Some(step) => match &step.value {
            StepValue::Exact(v) => v.clone(),
            StepValue::TooLarge => return Ok(None),
        },
        // The run stopped early at zero; it stays there.
        None if trace.terminated => Nat::default(),
        None => return Ok(None),
    };
    let base = k + 2;
    Ok(Some(match mode {
        Mode::Unnested => psi(base, &value)?,
        Mode::Nested => chi(base, &value)?,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ackmath::{ack_eval, BoundedValue};

    fn n(v: u64) -> Nat {
        Nat::from(v)
    }

    fn p(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(2, &n(0)).unwrap(), Ordinal::zero());
        assert_eq!(psi(2, &n(1)).unwrap(), p("e(0)"));
        assert_eq!(psi(2, &n(2)).unwrap(), p("e(1)"));
        assert_eq!(psi(2, &n(20)).unwrap(), p("w^(e(1)+e(0)) + e(1)*2"));
        assert_eq!(
            psi(2, &n(20)).unwrap().to_string(),
            "w^(e(1)+e(0)) + e(1)*2"
        );
        assert!(psi(1, &n(3)).is_err());
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi(2, &n(0)).unwrap(), Ordinal::zero());
        assert_eq!(chi(2, &n(1)).unwrap(), p("e(0)"));
        assert_eq!(chi(2, &n(2)).unwrap(), p("e(e(0))"));
        assert!(chi(0, &n(3)).is_err());
    }

    #[test]
    fn o_value_examples() {
        let bound = num_traits::pow(n(10), 1000);
        assert_eq!(
            o_value(&n(0), 0, Mode::Unnested, &bound).unwrap(),
            Some(Ordinal::zero())
        );
        assert_eq!(
            o_value(&n(3), 1, Mode::Unnested, &bound).unwrap(),
            Some(p("e(1)"))
        );
        // After termination the value stays zero.
        assert_eq!(
            o_value(&n(1), 5, Mode::Unnested, &bound).unwrap(),
            Some(Ordinal::zero())
        );
        // 16 = A_1(2, 1) moves to A_1(3, 1), far beyond the bound.
        assert_eq!(o_value(&n(16), 1, Mode::Unnested, &bound).unwrap(), None);
    }

    #[test]
    fn o_value_anchor_at_ackermann_values() {
        let bound = num_traits::pow(n(10), 100_000);
        for l in 1..=2u64 {
            let BoundedValue::Exact(start) = ack_eval(&n(l), 2, &n(0), &bound).unwrap() else {
                panic!("A_{l}(2, 0) should fit");
            };
            let o = o_value(&start, 0, Mode::Unnested, &bound).unwrap().unwrap();
            assert_eq!(o, Ordinal::eps(&Ordinal::from(l)));
        }
    }

    #[test]
    fn psi_subscripts_are_finite() {
        for c in 0..500u64 {
            assert!(psi(3, &n(c)).unwrap().has_finite_eps_subscripts());
        }
    }
}
