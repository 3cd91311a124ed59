//! Hereditary base-k exponential notation for the classic process.
//!
//! `m = k^(e_1) * d_1 + ... + k^(e_r) * d_r` with digits `0 < d_i < k`,
//! exponents strictly decreasing and each exponent written the same way.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::ackmath::{bounded_pow, BoundedValue, Nat};
use crate::error::{check_base, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct HereditaryTerm {
    /// `(exponent, digit)` pairs, highest exponent first.
    terms: Vec<(HereditaryTerm, Nat)>,
}

impl HereditaryTerm {
    pub fn new(m: &Nat, k: u64) -> Result<Self> {
        check_base(k)?;
        let k_big = Nat::from(k);
        let mut digits = Vec::new();
        let mut rem = m.clone();
        while !rem.is_zero() {
            let (q, r) = rem.div_rem(&k_big);
            digits.push(r);
            rem = q;
        }
        let mut terms = Vec::new();
        for (pos, digit) in digits.into_iter().enumerate().rev() {
            if !digit.is_zero() {
                terms.push((HereditaryTerm::new(&Nat::from(pos), k)?, digit));
            }
        }
        Ok(HereditaryTerm { terms })
    }

    /// Value with every occurrence of the base replaced by `base`.
    pub fn eval(&self, base: u64, bound: &Nat) -> BoundedValue {
        BoundedValue::from_option(self.eval_opt(&Nat::from(base), bound))
    }

    fn eval_opt(&self, base: &Nat, bound: &Nat) -> Option<Nat> {
        let mut total = Nat::zero();
        for (exp, digit) in &self.terms {
            let e = exp.eval_opt(base, bound)?;
            let power = bounded_pow(base, &e, bound)?;
            total += power * digit;
            if total > *bound {
                return None;
            }
        }
        Some(total)
    }

    /// Text such as `2^(2^2) + 2^2` at base 2.
    pub fn render(&self, k: u64) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(exp, digit)| {
                let power = if exp.terms.is_empty() {
                    return digit.to_string();
                } else if exp.is_one() {
                    k.to_string()
                } else {
                    let e = exp.render(k);
                    if e.chars().all(|c| c.is_ascii_digit()) {
                        format!("{k}^{e}")
                    } else {
                        format!("{k}^({e})")
                    }
                };
                if digit.is_one() {
                    power
                } else {
                    format!("{power}*{digit}")
                }
            })
            .collect();
        parts.join(" + ")
    }

    fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(e, d)] if e.terms.is_empty() && d.is_one())
    }
}

/// Writes `m` in hereditary base `k`, replaces `k` by `k + 1` and evaluates.
pub fn hereditary_rewrite(m: &Nat, k: u64, bound: &Nat) -> Result<BoundedValue> {
    Ok(HereditaryTerm::new(m, k)?.eval(k + 1, bound))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> Nat {
        Nat::from(v)
    }

    #[test]
    fn rewrite_examples() {
        assert_eq!(
            hereditary_rewrite(&n(0), 5, &n(10)).unwrap(),
            BoundedValue::Exact(n(0))
        );
        let bound = num_traits::pow(n(10), 50);
        let want = num_traits::pow(n(3), 27) + 27u32;
        assert_eq!(
            hereditary_rewrite(&n(20), 2, &bound).unwrap(),
            BoundedValue::Exact(want)
        );
        for k in 3..=9u64 {
            assert_eq!(
                hereditary_rewrite(&n(k - 1), k, &n(100)).unwrap(),
                BoundedValue::Exact(n(k - 1))
            );
        }
        assert!(hereditary_rewrite(&n(3), 1, &n(10)).is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(
            HereditaryTerm::new(&n(20), 2).unwrap().render(2),
            "2^(2^2) + 2^2"
        );
        assert_eq!(HereditaryTerm::new(&n(0), 2).unwrap().render(2), "0");
        let g1 = num_traits::pow(n(3), 27) + 18u32 + 6u32 + 2u32;
        assert_eq!(
            HereditaryTerm::new(&g1, 3).unwrap().render(3),
            "3^(3^3) + 3^2*2 + 3*2 + 2"
        );
    }

    #[test]
    fn same_base_evaluation_is_identity() {
        let bound = n(1 << 40);
        for k in 2..6u64 {
            for m in 0..3000u64 {
                let t = HereditaryTerm::new(&n(m), k).unwrap();
                assert_eq!(t.eval(k, &bound), BoundedValue::Exact(n(m)));
            }
        }
    }
}
