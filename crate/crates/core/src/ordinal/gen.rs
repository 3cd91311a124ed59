//! Seeded random generation of canonical ordinal terms.

use num_traits::Zero;
use rand::Rng;

use super::{Head, Monomial, Ordinal};
use crate::ackmath::Nat;

/// Shape limits for generated terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrdinalGen {
    pub max_depth: u32,
    pub max_coeff: u32,
    pub max_eps_nesting: u32,
    pub max_monomials: usize,
}

impl Default for OrdinalGen {
    fn default() -> Self {
        OrdinalGen {
            max_depth: 4,
            max_coeff: 5,
            max_eps_nesting: 2,
            max_monomials: 3,
        }
    }
}

impl OrdinalGen {
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Ordinal {
        self.term(rng, self.max_depth, self.max_eps_nesting)
    }

    /// A nonzero sample.
    pub fn sample_positive<R: Rng + ?Sized>(&self, rng: &mut R) -> Ordinal {
        loop {
            let o = self.sample(rng);
            if !o.is_zero() {
                return o;
            }
        }
    }

    fn term<R: Rng + ?Sized>(&self, rng: &mut R, depth: u32, eps_left: u32) -> Ordinal {
        if depth == 0 {
            return Ordinal::from(rng.gen_range(0..=self.max_coeff as u64));
        }
        let count = rng.gen_range(0..=self.max_monomials);
        let monos = (0..count)
            .map(|_| {
                let coeff = Nat::from(rng.gen_range(1..=self.max_coeff));
                let head = if eps_left > 0 && rng.gen_bool(0.3) {
                    Head::Eps(self.term(rng, depth - 1, eps_left - 1))
                } else {
                    let e = self.term(rng, depth - 1, eps_left);
                    // w^(e_g) is e_g
                    Ordinal::omega_pow(&e).terms.swap_remove(0).head
                };
                Monomial { head, coeff }
            })
            .filter(|m| !m.coeff.is_zero())
            .collect();
        Ordinal::from_unsorted(monos)
    }
}
