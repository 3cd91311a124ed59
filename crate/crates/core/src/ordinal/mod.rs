//! Ordinal notations below `phi_2(0)`.
//!
//! An ordinal is a finite sum `h_1 * m_1 + ... + h_r * m_r` of heads in
//! strictly decreasing order with positive coefficients. A head is either
//! `w^e` or an epsilon number `e_g`. Since `w^(e_g) = e_g`, the head `w^e` with
//! `e` a bare epsilon atom is never built: [`Ordinal::omega_pow`] collapses it.
//! Terms can only be built through the canonical constructors, so every
//! value of [`Ordinal`] is in normal form and comparison is total.

mod gen;
mod text;

pub use gen::OrdinalGen;

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::ackmath::Nat;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Ordinal {
    terms: Vec<Monomial>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub head: Head,
    pub coeff: Nat,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Head {
    /// `w^e`
    Omega(Ordinal),
    /// `e_g`
    Eps(Ordinal),
}

/// Verdict of [`step_down_reachable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reach {
    Yes,
    No,
    Unknown,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal::default()
    }

    pub fn one() -> Self {
        Ordinal::from_nat(1u32)
    }

    /// `w`
    pub fn omega() -> Self {
        Ordinal::omega_pow(&Ordinal::one())
    }

    /// The finite ordinal `n`.
    pub fn from_nat(n: impl Into<Nat>) -> Self {
        let n = n.into();
        if n.is_zero() {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![Monomial {
                head: Head::Omega(Ordinal::zero()),
                coeff: n,
            }],
        }
    }

    /// `e_g`
    pub fn eps(g: &Ordinal) -> Self {
        Ordinal::monomial(Head::Eps(g.clone()), Nat::one())
    }

    /// `w^e`, collapsing `w^(e_g)` to `e_g`.
    pub fn omega_pow(e: &Ordinal) -> Self {
        match e.as_bare_eps() {
            Some(g) => Ordinal::eps(g),
            None => Ordinal::monomial(Head::Omega(e.clone()), Nat::one()),
        }
    }

    fn monomial(head: Head, coeff: Nat) -> Self {
        Ordinal {
            terms: vec![Monomial { head, coeff }],
        }
    }

    /// The subscript `g` if this term is exactly `e_g`.
    fn as_bare_eps(&self) -> Option<&Ordinal> {
        match self.terms.as_slice() {
            [Monomial {
                head: Head::Eps(g),
                coeff,
            }] if coeff.is_one() => Some(g),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    /// The value if this ordinal is finite.
    pub fn as_nat(&self) -> Option<Nat> {
        match self.terms.as_slice() {
            [] => Some(Nat::zero()),
            [Monomial {
                head: Head::Omega(e),
                coeff,
            }] if e.is_zero() => Some(coeff.clone()),
            _ => None,
        }
    }

    pub fn is_successor(&self) -> bool {
        self.terms
            .last()
            .is_some_and(|m| matches!(&m.head, Head::Omega(e) if e.is_zero()))
    }

    pub fn is_limit(&self) -> bool {
        !self.is_zero() && !self.is_successor()
    }

    /// `self - 1` for a successor.
    fn predecessor(&self) -> Ordinal {
        debug_assert!(self.is_successor());
        let mut terms = self.terms.clone();
        let last = terms.last_mut().expect("successor is nonzero");
        last.coeff -= 1u32;
        if last.coeff.is_zero() {
            terms.pop();
        }
        Ordinal { terms }
    }

    /// Ordinal sum `self + rhs`.
    pub fn add(&self, rhs: &Ordinal) -> Ordinal {
        let Some(lead) = rhs.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<Monomial> = self
            .terms
            .iter()
            .take_while(|m| m.head >= lead.head)
            .cloned()
            .collect();
        let mut rest = rhs.terms.iter();
        if let Some(last) = terms.last_mut() {
            if last.head == lead.head {
                last.coeff += &lead.coeff;
                rest.next();
            }
        }
        terms.extend(rest.cloned());
        Ordinal { terms }
    }

    /// `self * m` for a natural `m`.
    pub fn times(&self, m: &Nat) -> Ordinal {
        if m.is_zero() || self.is_zero() {
            return Ordinal::zero();
        }
        let mut terms = self.terms.clone();
        terms[0].coeff *= m;
        Ordinal { terms }
    }

    /// Builds a term from monomials in any order, merging equal heads.
    pub(crate) fn from_unsorted(mut monos: Vec<Monomial>) -> Ordinal {
        monos.retain(|m| !m.coeff.is_zero());
        monos.sort_by(|l, r| r.head.cmp(&l.head));
        let mut terms: Vec<Monomial> = Vec::with_capacity(monos.len());
        for mono in monos {
            match terms.last_mut() {
                Some(last) if last.head == mono.head => last.coeff += mono.coeff,
                _ => terms.push(mono),
            }
        }
        Ordinal { terms }
    }

    /// Checks the normal-form invariants. Always true for values built
    /// through the public constructors.
    pub fn is_canonical(&self) -> bool {
        let ordered = self.terms.windows(2).all(|w| w[0].head > w[1].head);
        ordered
            && self.terms.iter().all(|m| {
                !m.coeff.is_zero()
                    && match &m.head {
                        Head::Omega(e) => e.as_bare_eps().is_none() && e.is_canonical(),
                        Head::Eps(g) => g.is_canonical(),
                    }
            })
    }

    /// `self[k]`, the k-th member of the fundamental sequence.
    pub fn fund(&self, k: u64) -> Ordinal {
        let Some(last) = self.terms.last() else {
            return Ordinal::zero();
        };
        if self.terms.len() == 1 && last.coeff.is_one() {
            return fund_head(&last.head, k);
        }
        // w^b * m + ... splits off one copy of the last head.
        let mut prefix = self.terms.clone();
        let tail = prefix.last_mut().expect("nonzero");
        tail.coeff -= 1u32;
        if tail.coeff.is_zero() {
            prefix.pop();
        }
        Ordinal { terms: prefix }.add(&fund_head(&last.head, k))
    }

    /// Depth of nested epsilon subscripts.
    pub fn eps_depth(&self) -> usize {
        self.terms
            .iter()
            .map(|m| match &m.head {
                Head::Omega(e) => e.eps_depth(),
                Head::Eps(g) => 1 + g.eps_depth(),
            })
            .max()
            .unwrap_or(0)
    }

    /// Number of monomials, counted through exponents and subscripts.
    pub fn size(&self) -> usize {
        self.terms
            .iter()
            .map(|m| match &m.head {
                Head::Omega(e) | Head::Eps(e) => 1 + e.size(),
            })
            .sum()
    }

    /// Every epsilon subscript is finite.
    pub fn has_finite_eps_subscripts(&self) -> bool {
        self.terms.iter().all(|m| match &m.head {
            Head::Omega(e) => e.has_finite_eps_subscripts(),
            Head::Eps(g) => g.as_nat().is_some(),
        })
    }
}

fn fund_head(head: &Head, k: u64) -> Ordinal {
    match head {
        Head::Omega(beta) => {
            if beta.is_zero() {
                Ordinal::zero()
            } else if beta.is_successor() {
                Ordinal::omega_pow(&beta.predecessor()).times(&Nat::from(k))
            } else {
                Ordinal::omega_pow(&beta.fund(k))
            }
        }
        Head::Eps(beta) => {
            if beta.is_zero() {
                omega_tower(k, &Ordinal::one())
            } else if beta.is_successor() {
                let start = Ordinal::eps(&beta.predecessor()).add(&Ordinal::one());
                omega_tower(k, &start)
            } else {
                Ordinal::eps(&beta.fund(k))
            }
        }
    }
}

/// `w_0(a) = a`, `w_{k+1}(a) = w^(w_k(a))`.
pub fn omega_tower(k: u64, alpha: &Ordinal) -> Ordinal {
    (0..k).fold(alpha.clone(), |acc, _| Ordinal::omega_pow(&acc))
}

/// `alpha, alpha[1], alpha[1][2], ...` for at most `max_steps` steps,
/// stopping at zero.
pub fn descent(alpha: &Ordinal, max_steps: u64) -> Vec<Ordinal> {
    let mut out = vec![alpha.clone()];
    let mut cur = alpha.clone();
    for step in 1..=max_steps {
        if cur.is_zero() {
            break;
        }
        cur = cur.fund(step);
        out.push(cur.clone());
    }
    out
}

/// Whether `beta` is reached from `alpha` by repeatedly taking `[k]`.
pub fn step_down_reachable(alpha: &Ordinal, beta: &Ordinal, k: u64, max_steps: u64) -> Reach {
    let mut cur = alpha.clone();
    let mut steps = 0;
    loop {
        match cur.cmp(beta) {
            Ordering::Equal => return Reach::Yes,
            Ordering::Less => return Reach::No,
            Ordering::Greater => {}
        }
        if steps == max_steps {
            return Reach::Unknown;
        }
        cur = cur.fund(k);
        steps += 1;
    }
}

impl Ord for Head {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Head::Omega(l), Head::Omega(r)) => l.cmp(r),
            (Head::Eps(l), Head::Eps(r)) => l.cmp(r),
            // e_g = w^(e_g)
            (Head::Eps(_), Head::Omega(e)) => cmp_single(self, e),
            (Head::Omega(e), Head::Eps(_)) => cmp_single(other, e).reverse(),
        }
    }
}

impl PartialOrd for Head {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Compares the one-monomial term `head * 1` with `rhs`.
fn cmp_single(head: &Head, rhs: &Ordinal) -> Ordering {
    let Some(first) = rhs.terms.first() else {
        return Ordering::Greater;
    };
    head.cmp(&first.head).then_with(|| {
        if first.coeff.is_one() && rhs.terms.len() == 1 {
            Ordering::Equal
        } else {
            Ordering::Less
        }
    })
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (l, r) in self.terms.iter().zip(&other.terms) {
            let ord = l.head.cmp(&r.head).then_with(|| l.coeff.cmp(&r.coeff));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::from_nat(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    fn w() -> Ordinal {
        Ordinal::omega()
    }

    fn nat(n: u64) -> Ordinal {
        Ordinal::from(n)
    }

    #[test]
    fn comparison_examples() {
        assert_eq!(nat(0).cmp(&nat(0)), Ordering::Equal);
        assert_eq!(p("e(0)").cmp(&p("w^(e(0)+1)")), Ordering::Less);
        assert_eq!(p("w^(w)*3 + w").cmp(&p("w^(w)*3 + 2")), Ordering::Greater);
        assert!(p("e(0)") > p("w^(w^(w))"));
        assert!(p("e(1)") > p("w^(e(0)*2)"));
        assert!(p("e(0)*2") < p("w^(e(0)+1)"));
        assert!(p("e(e(0))") > p("e(w)"));
    }

    #[test]
    fn addition_examples() {
        let a = p("w^(2)*3 + 1");
        assert_eq!(a.add(&nat(0)), a);
        assert_eq!(nat(0).add(&a), a);
        assert_eq!(w().add(&nat(1)), p("w + 1"));
        assert_eq!(p("w + 1").add(&w()), p("w*2"));
        assert_eq!(nat(3).add(&nat(4)), nat(7));
        assert_eq!(p("e(0) + w").add(&p("e(0)")), p("e(0)*2"));
        assert_eq!(nat(5).add(&p("e(0)")), p("e(0)"));
    }

    #[test]
    fn constructor_examples() {
        assert_eq!(Ordinal::omega_pow(&nat(0)), nat(1));
        assert_eq!(Ordinal::omega_pow(&Ordinal::eps(&nat(0))), p("e(0)"));
        assert_eq!(
            Ordinal::omega_pow(&nat(2)).times(&Nat::from(3u32)),
            p("w^(2)*3")
        );
        assert_eq!(p("w^(2)*2 + w").times(&Nat::from(3u32)), p("w^(2)*6 + w"));
    }

    #[test]
    fn tower_examples() {
        let a = p("w^(2)+1");
        assert_eq!(omega_tower(0, &a), a);
        assert_eq!(omega_tower(2, &nat(1)), p("w^(w)"));
        let start = p("e(0)+1");
        let unrolled = Ordinal::omega_pow(&Ordinal::omega_pow(&Ordinal::omega_pow(&start)));
        assert_eq!(omega_tower(3, &start), unrolled);
        assert_eq!(omega_tower(3, &start).to_string(), "w^(w^(w^(e(0)+1)))");
        assert_eq!(omega_tower(4, &p("e(3)")), p("e(3)"));
    }

    #[test]
    fn fundamental_sequence_examples() {
        for m in 1..20u64 {
            for k in 0..5 {
                assert_eq!(nat(m).fund(k), nat(m - 1));
            }
        }
        assert_eq!(p("e(0)").fund(2), p("w^(w)"));
        assert_eq!(p("w^(2)").fund(3), p("w*3"));
        assert_eq!(p("e(1)").fund(2), p("w^(w^(e(0)+1))"));
        assert_eq!(p("e(w)").fund(3), p("e(3)"));
        assert_eq!(p("w^(w)*2").fund(2), p("w^(w) + w^(2)"));
        assert_eq!(p("w^(e(0)*2)").fund(1), p("w^(e(0)+w)"));
        assert_eq!(nat(0).fund(4), nat(0));
    }

    #[test]
    fn reachability_examples() {
        let a = p("w^(w)+3");
        assert_eq!(step_down_reachable(&a, &a, 2, 0), Reach::Yes);
        assert_eq!(step_down_reachable(&w(), &nat(3), 3, 10), Reach::Yes);
        assert_eq!(step_down_reachable(&w(), &nat(4), 3, 10), Reach::No);
        assert_eq!(
            step_down_reachable(&p("e(0)"), &nat(0), 2, 3),
            Reach::Unknown
        );
    }

    #[test]
    fn descent_examples() {
        assert_eq!(descent(&nat(0), 5), vec![nat(0)]);
        assert_eq!(descent(&nat(3), 5), vec![nat(3), nat(2), nat(1), nat(0)]);
        assert_eq!(
            descent(&p("w^(w)"), 3),
            vec![p("w^(w)"), w(), nat(2), nat(1)]
        );
    }

    #[test]
    fn classification() {
        assert!(nat(3).is_successor());
        assert!(p("w+1").is_successor());
        assert!(w().is_limit());
        assert!(p("e(0)").is_limit());
        assert!(!nat(0).is_limit() && !nat(0).is_successor());
    }

    #[test]
    fn canonicality_check() {
        assert!(p("e(0)*2 + w^(2)*3 + 5").is_canonical());
        let bad = Ordinal {
            terms: vec![Monomial {
                head: Head::Omega(Ordinal::eps(&nat(0))),
                coeff: Nat::one(),
            }],
        };
        assert!(!bad.is_canonical());
        let unordered = Ordinal {
            terms: vec![
                Monomial {
                    head: Head::Omega(nat(0)),
                    coeff: Nat::one(),
                },
                Monomial {
                    head: Head::Omega(nat(1)),
                    coeff: Nat::one(),
                },
            ],
        };
        assert!(!unordered.is_canonical());
    }

    #[test]
    fn unsorted_builder_merges_heads() {
        let one = Monomial {
            head: Head::Omega(nat(0)),
            coeff: Nat::from(2u32),
        };
        let omega = Monomial {
            head: Head::Omega(nat(1)),
            coeff: Nat::one(),
        };
        let o = Ordinal::from_unsorted(vec![one.clone(), omega, one]);
        assert_eq!(o, p("w + 4"));
    }
}
