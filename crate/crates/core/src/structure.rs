//! The abstract Garside structure.
//!
//! A [`Garside`] implementation describes a Garside monoid through its finite
//! lattice of simple elements: the atoms, the Garside element `Δ`, left
//! divisibility, the lattice operations and the partial products/quotients
//! between simples. Everything else (normal forms, group arithmetic, cycling,
//! the conjugacy algorithms) is written once against this trait.

use std::collections::{HashSet, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};

/// Index of an atom in a structure's atom list, `0 <= index < atom_count()`.
pub type AtomId = usize;

/// A Garside monoid presented through its lattice of simple elements.
///
/// Simple elements are the divisors of `Δ`. Left divisibility is written `≺`:
/// `s ≺ t` when `t = s·u` for some positive `u`.
///
/// Methods documented with a precondition (`mul`, `left_quotient`,
/// `right_quotient`) may return garbage when it does not hold; implementations
/// check it with `debug_assert!`.
pub trait Garside: Sync {
    type Simple: Copy + Eq + Ord + Hash + Debug + Send + Sync;

    /// Short identifier used in file names and reports (`"artin"`, `"bkl"`).
    fn name(&self) -> &'static str;

    /// Number of strands of the ambient braid group.
    fn strands(&self) -> usize;

    fn atom_count(&self) -> usize;

    fn atom(&self, x: AtomId) -> Self::Simple;

    fn identity(&self) -> Self::Simple;

    fn delta(&self) -> Self::Simple;

    /// Word length of `Δ` in the atoms.
    fn delta_length(&self) -> usize;

    /// Whether every defining relation preserves word length.
    fn is_homogeneous(&self) -> bool {
        true
    }

    /// Word length of a simple element (meaningful for homogeneous monoids).
    fn simple_length(&self, s: &Self::Simple) -> usize;

    /// `x ≺ s`.
    fn atom_divides_left(&self, x: AtomId, s: &Self::Simple) -> bool;

    /// `s = t·x` for some simple `t`.
    fn atom_divides_right(&self, x: AtomId, s: &Self::Simple) -> bool;

    /// Left gcd `s ∧ t`.
    fn meet(&self, s: &Self::Simple, t: &Self::Simple) -> Self::Simple;

    /// Left lcm `s ∨ t`.
    fn join(&self, s: &Self::Simple, t: &Self::Simple) -> Self::Simple;

    /// Right gcd: the largest common right divisor.
    fn right_meet(&self, s: &Self::Simple, t: &Self::Simple) -> Self::Simple;

    /// The product `s·t`. Requires the product to be simple.
    fn mul(&self, s: &Self::Simple, t: &Self::Simple) -> Self::Simple;

    /// `s⁻¹·t`. Requires `s ≺ t`.
    fn left_quotient(&self, s: &Self::Simple, t: &Self::Simple) -> Self::Simple;

    /// `t·s⁻¹`. Requires `s` to right-divide `t`.
    fn right_quotient(&self, t: &Self::Simple, s: &Self::Simple) -> Self::Simple;

    /// Fixed-width byte encoding of a simple, used in canonical keys.
    fn encode_simple(&self, s: &Self::Simple, out: &mut Vec<u8>);

    /// Generator token for an atom, in the syntax accepted by the word parser.
    fn atom_token(&self, x: AtomId) -> String;

    /// `∂s`, the simple with `s·∂s = Δ`.
    fn right_complement(&self, s: &Self::Simple) -> Self::Simple {
        self.left_quotient(s, &self.delta())
    }

    /// The simple `c` with `c·s = Δ`.
    fn left_complement(&self, s: &Self::Simple) -> Self::Simple {
        self.right_quotient(&self.delta(), s)
    }

    /// `τ(s) = Δ⁻¹·s·Δ`. From `s·∂s = Δ = ∂s·∂∂s` one gets `τ = ∂∘∂`.
    fn tau(&self, s: &Self::Simple) -> Self::Simple {
        tau_by_complements(self, s)
    }

    /// `τ⁻¹(s) = Δ·s·Δ⁻¹`, the square of the left complement.
    fn tau_inv(&self, s: &Self::Simple) -> Self::Simple {
        let c = self.left_complement(s);
        self.left_complement(&c)
    }

    /// Order of `τ` on simples, when known in closed form.
    fn tau_order(&self) -> Option<u32> {
        None
    }

    /// `τ^m(s)` for any integer `m`.
    fn tau_pow(&self, s: &Self::Simple, m: i64) -> Self::Simple {
        let m = match self.tau_order() {
            Some(order) => m.rem_euclid(order as i64),
            None => m,
        };
        let mut r = *s;
        if m >= 0 {
            for _ in 0..m {
                r = self.tau(&r);
            }
        } else {
            for _ in 0..-m {
                r = self.tau_inv(&r);
            }
        }
        r
    }

    /// `s ≺ t`.
    fn left_divides(&self, s: &Self::Simple, t: &Self::Simple) -> bool {
        self.meet(s, t) == *s
    }

    /// `s` right-divides `t`.
    fn right_divides(&self, s: &Self::Simple, t: &Self::Simple) -> bool {
        self.right_meet(s, t) == *s
    }

    /// `s ∧ t = 1`.
    fn meet_is_trivial(&self, s: &Self::Simple, t: &Self::Simple) -> bool {
        (0..self.atom_count()).all(|x| !(self.atom_divides_left(x, s) && self.atom_divides_left(x, t)))
    }

    fn is_identity(&self, s: &Self::Simple) -> bool {
        *s == self.identity()
    }

    fn is_delta(&self, s: &Self::Simple) -> bool {
        *s == self.delta()
    }

    /// A word in the atoms representing `s` (greedy on the smallest atom).
    fn word(&self, s: &Self::Simple) -> Vec<AtomId> {
        let mut out = Vec::new();
        let mut rest = *s;
        while !self.is_identity(&rest) {
            let x = (0..self.atom_count())
                .find(|&x| self.atom_divides_left(x, &rest))
                .expect("nontrivial simple has an atom divisor");
            out.push(x);
            rest = self.left_quotient(&self.atom(x), &rest);
        }
        out
    }
}

/// `τ(s)` computed as `∂(∂(s))`, independent of any closed form an instance
/// provides.
pub fn tau_by_complements<G: Garside + ?Sized>(g: &G, s: &G::Simple) -> G::Simple {
    let c = g.right_complement(s);
    g.right_complement(&c)
}

/// Enumerates all simple elements by growing from `1` along atoms:
/// `s·x` is simple exactly when `x ≺ ∂s`.
///
/// Fails with [`Error::CapExceeded`] once more than `cap` simples are found.
pub fn enumerate_simples<G: Garside + ?Sized>(g: &G, cap: usize) -> Result<Vec<G::Simple>> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(g.identity());
    queue.push_back(g.identity());
    while let Some(s) = queue.pop_front() {
        let comp = g.right_complement(&s);
        for x in 0..g.atom_count() {
            if g.atom_divides_left(x, &comp) {
                let next = g.mul(&s, &g.atom(x));
                if seen.insert(next) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded {
                            what: "simple elements",
                            cap,
                        });
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    let mut all: Vec<_> = seen.into_iter().collect();
    all.sort();
    Ok(all)
}
