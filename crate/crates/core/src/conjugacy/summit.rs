//! Reaching the summit by cycling and decycling.

use std::collections::HashSet;

use crate::element::{GroupElement, GroupOps};
use crate::structure::Garside;

/// A conjugate of the input, together with `c` such that
/// `element = c⁻¹·input·c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ascent<S> {
    pub element: GroupElement<S>,
    pub conjugator: GroupElement<S>,
}

/// Cycles `a` until its infimum reaches `m`. Returns `None` when the
/// summit infimum of `a` is below `m`.
pub fn ascend_infimum<G: Garside + ?Sized>(g: &G, a: &GroupElement<G::Simple>, m: i64) -> Option<Ascent<G::Simple>> {
    let (top, conjugator) = cycle_to_top(g, a, Some(m));
    (top.inf() >= m).then_some(Ascent {
        element: top,
        conjugator,
    })
}

/// A conjugate of `a` with summit infimum and summit supremum.
pub fn ascend_summit<G: Garside + ?Sized>(g: &G, a: &GroupElement<G::Simple>) -> Ascent<G::Simple> {
    let (mut cur, mut conj) = cycle_to_top(g, a, None);
    let inf = cur.inf();
    let mut best = cur.sup();
    let mut visited = HashSet::new();
    visited.insert(cur.clone());
    let mut since = 0;
    loop {
        let (next, c) = g.decycling(&cur);
        debug_assert!(next.inf() >= inf);
        conj = g.multiply(&conj, &c);
        cur = next;
        since += 1;
        if cur.sup() < best {
            debug_assert!(!g.is_homogeneous() || since <= g.delta_length());
            best = cur.sup();
            visited.clear();
            since = 0;
        }
        if !visited.insert(cur.clone()) {
            break;
        }
    }
    Ascent {
        element: cur,
        conjugator: conj,
    }
}

/// Repeated cycling until the infimum reaches `target` or a loop shows
/// that the summit infimum has been reached.
fn cycle_to_top<G: Garside + ?Sized>(
    g: &G,
    a: &GroupElement<G::Simple>,
    target: Option<i64>,
) -> (GroupElement<G::Simple>, GroupElement<G::Simple>) {
    let mut cur = a.clone();
    let mut conj = GroupElement::identity();
    let mut best = cur.inf();
    let mut visited = HashSet::new();
    visited.insert(cur.clone());
    let mut since = 0;
    loop {
        if target.is_some_and(|m| cur.inf() >= m) {
            return (cur, conj);
        }
        let (next, c) = g.cycling(&cur);
        conj = g.multiply(&conj, &g.simple_element(&c));
        cur = next;
        since += 1;
        if cur.inf() > best {
            debug_assert!(!g.is_homogeneous() || since <= g.delta_length());
            best = cur.inf();
            visited.clear();
            since = 0;
        }
        if !visited.insert(cur.clone()) {
            return (cur, conj);
        }
    }
}
