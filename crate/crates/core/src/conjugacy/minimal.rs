//! Minimal simple conjugators: `r_x` for the property "infimum at least `m`"
//! and `ρ_x` for "stays in the summit class", plus the antichains they form.

use crate::element::{push_right, GroupElement, GroupOps, PositiveElement};
use crate::structure::{AtomId, Garside};

/// Which of the two conjugation-closed properties a search preserves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassMode {
    /// Conjugates with infimum at least `m`.
    AtLeast(i64),
    /// Conjugates with summit infimum and supremum.
    Summit,
}

/// The minimal simple elements conjugating `base` back into its class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalSimpleSet<S> {
    pub base: GroupElement<S>,
    pub mode: ClassMode,
    pub elements: Vec<S>,
}

impl<S> MinimalSimpleSet<S> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// The simple `s'` with `s ∨ v = v·s'`, walking the given factorization of `v`.
pub(crate) fn lcm_with_factors<G: Garside + ?Sized>(g: &G, s: &G::Simple, factors: &[G::Simple]) -> G::Simple {
    let mut cur = *s;
    for f in factors {
        if g.is_identity(&cur) {
            break;
        }
        let j = g.join(&cur, f);
        cur = g.left_quotient(f, &j);
    }
    cur
}

/// `s'` such that `s ∨ v = v·s'`, computed over the left normal form of `v`.
pub fn lcm_with_positive<G: Garside + ?Sized>(g: &G, s: &G::Simple, v: &PositiveElement<G::Simple>) -> G::Simple {
    if v.is_normalized() {
        return lcm_with_factors(g, s, v.factors());
    }
    let nf = g.left_normal_form(v);
    let expanded = g.to_positive(&nf).expect("positive input");
    lcm_with_factors(g, s, expanded.factors())
}

/// `r_x`: the smallest simple `s` with `x ≺ s` and `inf(s⁻¹vs) ≥ m`.
/// Requires `inf(v) ≥ m`.
pub fn minimal_conjugator_ge<G: Garside + ?Sized>(g: &G, v: &GroupElement<G::Simple>, m: i64, x: AtomId) -> G::Simple {
    r_x(g, v, m, x, &|_| false).expect("no stop condition")
}

/// `r_x` with an early exit: returns `None` as soon as an intermediate
/// divisor of `r_x` satisfies `stop`.
pub(crate) fn r_x<G: Garside + ?Sized>(
    g: &G,
    v: &GroupElement<G::Simple>,
    m: i64,
    x: AtomId,
    stop: &dyn Fn(&G::Simple) -> bool,
) -> Option<G::Simple> {
    debug_assert!(v.inf() >= m, "element below the requested infimum");
    let mut s = g.atom(x);
    if v.inf() > m {
        return Some(s);
    }
    // v = Δ^m·w with w = the normal factors
    let w = v.factors();
    let mut steps = 0;
    loop {
        if stop(&s) {
            return None;
        }
        let target = g.tau_pow(&s, m);
        let mut ws = w.to_vec();
        push_right(g, &mut ws, s);
        let extra = lcm_with_factors(g, &target, &ws);
        if g.is_identity(&extra) {
            return Some(s);
        }
        s = g.mul(&s, &extra);
        steps += 1;
        debug_assert!(!g.is_homogeneous() || steps <= g.delta_length());
    }
}

/// `ρ_x`: the smallest simple `s` with `x ≺ s` such that `s⁻¹vs` keeps the
/// canonical length of `v`. Requires `v` to lie in its summit class.
pub fn minimal_conjugator_sum<G: Garside + ?Sized>(g: &G, v: &GroupElement<G::Simple>, x: AtomId) -> G::Simple {
    rho_x(g, v, x, &|_| false).expect("no stop condition")
}

pub(crate) fn rho_x<G: Garside + ?Sized>(
    g: &G,
    v: &GroupElement<G::Simple>,
    x: AtomId,
    stop: &dyn Fn(&G::Simple) -> bool,
) -> Option<G::Simple> {
    let t = v.canonical_length();
    let mut s = r_x(g, v, v.inf(), x, stop)?;
    let mut steps = 0;
    loop {
        let conj = g.conjugate_by_simple(v, &s);
        let (ws, _) = g.right_normal_form_of(&conj);
        debug_assert!(ws.len() >= t, "element was not in its summit class");
        if ws.len() <= t {
            return Some(s);
        }
        s = g.mul(&s, &ws[0]);
        if stop(&s) {
            return None;
        }
        steps += 1;
        debug_assert!(!g.is_homogeneous() || steps <= g.delta_length());
    }
}

/// Keeps `r_i` when no atom already kept, and no later atom, divides it.
/// With `fast` set the per-atom computation is abandoned as soon as one of
/// those atoms divides an intermediate value.
fn antichain<G, F>(g: &G, fast: bool, mut compute: F) -> Vec<G::Simple>
where
    G: Garside + ?Sized,
    F: FnMut(AtomId, &dyn Fn(&G::Simple) -> bool) -> Option<G::Simple>,
{
    let nu = g.atom_count();
    let mut kept: Vec<AtomId> = Vec::new();
    let mut out = Vec::new();
    for i in 0..nu {
        let blocked = |s: &G::Simple| {
            kept.iter().any(|&j| g.atom_divides_left(j, s)) || (i + 1..nu).any(|j| g.atom_divides_left(j, s))
        };
        let r = if fast { compute(i, &blocked) } else { compute(i, &|_| false) };
        let Some(r) = r else { continue };
        if !blocked(&r) {
            kept.push(i);
            out.push(r);
        }
    }
    out
}

/// The antichain `S_v^{≥m}` of minimal simples keeping the infimum at least `m`.
pub fn minimal_simple_set_ge<G: Garside + ?Sized>(
    g: &G,
    v: &GroupElement<G::Simple>,
    m: i64,
    fast: bool,
) -> MinimalSimpleSet<G::Simple> {
    let elements = antichain(g, fast, |x, stop| r_x(g, v, m, x, stop));
    MinimalSimpleSet {
        base: v.clone(),
        mode: ClassMode::AtLeast(m),
        elements,
    }
}

/// The antichain `S_v^{sum}` of minimal simples preserving the summit class.
pub fn minimal_simple_set_sum<G: Garside + ?Sized>(
    g: &G,
    v: &GroupElement<G::Simple>,
    fast: bool,
) -> MinimalSimpleSet<G::Simple> {
    let elements = antichain(g, fast, |x, stop| rho_x(g, v, x, stop));
    MinimalSimpleSet {
        base: v.clone(),
        mode: ClassMode::Summit,
        elements,
    }
}
