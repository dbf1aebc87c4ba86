//! Elements of a Garside group and the monoid-generic arithmetic on them.
//!
//! Every group element has a unique left normal form `Δ^p·a_1⋯a_l` where each
//! `a_i` is a simple different from `1` and `Δ`, and every consecutive pair is
//! left-weighted (`∂a_i ∧ a_{i+1} = 1`). [`GroupElement`] stores exactly that
//! form, so derived equality and hashing are equality in the group.

use crate::structure::Garside;

/// Version of the canonical key layout written by [`GroupOps::canonical_key`].
pub const KEY_VERSION: u32 = 1;

/// `Δ^power · factors`, in left normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement<S> {
    power: i64,
    factors: Vec<S>,
}

impl<S: Copy> GroupElement<S> {
    pub fn identity() -> Self {
        GroupElement {
            power: 0,
            factors: Vec::new(),
        }
    }

    pub fn delta_power(p: i64) -> Self {
        GroupElement {
            power: p,
            factors: Vec::new(),
        }
    }

    /// Infimum, the exponent of `Δ`.
    pub fn inf(&self) -> i64 {
        self.power
    }

    pub fn sup(&self) -> i64 {
        self.power + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[S] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.power == 0 && self.factors.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.power >= 0
    }
}

/// A product of simple factors, not necessarily in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveElement<S> {
    factors: Vec<S>,
    normalized: bool,
}

impl<S: Copy> PositiveElement<S> {
    pub fn new(factors: Vec<S>) -> Self {
        PositiveElement {
            factors,
            normalized: false,
        }
    }

    pub fn factors(&self) -> &[S] {
        &self.factors
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }
}

/// One item of a mixed product: a power of `Δ` or a simple factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Token<S> {
    Delta(i64),
    Simple(S),
}

/// Normal forms and group arithmetic, available on every [`Garside`]
/// structure.
pub trait GroupOps: Garside {
    /// Left normal form of a product of simples.
    ///
    /// Factors are appended one at a time; after each append the new
    /// rightmost pair `(a, b)` is rewritten to `(a·t, t⁻¹b)` with
    /// `t = ∂a ∧ b`, moving one position left after every change until a pair
    /// is already left-weighted.
    fn left_normal_form(&self, w: &PositiveElement<Self::Simple>) -> GroupElement<Self::Simple> {
        normalize(self, 0, w.factors.iter().copied())
    }

    /// Normal form of `Δ^power · factors` for arbitrary simple factors.
    fn normal_form_of(&self, power: i64, factors: &[Self::Simple]) -> GroupElement<Self::Simple> {
        normalize(self, power, factors.iter().copied())
    }

    /// Right normal form `x_1⋯x_l · Δ^p` of a positive product, returned as
    /// `(x_1..x_l, p)`.
    fn right_normal_form(&self, w: &PositiveElement<Self::Simple>) -> (Vec<Self::Simple>, i64) {
        right_normalize(self, w.factors.iter().rev().copied())
    }

    /// Right normal form of a group element: `a = x_1⋯x_l · Δ^p` with the same
    /// `p` and `l` as the left normal form.
    fn right_normal_form_of(&self, a: &GroupElement<Self::Simple>) -> (Vec<Self::Simple>, i64) {
        // Δ^p·A = τ^{-p}(A)·Δ^p
        let shifted: Vec<_> = a.factors.iter().map(|f| self.tau_pow(f, -a.power)).collect();
        let (xs, extra) = right_normalize(self, shifted.into_iter().rev());
        (xs, extra + a.power)
    }

    /// Evaluates a sequence of `Δ` powers and simples.
    fn from_tokens(&self, tokens: &[Token<Self::Simple>]) -> GroupElement<Self::Simple> {
        // X·Δ^k = Δ^k·τ^k(X): every simple is shifted by the Δ-exponent to its right.
        let mut shift = 0i64;
        let mut rev = Vec::with_capacity(tokens.len());
        for tok in tokens.iter().rev() {
            match tok {
                Token::Delta(k) => shift += k,
                Token::Simple(s) => rev.push(self.tau_pow(s, shift)),
            }
        }
        normalize(self, shift, rev.into_iter().rev())
    }

    fn simple_element(&self, s: &Self::Simple) -> GroupElement<Self::Simple> {
        normalize(self, 0, std::iter::once(*s))
    }

    fn multiply(
        &self,
        a: &GroupElement<Self::Simple>,
        b: &GroupElement<Self::Simple>,
    ) -> GroupElement<Self::Simple> {
        // Δ^p·A·Δ^q·B = Δ^{p+q}·τ^q(A)·B, and τ^q(A) is still left-weighted.
        let mut out: Vec<_> = a.factors.iter().map(|f| self.tau_pow(f, b.power)).collect();
        for f in &b.factors {
            push_right(self, &mut out, *f);
        }
        finish(self, a.power + b.power, out)
    }

    fn invert(&self, a: &GroupElement<Self::Simple>) -> GroupElement<Self::Simple> {
        // a_i⁻¹ = ∂(a_i)·Δ⁻¹
        let mut tokens = Vec::with_capacity(2 * a.factors.len() + 1);
        for f in a.factors.iter().rev() {
            tokens.push(Token::Simple(self.right_complement(f)));
            tokens.push(Token::Delta(-1));
        }
        tokens.push(Token::Delta(-a.power));
        self.from_tokens(&tokens)
    }

    /// `c⁻¹·a·c`.
    fn conjugate(
        &self,
        a: &GroupElement<Self::Simple>,
        c: &GroupElement<Self::Simple>,
    ) -> GroupElement<Self::Simple> {
        let left = self.multiply(&self.invert(c), a);
        self.multiply(&left, c)
    }

    /// `s⁻¹·a·s` for a simple `s`.
    fn conjugate_by_simple(
        &self,
        a: &GroupElement<Self::Simple>,
        s: &Self::Simple,
    ) -> GroupElement<Self::Simple> {
        // s⁻¹ = ∂s·Δ⁻¹
        let mut tokens = Vec::with_capacity(a.factors.len() + 3);
        tokens.push(Token::Simple(self.right_complement(s)));
        tokens.push(Token::Delta(a.power - 1));
        tokens.extend(a.factors.iter().map(|f| Token::Simple(*f)));
        tokens.push(Token::Simple(*s));
        self.from_tokens(&tokens)
    }

    /// Maximal simple left divisor. `None` when `a` is not positive.
    fn lm(&self, a: &GroupElement<Self::Simple>) -> Option<Self::Simple> {
        match a.power {
            p if p < 0 => None,
            p if p > 0 => Some(self.delta()),
            _ => Some(a.factors.first().copied().unwrap_or_else(|| self.identity())),
        }
    }

    /// Maximal simple right divisor. `None` when `a` is not positive.
    fn rm(&self, a: &GroupElement<Self::Simple>) -> Option<Self::Simple> {
        match a.power {
            p if p < 0 => None,
            p if p > 0 => Some(self.delta()),
            _ => {
                let (xs, _) = self.right_normal_form_of(a);
                Some(xs.last().copied().unwrap_or_else(|| self.identity()))
            }
        }
    }

    /// `c(a) = Δ^p·a_2⋯a_l·τ^{-p}(a_1)`, together with the conjugating simple
    /// `τ^{-p}(a_1)`. Elements of canonical length 0 are returned unchanged
    /// with conjugator `1`.
    fn cycling(&self, a: &GroupElement<Self::Simple>) -> (GroupElement<Self::Simple>, Self::Simple) {
        let Some(first) = a.factors.first() else {
            return (a.clone(), self.identity());
        };
        let moved = self.tau_pow(first, -a.power);
        let mut out = a.factors[1..].to_vec();
        push_right(self, &mut out, moved);
        (finish(self, a.power, out), moved)
    }

    /// `d(a) = Δ^p·τ^p(a_l)·a_1⋯a_{l-1}`, together with the conjugator `a_l⁻¹`.
    fn decycling(
        &self,
        a: &GroupElement<Self::Simple>,
    ) -> (GroupElement<Self::Simple>, GroupElement<Self::Simple>) {
        let Some(last) = a.factors.last() else {
            return (a.clone(), GroupElement::identity());
        };
        let moved = self.tau_pow(last, a.power);
        let rest = &a.factors[..a.factors.len() - 1];
        let result = normalize(self, a.power, std::iter::once(moved).chain(rest.iter().copied()));
        let conj = self.invert(&self.simple_element(last));
        (result, conj)
    }

    /// Exponent sum (abelianization), defined for homogeneous monoids.
    fn exponent_sum(&self, a: &GroupElement<Self::Simple>) -> i64 {
        a.power * self.delta_length() as i64
            + a.factors.iter().map(|f| self.simple_length(f) as i64).sum::<i64>()
    }

    /// Fixed layout key: `p` as `i64` little-endian, the factor count as `u32`
    /// little-endian, then each factor's fixed-width encoding.
    fn canonical_key(&self, a: &GroupElement<Self::Simple>) -> Vec<u8> {
        let mut out = Vec::with_capacity(12 + a.factors.len() * self.strands());
        out.extend_from_slice(&a.power.to_le_bytes());
        out.extend_from_slice(&(a.factors.len() as u32).to_le_bytes());
        for f in &a.factors {
            self.encode_simple(f, &mut out);
        }
        out
    }

    /// Whether every consecutive pair satisfies `∂a_i ∧ a_{i+1} = 1` and no
    /// factor is `1` or `Δ`.
    fn is_left_weighted(&self, factors: &[Self::Simple]) -> bool {
        factors.iter().all(|f| !self.is_identity(f) && !self.is_delta(f))
            && factors
                .windows(2)
                .all(|w| self.meet_is_trivial(&self.right_complement(&w[0]), &w[1]))
    }

    /// The positive element `Δ^p·a_1⋯a_l` as a normalized factor list, with
    /// the `Δ` power spelled out as `p` copies of `Δ`. `None` when `p < 0`.
    fn to_positive(&self, a: &GroupElement<Self::Simple>) -> Option<PositiveElement<Self::Simple>> {
        if a.power < 0 {
            return None;
        }
        let mut factors = vec![self.delta(); a.power as usize];
        factors.extend_from_slice(&a.factors);
        Some(PositiveElement {
            factors,
            normalized: true,
        })
    }

    /// Word in the atoms for the positive part, preceded by the `Δ` exponent.
    fn atom_word(&self, a: &GroupElement<Self::Simple>) -> (i64, Vec<usize>) {
        (a.power, a.factors.iter().flat_map(|f| self.word(f)).collect())
    }
}

impl<G: Garside + ?Sized> GroupOps for G {}

/// Appends `s` to a left-weighted sequence and restores left-weightedness.
pub(crate) fn push_right<G: Garside + ?Sized>(g: &G, out: &mut Vec<G::Simple>, s: G::Simple) {
    if g.is_identity(&s) {
        return;
    }
    out.push(s);
    let mut i = out.len() - 1;
    while i > 0 {
        let a = out[i - 1];
        let b = out[i];
        let comp = g.right_complement(&a);
        if g.meet_is_trivial(&comp, &b) {
            break;
        }
        let t = g.meet(&comp, &b);
        out[i - 1] = g.mul(&a, &t);
        let rest = g.left_quotient(&t, &b);
        if g.is_identity(&rest) {
            out.remove(i);
        } else {
            out[i] = rest;
        }
        i -= 1;
    }
}

/// Moves leading `Δ` factors into the power.
fn finish<G: Garside + ?Sized>(g: &G, power: i64, mut factors: Vec<G::Simple>) -> GroupElement<G::Simple> {
    let deltas = factors.iter().take_while(|f| g.is_delta(f)).count();
    factors.drain(..deltas);
    debug_assert!(factors.iter().all(|f| !g.is_delta(f) && !g.is_identity(f)));
    GroupElement {
        power: power + deltas as i64,
        factors,
    }
}

fn normalize<G, I>(g: &G, power: i64, factors: I) -> GroupElement<G::Simple>
where
    G: Garside + ?Sized,
    I: IntoIterator<Item = G::Simple>,
{
    let mut out = Vec::new();
    for s in factors {
        push_right(g, &mut out, s);
    }
    finish(g, power, out)
}

/// Right normal form of the product of `factors_right_to_left` (given from
/// the rightmost factor to the leftmost). Each factor is prepended and the
/// pair `(a, b)` rewritten to `(a·t⁻¹, t·b)` with `t` the right gcd of `a`
/// and the left complement of `b`.
fn right_normalize<G, I>(g: &G, factors_right_to_left: I) -> (Vec<G::Simple>, i64)
where
    G: Garside + ?Sized,
    I: IntoIterator<Item = G::Simple>,
{
    // rev[0] is the rightmost factor
    let mut rev: Vec<G::Simple> = Vec::new();
    for s in factors_right_to_left {
        if g.is_identity(&s) {
            continue;
        }
        rev.push(s);
        let mut i = rev.len() - 1;
        while i > 0 {
            let a = rev[i];
            let b = rev[i - 1];
            let t = g.right_meet(&a, &g.left_complement(&b));
            if g.is_identity(&t) {
                break;
            }
            rev[i - 1] = g.mul(&t, &b);
            let rest = g.right_quotient(&a, &t);
            if g.is_identity(&rest) {
                rev.remove(i);
            } else {
                rev[i] = rest;
            }
            i -= 1;
        }
    }
    let deltas = rev.iter().take_while(|f| g.is_delta(f)).count();
    rev.drain(..deltas);
    rev.reverse();
    (rev, deltas as i64)
}
