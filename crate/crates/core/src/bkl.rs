//! The Birman–Ko–Lee monoid `BKL_n⁺` of band generators `a_{ts}`, `n ≥ t > s ≥ 1`.
//!
//! Simple elements correspond to non-crossing partitions of `{1..n}`: a block
//! `{b_1 > b_2 > ⋯ > b_k}` stands for the descending cycle
//! `a_{b_1 b_2}·a_{b_2 b_3}⋯a_{b_{k-1} b_k}`, blocks commute, and `δ` is the
//! single block. Left and right divisibility of simples are both refinement
//! of partitions, so meet is the common refinement and join the
//! non-crossing closure of the union.
//!
//! Under the map to permutations (left-to-right composition, as in
//! [`crate::artin`]) a block becomes the cycle sending each element to the
//! next larger one in its block and the largest back to the smallest.
//! Products and quotients of simples are computed on those permutations.

use std::fmt;

use crate::artin::MAX_STRANDS;
use crate::error::{Error, Result};
use crate::structure::{AtomId, Garside};

type Perm = [u8; MAX_STRANDS];

/// A non-crossing partition of `{0..n-1}`. `label[j]` is the smallest
/// element of the block containing `j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NcPartition {
    n: u8,
    label: [u8; MAX_STRANDS],
}

impl NcPartition {
    pub fn discrete(n: usize) -> Self {
        let mut label = [0u8; MAX_STRANDS];
        for (j, v) in label.iter_mut().enumerate() {
            *v = j as u8;
        }
        NcPartition { n: n as u8, label }
    }

    pub fn len(&self) -> usize {
        self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Block minimum of each element (0-based).
    pub fn labels(&self) -> &[u8] {
        &self.label[..self.n as usize]
    }

    /// Blocks as sorted lists of 0-based elements, ordered by minimum.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for j in 0..self.len() {
            let b = self.label[j] as usize;
            if b == j {
                out.push(vec![j]);
            } else {
                out.iter_mut().find(|blk| blk[0] == b).unwrap().push(j);
            }
        }
        out
    }

    pub fn block_count(&self) -> usize {
        (0..self.len()).filter(|&j| self.label[j] as usize == j).count()
    }

    /// Builds the partition from arbitrary block labels (equal label, same
    /// block). Does not check the non-crossing condition.
    fn from_classes(n: usize, class: &[u8]) -> Self {
        let mut p = NcPartition::discrete(n);
        for j in 0..n {
            p.label[j] = (0..=j).find(|&k| class[k] == class[j]).unwrap() as u8;
        }
        p
    }

    /// The cycle permutation of the partition.
    fn permutation(&self) -> Perm {
        let n = self.len();
        let mut perm = [0u8; MAX_STRANDS];
        let mut next_seen = [u8::MAX; MAX_STRANDS];
        for j in (0..n).rev() {
            let b = self.label[j] as usize;
            perm[j] = if next_seen[b] == u8::MAX { b as u8 } else { next_seen[b] };
            next_seen[b] = j as u8;
        }
        perm
    }

    fn from_permutation(n: usize, perm: &Perm) -> Self {
        let mut p = NcPartition::discrete(n);
        let mut seen = [false; MAX_STRANDS];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                p.label[j] = start as u8;
                j = perm[j] as usize;
            }
        }
        debug_assert_eq!(&p.permutation()[..n], &perm[..n], "permutation is not a non-crossing cycle product");
        p
    }

    pub fn is_non_crossing(&self) -> bool {
        let n = self.len();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        if self.label[a] == self.label[c]
                            && self.label[b] == self.label[d]
                            && self.label[a] != self.label[b]
                        {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

impl fmt::Debug for NcPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for blk in self.blocks().into_iter().filter(|b| b.len() > 1) {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let items: Vec<String> = blk.iter().map(|j| (j + 1).to_string()).collect();
            write!(f, "[{}]", items.join(","))?;
        }
        write!(f, "}}")
    }
}

fn invert(n: usize, p: &Perm) -> Perm {
    let mut out = [0u8; MAX_STRANDS];
    for j in 0..n {
        out[p[j] as usize] = j as u8;
    }
    out
}

fn compose(n: usize, first: &Perm, second: &Perm) -> Perm {
    let mut out = [0u8; MAX_STRANDS];
    for j in 0..n {
        out[j] = second[first[j] as usize];
    }
    out
}

/// `BKL_n⁺` for a fixed strand count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BklMonoid {
    n: usize,
    atoms: Vec<(usize, usize)>,
}

impl BklMonoid {
    pub fn new(n: usize) -> Result<Self> {
        if !(2..=MAX_STRANDS).contains(&n) {
            return Err(Error::StrandCount {
                n,
                min: 2,
                max: MAX_STRANDS,
            });
        }
        let mut atoms = Vec::new();
        for t in 2..=n {
            for s in 1..t {
                atoms.push((t, s));
            }
        }
        Ok(BklMonoid { n, atoms })
    }

    /// Atom index of `a_{ts}` (1-based `t > s`): atoms are ordered by `t`,
    /// then `s`.
    pub fn atom_index(&self, t: usize, s: usize) -> Option<AtomId> {
        if t > self.n || s == 0 || s >= t {
            return None;
        }
        Some((t - 1) * (t - 2) / 2 + (s - 1))
    }

    /// `(t, s)` of an atom, 1-based.
    pub fn atom_pair(&self, x: AtomId) -> (usize, usize) {
        self.atoms[x]
    }

    /// `a_{ts}` as a simple element.
    pub fn band(&self, t: usize, s: usize) -> NcPartition {
        self.atom(self.atom_index(t, s).expect("band generator out of range"))
    }

    /// Smallest non-crossing partition coarser than the partition with the
    /// given block classes.
    fn non_crossing_closure(&self, class: &mut [u8; MAX_STRANDS]) {
        let n = self.n;
        loop {
            let mut merged = false;
            'scan: for i in 0..n {
                let Some(j) = (i + 1..n).find(|&j| class[j] == class[i]) else {
                    continue;
                };
                for k in i + 1..j {
                    let ck = class[k];
                    if ck == class[i] {
                        continue;
                    }
                    let outside = (0..i).chain(j + 1..n).any(|m| class[m] == ck);
                    if outside {
                        let (from, to) = (ck, class[i]);
                        for c in class.iter_mut().take(n) {
                            if *c == from {
                                *c = to;
                            }
                        }
                        merged = true;
                        break 'scan;
                    }
                }
            }
            if !merged {
                return;
            }
        }
    }
}

impl Garside for BklMonoid {
    type Simple = NcPartition;

    fn name(&self) -> &'static str {
        "bkl"
    }

    fn strands(&self) -> usize {
        self.n
    }

    fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    fn atom(&self, x: AtomId) -> NcPartition {
        let (t, s) = self.atoms[x];
        let mut p = NcPartition::discrete(self.n);
        p.label[t - 1] = (s - 1) as u8;
        p
    }

    fn identity(&self) -> NcPartition {
        NcPartition::discrete(self.n)
    }

    fn delta(&self) -> NcPartition {
        let mut p = NcPartition::discrete(self.n);
        p.label[..self.n].fill(0);
        p
    }

    fn delta_length(&self) -> usize {
        self.n - 1
    }

    fn simple_length(&self, s: &NcPartition) -> usize {
        self.n - s.block_count()
    }

    fn atom_divides_left(&self, x: AtomId, s: &NcPartition) -> bool {
        let (t, r) = self.atoms[x];
        s.label[t - 1] == s.label[r - 1]
    }

    fn atom_divides_right(&self, x: AtomId, s: &NcPartition) -> bool {
        self.atom_divides_left(x, s)
    }

    fn meet(&self, s: &NcPartition, t: &NcPartition) -> NcPartition {
        let mut class = [0u8; MAX_STRANDS];
        for j in 0..self.n {
            class[j] = (0..=j)
                .find(|&k| s.label[k] == s.label[j] && t.label[k] == t.label[j])
                .unwrap() as u8;
        }
        NcPartition::from_classes(self.n, &class)
    }

    fn join(&self, s: &NcPartition, t: &NcPartition) -> NcPartition {
        let n = self.n;
        let mut class = s.label;
        for j in 0..n {
            // merge j's t-block into j's current class
            let (a, b) = (class[j], class[t.label[j] as usize]);
            if a != b {
                for c in class.iter_mut().take(n) {
                    if *c == b {
                        *c = a;
                    }
                }
            }
        }
        self.non_crossing_closure(&mut class);
        NcPartition::from_classes(n, &class)
    }

    fn right_meet(&self, s: &NcPartition, t: &NcPartition) -> NcPartition {
        self.meet(s, t)
    }

    fn left_divides(&self, s: &NcPartition, t: &NcPartition) -> bool {
        (0..self.n).all(|j| t.label[j] == t.label[s.label[j] as usize])
    }

    fn mul(&self, s: &NcPartition, t: &NcPartition) -> NcPartition {
        let out = NcPartition::from_permutation(self.n, &compose(self.n, &s.permutation(), &t.permutation()));
        debug_assert_eq!(
            self.simple_length(&out),
            self.simple_length(s) + self.simple_length(t),
            "product not simple"
        );
        out
    }

    fn left_quotient(&self, s: &NcPartition, t: &NcPartition) -> NcPartition {
        debug_assert!(self.left_divides(s, t), "not a left divisor");
        let inv = invert(self.n, &s.permutation());
        NcPartition::from_permutation(self.n, &compose(self.n, &inv, &t.permutation()))
    }

    fn right_quotient(&self, t: &NcPartition, s: &NcPartition) -> NcPartition {
        debug_assert!(self.left_divides(s, t), "not a right divisor");
        let inv = invert(self.n, &s.permutation());
        NcPartition::from_permutation(self.n, &compose(self.n, &t.permutation(), &inv))
    }

    fn tau(&self, s: &NcPartition) -> NcPartition {
        // δ⁻¹·s·δ shifts every block up by one, cyclically
        let n = self.n;
        let perm = s.permutation();
        let mut out = [0u8; MAX_STRANDS];
        for i in 0..n {
            out[(i + 1) % n] = ((perm[i] as usize + 1) % n) as u8;
        }
        NcPartition::from_permutation(n, &out)
    }

    fn tau_inv(&self, s: &NcPartition) -> NcPartition {
        let n = self.n;
        let perm = s.permutation();
        let mut out = [0u8; MAX_STRANDS];
        for i in 0..n {
            out[(i + n - 1) % n] = ((perm[i] as usize + n - 1) % n) as u8;
        }
        NcPartition::from_permutation(n, &out)
    }

    fn tau_order(&self) -> Option<u32> {
        Some(self.n as u32)
    }

    fn meet_is_trivial(&self, s: &NcPartition, t: &NcPartition) -> bool {
        let n = self.n;
        for j in 0..n {
            for k in j + 1..n {
                if s.label[j] == s.label[k] && t.label[j] == t.label[k] {
                    return false;
                }
            }
        }
        true
    }

    /// One byte per element: the 1-based minimum of its block.
    fn encode_simple(&self, s: &NcPartition, out: &mut Vec<u8>) {
        out.extend(s.labels().iter().map(|b| b + 1));
    }

    fn atom_token(&self, x: AtomId) -> String {
        let (t, s) = self.atoms[x];
        format!("a({t},{s})")
    }
}

/// Artin-generator word for a band generator:
/// `a_{ts} = (σ_{t-1}⋯σ_{s+1})·σ_s·(σ_{s+1}⁻¹⋯σ_{t-1}⁻¹)`.
/// Letters are `(k, ±1)` with `k` the 1-based Artin index.
pub fn band_generator_in_artin(t: usize, s: usize) -> Vec<(usize, i64)> {
    let mut out = Vec::with_capacity(2 * (t - s) - 1);
    for k in (s + 1..t).rev() {
        out.push((k, 1));
    }
    out.push((s, 1));
    for k in s + 1..t {
        out.push((k, -1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{enumerate_simples, tau_by_complements};

    fn catalan(n: u64) -> u64 {
        (0..n).fold(1u64, |c, k| c * 2 * (2 * k + 1) / (k + 2))
    }

    #[test]
    fn simple_counts_are_catalan() {
        for n in 2..=7 {
            let g = BklMonoid::new(n).unwrap();
            let all = enumerate_simples(&g, 10_000).unwrap();
            assert_eq!(all.len() as u64, catalan(n as u64), "n = {n}");
            assert!(all.iter().all(|s| s.is_non_crossing()));
        }
        assert_eq!(catalan(4), 14);
    }

    #[test]
    fn join_of_adjacent_bands_is_delta() {
        let g = BklMonoid::new(3).unwrap();
        assert_eq!(g.join(&g.band(2, 1), &g.band(3, 2)), g.delta());
        for s in enumerate_simples(&g, 100).unwrap() {
            assert_eq!(g.meet(&s, &g.identity()), g.identity());
        }
    }

    #[test]
    fn descending_cycle_relations() {
        // a_ts a_sr = a_tr a_ts = a_sr a_tr
        let g = BklMonoid::new(5).unwrap();
        for t in 1..=5 {
            for s in 1..t {
                for r in 1..s {
                    let x = g.mul(&g.band(t, s), &g.band(s, r));
                    let y = g.mul(&g.band(t, r), &g.band(t, s));
                    let z = g.mul(&g.band(s, r), &g.band(t, r));
                    assert_eq!(x, y);
                    assert_eq!(y, z);
                    assert_eq!(x.block_count(), 3);
                }
            }
        }
    }

    #[test]
    fn tau_rotates_labels() {
        let g = BklMonoid::new(3).unwrap();
        assert_eq!(g.tau(&g.band(2, 1)), g.band(3, 2));
        assert_eq!(g.tau(&g.delta()), g.delta());
        for n in 2..=6 {
            let g = BklMonoid::new(n).unwrap();
            for s in enumerate_simples(&g, 1000).unwrap() {
                assert_eq!(g.tau(&s), tau_by_complements(&g, &s));
                assert_eq!(g.tau_inv(&g.tau(&s)), s);
                assert_eq!(g.tau_pow(&s, n as i64), s);
            }
        }
    }

    #[test]
    fn atom_indexing_round_trips() {
        let g = BklMonoid::new(6).unwrap();
        assert_eq!(g.atom_count(), 15);
        for x in 0..g.atom_count() {
            let (t, s) = g.atom_pair(x);
            assert_eq!(g.atom_index(t, s), Some(x));
        }
        assert_eq!(g.atom_index(7, 1), None);
        assert_eq!(g.atom_index(3, 3), None);
    }

    #[test]
    fn band_word_shape() {
        assert_eq!(band_generator_in_artin(2, 1), vec![(1, 1)]);
        assert_eq!(band_generator_in_artin(3, 1), vec![(2, 1), (1, 1), (2, -1)]);
    }

    #[test]
    fn delta_length() {
        let g = BklMonoid::new(6).unwrap();
        assert_eq!(g.simple_length(&g.delta()), 5);
        assert_eq!(g.word(&g.delta()).len(), 5);
    }
}
