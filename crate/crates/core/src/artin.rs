//! The positive braid monoid `B_n⁺` with the Artin generators `σ_1..σ_{n-1}`.
//!
//! Simple elements are permutation braids: positive braids in which every
//! pair of strands crosses at most once. Each one is stored as the
//! permutation it induces on strand positions.
//!
//! Conventions: braids compose left to right, and `img[j]` is the final
//! position of the strand that starts at position `j`. Strands `j < k` cross
//! in `s` iff `img[j] > img[k]`; `σ_i ≺ s` iff strands `i` and `i+1` cross.
//! Left divisibility of simples is inclusion of these crossing sets, which
//! makes meet and join bit operations on crossing rows.

use std::fmt;

use crate::error::{Error, Result};
use crate::structure::{AtomId, Garside};

pub const MAX_STRANDS: usize = 16;

/// A permutation of `{0..n-1}`, the underlying data of a permutation braid.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: u8,
    img: [u8; MAX_STRANDS],
}

type Rows = [u16; MAX_STRANDS];

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_STRANDS);
        let mut img = [0u8; MAX_STRANDS];
        for (j, v) in img.iter_mut().enumerate() {
            *v = j as u8;
        }
        Permutation { n: n as u8, img }
    }

    /// Builds a permutation from its images; `None` unless `images` is a
    /// bijection of `{0..len-1}`.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let n = images.len();
        if n > MAX_STRANDS {
            return None;
        }
        let mut seen = [false; MAX_STRANDS];
        let mut p = Permutation::identity(n);
        for (j, &v) in images.iter().enumerate() {
            if v >= n || seen[v] {
                return None;
            }
            seen[v] = true;
            p.img[j] = v as u8;
        }
        Some(p)
    }

    pub fn len(&self) -> usize {
        self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn images(&self) -> &[u8] {
        &self.img[..self.n as usize]
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        let mut out = *self;
        for j in 0..self.len() {
            out.img[j] = other.img[self.img[j] as usize];
        }
        out
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = *self;
        for j in 0..self.len() {
            out.img[self.img[j] as usize] = j as u8;
        }
        out
    }

    /// Number of crossing pairs, the word length of the permutation braid.
    pub fn inversions(&self) -> usize {
        self.crossing_rows()[..self.len()]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum()
    }

    /// `rows[j]` has bit `k` set (`k > j`) when strands `j` and `k` cross.
    fn crossing_rows(&self) -> Rows {
        let n = self.len();
        let mut rows = [0u16; MAX_STRANDS];
        for j in 0..n {
            for k in j + 1..n {
                if self.img[j] > self.img[k] {
                    rows[j] |= 1 << k;
                }
            }
        }
        rows
    }

    /// Inverse of [`crossing_rows`](Self::crossing_rows); the rows must be a
    /// valid crossing set.
    fn from_crossing_rows(n: usize, rows: &Rows) -> Permutation {
        let mut p = Permutation::identity(n);
        for j in 0..n {
            let before = (0..j).filter(|&k| rows[k] & (1 << j) == 0).count();
            p.img[j] = (before + rows[j].count_ones() as usize) as u8;
        }
        debug_assert!(Permutation::from_images(&p.images().iter().map(|&v| v as usize).collect::<Vec<_>>()).is_some());
        p
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (j, v) in self.images().iter().enumerate() {
            if j > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

fn upper_mask(n: usize, j: usize) -> u16 {
    let all = (1u32 << n) - 1;
    (all & !((1u32 << (j + 1)) - 1)) as u16
}

/// Closes a relation on `{0..n-1}` (pairs `j < k`, stored in `rows[j]`) under
/// `j<k<l, (j,k), (k,l) ⇒ (j,l)`.
fn transitive_closure(n: usize, rows: &mut Rows) {
    for i in (0..n).rev() {
        let mut acc = rows[i];
        let mut pending = rows[i];
        while pending != 0 {
            let j = pending.trailing_zeros() as usize;
            pending &= pending - 1;
            acc |= rows[j];
        }
        rows[i] = acc;
    }
}

/// `B_n⁺` for a fixed strand count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinMonoid {
    n: usize,
    delta: Permutation,
}

impl ArtinMonoid {
    pub fn new(n: usize) -> Result<Self> {
        if !(2..=MAX_STRANDS).contains(&n) {
            return Err(Error::StrandCount {
                n,
                min: 2,
                max: MAX_STRANDS,
            });
        }
        let images: Vec<usize> = (0..n).rev().collect();
        Ok(ArtinMonoid {
            n,
            delta: Permutation::from_images(&images).unwrap(),
        })
    }

    /// `σ_k` for `1 <= k <= n-1`.
    pub fn sigma(&self, k: usize) -> Permutation {
        self.atom(k - 1)
    }

    /// The permutation braid spelled by `word`, or `None` if some pair of
    /// strands crosses twice.
    pub fn word_to_simple(&self, word: &[AtomId]) -> Option<Permutation> {
        let mut s = Permutation::identity(self.n);
        for &x in word {
            if x + 1 >= self.n {
                return None;
            }
            // the strands now at positions x, x+1 must not have crossed yet
            let inv = s.inverse();
            if inv.img[x] > inv.img[x + 1] {
                return None;
            }
            s = s.then(&self.atom(x));
        }
        Some(s)
    }

    fn rows_mask(&self) -> Rows {
        let mut rows = [0u16; MAX_STRANDS];
        for (j, r) in rows.iter_mut().enumerate().take(self.n) {
            *r = upper_mask(self.n, j);
        }
        rows
    }

    fn left_descents(&self, s: &Permutation) -> u16 {
        let mut m = 0;
        for i in 0..self.n - 1 {
            if s.img[i] > s.img[i + 1] {
                m |= 1 << i;
            }
        }
        m
    }
}

impl Garside for ArtinMonoid {
    type Simple = Permutation;

    fn name(&self) -> &'static str {
        "artin"
    }

    fn strands(&self) -> usize {
        self.n
    }

    fn atom_count(&self) -> usize {
        self.n - 1
    }

    fn atom(&self, x: AtomId) -> Permutation {
        assert!(x + 1 < self.n, "atom index {x} out of range");
        let mut p = Permutation::identity(self.n);
        p.img.swap(x, x + 1);
        p
    }

    fn identity(&self) -> Permutation {
        Permutation::identity(self.n)
    }

    fn delta(&self) -> Permutation {
        self.delta
    }

    fn delta_length(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    fn simple_length(&self, s: &Permutation) -> usize {
        s.inversions()
    }

    fn atom_divides_left(&self, x: AtomId, s: &Permutation) -> bool {
        s.img[x] > s.img[x + 1]
    }

    fn atom_divides_right(&self, x: AtomId, s: &Permutation) -> bool {
        let inv = s.inverse();
        inv.img[x] > inv.img[x + 1]
    }

    fn meet(&self, s: &Permutation, t: &Permutation) -> Permutation {
        // complement of the closure of the union of non-crossing sets
        let full = self.rows_mask();
        let (rs, rt) = (s.crossing_rows(), t.crossing_rows());
        let mut rows = [0u16; MAX_STRANDS];
        for j in 0..self.n {
            rows[j] = (full[j] & !rs[j]) | (full[j] & !rt[j]);
        }
        transitive_closure(self.n, &mut rows);
        for j in 0..self.n {
            rows[j] = full[j] & !rows[j];
        }
        Permutation::from_crossing_rows(self.n, &rows)
    }

    fn join(&self, s: &Permutation, t: &Permutation) -> Permutation {
        let (rs, rt) = (s.crossing_rows(), t.crossing_rows());
        let mut rows = [0u16; MAX_STRANDS];
        for j in 0..self.n {
            rows[j] = rs[j] | rt[j];
        }
        transitive_closure(self.n, &mut rows);
        Permutation::from_crossing_rows(self.n, &rows)
    }

    fn right_meet(&self, s: &Permutation, t: &Permutation) -> Permutation {
        // word reversal sends a permutation braid to its inverse permutation
        self.meet(&s.inverse(), &t.inverse()).inverse()
    }

    fn mul(&self, s: &Permutation, t: &Permutation) -> Permutation {
        let out = s.then(t);
        debug_assert_eq!(out.inversions(), s.inversions() + t.inversions(), "product not simple");
        out
    }

    fn left_quotient(&self, s: &Permutation, t: &Permutation) -> Permutation {
        let out = s.inverse().then(t);
        debug_assert_eq!(out.inversions() + s.inversions(), t.inversions(), "not a left divisor");
        out
    }

    fn right_quotient(&self, t: &Permutation, s: &Permutation) -> Permutation {
        let out = t.then(&s.inverse());
        debug_assert_eq!(out.inversions() + s.inversions(), t.inversions(), "not a right divisor");
        out
    }

    fn tau(&self, s: &Permutation) -> Permutation {
        let n = self.n;
        let mut out = *s;
        for p in 0..n {
            out.img[p] = (n - 1 - s.img[n - 1 - p] as usize) as u8;
        }
        out
    }

    fn tau_inv(&self, s: &Permutation) -> Permutation {
        self.tau(s)
    }

    fn tau_order(&self) -> Option<u32> {
        Some(2)
    }

    fn left_divides(&self, s: &Permutation, t: &Permutation) -> bool {
        let (rs, rt) = (s.crossing_rows(), t.crossing_rows());
        (0..self.n).all(|j| rs[j] & !rt[j] == 0)
    }

    fn meet_is_trivial(&self, s: &Permutation, t: &Permutation) -> bool {
        self.left_descents(s) & self.left_descents(t) == 0
    }

    fn right_complement(&self, s: &Permutation) -> Permutation {
        // ∂s(p) = n-1-s⁻¹(p)
        let inv = s.inverse();
        let mut out = *s;
        for p in 0..self.n {
            out.img[p] = (self.n - 1 - inv.img[p] as usize) as u8;
        }
        out
    }

    fn encode_simple(&self, s: &Permutation, out: &mut Vec<u8>) {
        out.extend_from_slice(s.images());
    }

    fn atom_token(&self, x: AtomId) -> String {
        format!("s{}", x + 1)
    }
}
