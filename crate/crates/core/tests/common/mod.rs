//! Word-level oracle: positive words modulo the defining relations of a
//! homogeneous presentation, explored by brute-force rewriting.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use garside::{Garside, GroupElement, GroupOps, PositiveElement};

pub type Word = Vec<usize>;

pub struct Presentation {
    pub atoms: usize,
    /// Length-preserving relations `u = v`, used in both directions.
    pub relations: Vec<(Word, Word)>,
}

impl Presentation {
    /// `B_n⁺`, atom `i` standing for `σ_{i+1}`.
    pub fn artin(n: usize) -> Self {
        let mut relations = Vec::new();
        for i in 0..n - 1 {
            for j in i + 1..n - 1 {
                if j == i + 1 {
                    relations.push((vec![i, j, i], vec![j, i, j]));
                } else {
                    relations.push((vec![i, j], vec![j, i]));
                }
            }
        }
        Presentation { atoms: n - 1, relations }
    }

    /// `BKL_n⁺` with atoms ordered by `(t, s)`, `t > s`, as in the library.
    pub fn bkl(n: usize) -> Self {
        let mut pairs = Vec::new();
        for t in 2..=n {
            for s in 1..t {
                pairs.push((t, s));
            }
        }
        let id = |t: usize, s: usize| pairs.iter().position(|&p| p == (t, s)).unwrap();
        let mut relations = Vec::new();
        for (i, &(t, s)) in pairs.iter().enumerate() {
            for (j, &(r, q)) in pairs.iter().enumerate().skip(i + 1) {
                let (t, s, r, q) = (t as i64, s as i64, r as i64, q as i64);
                if (t - r) * (t - q) * (s - r) * (s - q) > 0 {
                    relations.push((vec![i, j], vec![j, i]));
                }
            }
        }
        for t in 3..=n {
            for s in 2..t {
                for r in 1..s {
                    let a = vec![id(t, s), id(s, r)];
                    let b = vec![id(t, r), id(t, s)];
                    let c = vec![id(s, r), id(t, r)];
                    relations.push((a.clone(), b.clone()));
                    relations.push((b, c));
                }
            }
        }
        Presentation {
            atoms: pairs.len(),
            relations,
        }
    }

    /// All words equal to `w` in the monoid.
    pub fn class(&self, w: &[usize]) -> HashSet<Word> {
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.to_vec());
        queue.push_back(w.to_vec());
        while let Some(u) = queue.pop_front() {
            for (a, b) in &self.relations {
                for (from, to) in [(a, b), (b, a)] {
                    let k = from.len();
                    if k > u.len() {
                        continue;
                    }
                    for i in 0..=u.len() - k {
                        if &u[i..i + k] == from.as_slice() {
                            let mut v = u.clone();
                            v[i..i + k].copy_from_slice(to);
                            if seen.insert(v.clone()) {
                                queue.push_back(v);
                            }
                        }
                    }
                }
            }
        }
        seen
    }

    /// A canonical representative: the lexicographically least word.
    pub fn canon(&self, w: &[usize]) -> Word {
        self.class(w).into_iter().min().unwrap()
    }

    pub fn equal(&self, u: &[usize], v: &[usize]) -> bool {
        u.len() == v.len() && self.class(u).contains(v)
    }

    /// Canonical representatives of all left divisors of `w`.
    pub fn left_divisors(&self, w: &[usize]) -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        let class = self.class(w);
        for u in &class {
            for k in 0..=u.len() {
                out.insert(u[..k].to_vec());
            }
        }
        out.into_iter().map(|p| self.canon(&p)).collect()
    }

    /// Canonical representatives of all right divisors of `w`.
    pub fn right_divisors(&self, w: &[usize]) -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        for u in &self.class(w) {
            for k in 0..=u.len() {
                out.insert(u[k..].to_vec());
            }
        }
        out.into_iter().map(|p| self.canon(&p)).collect()
    }

    /// Random relation applications to `w`.
    pub fn scramble<R: rand::Rng>(&self, w: &[usize], steps: usize, rng: &mut R) -> Word {
        let mut u = w.to_vec();
        for _ in 0..steps {
            let mut spots = Vec::new();
            for (a, b) in &self.relations {
                for (from, to) in [(a, b), (b, a)] {
                    let k = from.len();
                    if k > u.len() {
                        continue;
                    }
                    for i in 0..=u.len() - k {
                        if &u[i..i + k] == from.as_slice() {
                            spots.push((i, to));
                        }
                    }
                }
            }
            if spots.is_empty() {
                break;
            }
            let (i, to) = spots[rng.gen_range(0..spots.len())];
            u[i..i + to.len()].copy_from_slice(to);
        }
        u
    }
}

/// The simple elements of a structure seen through the oracle: canonical
/// words of the left divisors of `Δ`, with brute-force lattice operations.
pub struct SimpleOracle {
    pub words: Vec<Word>,
    index: HashMap<Word, usize>,
    /// `leq[i][j]`: simple `i` left-divides simple `j`.
    pub leq: Vec<Vec<bool>>,
    /// `req[i][j]`: simple `i` right-divides simple `j`.
    pub req: Vec<Vec<bool>>,
}

impl SimpleOracle {
    pub fn new(p: &Presentation, delta: &[usize]) -> Self {
        let words: Vec<Word> = p.left_divisors(delta).into_iter().collect();
        let index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let k = words.len();
        let mut leq = vec![vec![false; k]; k];
        let mut req = vec![vec![false; k]; k];
        for (j, w) in words.iter().enumerate() {
            for d in p.left_divisors(w) {
                leq[index[&d]][j] = true;
            }
            for d in p.right_divisors(w) {
                req[index[&d]][j] = true;
            }
        }
        SimpleOracle { words, index, leq, req }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn index_of(&self, p: &Presentation, w: &[usize]) -> usize {
        self.index[&p.canon(w)]
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        let common: Vec<usize> = (0..self.len()).filter(|&k| self.leq[k][i] && self.leq[k][j]).collect();
        *common
            .iter()
            .find(|&&k| common.iter().all(|&c| self.leq[c][k]))
            .expect("meet exists")
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        let common: Vec<usize> = (0..self.len()).filter(|&k| self.leq[i][k] && self.leq[j][k]).collect();
        *common
            .iter()
            .find(|&&k| common.iter().all(|&c| self.leq[k][c]))
            .expect("join exists")
    }

    pub fn right_meet(&self, i: usize, j: usize) -> usize {
        let common: Vec<usize> = (0..self.len()).filter(|&k| self.req[k][i] && self.req[k][j]).collect();
        *common
            .iter()
            .find(|&&k| common.iter().all(|&c| self.req[c][k]))
            .expect("right meet exists")
    }
}

/// Atom word of a positive element (`Δ` powers spelled out).
pub fn element_word<G: Garside>(g: &G, e: &GroupElement<G::Simple>) -> Word {
    let pos = g.to_positive(e).expect("positive element");
    pos.factors().iter().flat_map(|f| g.word(f)).collect()
}

/// Normal form of a positive atom word.
pub fn from_word<G: Garside>(g: &G, w: &[usize]) -> GroupElement<G::Simple> {
    g.left_normal_form(&PositiveElement::new(w.iter().map(|&x| g.atom(x)).collect()))
}
