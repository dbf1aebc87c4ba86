//! Conjugacy search: the classes `C^{≥m}(a)` and `C^{sum}(a)` built from
//! minimal simple conjugators, the full-S baseline that conjugates by every
//! simple element, and the conjugacy decision with a witness.

mod graph;
mod minimal;
mod summit;

pub use graph::{ConjugacyGraph, SearchStats};
pub use minimal::{
    lcm_with_positive, minimal_conjugator_ge, minimal_conjugator_sum, minimal_simple_set_ge, minimal_simple_set_sum,
    ClassMode, MinimalSimpleSet,
};
pub use summit::{ascend_infimum, ascend_summit, Ascent};

use crate::element::{GroupElement, GroupOps};
use crate::error::{Error, Result};
use crate::structure::{enumerate_simples, Garside};

pub const DEFAULT_BUDGET: usize = 1_000_000;

/// The baseline enumerates every simple element; it refuses structures with
/// more than this many (so `B_n` up to `n = 6`, `BKL_n` up to `n = 7`).
pub const BASELINE_SIMPLE_CAP: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    /// Conjugate each node by its minimal simple set.
    MinimalSets,
    /// Conjugate each node by every simple element.
    ElrifaiMorton,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Maximum number of nodes in a graph.
    pub budget: usize,
    /// Abandon a minimal conjugator early once it is known to be discarded.
    pub fast_minimal_sets: bool,
    /// Check every recovered witness as nodes are inserted.
    pub verify_witnesses: bool,
    pub algorithm: Algorithm,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            fast_minimal_sets: false,
            verify_witnesses: cfg!(debug_assertions),
            algorithm: Algorithm::MinimalSets,
        }
    }
}

impl SearchOptions {
    pub fn baseline() -> Self {
        SearchOptions {
            algorithm: Algorithm::ElrifaiMorton,
            ..Self::default()
        }
    }
}

/// `C^{≥m}(a)`, the conjugates of `a` with infimum at least `m`. Empty when
/// no such conjugate exists. For `m = 0` this is the set of positive
/// conjugates.
pub fn conjugate_class_ge<G: Garside + ?Sized>(
    g: &G,
    a: &GroupElement<G::Simple>,
    m: i64,
    opts: &SearchOptions,
) -> Result<ConjugacyGraph<G::Simple>> {
    let Some(start) = ascend_infimum(g, a, m) else {
        return Ok(ConjugacyGraph::empty());
    };
    match opts.algorithm {
        Algorithm::MinimalSets => graph::explore(
            g,
            start.element,
            start.conjugator,
            opts.budget,
            opts.verify_witnesses,
            |v, stats| {
                let set = minimal_simple_set_ge(g, v, m, opts.fast_minimal_sets);
                stats.max_minimal_set = stats.max_minimal_set.max(set.len());
                set.elements
            },
            |w| {
                debug_assert!(w.inf() >= m);
                true
            },
        ),
        Algorithm::ElrifaiMorton => {
            let all = enumerate_simples(g, BASELINE_SIMPLE_CAP)?;
            graph::explore(
                g,
                start.element,
                start.conjugator,
                opts.budget,
                opts.verify_witnesses,
                |_, _| all.clone(),
                |w| w.inf() >= m,
            )
        }
    }
}

/// `C^{sum}(a)`, the conjugates of `a` with summit infimum and supremum.
pub fn summit_class<G: Garside + ?Sized>(
    g: &G,
    a: &GroupElement<G::Simple>,
    opts: &SearchOptions,
) -> Result<ConjugacyGraph<G::Simple>> {
    let start = ascend_summit(g, a);
    summit_class_from(g, start, opts)
}

fn summit_class_from<G: Garside + ?Sized>(
    g: &G,
    start: Ascent<G::Simple>,
    opts: &SearchOptions,
) -> Result<ConjugacyGraph<G::Simple>> {
    let (inf, sup) = (start.element.inf(), start.element.sup());
    match opts.algorithm {
        Algorithm::MinimalSets => graph::explore(
            g,
            start.element,
            start.conjugator,
            opts.budget,
            opts.verify_witnesses,
            |v, stats| {
                let set = minimal_simple_set_sum(g, v, opts.fast_minimal_sets);
                stats.max_minimal_set = stats.max_minimal_set.max(set.len());
                set.elements
            },
            |w| {
                debug_assert!(w.inf() == inf && w.sup() == sup);
                true
            },
        ),
        Algorithm::ElrifaiMorton => {
            let all = enumerate_simples(g, BASELINE_SIMPLE_CAP)?;
            graph::explore(
                g,
                start.element,
                start.conjugator,
                opts.budget,
                opts.verify_witnesses,
                |_, _| all.clone(),
                |w| w.inf() == inf && w.sup() == sup,
            )
        }
    }
}

/// `C^{sum}(a)` by conjugating every node by every simple element.
pub fn elrifai_morton_summit_class<G: Garside + ?Sized>(
    g: &G,
    a: &GroupElement<G::Simple>,
    budget: usize,
) -> Result<ConjugacyGraph<G::Simple>> {
    let opts = SearchOptions {
        budget,
        ..SearchOptions::baseline()
    };
    summit_class(g, a, &opts)
}

/// `C^{≥m}(a)` by conjugating every node by every simple element.
pub fn elrifai_morton_class_ge<G: Garside + ?Sized>(
    g: &G,
    a: &GroupElement<G::Simple>,
    m: i64,
    budget: usize,
) -> Result<ConjugacyGraph<G::Simple>> {
    let opts = SearchOptions {
        budget,
        ..SearchOptions::baseline()
    };
    conjugate_class_ge(g, a, m, &opts)
}

/// Outcome of a conjugacy test.
#[derive(Clone, Debug)]
pub struct Conjugacy<S> {
    /// `c` with `c⁻¹·a·c = b`, when `a` and `b` are conjugate.
    pub witness: Option<GroupElement<S>>,
    /// Size of the summit class searched (0 when an invariant ruled it out).
    pub nodes: usize,
    pub stats: SearchStats,
}

impl<S> Conjugacy<S> {
    pub fn is_conjugate(&self) -> bool {
        self.witness.is_some()
    }
}

/// Decides whether `a` and `b` are conjugate by searching the summit class
/// of `a` for the summit representative of `b`.
pub fn are_conjugate<G: Garside + ?Sized>(
    g: &G,
    a: &GroupElement<G::Simple>,
    b: &GroupElement<G::Simple>,
    opts: &SearchOptions,
) -> Result<Conjugacy<G::Simple>> {
    let no = |nodes, stats| Conjugacy {
        witness: None,
        nodes,
        stats,
    };
    if a == b {
        return Ok(Conjugacy {
            witness: Some(GroupElement::identity()),
            nodes: 0,
            stats: SearchStats::default(),
        });
    }
    if g.is_homogeneous() && g.exponent_sum(a) != g.exponent_sum(b) {
        return Ok(no(0, SearchStats::default()));
    }
    let sa = ascend_summit(g, a);
    let sb = ascend_summit(g, b);
    if sa.element.inf() != sb.element.inf() || sa.element.sup() != sb.element.sup() {
        return Ok(no(0, SearchStats::default()));
    }
    let graph = summit_class_from(g, sa, opts)?;
    let Some(i) = graph.index_of(&sb.element) else {
        return Ok(no(graph.len(), graph.stats));
    };
    // a → root → node i = sb.element, and sb.element = cb⁻¹·b·cb
    let c = g.multiply(&graph.witness_from_input(g, i), &g.invert(&sb.conjugator));
    if g.conjugate(a, &c) != *b {
        return Err(Error::Invariant("conjugacy witness does not verify".into()));
    }
    Ok(Conjugacy {
        witness: Some(c),
        nodes: graph.len(),
        stats: graph.stats,
    })
}
