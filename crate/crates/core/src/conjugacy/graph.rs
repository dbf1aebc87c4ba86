use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::element::{GroupElement, GroupOps};
use crate::error::{Error, Result};
use crate::structure::Garside;

/// Operation counts gathered while building a graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Conjugations of a node by a simple element.
    pub conjugations: u64,
    pub nodes_expanded: u64,
    /// Most conjugations spent on a single node.
    pub max_node_conjugations: u64,
    /// Largest minimal simple set met (0 for the full-S baseline).
    pub max_minimal_set: usize,
}

impl SearchStats {
    pub fn absorb(&mut self, other: &SearchStats) {
        self.conjugations += other.conjugations;
        self.nodes_expanded += other.nodes_expanded;
        self.max_node_conjugations = self.max_node_conjugations.max(other.max_node_conjugations);
        self.max_minimal_set = self.max_minimal_set.max(other.max_minimal_set);
    }
}

/// A finite set of conjugates, each reached from the root by a chain of
/// conjugations by simple elements.
#[derive(Clone, Debug)]
pub struct ConjugacyGraph<S> {
    nodes: Vec<GroupElement<S>>,
    index: HashMap<GroupElement<S>, usize>,
    parents: Vec<Option<(usize, S)>>,
    prefix: GroupElement<S>,
    pub stats: SearchStats,
}

impl<S: Copy + Eq + std::hash::Hash> ConjugacyGraph<S> {
    pub(crate) fn empty() -> Self {
        ConjugacyGraph {
            nodes: Vec::new(),
            index: HashMap::new(),
            parents: Vec::new(),
            prefix: GroupElement::identity(),
            stats: SearchStats::default(),
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes in discovery order; the root comes first.
    pub fn nodes(&self) -> &[GroupElement<S>] {
        &self.nodes
    }

    pub fn root(&self) -> Option<&GroupElement<S>> {
        self.nodes.first()
    }

    /// Conjugator taking the original input to the root.
    pub fn prefix(&self) -> &GroupElement<S> {
        &self.prefix
    }

    pub fn contains(&self, e: &GroupElement<S>) -> bool {
        self.index.contains_key(e)
    }

    pub fn index_of(&self, e: &GroupElement<S>) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn parent(&self, i: usize) -> Option<(usize, S)> {
        self.parents[i]
    }

    /// Edge labels from the root down to node `i`.
    pub fn path(&self, mut i: usize) -> Vec<S> {
        let mut out = Vec::new();
        while let Some((p, s)) = self.parents[i] {
            out.push(s);
            i = p;
        }
        out.reverse();
        out
    }

    /// `c` with `c⁻¹·root·c = node i`.
    pub fn witness<G: Garside<Simple = S> + ?Sized>(&self, g: &G, i: usize) -> GroupElement<S> {
        let path = self.path(i);
        g.normal_form_of(0, &path)
    }

    /// `c` with `c⁻¹·input·c = node i`, for the input the search started from.
    pub fn witness_from_input<G: Garside<Simple = S> + ?Sized>(&self, g: &G, i: usize) -> GroupElement<S> {
        g.multiply(&self.prefix, &self.witness(g, i))
    }
}

/// Breadth-first closure from `root`. `expand` yields the candidate
/// conjugating simples of a node; `keep` filters the resulting conjugates.
pub(crate) fn explore<G, E, K>(
    g: &G,
    root: GroupElement<G::Simple>,
    prefix: GroupElement<G::Simple>,
    budget: usize,
    verify: bool,
    mut expand: E,
    keep: K,
) -> Result<ConjugacyGraph<G::Simple>>
where
    G: Garside + ?Sized,
    E: FnMut(&GroupElement<G::Simple>, &mut SearchStats) -> Vec<G::Simple>,
    K: Fn(&GroupElement<G::Simple>) -> bool,
{
    let mut graph = ConjugacyGraph::empty();
    graph.prefix = prefix;
    graph.index.insert(root.clone(), 0);
    graph.nodes.push(root);
    graph.parents.push(None);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let v = graph.nodes[i].clone();
        let simples = expand(&v, &mut graph.stats);
        graph.stats.nodes_expanded += 1;
        graph.stats.max_node_conjugations = graph.stats.max_node_conjugations.max(simples.len() as u64);
        let mut children: Vec<_> = simples
            .into_iter()
            .map(|s| {
                graph.stats.conjugations += 1;
                let w = g.conjugate_by_simple(&v, &s);
                (g.canonical_key(&w), w, s)
            })
            .filter(|(_, w, _)| keep(w))
            .collect();
        children.sort_by(|a, b| a.0.cmp(&b.0));
        for (_, w, s) in children {
            if graph.index.contains_key(&w) {
                continue;
            }
            if graph.nodes.len() >= budget {
                return Err(Error::BudgetExceeded { budget });
            }
            let j = graph.nodes.len();
            graph.index.insert(w.clone(), j);
            graph.nodes.push(w);
            graph.parents.push(Some((i, s)));
            if verify {
                let c = graph.witness(g, j);
                if g.conjugate(&graph.nodes[0], &c) != graph.nodes[j] {
                    return Err(Error::Invariant(format!("witness for node {j} does not verify")));
                }
            }
            queue.push_back(j);
        }
    }
    Ok(graph)
}
