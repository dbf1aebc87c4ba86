//! Exhaustive census of the positive elements of a given length: how many
//! conjugacy classes they meet, and the largest positive and summit classes.

use std::collections::{HashMap, HashSet};
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::conjugacy::{conjugate_class_ge, summit_class, SearchOptions, SearchStats};
use crate::element::{GroupElement, GroupOps, KEY_VERSION};
use crate::error::{Error, Result};
use crate::structure::Garside;
use crate::word::format_element;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: usize,
    pub l: usize,
    /// Number of conjugacy classes meeting the length-`l` positive elements.
    pub cc_pos: usize,
    /// Largest set of positive conjugates.
    pub max_cpos: usize,
    /// Largest summit class.
    pub max_csum: usize,
    /// An element whose summit class has `max_csum` elements.
    pub representative: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CensusReport {
    pub monoid: String,
    pub row: CensusRow,
    /// Number of distinct positive elements of length `l`.
    pub elements: usize,
    pub stats: SearchStats,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    report: CensusReport,
}

/// All distinct positive elements of word length `l`, sorted by canonical key.
pub fn positive_elements<G: Garside + ?Sized>(g: &G, l: usize) -> Vec<GroupElement<G::Simple>> {
    let atoms: Vec<_> = (0..g.atom_count()).map(|x| g.simple_element(&g.atom(x))).collect();
    let mut level = vec![GroupElement::identity()];
    for _ in 0..l {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for e in &level {
            for x in &atoms {
                let p = g.multiply(e, x);
                if seen.insert(p.clone()) {
                    next.push(p);
                }
            }
        }
        level = next;
    }
    sort_by_key(g, &mut level);
    level
}

fn sort_by_key<G: Garside + ?Sized>(g: &G, v: &mut [GroupElement<G::Simple>]) {
    v.sort_by_cached_key(|e| g.canonical_key(e));
}

/// One census row. Classes are the sets of positive conjugates; every one of
/// them lies inside the length-`l` elements because the monoid is homogeneous.
pub fn census_row<G: Garside + ?Sized>(g: &G, l: usize, opts: &SearchOptions) -> Result<CensusReport> {
    if !g.is_homogeneous() {
        return Err(Error::Invariant("census requires a homogeneous monoid".into()));
    }
    let elements = positive_elements(g, l);
    let mut stats = SearchStats::default();
    let mut assigned: HashMap<GroupElement<G::Simple>, usize> = HashMap::with_capacity(elements.len());
    let mut classes: Vec<(GroupElement<G::Simple>, usize)> = Vec::new();
    for e in &elements {
        if assigned.contains_key(e) {
            continue;
        }
        let graph = conjugate_class_ge(g, e, 0, opts)?;
        stats.absorb(&graph.stats);
        let id = classes.len();
        for node in graph.nodes() {
            if g.exponent_sum(node) != l as i64 || assigned.insert(node.clone(), id).is_some() {
                return Err(Error::Invariant("positive classes do not partition the census".into()));
            }
        }
        classes.push((e.clone(), graph.len()));
    }
    if assigned.len() != elements.len() {
        return Err(Error::Invariant("positive classes do not cover the census".into()));
    }

    let summits: Vec<(usize, SearchStats)> = classes
        .par_iter()
        .map(|(e, _)| summit_class(g, e, opts).map(|s| (s.len(), s.stats)))
        .collect::<Result<_>>()?;
    for (_, s) in &summits {
        stats.absorb(s);
    }
    let max_cpos = classes.iter().map(|c| c.1).max().unwrap_or(0);
    let max_csum = summits.iter().map(|s| s.0).max().unwrap_or(0);
    // elements are sorted by key, so the first hit is the least key
    let representative = elements
        .iter()
        .find(|e| summits[assigned[*e]].0 == max_csum)
        .map(|e| format_element(g, e))
        .unwrap_or_default();

    Ok(CensusReport {
        monoid: g.name().to_string(),
        row: CensusRow {
            n: g.strands(),
            l,
            cc_pos: classes.len(),
            max_cpos,
            max_csum,
            representative,
        },
        elements: elements.len(),
        stats,
    })
}

pub fn cache_path(dir: &Path, monoid: &str, n: usize, l: usize) -> PathBuf {
    dir.join(format!("{monoid}-n{n}-l{l}.json"))
}

/// Like [`census_row`], reading and writing `dir` when given. Cache files
/// written under another key version are recomputed.
pub fn census_row_cached<G: Garside + ?Sized>(
    g: &G,
    l: usize,
    opts: &SearchOptions,
    dir: Option<&Path>,
) -> Result<CensusReport> {
    let Some(dir) = dir else {
        return census_row(g, l, opts);
    };
    let path = cache_path(dir, g.name(), g.strands(), l);
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(cached) = serde_json::from_str::<CacheFile>(&text) {
            if cached.version == KEY_VERSION {
                return Ok(cached.report);
            }
        }
    }
    let report = census_row(g, l, opts)?;
    fs::create_dir_all(dir)?;
    let file = CacheFile {
        version: KEY_VERSION,
        report: report.clone(),
    };
    fs::write(&path, serde_json::to_string_pretty(&file)?)?;
    Ok(report)
}

/// Rows for every length in `lengths`, computed in parallel and returned in
/// order of length.
pub fn census<G: Garside + ?Sized>(
    g: &G,
    lengths: &[usize],
    opts: &SearchOptions,
    dir: Option<&Path>,
) -> Result<Vec<CensusReport>> {
    let mut rows: Vec<CensusReport> = lengths
        .par_iter()
        .map(|&l| census_row_cached(g, l, opts, dir))
        .collect::<Result<_>>()?;
    rows.sort_by_key(|r| (r.row.n, r.row.l));
    Ok(rows)
}
