//! Operation-count comparison of the minimal-set search against the full-S
//! baseline on seeded random conjugate pairs.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::conjugacy::{are_conjugate, SearchOptions, SearchStats, BASELINE_SIMPLE_CAP};
use crate::element::GroupOps;
use crate::error::{Error, Result};
use crate::structure::{enumerate_simples, Garside};
use crate::word::{evaluate, Letter, MonoidKind, WordExpr, WordToken};

/// A random word of exactly `len` generator tokens, each with exponent `1`,
/// or `±1` when `mixed` is set.
pub fn random_word<R: Rng>(rng: &mut R, monoid: MonoidKind, n: usize, len: usize, mixed: bool) -> WordExpr {
    let atoms = match monoid {
        MonoidKind::Artin => n - 1,
        MonoidKind::Bkl => n * (n - 1) / 2,
    };
    let tokens = (0..len)
        .map(|i| WordToken {
            letter: Letter::Atom(rng.gen_range(0..atoms)),
            exponent: if mixed && rng.gen_bool(0.5) { -1 } else { 1 },
            column: i + 1,
        })
        .collect();
    WordExpr { monoid, n, tokens }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct AlgorithmReport {
    pub conjugate_answers: usize,
    pub stats: SearchStats,
    /// Mean conjugations per expanded node.
    pub conjugations_per_node: f64,
    pub millis: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub monoid: String,
    pub n: usize,
    pub l: usize,
    pub trials: usize,
    pub seed: u64,
    pub atom_count: usize,
    pub simple_count: usize,
    pub minimal_sets: AlgorithmReport,
    pub baseline: AlgorithmReport,
    /// Both algorithms gave the same verdict on every pair.
    pub agree: bool,
}

impl BenchReport {
    /// The report with timing fields zeroed, for reproducibility checks.
    pub fn without_timing(&self) -> BenchReport {
        let mut r = self.clone();
        r.minimal_sets.millis = 0.0;
        r.baseline.millis = 0.0;
        r
    }
}

/// Runs `trials` pairs `(w, c⁻¹wc)` with `w` a positive word of length `l`
/// and `c` a mixed-sign word of length `l`, through both algorithms.
pub fn run_bench<G: Garside + ?Sized>(g: &G, l: usize, trials: usize, seed: u64, budget: usize) -> Result<BenchReport> {
    let monoid: MonoidKind = g.name().parse().map_err(|_| Error::StructureMismatch)?;
    let n = g.strands();
    let simple_count = enumerate_simples(g, BASELINE_SIMPLE_CAP)?.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::with_capacity(trials);
    for _ in 0..trials {
        let w = evaluate(g, &random_word(&mut rng, monoid, n, l, false))?;
        let c = evaluate(g, &random_word(&mut rng, monoid, n, l, true))?;
        let b = g.conjugate(&w, &c);
        pairs.push((w, b));
    }

    let mut verdicts = Vec::new();
    let mut reports = Vec::new();
    for opts in [SearchOptions::default(), SearchOptions::baseline()] {
        let opts = SearchOptions { budget, ..opts };
        let mut report = AlgorithmReport::default();
        let mut answers = Vec::with_capacity(trials);
        let start = Instant::now();
        for (a, b) in &pairs {
            let out = are_conjugate(g, a, b, &opts)?;
            report.stats.absorb(&out.stats);
            answers.push(out.is_conjugate());
        }
        report.millis = start.elapsed().as_secs_f64() * 1e3;
        report.conjugate_answers = answers.iter().filter(|&&x| x).count();
        if report.stats.nodes_expanded > 0 {
            report.conjugations_per_node = report.stats.conjugations as f64 / report.stats.nodes_expanded as f64;
        }
        verdicts.push(answers);
        reports.push(report);
    }
    let baseline = reports.pop().unwrap();
    let minimal_sets = reports.pop().unwrap();
    Ok(BenchReport {
        monoid: g.name().to_string(),
        n,
        l,
        trials,
        seed,
        atom_count: g.atom_count(),
        simple_count,
        minimal_sets,
        baseline,
        agree: verdicts[0] == verdicts[1],
    })
}
