use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use garside::bench::run_bench;
use garside::census::census;
use garside::conjugacy::DEFAULT_BUDGET;
use garside::{
    are_conjugate, conjugate_class_ge, enumerate_simples, format_element, parse_word, summit_class, ArtinMonoid,
    BklMonoid, Error, Garside, GroupOps, MonoidKind, SearchOptions,
};

#[derive(Parser)]
#[command(name = "garside", version, about = "Normal forms and conjugacy in braid monoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Presentation: artin (σ_i) or bkl (band generators a(t,s))
    #[arg(long, default_value = "artin", global = true)]
    monoid: MonoidKind,
    /// Number of strands
    #[arg(long, global = true, default_value_t = 3)]
    n: usize,
    /// Maximum number of nodes in a conjugacy graph
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Left normal form of a word
    Nf {
        #[command(flatten)]
        common: Common,
        #[arg(required = true)]
        word: Vec<String>,
    },
    /// Decide whether two words are conjugate
    Conj {
        #[command(flatten)]
        common: Common,
        first: String,
        second: String,
    },
    /// Summit class of a word
    Summit {
        #[command(flatten)]
        common: Common,
        #[arg(required = true)]
        word: Vec<String>,
    },
    /// Conjugates with infimum at least m (the positive conjugates for m = 0)
    Posclass {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        m: i64,
        #[arg(required = true)]
        word: Vec<String>,
    },
    /// Census of positive elements by length
    Enumerate {
        #[command(flatten)]
        common: Common,
        /// Length or range of lengths, `A` or `A..B` (inclusive)
        #[arg(long, value_parser = parse_range)]
        l: (usize, usize),
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        parallel: usize,
    },
    /// Compare minimal-set search with the full-S baseline on random pairs
    Bench {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 8)]
        l: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Number of simple elements
    CountSimples {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
    },
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let bad = || format!("invalid length range `{s}` (expected A or A..B)");
    match s.split_once("..") {
        Some((a, b)) => {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            Ok((a, b))
        }
        None => {
            let a = s.trim().parse().map_err(|_| bad())?;
            Ok((a, a))
        }
    }
}

enum Failure {
    /// stdout closed early, as with `| head`
    Closed,
    Usage(String),
    Budget(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::BudgetExceeded { .. } | Error::CapExceeded { .. } => Failure::Budget(msg),
            Error::Invariant(_) | Error::Io(_) | Error::Json(_) => Failure::Invariant(msg),
            _ => Failure::Usage(msg),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Invariant(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let common = match &cli.command {
        Command::Nf { common, .. }
        | Command::Conj { common, .. }
        | Command::Summit { common, .. }
        | Command::Posclass { common, .. }
        | Command::Enumerate { common, .. }
        | Command::Bench { common, .. }
        | Command::CountSimples { common, .. } => common.clone(),
    };
    let result = match common.monoid {
        MonoidKind::Artin => ArtinMonoid::new(common.n)
            .map_err(Failure::from)
            .and_then(|g| run(&g, &common, &cli.command)),
        MonoidKind::Bkl => BklMonoid::new(common.n)
            .map_err(Failure::from)
            .and_then(|g| run(&g, &common, &cli.command)),
    };
    match result {
        Ok(()) | Err(Failure::Closed) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Budget(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Invariant(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}

fn element<G: Garside>(g: &G, common: &Common, words: &[String]) -> Result<garside::GroupElement<G::Simple>, Failure> {
    let text = words.join(" ");
    Ok(garside::evaluate(g, &parse_word(&text, common.monoid, common.n)?)?)
}

fn run<G: Garside>(g: &G, common: &Common, command: &Command) -> Outcome {
    let opts = SearchOptions {
        budget: common.budget,
        ..SearchOptions::default()
    };
    let json = common.format == Some(Format::Json);
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Nf { word, .. } => {
            let e = element(g, common, word)?;
            let factors: Vec<String> = e
                .factors()
                .iter()
                .map(|f| format_element(g, &g.simple_element(f)))
                .collect();
            if json {
                let v = serde_json::json!({
                    "inf": e.inf(),
                    "sup": e.sup(),
                    "factors": factors,
                    "normal_form": format_element(g, &e),
                });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "p {}", e.inf())?;
                let bracketed: Vec<String> = factors.iter().map(|f| format!("({f})")).collect();
                writeln!(out, "factors {}", bracketed.join(" "))?;
                writeln!(out, "nf {}", format_element(g, &e))?;
            }
        }
        Command::Conj { first, second, .. } => {
            let a = element(g, common, std::slice::from_ref(first))?;
            let b = element(g, common, std::slice::from_ref(second))?;
            let res = are_conjugate(g, &a, &b, &opts)?;
            let witness = res.witness.as_ref().map(|c| format_element(g, c));
            if json {
                let v = serde_json::json!({
                    "conjugate": res.is_conjugate(),
                    "witness": witness,
                    "nodes": res.nodes,
                });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "{}", if res.is_conjugate() { "YES" } else { "NO" })?;
                if let Some(w) = witness {
                    writeln!(out, "witness {w}")?;
                }
                writeln!(out, "nodes {}", res.nodes)?;
            }
        }
        Command::Summit { word, .. } => {
            let a = element(g, common, word)?;
            let graph = summit_class(g, &a, &opts)?;
            let root = graph.root().expect("summit class is never empty");
            let elems: Vec<String> = graph.nodes().iter().map(|e| format_element(g, e)).collect();
            if json {
                let v = serde_json::json!({
                    "inf": root.inf(),
                    "sup": root.sup(),
                    "size": graph.len(),
                    "elements": elems,
                });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "inf {}", root.inf())?;
                writeln!(out, "sup {}", root.sup())?;
                writeln!(out, "size {}", graph.len())?;
                for e in elems {
                    writeln!(out, "{e}")?;
                }
            }
        }
        Command::Posclass { word, m, .. } => {
            let a = element(g, common, word)?;
            let graph = conjugate_class_ge(g, &a, *m, &opts)?;
            let elems: Vec<String> = graph.nodes().iter().map(|e| format_element(g, e)).collect();
            if json {
                let v = serde_json::json!({ "m": m, "size": graph.len(), "elements": elems });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "size {}", graph.len())?;
                for e in elems {
                    writeln!(out, "{e}")?;
                }
            }
        }
        Command::Enumerate { l, parallel, .. } => {
            let lengths: Vec<usize> = (l.0..=l.1).collect();
            let dir = std::env::var_os("GARSIDE_CACHE_DIR").map(PathBuf::from);
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads((*parallel).max(1))
                .build()
                .map_err(|e| Failure::Invariant(e.to_string()))?;
            let reports = pool.install(|| census(g, &lengths, &opts, dir.as_deref()))?;
            let rows: Vec<_> = reports.into_iter().map(|r| r.row).collect();
            if json {
                serde_json::to_writer_pretty(&mut out, &rows).map_err(|e| Failure::Invariant(e.to_string()))?;
                writeln!(out)?;
            } else {
                let mut w = csv::WriterBuilder::new()
                    .terminator(csv::Terminator::Any(b'\n'))
                    .from_writer(out);
                for row in &rows {
                    w.serialize(row).map_err(|e| Failure::Invariant(e.to_string()))?;
                }
                w.flush()?;
            }
        }
        Command::Bench { l, trials, seed, .. } => {
            let report = run_bench(g, *l, *trials, *seed, common.budget)?;
            if json {
                serde_json::to_writer_pretty(&mut out, &report).map_err(|e| Failure::Invariant(e.to_string()))?;
                writeln!(out)?;
            } else {
                writeln!(
                    out,
                    "{} n={} l={} trials={} seed={}",
                    report.monoid, report.n, report.l, report.trials, report.seed
                )?;
                for (name, r, per_node_bound) in [
                    ("minimal-sets", &report.minimal_sets, report.atom_count),
                    ("baseline", &report.baseline, report.simple_count),
                ] {
                    writeln!(
                        out,
                        "{name:<13} yes={} nodes={} conjugations={} per-node mean={:.2} max={} (bound {}) time={:.1}ms",
                        r.conjugate_answers,
                        r.stats.nodes_expanded,
                        r.stats.conjugations,
                        r.conjugations_per_node,
                        r.stats.max_node_conjugations,
                        per_node_bound,
                        r.millis
                    )?;
                }
                writeln!(out, "agree {}", report.agree)?;
            }
            if !report.agree || report.minimal_sets.conjugate_answers != report.trials {
                return Err(Failure::Invariant("algorithms disagree on a conjugate pair".into()));
            }
        }
        Command::CountSimples { cap, .. } => {
            let count = enumerate_simples(g, *cap)?.len();
            writeln!(out, "{count}")?;
        }
    }
    Ok(())
}
