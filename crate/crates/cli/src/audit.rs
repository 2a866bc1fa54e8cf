//! `audit`: solve a corpus and run the invariant suites over the results.
//!
//! Suites:
//! * `witness_validity`: every witness passes the verifier with its own t;
//! * `bound_soundness`: every feasible t lies between Δ and the floor of
//!   every applicable upper bound;
//! * `certifier_replay`: every witness on a planar graph certifies;
//! * `family_oracles`: family members match their known spectra.

use std::path::{Path, PathBuf};
use std::time::Duration;

use interval_spectrum::certify::audit_corpus;
use interval_spectrum::families::{
    expected_spectrum, generate, random_planar, ExpectedSpectrum, Family,
};
use interval_spectrum::graph::parse_graph6_lines;
use interval_spectrum::{
    parse_graph, profile, spectrum, verify_interval, Graph, GraphFormat, SearchConfig,
    SpectrumResult,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::commands::{agrees, config_json};
use crate::{CliError, Inputs, Report, Verdict, DEFAULT_SEED};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AuditConfig {
    #[serde(default)]
    pub corpus: Vec<CorpusSource>,
    #[serde(default)]
    pub limits: Limits,
    #[serde(default)]
    pub seed: u64,
}

/// Where corpus graphs come from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum CorpusSource {
    /// `{"family": {"kind": "fan", "params": [6]}}`
    Family { kind: String, params: Vec<usize> },
    /// `{"random_planar": {"count": 50, "n_min": 4, "n_max": 9}}`: vertex
    /// and edge counts are drawn from the config seed.
    RandomPlanar {
        count: usize,
        n_min: usize,
        n_max: usize,
    },
    /// `{"file": {"path": "graphs.g6"}}`: one edge list, or any number of
    /// graph6 lines. Relative paths start at the config file's directory.
    File { path: PathBuf },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Limits {
    /// Search nodes per value of t.
    pub node_limit: Option<u64>,
    pub time_limit_ms: Option<u64>,
}

impl AuditConfig {
    /// The built-in corpus: the named families with known spectra plus
    /// seeded random planar graphs.
    pub fn builtin() -> Self {
        let fam = |kind: &str, params: &[usize]| CorpusSource::Family {
            kind: kind.into(),
            params: params.to_vec(),
        };
        let mut corpus = Vec::new();
        for a in 1..=4 {
            for b in a..=4 {
                corpus.push(fam("complete_bipartite", &[a, b]));
            }
        }
        corpus.extend((2..=3).map(|d| fam("hypercube", &[d])));
        corpus.extend((2..=7).map(|n| fam("fan", &[n])));
        corpus.extend((3..=8).map(|n| fam("cycle", &[n])));
        corpus.extend((2..=6).map(|n| fam("path", &[n])));
        corpus.extend((2..=6).map(|n| fam("star", &[n])));
        corpus.extend((2..=5).map(|n| fam("complete", &[n])));
        for leaves in [&[1, 1][..], &[2, 0, 1], &[0, 3, 1], &[1, 0, 0, 2]] {
            corpus.push(fam("caterpillar", leaves));
        }
        corpus.push(CorpusSource::RandomPlanar {
            count: 60,
            n_min: 4,
            n_max: 9,
        });
        AuditConfig {
            corpus,
            limits: Limits::default(),
            seed: DEFAULT_SEED,
        }
    }

    fn search_config(&self) -> Result<SearchConfig, CliError> {
        if self.limits.node_limit == Some(0) || self.limits.time_limit_ms == Some(0) {
            return Err(CliError::Config("limits must be positive".into()));
        }
        let defaults = SearchConfig::default();
        Ok(SearchConfig {
            node_limit: self.limits.node_limit.or(defaults.node_limit),
            time_limit: self.limits.time_limit_ms.map(Duration::from_millis),
            ..defaults
        })
    }
}

struct Item {
    name: String,
    graph: Graph,
    family: Option<Family>,
}

fn collect_corpus(
    cfg: &AuditConfig,
    base: &Path,
    inputs: &mut Inputs,
    warnings: &mut Vec<String>,
) -> Result<Vec<Item>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut items = Vec::new();
    for source in &cfg.corpus {
        match source {
            CorpusSource::Family { kind, params } => {
                let f = Family::from_kind(kind, params)?;
                items.push(Item {
                    name: f.to_string(),
                    graph: generate(&f)?,
                    family: Some(f),
                });
            }
            CorpusSource::RandomPlanar {
                count,
                n_min,
                n_max,
            } => {
                if *n_min < 2 || n_min > n_max {
                    return Err(CliError::Config(format!(
                        "random_planar needs 2 <= n_min <= n_max, got {n_min}..{n_max}"
                    )));
                }
                for _ in 0..*count {
                    let n = rng.gen_range(*n_min..=*n_max);
                    let cap = if n == 2 { 1 } else { 3 * n - 6 };
                    let m = rng.gen_range(n - 1..=cap);
                    let seed: u64 = rng.gen();
                    items.push(Item {
                        name: format!("random_planar({n},{m},{seed})"),
                        graph: random_planar(n, m, seed)?,
                        family: None,
                    });
                }
            }
            CorpusSource::File { path } => {
                let full = base.join(path);
                let text = inputs.read(&full)?;
                let bad = |e: interval_spectrum::graph::GraphError| CliError::Input {
                    path: full.display().to_string(),
                    message: e.to_string(),
                };
                let graphs = match GraphFormat::from_path(&full.to_string_lossy()) {
                    GraphFormat::Graph6 => parse_graph6_lines(&text).map_err(bad)?,
                    GraphFormat::EdgeList => {
                        vec![parse_graph(&text, GraphFormat::EdgeList).map_err(bad)?]
                    }
                };
                for (i, g) in graphs.into_iter().enumerate() {
                    items.push(Item {
                        name: format!("{}#{}", path.display(), i + 1),
                        graph: g,
                        family: None,
                    });
                }
            }
        }
    }
    items.retain(|item| {
        let keep = item.graph.edge_count() > 0;
        if !keep {
            warnings.push(format!("{}: no edges, skipped", item.name));
        }
        keep
    });
    Ok(items)
}

#[derive(Default, Serialize)]
struct Suite {
    name: &'static str,
    checked: usize,
    passed: usize,
    failed: usize,
    unknown: usize,
    skipped: usize,
    failures: Vec<String>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite {
            name,
            ..Suite::default()
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            self.failures.push(detail());
        }
    }

    fn verdict(&self) -> Verdict {
        if self.failed > 0 {
            Verdict::Negative
        } else if self.unknown > 0 {
            Verdict::Unknown
        } else {
            Verdict::Ok
        }
    }

    fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("suites serialize");
        v["status"] = json!(match self.verdict() {
            Verdict::Negative => "fail",
            Verdict::Unknown => "unknown",
            Verdict::Ok if self.checked == 0 => "vacuous",
            Verdict::Ok => "pass",
        });
        v
    }
}

fn witness_validity(solved: &[(Item, SpectrumResult)]) -> Suite {
    let mut s = Suite::new("witness_validity");
    for (item, r) in solved {
        for (&t, c) in &r.witnesses {
            let ok = c.t() == t && verify_interval(&item.graph, c).is_ok_and(|rep| rep.interval_ok);
            s.record(ok, || {
                format!("{}: witness for t = {t} does not verify", item.name)
            });
        }
    }
    s
}

fn bound_soundness(solved: &[(Item, SpectrumResult)]) -> Suite {
    let mut s = Suite::new("bound_soundness");
    for (item, r) in solved {
        s.unknown += r.unknown_t().len();
        for t in r.feasible_t() {
            for b in r.bounds.bounds.iter().filter(|b| b.applicable) {
                let cap = b.value.floor().to_integer();
                s.record(i64::from(t) <= cap, || {
                    format!(
                        "{}: t = {t} exceeds {:?} bound {}",
                        item.name, b.name, b.value
                    )
                });
            }
            s.record(t >= r.bounds.lower, || {
                format!("{}: t = {t} below Δ = {}", item.name, r.bounds.lower)
            });
        }
    }
    s
}

fn certifier_replay(solved: &[(Item, SpectrumResult)]) -> Suite {
    let mut s = Suite::new("certifier_replay");
    let pairs: Vec<(Graph, SpectrumResult)> = solved
        .iter()
        .map(|(item, r)| (item.graph.clone(), r.clone()))
        .collect();
    let summary = audit_corpus(&pairs);
    s.checked = summary.certificates;
    s.passed = summary.passed;
    s.failed = summary.failures.len();
    s.skipped = summary.skipped_nonplanar.len();
    s.failures = summary
        .failures
        .iter()
        .map(|f| {
            let names: Vec<&str> = f.failed_checks.iter().map(|c| c.name).collect();
            match &f.error {
                Some(e) => format!("{}, t = {}: {e}", f.graph, f.t),
                None => format!("{}, t = {}: failed {names:?}", f.graph, f.t),
            }
        })
        .collect();
    s
}

fn family_oracles(solved: &[(Item, SpectrumResult)]) -> Suite {
    let mut s = Suite::new("family_oracles");
    for (item, r) in solved {
        let Some(f) = &item.family else { continue };
        let expected = expected_spectrum(f);
        match agrees(expected, r) {
            Some(ok) => s.record(ok, || {
                format!(
                    "{}: expected {expected:?}, solver found {:?}",
                    item.name,
                    r.feasible_t()
                )
            }),
            None if expected != ExpectedSpectrum::Unknown => s.unknown += 1,
            None => s.skipped += 1,
        }
    }
    s
}

pub fn run(config: Option<&Path>, inputs: &mut Inputs) -> Result<Report, CliError> {
    let (cfg, base) = match config {
        Some(path) => {
            let text = inputs.read(path)?;
            let cfg: AuditConfig =
                serde_json::from_str(&text).map_err(|e| CliError::Config(e.to_string()))?;
            let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
            (cfg, base)
        }
        None => (AuditConfig::builtin(), PathBuf::new()),
    };
    let search = cfg.search_config()?;
    let mut warnings = Vec::new();
    let items = collect_corpus(&cfg, &base, inputs, &mut warnings)?;
    if items.is_empty() {
        warnings.push("corpus is empty; every suite passes vacuously".into());
    }
    let item_cfg = SearchConfig {
        parallel_over_t: false,
        ..search.clone()
    };
    // par_iter keeps input order, so the report does not depend on scheduling
    let results: Vec<SpectrumResult> = items
        .par_iter()
        .map(|item| spectrum(&item.graph, &item_cfg))
        .collect::<Result<_, _>>()?;
    let solved: Vec<(Item, SpectrumResult)> = items.into_iter().zip(results).collect();

    let suites = [
        witness_validity(&solved),
        bound_soundness(&solved),
        certifier_replay(&solved),
        family_oracles(&solved),
    ];
    let verdict = suites
        .iter()
        .map(Suite::verdict)
        .max()
        .unwrap_or(Verdict::Ok);
    let planar = solved
        .iter()
        .filter(|(item, _)| profile(&item.graph).is_planar)
        .count();
    let payload = json!({
        "command": "audit",
        "status": match verdict {
            Verdict::Ok => "pass",
            Verdict::Unknown => "unknown",
            Verdict::Negative => "fail",
        },
        "corpus": {
            "graphs": solved.len(),
            "planar": planar,
            "witnesses": solved.iter().map(|(_, r)| r.witnesses.len()).sum::<usize>(),
            "unknown_t": solved.iter().map(|(_, r)| r.unknown_t().len()).sum::<usize>(),
        },
        "suites": suites.iter().map(Suite::to_json).collect::<Vec<_>>(),
        "warnings": warnings,
    });
    let mut config = serde_json::to_value(&cfg).expect("configs serialize");
    config["search"] = config_json(&search);
    Ok(Report {
        payload,
        verdict,
        config,
        seed: Some(cfg.seed),
        always_strict: true,
    })
}
