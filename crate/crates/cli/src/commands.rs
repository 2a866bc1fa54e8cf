//! One function per subcommand, each returning a [`Report`].

use std::path::Path;
use std::time::Duration;

use interval_spectrum::certify::{build_certificate, CertifyError, ChainRequest};
use interval_spectrum::families::{
    expected_spectrum, generate as build_family, random_planar, ExpectedSpectrum, Family,
};
use interval_spectrum::{
    feasible, max_coloring, parse_graph, profile, spectrum as solve_spectrum, upper_bounds,
    verify_interval, EdgeColoring, Graph, GraphFormat, Outcome, SearchConfig, SpectrumResult,
};
use serde_json::{json, Value};

use crate::{
    ChainArg, CliError, FamilyArgs, FormatArg, GraphInput, Inputs, LimitArgs, Report, Verdict,
    DEFAULT_SEED,
};

fn report(payload: Value, verdict: Verdict, config: Value) -> Report {
    Report {
        payload,
        verdict,
        config,
        seed: None,
        always_strict: false,
    }
}

fn input_error(path: &Path, message: impl ToString) -> CliError {
    CliError::Input {
        path: path.display().to_string(),
        message: message.to_string(),
    }
}

fn load_graph(input: &GraphInput, inputs: &mut Inputs) -> Result<Graph, CliError> {
    let text = inputs.read(&input.graph)?;
    let format = match input.graph_format {
        Some(FormatArg::Edgelist) => GraphFormat::EdgeList,
        Some(FormatArg::Graph6) => GraphFormat::Graph6,
        None => GraphFormat::from_path(&input.graph.to_string_lossy()),
    };
    parse_graph(&text, format).map_err(|e| input_error(&input.graph, e))
}

fn load_coloring(path: &Path, g: &Graph, inputs: &mut Inputs) -> Result<EdgeColoring, CliError> {
    let c = EdgeColoring::parse(&inputs.read(path)?).map_err(|e| input_error(path, e))?;
    if c.len() != g.edge_count() {
        return Err(input_error(
            path,
            format!(
                "{} colors for a graph with {} edges",
                c.len(),
                g.edge_count()
            ),
        ));
    }
    Ok(c)
}

fn graph_summary(g: &Graph) -> Value {
    json!({ "n": g.vertex_count(), "m": g.edge_count() })
}

pub(crate) fn search_config(limits: &LimitArgs) -> Result<SearchConfig, CliError> {
    if limits.node_limit == Some(0) || limits.time_limit_ms == Some(0) {
        return Err(CliError::Usage("limits must be positive".into()));
    }
    let defaults = SearchConfig::default();
    Ok(SearchConfig {
        node_limit: limits.node_limit.or(defaults.node_limit),
        time_limit: limits.time_limit_ms.map(Duration::from_millis),
        edge_order: limits.edge_order.into(),
        ..defaults
    })
}

pub(crate) fn config_json(cfg: &SearchConfig) -> Value {
    json!({
        "node_limit": cfg.node_limit,
        "time_limit_ms": cfg.time_limit.map(|d| d.as_millis() as u64),
        "edge_order": cfg.edge_order,
        "prunes": cfg.prunes,
    })
}

pub fn verify(
    input: &GraphInput,
    coloring: &Path,
    inputs: &mut Inputs,
) -> Result<Report, CliError> {
    let g = load_graph(input, inputs)?;
    let c = load_coloring(coloring, &g, inputs)?;
    let r = verify_interval(&g, &c).map_err(|e| input_error(coloring, e))?;
    let verdict = if r.interval_ok {
        Verdict::Ok
    } else {
        Verdict::Negative
    };
    let payload = json!({
        "command": "verify",
        "graph": graph_summary(&g),
        "t": c.t(),
        "interval_ok": r.interval_ok,
        "is_proper": r.is_proper,
        "all_colors_used": r.all_colors_used,
        "palettes": r.palettes,
        "violations": r.violations,
        "first_violation": r.first_violation().map(ToString::to_string),
    });
    Ok(report(payload, verdict, Value::Null))
}

pub fn solve(
    input: &GraphInput,
    t: Option<u32>,
    limits: &LimitArgs,
    inputs: &mut Inputs,
) -> Result<Report, CliError> {
    let g = load_graph(input, inputs)?;
    let cfg = search_config(limits)?;
    let (payload, verdict) = match t {
        Some(t) => {
            let f = feasible(&g, t, &cfg)?;
            let verdict = match f.outcome {
                Outcome::Feasible(_) => Verdict::Ok,
                Outcome::Infeasible => Verdict::Negative,
                Outcome::Unknown(_) => Verdict::Unknown,
            };
            let limit = match f.outcome {
                Outcome::Unknown(hit) => Some(hit),
                _ => None,
            };
            (
                json!({
                    "command": "solve",
                    "graph": graph_summary(&g),
                    "t": t,
                    "status": f.outcome.status(),
                    "limit": limit,
                    "nodes": f.nodes,
                    "coloring": f.outcome.witness().map(EdgeColoring::to_text),
                }),
                verdict,
            )
        }
        None => {
            let best = max_coloring(&g, &cfg)?;
            let verdict = match &best {
                None => Verdict::Negative,
                Some(b) if b.lower_estimate => Verdict::Unknown,
                Some(_) => Verdict::Ok,
            };
            (
                json!({
                    "command": "solve",
                    "graph": graph_summary(&g),
                    "w": best.as_ref().map(|b| b.w),
                    "exact": best.as_ref().map(|b| !b.lower_estimate),
                    "nodes": best.as_ref().map(|b| b.nodes),
                    "coloring": best.as_ref().map(|b| b.witness.to_text()),
                }),
                verdict,
            )
        }
    };
    Ok(report(payload, verdict, config_json(&cfg)))
}

pub(crate) fn spectrum_json(g: &Graph, r: &SpectrumResult) -> Value {
    let witnesses: serde_json::Map<String, Value> = r
        .witnesses
        .iter()
        .map(|(t, c)| (t.to_string(), Value::String(c.to_text())))
        .collect();
    json!({
        "graph": graph_summary(g),
        "lower": r.bounds.lower,
        "ceiling": r.bounds.ceiling,
        "class_two_obstruction": r.bounds.class_two_obstruction,
        "feasible_t": r.feasible_t(),
        "unknown_t": r.unknown_t(),
        "min_t": r.min_t(),
        "max_t": r.max_t(),
        "exhaustive": r.is_exhaustive(),
        "per_t": r.per_t,
        "total_nodes": r.total_nodes(),
        "witnesses": witnesses,
    })
}

fn spectrum_verdict(r: &SpectrumResult) -> Verdict {
    if !r.unknown_t().is_empty() {
        Verdict::Unknown
    } else if r.witnesses.is_empty() {
        Verdict::Negative
    } else {
        Verdict::Ok
    }
}

pub fn spectrum(
    input: &GraphInput,
    limits: &LimitArgs,
    inputs: &mut Inputs,
) -> Result<Report, CliError> {
    let g = load_graph(input, inputs)?;
    let cfg = search_config(limits)?;
    let r = solve_spectrum(&g, &cfg)?;
    let mut payload = spectrum_json(&g, &r);
    payload["command"] = json!("spectrum");
    Ok(report(payload, spectrum_verdict(&r), config_json(&cfg)))
}

pub fn bounds(input: &GraphInput, explain: bool, inputs: &mut Inputs) -> Result<Report, CliError> {
    let g = load_graph(input, inputs)?;
    let p = profile(&g);
    let b = upper_bounds(&g, &p)?;
    let entries: Vec<Value> = b
        .bounds
        .iter()
        .map(|e| {
            let mut v = json!({
                "name": e.name,
                "applicable": e.applicable,
                "value": e.value.to_string(),
                "floor": e.value.floor().to_integer(),
            });
            if explain {
                v["anchor"] = json!(e.anchor);
            }
            v
        })
        .collect();
    let binding: Vec<Value> = b
        .bounds
        .iter()
        .filter(|e| e.applicable && e.value.floor().to_integer() == i64::from(b.ceiling))
        .map(|e| json!(e.name))
        .collect();
    let payload = json!({
        "command": "bounds",
        "graph": graph_summary(&g),
        "profile": p,
        "bounds": entries,
        "ceiling": b.ceiling,
        "binding": binding,
        "lower": b.lower,
        "class_two_obstruction": b.class_two_obstruction,
    });
    Ok(report(payload, Verdict::Ok, Value::Null))
}

pub fn certify(
    input: &GraphInput,
    coloring: &Path,
    chain: ChainArg,
    inputs: &mut Inputs,
) -> Result<Report, CliError> {
    let g = load_graph(input, inputs)?;
    let c = load_coloring(coloring, &g, inputs)?;
    let request = match chain {
        ChainArg::Planar => ChainRequest::Planar,
        ChainArg::Outerplanar => ChainRequest::Outerplanar,
        ChainArg::Auto => ChainRequest::Auto,
    };
    let config = json!({ "chain": format!("{request:?}").to_lowercase() });
    match build_certificate(&g, &c, &profile(&g), request) {
        Ok(cert) => {
            let verdict = if cert.all_passed() {
                Verdict::Ok
            } else {
                Verdict::Negative
            };
            let mut payload = serde_json::to_value(&cert).expect("certificates serialize");
            payload["command"] = json!("certify");
            payload["all_passed"] = json!(cert.all_passed());
            Ok(report(payload, verdict, config))
        }
        // the precondition itself is the first check
        Err(e @ CertifyError::NotInterval(_)) => Ok(report(
            json!({
                "command": "certify",
                "all_passed": false,
                "error": e.to_string(),
            }),
            Verdict::Negative,
            config,
        )),
        Err(e) => Err(e.into()),
    }
}

/// A family member, or a random planar graph, as named on the command line.
enum Source {
    Family(Family),
    RandomPlanar { n: usize, m: usize, seed: u64 },
}

fn source(args: &FamilyArgs) -> Result<Source, CliError> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| CliError::Usage(format!("--family {} needs --{flag}", args.family)))
    };
    let kind = args.family.replace('-', "_");
    let params = match kind.as_str() {
        "random_planar" => {
            return Ok(Source::RandomPlanar {
                n: need(args.n, "n")?,
                m: need(args.m, "m")?,
                seed: args.seed.unwrap_or(DEFAULT_SEED),
            })
        }
        "caterpillar" if args.leaves.is_empty() => {
            return Err(CliError::Usage(
                "--family caterpillar needs --leaves".into(),
            ))
        }
        "caterpillar" => args.leaves.clone(),
        "complete_bipartite" => vec![need(args.n, "n")?, need(args.m, "m")?],
        _ => vec![need(args.n, "n")?],
    };
    Ok(Source::Family(Family::from_kind(&kind, &params)?))
}

pub fn generate(
    args: &FamilyArgs,
    out: Option<&Path>,
    format: FormatArg,
) -> Result<Report, CliError> {
    let (name, g, seed) = match source(args)? {
        Source::Family(f) => (f.to_string(), build_family(&f)?, None),
        Source::RandomPlanar { n, m, seed } => (
            format!("random_planar({n},{m})"),
            random_planar(n, m, seed)?,
            Some(seed),
        ),
    };
    let text = match format {
        FormatArg::Edgelist => g.to_edge_list(),
        FormatArg::Graph6 => g.to_graph6(),
    };
    if let Some(path) = out {
        std::fs::write(path, format!("{text}\n")).map_err(|source| CliError::Write {
            path: path.display().to_string(),
            source,
        })?;
    }
    let payload = json!({
        "command": "generate",
        "family": name,
        "graph": text,
        "format": match format { FormatArg::Edgelist => "edgelist", FormatArg::Graph6 => "graph6" },
        "n": g.vertex_count(),
        "m": g.edge_count(),
        "out": out.map(|p| p.display().to_string()),
    });
    let mut r = report(payload, Verdict::Ok, Value::Null);
    r.seed = seed;
    Ok(r)
}

/// `Some(true)` when the computed spectrum matches the expectation, `None`
/// when there is nothing to compare or the search was not exhaustive.
pub(crate) fn agrees(expected: ExpectedSpectrum, r: &SpectrumResult) -> Option<bool> {
    if !r.is_exhaustive() {
        return None;
    }
    let got = r.feasible_t();
    match expected {
        ExpectedSpectrum::Interval { lo, hi } => Some(got == (lo..=hi).collect::<Vec<_>>()),
        ExpectedSpectrum::ExactMax { w } => Some(r.max_t() == Some(w)),
        ExpectedSpectrum::NotColorable => Some(got.is_empty()),
        ExpectedSpectrum::Unknown => None,
    }
}

pub fn oracle(args: &FamilyArgs, limits: &LimitArgs) -> Result<Report, CliError> {
    let Source::Family(f) = source(args)? else {
        return Err(CliError::Usage(
            "random_planar has no known spectrum".into(),
        ));
    };
    let cfg = search_config(limits)?;
    let g = build_family(&f)?;
    let r = solve_spectrum(&g, &cfg)?;
    let expected = expected_spectrum(&f);
    let agreement = agrees(expected, &r);
    let verdict = match agreement {
        Some(false) => Verdict::Negative,
        _ if !r.is_exhaustive() => Verdict::Unknown,
        _ => Verdict::Ok,
    };
    let payload = json!({
        "command": "oracle",
        "family": f.to_string(),
        "graph": graph_summary(&g),
        "expected": expected,
        "feasible_t": r.feasible_t(),
        "unknown_t": r.unknown_t(),
        "agrees": agreement,
    });
    Ok(report(payload, verdict, config_json(&cfg)))
}
