mod common;

use interval_spectrum::bounds::{bound_report_with, BoundName};
use interval_spectrum::solver::{EdgeOrder, PruneRules};
use interval_spectrum::{
    feasible, max_coloring, profile, spectrum, upper_bounds, verify_interval, Graph, SearchConfig,
    Status,
};

use common::{naive_feasible, naive_is_interval, nonisomorphic_graphs, small_corpus};

/// Every graph with at most 8 edges from the shared corpus and from the
/// complete lists of graphs on up to 5 vertices.
fn oracle_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = small_corpus()
        .into_iter()
        .filter(|(_, g)| g.edge_count() <= 8)
        .collect();
    for n in 2..=5 {
        for g in nonisomorphic_graphs(n) {
            if (1..=8).contains(&g.edge_count()) {
                out.push((g.to_edge_list(), g));
            }
        }
    }
    out
}

fn serial() -> SearchConfig {
    SearchConfig {
        parallel_over_t: false,
        ..SearchConfig::default()
    }
}

#[test]
fn solver_matches_brute_force_for_small_graphs() {
    for (name, g) in oracle_corpus() {
        let m = g.edge_count() as u32;
        let result = spectrum(&g, &SearchConfig::default()).unwrap();
        assert!(result.is_exhaustive(), "{name}");
        let ceiling = result.bounds.ceiling;
        for t in 1..=m {
            let expected = naive_feasible(&g, t).is_some();
            if t > ceiling {
                // brute force confirms nothing above the ceiling is missed
                assert!(
                    !expected,
                    "{name}: t = {t} feasible above ceiling {ceiling}"
                );
                continue;
            }
            let got = feasible(&g, t, &serial()).unwrap();
            assert_eq!(
                got.outcome.status() == Status::Feasible,
                expected,
                "{name}, t = {t}"
            );
            assert_eq!(
                result.witnesses.contains_key(&t),
                expected,
                "{name}, t = {t}"
            );
        }
    }
}

#[test]
fn witnesses_pass_both_checkers() {
    for (name, g) in small_corpus() {
        let result = spectrum(&g, &SearchConfig::default()).unwrap();
        for (&t, c) in &result.witnesses {
            assert_eq!(c.t(), t);
            assert!(
                verify_interval(&g, c).unwrap().interval_ok,
                "{name}, t = {t}"
            );
            assert!(naive_is_interval(&g, c.colors(), t), "{name}, t = {t}");
        }
    }
}

#[test]
fn each_prune_rule_is_sound_alone() {
    let toggles: [fn(&mut PruneRules); 6] = [
        |p| p.distinct = false,
        |p| p.window = false,
        |p| p.closed_vertex = false,
        |p| p.coverage = false,
        |p| p.symmetry = false,
        |p| p.forward_check = false,
    ];
    for (name, g) in small_corpus() {
        let reference = spectrum(&g, &SearchConfig::default()).unwrap().feasible_t();
        for (i, toggle) in toggles.iter().enumerate() {
            let mut cfg = SearchConfig::default();
            toggle(&mut cfg.prunes);
            assert_eq!(
                spectrum(&g, &cfg).unwrap().feasible_t(),
                reference,
                "{name}, rule {i}"
            );
        }
        if g.edge_count() <= 6 {
            let cfg = SearchConfig {
                prunes: PruneRules::none(),
                ..SearchConfig::default()
            };
            assert_eq!(
                spectrum(&g, &cfg).unwrap().feasible_t(),
                reference,
                "{name}, no rules"
            );
        }
    }
}

#[test]
fn edge_orders_agree() {
    for (name, g) in small_corpus() {
        let reference = spectrum(&g, &SearchConfig::default()).unwrap().feasible_t();
        for order in [EdgeOrder::Input, EdgeOrder::DegreeDesc] {
            let cfg = SearchConfig {
                edge_order: order,
                ..SearchConfig::default()
            };
            assert_eq!(
                spectrum(&g, &cfg).unwrap().feasible_t(),
                reference,
                "{name}, {order:?}"
            );
        }
    }
}

#[test]
fn parallel_and_serial_spectra_agree() {
    for (name, g) in small_corpus() {
        let par = spectrum(&g, &SearchConfig::default()).unwrap();
        let ser = spectrum(&g, &serial()).unwrap();
        assert_eq!(par.feasible_t(), ser.feasible_t(), "{name}");
        assert_eq!(par.witnesses, ser.witnesses, "{name}");
    }
}

#[test]
fn max_coloring_is_top_of_spectrum() {
    for (name, g) in small_corpus() {
        let result = spectrum(&g, &SearchConfig::default()).unwrap();
        let top = max_coloring(&g, &SearchConfig::default()).unwrap();
        assert_eq!(top.as_ref().map(|m| m.w), result.max_t(), "{name}");
        if let Some(top) = top {
            assert!(!top.lower_estimate);
            assert!(verify_interval(&g, &top.witness).unwrap().interval_ok);
        }
    }
}

#[test]
fn every_feasible_t_lies_between_delta_and_ceiling() {
    for (name, g) in oracle_corpus() {
        let result = spectrum(&g, &SearchConfig::default()).unwrap();
        for t in result.feasible_t() {
            assert!(t >= g.max_degree() as u32, "{name}");
            assert!(t <= result.bounds.ceiling, "{name}");
        }
    }
}

#[test]
fn tiny_node_limit_reports_unknown_not_infeasible() {
    let g =
        interval_spectrum::families::generate(&interval_spectrum::families::Family::Hypercube(3))
            .unwrap();
    let cfg = SearchConfig {
        node_limit: Some(3),
        ..SearchConfig::default()
    };
    let result = spectrum(&g, &cfg).unwrap();
    assert!(!result.is_exhaustive());
    for r in &result.per_t {
        assert_ne!(
            r.status,
            Status::Infeasible,
            "t = {} claimed infeasible",
            r.t
        );
    }
}

#[test]
fn enabling_more_bounds_never_raises_the_ceiling() {
    for (name, g) in small_corpus() {
        let p = profile(&g);
        let full = upper_bounds(&g, &p).unwrap();
        let applicable: Vec<BoundName> = full
            .bounds
            .iter()
            .filter(|b| b.applicable)
            .map(|b| b.name)
            .collect();
        // walk through every subset of the applicable bounds
        for mask in 0u32..(1 << applicable.len()) {
            let flags: Vec<(BoundName, bool)> = applicable
                .iter()
                .enumerate()
                .map(|(i, &b)| (b, mask >> i & 1 == 1))
                .collect();
            let partial = bound_report_with(&g, &p, &flags).unwrap();
            assert!(partial.ceiling >= full.ceiling, "{name}, mask {mask:b}");
            for (i, &b) in applicable.iter().enumerate() {
                if mask >> i & 1 == 0 {
                    let mut more = flags.clone();
                    more[i].1 = true;
                    let bigger = bound_report_with(&g, &p, &more).unwrap();
                    assert!(bigger.ceiling <= partial.ceiling, "{name}, adding {b:?}");
                }
            }
        }
    }
}
