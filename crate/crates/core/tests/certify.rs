mod common;

use interval_spectrum::certify::{
    audit_corpus, build_certificate, build_certificate_with, CertifyError, CertifyOptions,
    ChainRequest, GraphClass, Theorem,
};
use interval_spectrum::families::{generate, random_planar, Family};
use interval_spectrum::{profile, spectrum, EdgeColoring, Graph, SearchConfig};
use num_rational::Ratio;

use common::small_corpus;

fn planar_witnesses() -> Vec<(String, Graph, EdgeColoring)> {
    let mut graphs = small_corpus();
    for seed in 0..15 {
        graphs.push((
            format!("planar(7,12,{seed})"),
            random_planar(7, 12, seed).unwrap(),
        ));
    }
    graphs.push(("Q3".into(), generate(&Family::Hypercube(3)).unwrap()));
    let mut out = Vec::new();
    for (name, g) in graphs {
        if !profile(&g).is_planar {
            continue;
        }
        let result = spectrum(&g, &SearchConfig::default()).unwrap();
        for c in result.witnesses.into_values() {
            out.push((name.clone(), g.clone(), c));
        }
    }
    out
}

#[test]
fn every_witness_certifies() {
    let witnesses = planar_witnesses();
    assert!(witnesses.len() > 80);
    for (name, g, c) in &witnesses {
        let p = profile(g);
        let mut requests = vec![ChainRequest::Planar, ChainRequest::Auto];
        if p.is_outerplanar {
            requests.push(ChainRequest::Outerplanar);
        }
        for request in requests {
            let cert = build_certificate(g, c, &p, request).unwrap();
            assert!(
                cert.all_passed(),
                "{name}, t = {}, {request:?}: {:?}",
                c.t(),
                cert.failed().collect::<Vec<_>>()
            );
            assert!(Ratio::from_integer(c.t() as i64) <= cert.derived_bound);
            let expected_class = match request {
                ChainRequest::Planar => GraphClass::Planar,
                ChainRequest::Outerplanar => GraphClass::Outerplanar,
                ChainRequest::Auto if p.is_outerplanar => GraphClass::Outerplanar,
                ChainRequest::Auto => GraphClass::Planar,
            };
            assert_eq!(cert.class, expected_class);
        }
    }
}

#[test]
fn shifted_slices_are_caught() {
    let mut mutated = 0;
    for (name, g, c) in planar_witnesses() {
        let p = profile(&g);
        let honest = build_certificate(&g, &c, &p, ChainRequest::Auto).unwrap();
        if honest.theorem == Theorem::CountingBound {
            continue;
        }
        for offset in [-1, 1] {
            let opts = CertifyOptions {
                slice_low_offset: offset,
                ..CertifyOptions::default()
            };
            let cert = build_certificate_with(&g, &c, &p, ChainRequest::Auto, opts).unwrap();
            assert!(!cert.all_passed(), "{name}, t = {}, offset {offset}", c.t());
            mutated += 1;
        }
    }
    assert!(mutated > 50);
}

#[test]
fn corrupted_colorings_are_rejected() {
    for (name, g, c) in planar_witnesses() {
        let p = profile(&g);
        // give two edges at a common vertex the same color
        let Some((e, f)) = (0..g.vertex_count())
            .map(|v| g.incident(v))
            .find(|inc| inc.len() >= 2)
            .map(|inc| (inc[0].1, inc[1].1))
        else {
            continue;
        };
        let mut colors = c.colors().to_vec();
        colors[f] = colors[e];
        let bad = EdgeColoring::new(c.t(), colors).unwrap();
        assert!(
            matches!(
                build_certificate(&g, &bad, &p, ChainRequest::Auto),
                Err(CertifyError::NotInterval(_))
            ),
            "{name}"
        );
    }
}

#[test]
fn non_planar_graphs_have_no_chain() {
    let k33 = generate(&Family::CompleteBipartite(3, 3)).unwrap();
    let result = spectrum(&k33, &SearchConfig::default()).unwrap();
    let c = result.witnesses.values().next().unwrap();
    assert_eq!(
        build_certificate(&k33, c, &profile(&k33), ChainRequest::Auto),
        Err(CertifyError::NoApplicableChain)
    );
    let audit = audit_corpus(&[(k33.clone(), result)]);
    assert_eq!(audit.skipped_nonplanar, vec![k33.to_edge_list()]);
    assert_eq!(audit.certificates, 0);
}

#[test]
fn audit_counts_every_witness() {
    let mut results = Vec::new();
    let mut total = 0;
    for (_, g) in small_corpus() {
        let r = spectrum(&g, &SearchConfig::default()).unwrap();
        total += r.witnesses.len();
        results.push((g, r));
    }
    let audit = audit_corpus(&results);
    assert!(audit.all_passed(), "{:?}", audit.failures);
    assert_eq!(audit.certificates, total);
    assert_eq!(audit.passed, total);
}

#[test]
fn planar_eight_vertex_graph_with_ten_colors() {
    // found by the sharpness search over maximal planar graphs on 8 vertices
    let g = interval_spectrum::parse_graph(
        "8; 0-5 0-7 1-5 0-2 1-6 1-2 0-4 2-3 4-5 3-7 3-6 2-7 6-7 2-6 0-1 5-6 1-4 0-6",
        interval_spectrum::GraphFormat::EdgeList,
    )
    .unwrap();
    let c = EdgeColoring::parse(
        "10; 0:2 1:7 2:3 3:5 4:5 5:6 6:3 7:9 8:1 9:10 10:8 11:8 12:9 13:7 14:4 15:4 16:2 17:6",
    )
    .unwrap();
    let p = profile(&g);
    assert!(p.is_planar && !p.is_outerplanar);
    assert_eq!(g.edge_count(), 18);
    let cert = build_certificate(&g, &c, &p, ChainRequest::Planar).unwrap();
    assert!(cert.all_passed(), "{:?}", cert.failed().collect::<Vec<_>>());
    // (3n - 4) / 2 = 10: the planar bound is attained
    assert_eq!(cert.derived_bound, Ratio::from_integer(10));
}
