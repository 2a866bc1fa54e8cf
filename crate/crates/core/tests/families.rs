mod common;

use interval_spectrum::families::{
    expected_spectrum, generate, random_planar, tree_interval_coloring, ExpectedSpectrum, Family,
};
use interval_spectrum::{profile, spectrum, verify_interval, SearchConfig};

use common::naive_spectrum;

fn members() -> Vec<Family> {
    let mut out = Vec::new();
    for a in 1..=4 {
        for b in a..=4 {
            out.push(Family::CompleteBipartite(a, b));
        }
    }
    out.extend((2..=7).map(Family::Path));
    out.extend((3..=8).map(Family::Cycle));
    out.extend((2..=7).map(Family::Star));
    out.extend((2..=7).map(Family::Fan));
    out.extend([2, 3].map(Family::Hypercube));
    out.extend((2..=5).map(Family::Complete));
    out.push(Family::Caterpillar(vec![0, 2, 1]));
    out.push(Family::Caterpillar(vec![3]));
    out.push(Family::Caterpillar(vec![1, 0, 0, 2]));
    out
}

#[test]
fn solver_matches_known_spectra() {
    for f in members() {
        let g = generate(&f).unwrap();
        let result = spectrum(&g, &SearchConfig::default()).unwrap();
        assert!(result.is_exhaustive(), "{f}");
        let feasible = result.feasible_t();
        match expected_spectrum(&f) {
            ExpectedSpectrum::Interval { lo, hi } => {
                assert_eq!(feasible, (lo..=hi).collect::<Vec<_>>(), "{f}")
            }
            ExpectedSpectrum::ExactMax { w } => assert_eq!(result.max_t(), Some(w), "{f}"),
            ExpectedSpectrum::NotColorable => assert!(feasible.is_empty(), "{f}"),
            ExpectedSpectrum::Unknown => {}
        }
    }
}

#[test]
fn small_members_match_brute_force() {
    for f in members() {
        let g = generate(&f).unwrap();
        if g.edge_count() > 7 {
            continue;
        }
        let result = spectrum(&g, &SearchConfig::default()).unwrap();
        assert_eq!(result.feasible_t(), naive_spectrum(&g), "{f}");
    }
}

#[test]
fn complete_graphs() {
    // K_n is interval colorable exactly for even n, starting at n - 1 colors
    let expected: [&[u32]; 4] = [&[1], &[], &[3, 4], &[]];
    for (n, want) in (2..=5).zip(expected) {
        let g = generate(&Family::Complete(n)).unwrap();
        let feasible = spectrum(&g, &SearchConfig::default()).unwrap().feasible_t();
        assert_eq!(feasible, want, "K{n}");
    }
}

#[test]
fn trees_reach_n_minus_one_constructively() {
    for f in [
        Family::Path(6),
        Family::Star(5),
        Family::Caterpillar(vec![2, 0, 3, 1]),
        Family::Caterpillar(vec![0, 0, 0]),
    ] {
        let g = generate(&f).unwrap();
        let c = tree_interval_coloring(&g).unwrap();
        assert!(verify_interval(&g, &c).unwrap().interval_ok, "{f}");
        // rooted at a leaf the construction climbs to n - 1
        if g.degree(0).unwrap() == 1 {
            assert_eq!(c.t() as usize, g.vertex_count() - 1, "{f}");
        }
    }
    assert!(tree_interval_coloring(&generate(&Family::Cycle(4)).unwrap()).is_err());
}

#[test]
fn random_planar_is_deterministic_and_planar() {
    for seed in 0..20 {
        let a = random_planar(8, 14, seed).unwrap();
        assert_eq!(a, random_planar(8, 14, seed).unwrap());
        assert_eq!(a.edge_count(), 14);
        assert!(profile(&a).is_planar);
    }
    assert_ne!(
        random_planar(8, 14, 0).unwrap(),
        random_planar(8, 14, 1).unwrap()
    );
    assert!(random_planar(5, 10, 0).is_err());
}
