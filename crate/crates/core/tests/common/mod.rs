//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls into the solver, the verifier or the planarity test.

#![allow(dead_code)]

use interval_spectrum::families::{generate, random_planar, Family};
use interval_spectrum::Graph;

/// Interval t-coloring check straight from the definition: each vertex's
/// colors collected into a bit set, which must have one bit per incident
/// edge and no holes; the union over all edges must be `1..=t`.
pub fn naive_is_interval(g: &Graph, colors: &[u32], t: u32) -> bool {
    if colors.len() != g.edge_count() || t >= 64 || colors.iter().any(|&c| c < 1 || c > t) {
        return false;
    }
    let all = colors.iter().fold(0u64, |acc, &c| acc | 1 << c);
    if all != ((1u64 << (t + 1)) - 2) {
        return false;
    }
    let n = g.vertex_count();
    let mut palette = vec![0u64; n];
    let mut degree = vec![0u32; n];
    for (&(u, v), &c) in g.edges().iter().zip(colors) {
        for x in [u, v] {
            palette[x] |= 1 << c;
            degree[x] += 1;
        }
    }
    palette.iter().zip(&degree).all(|(&set, &d)| {
        if d == 0 {
            return true;
        }
        let shifted = set >> set.trailing_zeros();
        set.count_ones() == d && shifted == (1u64 << d) - 1
    })
}

/// Enumerates all `t^m` assignments in odometer order.
pub fn naive_feasible(g: &Graph, t: u32) -> Option<Vec<u32>> {
    let m = g.edge_count();
    if m == 0 || t == 0 {
        return None;
    }
    let mut colors = vec![1u32; m];
    loop {
        if naive_is_interval(g, &colors, t) {
            return Some(colors);
        }
        let mut i = 0;
        loop {
            if i == m {
                return None;
            }
            if colors[i] < t {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
            i += 1;
        }
    }
}

/// Feasible `t` in `1..=m` by brute force.
pub fn naive_spectrum(g: &Graph) -> Vec<u32> {
    (1..=g.edge_count() as u32)
        .filter(|&t| naive_feasible(g, t).is_some())
        .collect()
}

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut a = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|&i| s >> i & 1 == 1).collect())
        .collect()
}

/// Kuratowski check valid for `n <= 6`: with so few vertices a K5
/// subdivision has at most one subdividing vertex and a K3,3 subdivision
/// none.
pub fn kuratowski_planar_small(g: &Graph) -> bool {
    let n = g.vertex_count();
    assert!(n <= 6);
    let a = adjacency(g);
    for five in subsets(n, 5) {
        let missing: Vec<(usize, usize)> = five
            .iter()
            .enumerate()
            .flat_map(|(i, &x)| five[i + 1..].iter().map(move |&y| (x, y)))
            .filter(|&(x, y)| !a[x][y])
            .collect();
        match missing.as_slice() {
            [] => return false,
            [(x, y)] if (0..n).any(|z| !five.contains(&z) && a[*x][z] && a[z][*y]) => {
                return false;
            }
            _ => {}
        }
    }
    if n == 6 {
        for left in subsets(6, 3) {
            let right: Vec<usize> = (0..6).filter(|v| !left.contains(v)).collect();
            if left.iter().all(|&x| right.iter().all(|&y| a[x][y])) {
                return false;
            }
        }
    }
    true
}

fn chords_cross(pos: &[usize], (a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let (p, q) = (pos[a].min(pos[b]), pos[a].max(pos[b]));
    let inside = |x: usize| p < pos[x] && pos[x] < q;
    inside(c) != inside(d)
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len()).rev().find(|&j| xs[j] > xs[i - 1]).unwrap();
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Outerplanar iff the vertices can be put on a circle so that no two
/// edges, drawn as chords, cross. Tries every cyclic order (vertex 0 fixed).
pub fn circle_outerplanar(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n <= 3 {
        return true;
    }
    let edges = g.edges();
    let mut rest: Vec<usize> = (1..n).collect();
    loop {
        let mut pos = vec![0; n];
        for (i, &v) in rest.iter().enumerate() {
            pos[v] = i + 1;
        }
        let ok = edges
            .iter()
            .enumerate()
            .all(|(i, &e)| edges[i + 1..].iter().all(|&f| !chords_cross(&pos, e, f)));
        if ok {
            return true;
        }
        if !next_permutation(&mut rest) {
            return false;
        }
    }
}

/// One representative per isomorphism class of graphs on `n` vertices
/// (`n <= 6`), found by minimizing the edge bit mask over all relabelings.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 6);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let index = |u: usize, v: usize| {
        let (a, b) = (u.min(v), u.max(v));
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let mut perms = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        perms.push(p.clone());
        if !next_permutation(&mut p) {
            break;
        }
    }
    let remap: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    let mut seen = std::collections::BTreeSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let canon = remap
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .fold(0u32, |acc, (_, &j)| acc | 1 << j)
            })
            .min()
            .unwrap();
        seen.insert(canon);
    }
    seen.into_iter()
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Graph::new(n, &edges).unwrap()
        })
        .collect()
}

/// Small named graphs plus a few seeded random planar ones.
pub fn small_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = [
        Family::Path(2),
        Family::Path(4),
        Family::Path(6),
        Family::Cycle(3),
        Family::Cycle(4),
        Family::Cycle(5),
        Family::Cycle(6),
        Family::Star(4),
        Family::Star(6),
        Family::Fan(4),
        Family::Fan(5),
        Family::CompleteBipartite(2, 2),
        Family::CompleteBipartite(2, 3),
        Family::CompleteBipartite(1, 5),
        Family::Complete(4),
        Family::Caterpillar(vec![1, 1, 2]),
        Family::Caterpillar(vec![2, 0, 1]),
    ]
    .into_iter()
    .map(|f| (f.to_string(), generate(&f).unwrap()))
    .collect();
    for seed in 0..12 {
        let n = 4 + (seed % 4) as usize;
        let m = (n - 1 + seed as usize % 4).min(8);
        out.push((
            format!("planar({n},{m},{seed})"),
            random_planar(n, m, seed).unwrap(),
        ));
    }
    // two components: a path and a triangle
    out.push((
        "P3+K3".into(),
        Graph::new(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (5, 3)]).unwrap(),
    ));
    out.push((
        "P3+P2".into(),
        Graph::new(5, &[(0, 1), (1, 2), (3, 4)]).unwrap(),
    ));
    out
}
