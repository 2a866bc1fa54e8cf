//! Named graph families with fixed labelings, the interval-coloring answers
//! known for them, a constructive coloring for trees, and a seeded random
//! planar generator.

use std::collections::VecDeque;
use std::fmt;

use num_integer::gcd;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::coloring::{Color, EdgeColoring};
use crate::graph::{is_planar, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters { family: String, reason: String },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("graph is not a tree with at least one edge")]
    NotATree,
    #[error("only {achieved} of {target} edges could be added while staying planar")]
    Unreachable { target: usize, achieved: usize },
}

fn invalid(family: &str, reason: &str) -> FamilyError {
    FamilyError::InvalidParameters {
        family: family.to_string(),
        reason: reason.to_string(),
    }
}

/// A family member with its parameters.
///
/// Labelings:
/// * `Path(n)`: vertices `0..n`, edges `i -- i+1`.
/// * `Cycle(n)`: the path plus `n-1 -- 0`.
/// * `Star(n)`: hub `0`, leaves `1..n` (so `K_{1,n-1}`).
/// * `Caterpillar(leaves)`: spine `0..s` as a path, then the leaves of spine
///   vertex 0, spine vertex 1, ... numbered consecutively from `s`.
/// * `Fan(n)`: hub `0` joined to the path `1 -- 2 -- ... -- n-1`; spokes
///   come first in the edge order.
/// * `CompleteBipartite(a, b)`: parts `0..a` and `a..a+b`, edges row-major.
/// * `Hypercube(d)`: vertices are bit strings, edges `x -- x ^ (1 << i)`.
/// * `Complete(n)`: all pairs in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "params", rename_all = "snake_case")]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Caterpillar(Vec<usize>),
    Fan(usize),
    CompleteBipartite(usize, usize),
    Hypercube(u32),
    Complete(usize),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "P_{n}"),
            Family::Cycle(n) => write!(f, "C_{n}"),
            Family::Star(n) => write!(f, "K_1,{}", n.saturating_sub(1)),
            Family::Caterpillar(l) => write!(f, "caterpillar{l:?}"),
            Family::Fan(n) => write!(f, "F_{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "K_{a},{b}"),
            Family::Hypercube(d) => write!(f, "Q_{d}"),
            Family::Complete(n) => write!(f, "K_{n}"),
        }
    }
}

impl Family {
    /// Builds a family from a kind name and integer parameters, as used on
    /// the command line and in audit configs.
    pub fn from_kind(kind: &str, params: &[usize]) -> Result<Family, FamilyError> {
        let one = |name: &str| match params {
            [n] => Ok(*n),
            _ => Err(invalid(name, "expected one parameter")),
        };
        let family = match kind {
            "path" => Family::Path(one(kind)?),
            "cycle" => Family::Cycle(one(kind)?),
            "star" => Family::Star(one(kind)?),
            "fan" => Family::Fan(one(kind)?),
            "hypercube" => Family::Hypercube(one(kind)? as u32),
            "complete" => Family::Complete(one(kind)?),
            "caterpillar" => Family::Caterpillar(params.to_vec()),
            "complete_bipartite" | "complete-bipartite" => match params {
                [a, b] => Family::CompleteBipartite(*a, *b),
                _ => return Err(invalid(kind, "expected two parameters")),
            },
            other => return Err(FamilyError::UnknownFamily(other.to_string())),
        };
        family.validate()?;
        Ok(family)
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let bad = |reason| Err(invalid(&self.to_string(), reason));
        match *self {
            Family::Path(n) if n < 2 => bad("path needs n >= 2"),
            Family::Cycle(n) if n < 3 => bad("cycle needs n >= 3"),
            Family::Star(n) if n < 2 => bad("star needs n >= 2"),
            Family::Fan(n) if n < 2 => bad("fan needs n >= 2"),
            Family::Complete(n) if n < 2 => bad("complete graph needs n >= 2"),
            Family::CompleteBipartite(a, b) if a < 1 || b < 1 => {
                bad("complete bipartite needs both parts >= 1")
            }
            Family::Hypercube(d) if !(1..=20).contains(&d) => bad("hypercube needs 1 <= n <= 20"),
            Family::Caterpillar(ref leaves) if leaves.is_empty() => {
                bad("caterpillar needs a spine of at least one vertex")
            }
            Family::Caterpillar(ref leaves) if leaves.len() == 1 && leaves[0] == 0 => {
                bad("caterpillar needs at least one edge")
            }
            _ => Ok(()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Family::Path(n)
            | Family::Cycle(n)
            | Family::Star(n)
            | Family::Fan(n)
            | Family::Complete(n) => *n,
            Family::Caterpillar(l) => l.len() + l.iter().sum::<usize>(),
            Family::CompleteBipartite(a, b) => a + b,
            Family::Hypercube(d) => 1 << d,
        }
    }
}

pub fn generate(family: &Family) -> Result<Graph, FamilyError> {
    family.validate()?;
    let n = family.vertex_count();
    let edges: Vec<(usize, usize)> = match family {
        Family::Path(n) => (1..*n).map(|i| (i - 1, i)).collect(),
        Family::Cycle(n) => (0..*n).map(|i| (i, (i + 1) % n)).collect(),
        Family::Star(n) => (1..*n).map(|i| (0, i)).collect(),
        Family::Caterpillar(leaves) => {
            let s = leaves.len();
            let mut edges: Vec<_> = (1..s).map(|i| (i - 1, i)).collect();
            let mut next = s;
            for (spine, &count) in leaves.iter().enumerate() {
                for _ in 0..count {
                    edges.push((spine, next));
                    next += 1;
                }
            }
            edges
        }
        Family::Fan(n) => {
            let mut edges: Vec<_> = (1..*n).map(|i| (0, i)).collect();
            edges.extend((2..*n).map(|i| (i - 1, i)));
            edges
        }
        Family::CompleteBipartite(a, b) => (0..*a)
            .flat_map(|u| (0..*b).map(move |v| (u, a + v)))
            .collect(),
        Family::Hypercube(d) => (0..n)
            .flat_map(|x| (0..*d).map(move |i| (x, x ^ (1 << i))))
            .filter(|&(x, y)| x < y)
            .collect(),
        Family::Complete(n) => (0..*n)
            .flat_map(|u| ((u + 1)..*n).map(move |v| (u, v)))
            .collect(),
    };
    Ok(Graph::new(n, &edges).expect("family constructions are simple graphs"))
}

/// What the literature says about the interval colorings of a family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExpectedSpectrum {
    /// Feasible exactly for `lo <= t <= hi`.
    Interval {
        lo: Color,
        hi: Color,
    },
    /// Only the maximum is known.
    ExactMax {
        w: Color,
    },
    NotColorable,
    Unknown,
}

pub fn expected_spectrum(family: &Family) -> ExpectedSpectrum {
    use ExpectedSpectrum::*;
    let bipartite = |a: usize, b: usize| Interval {
        lo: (a + b - gcd(a, b)) as Color,
        hi: (a + b - 1) as Color,
    };
    match *family {
        Family::CompleteBipartite(a, b) => bipartite(a, b),
        Family::Star(n) => bipartite(1, n - 1),
        Family::Hypercube(d) => Interval {
            lo: d,
            hi: d * (d + 1) / 2,
        },
        // paths are caterpillars
        Family::Path(n) => ExactMax {
            w: (n - 1) as Color,
        },
        Family::Caterpillar(_) => ExactMax {
            w: (family.vertex_count() - 1) as Color,
        },
        Family::Fan(2) => ExactMax { w: 1 },
        Family::Fan(3) => NotColorable,
        Family::Fan(n) => ExactMax {
            w: (n - 1) as Color,
        },
        // an odd cycle needs 3 colors but has Δ = 2
        Family::Cycle(n) if n % 2 == 1 => NotColorable,
        Family::Cycle(4) => bipartite(2, 2),
        Family::Cycle(_) | Family::Complete(_) => Unknown,
    }
}

/// Colors a tree by rooting it at vertex 0: the root's edges get
/// `1..=d(root)`, and below a vertex whose parent edge has color `p` the
/// child edges get `p+1, p+2, ...`. Every palette is then an interval and
/// the used colors form `1..=t`.
pub fn tree_interval_coloring(g: &Graph) -> Result<EdgeColoring, FamilyError> {
    let n = g.vertex_count();
    if g.edge_count() == 0 || g.edge_count() != n - 1 {
        return Err(FamilyError::NotATree);
    }
    let mut colors: Vec<Color> = vec![0; g.edge_count()];
    let mut visited = vec![false; n];
    let mut parent_color: Vec<Color> = vec![0; n];
    visited[0] = true;
    let mut queue = VecDeque::from([0usize]);
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        let mut next = parent_color[v] + 1;
        for &(w, e) in g.incident(v) {
            if visited[w] {
                continue;
            }
            visited[w] = true;
            reached += 1;
            colors[e] = next;
            parent_color[w] = next;
            next += 1;
            queue.push_back(w);
        }
    }
    if reached != n {
        return Err(FamilyError::NotATree);
    }
    let t = colors.iter().copied().max().unwrap_or(1);
    Ok(EdgeColoring::new(t, colors).expect("tree coloring stays within 1..=t"))
}

/// Random planar graph on `n` vertices with `m` edges: vertex pairs are
/// shuffled by a ChaCha8 stream seeded with `seed` and inserted in that
/// order whenever the result stays planar.
pub fn random_planar(n: usize, m: usize, seed: u64) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(invalid("random_planar", "needs n >= 2"));
    }
    let cap = if n == 2 { 1 } else { 3 * n - 6 };
    if m > cap {
        return Err(invalid("random_planar", "m exceeds the planar edge cap"));
    }
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pairs.shuffle(&mut rng);
    let mut edges = Vec::with_capacity(m);
    for pair in pairs {
        if edges.len() == m {
            break;
        }
        edges.push(pair);
        let candidate = Graph::new(n, &edges).expect("distinct pairs form a simple graph");
        if !is_planar(&candidate) {
            edges.pop();
        }
    }
    if edges.len() < m {
        return Err(FamilyError::Unreachable {
            target: m,
            achieved: edges.len(),
        });
    }
    Ok(Graph::new(n, &edges).expect("distinct pairs form a simple graph"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_interval;
    use crate::graph::{is_outerplanar, profile};

    #[test]
    fn sizes() {
        let q3 = generate(&Family::Hypercube(3)).unwrap();
        assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));
        let f5 = generate(&Family::Fan(5)).unwrap();
        assert_eq!((f5.vertex_count(), f5.edge_count()), (5, 7));
        let k23 = generate(&Family::CompleteBipartite(2, 3)).unwrap();
        assert_eq!((k23.vertex_count(), k23.edge_count()), (5, 6));
        let cat = generate(&Family::Caterpillar(vec![2, 0, 1])).unwrap();
        assert_eq!((cat.vertex_count(), cat.edge_count()), (6, 5));
    }

    #[test]
    fn invalid_parameters() {
        assert!(generate(&Family::Fan(1)).is_err());
        assert!(generate(&Family::Hypercube(0)).is_err());
        assert!(generate(&Family::CompleteBipartite(0, 3)).is_err());
        assert!(generate(&Family::Caterpillar(vec![])).is_err());
        assert!(Family::from_kind("wheel", &[5]).is_err());
        assert!(Family::from_kind("fan", &[5, 6]).is_err());
        assert_eq!(Family::from_kind("fan", &[6]).unwrap(), Family::Fan(6));
    }

    #[test]
    fn fans_are_outerplanar() {
        for n in 2..9 {
            assert!(is_outerplanar(&generate(&Family::Fan(n)).unwrap()), "F_{n}");
        }
    }

    #[test]
    fn hypercube_is_regular() {
        let q4 = generate(&Family::Hypercube(4)).unwrap();
        assert!((0..16).all(|v| q4.degree(v).unwrap() == 4));
        assert!(profile(&q4).is_bipartite);
    }

    #[test]
    fn expected_values() {
        assert_eq!(
            expected_spectrum(&Family::CompleteBipartite(2, 3)),
            ExpectedSpectrum::Interval { lo: 4, hi: 4 }
        );
        assert_eq!(
            expected_spectrum(&Family::Hypercube(3)),
            ExpectedSpectrum::Interval { lo: 3, hi: 6 }
        );
        assert_eq!(
            expected_spectrum(&Family::Cycle(5)),
            ExpectedSpectrum::NotColorable
        );
        assert_eq!(
            expected_spectrum(&Family::Fan(6)),
            ExpectedSpectrum::ExactMax { w: 5 }
        );
        assert_eq!(
            expected_spectrum(&Family::Complete(4)),
            ExpectedSpectrum::Unknown
        );
        assert_eq!(
            expected_spectrum(&Family::Star(4)),
            ExpectedSpectrum::Interval { lo: 3, hi: 3 }
        );
    }

    #[test]
    fn tree_colorings() {
        let p4 = generate(&Family::Path(4)).unwrap();
        let c = tree_interval_coloring(&p4).unwrap();
        assert_eq!((c.t(), c.colors()), (3, &[1, 2, 3][..]));

        let star = generate(&Family::Star(4)).unwrap();
        let c = tree_interval_coloring(&star).unwrap();
        assert_eq!((c.t(), c.colors()), (3, &[1, 2, 3][..]));

        let k2 = generate(&Family::Path(2)).unwrap();
        assert_eq!(tree_interval_coloring(&k2).unwrap().colors(), &[1]);

        for leaves in [vec![1, 3, 0, 2], vec![0, 4], vec![2, 2, 2]] {
            let g = generate(&Family::Caterpillar(leaves)).unwrap();
            let c = tree_interval_coloring(&g).unwrap();
            assert!(verify_interval(&g, &c).unwrap().interval_ok);
        }
    }

    #[test]
    fn non_trees_rejected() {
        let c4 = generate(&Family::Cycle(4)).unwrap();
        assert_eq!(tree_interval_coloring(&c4), Err(FamilyError::NotATree));
        // right edge count, but a triangle plus an isolated vertex
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(tree_interval_coloring(&g), Err(FamilyError::NotATree));
        let lone = Graph::new(1, &[]).unwrap();
        assert_eq!(tree_interval_coloring(&lone), Err(FamilyError::NotATree));
    }

    #[test]
    fn random_planar_examples() {
        for seed in 0..5 {
            let g = random_planar(8, 18, seed).unwrap();
            assert_eq!(g.edge_count(), 18);
            assert!(is_planar(&g));
        }
        let k4 = random_planar(4, 6, 7).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.max_degree(), 3);
        assert_eq!(random_planar(2, 1, 0).unwrap().edges(), &[(0, 1)]);
        assert!(random_planar(5, 10, 0).is_err());
        assert!(random_planar(1, 0, 0).is_err());
    }

    #[test]
    fn random_planar_is_deterministic() {
        assert_eq!(
            random_planar(9, 14, 42).unwrap(),
            random_planar(9, 14, 42).unwrap()
        );
    }
}
