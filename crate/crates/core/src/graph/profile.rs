use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use super::{is_outerplanar, is_planar, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    /// The graph is disconnected.
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u64(*d as u64),
            Diameter::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Class predicates and invariants used by the bounds catalog.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphClassProfile {
    pub is_planar: bool,
    pub is_outerplanar: bool,
    pub is_bipartite: bool,
    pub is_triangle_free: bool,
    pub max_degree: usize,
    pub diameter: Diameter,
    pub is_connected: bool,
}

pub fn profile(g: &Graph) -> GraphClassProfile {
    let is_planar = is_planar(g);
    let is_outerplanar = is_planar && is_outerplanar(g);
    let n = g.vertex_count();
    let m = g.edge_count();
    if is_planar {
        debug_assert!(n < 3 || m <= 3 * n - 6, "planar graph exceeds 3n-6 edges");
        debug_assert!(n < 2 || m <= 3 * n - 5);
    }
    if is_outerplanar {
        debug_assert!(
            n < 2 || m <= 2 * n - 3,
            "outerplanar graph exceeds 2n-3 edges"
        );
    }
    let diameter = diameter(g);
    GraphClassProfile {
        is_planar,
        is_outerplanar,
        is_bipartite: is_bipartite(g),
        is_triangle_free: is_triangle_free(g),
        max_degree: g.max_degree(),
        diameter,
        is_connected: diameter != Diameter::Infinite,
    }
}

fn bfs_distances(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for w in g.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

fn diameter(g: &Graph) -> Diameter {
    let mut best = 0;
    for s in 0..g.vertex_count() {
        for d in bfs_distances(g, s) {
            match d {
                Some(d) => best = best.max(d),
                None => return Diameter::Infinite,
            }
        }
    }
    Diameter::Finite(best)
}

fn is_bipartite(g: &Graph) -> bool {
    let mut side: Vec<Option<bool>> = vec![None; g.vertex_count()];
    for s in 0..g.vertex_count() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let sv = side[v].unwrap();
            for w in g.neighbors(v) {
                match side[w] {
                    None => {
                        side[w] = Some(!sv);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == sv => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// No edge `uv` whose endpoints share a neighbor.
fn is_triangle_free(g: &Graph) -> bool {
    let mut mark = vec![false; g.vertex_count()];
    g.edges().iter().all(|&(u, v)| {
        for w in g.neighbors(u) {
            mark[w] = true;
        }
        let shared = g.neighbors(v).any(|w| mark[w]);
        for w in g.neighbors(u) {
            mark[w] = false;
        }
        !shared
    })
}
