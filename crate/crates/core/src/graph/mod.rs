//! Simple undirected graphs with dense vertex and edge indices.
//!
//! A [`Graph`] is immutable once built. Vertices are `0..n`, edges are
//! indexed `0..m` in insertion order, and every vertex keeps a list of
//! `(neighbor, edge index)` pairs so that colorings can be addressed by edge
//! index everywhere in the crate.

mod io;
mod planarity;
mod profile;

pub use io::{parse_graph, parse_graph6_lines, GraphFormat};
pub use planarity::{is_outerplanar, is_planar};
pub use profile::{profile, Diameter, GraphClassProfile};

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

/// Errors raised while building or reading a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0} (graphs must be simple)")]
    Loop(usize),
    #[error("duplicate edge {0}-{1} (graphs must be simple)")]
    MultiEdge(usize, usize),
    #[error("malformed graph text: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a simple graph on `n` vertices. Loops and repeated edges are
    /// rejected rather than silently dropped.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut adjacency = vec![Vec::new(); n];
        let mut stored = Vec::with_capacity(edges.len());
        for (idx, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::MultiEdge(u, v));
            }
            adjacency[u].push((v, idx));
            adjacency[v].push((u, idx));
            stored.push((u, v));
        }
        Ok(Graph {
            n,
            edges: stored,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// `(neighbor, edge index)` pairs incident to `v`.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.adjacency
            .get(v)
            .map(Vec::len)
            .ok_or(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].iter().any(|&(w, _)| w == v)
    }

    /// Vertices with at least one incident edge.
    pub fn non_isolated_count(&self) -> usize {
        self.adjacency.iter().filter(|a| !a.is_empty()).count()
    }

    /// Same graph plus one extra vertex adjacent to every original vertex.
    pub fn with_apex(&self) -> Graph {
        let apex = self.n;
        let mut edges = self.edges.clone();
        edges.extend((0..self.n).map(|v| (v, apex)));
        Graph::new(self.n + 1, &edges).expect("apex extension of a simple graph is simple")
    }

    /// Edge-list text: `"n; u-v u-v ..."` in edge index order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{};", self.n);
        for &(u, v) in &self.edges {
            out.push_str(&format!(" {u}-{v}"));
        }
        out
    }

    pub fn to_graph6(&self) -> String {
        io::encode_graph6(self)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn degrees_of_small_graphs() {
        let c4 = cycle(4);
        assert!((0..4).all(|v| c4.degree(v).unwrap() == 2));

        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.degree(0).unwrap(), 3);

        let k5_edges: Vec<_> = (0..5)
            .flat_map(|u| ((u + 1)..5).map(move |v| (u, v)))
            .collect();
        let k5 = Graph::new(5, &k5_edges).unwrap();
        assert!((0..5).all(|v| k5.degree(v).unwrap() == 4));
    }

    #[test]
    fn degree_out_of_range() {
        assert_eq!(
            cycle(4).degree(4),
            Err(GraphError::VertexOutOfRange { vertex: 4, n: 4 })
        );
    }

    #[test]
    fn rejects_non_simple_input() {
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(GraphError::MultiEdge(1, 0))
        );
        assert_eq!(Graph::new(0, &[]), Err(GraphError::NoVertices));
    }

    #[test]
    fn adjacency_matches_edge_list() {
        let g = cycle(5);
        let total: usize = (0..5).map(|v| g.incident(v).len()).sum();
        assert_eq!(total, 2 * g.edge_count());
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            assert!(g.incident(u).contains(&(v, e)));
            assert!(g.incident(v).contains(&(u, e)));
        }
    }

    #[test]
    fn apex_adds_universal_vertex() {
        let g = cycle(4).with_apex();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 8);
        assert_eq!(g.degree(4).unwrap(), 4);
    }
}
