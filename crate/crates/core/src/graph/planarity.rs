//! Left-right planarity test (Brandes' formulation of de Fraysseix and
//! Rosenstiehl's criterion). Only the yes/no answer is produced; no
//! embedding is built.

use super::Graph;

/// True iff `g` has a plane embedding.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n > 2 && m > 3 * n - 6 {
        return false;
    }
    LeftRight::new(g).run()
}

/// True iff `g` embeds with every vertex on the outer face, tested as
/// planarity of `g` plus one apex vertex adjacent to all of `g`.
pub fn is_outerplanar(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n >= 2 && g.edge_count() > 2 * n - 3 {
        return false;
    }
    is_planar(&g.with_apex())
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn single(e: usize) -> Self {
        Interval {
            low: Some(e),
            high: Some(e),
        }
    }

    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LeftRight<'g> {
    g: &'g Graph,
    // orientation of each undirected edge, fixed by the first DFS
    tail: Vec<usize>,
    head: Vec<usize>,
    oriented: Vec<bool>,
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    ordered_out: Vec<Vec<usize>>,
    refs: Vec<Option<usize>>,
    lowpt_edge: Vec<Option<usize>>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
    roots: Vec<usize>,
}

impl<'g> LeftRight<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.vertex_count();
        let m = g.edge_count();
        LeftRight {
            g,
            tail: vec![0; m],
            head: vec![0; m],
            oriented: vec![false; m],
            height: vec![None; n],
            parent_edge: vec![None; n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting_depth: vec![0; m],
            ordered_out: vec![Vec::new(); n],
            refs: vec![None; m],
            lowpt_edge: vec![None; m],
            stack_bottom: vec![0; m],
            stack: Vec::new(),
            roots: Vec::new(),
        }
    }

    fn run(mut self) -> bool {
        for v in 0..self.g.vertex_count() {
            if self.height[v].is_none() {
                self.height[v] = Some(0);
                self.roots.push(v);
                self.orient(v);
            }
        }
        for e in 0..self.g.edge_count() {
            self.ordered_out[self.tail[e]].push(e);
        }
        for list in &mut self.ordered_out {
            list.sort_by_key(|&e| self.nesting_depth[e]);
        }
        let roots = std::mem::take(&mut self.roots);
        roots.into_iter().all(|r| self.test(r))
    }

    fn h(&self, v: usize) -> usize {
        self.height[v].expect("vertex visited by orientation pass")
    }

    fn orient(&mut self, v: usize) {
        let parent = self.parent_edge[v];
        let g = self.g;
        for &(w, e) in g.incident(v) {
            if self.oriented[e] {
                continue;
            }
            self.oriented[e] = true;
            self.tail[e] = v;
            self.head[e] = w;
            let hv = self.h(v);
            self.lowpt[e] = hv;
            self.lowpt2[e] = hv;
            match self.height[w] {
                None => {
                    self.parent_edge[w] = Some(e);
                    self.height[w] = Some(hv + 1);
                    self.orient(w);
                }
                Some(hw) => self.lowpt[e] = hw,
            }
            self.nesting_depth[e] = 2 * self.lowpt[e];
            if self.lowpt2[e] < hv {
                // chordal
                self.nesting_depth[e] += 1;
            }
            if let Some(pe) = parent {
                if self.lowpt[e] < self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt[pe].min(self.lowpt2[e]);
                    self.lowpt[pe] = self.lowpt[e];
                } else if self.lowpt[e] > self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt[e]);
                } else {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt2[e]);
                }
            }
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let parent = self.parent_edge[v];
        let out = std::mem::take(&mut self.ordered_out[v]);
        for (pos, &ei) in out.iter().enumerate() {
            let w = self.head[ei];
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = Some(ei);
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval::single(ei),
                });
            }
            if self.lowpt[ei] < self.h(v) {
                if pos == 0 {
                    if let Some(pe) = parent {
                        self.lowpt_edge[pe] = self.lowpt_edge[ei];
                    }
                } else if let Some(pe) = parent {
                    if !self.add_constraints(ei, pe) {
                        return false;
                    }
                }
            }
        }
        self.ordered_out[v] = out;
        if let Some(pe) = parent {
            self.remove_back_edges(pe);
        }
        true
    }

    fn conflicting(&self, interval: &Interval, edge: usize) -> bool {
        match interval.high {
            Some(h) if !interval.is_empty() => self.lowpt[h] > self.lowpt[edge],
            _ => false,
        }
    }

    fn set_ref(&mut self, at: Option<usize>, to: Option<usize>) {
        if let Some(a) = at {
            self.refs[a] = to;
        }
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        // merge return edges of ei into p.right
        loop {
            let mut q = self
                .stack
                .pop()
                .expect("return edges of ei are on the stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_low = q.right.low.expect("non-empty interval has a low edge");
            if self.lowpt[q_low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.set_ref(p.right.low, q.right.high);
                }
                p.right.low = q.right.low;
            } else {
                self.refs[q_low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        // merge conflicting return edges of earlier siblings into p.left
        while let Some(top) = self.stack.last().copied() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            self.set_ref(p.right.low, q.right.high);
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.set_ref(p.left.low, q.left.high);
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        let low = |i: &Interval| self.lowpt[i.low.expect("non-empty interval")];
        if p.left.is_empty() {
            low(&p.right)
        } else if p.right.is_empty() {
            low(&p.left)
        } else {
            low(&p.left).min(low(&p.right))
        }
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.tail[e];
        let hu = self.h(u);
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high.filter(|&h| self.head[h] == u) {
                p.left.high = self.refs[h];
            }
            if p.left.high.is_none() && p.left.low.is_some() {
                self.set_ref(p.left.low, p.right.low);
                p.left.low = None;
            }
            while let Some(h) = p.right.high.filter(|&h| self.head[h] == u) {
                p.right.high = self.refs[h];
            }
            if p.right.high.is_none() && p.right.low.is_some() {
                self.set_ref(p.right.low, p.left.low);
                p.right.low = None;
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < hu {
            if let Some(top) = self.stack.last() {
                let hl = top.left.high;
                let hr = top.right.high;
                self.refs[e] = match (hl, hr) {
                    (Some(l), None) => Some(l),
                    (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                    _ => hr,
                };
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        Graph::new(n, &edges).unwrap()
    }

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a)
            .flat_map(|u| (0..b).map(move |v| (u, a + v)))
            .collect();
        Graph::new(a + b, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn kuratowski_graphs() {
        assert!(is_planar(&complete(4)));
        assert!(!is_planar(&complete(5)));
        assert!(!is_planar(&complete_bipartite(3, 3)));
        assert!(is_planar(&complete_bipartite(2, 7)));
    }

    #[test]
    fn k33_subdivision_and_petersen() {
        // K_{3,3} with edge 0-3 subdivided by vertex 6: still non-planar,
        // and sparse enough to pass the edge-count filter.
        let mut edges: Vec<_> = (0..3)
            .flat_map(|u| (3..6).map(move |v| (u, v)))
            .filter(|&e| e != (0, 3))
            .collect();
        edges.extend([(0, 6), (6, 3)]);
        assert!(!is_planar(&Graph::new(7, &edges).unwrap()));

        let petersen = Graph::new(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        assert!(!is_planar(&petersen));
    }

    #[test]
    fn outerplanar_examples() {
        assert!(is_outerplanar(&cycle(5)));
        assert!(!is_outerplanar(&complete(4)));
        assert!(!is_outerplanar(&complete_bipartite(2, 3)));
        assert!(is_outerplanar(&complete_bipartite(1, 6)));
        assert!(is_outerplanar(&Graph::new(1, &[]).unwrap()));
    }

    #[test]
    fn disconnected_inputs() {
        let mut edges: Vec<_> = complete(5).edges().to_vec();
        edges.push((5, 6));
        assert!(!is_planar(&Graph::new(7, &edges).unwrap()));
        let two_triangles =
            Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(is_planar(&two_triangles));
        assert!(is_outerplanar(&two_triangles));
    }
}
