//! Simple undirected graphs on at most 16 vertices.
//!
//! Adjacency is stored as one `u16` bitmask per vertex, which makes [`Graph`]
//! `Copy` and keeps every structural query a handful of bit operations.

mod canon;
mod enumerate;
mod io;

use std::collections::VecDeque;
use std::fmt;

pub use canon::{canonical_form, CanonicalKey};
pub use enumerate::{enumerate_graphs, enumerate_graphs_with};
pub use io::{format_edge_list, parse_edge_list, parse_graph, parse_graph6, to_graph6, GraphFormat};

use crate::error::{Error, ParseError, Result};
use crate::partition::Partition;

pub const MAX_VERTICES: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [u16; MAX_VERTICES],
}

/// The graph families used for enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphClass {
    All,
    Forests,
    Trees,
}

impl GraphClass {
    pub fn contains(self, g: &Graph) -> bool {
        match self {
            GraphClass::All => true,
            GraphClass::Forests => g.is_forest(),
            GraphClass::Trees => g.is_tree(),
        }
    }
}

/// Special graph families indexed by a partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialKind {
    PathFamily,
    StarFamily,
    CompleteMultipartite,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(ParseError::TooManyVertices { n, max: MAX_VERTICES }.into());
        }
        Ok(Graph { n: n as u8, adj: [0; MAX_VERTICES] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(ParseError::VertexOutOfRange { vertex: w, n }.into());
                }
            }
            if u == v {
                return Err(ParseError::SelfLoop(u).into());
            }
            if g.has_edge(u, v) {
                return Err(ParseError::DuplicateEdge(u.min(v), u.max(v)).into());
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Bitmask of all vertices.
    pub fn vertex_mask(&self) -> u16 {
        ((1u32 << self.n) - 1) as u16
    }

    pub fn neighbors_mask(&self, v: usize) -> u16 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u] & (1 << v) != 0
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, on: bool) {
        if on {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
        } else {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    pub fn with_edge(mut self, u: usize, v: usize) -> Graph {
        self.set_edge(u, v, true);
        self
    }

    pub fn without_edge(mut self, u: usize, v: usize) -> Graph {
        self.set_edge(u, v, false);
        self
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n()].iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as normalized `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in bits(self.adj[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    /// Vertex masks of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u16> {
        self.components_within(self.vertex_mask())
    }

    /// Components of the subgraph induced on `mask`.
    pub fn components_within(&self, mask: u16) -> Vec<u16> {
        let mut rest = mask;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & mask & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            rest &= !comp;
            out.push(comp);
        }
        out
    }

    /// Component sizes as a partition of `n`.
    pub fn part(&self) -> Partition {
        Partition::new(self.components().into_iter().map(|c| c.count_ones() as usize))
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.n()
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edge_count() + 1 == self.n() && self.is_connected()
    }

    /// Whether the subgraph induced on `mask` has no edges.
    pub fn is_independent(&self, mask: u16) -> bool {
        bits(mask).all(|v| self.adj[v] & mask == 0)
    }

    /// Length of a shortest cycle, or `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        self.shortest_cycle().map(|c| c.len())
    }

    /// A shortest cycle as a vertex sequence `c[0] - c[1] - ... - c[g-1] - c[0]`.
    ///
    /// Every vertex is tried as a BFS root in increasing order and every
    /// non-tree edge in lexicographic order; the first strictly shortest
    /// cycle wins. `c[0]` is the root and the arms are oriented so that
    /// `c[1] < c[g-1]`.
    pub fn shortest_cycle(&self) -> Option<Vec<usize>> {
        let n = self.n();
        let mut best: Option<Vec<usize>> = None;
        for root in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            for (u, v) in self.edges() {
                if dist[u] == usize::MAX || parent[u] == v || parent[v] == u {
                    continue;
                }
                let len = dist[u] + dist[v] + 1;
                if best.as_ref().is_some_and(|b| len >= b.len()) {
                    continue;
                }
                let pu = path_to_root(&parent, u);
                let pv = path_to_root(&parent, v);
                if pu.iter().filter(|x| pv.contains(x)).count() == 1 {
                    best = Some(close_cycle(pu, pv));
                }
            }
        }
        best
    }

    /// The subgraph induced on `mask`, relabeled to `0..popcount` in vertex order.
    pub fn induced(&self, mask: u16) -> Graph {
        let verts: Vec<usize> = bits(mask).collect();
        let mut g = Graph { n: verts.len() as u8, adj: [0; MAX_VERTICES] };
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }

    /// Applies `perm`, sending vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph { n: self.n, adj: [0; MAX_VERTICES] };
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v], true);
        }
        g
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n() + other.n();
        let mut g = Graph::empty(n)?;
        g.adj[..self.n()].copy_from_slice(&self.adj[..self.n()]);
        for v in 0..other.n() {
            g.adj[self.n() + v] = other.adj[v] << self.n();
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let mut g = *self;
        let all = self.vertex_mask();
        for v in 0..self.n() {
            g.adj[v] = all & !self.adj[v] & !(1 << v);
        }
        g
    }

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Star on `n` vertices centred at vertex 0.
    pub fn star(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((0, n - 1));
        }
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(n, &edges)
    }

    /// `P_lambda`, `ST_lambda` or `K_lambda`. Components (or parts) occupy
    /// consecutive vertex blocks in the order of `lambda`'s parts.
    pub fn special(kind: SpecialKind, lambda: &Partition) -> Result<Graph> {
        let n = lambda.weight();
        let mut g = Graph::empty(n)?;
        let mut offset = 0;
        let mut blocks = Vec::new();
        for size in lambda.parts() {
            blocks.push(offset..offset + size);
            offset += size;
        }
        match kind {
            SpecialKind::PathFamily => {
                for b in &blocks {
                    for v in b.start + 1..b.end {
                        g.set_edge(v - 1, v, true);
                    }
                }
            }
            SpecialKind::StarFamily => {
                for b in &blocks {
                    for v in b.start + 1..b.end {
                        g.set_edge(b.start, v, true);
                    }
                }
            }
            SpecialKind::CompleteMultipartite => {
                for (i, a) in blocks.iter().enumerate() {
                    for b in &blocks[i + 1..] {
                        for u in a.clone() {
                            for v in b.clone() {
                                g.set_edge(u, v, true);
                            }
                        }
                    }
                }
            }
        }
        Ok(g)
    }

    pub fn key(&self) -> CanonicalKey {
        canonical_form(self).0
    }

    /// The canonical representative of this graph's isomorphism class.
    pub fn canonical(&self) -> Graph {
        let (_, perm) = canonical_form(self);
        self.relabel(&perm)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.key() == other.key()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        } else {
            Ok(())
        }
    }
}

fn path_to_root(parent: &[usize], mut v: usize) -> Vec<usize> {
    let mut out = vec![v];
    while parent[v] != usize::MAX {
        v = parent[v];
        out.push(v);
    }
    out
}

// pu = u..root and pv = v..root share only the root.
fn close_cycle(pu: Vec<usize>, pv: Vec<usize>) -> Vec<usize> {
    let mut cycle: Vec<usize> = pu.into_iter().rev().collect();
    cycle.extend(pv);
    cycle.pop();
    if cycle[1] > cycle[cycle.len() - 1] {
        cycle[1..].reverse();
    }
    cycle
}

/// Iterates the set bits of a mask in increasing order.
pub fn bits(mut mask: u16) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}
