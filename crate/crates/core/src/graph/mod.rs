//! Simple undirected graphs on the dense vertex set `0..n` and the
//! combinatorial routines built on them.

use std::fmt;

use thiserror::Error;

mod cliques;
mod color;
mod cycles;
mod ears;
pub mod families;
mod iso;
mod line;
mod matching;

pub use cliques::{enumerate_cliques, enumerate_stable_sets, maximum_cliques, omega, STABLE_SET_LIMIT};
pub use color::{chromatic_number_exact, is_4_critical, is_k_colorable, Coloring, Criticality, EXACT_COLORING_LIMIT};
pub use cycles::{
    enumerate_simple_cycles, for_each_simple_cycle, odd_circuit_vertex_sets, shortest_odd_cycle, Cycle,
    DEFAULT_CYCLE_CAP, ODD_SET_DP_LIMIT,
};
pub use ears::{is_two_connected, odd_ear_decomposition, EarDecomposition};
pub use iso::{canonical_form, contains_induced, find_isomorphism, is_isomorphic};
pub use line::{line_graph, root_graph, RootGraph};
pub use matching::{is_factor_critical, max_matching, maximum_matchings, Matching};

/// Errors raised by graph construction and by the exhaustive routines when an
/// input exceeds their size guard.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{op} is limited to {limit} vertices, got {n}")]
    TooLarge { op: &'static str, n: usize, limit: usize },
    #[error("cycle enumeration exceeded the cap of {cap} cycles")]
    CycleCapExceeded { cap: usize },
    #[error("the neighborhood of vertex {vertex} is not stable ({a} and {b} are adjacent)")]
    NeighborhoodNotStable { vertex: usize, a: usize, b: usize },
}

/// A simple undirected graph on vertices `0..n`.
///
/// Values are immutable once built. Both an adjacency matrix and sorted
/// neighbor lists are kept so that lookups and iteration are cheap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    matrix: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { n, matrix: vec![false; n * n], neighbors: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.matrix[u * self.n + v]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for &v in &self.neighbors[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Neighborhood of `v` as a bit mask. Only valid for graphs with at most
    /// 64 vertices.
    #[inline]
    pub(crate) fn mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.neighbors[v].iter().fold(0u64, |m, &w| m | (1u64 << w))
    }

    pub(crate) fn masks(&self) -> Vec<u64> {
        (0..self.n).map(|v| self.mask(v)).collect()
    }

    /// The complement: same vertex set, edges are exactly the non-edges.
    pub fn complement(&self) -> Graph {
        let mut b = GraphBuilder::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    b.insert(u, v);
                }
            }
        }
        b.build()
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut b = GraphBuilder::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.insert(i, j);
                }
            }
        }
        b.build()
    }

    /// The graph with vertex `v` deleted; later vertices shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut b = GraphBuilder::new(self.n + other.n);
        for (u, v) in self.edges() {
            b.insert(u, v);
        }
        for (u, v) in other.edges() {
            b.insert(u + self.n, v + self.n);
        }
        b.build()
    }

    /// Checks that `set` is pairwise adjacent.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Checks that `set` is pairwise non-adjacent.
    pub fn is_stable(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.neighbors[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A proper 2-coloring (colors 0 and 1) if the graph is bipartite.
    ///
    /// Each component gets color 0 on its smallest vertex.
    pub fn two_coloring(&self) -> Option<Vec<usize>> {
        let mut color = vec![usize::MAX; self.n];
        for s in 0..self.n {
            if color[s] != usize::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.neighbors[u] {
                    if color[w] == usize::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Identifies `v` and all of its neighbors into one new vertex adjacent to
    /// every former neighbor of the merged set. Loops and parallel edges that
    /// would arise are dropped.
    ///
    /// The untouched vertices keep their relative order and are numbered
    /// first; the merged vertex is the last one.
    pub fn contract_stable_neighborhood(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let nb = &self.neighbors[v];
        for (i, &a) in nb.iter().enumerate() {
            if let Some(&b) = nb[i + 1..].iter().find(|&&b| self.has_edge(a, b)) {
                return Err(GraphError::NeighborhoodNotStable { vertex: v, a, b });
            }
        }
        let mut merged = vec![false; self.n];
        merged[v] = true;
        for &w in nb {
            merged[w] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&u| !merged[u]).collect();
        let m = keep.len();
        let mut index = vec![usize::MAX; self.n];
        for (i, &u) in keep.iter().enumerate() {
            index[u] = i;
        }
        let mut b = GraphBuilder::new(m + 1);
        for (u, w) in self.edges() {
            match (merged[u], merged[w]) {
                (false, false) => b.insert(index[u], index[w]),
                (true, false) => b.insert(index[w], m),
                (false, true) => b.insert(index[u], m),
                (true, true) => {}
            }
        }
        Ok(b.build())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Non-redundant adjacency list rendering: `0: [2, 3], 1: [3]`. Vertices
/// without a larger neighbor are omitted.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for u in 0..self.n {
            let up: Vec<String> = self.neighbors[u].iter().filter(|&&v| v > u).map(|v| v.to_string()).collect();
            if up.is_empty() {
                continue;
            }
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "{}: [{}]", u, up.join(", "))?;
        }
        Ok(())
    }
}

/// Incremental construction of a [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    matrix: Vec<bool>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder { n, matrix: vec![false; n * n] }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.insert(u, v);
        Ok(())
    }

    #[inline]
    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        self.matrix[u * self.n + v] = true;
        self.matrix[v * self.n + u] = true;
    }

    pub fn build(self) -> Graph {
        let n = self.n;
        let neighbors = (0..n).map(|u| (0..n).filter(|&v| self.matrix[u * n + v]).collect()).collect();
        Graph { n, matrix: self.matrix, neighbors }
    }
}
