use std::collections::VecDeque;
use std::ops::ControlFlow;

use super::{Graph, GraphError};

/// Default cap on the number of cycles [`enumerate_simple_cycles`] may list.
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

/// Largest graph accepted by [`odd_circuit_vertex_sets`].
pub const ODD_SET_DP_LIMIT: usize = 24;

/// A simple circuit given by its cyclic vertex order.
///
/// Stored normalized: it starts at its smallest vertex and the second vertex
/// is smaller than the last, so every circuit has exactly one
/// representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Normalizes a cyclic vertex sequence. Requires at least 3 vertices.
    pub fn new(mut vertices: Vec<usize>) -> Self {
        assert!(vertices.len() >= 3, "a circuit has at least 3 vertices");
        let start = (0..vertices.len()).min_by_key(|&i| vertices[i]).unwrap();
        vertices.rotate_left(start);
        if vertices[1] > vertices[vertices.len() - 1] {
            vertices[1..].reverse();
        }
        Cycle { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of edges, which equals the number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % k]);
            (a.min(b), a.max(b))
        })
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Checks that the vertices are distinct and consecutive ones adjacent.
    pub fn is_circuit_of(&self, g: &Graph) -> bool {
        let mut sorted = self.vertices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == self.len() && self.edges().all(|(a, b)| g.has_edge(a, b))
    }
}

/// Visits every simple cycle of length at most `max_len` exactly once, until
/// `visit` breaks.
///
/// Each cycle is found from its smallest vertex `s` by extending paths
/// through vertices larger than `s`; a path closes when its last vertex is
/// adjacent to `s`, and only the orientation whose second vertex is smaller
/// than its last is reported. Returns `true` if the visitor stopped early.
pub fn for_each_simple_cycle<F>(g: &Graph, max_len: Option<usize>, mut visit: F) -> bool
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = g.order();
    let limit = max_len.unwrap_or(n).min(n);
    if limit < 3 {
        return false;
    }
    let mut on_path = vec![false; n];
    for s in 0..n {
        let mut path = vec![s];
        on_path[s] = true;
        let stopped = walk(g, s, limit, &mut path, &mut on_path, &mut visit);
        on_path[s] = false;
        if stopped {
            return true;
        }
    }
    false
}

fn walk<F>(g: &Graph, s: usize, limit: usize, path: &mut Vec<usize>, on_path: &mut [bool], visit: &mut F) -> bool
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w == s && path.len() >= 3 && path[1] < last && visit(path).is_break() {
            return true;
        }
        if w <= s || on_path[w] || path.len() == limit {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        let stopped = walk(g, s, limit, path, on_path, visit);
        on_path[w] = false;
        path.pop();
        if stopped {
            return true;
        }
    }
    false
}

/// All simple cycles of length at most `max_len` (no bound when `None`).
///
/// Fails once more than `cap` cycles have been found rather than returning a
/// truncated list.
pub fn enumerate_simple_cycles(g: &Graph, max_len: Option<usize>, cap: usize) -> Result<Vec<Cycle>, GraphError> {
    let mut out = Vec::new();
    let mut over = false;
    for_each_simple_cycle(g, max_len, |c| {
        if out.len() == cap {
            over = true;
            return ControlFlow::Break(());
        }
        out.push(Cycle { vertices: c.to_vec() });
        ControlFlow::Continue(())
    });
    if over {
        return Err(GraphError::CycleCapExceeded { cap });
    }
    Ok(out)
}

/// A shortest odd circuit, or `None` iff `g` is bipartite.
///
/// Runs a breadth-first search from each `(s, even)` state of the bipartite
/// double cover; reaching `(s, odd)` closes an odd walk through `s`. The
/// shortest such walk over all `s` is a simple circuit.
pub fn shortest_odd_cycle(g: &Graph) -> Option<Cycle> {
    let n = g.order();
    let mut best: Option<Vec<usize>> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; 2 * n];
        let mut parent = vec![usize::MAX; 2 * n];
        let start = 2 * s;
        let goal = 2 * s + 1;
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(state) = queue.pop_front() {
            if state == goal {
                break;
            }
            if best.as_ref().is_some_and(|b| dist[state] + 1 >= b.len()) {
                break;
            }
            let (v, parity) = (state / 2, state % 2);
            for &w in g.neighbors(v) {
                let next = 2 * w + (1 - parity);
                if dist[next] == usize::MAX {
                    dist[next] = dist[state] + 1;
                    parent[next] = state;
                    queue.push_back(next);
                }
            }
        }
        if dist[goal] == usize::MAX || best.as_ref().is_some_and(|b| dist[goal] >= b.len()) {
            continue;
        }
        let mut walk = Vec::with_capacity(dist[goal]);
        let mut state = goal;
        while state != start {
            state = parent[state];
            walk.push(state / 2);
        }
        best = Some(walk);
    }
    best.map(|w| {
        let c = Cycle::new(w);
        debug_assert!(c.is_circuit_of(g));
        c
    })
}

/// Vertex sets (sorted) of all odd circuits of `g`, each set once, ordered by
/// size and then lexicographically.
///
/// A set qualifies when the subgraph it induces has a Hamiltonian circuit.
/// Found by a subset dynamic program per smallest vertex `s`: `ends[mask]`
/// holds the vertices at which a path from `s` through exactly `mask` can
/// stop.
pub fn odd_circuit_vertex_sets(g: &Graph) -> Result<Vec<Vec<usize>>, GraphError> {
    let n = g.order();
    if n > ODD_SET_DP_LIMIT {
        return Err(GraphError::TooLarge { op: "odd circuit vertex sets", n, limit: ODD_SET_DP_LIMIT });
    }
    let masks = g.masks();
    let mut out = Vec::new();
    for s in 0..n {
        // Bit i of a local mask stands for vertex s + 1 + i.
        let width = n - s - 1;
        if width < 2 {
            break;
        }
        let local = |m: u64| -> u32 { (m >> (s + 1)) as u32 };
        let adj: Vec<u32> = (s + 1..n).map(|v| local(masks[v])).collect();
        let start = local(masks[s]);
        let mut ends = vec![0u32; 1 << width];
        for i in 0..width {
            if start >> i & 1 == 1 {
                ends[1 << i] |= 1 << i;
            }
        }
        for mask in 1u32..(1 << width) {
            let e = ends[mask as usize];
            if e == 0 {
                continue;
            }
            let size = mask.count_ones();
            if size >= 2 && size % 2 == 0 && e & start != 0 {
                let mut set = vec![s];
                set.extend((0..width).filter(|&i| mask >> i & 1 == 1).map(|i| s + 1 + i));
                out.push(set);
            }
            let mut rest = e;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let mut step = adj[v] & !mask;
                while step != 0 {
                    let w = step.trailing_zeros();
                    step &= step - 1;
                    ends[(mask | 1 << w) as usize] |= 1 << w;
                }
            }
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn count(g: &Graph) -> usize {
        enumerate_simple_cycles(g, None, DEFAULT_CYCLE_CAP).unwrap().len()
    }

    #[test]
    fn small_cycle_counts() {
        assert_eq!(count(&complete(4)), 7);
        assert_eq!(count(&cycle(5)), 1);
        assert_eq!(count(&path(6)), 0);
        assert_eq!(count(&complete_bipartite(1, 5)), 0);
    }

    #[test]
    fn complete_graph_counts_match_closed_form() {
        for n in 3..=6 {
            let mut expected = 0u64;
            for k in 3..=n as u64 {
                let choose = (0..k).fold(1u64, |acc, i| acc * (n as u64 - i) / (i + 1));
                let arrangements = (1..k).product::<u64>() / 2;
                expected += choose * arrangements;
            }
            assert_eq!(count(&complete(n)) as u64, expected, "K{n}");
        }
    }

    #[test]
    fn length_bound_and_cap() {
        let k5 = complete(5);
        let triangles = enumerate_simple_cycles(&k5, Some(3), DEFAULT_CYCLE_CAP).unwrap();
        assert_eq!(triangles.len(), 10);
        assert!(triangles.iter().all(|c| c.len() == 3));
        assert_eq!(enumerate_simple_cycles(&k5, None, 5), Err(GraphError::CycleCapExceeded { cap: 5 }));
    }

    #[test]
    fn shortest_odd_cycles() {
        assert_eq!(shortest_odd_cycle(&cycle(5)).unwrap().len(), 5);
        assert_eq!(shortest_odd_cycle(&wheel(5)).unwrap().len(), 3);
        assert!(shortest_odd_cycle(&cycle(8)).is_none());
        assert!(shortest_odd_cycle(&complete_bipartite(3, 4)).is_none());
        let g = cycle(7).disjoint_union(&cycle(9));
        let c = shortest_odd_cycle(&g).unwrap();
        assert_eq!(c.vertices(), &[0, 1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn cycle_normalization() {
        let c = Cycle::new(vec![3, 1, 4, 2]);
        assert_eq!(c.vertices(), &[1, 3, 2, 4]);
        assert_eq!(Cycle::new(vec![1, 4, 2, 3]), c);
    }

    #[test]
    fn odd_sets_of_c5_with_chord() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let sets = odd_circuit_vertex_sets(&g).unwrap();
        assert_eq!(sets, vec![vec![0, 1, 2], vec![0, 1, 2, 3, 4]]);
    }
}
