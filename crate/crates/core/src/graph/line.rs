use super::{Graph, GraphBuilder};

/// The line graph of `h` and, for each of its vertices, the edge of `h` it
/// stands for. Edges of `h` are numbered in lexicographic order.
pub fn line_graph(h: &Graph) -> (Graph, Vec<(usize, usize)>) {
    let edges = h.edges();
    let mut b = GraphBuilder::new(edges.len());
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, c) = edges[i];
            let (x, y) = edges[j];
            if a == x || a == y || c == x || c == y {
                b.insert(i, j);
            }
        }
    }
    (b.build(), edges)
}

/// A simple graph whose line graph is the input, with the correspondence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootGraph {
    pub root: Graph,
    /// `edge_of[v]` is the root edge `(a, b)`, `a < b`, represented by input
    /// vertex `v`.
    pub edge_of: Vec<(usize, usize)>,
}

impl RootGraph {
    /// Checks that `edge_of` is a bijection onto the root's edges and that
    /// adjacency in `g` is exactly edge incidence in the root.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.edge_of.len() != g.order() || self.root.size() != g.order() {
            return false;
        }
        let mut sorted = self.edge_of.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != g.order() || !sorted.iter().all(|&(a, b)| a < b && self.root.has_edge(a, b)) {
            return false;
        }
        (0..g.order()).all(|u| {
            (u + 1..g.order()).all(|v| {
                let (a, b) = self.edge_of[u];
                let (x, y) = self.edge_of[v];
                g.has_edge(u, v) == (a == x || a == y || b == x || b == y)
            })
        })
    }
}

/// Recognizes line graphs: returns a root graph and correspondence when `g`
/// is the line graph of a simple graph.
///
/// Searches for a Krausz partition, i.e. a partition of the edges of `g` into
/// cliques with every vertex in at most two of them. Each clique becomes a
/// root vertex and each vertex of `g` the root edge joining its (at most two)
/// cliques, with fresh pendant vertices standing in for missing ones. For the
/// triangle either `K3` or `K_{1,3}` may come back.
pub fn root_graph(g: &Graph) -> Option<RootGraph> {
    let n = g.order();
    let mut s = Krausz { g, covered: vec![false; n * n], count: vec![0; n], cliques: Vec::new(), member: vec![Vec::new(); n] };
    if !s.solve() {
        return None;
    }
    let mut next = s.cliques.len();
    let mut edge_of = Vec::with_capacity(n);
    for v in 0..n {
        let mut ends: Vec<usize> = s.member[v].clone();
        while ends.len() < 2 {
            ends.push(next);
            next += 1;
        }
        edge_of.push((ends[0].min(ends[1]), ends[0].max(ends[1])));
    }
    let mut b = GraphBuilder::new(next);
    for &(a, c) in &edge_of {
        b.insert(a, c);
    }
    let root = RootGraph { root: b.build(), edge_of };
    debug_assert!(root.is_valid_for(g));
    Some(root)
}

struct Krausz<'a> {
    g: &'a Graph,
    covered: Vec<bool>,
    count: Vec<u8>,
    cliques: Vec<Vec<usize>>,
    member: Vec<Vec<usize>>,
}

impl Krausz<'_> {
    fn free(&self, u: usize, v: usize) -> bool {
        self.g.has_edge(u, v) && !self.covered[u * self.g.order() + v]
    }

    fn free_neighbors(&self, u: usize) -> Vec<usize> {
        self.g.neighbors(u).iter().copied().filter(|&w| self.free(u, w)).collect()
    }

    fn first_free_edge(&self) -> Option<(usize, usize)> {
        (0..self.g.order()).find_map(|u| self.g.neighbors(u).iter().find(|&&v| v > u && self.free(u, v)).map(|&v| (u, v)))
    }

    fn solve(&mut self) -> bool {
        let Some((u, v)) = self.first_free_edge() else {
            return true;
        };
        if self.count[u] == 2 || self.count[v] == 2 {
            return false;
        }
        // A vertex already in one clique must put all its free edges into
        // the second one.
        let mut forced: Vec<usize> = Vec::new();
        for x in [u, v] {
            if self.count[x] == 1 {
                forced.extend(self.free_neighbors(x).into_iter().filter(|&w| w != u && w != v));
            }
        }
        forced.sort_unstable();
        forced.dedup();
        let optional: Vec<usize> = self
            .g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| w != v && self.free(u, w) && self.free(v, w) && self.count[w] < 2 && forced.binary_search(&w).is_err())
            .collect();
        let mut clique = vec![u, v];
        clique.extend(forced);
        self.choose(&mut clique, &optional, 0)
    }

    // Decides the optional members one at a time, inclusion first so that
    // large cliques are tried before their subsets.
    fn choose(&mut self, clique: &mut Vec<usize>, optional: &[usize], i: usize) -> bool {
        if i == optional.len() {
            if !self.admissible(clique) {
                return false;
            }
            self.place(clique, true);
            if self.solve() {
                return true;
            }
            self.place(clique, false);
            return false;
        }
        let w = optional[i];
        if clique.iter().all(|&a| self.free(a, w)) {
            clique.push(w);
            if self.choose(clique, optional, i + 1) {
                return true;
            }
            clique.pop();
        }
        self.choose(clique, optional, i + 1)
    }

    fn admissible(&self, clique: &[usize]) -> bool {
        for (i, &a) in clique.iter().enumerate() {
            if self.count[a] >= 2 {
                return false;
            }
            if !clique[i + 1..].iter().all(|&b| self.free(a, b)) {
                return false;
            }
        }
        for &x in clique {
            let rest: Vec<usize> = self.free_neighbors(x).into_iter().filter(|w| !clique.contains(w)).collect();
            let ok = if self.count[x] == 1 {
                rest.is_empty()
            } else {
                rest.iter().enumerate().all(|(i, &a)| rest[i + 1..].iter().all(|&b| self.free(a, b)))
            };
            if !ok {
                return false;
            }
        }
        true
    }

    fn place(&mut self, clique: &[usize], on: bool) {
        let n = self.g.order();
        for (i, &a) in clique.iter().enumerate() {
            for &b in &clique[i + 1..] {
                self.covered[a * n + b] = on;
                self.covered[b * n + a] = on;
            }
        }
        if on {
            let id = self.cliques.len();
            for &x in clique {
                self.count[x] += 1;
                self.member[x].push(id);
            }
            self.cliques.push(clique.to_vec());
        } else {
            self.cliques.pop();
            for &x in clique {
                self.count[x] -= 1;
                self.member[x].pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::is_isomorphic;

    #[test]
    fn line_graph_of_claw_is_triangle() {
        let (l, map) = line_graph(&complete_bipartite(1, 3));
        assert!(is_isomorphic(&l, &complete(3)));
        assert_eq!(map, vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn line_graph_of_c5_is_c5() {
        assert!(is_isomorphic(&line_graph(&cycle(5)).0, &cycle(5)));
    }

    #[test]
    fn roots_of_small_graphs() {
        let r = root_graph(&complete(3)).unwrap();
        assert!(r.is_valid_for(&complete(3)));
        assert!(is_isomorphic(&r.root, &complete(3)) || is_isomorphic(&r.root, &complete_bipartite(1, 3)));
        let r = root_graph(&cycle(5)).unwrap();
        assert!(is_isomorphic(&r.root, &cycle(5)));
    }

    #[test]
    fn prism_round_trip() {
        let (l, _) = line_graph(&prism());
        assert_eq!(l.order(), 9);
        let r = root_graph(&l).unwrap();
        assert!(r.is_valid_for(&l));
        assert!(is_isomorphic(&r.root, &prism()));
    }

    #[test]
    fn claw_and_k5_minus_edge_are_not_line_graphs() {
        assert!(root_graph(&complete_bipartite(1, 3)).is_none());
        let mut k5e = complete(5).edges();
        k5e.retain(|&e| e != (0, 1));
        assert!(root_graph(&Graph::from_edges(5, &k5e).unwrap()).is_none());
    }

    #[test]
    fn isolated_vertices_become_isolated_edges() {
        let r = root_graph(&Graph::empty(2)).unwrap();
        assert_eq!(r.root.order(), 4);
        assert_eq!(r.edge_of, vec![(0, 1), (2, 3)]);
    }
}
