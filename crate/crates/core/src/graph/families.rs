//! Named graphs and exhaustive generation of small graphs up to isomorphism.

use std::collections::HashSet;

use super::{canonical_form, line_graph, Graph, GraphBuilder};

/// The circuit `0-1-...-(n-1)-0`. Requires `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a circuit needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// The path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::empty(n).complement()
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = GraphBuilder::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.insert(u, v);
        }
    }
    g.build()
}

/// The wheel `W_n`: rim circuit on `0..n`, hub `n`.
pub fn wheel(n: usize) -> Graph {
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (i, n)));
    Graph::from_edges(n + 1, &edges).unwrap()
}

/// The prism: triangles `{0,1,2}` and `{3,4,5}` joined by the matching
/// `i -- i+3`. Isomorphic to the complement of `C_6`.
pub fn prism() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap()
}

/// `C_n^k`: the circuit on `n` vertices plus every chord joining vertices at
/// distance at most `k` along it.
pub fn cycle_power(n: usize, k: usize) -> Graph {
    let mut g = GraphBuilder::new(n);
    for i in 0..n {
        for d in 1..=k {
            let j = (i + d) % n;
            if i != j {
                g.insert(i, j);
            }
        }
    }
    g.build()
}

/// The Mycielski-Grötzsch graph. Vertex 0 is the apex `u`, `1..=5` its
/// neighbors and `6..=10` the outer 5-circuit.
pub fn mycielski_grotzsch() -> Graph {
    let mut edges = vec![(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)];
    edges.extend([(6, 7), (7, 8), (8, 9), (9, 10), (6, 10)]);
    edges.extend([(1, 7), (7, 3), (3, 9), (9, 5), (5, 6), (6, 2), (2, 8), (8, 4), (4, 10), (10, 1)]);
    Graph::from_edges(11, &edges).unwrap()
}

/// Complement of the line graph of `h`.
pub fn co_line(h: &Graph) -> Graph {
    line_graph(h).0.complement()
}

/// `k` vertex-disjoint copies of `g`.
pub fn copies(g: &Graph, k: usize) -> Graph {
    (1..k).fold(g.clone(), |acc, _| acc.disjoint_union(g))
}

/// One representative of every isomorphism class of graphs on exactly `n`
/// vertices, each in canonical form, in a deterministic order.
///
/// Generation extends each class on `n - 1` vertices by a new vertex in all
/// possible ways and keeps one copy per canonical form, so it is only meant
/// for `n <= 8`.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            let edges = g.edges();
            for subset in 0u32..(1u32 << (k - 1)) {
                let mut b = GraphBuilder::new(k);
                for &(u, v) in &edges {
                    b.insert(u, v);
                }
                for u in 0..k - 1 {
                    if subset >> u & 1 == 1 {
                        b.insert(u, k - 1);
                    }
                }
                let c = canonical_form(&b.build());
                if seen.insert(c.clone()) {
                    next.push(c);
                }
            }
        }
        level = next;
    }
    level
}

/// Graphs from [`all_graphs`] with `1..=max_n` vertices and no isolated vertex.
pub fn all_graphs_without_isolated(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(all_graphs).filter(|g| (0..g.order()).all(|v| g.degree(v) > 0)).collect()
}
