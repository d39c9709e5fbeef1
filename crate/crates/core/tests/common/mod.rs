//! Brute-force reference implementations, written independently of the
//! library's algorithms. Everything here is exponential and meant for
//! small inputs only.
#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use tperfect::graph::Graph;

pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

pub fn is_clique(g: &Graph, s: &[usize]) -> bool {
    s.iter().enumerate().all(|(i, &a)| s[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

pub fn is_stable(g: &Graph, s: &[usize]) -> bool {
    s.iter().enumerate().all(|(i, &a)| s[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
}

pub fn cliques(g: &Graph) -> Vec<Vec<usize>> {
    subsets(g.order()).filter(|s| !s.is_empty() && is_clique(g, s)).collect()
}

pub fn stable_sets(g: &Graph) -> Vec<Vec<usize>> {
    subsets(g.order()).filter(|s| is_stable(g, s)).collect()
}

pub fn omega(g: &Graph) -> usize {
    subsets(g.order()).filter(|s| is_clique(g, s)).map(|s| s.len()).max().unwrap_or(0)
}

/// Size of a largest set of pairwise disjoint edges, by trying every edge
/// subset.
pub fn matching_number(g: &Graph) -> usize {
    let edges = g.edges();
    assert!(edges.len() <= 22);
    let mut best = 0;
    for m in 0u32..1 << edges.len() {
        let k = m.count_ones() as usize;
        if k <= best {
            continue;
        }
        let mut used = vec![false; g.order()];
        let ok = (0..edges.len()).filter(|&i| m >> i & 1 == 1).all(|i| {
            let (a, b) = edges[i];
            let fresh = !used[a] && !used[b];
            used[a] = true;
            used[b] = true;
            fresh
        });
        if ok {
            best = k;
        }
    }
    best
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Number of Hamiltonian circuits of `g[s]`, each counted once.
pub fn hamiltonian_circuits(g: &Graph, s: &[usize]) -> usize {
    if s.len() < 3 {
        return 0;
    }
    let count = permutations(&s[1..])
        .into_iter()
        .filter(|p| {
            let mut order = vec![s[0]];
            order.extend(p);
            (0..order.len()).all(|i| g.has_edge(order[i], order[(i + 1) % order.len()]))
        })
        .count();
    count / 2
}

pub fn cycle_count(g: &Graph) -> usize {
    subsets(g.order()).map(|s| hamiltonian_circuits(g, &s)).sum()
}

/// Whether `g[s]` has a Hamiltonian circuit, by extending paths from `s[0]`.
pub fn is_hamiltonian(g: &Graph, s: &[usize]) -> bool {
    fn extend(g: &Graph, s: &[usize], path: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let last = *path.last().unwrap();
        if path.len() == s.len() {
            return g.has_edge(last, s[0]);
        }
        for (i, &w) in s.iter().enumerate() {
            if !used[i] && g.has_edge(last, w) {
                used[i] = true;
                path.push(w);
                if extend(g, s, path, used) {
                    return true;
                }
                path.pop();
                used[i] = false;
            }
        }
        false
    }
    if s.len() < 3 {
        return false;
    }
    let mut used = vec![false; s.len()];
    used[0] = true;
    extend(g, s, &mut vec![s[0]], &mut used)
}

/// Vertex sets of odd circuits.
pub fn odd_circuit_sets(g: &Graph) -> Vec<Vec<usize>> {
    subsets(g.order()).filter(|s| s.len() % 2 == 1 && is_hamiltonian(g, s)).collect()
}

/// Lengths of all circuits, with multiplicity.
pub fn circuit_lengths(g: &Graph) -> Vec<usize> {
    let mut out = Vec::new();
    for s in subsets(g.order()) {
        for _ in 0..hamiltonian_circuits(g, &s) {
            out.push(s.len());
        }
    }
    out
}

/// The two conditions on the root, checked from first principles.
pub fn root_conditions_hold(h: &Graph) -> bool {
    let sets = subsets(h.order()).filter(|s| s.len() % 2 == 1 && s.len() >= 5 && hamiltonian_circuits(h, s) > 0);
    for s in sets {
        if s.len() >= 7 {
            return false;
        }
        if h.edges().iter().any(|&(a, b)| !s.contains(&a) && !s.contains(&b)) {
            return false;
        }
    }
    true
}

/// The complement of the line graph, built directly.
pub fn co_line(h: &Graph) -> Graph {
    let e = h.edges();
    let mut pairs = Vec::new();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            let (a, b) = e[i];
            let (c, d) = e[j];
            if a != c && a != d && b != c && b != d {
                pairs.push((i, j));
            }
        }
    }
    Graph::from_edges(e.len(), &pairs).unwrap()
}

/// χ by trying every assignment with k = 0, 1, 2, ... colors.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if g.edges().iter().all(|&(a, b)| colors[a] != colors[b]) {
                return k;
            }
            let mut i = 0;
            while i < n {
                colors[i] += 1;
                if colors[i] < k {
                    break;
                }
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    n
}

/// γ by trying every set of full stars and triangles, smallest first.
pub fn gamma(h: &Graph) -> usize {
    let edges = h.edges();
    let mut elements: Vec<Vec<(usize, usize)>> = Vec::new();
    for v in 0..h.order() {
        elements.push(edges.iter().copied().filter(|&(a, b)| a == v || b == v).collect());
    }
    for s in subsets(h.order()) {
        if s.len() == 3 && is_clique(h, &s) {
            elements.push(vec![(s[0], s[1]), (s[0], s[2]), (s[1], s[2])]);
        }
    }
    for k in 0..=elements.len() {
        if choose(&elements, k, 0, &mut Vec::new(), &edges) {
            return k;
        }
    }
    unreachable!()
}

fn choose(elements: &[Vec<(usize, usize)>], k: usize, start: usize, cur: &mut Vec<usize>, edges: &[(usize, usize)]) -> bool {
    if cur.len() == k {
        return edges.iter().all(|e| cur.iter().any(|&i| elements[i].contains(e)));
    }
    for i in start..elements.len() {
        cur.push(i);
        if choose(elements, k, i + 1, cur, edges) {
            return true;
        }
        cur.pop();
    }
    false
}

/// Isomorphism by trying every bijection.
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let idx: Vec<usize> = (0..g.order()).collect();
    permutations(&idx).into_iter().any(|p| g.edges().iter().all(|&(a, b)| h.has_edge(p[a], p[b])))
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    2 * matching_number(g) == g.order()
}

pub fn factor_critical(g: &Graph) -> bool {
    g.order() % 2 == 1 && (0..g.order()).all(|v| has_perfect_matching(&g.remove_vertex(v)))
}

fn connected_without(g: &Graph, skip: Option<usize>) -> bool {
    let alive: Vec<usize> = (0..g.order()).filter(|&v| Some(v) != skip).collect();
    let Some(&start) = alive.first() else {
        return true;
    };
    let mut seen = vec![false; g.order()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for w in 0..g.order() {
            if Some(w) != skip && !seen[w] && g.has_edge(v, w) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    alive.iter().all(|&v| seen[v])
}

pub fn two_connected(g: &Graph) -> bool {
    g.order() >= 3 && connected_without(g, None) && (0..g.order()).all(|v| connected_without(g, Some(v)))
}

/// Rank by Gaussian elimination over the rationals.
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m = rows.to_vec();
    let width = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &pivot;
                for j in c..width {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

/// Membership in HSTAB from a subset scan: non-negativity, every clique,
/// every vertex set carrying an odd circuit.
pub struct NaiveHstab {
    cliques: Vec<Vec<usize>>,
    odd: Vec<Vec<usize>>,
}

impl NaiveHstab {
    pub fn new(g: &Graph) -> Self {
        NaiveHstab { cliques: cliques(g), odd: odd_circuit_sets(g) }
    }

    pub fn contains(&self, x: &[BigRational]) -> bool {
        let sum = |s: &[usize]| s.iter().fold(BigRational::zero(), |acc, &v| acc + &x[v]);
        x.iter().all(|c| *c >= BigRational::zero())
            && self.cliques.iter().all(|k| sum(k) <= BigRational::one())
            && self.odd.iter().all(|c| sum(c) <= BigRational::from_integer(((c.len() - 1) / 2).into()))
    }
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}
