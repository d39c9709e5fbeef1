use super::Graph;

/// A set of pairwise non-incident edges, each stored as `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Checks the matching property and that every member is an edge of `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.order()];
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) || used[u] || used[v] {
                return false;
            }
            used[u] = true;
            used[v] = true;
        }
        true
    }
}

/// A maximum cardinality matching by exhaustive branch and bound.
///
/// The lowest unmatched vertex is either left exposed or matched to each of
/// its free neighbors in turn; branches that cannot beat the incumbent are
/// cut using the number of free vertices that still have a free neighbor.
pub fn max_matching(g: &Graph) -> Matching {
    let mut search = MatchSearch { g, free: vec![true; g.order()], current: Vec::new(), best: Vec::new() };
    search.run(0);
    Matching { edges: search.best }
}

struct MatchSearch<'a> {
    g: &'a Graph,
    free: Vec<bool>,
    current: Vec<(usize, usize)>,
    best: Vec<(usize, usize)>,
}

impl MatchSearch<'_> {
    fn run(&mut self, from: usize) {
        let n = self.g.order();
        let Some(v) = (from..n).find(|&v| self.free[v] && self.g.neighbors(v).iter().any(|&w| self.free[w])) else {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        };
        let coverable = (v..n).filter(|&u| self.free[u] && self.g.neighbors(u).iter().any(|&w| self.free[w])).count();
        if self.current.len() + coverable / 2 <= self.best.len() {
            return;
        }
        self.free[v] = false;
        for i in 0..self.g.degree(v) {
            let w = self.g.neighbors(v)[i];
            if !self.free[w] {
                continue;
            }
            self.free[w] = false;
            self.current.push((v.min(w), v.max(w)));
            self.run(v + 1);
            self.current.pop();
            self.free[w] = true;
        }
        self.run(v + 1);
        self.free[v] = true;
    }
}

/// Every matching of maximum cardinality.
pub fn maximum_matchings(g: &Graph) -> Vec<Matching> {
    let target = max_matching(g).len();
    let mut out = Vec::new();
    let edges = g.edges();
    let mut used = vec![false; g.order()];
    let mut current = Vec::new();
    collect(&edges, 0, target, &mut used, &mut current, &mut out);
    out
}

fn collect(
    edges: &[(usize, usize)],
    start: usize,
    target: usize,
    used: &mut [bool],
    current: &mut Vec<(usize, usize)>,
    out: &mut Vec<Matching>,
) {
    if current.len() == target {
        out.push(Matching { edges: current.clone() });
        return;
    }
    for i in start..edges.len() {
        let (u, v) = edges[i];
        if used[u] || used[v] {
            continue;
        }
        used[u] = true;
        used[v] = true;
        current.push((u, v));
        collect(edges, i + 1, target, used, current, out);
        current.pop();
        used[u] = false;
        used[v] = false;
    }
}

/// `g - v` has a perfect matching for every vertex `v`.
///
/// The empty graph is not factor-critical.
pub fn is_factor_critical(g: &Graph) -> bool {
    let n = g.order();
    if n % 2 == 0 {
        return false;
    }
    (0..n).all(|v| 2 * max_matching(&g.remove_vertex(v)).len() == n - 1)
}
