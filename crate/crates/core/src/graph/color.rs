use serde::Serialize;

use super::{omega, Graph, GraphError};

/// Largest graph accepted by the exact coloring routines.
pub const EXACT_COLORING_LIMIT: usize = 24;

/// A vertex coloring: `colors[v]` is the 0-based color of `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring { colors }
    }

    /// Number of distinct colors in use.
    pub fn count(&self) -> usize {
        let mut seen: Vec<usize> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Every vertex of `g` is colored and no edge is monochromatic.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.order() && g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }

    /// Renumbers colors to `0..count()` in order of first appearance.
    pub fn compacted(&self) -> Coloring {
        let mut map: Vec<Option<usize>> = Vec::new();
        let mut next = 0;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if c >= map.len() {
                    map.resize(c + 1, None);
                }
                *map[c].get_or_insert_with(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect();
        Coloring { colors }
    }

    /// The color classes, indexed by color.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let k = self.colors.iter().max().map_or(0, |&m| m + 1);
        let mut out = vec![Vec::new(); k];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

fn guard(g: &Graph) -> Result<(), GraphError> {
    if g.order() > EXACT_COLORING_LIMIT {
        return Err(GraphError::TooLarge { op: "exact coloring", n: g.order(), limit: EXACT_COLORING_LIMIT });
    }
    Ok(())
}

/// A proper coloring with at most `k` colors, if one exists.
///
/// Backtracking in saturation-degree order (most distinct neighbor colors,
/// then most uncolored neighbors, then lowest index). A vertex may only open
/// the next unused color, which removes color permutations from the search.
pub fn is_k_colorable(g: &Graph, k: usize) -> Result<Option<Coloring>, GraphError> {
    guard(g)?;
    let n = g.order();
    if n == 0 {
        return Ok(Some(Coloring::new(Vec::new())));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut s = Dsatur { g, k, color: vec![usize::MAX; n], seen: vec![vec![0u8; k]; n], used: 0 };
    Ok(s.run(0).then(|| Coloring::new(s.color)))
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    // seen[v][c]: number of colored neighbors of v with color c
    seen: Vec<Vec<u8>>,
    used: usize,
}

impl Dsatur<'_> {
    fn pick(&self) -> usize {
        let mut best = usize::MAX;
        let mut key = (0usize, 0usize);
        for v in 0..self.g.order() {
            if self.color[v] != usize::MAX {
                continue;
            }
            let sat = self.seen[v].iter().filter(|&&c| c > 0).count();
            let free = self.g.neighbors(v).iter().filter(|&&w| self.color[w] == usize::MAX).count();
            if best == usize::MAX || (sat, free) > key {
                best = v;
                key = (sat, free);
            }
        }
        best
    }

    fn run(&mut self, done: usize) -> bool {
        if done == self.g.order() {
            return true;
        }
        let v = self.pick();
        let limit = (self.used + 1).min(self.k);
        for c in 0..limit {
            if self.seen[v][c] > 0 {
                continue;
            }
            self.color[v] = c;
            let opened = c == self.used;
            if opened {
                self.used += 1;
            }
            for &w in self.g.neighbors(v) {
                self.seen[w][c] += 1;
            }
            if self.run(done + 1) {
                return true;
            }
            for &w in self.g.neighbors(v) {
                self.seen[w][c] -= 1;
            }
            if opened {
                self.used -= 1;
            }
        }
        self.color[v] = usize::MAX;
        false
    }
}

/// The chromatic number and an optimal coloring.
///
/// Starts from the clique number as lower bound and tries each `k` upwards.
pub fn chromatic_number_exact(g: &Graph) -> Result<(usize, Coloring), GraphError> {
    guard(g)?;
    let mut k = omega(g);
    loop {
        if let Some(c) = is_k_colorable(g, k)? {
            return Ok((k, c));
        }
        k += 1;
    }
}

/// Outcome of [`is_4_critical`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Criticality {
    pub is_critical: bool,
    /// A 3-coloring of the whole graph, when one exists.
    pub three_coloring: Option<Coloring>,
    /// For each vertex `v`, a 3-coloring of `g - v` (indices of `g - v`).
    pub deletion_colorings: Vec<Option<Coloring>>,
}

/// Not 3-colorable while every single-vertex deletion is.
pub fn is_4_critical(g: &Graph) -> Result<Criticality, GraphError> {
    guard(g)?;
    let three_coloring = is_k_colorable(g, 3)?;
    let deletion_colorings = (0..g.order()).map(|v| is_k_colorable(&g.remove_vertex(v), 3)).collect::<Result<Vec<_>, _>>()?;
    let is_critical = three_coloring.is_none() && deletion_colorings.iter().all(Option::is_some);
    Ok(Criticality { is_critical, three_coloring, deletion_colorings })
}
