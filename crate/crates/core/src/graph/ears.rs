use std::collections::HashSet;

use super::{enumerate_simple_cycles, Graph, DEFAULT_CYCLE_CAP};

/// An odd ear decomposition: an odd circuit followed by odd paths, each path
/// meeting the union of the previous ears exactly in its two distinct ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EarDecomposition {
    /// `ears[0]` is a cyclic vertex sequence; every later entry is a path
    /// given by its vertex sequence (so a single edge is a 2-vertex entry).
    pub ears: Vec<Vec<usize>>,
}

impl EarDecomposition {
    /// Checks every ear axiom and that the ears together are exactly `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let Some(first) = self.ears.first() else {
            return false;
        };
        if first.len() < 3 || first.len() % 2 == 0 {
            return false;
        }
        let mut seen = vec![false; g.order()];
        let mut edges = HashSet::new();
        let take = |a: usize, b: usize, edges: &mut HashSet<(usize, usize)>| {
            g.has_edge(a, b) && edges.insert((a.min(b), a.max(b)))
        };
        for (i, &v) in first.iter().enumerate() {
            if v >= g.order() || seen[v] {
                return false;
            }
            seen[v] = true;
            if !take(v, first[(i + 1) % first.len()], &mut edges) {
                return false;
            }
        }
        for ear in &self.ears[1..] {
            let len = ear.len().saturating_sub(1);
            if len % 2 == 0 {
                return false;
            }
            let (a, b) = (ear[0], ear[ear.len() - 1]);
            if a == b || a >= g.order() || b >= g.order() || !seen[a] || !seen[b] {
                return false;
            }
            for &v in &ear[1..ear.len() - 1] {
                if v >= g.order() || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
            if !ear.windows(2).all(|w| take(w[0], w[1], &mut edges)) {
                return false;
            }
        }
        seen.iter().all(|&s| s) && edges.len() == g.size()
    }
}

/// No vertex whose removal disconnects the graph, on at least 3 vertices.
pub fn is_two_connected(g: &Graph) -> bool {
    g.order() >= 3 && g.is_connected() && (0..g.order()).all(|v| g.remove_vertex(v).is_connected())
}

/// Finds an odd ear decomposition of `g`, which exists iff `g` is
/// 2-connected and factor-critical.
///
/// Odd circuits are tried as the first ear, shortest first. After each ear,
/// every edge between already covered vertices is added as a one-edge ear,
/// so the search state is just the covered vertex set; sets from which no
/// completion exists are remembered.
pub fn odd_ear_decomposition(g: &Graph) -> Option<EarDecomposition> {
    let n = g.order();
    if n < 3 || n > 64 || !g.is_connected() {
        return None;
    }
    let mut starts: Vec<_> = enumerate_simple_cycles(g, None, DEFAULT_CYCLE_CAP).ok()?.into_iter().filter(|c| c.is_odd()).collect();
    starts.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut failed = HashSet::new();
    for c in starts {
        let mut ears = vec![c.vertices().to_vec()];
        let covered: u64 = c.vertices().iter().fold(0, |m, &v| m | 1 << v);
        let mut edges: HashSet<(usize, usize)> = c.edges().collect();
        if grow(g, covered, &mut edges, &mut ears, &mut failed) {
            return Some(EarDecomposition { ears });
        }
    }
    None
}

fn grow(
    g: &Graph,
    covered: u64,
    edges: &mut HashSet<(usize, usize)>,
    ears: &mut Vec<Vec<usize>>,
    failed: &mut HashSet<u64>,
) -> bool {
    let depth = ears.len();
    let edge_count = edges.len();
    for (u, v) in g.edges() {
        if covered >> u & 1 == 1 && covered >> v & 1 == 1 && edges.insert((u, v)) {
            ears.push(vec![u, v]);
        }
    }
    let full = if g.order() == 64 { u64::MAX } else { (1u64 << g.order()) - 1 };
    if covered == full && edges.len() == g.size() {
        return true;
    }
    if !failed.contains(&covered) {
        for path in odd_paths(g, covered) {
            let mut next = covered;
            for &v in &path[1..path.len() - 1] {
                next |= 1 << v;
            }
            let added: Vec<(usize, usize)> = path.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))).collect();
            edges.extend(added.iter().copied());
            ears.push(path);
            if grow(g, next, edges, ears, failed) {
                return true;
            }
            ears.pop();
            for e in &added {
                edges.remove(e);
            }
        }
        failed.insert(covered);
    }
    // Undo the chords added on entry.
    for ear in ears.drain(depth..) {
        edges.remove(&(ear[0].min(ear[1]), ear[0].max(ear[1])));
    }
    debug_assert_eq!(edges.len(), edge_count);
    false
}

// Paths of odd length >= 3 that leave the covered set at one end, run through
// uncovered vertices only, and re-enter it at a different end. Shortest first.
fn odd_paths(g: &Graph, covered: u64) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 0..g.order() {
        if covered >> a & 1 == 0 {
            continue;
        }
        let mut path = vec![a];
        extend_path(g, covered, covered, &mut path, &mut out);
    }
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    out
}

fn extend_path(g: &Graph, covered: u64, blocked: u64, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if covered >> w & 1 == 1 {
            // Internal vertices exist and the length (path.len() edges) is odd.
            if path.len() >= 3 && w != path[0] && path.len() % 2 == 1 {
                let mut p = path.clone();
                p.push(w);
                out.push(p);
            }
            continue;
        }
        if blocked >> w & 1 == 1 {
            continue;
        }
        path.push(w);
        extend_path(g, covered, blocked | 1 << w, path, out);
        path.pop();
    }
}
