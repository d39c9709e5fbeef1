use std::collections::BTreeMap;

use super::{Graph, GraphBuilder};

/// Searches for an induced copy of `pattern` in `host`.
///
/// Returns `map` with `map[p]` the host vertex playing pattern vertex `p`,
/// such that `p ~ q` in the pattern iff `map[p] ~ map[q]` in the host.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.order();
    if k > host.order() {
        return None;
    }
    let order = search_order(pattern);
    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; host.order()];
    if extend(host, pattern, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

// Each vertex after the first is chosen to have as many already placed
// neighbors as possible, so adjacency constraints bite early.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let k = pattern.order();
    let mut placed = vec![false; k];
    let mut links = vec![0usize; k];
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| (links[a], pattern.degree(a), std::cmp::Reverse(a)).cmp(&(links[b], pattern.degree(b), std::cmp::Reverse(b))))
            .unwrap();
        placed[next] = true;
        order.push(next);
        for &w in pattern.neighbors(next) {
            links[w] += 1;
        }
    }
    order
}

fn extend(host: &Graph, pattern: &Graph, order: &[usize], depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    for h in 0..host.order() {
        if used[h] || host.degree(h) < pattern.degree(p) {
            continue;
        }
        let consistent = order[..depth].iter().all(|&q| pattern.has_edge(p, q) == host.has_edge(h, map[q]));
        if !consistent {
            continue;
        }
        map[p] = h;
        used[h] = true;
        if extend(host, pattern, order, depth + 1, map, used) {
            return true;
        }
        used[h] = false;
    }
    map[p] = usize::MAX;
    false
}

/// An isomorphism `g -> h` as a vertex map, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.size() != h.size() {
        return None;
    }
    let mut dg: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.order()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    contains_induced(h, g)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Color refinement: iterates (color, multiset of neighbor colors) until the
/// partition is stable. Colors are numbered by sorted signature and are
/// therefore invariant under relabeling.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
                s.sort_unstable();
                (color[v], s)
            })
            .collect();
        let ids: BTreeMap<&(usize, Vec<usize>), usize> =
            sigs.iter().collect::<std::collections::BTreeSet<_>>().into_iter().enumerate().map(|(i, s)| (s, i)).collect();
        let next: Vec<usize> = sigs.iter().map(|s| ids[s]).collect();
        let count = ids.len();
        color = next;
        if count == classes {
            return color;
        }
        classes = count;
    }
}

/// A canonical relabeling of `g`: two graphs are isomorphic iff their
/// canonical forms are equal.
///
/// Vertices are placed class by class after color refinement, and among the
/// placements allowed by the classes the lexicographically largest sequence
/// of back-adjacency rows wins. Exponential on highly regular inputs; meant
/// for small graphs.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.order();
    assert!(n <= 64, "canonical_form is limited to 64 vertices");
    let color = refine(g);
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        cells.entry(color[v]).or_default().push(v);
    }
    let slot_cell: Vec<usize> = cells.iter().flat_map(|(&c, vs)| std::iter::repeat(c).take(vs.len())).collect();
    let mut search = Canon {
        g,
        color: &color,
        slot_cell,
        masks: g.masks(),
        best: None,
        current: Vec::with_capacity(n),
        rows: Vec::with_capacity(n),
        used: 0,
    };
    search.run();
    let best = search.best.expect("at least one placement");
    let mut position = vec![0usize; n];
    for (p, &v) in best.0.iter().enumerate() {
        position[v] = p;
    }
    let mut b = GraphBuilder::new(n);
    for (u, v) in g.edges() {
        b.insert(position[u], position[v]);
    }
    b.build()
}

struct Canon<'a> {
    g: &'a Graph,
    color: &'a [usize],
    slot_cell: Vec<usize>,
    masks: Vec<u64>,
    best: Option<(Vec<usize>, Vec<u64>)>,
    current: Vec<usize>,
    rows: Vec<u64>,
    used: u64,
}

impl Canon<'_> {
    fn run(&mut self) {
        let p = self.current.len();
        if p == self.g.order() {
            if self.best.as_ref().map_or(true, |(_, rows)| self.rows > *rows) {
                self.best = Some((self.current.clone(), self.rows.clone()));
            }
            return;
        }
        let cell = self.slot_cell[p];
        for v in 0..self.g.order() {
            if self.used >> v & 1 == 1 || self.color[v] != cell {
                continue;
            }
            let mut row = 0u64;
            for (q, &w) in self.current.iter().enumerate() {
                if self.masks[v] >> w & 1 == 1 {
                    row |= 1 << (63 - q);
                }
            }
            self.rows.push(row);
            // Prune prefixes that already compare below the best leaf.
            let behind = matches!(&self.best, Some((_, best)) if self.rows[..] < best[..=p]);
            if !behind {
                self.current.push(v);
                self.used |= 1 << v;
                self.run();
                self.used &= !(1 << v);
                self.current.pop();
            }
            self.rows.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn no_induced_k4_in_w5() {
        assert!(contains_induced(&wheel(5), &complete(4)).is_none());
    }

    #[test]
    fn p4_sits_inside_c5() {
        let map = contains_induced(&cycle(5), &path(4)).unwrap();
        let host = cycle(5);
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    assert_eq!(path(4).has_edge(u, v), host.has_edge(map[u], map[v]));
                }
            }
        }
    }

    #[test]
    fn induced_is_stricter_than_subgraph() {
        // C4 is a subgraph of K4 but not an induced one.
        assert!(contains_induced(&complete(4), &cycle(4)).is_none());
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let g = prism();
        let perm = [4, 2, 0, 5, 1, 3];
        let mut b = GraphBuilder::new(6);
        for (u, v) in g.edges() {
            b.insert(perm[u], perm[v]);
        }
        let h = b.build();
        assert_eq!(canonical_form(&g), canonical_form(&h));
        assert_ne!(canonical_form(&g), canonical_form(&complete_bipartite(3, 3)));
    }
}
