use crate::graph::{maximum_cliques, omega, shortest_odd_cycle, Graph};
use crate::recognition::{h_perfect_col, t_perfect_col};

use super::structured::check_forbidden;
use super::{three_color_structured, Coloring, ColoringError};

/// A proper coloring with at most 4 colors of a t-perfect complement of a
/// line graph.
///
/// Around vertex 0 the neighbors induce a bipartite graph, since a t-perfect
/// graph has no odd wheel. So do the non-neighbors: if vertex 0 is the root
/// edge `ab`, they are the other edges at `a` and at `b`, two stable sets.
/// Neighbors get colors 0 and 1, non-neighbors 2 and 3, and vertex 0, which
/// is adjacent to no non-neighbor, takes color 2.
pub fn four_color_col(g: &Graph) -> Result<Coloring, ColoringError> {
    let report = t_perfect_col(g);
    if !report.is_complement_of_line_graph {
        return Err(ColoringError::NotCoLineGraph);
    }
    if report.t_perfect != Some(true) {
        return Err(ColoringError::NotTPerfect(report.witness.expect("failed verdicts carry a witness")));
    }
    let n = g.order();
    if n == 0 {
        return Ok(Coloring::new(Vec::new()));
    }
    let v = 0;
    let near: Vec<usize> = g.neighbors(v).to_vec();
    let far: Vec<usize> = (1..n).filter(|&w| !g.has_edge(v, w)).collect();
    let mut colors = vec![2; n];
    for (side, set, base) in [("neighbor", &near, 0), ("non-neighbor", &far, 2)] {
        let sub = g.induced(set);
        let Some(two) = sub.two_coloring() else {
            let circuit = shortest_odd_cycle(&sub).map(|c| c.vertices().iter().map(|&i| set[i]).collect()).unwrap_or_default();
            return Err(ColoringError::NotBipartite { vertex: v, side, circuit });
        };
        for (i, &w) in set.iter().enumerate() {
            colors[w] = base + two[i];
        }
    }
    let c = Coloring::new(colors);
    debug_assert!(c.is_proper(g));
    Ok(c)
}

/// A stable set meeting every maximum clique of `g`.
///
/// Depth-first: the lowest-indexed maximum clique not yet met must receive
/// one of its vertices that has no neighbor in the set so far. Such a set
/// exists for h-perfect graphs with `ω >= 3`; for other inputs the search
/// may fail.
pub fn stable_set_hitting_max_cliques(g: &Graph) -> Result<Vec<usize>, ColoringError> {
    let cliques = maximum_cliques(g);
    let mut set = Vec::new();
    if hit(g, &cliques, &mut set) {
        set.sort_unstable();
        Ok(set)
    } else {
        Err(ColoringError::NoHittingStableSet)
    }
}

fn hit(g: &Graph, cliques: &[Vec<usize>], set: &mut Vec<usize>) -> bool {
    let Some(k) = cliques.iter().find(|k| !k.iter().any(|v| set.contains(v))) else {
        return true;
    };
    for &v in k {
        if set.iter().all(|&s| !g.has_edge(s, v)) {
            set.push(v);
            if hit(g, cliques, set) {
                return true;
            }
            set.pop();
        }
    }
    false
}

/// A proper coloring with exactly `⌈χ_f(g)⌉` colors of an h-perfect
/// complement of a line graph with no induced `co-L(Π)` or `co-L(W5)`.
///
/// Bipartite graphs get their 2-coloring (1 color when edgeless). With
/// `ω <= 3` the structured 3-coloring applies. With `ω >= 4` a stable set
/// meeting every maximum clique is removed, the rest colored recursively,
/// and the set becomes one more color class.
pub fn ceil_chif_coloring(g: &Graph) -> Result<Coloring, ColoringError> {
    let report = h_perfect_col(g);
    if !report.is_complement_of_line_graph {
        return Err(ColoringError::NotCoLineGraph);
    }
    if report.h_perfect != Some(true) {
        return Err(ColoringError::NotHPerfect(report.witness.expect("failed verdicts carry a witness")));
    }
    check_forbidden(g)?;
    peel(g)
}

fn peel(g: &Graph) -> Result<Coloring, ColoringError> {
    if let Some(two) = g.two_coloring() {
        return Ok(Coloring::new(two));
    }
    if omega(g) <= 3 {
        return three_color_structured(g);
    }
    let s = stable_set_hitting_max_cliques(g)?;
    let rest: Vec<usize> = (0..g.order()).filter(|v| s.binary_search(v).is_err()).collect();
    let inner = peel(&g.induced(&rest))?;
    let top = inner.colors.iter().max().map_or(0, |&m| m + 1);
    let mut colors = vec![top; g.order()];
    for (i, &v) in rest.iter().enumerate() {
        colors[v] = inner.colors[i];
    }
    Ok(Coloring::new(colors))
}
