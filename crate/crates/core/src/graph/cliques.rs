use super::{Graph, GraphError};

/// Largest graph accepted by [`enumerate_stable_sets`].
pub const STABLE_SET_LIMIT: usize = 32;

/// Every nonempty clique of `g`, singletons included, each listed once as a
/// sorted vertex list.
pub fn enumerate_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let all: Vec<usize> = (0..g.order()).collect();
    grow(g, &mut Vec::new(), &all, true, &mut |c| out.push(c.to_vec()));
    out
}

/// Every stable set of `g`, the empty set included.
pub fn enumerate_stable_sets(g: &Graph) -> Result<Vec<Vec<usize>>, GraphError> {
    if g.order() > STABLE_SET_LIMIT {
        return Err(GraphError::TooLarge { op: "stable set enumeration", n: g.order(), limit: STABLE_SET_LIMIT });
    }
    let mut out = vec![Vec::new()];
    let all: Vec<usize> = (0..g.order()).collect();
    grow(g, &mut Vec::new(), &all, false, &mut |s| out.push(s.to_vec()));
    Ok(out)
}

// Extends `current` by vertices of `candidates` (all larger than the last
// member), where `adjacent` selects cliques (true) or stable sets (false).
fn grow(g: &Graph, current: &mut Vec<usize>, candidates: &[usize], adjacent: bool, emit: &mut impl FnMut(&[usize])) {
    for (i, &v) in candidates.iter().enumerate() {
        current.push(v);
        emit(current);
        let next: Vec<usize> = candidates[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w) == adjacent).collect();
        grow(g, current, &next, adjacent, emit);
        current.pop();
    }
}

/// Clique number. The empty graph has clique number 0.
pub fn omega(g: &Graph) -> usize {
    let mut best = 0;
    let all: Vec<usize> = (0..g.order()).collect();
    max_clique(g, 0, &all, &mut best);
    best
}

fn max_clique(g: &Graph, size: usize, candidates: &[usize], best: &mut usize) {
    if size > *best {
        *best = size;
    }
    for (i, &v) in candidates.iter().enumerate() {
        if size + candidates.len() - i <= *best {
            return;
        }
        let next: Vec<usize> = candidates[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        max_clique(g, size + 1, &next, best);
    }
}

/// All cliques of cardinality `omega(g)`.
pub fn maximum_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let w = omega(g);
    if w == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let all: Vec<usize> = (0..g.order()).collect();
    sized(g, &mut Vec::new(), &all, w, &mut out);
    out
}

fn sized(g: &Graph, current: &mut Vec<usize>, candidates: &[usize], target: usize, out: &mut Vec<Vec<usize>>) {
    if current.len() == target {
        out.push(current.clone());
        return;
    }
    for (i, &v) in candidates.iter().enumerate() {
        if current.len() + candidates.len() - i < target {
            return;
        }
        let next: Vec<usize> = candidates[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        current.push(v);
        sized(g, current, &next, target, out);
        current.pop();
    }
}
