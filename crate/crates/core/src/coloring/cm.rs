use crate::graph::{is_factor_critical, is_two_connected, max_matching, odd_ear_decomposition, Cycle, Graph, GraphError};

use super::{ColoringError, CoverElement};

/// Largest root accepted by [`cm_cover`].
pub const CM_VERTEX_LIMIT: usize = 20;

/// A cover of the edges by full stars and by 2-connected factor-critical
/// induced subgraphs (triangles included), of value
/// `|stars| + Σ (|V(F)| - 1) / 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CMCover {
    pub stars: Vec<CoverElement>,
    /// Sorted vertex sets of the induced pieces.
    pub fc_pieces: Vec<Vec<usize>>,
    pub value: usize,
}

impl CMCover {
    /// Checks coverage, the piece conditions and the stated value.
    pub fn is_valid_for(&self, h: &Graph) -> bool {
        let pieces_ok = self.fc_pieces.iter().all(|p| {
            let f = h.induced(p);
            is_two_connected(&f) && is_factor_critical(&f)
        });
        let stars_ok = self.stars.iter().all(|s| matches!(s, CoverElement::Star { .. }) && s.is_valid_in(h));
        let value = self.stars.len() + self.fc_pieces.iter().map(|p| (p.len() - 1) / 2).sum::<usize>();
        let covered = h.edges().into_iter().all(|e| {
            self.stars.iter().any(|s| s.contains(e)) || self.fc_pieces.iter().any(|p| p.contains(&e.0) && p.contains(&e.1))
        });
        pieces_ok && stars_ok && covered && value == self.value
    }
}

enum Candidate {
    Star(usize),
    Piece(Vec<usize>),
}

impl Candidate {
    fn weight(&self) -> usize {
        match self {
            Candidate::Star(_) => 1,
            Candidate::Piece(p) => (p.len() - 1) / 2,
        }
    }
}

/// A Cunningham–Marsh cover of value exactly ν(h), for ν(h) ≤ 3.
///
/// Every such cover has value at least ν, so the search looks for one of
/// value at most ν among full stars and 3-, 5- and 7-vertex 2-connected
/// factor-critical induced subgraphs, branching on the lowest uncovered edge.
pub fn cm_cover(h: &Graph) -> Result<CMCover, ColoringError> {
    let nu = max_matching(h).len();
    if nu > 3 {
        return Err(ColoringError::MatchingTooLarge(nu));
    }
    if h.order() > CM_VERTEX_LIMIT {
        return Err(GraphError::TooLarge { op: "cm_cover", n: h.order(), limit: CM_VERTEX_LIMIT }.into());
    }
    let edges = h.edges();
    if edges.len() > 64 {
        return Err(GraphError::TooLarge { op: "cm_cover (edges)", n: edges.len(), limit: 64 }.into());
    }
    let index = |a: usize, b: usize| edges.binary_search(&(a.min(b), a.max(b))).expect("edge of h");
    let mut candidates: Vec<(Candidate, u64)> = Vec::new();
    for v in 0..h.order() {
        if h.degree(v) > 0 {
            let mask = h.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << index(v, w));
            candidates.push((Candidate::Star(v), mask));
        }
    }
    let active: Vec<usize> = (0..h.order()).filter(|&v| h.degree(v) > 0).collect();
    for size in [3, 5, 7] {
        if (size - 1) / 2 > nu {
            break;
        }
        for_each_subset(&active, size, &mut |set| {
            let f = h.induced(set);
            if is_two_connected(&f) && is_factor_critical(&f) {
                let mask = f.edges().into_iter().fold(0u64, |m, (a, b)| m | 1 << index(set[a], set[b]));
                candidates.push((Candidate::Piece(set.to_vec()), mask));
            }
        });
    }
    let full = if edges.len() == 64 { u64::MAX } else { (1u64 << edges.len()) - 1 };
    let mut chosen = Vec::new();
    if !search(&candidates, full, 0, nu, &mut chosen) {
        return Err(ColoringError::Internal(format!("no Cunningham–Marsh cover of value {nu} found")));
    }
    let mut cover = CMCover { stars: Vec::new(), fc_pieces: Vec::new(), value: 0 };
    for i in chosen {
        cover.value += candidates[i].0.weight();
        match &candidates[i].0 {
            Candidate::Star(v) => cover.stars.push(CoverElement::full_star(h, *v)),
            Candidate::Piece(p) => cover.fc_pieces.push(p.clone()),
        }
    }
    debug_assert_eq!(cover.value, nu);
    Ok(cover)
}

fn search(candidates: &[(Candidate, u64)], full: u64, covered: u64, budget: usize, chosen: &mut Vec<usize>) -> bool {
    if covered == full {
        return true;
    }
    let first = (!covered & full).trailing_zeros();
    for (i, (c, mask)) in candidates.iter().enumerate() {
        let w = c.weight();
        if w <= budget && mask >> first & 1 == 1 {
            chosen.push(i);
            if search(candidates, full, covered | mask, budget - w, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

fn for_each_subset(items: &[usize], size: usize, f: &mut impl FnMut(&[usize])) {
    fn go(items: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == size {
            f(cur);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < size - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, size, i + 1, cur, f);
            cur.pop();
        }
    }
    go(items, size, 0, &mut Vec::with_capacity(size), f);
}

/// A Hamiltonian 5-circuit of a 5-vertex 2-connected factor-critical graph,
/// read off an odd ear decomposition: the first ear itself when it has
/// length 5, otherwise a triangle `x y z` followed by a path `x p q y` of
/// length 3, giving the circuit `x p q y z`.
pub fn spanning_c5(f: &Graph) -> Result<Cycle, ColoringError> {
    if f.order() != 5 {
        return Err(ColoringError::NoSpanningC5(format!("graph has {} vertices, not 5", f.order())));
    }
    let d = odd_ear_decomposition(f).ok_or_else(|| ColoringError::NoSpanningC5("no odd ear decomposition".into()))?;
    let first = &d.ears[0];
    let c = match first.len() {
        5 => first.clone(),
        3 => {
            let ear = d
                .ears
                .iter()
                .skip(1)
                .find(|e| e.len() == 4)
                .ok_or_else(|| ColoringError::NoSpanningC5("no ear of length 3 after the triangle".into()))?;
            let z = *first.iter().find(|v| !ear.contains(v)).expect("triangle has a third vertex");
            vec![ear[0], ear[1], ear[2], ear[3], z]
        }
        k => return Err(ColoringError::NoSpanningC5(format!("first ear has length {k}"))),
    };
    let c = Cycle::new(c);
    debug_assert!(c.is_circuit_of(f));
    Ok(c)
}
