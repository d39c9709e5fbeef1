use crate::graph::families::{co_line, prism, wheel};
use crate::graph::{contains_induced, Graph};
use crate::recognition::t_perfect_col;

use super::{cm_cover, cover_to_coloring, spanning_c5, Coloring, ColoringError, CoverElement, StarTriangleCover};

/// A cover of `E(h)` by at most 3 stars and triangles, when `co-L(h)` is
/// t-perfect and contains neither `co-L(Π)` nor `co-L(W5)`, following the
/// proof that such graphs are 3-colorable.
///
/// From a Cunningham–Marsh cover of value `ν(h) <= 3`: if all its pieces are
/// triangles it already is a star–triangle cover. Otherwise a piece `F` with
/// a spanning 5-circuit `C` exists. Either `F` is the whole cover and `h`
/// lies in `K5`, or there is exactly one vertex `v` outside `F` and the
/// cover depends on the neighbors of `v` on `C`.
pub fn structured_cover(h: &Graph) -> Result<StarTriangleCover, ColoringError> {
    let cm = cm_cover(h)?;
    let Some(piece) = cm.fc_pieces.iter().find(|p| p.len() != 3) else {
        let mut elements = cm.stars.clone();
        elements.extend(cm.fc_pieces.iter().map(|p| CoverElement::triangle(p[0], p[1], p[2])));
        return Ok(StarTriangleCover { elements });
    };
    let local = spanning_c5(&h.induced(piece))?;
    let c: Vec<usize> = local.vertices().iter().map(|&i| piece[i]).collect();
    let cover = if cm.stars.is_empty() && cm.fc_pieces.len() == 1 {
        k5_cover(h, &c)
    } else {
        outside_vertex_cover(h, &c)?
    };
    if cover.len() > 3 || !cover.is_cover_of(h) {
        return Err(ColoringError::Internal(format!("structured cover {cover:?} does not cover the root")));
    }
    Ok(cover)
}

// The triangle on u1 u2 u3 and the full stars at u4 and u5 cover K5; here
// restricted to the edges of `h`.
fn k5_cover(h: &Graph, c: &[usize]) -> StarTriangleCover {
    let (u1, u2, u3) = (c[0], c[1], c[2]);
    let mut elements = Vec::new();
    if h.has_edge(u1, u3) {
        elements.push(CoverElement::triangle(u1, u2, u3));
    } else {
        elements.push(CoverElement::Star { center: u2, edges: vec![(u1.min(u2), u1.max(u2)), (u2.min(u3), u2.max(u3))] });
    }
    elements.push(CoverElement::full_star(h, c[3]));
    elements.push(CoverElement::full_star(h, c[4]));
    StarTriangleCover { elements }
}

fn outside_vertex_cover(h: &Graph, c: &[usize]) -> Result<StarTriangleCover, ColoringError> {
    let outside: Vec<usize> = (0..h.order()).filter(|v| h.degree(*v) > 0 && !c.contains(v)).collect();
    let &[v] = outside.as_slice() else {
        return Err(ColoringError::Internal(format!("expected one vertex outside the 5-circuit, found {outside:?}")));
    };
    // Rotations first, then reflections: u[i] = c[(r ± i) mod 5], so u[0]
    // plays u1.
    for reflect in [false, true] {
        for r in 0..5 {
            let u: Vec<usize> = (0..5).map(|i| c[if reflect { (r + 5 - i) % 5 } else { (r + i) % 5 }]).collect();
            if let Some(cover) = degree_case(h, v, &u) {
                return Ok(cover);
            }
        }
    }
    Err(ColoringError::Internal(format!("no case applies to vertex {v} against circuit {c:?}")))
}

// The cases of the proof for one labeling u1..u5 (u[0]..u[4]) of the circuit.
// Returns None when this labeling does not match a case's hypotheses.
fn degree_case(h: &Graph, v: usize, u: &[usize]) -> Option<StarTriangleCover> {
    let e = |i: usize, j: usize| h.has_edge(u[i - 1], u[j - 1]);
    let star = |i: usize| CoverElement::full_star(h, u[i - 1]);
    let tri = |i: usize, j: usize, k: usize| CoverElement::triangle(u[i - 1], u[j - 1], u[k - 1]);
    let tri_v = |i: usize, j: usize| CoverElement::triangle(v, u[i - 1], u[j - 1]);
    let mut nbr: Vec<usize> = (1..=5).filter(|&i| h.has_edge(v, u[i - 1])).collect();
    nbr.sort_unstable();
    if h.degree(v) != nbr.len() {
        return None;
    }
    let elements = match nbr.as_slice() {
        [1] if !e(2, 4) => vec![star(1), star(3), star(5)],
        [1] => vec![star(1), star(5), tri(2, 3, 4)],
        [1, 2] if !e(3, 5) => vec![star(1), star(2), star(4)],
        [1, 2] => vec![star(1), star(2), tri(3, 4, 5)],
        [1, 3] if e(2, 5) && e(2, 4) => vec![tri(2, 4, 5), star(1), star(3)],
        [1, 3] if !e(2, 5) => vec![star(1), star(3), star(4)],
        [1, 2, 5] if !e(1, 4) && !e(2, 4) => vec![star(3), star(5), tri_v(1, 2)],
        [1, 2, 5] if !e(1, 4) && !e(1, 3) => vec![star(5), tri_v(1, 2), tri(2, 3, 4)],
        [1, 3, 4] if !e(2, 5) => vec![star(1), star(3), star(4)],
        [1, 3, 4, 5] if !e(2, 4) && !e(2, 5) => vec![tri_v(4, 5), star(1), star(3)],
        _ => return None,
    };
    Some(StarTriangleCover { elements })
}

/// A proper coloring with at most 3 colors of a t-perfect complement of a
/// line graph with no induced `co-L(Π)` or `co-L(W5)`.
///
/// The hypotheses are checked; a violation is reported with its witness.
pub fn three_color_structured(g: &Graph) -> Result<Coloring, ColoringError> {
    let report = t_perfect_col(g);
    let Some(root) = report.root else {
        return Err(ColoringError::NotCoLineGraph);
    };
    if report.t_perfect != Some(true) {
        return Err(ColoringError::NotTPerfect(report.witness.expect("failed verdicts carry a witness")));
    }
    check_forbidden(g)?;
    let cover = structured_cover(&root.root)?;
    cover_to_coloring(&root.root, &cover, g, &root.edge_of)
}

/// Fails when `g` has an induced `co-L(Π)` or `co-L(W5)`.
pub(crate) fn check_forbidden(g: &Graph) -> Result<(), ColoringError> {
    for (name, pattern) in [("co-L(prism)", co_line(&prism())), ("co-L(W5)", co_line(&wheel(5)))] {
        if pattern.order() <= g.order() {
            if let Some(embedding) = contains_induced(g, &pattern) {
                return Err(ColoringError::ContainsForbidden { name, embedding });
            }
        }
    }
    Ok(())
}
