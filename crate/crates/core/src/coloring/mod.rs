//! Colorings of complements of line graphs through star–triangle covers of
//! their roots.
//!
//! A vertex of `co-L(H)` is an edge of `H`, and a stable set of `co-L(H)` is
//! a set of pairwise incident edges of `H`: a star or a triangle. So a
//! k-coloring of `co-L(H)` is the same thing as a cover of `E(H)` by k stars
//! and triangles.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::recognition::Witness;

mod chif;
mod cm;
mod structured;

pub use crate::graph::Coloring;
pub use chif::{ceil_chif_coloring, four_color_col, stable_set_hitting_max_cliques};
pub use cm::{cm_cover, spanning_c5, CMCover};
pub use structured::{structured_cover, three_color_structured};

/// Largest edge count accepted by [`gamma_exact`].
pub const GAMMA_EDGE_LIMIT: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("the complement of the input is not a line graph")]
    NotCoLineGraph,
    #[error("the input is not h-perfect: {0:?}")]
    NotHPerfect(Witness),
    #[error("the input is not t-perfect: {0:?}")]
    NotTPerfect(Witness),
    #[error("the input contains {name} as an induced subgraph at {embedding:?}")]
    ContainsForbidden { name: &'static str, embedding: Vec<usize> },
    #[error("maximum matching of the root has size {0}, above 3")]
    MatchingTooLarge(usize),
    #[error("invalid cover: {0}")]
    InvalidCover(String),
    #[error("no spanning 5-circuit: {0}")]
    NoSpanningC5(String),
    #[error("{side} side of vertex {vertex} is not bipartite: odd circuit {circuit:?}")]
    NotBipartite { vertex: usize, side: &'static str, circuit: Vec<usize> },
    #[error("no stable set meets every maximum clique")]
    NoHittingStableSet,
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A star (a set of edges at one center) or the three edges of a triangle.
/// Edges are stored as `(a, b)` with `a < b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CoverElement {
    Star { center: usize, edges: Vec<(usize, usize)> },
    Triangle([usize; 3]),
}

fn edge(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

impl CoverElement {
    /// All edges of `h` at `center`.
    pub fn full_star(h: &Graph, center: usize) -> Self {
        CoverElement::Star { center, edges: h.neighbors(center).iter().map(|&w| edge(center, w)).collect() }
    }

    pub fn triangle(a: usize, b: usize, c: usize) -> Self {
        let mut t = [a, b, c];
        t.sort_unstable();
        CoverElement::Triangle(t)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        match self {
            CoverElement::Star { edges, .. } => edges.clone(),
            CoverElement::Triangle([a, b, c]) => vec![edge(*a, *b), edge(*a, *c), edge(*b, *c)],
        }
    }

    pub fn contains(&self, e: (usize, usize)) -> bool {
        let e = edge(e.0, e.1);
        match self {
            CoverElement::Star { edges, .. } => edges.contains(&e),
            CoverElement::Triangle(t) => t.contains(&e.0) && t.contains(&e.1),
        }
    }

    /// The edges exist in `h` and are incident to the center, or form a
    /// triangle.
    pub fn is_valid_in(&self, h: &Graph) -> bool {
        let present = self.edges().iter().all(|&(a, b)| a < h.order() && b < h.order() && h.has_edge(a, b));
        match self {
            CoverElement::Star { center, edges } => present && edges.iter().all(|&(a, b)| a == *center || b == *center),
            CoverElement::Triangle([a, b, c]) => present && a != b && b != c,
        }
    }
}

impl fmt::Display for CoverElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverElement::Star { center, edges } => {
                let others: Vec<String> = edges.iter().map(|&(a, b)| (if a == *center { b } else { a }).to_string()).collect();
                write!(f, "star {center} -> [{}]", others.join(", "))
            }
            CoverElement::Triangle([a, b, c]) => write!(f, "triangle {a} {b} {c}"),
        }
    }
}

/// A set of stars and triangles meant to cover every edge of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StarTriangleCover {
    pub elements: Vec<CoverElement>,
}

impl StarTriangleCover {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Index of the first element containing `e`.
    pub fn first_containing(&self, e: (usize, usize)) -> Option<usize> {
        self.elements.iter().position(|el| el.contains(e))
    }

    /// Every element is valid in `h` and every edge of `h` is covered.
    pub fn is_cover_of(&self, h: &Graph) -> bool {
        self.elements.iter().all(|el| el.is_valid_in(h)) && h.edges().into_iter().all(|e| self.first_containing(e).is_some())
    }
}

/// γ(h), the least number of stars and triangles covering `E(h)`, with an
/// optimal cover made of full stars and triangles.
///
/// Iterative deepening: the lowest uncovered edge must be covered by the
/// full star at one of its ends or by a triangle through it.
pub fn gamma_exact(h: &Graph) -> Result<(usize, StarTriangleCover), ColoringError> {
    let edges = h.edges();
    if edges.len() > GAMMA_EDGE_LIMIT {
        return Err(GraphError::TooLarge { op: "gamma_exact (edges)", n: edges.len(), limit: GAMMA_EDGE_LIMIT }.into());
    }
    let index = |e: (usize, usize)| edges.binary_search(&e).expect("edge of h");
    let mut candidates: Vec<(CoverElement, u64)> = Vec::new();
    for v in 0..h.order() {
        if h.degree(v) > 0 {
            let el = CoverElement::full_star(h, v);
            let mask = el.edges().into_iter().fold(0u64, |m, e| m | 1 << index(e));
            candidates.push((el, mask));
        }
    }
    for (a, b) in h.edges() {
        for &c in h.neighbors(b) {
            if c > b && h.has_edge(a, c) {
                let el = CoverElement::triangle(a, b, c);
                let mask = el.edges().into_iter().fold(0u64, |m, e| m | 1 << index(e));
                candidates.push((el, mask));
            }
        }
    }
    let full = if edges.len() == 64 { u64::MAX } else { (1u64 << edges.len()) - 1 };
    let mut chosen = Vec::new();
    for k in 0.. {
        if cover_search(&candidates, full, 0, k, &mut chosen) {
            let elements = chosen.iter().map(|&i| candidates[i].0.clone()).collect();
            return Ok((k, StarTriangleCover { elements }));
        }
    }
    unreachable!()
}

fn cover_search(candidates: &[(CoverElement, u64)], full: u64, covered: u64, budget: usize, chosen: &mut Vec<usize>) -> bool {
    if covered == full {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let first = (!covered & full).trailing_zeros();
    for (i, (_, mask)) in candidates.iter().enumerate() {
        if mask >> first & 1 == 1 {
            chosen.push(i);
            if cover_search(candidates, full, covered | mask, budget - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Turns a cover of `h` into a coloring of `g`, where `edge_of[x]` is the
/// edge of `h` standing for vertex `x` of `g`. Each vertex gets the index
/// of the first element containing its edge; colors are then renumbered
/// in order of first use.
///
/// Fails if an edge is uncovered, an element is not a star or triangle of
/// `h`, or the result is not proper in `g` (which happens only when `g` is
/// not the complement of `L(h)` under `edge_of`).
pub fn cover_to_coloring(
    h: &Graph,
    cover: &StarTriangleCover,
    g: &Graph,
    edge_of: &[(usize, usize)],
) -> Result<Coloring, ColoringError> {
    if edge_of.len() != g.order() {
        return Err(ColoringError::InvalidCover(format!("{} edges for {} vertices", edge_of.len(), g.order())));
    }
    if let Some(el) = cover.elements.iter().find(|el| !el.is_valid_in(h)) {
        return Err(ColoringError::InvalidCover(format!("`{el}` is not a star or triangle of the root")));
    }
    let colors = edge_of
        .iter()
        .map(|&e| cover.first_containing(e).ok_or_else(|| ColoringError::InvalidCover(format!("edge {e:?} is not covered"))))
        .collect::<Result<Vec<_>, _>>()?;
    let coloring = Coloring::new(colors).compacted();
    if !coloring.is_proper(g) {
        return Err(ColoringError::InvalidCover("the graph is not the complement of the line graph of the root".into()));
    }
    Ok(coloring)
}
