//! The polytope `HSTAB(G)`: non-negativity, clique and odd-circuit
//! inequalities, with exact membership and vertex checks.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::{
    enumerate_cliques, enumerate_simple_cycles, odd_circuit_vertex_sets, omega, shortest_odd_cycle, Graph, GraphError,
    DEFAULT_CYCLE_CAP, ODD_SET_DP_LIMIT,
};

mod rank;
mod rational;

pub use rank::rational_rank;
pub use rational::{format_rational, parse_rational, ParseRationalError, Rational, RationalVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("point has {found} coordinates but the graph has {expected} vertices")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("point is not in HSTAB: violates {0}")]
    NotMember(Box<Constraint>),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ConstraintKind {
    /// `-x_v <= 0`
    NonNegativity(usize),
    /// `x(K) <= 1` for a clique `K`, sorted.
    Clique(Vec<usize>),
    /// `x(C) <= (|C| - 1) / 2` for the sorted vertex set of an odd circuit.
    OddCircuit(Vec<usize>),
}

/// One HSTAB inequality `row · x <= rhs`. Rows have entries in {-1, 0, 1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub kind: ConstraintKind,
    pub n: usize,
    pub rhs: Rational,
}

impl Constraint {
    pub fn non_negativity(n: usize, v: usize) -> Self {
        Constraint { kind: ConstraintKind::NonNegativity(v), n, rhs: Rational::zero() }
    }

    pub fn clique(n: usize, set: Vec<usize>) -> Self {
        Constraint { kind: ConstraintKind::Clique(set), n, rhs: Rational::one() }
    }

    pub fn odd_circuit(n: usize, set: Vec<usize>) -> Self {
        let rhs = Rational::from_integer(((set.len() - 1) / 2).into());
        Constraint { kind: ConstraintKind::OddCircuit(set), n, rhs }
    }

    /// The coefficient row.
    pub fn row(&self) -> Vec<Rational> {
        let mut row = vec![Rational::zero(); self.n];
        match &self.kind {
            ConstraintKind::NonNegativity(v) => row[*v] = -Rational::one(),
            ConstraintKind::Clique(s) | ConstraintKind::OddCircuit(s) => {
                for &v in s {
                    row[v] = Rational::one();
                }
            }
        }
        row
    }

    /// `row · x`.
    pub fn lhs(&self, x: &RationalVector) -> Rational {
        match &self.kind {
            ConstraintKind::NonNegativity(v) => -x.coords[*v].clone(),
            ConstraintKind::Clique(s) | ConstraintKind::OddCircuit(s) => x.sum_over(s),
        }
    }

    pub fn is_satisfied(&self, x: &RationalVector) -> bool {
        self.lhs(x) <= self.rhs
    }

    pub fn is_tight(&self, x: &RationalVector) -> bool {
        self.lhs(x) == self.rhs
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set = |s: &[usize]| s.iter().map(|v| format!("x{v}")).collect::<Vec<_>>().join(" + ");
        match &self.kind {
            ConstraintKind::NonNegativity(v) => write!(f, "x{v} >= 0"),
            ConstraintKind::Clique(s) => write!(f, "clique {} <= 1", set(s)),
            ConstraintKind::OddCircuit(s) => write!(f, "odd circuit {} <= {}", set(s), format_rational(&self.rhs)),
        }
    }
}

/// Vertex sets of all odd circuits, sorted by size then lexicographically.
///
/// Up to [`ODD_SET_DP_LIMIT`] vertices a subset dynamic program finds them
/// directly; beyond that the circuits are enumerated under the default cap.
pub fn odd_circuit_sets(g: &Graph) -> Result<Vec<Vec<usize>>, GraphError> {
    if g.order() <= ODD_SET_DP_LIMIT {
        return odd_circuit_vertex_sets(g);
    }
    let mut sets: Vec<Vec<usize>> = enumerate_simple_cycles(g, None, DEFAULT_CYCLE_CAP)?
        .into_iter()
        .filter(|c| c.is_odd())
        .map(|c| {
            let mut s = c.vertices().to_vec();
            s.sort_unstable();
            s
        })
        .collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    Ok(sets)
}

/// Every inequality of HSTAB(g): non-negativity for each vertex, one clique
/// constraint per nonempty clique (singletons and edges included), one
/// odd-circuit constraint per vertex set of an odd circuit. Triangles appear
/// both as cliques and as odd circuits.
pub fn generate_constraints(g: &Graph) -> Result<Vec<Constraint>, PolytopeError> {
    let n = g.order();
    let mut out: Vec<Constraint> = (0..n).map(|v| Constraint::non_negativity(n, v)).collect();
    out.extend(enumerate_cliques(g).into_iter().map(|k| Constraint::clique(n, k)));
    out.extend(odd_circuit_sets(g)?.into_iter().map(|c| Constraint::odd_circuit(n, c)));
    Ok(out)
}

/// Outcome of a membership test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    /// The first violated inequality in generation order, if any.
    pub violated: Option<Constraint>,
}

impl Membership {
    pub fn is_member(&self) -> bool {
        self.violated.is_none()
    }
}

/// Result of a vertex test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexReport {
    pub member: bool,
    pub violated: Option<Constraint>,
    pub non_integral: bool,
    /// Inequalities holding with equality (empty when `x` is not a member).
    pub tight_constraints: Vec<Constraint>,
    pub rank: usize,
    pub is_vertex: bool,
}

/// The inequality system of HSTAB(g), generated once and reusable for many
/// points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HstabSystem {
    n: usize,
    constraints: Vec<Constraint>,
}

impl HstabSystem {
    pub fn new(g: &Graph) -> Result<Self, PolytopeError> {
        Ok(HstabSystem { n: g.order(), constraints: generate_constraints(g)? })
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    fn check_dimension(&self, x: &RationalVector) -> Result<(), PolytopeError> {
        if x.len() != self.n {
            return Err(PolytopeError::DimensionMismatch { expected: self.n, found: x.len() });
        }
        Ok(())
    }

    pub fn membership(&self, x: &RationalVector) -> Result<Membership, PolytopeError> {
        self.check_dimension(x)?;
        Ok(Membership { violated: self.constraints.iter().find(|c| !c.is_satisfied(x)).cloned() })
    }

    pub fn tight_constraints(&self, x: &RationalVector) -> Result<Vec<Constraint>, PolytopeError> {
        if let Some(c) = self.membership(x)?.violated {
            return Err(PolytopeError::NotMember(Box::new(c)));
        }
        Ok(self.constraints.iter().filter(|c| c.is_tight(x)).cloned().collect())
    }

    /// `x` is a vertex when it satisfies every inequality and the tight ones
    /// have rank `n`.
    pub fn verify_vertex(&self, x: &RationalVector) -> Result<VertexReport, PolytopeError> {
        let violated = self.membership(x)?.violated;
        let member = violated.is_none();
        let tight: Vec<Constraint> =
            if member { self.constraints.iter().filter(|c| c.is_tight(x)).cloned().collect() } else { Vec::new() };
        let rows: Vec<Vec<Rational>> = tight.iter().map(Constraint::row).collect();
        let rank = rational_rank(&rows);
        Ok(VertexReport {
            member,
            violated,
            non_integral: !x.is_integral(),
            is_vertex: member && rank == self.n,
            tight_constraints: tight,
            rank,
        })
    }
}

fn check_dimension(g: &Graph, x: &RationalVector) -> Result<(), PolytopeError> {
    if x.len() != g.order() {
        return Err(PolytopeError::DimensionMismatch { expected: g.order(), found: x.len() });
    }
    Ok(())
}

pub fn hstab_membership(g: &Graph, x: &RationalVector) -> Result<Membership, PolytopeError> {
    check_dimension(g, x)?;
    HstabSystem::new(g)?.membership(x)
}

/// The inequalities satisfied with equality by a member `x`.
pub fn tight_constraints(g: &Graph, x: &RationalVector) -> Result<Vec<Constraint>, PolytopeError> {
    check_dimension(g, x)?;
    HstabSystem::new(g)?.tight_constraints(x)
}

/// Decides whether `x` is a vertex of HSTAB(g).
pub fn verify_hstab_vertex(g: &Graph, x: &RationalVector) -> Result<VertexReport, PolytopeError> {
    check_dimension(g, x)?;
    HstabSystem::new(g)?.verify_vertex(x)
}

/// χ_f of an h-perfect graph: the larger of ω and 2k/(k-1) for the shortest
/// odd circuit length k. Bipartite graphs with an edge give 2, edgeless
/// nonempty graphs 1, the empty graph 0.
///
/// The formula is only valid for h-perfect input; it is not checked.
pub fn fractional_chromatic_hperfect(g: &Graph) -> Rational {
    let w = Rational::from_integer(omega(g).into());
    match shortest_odd_cycle(g) {
        None => w,
        Some(c) => {
            let k = c.len();
            let odd = Rational::new((2 * k).into(), (k - 1).into());
            w.max(odd)
        }
    }
}
