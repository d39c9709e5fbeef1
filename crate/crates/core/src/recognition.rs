//! Recognition of h-perfect and t-perfect graphs among complements of line
//! graphs.
//!
//! For a simple graph `H`, the complement of `L(H)` is h-perfect exactly
//! when
//!
//! 1. every edge of `H` has an end in every circuit of length 5, and
//! 2. every odd circuit of `H` has length at most 5.
//!
//! It is t-perfect when it is moreover K4-free, that is when `ν(H) <= 3`.

use std::ops::ControlFlow;

use crate::graph::{for_each_simple_cycle, maximum_cliques, root_graph, Cycle, Graph, GraphError, RootGraph, DEFAULT_CYCLE_CAP};

/// Why a graph fails h- or t-perfection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// An odd circuit of the root graph of length at least 7.
    LongOddCircuit(Cycle),
    /// An edge of the root graph with no end on a 5-circuit of it.
    EdgeMissesFiveCircuit { edge: (usize, usize), circuit: Cycle },
    /// Four pairwise adjacent vertices of the input graph.
    K4([usize; 4]),
}

impl Witness {
    /// Re-checks the witness: `root` for the first two kinds, `g` for K4.
    pub fn is_valid(&self, root: &Graph, g: &Graph) -> bool {
        match self {
            Witness::LongOddCircuit(c) => c.is_odd() && c.len() >= 7 && c.is_circuit_of(root),
            Witness::EdgeMissesFiveCircuit { edge: (a, b), circuit } => {
                circuit.len() == 5 && circuit.is_circuit_of(root) && root.has_edge(*a, *b) && !circuit.contains(*a) && !circuit.contains(*b)
            }
            Witness::K4(k) => g.is_clique(k) && k.iter().enumerate().all(|(i, a)| !k[i + 1..].contains(a)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognitionReport {
    pub is_complement_of_line_graph: bool,
    /// A root `H` with `L(H)` isomorphic to the complement of the input.
    pub root: Option<RootGraph>,
    pub h_perfect: Option<bool>,
    /// Left unset by [`h_perfect_col`].
    pub t_perfect: Option<bool>,
    pub witness: Option<Witness>,
}

impl RecognitionReport {
    fn not_co_line() -> Self {
        RecognitionReport { is_complement_of_line_graph: false, root: None, h_perfect: None, t_perfect: None, witness: None }
    }
}

fn five_circuit_violation(h: &Graph, c: &[usize]) -> Option<Witness> {
    h.edges()
        .into_iter()
        .find(|&(a, b)| !c.contains(&a) && !c.contains(&b))
        .map(|edge| Witness::EdgeMissesFiveCircuit { edge, circuit: Cycle::new(c.to_vec()) })
}

/// Checks both conditions on `h` by listing every circuit of `h`.
///
/// Returns `None` when they hold, otherwise the first violation found. This
/// is the direct route; [`h_perfect_col`] takes the staged one.
pub fn check_root_conditions(h: &Graph) -> Result<Option<Witness>, GraphError> {
    let mut seen = 0usize;
    let mut found = None;
    let mut over = false;
    for_each_simple_cycle(h, None, |c| {
        seen += 1;
        if seen > DEFAULT_CYCLE_CAP {
            over = true;
            return ControlFlow::Break(());
        }
        if c.len() % 2 == 1 && c.len() >= 7 {
            found = Some(Witness::LongOddCircuit(Cycle::new(c.to_vec())));
        } else if c.len() == 5 {
            found = five_circuit_violation(h, c);
        }
        if found.is_some() {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    if over {
        return Err(GraphError::CycleCapExceeded { cap: DEFAULT_CYCLE_CAP });
    }
    Ok(found)
}

// First circuit (in enumeration order) of length at most `max_len` accepted
// by `want`.
fn find_circuit(h: &Graph, max_len: Option<usize>, want: impl Fn(usize) -> bool) -> Option<Cycle> {
    let mut found = None;
    for_each_simple_cycle(h, max_len, |c| {
        if want(c.len()) {
            found = Some(Cycle::new(c.to_vec()));
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    found
}

// The staged test on a root graph: look for any odd circuit of length >= 5;
// a long one decides, a 5-circuit leads to checking condition 1 and then,
// since condition 1 with a 5-circuit bounds every circuit by 10, to looking
// for circuits of length 7 or 9 only.
fn staged_root_test(h: &Graph) -> Option<Witness> {
    let first = find_circuit(h, None, |k| k % 2 == 1 && k >= 5)?;
    if first.len() >= 7 {
        return Some(Witness::LongOddCircuit(first));
    }
    let mut violation = None;
    for_each_simple_cycle(h, Some(5), |c| {
        if c.len() == 5 {
            violation = five_circuit_violation(h, c);
        }
        if violation.is_some() {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    if violation.is_some() {
        return violation;
    }
    find_circuit(h, Some(9), |k| k == 7 || k == 9).map(Witness::LongOddCircuit)
}

/// Decides h-perfection of `g` when its complement is a line graph.
///
/// Verdicts are left unset when the complement is not a line graph.
pub fn h_perfect_col(g: &Graph) -> RecognitionReport {
    let Some(root) = root_graph(&g.complement()) else {
        return RecognitionReport::not_co_line();
    };
    let witness = staged_root_test(&root.root);
    RecognitionReport {
        is_complement_of_line_graph: true,
        h_perfect: Some(witness.is_none()),
        t_perfect: None,
        witness,
        root: Some(root),
    }
}

/// h-perfection plus K4-freeness.
pub fn t_perfect_col(g: &Graph) -> RecognitionReport {
    let mut report = h_perfect_col(g);
    if report.h_perfect == Some(true) {
        let k4 = maximum_cliques(g).into_iter().find(|k| k.len() >= 4).map(|k| [k[0], k[1], k[2], k[3]]);
        report.t_perfect = Some(k4.is_none());
        report.witness = k4.map(Witness::K4);
    } else if report.h_perfect == Some(false) {
        report.t_perfect = Some(false);
    }
    report
}
