//! t-perfect and h-perfect graphs whose complements are line graphs.
//!
//! * [`graph`]: the graph type and the exact combinatorial routines behind
//!   everything else (cliques, matchings, cycles, ear decompositions, line
//!   graph roots, exact coloring, induced subgraph search).
//! * [`graph6`]: the graph6 codec and the `i: [j, ...]` adjacency notation.
//! * [`polytope`]: HSTAB inequalities in exact rational arithmetic,
//!   membership, and vertex certificates.
//! * [`recognition`]: h- and t-perfection of complements of line graphs.
//! * [`coloring`]: star–triangle covers, the structured 3-coloring, the
//!   4-coloring, and colorings with `⌈χ_f⌉` colors.
//! * [`certificates`]: corpus files of certificates and their verification,
//!   with the 80-graph corpus built in.
//!
//! ```
//! use tperfect::graph6::decode_graph6;
//! use tperfect::polytope::{verify_hstab_vertex, RationalVector};
//!
//! let w5 = decode_graph6("EUZw").unwrap();
//! let z: RationalVector = "2/5,2/5,2/5,2/5,2/5,1/5".parse().unwrap();
//! let report = verify_hstab_vertex(&w5, &z).unwrap();
//! assert!(report.member && report.non_integral && report.is_vertex);
//! ```

pub mod certificates;
pub mod coloring;
pub mod graph;
pub mod graph6;
pub mod polytope;
pub mod recognition;
