//! The chapters of the guide in `book/`, compiled so that their code
//! blocks run as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}
#[doc = include_str!("../../../book/src/line-graphs.md")]
pub mod line_graphs {}
#[doc = include_str!("../../../book/src/polytope.md")]
pub mod polytope {}
#[doc = include_str!("../../../book/src/recognition.md")]
pub mod recognition {}
#[doc = include_str!("../../../book/src/coloring.md")]
pub mod coloring {}
#[doc = include_str!("../../../book/src/corpus.md")]
pub mod corpus {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
