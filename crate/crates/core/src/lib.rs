//! Regular generalized Turán numbers at desk scale.
//!
//! `rex(n, H, F)` is the largest number of copies of `H` in an `F`-free regular
//! graph on `n` vertices. This crate builds the extremal and near-extremal
//! families for that quantity, counts pattern copies in them, and checks the
//! closed forms against an exhaustive isomorph-free enumeration of regular
//! graphs.

pub(crate) mod bigstr;
pub mod bitset;
pub mod canon;
pub mod constructions;
pub mod graph;
pub mod io;
pub mod named;
pub mod oracle;
pub mod patterns;

pub use graph::{blowup, Blowup, BlowupSpec, EdgeList, Graph, GraphError, ORDER_CAP};
