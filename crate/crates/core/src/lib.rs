//! Minimal reflection factorizations of Coxeter elements in types A, B and D.
//!
//! The crate covers exact group arithmetic ([`group`]), enumeration and
//! one-way classification of factorizations ([`factorization`]), chord
//! diagrams and their planar duals ([`diagrams`]), Goulden-Yong style tree
//! bijections ([`goulden_yong`]), Prüfer codes ([`prufer`]) and Laplacian
//! determinants ([`matrix_tree`]).

pub mod diagrams;
pub mod error;
pub mod factorization;
pub mod goulden_yong;
pub mod group;
pub mod linalg;
pub mod matrix_tree;
pub mod prufer;
pub mod trees;

pub use error::{Error, Result};
pub use factorization::{MinimalFactorization, OneWayProfile, SignedFactorization};
pub use group::{Family, GroupElement, Reflection, Root, RootSystem};
pub use trees::{LoopedTree, RootedLabeledTree, UnicyclicRootedGraph};
