//! Beck graphs of finite commutative rings.
//!
//! Vertices are all ring elements; two distinct elements are adjacent when
//! their product is zero. This crate builds those graphs, computes exact
//! clique and chromatic numbers with certificates, and evaluates the product
//! formulas that relate the invariants of a direct product to those of its
//! factors.

pub mod catalog;
pub mod dsl;
pub mod error;
pub mod graph;
pub mod ring;
pub mod solvers;
pub mod suite;
pub mod theorems;

pub use error::{BudgetExceeded, Error, Result};
pub use graph::{BeckGraph, CoreGraph, Graph};
pub use ring::{Elem, FiniteRing};
