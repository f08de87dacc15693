//! Exact combinatorics for Turán numbers of odd-balloonings.
//!
//! The crate builds odd-balloonings and their cracking families, evaluates
//! the closed-form extremal predictions for `K_1 ∇ F•` skeletons, and checks
//! them at small scale against brute-force oracles.

pub mod ballooning;
pub mod battery;
pub mod constructions;
pub mod cracking;
pub mod error;
pub mod extremal;
pub mod formulas;
pub mod graph;

pub use error::{Error, Result};
pub use graph::family::GraphFamily;
pub use graph::Graph;
