//! Clique and independence numbers across degree-equivalence classes of
//! complete multipartite graphs and disjoint unions of cliques.
//!
//! A graph with the degree sequence of `K_{a_1,...,a_k}` has clique number
//! exactly `k` only when it *is* `K_{a_1,...,a_k}`; every other realization
//! has a `(k+1)`-clique. Dually, a non-canonical realization of the degree
//! sequence of `K_{a_1} ∪ ... ∪ K_{a_k}` has an independent set of size
//! `k + 1`. This crate provides recognition of both families, exact solvers,
//! the classical lower bounds, a constructive witness for the `k + 1` bound,
//! and an exhaustive realization enumerator used to check all of it.

pub mod bounds;
pub mod error;
pub mod exact;
pub mod graph;
pub mod harness;
pub mod realizations;
pub mod recognition;
pub mod witness;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use recognition::{DegreeSequence, Flavor, PartitionProfile};

/// Counts elementary steps of an algorithm so tests can check its growth.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct OpCounter(pub u64);

impl OpCounter {
    #[inline]
    pub fn tick(&mut self, k: u64) {
        self.0 += k;
    }

    pub fn get(&self) -> u64 {
        self.0
    }
}
