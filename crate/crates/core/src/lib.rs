//! Generalized duality for arbitrary integer rank functions on
//! finite ground sets.
//!
//! The central object is the [`RankTable`], an explicit `r : 2^S → Z`. On top
//! of it this crate provides duality, deletion, contraction, minors and
//! direct sums ([`ops`]), the two-variable Tutte function ([`tutte`]), axiom
//! checkers with counterexample witnesses ([`axioms`]), tables realized from
//! rooted graphs and trees ([`structures`]) and exhaustive enumeration of
//! small tables ([`enumerate`], [`census`]).
//!
//! The crate is `no_std` and needs only `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod axioms;
pub mod census;
pub mod enumerate;
mod error;
pub mod fixtures;
pub mod ground;
pub mod ops;
pub mod poly;
pub mod structures;
pub mod tutte;

pub use axioms::{
    check_antimatroid, check_demimatroid_characterization, check_demimatroid_triple,
    check_dual_greedoid, check_greedoid, check_matroid, feasible_descriptors, Axiom,
    AxiomReport, DemiTriple, FeasibleDescriptors, FeasibleFamily, System, Witness,
};
pub use enumerate::{enumerate_tables, Constraint, EnumSpec};
pub use error::{Error, Result};
pub use ground::{validate, GroundSet, RankTable, Subset, ValidationReport};
pub use ops::{contract, delete, direct_sum, dual, minor, MinorSpec};
pub use poly::LaurentPoly2;
pub use structures::{
    branching_greedoid, convex_closure, greedoid_minor_feasible, pruning_antimatroid,
    root_adjacency_test, uniform_matroid, FullAntimatroid, MinorKind, RootedGraph, Tree,
};
pub use tutte::{swap_vars, tutte_recursive, tutte_subset, Pivot, PivotStrategy};
