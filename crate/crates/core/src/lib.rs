//! Exact toolkit for the clique partitioning problem (CPP): partition the
//! vertices of a complete integer-weighted graph to maximize the total
//! weight inside blocks.
//!
//! The crate builds the 0-1 formulations of the CPP whose constraints are
//! the `3 * C(n,3)` transitivity inequalities, reduces them by weight-sign
//! rules (including the pair-sum rule `w_ij + w_jk >= 0` and its exact
//! integer perturbation), solves small instances exactly by partition or
//! vector enumeration and larger ones by branch-and-bound, cross-verifies
//! every reduction against the brute-force oracles, and exports models in
//! CPLEX LP format for external MILP solvers.
//!
//! Everything is integer-exact and deterministic: generators derive from a
//! documented seeded PRNG, constraint sets and files are emitted in fixed
//! lex orders, and equal configs reproduce equal bytes.

pub mod error;
pub mod export;
pub mod fileio;
pub mod formulation;
pub mod generator;
pub mod instance;
pub mod rng;
pub mod solver;

pub use error::{Error, Result};
pub use formulation::{
    build_constraints, count_constraints, expected_count, keeps, perturb_scale, total_triples,
    ConstraintSet, FormulationKind, ScaledInstance, TransitivityConstraint,
};
pub use generator::{
    gen_modularity, gen_random, gen_sparse, gen_structured, GeneratorConfig, Probability,
};
pub use instance::{Component, EdgeVector, Family, Partition, WeightedInstance};
