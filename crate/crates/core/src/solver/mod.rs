//! Exact solution and verification machinery: a partition-enumeration
//! oracle, 0-1 vector brute force over arbitrary constraint sets, a
//! branch-and-bound solver, and the reduction verifiers that cross-check
//! every formulation against the oracles.

use std::time::Duration;

use crate::formulation::FormulationKind;
use crate::instance::EdgeVector;

mod bnb;
mod oracle;
mod vectors;
mod verify;

pub use bnb::{solve_bnb, SolveLimits};
pub use oracle::solve_oracle;
pub use vectors::solve_vectors;
pub use verify::{
    verify_component_conditions, verify_reduction_pipeline, verify_optimal_set_equality, ComponentCheck, CutCheck,
    ComponentConditionsReport, ReductionFailure, ReductionReport, OptimalSetReport,
};

/// Which engine produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Oracle,
    Vectors,
    BranchAndBound,
}

impl Engine {
    pub fn as_str(self) -> &'static str {
        match self {
            Engine::Oracle => "oracle",
            Engine::Vectors => "vectors",
            Engine::BranchAndBound => "bnb",
        }
    }
}

impl std::fmt::Display for Engine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMode {
    /// Report one optimal solution (the first found in enumeration order).
    One,
    /// Report the complete optimal set, duplicate-free and lex-sorted.
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Optimal,
    NodeLimit,
    TimeLimit,
}

impl SolveStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveStatus::Optimal => "optimal",
            SolveStatus::NodeLimit => "node_limit",
            SolveStatus::TimeLimit => "time_limit",
        }
    }
}

impl std::fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one solve.
///
/// `objective` is in the scale of the weights the engine maximized
/// (perturbation-scaled for the strict kinds); `original_objective` is
/// always in the instance's own scale. For unscaled solves the two agree.
/// Comparisons against the oracle must use `original_objective`.
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub engine: Engine,
    /// Formulation solved, when the engine ran over a constraint set.
    pub kind: Option<FormulationKind>,
    pub mode: SolveMode,
    pub status: SolveStatus,
    pub objective: i64,
    pub original_objective: i64,
    /// One optimum, or the complete optimal set when `mode` is `All` and
    /// the status is `Optimal` (lex-sorted, duplicate-free).
    pub solutions: Vec<EdgeVector>,
    /// Enumeration or branch-node count. Equal inputs and limits explore
    /// equally, except that a wall-clock cutoff stops wherever time ran
    /// out.
    pub explored: u64,
    pub elapsed: Duration,
}

impl SolveReport {
    /// First (lex-least) reported solution.
    pub fn solution(&self) -> &EdgeVector {
        &self.solutions[0]
    }
}
