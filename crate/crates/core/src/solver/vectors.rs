//! Brute force over all 0-1 edge vectors against an arbitrary constraint
//! set. This is the engine behind the optimal-set comparisons: it sees
//! every vector, so "the complete optimal set" means exactly that.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::formulation::ConstraintSet;
use crate::instance::{pair_count, pair_index, EdgeVector};

use super::{Engine, SolveMode, SolveReport, SolveStatus};

/// 2^C(7,2) = 2^21 vectors; larger n would no longer enumerate in
/// reasonable time.
const MAX_VECTORS_N: usize = 7;

/// Maximizes the set's objective weights over all `2^C(n,2)` vectors that
/// satisfy its constraints.
pub fn solve_vectors(cs: &ConstraintSet, mode: SolveMode) -> Result<SolveReport> {
    let n = cs.n();
    if n > MAX_VECTORS_N {
        return Err(Error::SizeCap { engine: "vector enumeration", n, max: MAX_VECTORS_N });
    }
    let started = Instant::now();
    let m = pair_count(n);

    // (lhs pair mask, rhs bit): violated iff both lhs bits set, rhs unset
    let masks: Vec<(u64, u64)> = cs
        .constraints()
        .iter()
        .map(|c| {
            let (a1, b1) = c.lhs_a();
            let (a2, b2) = c.lhs_b();
            let (r1, r2) = c.rhs();
            let lhs = 1u64 << pair_index(n, a1, b1) | 1u64 << pair_index(n, a2, b2);
            (lhs, 1u64 << pair_index(n, r1, r2))
        })
        .collect();
    let weights = cs.objective_weights();

    let mut best = i64::MIN;
    let mut optimal_masks: Vec<u64> = Vec::new();
    for mask in 0..1u64 << m {
        if masks.iter().any(|&(lhs, rhs)| mask & lhs == lhs && mask & rhs == 0) {
            continue;
        }
        let mut value = 0i64;
        let mut bits = mask;
        while bits != 0 {
            value += weights[bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        if value > best {
            best = value;
            optimal_masks.clear();
        }
        if value == best && (optimal_masks.is_empty() || mode == SolveMode::All) {
            optimal_masks.push(mask);
        }
    }

    let mut solutions: Vec<EdgeVector> =
        optimal_masks.iter().map(|&mask| EdgeVector::from_mask(n, mask)).collect();
    solutions.sort();
    // all optima share one original-scale value: the scaling factor
    // exceeds any possible edge-count difference
    let original_objective = original_value(cs, &solutions[0]);
    Ok(SolveReport {
        engine: Engine::Vectors,
        kind: Some(cs.kind()),
        mode,
        status: SolveStatus::Optimal,
        objective: best,
        original_objective,
        solutions,
        explored: 1 << m,
        elapsed: started.elapsed(),
    })
}

fn original_value(cs: &ConstraintSet, x: &EdgeVector) -> i64 {
    cs.original_weights()
        .iter()
        .zip(x.bits())
        .filter(|(_, &b)| b)
        .map(|(&w, _)| w)
        .sum()
}
