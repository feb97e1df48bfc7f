//! Branch-and-bound over block assignments.
//!
//! Vertices are assigned in index order, each to the existing blocks in
//! creation order and then to a fresh block. The upper bound is the
//! current value plus the sum of positive weights among pairs with an
//! unassigned endpoint. A greedy sequential assignment seeds the
//! incumbent so pruning bites from the start; the all-singletons value 0
//! remains a floor on the reported objective.

use std::time::{Duration, Instant};

use crate::instance::{pairs, Partition, WeightedInstance};

use super::{Engine, SolveMode, SolveReport, SolveStatus};

/// Exploration limits; `None` means unlimited.
#[derive(Debug, Clone, Copy, Default)]
pub struct SolveLimits {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

/// Exact branch-and-bound for the clique partitioning objective. With no
/// limits the result is provably optimal; under limits the best incumbent
/// is returned with a status naming the exhausted budget.
pub fn solve_bnb(inst: &WeightedInstance, limits: SolveLimits) -> SolveReport {
    let started = Instant::now();
    let n = inst.n();

    // residual[d] = sum of positive weights over pairs whose larger
    // endpoint is >= d (exactly the pairs not yet decided at depth d)
    let mut residual = vec![0i64; n + 1];
    for (i, j) in pairs(n) {
        let w = inst.weight(i, j);
        if w > 0 {
            for slot in residual.iter_mut().take(j + 1) {
                *slot += w;
            }
        }
    }

    let (greedy_labels, greedy_value) = greedy_assignment(inst);
    let mut search = Search {
        inst,
        residual: &residual,
        labels: vec![0; n],
        best: greedy_value,
        best_labels: greedy_labels,
        explored: 0,
        limits,
        started,
        stop: None,
    };
    if n > 0 {
        search.descend(1, 1, 0);
    }

    let partition = Partition::from_labels(search.best_labels);
    SolveReport {
        engine: Engine::BranchAndBound,
        kind: None,
        mode: SolveMode::One,
        status: search.stop.unwrap_or(SolveStatus::Optimal),
        objective: search.best,
        original_objective: search.best,
        solutions: vec![partition.to_edges()],
        explored: search.explored,
        elapsed: started.elapsed(),
    }
}

/// Assigns each vertex to the block with the largest gain, or a new block
/// when every gain is negative. Value is always >= 0.
fn greedy_assignment(inst: &WeightedInstance) -> (Vec<usize>, i64) {
    let n = inst.n();
    let mut labels = vec![0usize; n];
    let mut used = if n == 0 { 0 } else { 1 };
    let mut value = 0i64;
    for v in 1..n {
        let mut best_label = used; // new block
        let mut best_gain = 0i64;
        for label in 0..used {
            let gain: i64 = (0..v)
                .filter(|&u| labels[u] == label)
                .map(|u| inst.weight(u, v))
                .sum();
            if gain > best_gain {
                best_gain = gain;
                best_label = label;
            }
        }
        labels[v] = best_label;
        if best_label == used {
            used += 1;
        }
        value += best_gain;
    }
    (labels, value)
}

struct Search<'a> {
    inst: &'a WeightedInstance,
    residual: &'a [i64],
    labels: Vec<usize>,
    best: i64,
    best_labels: Vec<usize>,
    explored: u64,
    limits: SolveLimits,
    started: Instant,
    stop: Option<SolveStatus>,
}

impl Search<'_> {
    fn descend(&mut self, v: usize, used: usize, value: i64) {
        if self.stop.is_some() {
            return;
        }
        self.explored += 1;
        if let Some(cap) = self.limits.node_limit {
            if self.explored > cap {
                self.stop = Some(SolveStatus::NodeLimit);
                return;
            }
        }
        if let Some(cap) = self.limits.time_limit {
            if self.explored.is_multiple_of(4096) && self.started.elapsed() > cap {
                self.stop = Some(SolveStatus::TimeLimit);
                return;
            }
        }
        if v == self.inst.n() {
            if value > self.best {
                self.best = value;
                self.best_labels.copy_from_slice(&self.labels);
            }
            return;
        }
        if value + self.residual[v] <= self.best {
            return;
        }
        for label in 0..=used {
            let gain: i64 = (0..v)
                .filter(|&u| self.labels[u] == label)
                .map(|u| self.inst.weight(u, v))
                .sum();
            self.labels[v] = label;
            self.descend(v + 1, used.max(label + 1), value + gain);
        }
    }
}
