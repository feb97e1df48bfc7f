//! Ground-truth solver by exhaustive set-partition enumeration.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::instance::{Partition, WeightedInstance};

use super::{Engine, SolveMode, SolveReport, SolveStatus};

/// Bell(13) is about 2.8e7; beyond that enumeration stops being a usable
/// oracle.
const MAX_ORACLE_N: usize = 13;

/// Maximizes total within-block weight over every set partition of the
/// vertices, enumerated as restricted-growth strings in lex order.
pub fn solve_oracle(inst: &WeightedInstance, mode: SolveMode) -> Result<SolveReport> {
    let n = inst.n();
    if n > MAX_ORACLE_N {
        return Err(Error::SizeCap { engine: "partition oracle", n, max: MAX_ORACLE_N });
    }
    let started = Instant::now();

    let mut search = Search {
        inst,
        mode,
        labels: vec![0; n],
        best: i64::MIN,
        best_partitions: Vec::new(),
        explored: 0,
    };
    // vertex 0 is always labeled 0; enumerate the rest
    search.descend(1, 1, 0);

    let mut solutions: Vec<_> =
        search.best_partitions.iter().map(Partition::to_edges).collect();
    solutions.sort();
    Ok(SolveReport {
        engine: Engine::Oracle,
        kind: None,
        mode,
        status: SolveStatus::Optimal,
        objective: search.best,
        original_objective: search.best,
        solutions,
        explored: search.explored,
        elapsed: started.elapsed(),
    })
}

struct Search<'a> {
    inst: &'a WeightedInstance,
    mode: SolveMode,
    labels: Vec<usize>,
    best: i64,
    best_partitions: Vec<Partition>,
    explored: u64,
}

impl Search<'_> {
    /// Extends the restricted-growth prefix `labels[..v]` (using labels
    /// `0..used`) by assigning vertex `v` to each existing block in label
    /// order and then to a new block.
    fn descend(&mut self, v: usize, used: usize, value: i64) {
        if v == self.inst.n() {
            self.explored += 1;
            self.record(value);
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

    fn record(&mut self, value: i64) {
        if value > self.best {
            self.best = value;
            self.best_partitions.clear();
        }
        if value == self.best {
            let keep_all = self.mode == SolveMode::All;
            if self.best_partitions.is_empty() || keep_all {
                self.best_partitions.push(Partition::from_labels(self.labels.clone()));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::EdgeVector;

    fn triangle(w01: i64, w02: i64, w12: i64) -> WeightedInstance {
        WeightedInstance::from_weights(3, vec![w01, w02, w12]).unwrap()
    }

    #[test]
    fn triangle_optimal_set() {
        // w01 = 1, w12 = 1, w02 = -1: value 1, three optimal partitions
        let rep = solve_oracle(&triangle(1, -1, 1), SolveMode::All).unwrap();
        assert_eq!(rep.objective, 1);
        assert_eq!(rep.explored, 5); // Bell(3)
        let mut expected = vec![
            EdgeVector::ones(3),
            EdgeVector::from_pairs(3, &[(0, 1)]),
            EdgeVector::from_pairs(3, &[(1, 2)]),
        ];
        expected.sort();
        assert_eq!(rep.solutions, expected);
    }

    #[test]
    fn all_negative_yields_singletons() {
        let inst = WeightedInstance::from_weights(4, vec![-1; 6]).unwrap();
        let rep = solve_oracle(&inst, SolveMode::All).unwrap();
        assert_eq!(rep.objective, 0);
        assert_eq!(rep.solutions, vec![EdgeVector::zeros(4)]);
        assert_eq!(rep.explored, 15); // Bell(4)
    }

    #[test]
    fn all_positive_yields_single_block() {
        let inst = WeightedInstance::from_weights(5, vec![1; 10]).unwrap();
        let rep = solve_oracle(&inst, SolveMode::One).unwrap();
        assert_eq!(rep.objective, 10);
        assert_eq!(rep.solutions, vec![EdgeVector::ones(5)]);
    }

    #[test]
    fn size_cap_is_named() {
        let inst = WeightedInstance::from_weights(14, vec![0; 91]).unwrap();
        match solve_oracle(&inst, SolveMode::One) {
            Err(Error::SizeCap { n: 14, max: 13, .. }) => {}
            other => panic!("expected size cap error, got {other:?}"),
        }
    }

    #[test]
    fn planted_partition_is_unique_optimum_at_saturation() {
        // within-cluster +1 and cross-cluster -1 everywhere: the planted
        // partition is the one and only maximizer
        use crate::generator::{gen_structured, Probability};
        for (n, k) in [(6, 2), (9, 3), (10, 5)] {
            let inst = gen_structured(n, k, Probability::new(1, 1).unwrap(), 7).unwrap();
            let rep = solve_oracle(&inst, SolveMode::All).unwrap();
            assert_eq!(rep.solutions, vec![inst.ground_truth().unwrap().to_edges()]);
        }
    }

    #[test]
    fn explored_counts_bell_numbers() {
        for (n, bell) in [(1, 1u64), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203), (7, 877)] {
            let inst =
                WeightedInstance::from_weights(n, vec![0; crate::instance::pair_count(n)]).unwrap();
            assert_eq!(solve_oracle(&inst, SolveMode::One).unwrap().explored, bell);
        }
    }
}
