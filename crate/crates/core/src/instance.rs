//! Complete weighted graphs, 0-1 edge vectors, vertex partitions, and the
//! operations connecting them: objective evaluation, transitivity tests,
//! component extraction, and the transitive-closure repair step.
//!
//! All weights are exact 64-bit integers. Instances are bounded to
//! `n <= 64` vertices and `|w| <= 2^20` per edge so that every objective
//! and cut sum in the toolkit, including sums over perturbation-scaled
//! weights, fits in `i64` with room to spare.

use crate::error::{Error, Result};

/// Hard cap on vertex count.
pub const MAX_VERTICES: usize = 64;
/// Per-edge weight bound enforced before perturbation scaling.
pub const MAX_ABS_WEIGHT: i64 = 1 << 20;

/// Number of unordered vertex pairs on `n` vertices.
pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Linear index of the unordered pair `{i,j}` with `i < j < n`.
///
/// Pairs are laid out in (i,j)-lex order: (0,1), (0,2), ..., (0,n-1),
/// (1,2), ... Every module in this crate shares this addressing.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// All pairs `(i, j)` with `i < j < n` in lex order, matching `pair_index`.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// Instance family labels carried through generation, files, and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Random,
    Sparse,
    Structured,
    Modularity,
    Custom,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Random => "random",
            Family::Sparse => "sparse",
            Family::Structured => "structured",
            Family::Modularity => "modularity",
            Family::Custom => "custom",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "random" => Some(Family::Random),
            "sparse" => Some(Family::Sparse),
            "structured" => Some(Family::Structured),
            "modularity" => Some(Family::Modularity),
            "custom" => Some(Family::Custom),
            _ => None,
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A complete undirected graph on `n` vertices with one integer weight per
/// unordered pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedInstance {
    n: usize,
    weights: Vec<i64>,
    family: Option<Family>,
    seed: Option<u64>,
    /// Planted partition, recorded by the structured generator.
    ground_truth: Option<Partition>,
}

impl WeightedInstance {
    /// Builds an instance from weights in `pair_index` order.
    pub fn from_weights(n: usize, weights: Vec<i64>) -> Result<Self> {
        if !(1..=MAX_VERTICES).contains(&n) {
            return Err(Error::VertexCountRange { n, min: 1, max: MAX_VERTICES });
        }
        if weights.len() != pair_count(n) {
            return Err(Error::WeightCount { n, expected: pair_count(n), got: weights.len() });
        }
        for (idx, &w) in weights.iter().enumerate() {
            if w.abs() > MAX_ABS_WEIGHT {
                let (i, j) = pairs(n).nth(idx).unwrap();
                return Err(Error::WeightOutOfBounds { i, j, w, bound: MAX_ABS_WEIGHT });
            }
        }
        Ok(WeightedInstance { n, weights, family: None, seed: None, ground_truth: None })
    }

    pub fn with_family(mut self, family: Family) -> Self {
        self.family = Some(family);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_ground_truth(mut self, p: Partition) -> Self {
        self.ground_truth = Some(p);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Weight of the unordered pair `{i,j}`.
    pub fn weight(&self, i: usize, j: usize) -> i64 {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.weights[pair_index(self.n, a, b)]
    }

    /// Weights in `pair_index` order.
    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn family(&self) -> Option<Family> {
        self.family
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn ground_truth(&self) -> Option<&Partition> {
        self.ground_truth.as_ref()
    }

    /// Total weight of the pairs selected by `x`.
    pub fn objective_value(&self, x: &EdgeVector) -> Result<i64> {
        if x.n != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: x.n });
        }
        Ok(self
            .weights
            .iter()
            .zip(&x.bits)
            .filter(|(_, &b)| b)
            .map(|(&w, _)| w)
            .sum())
    }

    /// Weight of the cut `(s_side, comp.vertices \ s_side)` inside the
    /// component's edge set. `s_side` must be a nonempty proper subset of
    /// the component's vertices.
    pub fn cut_weight(&self, comp: &Component, s_side: &[usize]) -> Result<i64> {
        if s_side.is_empty()
            || s_side.len() >= comp.vertices.len()
            || !s_side.iter().all(|v| comp.vertices.contains(v))
        {
            return Err(Error::InvalidCutSide);
        }
        let in_s = |v: usize| s_side.contains(&v);
        Ok(comp
            .edges
            .iter()
            .filter(|&&(i, j)| in_s(i) != in_s(j))
            .map(|&(i, j)| self.weight(i, j))
            .sum())
    }
}

/// A 0-1 assignment to every pair variable, in `pair_index` order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeVector {
    n: usize,
    bits: Vec<bool>,
}

impl EdgeVector {
    pub fn zeros(n: usize) -> Self {
        EdgeVector { n, bits: vec![false; pair_count(n)] }
    }

    pub fn ones(n: usize) -> Self {
        EdgeVector { n, bits: vec![true; pair_count(n)] }
    }

    /// Builds a vector from the set of selected pairs.
    pub fn from_pairs(n: usize, selected: &[(usize, usize)]) -> Self {
        let mut v = EdgeVector::zeros(n);
        for &(i, j) in selected {
            v.set(i, j, true);
        }
        v
    }

    /// Lower `pair_count(n)` bits of `mask` in `pair_index` order; used by
    /// the exhaustive solver where `n` is capped well below the 64-bit
    /// limit.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let m = pair_count(n);
        debug_assert!(m <= 64);
        EdgeVector { n, bits: (0..m).map(|b| mask >> b & 1 == 1).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.bits[pair_index(self.n, a, b)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.bits[pair_index(self.n, a, b)] = value;
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Number of selected pairs.
    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Selected pairs in lex order.
    pub fn selected_pairs(&self) -> Vec<(usize, usize)> {
        pairs(self.n).zip(&self.bits).filter(|(_, &b)| b).map(|(p, _)| p).collect()
    }

    /// Connected components of the graph `(V, selected pairs)`. Isolated
    /// vertices appear as singleton components; components are ordered by
    /// their smallest vertex.
    pub fn components(&self) -> Vec<Component> {
        let mut uf = UnionFind::new(self.n);
        for (i, j) in self.selected_pairs() {
            uf.union(i, j);
        }
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for v in 0..self.n {
            by_root[uf.find(v)].push(v);
        }
        let mut comps = Vec::new();
        for vertices in by_root.into_iter().filter(|vs| !vs.is_empty()) {
            let edges = self
                .selected_pairs()
                .into_iter()
                .filter(|&(i, _)| uf.find(i) == uf.find(vertices[0]))
                .collect();
            comps.push(Component { vertices, edges });
        }
        comps.sort_by_key(|c| c.vertices[0]);
        comps
    }

    /// True iff every component induced by the selected pairs is complete,
    /// i.e. no transitivity constraint of the full formulation is violated.
    pub fn is_clique_partitioning(&self) -> bool {
        self.components()
            .iter()
            .all(|c| c.edges.len() == pair_count(c.vertices.len()))
    }

    /// Transitive closure: completes every connected component into a
    /// clique. Idempotent, and never clears a set bit.
    pub fn repair_to_clique_partitioning(&self) -> EdgeVector {
        let mut uf = UnionFind::new(self.n);
        for (i, j) in self.selected_pairs() {
            uf.union(i, j);
        }
        let mut out = EdgeVector::zeros(self.n);
        for (i, j) in pairs(self.n) {
            if uf.find(i) == uf.find(j) {
                out.set(i, j, true);
            }
        }
        out
    }

    /// The partition whose blocks are the connected components.
    pub fn to_partition(&self) -> Partition {
        let mut uf = UnionFind::new(self.n);
        for (i, j) in self.selected_pairs() {
            uf.union(i, j);
        }
        Partition::from_labels((0..self.n).map(|v| uf.find(v)).collect())
    }
}

/// A partition of `0..n` in canonical restricted-growth labeling:
/// `block_of[0] == 0` and each new label is one greater than the maximum
/// seen so far. Equality of partitions is plain field equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    block_of: Vec<usize>,
}

impl Partition {
    /// Canonicalizes arbitrary block labels into restricted-growth form.
    pub fn from_labels(labels: Vec<usize>) -> Partition {
        let width = labels.iter().max().map_or(0, |&m| m + 1);
        let mut remap: Vec<Option<usize>> = vec![None; width];
        let mut next = 0;
        let block_of = labels
            .iter()
            .map(|&l| {
                *remap[l].get_or_insert_with(|| {
                    let id = next;
                    next += 1;
                    id
                })
            })
            .collect();
        Partition { block_of }
    }

    pub fn singletons(n: usize) -> Partition {
        Partition { block_of: (0..n).collect() }
    }

    pub fn single_block(n: usize) -> Partition {
        Partition { block_of: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_of(&self) -> &[usize] {
        &self.block_of
    }

    pub fn num_blocks(&self) -> usize {
        self.block_of.iter().max().map_or(0, |&m| m + 1)
    }

    /// Blocks as vertex lists, ordered by block id (= order of first
    /// appearance).
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (v, &b) in self.block_of.iter().enumerate() {
            blocks[b].push(v);
        }
        blocks
    }

    /// Edge vector with bit `{i,j}` set iff `i` and `j` share a block.
    pub fn to_edges(&self) -> EdgeVector {
        let n = self.n();
        let mut v = EdgeVector::zeros(n);
        for (i, j) in pairs(n) {
            if self.block_of[i] == self.block_of[j] {
                v.set(i, j, true);
            }
        }
        v
    }

    /// Sum of within-block weights.
    pub fn objective_value(&self, inst: &WeightedInstance) -> Result<i64> {
        inst.objective_value(&self.to_edges())
    }
}

/// A connected component of the graph selected by an edge vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Sorted member vertices.
    pub vertices: Vec<usize>,
    /// Selected pairs with both endpoints in `vertices`, lex order.
    pub edges: Vec<(usize, usize)>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, v: usize) -> usize {
        let mut root = v;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = v;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // Smaller root wins so component ids are stable.
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Triangle with weights w01, w02, w12 (pair_index order for n = 3).
    fn triangle(w01: i64, w02: i64, w12: i64) -> WeightedInstance {
        WeightedInstance::from_weights(3, vec![w01, w02, w12]).unwrap()
    }

    #[test]
    fn pair_index_is_lex_and_total() {
        for n in 1..=10 {
            let mut expect = 0;
            for (i, j) in pairs(n) {
                assert_eq!(pair_index(n, i, j), expect);
                expect += 1;
            }
            assert_eq!(expect, pair_count(n));
        }
    }

    #[test]
    fn objective_examples() {
        let inst = triangle(1, -1, 1);
        assert_eq!(inst.objective_value(&EdgeVector::zeros(3)).unwrap(), 0);
        // all-ones: 1 + 1 - 1
        assert_eq!(inst.objective_value(&EdgeVector::ones(3)).unwrap(), 1);
        let x01 = EdgeVector::from_pairs(3, &[(0, 1)]);
        assert_eq!(inst.objective_value(&x01).unwrap(), 1);
    }

    #[test]
    fn objective_dimension_mismatch() {
        let inst = triangle(1, -1, 1);
        let err = inst.objective_value(&EdgeVector::zeros(4)).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { expected: 3, got: 4 }));
    }

    #[test]
    fn weight_bounds_enforced() {
        assert!(WeightedInstance::from_weights(3, vec![MAX_ABS_WEIGHT, 0, 0]).is_ok());
        let err = WeightedInstance::from_weights(3, vec![MAX_ABS_WEIGHT + 1, 0, 0]).unwrap_err();
        assert!(matches!(err, Error::WeightOutOfBounds { i: 0, j: 1, .. }));
        assert!(WeightedInstance::from_weights(65, vec![0; pair_count(65)]).is_err());
        assert!(WeightedInstance::from_weights(4, vec![0; 5]).is_err());
    }

    #[test]
    fn partition_to_edges_examples() {
        assert_eq!(Partition::singletons(4).to_edges(), EdgeVector::zeros(4));
        assert_eq!(Partition::single_block(4).to_edges(), EdgeVector::ones(4));
        let p = Partition::from_labels(vec![0, 0, 1, 1]);
        assert_eq!(p.to_edges(), EdgeVector::from_pairs(4, &[(0, 1), (2, 3)]));
        assert!(p.to_edges().is_clique_partitioning());
    }

    #[test]
    fn restricted_growth_canonicalization() {
        let p = Partition::from_labels(vec![5, 5, 2, 5, 2]);
        assert_eq!(p.block_of(), &[0, 0, 1, 0, 1]);
        assert_eq!(p.num_blocks(), 2);
        assert_eq!(p.blocks(), vec![vec![0, 1, 3], vec![2, 4]]);
    }

    #[test]
    fn components_examples() {
        let comps = EdgeVector::zeros(3).components();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.vertices.len() == 1 && c.edges.is_empty()));

        let path = EdgeVector::from_pairs(3, &[(0, 1), (1, 2)]);
        let comps = path.components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].vertices, vec![0, 1, 2]);
        assert_eq!(comps[0].edges.len(), 2);

        let two = EdgeVector::from_pairs(4, &[(0, 1), (2, 3)]);
        let comps = two.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].vertices, vec![0, 1]);
        assert_eq!(comps[1].vertices, vec![2, 3]);
    }

    #[test]
    fn clique_partitioning_examples() {
        assert!(EdgeVector::zeros(3).is_clique_partitioning());
        assert!(!EdgeVector::from_pairs(3, &[(0, 1), (1, 2)]).is_clique_partitioning());
        assert!(EdgeVector::from_pairs(4, &[(0, 1), (2, 3)]).is_clique_partitioning());
    }

    #[test]
    fn repair_examples() {
        let path = EdgeVector::from_pairs(3, &[(0, 1), (1, 2)]);
        assert_eq!(path.repair_to_clique_partitioning(), EdgeVector::ones(3));

        let already = EdgeVector::from_pairs(4, &[(0, 1), (2, 3)]);
        assert_eq!(already.repair_to_clique_partitioning(), already);

        let mixed = EdgeVector::from_pairs(5, &[(0, 1), (1, 2), (3, 4)]);
        let expected = EdgeVector::from_pairs(5, &[(0, 1), (0, 2), (1, 2), (3, 4)]);
        assert_eq!(mixed.repair_to_clique_partitioning(), expected);
    }

    #[test]
    fn cut_weight_examples() {
        let inst = triangle(1, -1, 1);
        let comp = EdgeVector::ones(3).components().remove(0);
        // bridge vertex of the two +1 edges
        assert_eq!(inst.cut_weight(&comp, &[1]).unwrap(), 2);
        // w01 + w02 = 1 + (-1)
        assert_eq!(inst.cut_weight(&comp, &[0]).unwrap(), 0);
        assert!(matches!(inst.cut_weight(&comp, &[]), Err(Error::InvalidCutSide)));
        assert!(matches!(inst.cut_weight(&comp, &[0, 1, 2]), Err(Error::InvalidCutSide)));
        assert!(matches!(inst.cut_weight(&comp, &[7]), Err(Error::InvalidCutSide)));
    }

    #[test]
    fn cut_weight_counts_component_edges_only() {
        // component = the path 0-1-2 (pair {0,2} unselected): the cut
        // {0} | {1,2} crosses only the selected edge {0,1}.
        let inst = triangle(1, -1, 1);
        let path = EdgeVector::from_pairs(3, &[(0, 1), (1, 2)]);
        let comp = path.components().remove(0);
        assert_eq!(inst.cut_weight(&comp, &[0]).unwrap(), 1);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_edge_vector(max_n: usize) -> impl Strategy<Value = EdgeVector> {
            (2..=max_n).prop_flat_map(|n| {
                proptest::collection::vec(any::<bool>(), pair_count(n)).prop_map(move |bits| {
                    let mut v = EdgeVector::zeros(n);
                    for (idx, (i, j)) in pairs(n).enumerate() {
                        v.set(i, j, bits[idx]);
                    }
                    v
                })
            })
        }

        fn arb_partition(max_n: usize) -> impl Strategy<Value = Partition> {
            (1..=max_n).prop_flat_map(|n| {
                proptest::collection::vec(0..n, n).prop_map(Partition::from_labels)
            })
        }

        proptest! {
            #[test]
            fn repair_is_idempotent_and_monotone(x in arb_edge_vector(9)) {
                let r = x.repair_to_clique_partitioning();
                prop_assert!(r.is_clique_partitioning());
                prop_assert_eq!(r.repair_to_clique_partitioning(), r.clone());
                for (i, j) in x.selected_pairs() {
                    prop_assert!(r.get(i, j));
                }
            }

            #[test]
            fn partition_and_edges_are_mutually_inverse(p in arb_partition(9)) {
                let x = p.to_edges();
                prop_assert!(x.is_clique_partitioning());
                prop_assert_eq!(x.to_partition(), p.clone());
                prop_assert_eq!(x.to_partition().to_edges(), x);
            }

            #[test]
            fn objective_matches_blockwise_double_loop(
                p in arb_partition(8),
                ws in proptest::collection::vec(-50i64..=50, 28),
            ) {
                let n = p.n();
                if n >= 2 {
                    let inst =
                        WeightedInstance::from_weights(n, ws[..pair_count(n)].to_vec()).unwrap();
                    let mut by_blocks = 0i64;
                    for block in p.blocks() {
                        for a in 0..block.len() {
                            for b in a + 1..block.len() {
                                by_blocks += inst.weight(block[a], block[b]);
                            }
                        }
                    }
                    prop_assert_eq!(p.objective_value(&inst).unwrap(), by_blocks);
                }
            }
        }
    }
}
