//! Seeded generators for the four instance families.
//!
//! Each generator is a pure function of `(n, seed)` plus its family
//! parameters: one [`SplitMix64`](crate::rng::SplitMix64) stream is seeded
//! directly with `seed` and consumed in a documented order, so equal
//! configs yield byte-identical instances everywhere.
//!
//! Draw order, for reimplementors:
//! - random: one bounded draw `below(2)` per pair in lex order; 0 maps to
//!   -1 and 1 maps to +1.
//! - sparse: one draw `below(3)` per pair in lex order; 0, 1, 2 map to
//!   -1, 0, +1.
//! - structured: one draw `below(den)` per pair in lex order; a
//!   within-cluster pair becomes +1 iff the draw is `< num`, a
//!   cross-cluster pair becomes +1 iff the draw is `>= num`, where
//!   `num/den` is the within-cluster +1 probability.
//! - modularity: the attachment graph is grown first (one draw
//!   `below(total eligible degree)` per attachment pick), then weights are
//!   derived arithmetically with no further draws.

use crate::error::{Error, Result};
use crate::instance::{pairs, Family, Partition, WeightedInstance, MAX_VERTICES};
use crate::rng::SplitMix64;

/// Generators require at least a triangle.
pub const MIN_GEN_VERTICES: usize = 3;

/// An exact probability `num/den` with `den <= 100`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Probability {
    num: u32,
    den: u32,
}

impl Probability {
    pub fn new(num: u32, den: u32) -> Result<Self> {
        if den == 0 || den > 100 || num > den {
            return Err(Error::InvalidProbability { num, den });
        }
        Ok(Probability { num, den })
    }

    pub fn numer(self) -> u32 {
        self.num
    }

    pub fn denom(self) -> u32 {
        self.den
    }

    pub fn is_one(self) -> bool {
        self.num == self.den
    }
}

impl std::fmt::Display for Probability {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl std::str::FromStr for Probability {
    type Err = Error;

    /// Parses `"num/den"` (or a bare integer as `num/1`).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidProbability { num: 0, den: 0 };
        match s.split_once('/') {
            Some((n, d)) => Probability::new(
                n.parse().map_err(|_| bad())?,
                d.parse().map_err(|_| bad())?,
            ),
            None => Probability::new(s.parse().map_err(|_| bad())?, 1),
        }
    }
}

/// Full description of one generator run.
#[derive(Debug, Clone)]
pub struct GeneratorConfig {
    pub family: Family,
    pub n: usize,
    pub seed: u64,
    /// Cluster count for the structured family.
    pub k_clusters: usize,
    /// Within-cluster +1 probability for the structured family.
    pub p_in: Probability,
    /// Attachment parameter for the modularity family.
    pub ba_attach: usize,
}

impl GeneratorConfig {
    pub fn new(family: Family, n: usize, seed: u64) -> Self {
        GeneratorConfig {
            family,
            n,
            seed,
            k_clusters: 5,
            p_in: Probability::new(3, 4).unwrap(),
            ba_attach: 2,
        }
    }

    pub fn generate(&self) -> Result<WeightedInstance> {
        match self.family {
            Family::Random => gen_random(self.n, self.seed),
            Family::Sparse => gen_sparse(self.n, self.seed),
            Family::Structured => gen_structured(self.n, self.k_clusters, self.p_in, self.seed),
            Family::Modularity => gen_modularity(self.n, self.ba_attach, self.seed),
            Family::Custom => Err(Error::UnsupportedFamily),
        }
    }
}

fn check_gen_n(n: usize) -> Result<()> {
    if !(MIN_GEN_VERTICES..=MAX_VERTICES).contains(&n) {
        return Err(Error::VertexCountRange { n, min: MIN_GEN_VERTICES, max: MAX_VERTICES });
    }
    Ok(())
}

/// Weights drawn independently and uniformly from {-1, +1}.
pub fn gen_random(n: usize, seed: u64) -> Result<WeightedInstance> {
    check_gen_n(n)?;
    let mut rng = SplitMix64::new(seed);
    let weights = pairs(n)
        .map(|_| if rng.below(2) == 1 { 1 } else { -1 })
        .collect();
    Ok(WeightedInstance::from_weights(n, weights)?
        .with_family(Family::Random)
        .with_seed(seed))
}

/// Weights drawn independently and uniformly from {-1, 0, +1}.
pub fn gen_sparse(n: usize, seed: u64) -> Result<WeightedInstance> {
    check_gen_n(n)?;
    let mut rng = SplitMix64::new(seed);
    let weights = pairs(n).map(|_| rng.below(3) as i64 - 1).collect();
    Ok(WeightedInstance::from_weights(n, weights)?
        .with_family(Family::Sparse)
        .with_seed(seed))
}

/// Planted clustering: vertices split into `k_clusters` contiguous equal
/// blocks; within-block pairs get +1 with probability `p_in`, cross-block
/// pairs with probability `1 - p_in` (all other pairs get -1). The planted
/// partition is recorded on the instance.
pub fn gen_structured(
    n: usize,
    k_clusters: usize,
    p_in: Probability,
    seed: u64,
) -> Result<WeightedInstance> {
    check_gen_n(n)?;
    if k_clusters == 0 || !n.is_multiple_of(k_clusters) {
        return Err(Error::ClusterDivisibility { n, k: k_clusters });
    }
    let block_size = n / k_clusters;
    let block_of = |v: usize| v / block_size;
    let mut rng = SplitMix64::new(seed);
    let (num, den) = (p_in.numer() as u64, p_in.denom() as u64);
    let weights = pairs(n)
        .map(|(i, j)| {
            let r = rng.below(den);
            let plus = if block_of(i) == block_of(j) { r < num } else { r >= num };
            if plus {
                1
            } else {
                -1
            }
        })
        .collect();
    let truth = Partition::from_labels((0..n).map(block_of).collect());
    Ok(WeightedInstance::from_weights(n, weights)?
        .with_family(Family::Structured)
        .with_seed(seed)
        .with_ground_truth(truth))
}

/// Modularity-maximization weights derived from a preferential-attachment
/// graph: with `M` edges, adjacency `A`, and degrees `d`, the pair weight
/// is the integer `2M * A_ij - d_i * d_j` (the standard modularity
/// coefficient scaled by `2M`). Scaling by a positive constant leaves the
/// optimal partition set unchanged.
pub fn gen_modularity(n: usize, ba_attach: usize, seed: u64) -> Result<WeightedInstance> {
    check_gen_n(n)?;
    if ba_attach < 1 || ba_attach >= n {
        return Err(Error::AttachmentRange { ba_attach, n });
    }
    let mut rng = SplitMix64::new(seed);
    let graph = barabasi_albert(n, ba_attach, &mut rng);
    let two_m = 2 * graph.edge_count() as i64;
    let weights = pairs(n)
        .map(|(i, j)| {
            let a = if graph.adjacent(i, j) { 1 } else { 0 };
            two_m * a - graph.degree[i] as i64 * graph.degree[j] as i64
        })
        .collect();
    Ok(WeightedInstance::from_weights(n, weights)?
        .with_family(Family::Modularity)
        .with_seed(seed))
}

/// Simple undirected graph produced by preferential attachment.
struct BaGraph {
    n: usize,
    adj: Vec<bool>,
    degree: Vec<u64>,
}

impl BaGraph {
    fn adjacent(&self, i: usize, j: usize) -> bool {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.adj[crate::instance::pair_index(self.n, a, b)]
    }

    fn edge_count(&self) -> u64 {
        self.degree.iter().sum::<u64>() / 2
    }
}

/// Grows the attachment graph: a clique on `a + 1` seed vertices, then each
/// new vertex attaches to `a` distinct existing vertices, each pick
/// proportional to current degree (without replacement within one vertex's
/// round).
fn barabasi_albert(n: usize, a: usize, rng: &mut SplitMix64) -> BaGraph {
    let mut g = BaGraph {
        n,
        adj: vec![false; crate::instance::pair_count(n)],
        degree: vec![0; n],
    };
    let add_edge = |g: &mut BaGraph, i: usize, j: usize| {
        let (x, y) = if i < j { (i, j) } else { (j, i) };
        g.adj[crate::instance::pair_index(n, x, y)] = true;
        g.degree[i] += 1;
        g.degree[j] += 1;
    };
    for i in 0..=a {
        for j in i + 1..=a {
            add_edge(&mut g, i, j);
        }
    }
    for v in a + 1..n {
        let mut picked: Vec<usize> = Vec::with_capacity(a);
        for _ in 0..a {
            let total: u64 = (0..v).filter(|u| !picked.contains(u)).map(|u| g.degree[u]).sum();
            let mut r = rng.below(total);
            let target = (0..v)
                .filter(|u| !picked.contains(u))
                .find(|&u| {
                    if r < g.degree[u] {
                        true
                    } else {
                        r -= g.degree[u];
                        false
                    }
                })
                .expect("degree total covers the draw");
            picked.push(target);
        }
        for &t in &picked {
            add_edge(&mut g, v, t);
        }
    }
    g
}
