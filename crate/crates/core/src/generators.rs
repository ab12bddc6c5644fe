//! Seeded random graph models and degree-preserving rewiring.
//!
//! All models draw from [`ChaCha8Rng`] seeded with [`SeedableRng::seed_from_u64`],
//! so a given `(parameters, seed)` yields the same graph on every platform.
//! Replicate `k` of an experiment with base seed `s` uses
//! [`derive_seed`]`(s, k)`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};
use crate::graph::{Edge, WeightedGraph};

/// Parameters shared by the random models.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelConfig {
    pub n: usize,
    pub p: f64,
    pub mu: f64,
    pub sigma: f64,
    pub seed: u64,
    /// Regenerate until connected, at most `max_retries` extra times.
    pub require_connected: bool,
    pub max_retries: usize,
}

impl Default for ModelConfig {
    fn default() -> Self {
        Self {
            n: 200,
            p: 0.2,
            mu: 10.0,
            sigma: 1.0,
            seed: 0,
            require_connected: false,
            max_retries: 100,
        }
    }
}

impl ModelConfig {
    fn check_topology(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::InvalidParameter("n must be at least 1"));
        }
        if !(self.p > 0.0 && self.p < 1.0) {
            return Err(Error::InvalidParameter("p must lie in (0, 1)"));
        }
        Ok(())
    }

    fn check_weights(&self) -> Result<()> {
        if !(self.mu > 0.0) || !self.mu.is_finite() {
            return Err(Error::InvalidParameter("mu must be positive"));
        }
        if !(self.sigma >= 0.0) || !self.sigma.is_finite() {
            return Err(Error::InvalidParameter("sigma must be non-negative"));
        }
        Ok(())
    }
}

/// SplitMix64 finaliser applied to `base ^ replicate`.
pub fn derive_seed(base: u64, replicate: u64) -> u64 {
    let mut z = (base ^ replicate).wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn retry_until_connected<F>(cfg: &ModelConfig, mut sample: F) -> Result<WeightedGraph>
where
    F: FnMut() -> Result<WeightedGraph>,
{
    let attempts = if cfg.require_connected {
        cfg.max_retries + 1
    } else {
        1
    };
    for _ in 0..attempts {
        let g = sample()?;
        if !cfg.require_connected || g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::ConnectivityNotAchieved(attempts))
}

/// `G(n, p)` topology with `Normal(mu, sigma)` weights.
///
/// Non-positive weight draws are rejected and redrawn.
pub fn er_normal(cfg: &ModelConfig) -> Result<WeightedGraph> {
    cfg.check_topology()?;
    cfg.check_weights()?;
    let normal = Normal::new(cfg.mu, cfg.sigma)
        .map_err(|_| Error::InvalidParameter("invalid normal distribution"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    retry_until_connected(cfg, || {
        let mut edges = Vec::new();
        for u in 0..cfg.n {
            for v in u + 1..cfg.n {
                if rng.random::<f64>() < cfg.p {
                    let w = loop {
                        let w: f64 = normal.sample(&mut rng);
                        if w > 0.0 {
                            break w;
                        }
                    };
                    edges.push((u, v, w));
                }
            }
        }
        WeightedGraph::from_edges(cfg.n, &edges)
    })
}

/// Weighted random graph: every pair gets an integer weight `w >= 0` with
/// `P(w = k) = p^k (1 - p)`; pairs with `w >= 1` become edges.
pub fn wrg(n: usize, p: f64, seed: u64) -> Result<WeightedGraph> {
    wrg_with(&ModelConfig {
        n,
        p,
        seed,
        require_connected: false,
        ..ModelConfig::default()
    })
}

/// [`wrg`] honouring `require_connected`; `mu` and `sigma` are ignored.
pub fn wrg_with(cfg: &ModelConfig) -> Result<WeightedGraph> {
    cfg.check_topology()?;
    let ln_p = libm::log(cfg.p);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    retry_until_connected(cfg, || {
        let mut edges = Vec::new();
        for u in 0..cfg.n {
            for v in u + 1..cfg.n {
                let w = geometric(&mut rng, ln_p);
                if w >= 1.0 {
                    edges.push((u, v, w));
                }
            }
        }
        WeightedGraph::from_edges(cfg.n, &edges)
    })
}

// Inverse CDF: floor(ln U / ln p) with U uniform on (0, 1].
fn geometric<R: Rng>(rng: &mut R, ln_p: f64) -> f64 {
    let u = 1.0 - rng.random::<f64>();
    libm::floor(libm::log(u) / ln_p)
}

/// Degree-preserving rewiring: performs exactly `swaps` successful edge
/// switches `{a,b},{c,d} -> {a,d},{b,c}`, weights travelling with their edge.
///
/// Switches that would create a self-loop or a duplicate edge (or change
/// nothing) are rejected and redrawn. Each successful switch may take at most
/// `100 * |E|` attempts.
pub fn rewire(g: &WeightedGraph, swaps: usize, seed: u64) -> Result<WeightedGraph> {
    if swaps == 0 {
        return Ok(g.clone());
    }
    let mut state = Rewiring::new(g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..swaps {
        state.swap_once(&mut rng)?;
    }
    Ok(g.with_edges(state.edges))
}

struct Rewiring {
    edges: Vec<Edge>,
    present: BTreeSet<(usize, usize)>,
    budget: usize,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl Rewiring {
    fn new(g: &WeightedGraph) -> Result<Self> {
        let m = g.edge_count();
        if m < 2 {
            return Err(Error::TooFewEdges);
        }
        Ok(Self {
            edges: g.edges().to_vec(),
            present: g.edges().iter().map(|e| (e.u, e.v)).collect(),
            budget: m.saturating_mul(100),
        })
    }

    fn swap_once<R: Rng>(&mut self, rng: &mut R) -> Result<()> {
        let m = self.edges.len();
        for _ in 0..self.budget {
            let i = rng.random_range(0..m);
            let mut j = rng.random_range(0..m - 1);
            if j >= i {
                j += 1;
            }
            let flip = rng.random::<bool>();
            if self.try_swap(i, j, flip) {
                return Ok(());
            }
        }
        Err(Error::SwapBudgetExhausted(self.budget))
    }

    /// Replaces edges `i = {a,b}` and `j = {c,d}` (`{d,c}` when `flip`) with
    /// `{a,d}` and `{b,c}` if the result is still a simple graph.
    fn try_swap(&mut self, i: usize, j: usize, flip: bool) -> bool {
        let (a, b, wi) = (self.edges[i].u, self.edges[i].v, self.edges[i].weight);
        let (mut c, mut d, wj) = (self.edges[j].u, self.edges[j].v, self.edges[j].weight);
        if flip {
            core::mem::swap(&mut c, &mut d);
        }
        if a == d || b == c || b == d {
            return false;
        }
        let old_i = key(a, b);
        let old_j = key(c, d);
        let new_i = key(a, d);
        let new_j = key(b, c);
        let taken = |k: (usize, usize)| k != old_i && k != old_j && self.present.contains(&k);
        if new_i == new_j || taken(new_i) || taken(new_j) {
            return false;
        }
        self.present.remove(&old_i);
        self.present.remove(&old_j);
        self.present.insert(new_i);
        self.present.insert(new_j);
        self.edges[i] = Edge {
            u: new_i.0,
            v: new_i.1,
            weight: wi,
        };
        self.edges[j] = Edge {
            u: new_j.0,
            v: new_j.1,
            weight: wj,
        };
        true
    }
}
