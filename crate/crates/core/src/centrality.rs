//! Adjustable degree and closeness centralities.
//!
//! Each measure is parameterised by `alpha`: at `alpha = 0` it reduces to the
//! classical unweighted index, at `alpha = 1` to its weighted counterpart.
//! Three ways of mixing the two are provided:
//!
//! * `Prod`: `C^(1-alpha) * C_w^alpha`
//! * `Sum`: every edge weight is raised to `alpha` before aggregating
//! * `Log`: `log2(C_w / C) * alpha + log2(C)`, an affine function of `alpha`
//!
//! Logarithms are base 2 throughout. Rankings and change points do not depend
//! on the base.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::numeric::{checked_pow, ensure_normal, log2, safe_exponent_interval, ExtendedInterval};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Reach {
    Degree,
    Closeness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Summarization {
    Prod,
    Sum,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MeasureKind {
    pub reach: Reach,
    pub summarization: Summarization,
}

impl MeasureKind {
    pub const DEGREE_PROD: Self = Self::new(Reach::Degree, Summarization::Prod);
    pub const DEGREE_SUM: Self = Self::new(Reach::Degree, Summarization::Sum);
    pub const DEGREE_LOG: Self = Self::new(Reach::Degree, Summarization::Log);
    pub const CLOSENESS_PROD: Self = Self::new(Reach::Closeness, Summarization::Prod);
    pub const CLOSENESS_SUM: Self = Self::new(Reach::Closeness, Summarization::Sum);
    pub const CLOSENESS_LOG: Self = Self::new(Reach::Closeness, Summarization::Log);

    pub const ALL: [Self; 6] = [
        Self::DEGREE_PROD,
        Self::DEGREE_SUM,
        Self::DEGREE_LOG,
        Self::CLOSENESS_PROD,
        Self::CLOSENESS_SUM,
        Self::CLOSENESS_LOG,
    ];

    pub const fn new(reach: Reach, summarization: Summarization) -> Self {
        Self {
            reach,
            summarization,
        }
    }

    pub fn name(&self) -> &'static str {
        match (self.reach, self.summarization) {
            (Reach::Degree, Summarization::Prod) => "degree-prod",
            (Reach::Degree, Summarization::Sum) => "degree-sum",
            (Reach::Degree, Summarization::Log) => "degree-log",
            (Reach::Closeness, Summarization::Prod) => "closeness-prod",
            (Reach::Closeness, Summarization::Sum) => "closeness-sum",
            (Reach::Closeness, Summarization::Log) => "closeness-log",
        }
    }

    pub fn is_log(&self) -> bool {
        self.summarization == Summarization::Log
    }
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownMeasure;

impl fmt::Display for UnknownMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected one of degree-prod, degree-sum, degree-log, closeness-prod, closeness-sum, closeness-log")
    }
}

impl FromStr for MeasureKind {
    type Err = UnknownMeasure;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s.trim()))
            .ok_or(UnknownMeasure)
    }
}

/// Values of one measure at one `alpha`, indexed by node.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralityProfile {
    pub kind: MeasureKind,
    pub alpha: f64,
    pub values: Vec<f64>,
}

/// How to treat powers that leave the binary64 range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RangeCheck {
    /// Report [`Error::Computability`].
    Strict,
    /// Let zeros and infinities through.
    Unchecked,
}

impl RangeCheck {
    fn pow(self, base: f64, alpha: f64) -> Result<f64> {
        match self {
            RangeCheck::Strict => checked_pow(base, alpha),
            RangeCheck::Unchecked => Ok(libm::pow(base, alpha)),
        }
    }

    fn finish(self, value: f64, base: f64, alpha: f64) -> Result<f64> {
        match self {
            RangeCheck::Strict => ensure_normal(value, base, alpha),
            RangeCheck::Unchecked => Ok(value),
        }
    }
}

fn positive_degree(g: &WeightedGraph, u: usize) -> Result<usize> {
    match g.degree(u)? {
        0 => Err(Error::ZeroDegree(u)),
        k => Ok(k),
    }
}

fn reciprocal_total(dist: &[f64]) -> Result<f64> {
    if dist.len() < 2 {
        return Err(Error::InvalidParameter("closeness needs at least two nodes"));
    }
    let total: f64 = dist.iter().sum();
    if total.is_infinite() {
        return Err(Error::Disconnected);
    }
    Ok(1.0 / total)
}

/// Reciprocal of the total hop distance from `u` to every other node.
pub fn closeness(g: &WeightedGraph, u: usize) -> Result<f64> {
    reciprocal_total(&g.unweighted_distances(u)?)
}

/// Reciprocal of the total weighted shortest-path distance from `u`.
pub fn weighted_closeness(g: &WeightedGraph, u: usize) -> Result<f64> {
    reciprocal_total(&g.weighted_distances(u, 1.0)?)
}

/// `k^(1-alpha) * s^alpha`.
pub fn degree_prod(g: &WeightedGraph, u: usize, alpha: f64) -> Result<f64> {
    degree_prod_with(g, u, alpha, RangeCheck::Strict)
}

fn degree_prod_with(g: &WeightedGraph, u: usize, alpha: f64, check: RangeCheck) -> Result<f64> {
    let k = positive_degree(g, u)? as f64;
    let s = g.strength(u)?;
    let value = check.pow(k, 1.0 - alpha)? * check.pow(s, alpha)?;
    check.finish(value, s, alpha)
}

/// Sum of `w^alpha` over the edges incident to `u`.
pub fn degree_sum(g: &WeightedGraph, u: usize, alpha: f64) -> Result<f64> {
    degree_sum_with(g, u, alpha, RangeCheck::Strict)
}

fn degree_sum_with(g: &WeightedGraph, u: usize, alpha: f64, check: RangeCheck) -> Result<f64> {
    positive_degree(g, u)?;
    let mut total = 0.0;
    let mut largest = 0.0f64;
    for &(_, w) in g.neighbors(u)? {
        total += check.pow(w, alpha)?;
        largest = largest.max(w);
    }
    check.finish(total, largest, alpha)
}

/// Reciprocal total distance with every edge weight raised to `alpha`.
pub fn closeness_sum(g: &WeightedGraph, u: usize, alpha: f64) -> Result<f64> {
    closeness_sum_with(g, u, alpha, RangeCheck::Strict)
}

fn closeness_sum_with(g: &WeightedGraph, u: usize, alpha: f64, check: RangeCheck) -> Result<f64> {
    let dist = g.distances_by(u, |w| check.pow(w, alpha))?;
    let total: f64 = dist.iter().sum();
    if total.is_infinite() {
        if g.unweighted_distances(u)?.iter().any(|d| d.is_infinite()) {
            return Err(Error::Disconnected);
        }
        // Reachable, so the distances themselves overflowed.
        return check.finish(0.0, total, alpha);
    }
    let value = reciprocal_total(&dist)?;
    check.finish(value, total, alpha)
}

/// `C_C(u)^(1-alpha) * C_C^w(u)^alpha`.
pub fn closeness_prod(g: &WeightedGraph, u: usize, alpha: f64) -> Result<f64> {
    let cc = closeness(g, u)?;
    let ccw = weighted_closeness(g, u)?;
    prod_of(cc, ccw, alpha, RangeCheck::Strict)
}

fn prod_of(plain: f64, weighted: f64, alpha: f64, check: RangeCheck) -> Result<f64> {
    let value = check.pow(plain, 1.0 - alpha)? * check.pow(weighted, alpha)?;
    check.finish(value, weighted, alpha)
}

fn log_of(plain: f64, weighted: f64, alpha: f64) -> f64 {
    log2(weighted / plain) * alpha + log2(plain)
}

/// `log2(s / k) * alpha + log2(k)`.
pub fn degree_log(g: &WeightedGraph, u: usize, alpha: f64) -> Result<f64> {
    let k = positive_degree(g, u)? as f64;
    Ok(log_of(k, g.strength(u)?, alpha))
}

/// `log2(C_C^w / C_C) * alpha + log2(C_C)`.
pub fn closeness_log(g: &WeightedGraph, u: usize, alpha: f64) -> Result<f64> {
    let cc = closeness(g, u)?;
    Ok(log_of(cc, weighted_closeness(g, u)?, alpha))
}

/// Benchmark quantities shared by all six measures.
///
/// Closeness entries are `None` when the graph is disconnected or has fewer
/// than two nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct Benchmarks {
    pub degree: Vec<usize>,
    pub strength: Vec<f64>,
    pub closeness: Option<Vec<f64>>,
    pub weighted_closeness: Option<Vec<f64>>,
}

impl Benchmarks {
    pub fn compute(g: &WeightedGraph) -> Self {
        let n = g.node_count();
        let mut cc = Vec::with_capacity(n);
        let mut ccw = Vec::with_capacity(n);
        let mut ok = n >= 2;
        for u in 0..n {
            if !ok {
                break;
            }
            match (closeness(g, u), weighted_closeness(g, u)) {
                (Ok(a), Ok(b)) => {
                    cc.push(a);
                    ccw.push(b);
                }
                _ => ok = false,
            }
        }
        Self {
            degree: g.degrees(),
            strength: g.strengths(),
            closeness: ok.then_some(cc),
            weighted_closeness: ok.then_some(ccw),
        }
    }

    pub fn min_degree(&self) -> usize {
        self.degree.iter().copied().min().unwrap_or(0)
    }

    fn require_degrees(&self) -> Result<()> {
        match self.degree.iter().position(|&k| k == 0) {
            Some(u) => Err(Error::ZeroDegree(u)),
            None if self.degree.is_empty() => Err(Error::EmptyGraph),
            None => Ok(()),
        }
    }

    fn closeness_pair(&self) -> Result<(&[f64], &[f64])> {
        match (&self.closeness, &self.weighted_closeness) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(Error::Disconnected),
        }
    }
}

/// Evaluates `kind` at `alpha` for every node, rejecting any power outside
/// the binary64 range.
pub fn profile(g: &WeightedGraph, kind: MeasureKind, alpha: f64) -> Result<CentralityProfile> {
    profile_with(g, &Benchmarks::compute(g), kind, alpha, RangeCheck::Strict)
}

/// Like [`profile`] but reusing precomputed benchmarks and with a selectable
/// range policy.
pub fn profile_with(
    g: &WeightedGraph,
    bench: &Benchmarks,
    kind: MeasureKind,
    alpha: f64,
    check: RangeCheck,
) -> Result<CentralityProfile> {
    let n = g.node_count();
    let values = match (kind.reach, kind.summarization) {
        (Reach::Degree, Summarization::Prod) => {
            bench.require_degrees()?;
            (0..n)
                .map(|u| degree_prod_with(g, u, alpha, check))
                .collect::<Result<Vec<_>>>()?
        }
        (Reach::Degree, Summarization::Sum) => {
            bench.require_degrees()?;
            (0..n)
                .map(|u| degree_sum_with(g, u, alpha, check))
                .collect::<Result<Vec<_>>>()?
        }
        (Reach::Degree, Summarization::Log) => {
            bench.require_degrees()?;
            bench
                .degree
                .iter()
                .zip(&bench.strength)
                .map(|(&k, &s)| log_of(k as f64, s, alpha))
                .collect()
        }
        (Reach::Closeness, Summarization::Prod) => {
            let (cc, ccw) = bench.closeness_pair()?;
            cc.iter()
                .zip(ccw)
                .map(|(&a, &b)| prod_of(a, b, alpha, check))
                .collect::<Result<Vec<_>>>()?
        }
        (Reach::Closeness, Summarization::Sum) => {
            bench.closeness_pair()?;
            (0..n)
                .map(|u| closeness_sum_with(g, u, alpha, check))
                .collect::<Result<Vec<_>>>()?
        }
        (Reach::Closeness, Summarization::Log) => {
            let (cc, ccw) = bench.closeness_pair()?;
            cc.iter().zip(ccw).map(|(&a, &b)| log_of(a, b, alpha)).collect()
        }
    };
    Ok(CentralityProfile {
        kind,
        alpha,
        values,
    })
}

/// Range of `alpha` within which every power taken by `kind` is representable.
///
/// Bases per measure: degrees and strengths for degree/prod, edge weights for
/// both sum measures, plain and weighted closeness for closeness/prod. Log
/// measures are unrestricted.
pub fn safe_interval(g: &WeightedGraph, kind: MeasureKind) -> Result<ExtendedInterval> {
    safe_interval_with(g, &Benchmarks::compute(g), kind)
}

pub fn safe_interval_with(
    g: &WeightedGraph,
    bench: &Benchmarks,
    kind: MeasureKind,
) -> Result<ExtendedInterval> {
    match kind.summarization {
        Summarization::Log => Ok(ExtendedInterval::real_line()),
        Summarization::Sum => {
            if g.edge_count() == 0 {
                return Err(Error::EmptyGraph);
            }
            if kind.reach == Reach::Closeness {
                bench.closeness_pair()?;
            }
            safe_exponent_interval(g.edges().iter().map(|e| e.weight))
        }
        Summarization::Prod => match kind.reach {
            Reach::Degree => {
                bench.require_degrees()?;
                let ks = bench.degree.iter().map(|&k| k as f64);
                safe_exponent_interval(ks.chain(bench.strength.iter().copied()))
            }
            Reach::Closeness => {
                let (cc, ccw) = bench.closeness_pair()?;
                safe_exponent_interval(cc.iter().chain(ccw).copied())
            }
        },
    }
}

/// Competition ranking: rank 1 is the largest value, tied values share the
/// smallest rank of their group (`[5, 5, 1]` gives `[1, 1, 3]`).
pub fn rank_nodes(values: &[f64]) -> Result<Vec<usize>> {
    if let Some(i) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFiniteValue(i));
    }
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[b].total_cmp(&values[a]).then(a.cmp(&b)));
    let mut ranks = alloc::vec![0; values.len()];
    for (pos, &u) in order.iter().enumerate() {
        ranks[u] = if pos > 0 && values[order[pos - 1]] == values[u] {
            ranks[order[pos - 1]]
        } else {
            pos + 1
        };
    }
    Ok(ranks)
}

/// Competition ranking that treats `x` and `y` as tied when
/// `|x - y| <= rel * max(|x|, |y|, floor)`.
///
/// Ties are grouped greedily from the top: a value joins the current group
/// when it is within tolerance of the group's first member.
pub fn rank_nodes_approx(values: &[f64], rel: f64, floor: f64) -> Result<Vec<usize>> {
    if let Some(i) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFiniteValue(i));
    }
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[b].total_cmp(&values[a]).then(a.cmp(&b)));
    let mut ranks = alloc::vec![0; values.len()];
    let mut leader: Option<(f64, usize)> = None;
    for (pos, &u) in order.iter().enumerate() {
        let x = values[u];
        match leader {
            Some((y, rank)) if (x - y).abs() <= rel * x.abs().max(y.abs()).max(floor) => {
                ranks[u] = rank;
            }
            _ => {
                leader = Some((x, pos + 1));
                ranks[u] = pos + 1;
            }
        }
    }
    Ok(ranks)
}

impl CentralityProfile {
    pub fn ranks(&self) -> Result<Vec<usize>> {
        rank_nodes(&self.values)
    }

    /// Ranks with ties absorbed up to relative tolerance `rel`. Log kinds
    /// compare on an absolute scale near zero, since their values are
    /// logarithms of the other kinds.
    pub fn ranks_approx(&self, rel: f64) -> Result<Vec<usize>> {
        let floor = if self.kind.is_log() { 1.0 } else { 0.0 };
        rank_nodes_approx(&self.values, rel, floor)
    }
}
