//! Whole-graph reports behind the `analyze`, `rank-trace` and
//! `variance-trace` commands.

use adjcent_core::centrality::{profile_with, safe_interval_with, RangeCheck};
use adjcent_core::intervals::{closeness_lines_from, degree_lines_from};
use adjcent_core::{
    rank_nodes_approx, useful_interval, Benchmarks, Error, ExtendedInterval, MeasureKind, Reach,
    Result, Summarization, UsefulInterval, WeightedGraph,
};

/// Relative tolerance under which two centrality values share a rank.
pub const RANK_TOLERANCE: f64 = 1e-10;

/// A graph together with its benchmark quantities.
///
/// Degree measures read the weights as given. Closeness measures read them
/// through `closeness_graph`, which holds reciprocal weights when inversion
/// is on, since closeness treats a weight as a length.
#[derive(Debug, Clone)]
pub struct Prepared {
    pub graph: WeightedGraph,
    pub closeness_graph: WeightedGraph,
    pub degree_bench: Benchmarks,
    pub closeness_bench: Option<Benchmarks>,
    pub invert: bool,
}

impl Prepared {
    /// Closeness benchmarks are computed only when `with_closeness` is set,
    /// as they need all-pairs shortest paths.
    pub fn new(graph: WeightedGraph, invert: bool, with_closeness: bool) -> Self {
        let closeness_graph = if invert {
            graph.invert_weights()
        } else {
            graph.clone()
        };
        let degree_bench = Benchmarks {
            degree: graph.degrees(),
            strength: graph.strengths(),
            closeness: None,
            weighted_closeness: None,
        };
        let closeness_bench = with_closeness.then(|| Benchmarks::compute(&closeness_graph));
        Self {
            graph,
            closeness_graph,
            degree_bench,
            closeness_bench,
            invert,
        }
    }

    fn parts(&self, reach: Reach) -> Result<(&WeightedGraph, &Benchmarks)> {
        match reach {
            Reach::Degree => Ok((&self.graph, &self.degree_bench)),
            Reach::Closeness => match &self.closeness_bench {
                Some(b) => Ok((&self.closeness_graph, b)),
                None => Err(Error::InvalidParameter("closeness measures were not requested")),
            },
        }
    }

    pub fn safe_interval(&self, kind: MeasureKind) -> Result<ExtendedInterval> {
        let (g, b) = self.parts(kind.reach)?;
        safe_interval_with(g, b, kind)
    }

    pub fn useful_interval(&self, reach: Reach) -> Result<UsefulInterval> {
        let (_, b) = self.parts(reach)?;
        let lines = match reach {
            Reach::Degree => degree_lines_from(b)?,
            Reach::Closeness => closeness_lines_from(b)?,
        };
        Ok(useful_interval(&lines))
    }

    /// Values of `kind` at `alpha`. Outside the safe interval this fails
    /// unless `force` is set, in which case out-of-range powers saturate.
    pub fn values(&self, kind: MeasureKind, alpha: f64, force: bool) -> Result<Vec<f64>> {
        let (g, b) = self.parts(kind.reach)?;
        let check = if force {
            RangeCheck::Unchecked
        } else {
            let safe = self.safe_interval(kind)?;
            if !safe.contains(alpha) {
                return Err(Error::OutsideSafeInterval {
                    alpha,
                    lo: safe.lo(),
                    hi: safe.hi(),
                });
            }
            RangeCheck::Strict
        };
        Ok(profile_with(g, b, kind, alpha, check)?.values)
    }

    pub fn ranks(&self, kind: MeasureKind, values: &[f64]) -> Result<Vec<usize>> {
        let floor = if kind.is_log() { 1.0 } else { 0.0 };
        rank_nodes_approx(values, RANK_TOLERANCE, floor)
    }
}

/// `steps` evenly spaced values from `min` to `max`, both included.
pub fn alpha_grid(min: f64, max: f64, steps: usize) -> Result<Vec<f64>> {
    if steps < 2 {
        return Err(Error::InvalidParameter("steps must be at least 2"));
    }
    if !(min.is_finite() && max.is_finite() && min <= max) {
        return Err(Error::InvalidParameter("alpha range must be finite with min <= max"));
    }
    let span = max - min;
    let last = (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| if i == steps - 1 { max } else { min + span * (i as f64 / last) })
        .collect())
}

/// Safe and useful intervals of one graph. `None` marks a reach that was not
/// requested.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyzeReport {
    pub nodes: usize,
    pub edges: usize,
    pub degree_prod: Option<ExtendedInterval>,
    pub closeness_prod: Option<ExtendedInterval>,
    pub degree_sum: Option<ExtendedInterval>,
    pub closeness_sum: Option<ExtendedInterval>,
    pub degree_useful: Option<UsefulInterval>,
    pub closeness_useful: Option<UsefulInterval>,
}

impl AnalyzeReport {
    pub fn compute(p: &Prepared, degree: bool, closeness: bool) -> Result<Self> {
        let pick = |on: bool, kind: MeasureKind| on.then(|| p.safe_interval(kind)).transpose();
        Ok(Self {
            nodes: p.graph.node_count(),
            edges: p.graph.edge_count(),
            degree_prod: pick(degree, MeasureKind::DEGREE_PROD)?,
            closeness_prod: pick(closeness, MeasureKind::CLOSENESS_PROD)?,
            degree_sum: pick(degree, MeasureKind::DEGREE_SUM)?,
            closeness_sum: pick(closeness, MeasureKind::CLOSENESS_SUM)?,
            degree_useful: degree.then(|| p.useful_interval(Reach::Degree)).transpose()?,
            closeness_useful: closeness
                .then(|| p.useful_interval(Reach::Closeness))
                .transpose()?,
        })
    }

    pub const HEADER: [&'static str; 16] = [
        "nodes", "edges", "sd_prod_lo", "sd_prod_hi", "sc_prod_lo", "sc_prod_hi", "sd_sum_lo",
        "sd_sum_hi", "sc_sum_lo", "sc_sum_hi", "ud_lo", "ud_hi", "ud_len", "uc_lo", "uc_hi",
        "uc_len",
    ];

    pub fn row(&self) -> Vec<String> {
        let mut row = vec![self.nodes.to_string(), self.edges.to_string()];
        for s in [
            &self.degree_prod,
            &self.closeness_prod,
            &self.degree_sum,
            &self.closeness_sum,
        ] {
            match s {
                Some(i) => row.extend([fmt_num(i.lo()), fmt_num(i.hi())]),
                None => row.extend(["NA".to_string(), "NA".to_string()]),
            }
        }
        for u in [&self.degree_useful, &self.closeness_useful] {
            match u {
                Some(u) => row.extend([
                    fmt_num(u.interval.lo()),
                    fmt_num(u.interval.hi()),
                    fmt_num(u.length()),
                ]),
                None => row.extend(std::iter::repeat_n("NA".to_string(), 3)),
            }
        }
        row
    }
}

/// One `(alpha, node)` entry of a rank trace.
#[derive(Debug, Clone, PartialEq)]
pub struct TracePoint {
    pub alpha: f64,
    pub node: usize,
    pub value: f64,
    pub rank: usize,
}

pub fn rank_trace(p: &Prepared, kind: MeasureKind, grid: &[f64], force: bool) -> Result<Vec<TracePoint>> {
    let mut out = Vec::with_capacity(grid.len() * p.graph.node_count());
    for &alpha in grid {
        let values = p.values(kind, alpha, force)?;
        let ranks = p.ranks(kind, &values)?;
        out.extend(values.iter().zip(&ranks).enumerate().map(|(node, (&value, &rank))| TracePoint {
            alpha,
            node,
            value,
            rank,
        }));
    }
    Ok(out)
}

/// Population variance as `log2`, computed on values scaled by their
/// largest magnitude so that squares cannot overflow.
pub fn log2_variance(values: &[f64]) -> f64 {
    let scale = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if !scale.is_finite() || values.is_empty() {
        return f64::NAN;
    }
    if scale == 0.0 {
        return f64::NEG_INFINITY;
    }
    2.0 * scale.log2() + variance(values.iter().map(|v| v / scale)).log2()
}

/// Population variance.
pub fn variance<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let v: Vec<f64> = values.into_iter().collect();
    let n = v.len() as f64;
    let mean = v.iter().sum::<f64>() / n;
    v.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n
}

/// Across-node variance of each of the six measures at each `alpha`, in the
/// order of [`MeasureKind::ALL`]. Prod and sum kinds report `log2` of the
/// variance. A measure that cannot be evaluated at some `alpha` yields NaN,
/// except that an unsafe `alpha` without `force` is an error.
pub fn variance_trace(p: &Prepared, grid: &[f64], force: bool) -> Result<Vec<(f64, [f64; 6])>> {
    let mut rows = Vec::with_capacity(grid.len());
    for &alpha in grid {
        let mut row = [f64::NAN; 6];
        for (slot, kind) in row.iter_mut().zip(MeasureKind::ALL) {
            if kind.reach == Reach::Closeness && p.closeness_bench.is_none() {
                continue;
            }
            let values = match p.values(kind, alpha, force) {
                Ok(v) => v,
                Err(e @ Error::OutsideSafeInterval { .. }) => return Err(e),
                Err(_) => continue,
            };
            *slot = match kind.summarization {
                Summarization::Log => variance(values.iter().copied()),
                _ => log2_variance(&values),
            };
        }
        rows.push((alpha, row));
    }
    Ok(rows)
}

/// CSV text for a number: `inf`, `-inf`, `NA` for NaN, otherwise the
/// shortest round-tripping decimal.
pub fn fmt_num(x: f64) -> String {
    if x.is_nan() {
        "NA".to_string()
    } else if x == f64::INFINITY {
        "inf".to_string()
    } else if x == f64::NEG_INFINITY {
        "-inf".to_string()
    } else {
        format!("{x}")
    }
}
