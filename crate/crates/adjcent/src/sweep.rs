//! Parameter sweeps over the random models.
//!
//! A sweep is described by a flat `key=value` file:
//!
//! ```text
//! # how the useful interval grows with the weight mean
//! experiment=mu-sweep
//! model=er_normal
//! param=mu
//! grid=10,20,40,80
//! n=200
//! p=0.2
//! sigma=1
//! replicates=100
//! seed=42
//! ```
//!
//! Keys: `experiment`, `model` (`er_normal`, `wrg`, `rewire`), `param`,
//! `grid`, `n`, `p` (a number or `auto` for `ln n / sqrt n`), `mu`,
//! `sigma`, `cv` (sets `sigma = cv * mu`), `replicates`, `seed`,
//! `require_connected`, `max_retries`, `invert_weights`, `input` and
//! `directed` (for `rewire`).
//!
//! Swept parameters: `n`, `p`, `mu`, `sigma`, `cv` and `scale` (multiplies
//! both `mu` and `sigma`) for `er_normal`; `n` and `p` for `wrg`; `swaps`
//! for `rewire`.
//!
//! Replicate `k` at every grid value draws from `derive_seed(seed, k)`, so
//! neighbouring grid values share their random streams.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use adjcent_core::intervals::{closeness_lines_from, degree_lines_from};
use adjcent_core::{
    derive_seed, er_normal, rewire, useful_interval, wrg_with, Benchmarks, Error, ModelConfig,
    UsefulInterval, WeightedGraph,
};
use rayon::prelude::*;
use thiserror::Error;

use crate::analysis::fmt_num;
use crate::summary::summarize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("line {line}: expected `key=value`")]
    Syntax { line: usize },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: `{key}` given twice")]
    Repeated { line: usize, key: String },
    #[error("`{key}`: cannot parse `{value}`")]
    BadValue { key: String, value: String },
    #[error("missing required key `{0}`")]
    Missing(&'static str),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    ErNormal,
    Wrg,
    Rewire,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Param {
    N,
    P,
    Mu,
    Sigma,
    Cv,
    Scale,
    Swaps,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::N => "n",
            Param::P => "p",
            Param::Mu => "mu",
            Param::Sigma => "sigma",
            Param::Cv => "cv",
            Param::Scale => "scale",
            Param::Swaps => "swaps",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Density {
    Fixed(f64),
    /// `ln n / sqrt n`.
    Auto,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub experiment: String,
    pub model: Model,
    pub param: Param,
    pub grid: Vec<f64>,
    pub n: usize,
    pub p: Density,
    pub mu: f64,
    pub sigma: f64,
    pub replicates: usize,
    pub seed: Option<u64>,
    pub require_connected: bool,
    pub max_retries: usize,
    pub invert_weights: bool,
    pub input: Option<PathBuf>,
    pub directed: bool,
}

const KEYS: [&str; 16] = [
    "experiment",
    "model",
    "param",
    "grid",
    "n",
    "p",
    "mu",
    "sigma",
    "cv",
    "replicates",
    "seed",
    "require_connected",
    "max_retries",
    "invert_weights",
    "input",
    "directed",
];

fn value<T: std::str::FromStr>(key: &str, raw: &str) -> Result<T, SpecError> {
    raw.parse().map_err(|_| SpecError::BadValue {
        key: key.to_string(),
        value: raw.to_string(),
    })
}

fn flag(key: &str, raw: &str) -> Result<bool, SpecError> {
    match raw.to_ascii_lowercase().as_str() {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(SpecError::BadValue {
            key: key.to_string(),
            value: raw.to_string(),
        }),
    }
}

impl SweepSpec {
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        let mut map: BTreeMap<String, String> = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (k, v) = trimmed.split_once('=').ok_or(SpecError::Syntax { line })?;
            let key = k.trim().to_ascii_lowercase();
            if !KEYS.contains(&key.as_str()) {
                return Err(SpecError::UnknownKey { line, key });
            }
            if map.insert(key.clone(), v.trim().to_string()).is_some() {
                return Err(SpecError::Repeated { line, key });
            }
        }
        let get = |k: &str| map.get(k).map(String::as_str);

        let model = match get("model").ok_or(SpecError::Missing("model"))? {
            "er_normal" | "er-normal" => Model::ErNormal,
            "wrg" => Model::Wrg,
            "rewire" => Model::Rewire,
            other => return Err(SpecError::BadValue { key: "model".into(), value: other.into() }),
        };
        let param = match get("param").ok_or(SpecError::Missing("param"))? {
            "n" => Param::N,
            "p" => Param::P,
            "mu" => Param::Mu,
            "sigma" => Param::Sigma,
            "cv" => Param::Cv,
            "scale" => Param::Scale,
            "swaps" => Param::Swaps,
            other => return Err(SpecError::BadValue { key: "param".into(), value: other.into() }),
        };
        let allowed: &[Param] = match model {
            Model::ErNormal => &[Param::N, Param::P, Param::Mu, Param::Sigma, Param::Cv, Param::Scale],
            Model::Wrg => &[Param::N, Param::P],
            Model::Rewire => &[Param::Swaps],
        };
        if !allowed.contains(&param) {
            return Err(SpecError::Invalid(format!(
                "parameter `{}` cannot be swept for this model",
                param.name()
            )));
        }
        let grid = get("grid")
            .ok_or(SpecError::Missing("grid"))?
            .split(',')
            .map(|x| value::<f64>("grid", x.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        if grid.is_empty() || grid.iter().any(|x| !x.is_finite()) {
            return Err(SpecError::Invalid("grid must list finite numbers".into()));
        }
        if matches!(param, Param::N | Param::Swaps) && grid.iter().any(|x| x.fract() != 0.0 || *x < 0.0) {
            return Err(SpecError::Invalid(format!("`{}` grid values must be whole numbers", param.name())));
        }

        let defaults = ModelConfig::default();
        let mu = get("mu").map(|v| value("mu", v)).transpose()?.unwrap_or(defaults.mu);
        let sigma = match (get("sigma"), get("cv")) {
            (Some(_), Some(_)) => return Err(SpecError::Invalid("give either `sigma` or `cv`, not both".into())),
            (Some(s), None) => value("sigma", s)?,
            (None, Some(cv)) => value::<f64>("cv", cv)? * mu,
            (None, None) => defaults.sigma,
        };
        let p = match get("p") {
            None => Density::Fixed(defaults.p),
            Some("auto") => Density::Auto,
            Some(v) => Density::Fixed(value("p", v)?),
        };
        let replicates = get("replicates").map(|v| value("replicates", v)).transpose()?.unwrap_or(1);
        if replicates == 0 {
            return Err(SpecError::Invalid("`replicates` must be positive".into()));
        }
        let input = get("input").map(PathBuf::from);
        if model == Model::Rewire && input.is_none() {
            return Err(SpecError::Missing("input"));
        }
        Ok(Self {
            experiment: get("experiment").unwrap_or("sweep").to_string(),
            model,
            param,
            grid,
            n: get("n").map(|v| value("n", v)).transpose()?.unwrap_or(defaults.n),
            p,
            mu,
            sigma,
            replicates,
            seed: get("seed").map(|v| value("seed", v)).transpose()?,
            require_connected: get("require_connected")
                .map(|v| flag("require_connected", v))
                .transpose()?
                .unwrap_or(false),
            max_retries: get("max_retries")
                .map(|v| value("max_retries", v))
                .transpose()?
                .unwrap_or(defaults.max_retries),
            invert_weights: get("invert_weights")
                .map(|v| flag("invert_weights", v))
                .transpose()?
                .unwrap_or(true),
            input,
            directed: get("directed").map(|v| flag("directed", v)).transpose()?.unwrap_or(false),
        })
    }

    /// Model configuration at grid value `x` for a given replicate seed.
    pub fn config_at(&self, x: f64, seed: u64) -> ModelConfig {
        let mut n = self.n;
        let mut mu = self.mu;
        let mut sigma = self.sigma;
        let mut p = self.p;
        match self.param {
            Param::N => n = x as usize,
            Param::P => p = Density::Fixed(x),
            Param::Mu => mu = x,
            Param::Sigma => sigma = x,
            Param::Cv => sigma = x * mu,
            Param::Scale => {
                mu *= x;
                sigma *= x;
            }
            Param::Swaps => {}
        }
        let p = match p {
            Density::Fixed(p) => p,
            Density::Auto => (n as f64).ln() / (n as f64).sqrt(),
        };
        ModelConfig {
            n,
            p,
            mu,
            sigma,
            seed,
            require_connected: self.require_connected,
            max_retries: self.max_retries,
        }
    }
}

/// Per-replicate measurements. NaN marks a value that could not be computed;
/// `error` then says why.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub value: f64,
    pub replicate: usize,
    pub seed: u64,
    pub mean_degree: f64,
    pub mean_strength: f64,
    pub mean_dist: f64,
    pub mean_dist_w: f64,
    pub ud: Option<(f64, f64)>,
    pub uc: Option<(f64, f64)>,
    pub error: Option<String>,
}

pub const METRICS: [&str; 10] = [
    "mean_degree",
    "mean_strength",
    "mean_dist",
    "mean_dist_w",
    "ud_lo",
    "ud_hi",
    "ud_len",
    "uc_lo",
    "uc_hi",
    "uc_len",
];

fn span(u: &UsefulInterval) -> (f64, f64) {
    (u.interval.lo(), u.interval.hi())
}

fn len((lo, hi): (f64, f64)) -> f64 {
    if lo == hi {
        0.0
    } else {
        hi - lo
    }
}

impl SweepRecord {
    fn failed(value: f64, replicate: usize, seed: u64, error: String) -> Self {
        Self {
            value,
            replicate,
            seed,
            mean_degree: f64::NAN,
            mean_strength: f64::NAN,
            mean_dist: f64::NAN,
            mean_dist_w: f64::NAN,
            ud: None,
            uc: None,
            error: Some(error),
        }
    }

    pub fn metric(&self, i: usize) -> f64 {
        let pick = |s: Option<(f64, f64)>, f: fn((f64, f64)) -> f64| s.map_or(f64::NAN, f);
        match i {
            0 => self.mean_degree,
            1 => self.mean_strength,
            2 => self.mean_dist,
            3 => self.mean_dist_w,
            4 => pick(self.ud, |s| s.0),
            5 => pick(self.ud, |s| s.1),
            6 => pick(self.ud, len),
            7 => pick(self.uc, |s| s.0),
            8 => pick(self.uc, |s| s.1),
            9 => pick(self.uc, len),
            _ => f64::NAN,
        }
    }
}

/// Summary quantities of one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphMetrics {
    pub mean_degree: f64,
    pub mean_strength: f64,
    pub mean_dist: f64,
    pub mean_dist_w: f64,
    pub ud: Result<(f64, f64), Error>,
    pub uc: Result<(f64, f64), Error>,
}

/// Measures one graph. Distances are averaged over ordered pairs of distinct
/// nodes that can reach each other; weighted distances use reciprocal
/// weights when `invert` is set.
pub fn measure(g: &WeightedGraph, invert: bool) -> GraphMetrics {
    let n = g.node_count();
    let nf = n as f64;
    let mean_degree = 2.0 * g.edge_count() as f64 / nf;
    let strengths = g.strengths();
    let mean_strength = strengths.iter().sum::<f64>() / nf;
    let lengths = if invert { g.invert_weights() } else { g.clone() };

    let mut hop_total = 0.0;
    let mut w_total = 0.0;
    let mut pairs = 0usize;
    let mut cc = Vec::with_capacity(n);
    let mut ccw = Vec::with_capacity(n);
    let mut connected = n >= 2;
    for u in 0..n {
        let hops = lengths.unweighted_distances(u).expect("valid node");
        let dist = lengths.weighted_distances(u, 1.0).expect("alpha = 1 never overflows");
        let (mut hs, mut ws) = (0.0, 0.0);
        for v in 0..n {
            if v != u && hops[v].is_finite() {
                hs += hops[v];
                ws += dist[v];
                pairs += 1;
            } else if v != u {
                connected = false;
            }
        }
        hop_total += hs;
        w_total += ws;
        cc.push(1.0 / hs);
        ccw.push(1.0 / ws);
    }
    let mean_dist = hop_total / pairs as f64;
    let mean_dist_w = w_total / pairs as f64;

    let degree_bench = Benchmarks {
        degree: g.degrees(),
        strength: strengths,
        closeness: None,
        weighted_closeness: None,
    };
    let ud = degree_lines_from(&degree_bench).map(|l| span(&useful_interval(&l)));
    let uc = if connected {
        let bench = Benchmarks {
            degree: Vec::new(),
            strength: Vec::new(),
            closeness: Some(cc),
            weighted_closeness: Some(ccw),
        };
        closeness_lines_from(&bench).map(|l| span(&useful_interval(&l)))
    } else {
        Err(Error::Disconnected)
    };
    GraphMetrics {
        mean_degree,
        mean_strength,
        mean_dist,
        mean_dist_w,
        ud,
        uc,
    }
}

/// Runs every `(grid value, replicate)` pair, in parallel, and returns the
/// records sorted by grid position then replicate index.
pub fn run_sweep(spec: &SweepSpec, base_seed: u64, input: Option<&WeightedGraph>) -> Result<Vec<SweepRecord>, Error> {
    if spec.model == Model::Rewire && input.is_none() {
        return Err(Error::InvalidParameter("rewire sweeps need an input graph"));
    }
    let jobs: Vec<(usize, usize)> = (0..spec.grid.len())
        .flat_map(|i| (0..spec.replicates).map(move |k| (i, k)))
        .collect();
    Ok(jobs
        .par_iter()
        .map(|&(i, k)| {
            let x = spec.grid[i];
            let seed = derive_seed(base_seed, k as u64);
            let generated = match spec.model {
                Model::ErNormal => er_normal(&spec.config_at(x, seed)),
                Model::Wrg => wrg_with(&spec.config_at(x, seed)),
                Model::Rewire => rewire(input.expect("checked above"), x as usize, seed),
            };
            let g = match generated {
                Ok(g) => g,
                Err(e) => return SweepRecord::failed(x, k, seed, e.to_string()),
            };
            let m = measure(&g, spec.invert_weights);
            let errors: Vec<String> = [("ud", &m.ud), ("uc", &m.uc)]
                .iter()
                .filter_map(|(name, r)| r.as_ref().err().map(|e| format!("{name}: {e}")))
                .collect();
            SweepRecord {
                value: x,
                replicate: k,
                seed,
                mean_degree: m.mean_degree,
                mean_strength: m.mean_strength,
                mean_dist: m.mean_dist,
                mean_dist_w: m.mean_dist_w,
                ud: m.ud.ok(),
                uc: m.uc.ok(),
                error: (!errors.is_empty()).then(|| errors.join("; ")),
            }
        })
        .collect())
}

pub const RECORD_HEADER: [&str; 16] = [
    "experiment",
    "param",
    "value",
    "replicate",
    "seed",
    "mean_degree",
    "mean_strength",
    "mean_dist",
    "mean_dist_w",
    "ud_lo",
    "ud_hi",
    "ud_len",
    "uc_lo",
    "uc_hi",
    "uc_len",
    "error",
];

pub fn write_records<W: Write>(spec: &SweepSpec, records: &[SweepRecord], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(RECORD_HEADER)?;
    for r in records {
        let mut row = vec![
            spec.experiment.clone(),
            spec.param.name().to_string(),
            fmt_num(r.value),
            r.replicate.to_string(),
            r.seed.to_string(),
        ];
        row.extend((0..METRICS.len()).map(|i| fmt_num(r.metric(i))));
        row.push(r.error.clone().unwrap_or_default());
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

/// Summary of one metric at one grid value. `count` excludes NA entries; a
/// metric with no values at all has NaN statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub value: f64,
    pub metric: &'static str,
    pub count: usize,
    pub median: f64,
    pub iqr: f64,
    pub mean: f64,
    pub std: f64,
}

pub fn summarize_records(spec: &SweepSpec, records: &[SweepRecord]) -> Vec<SummaryRow> {
    let mut rows = Vec::new();
    for &x in &spec.grid {
        let group: Vec<&SweepRecord> = records.iter().filter(|r| r.value == x).collect();
        for (i, metric) in METRICS.iter().enumerate() {
            let values: Vec<f64> = group.iter().map(|r| r.metric(i)).filter(|v| !v.is_nan()).collect();
            let row = match summarize(&values) {
                Ok(s) => SummaryRow {
                    value: x,
                    metric,
                    count: s.count,
                    median: s.median,
                    iqr: s.iqr,
                    mean: s.mean,
                    std: s.std,
                },
                Err(_) => SummaryRow {
                    value: x,
                    metric,
                    count: 0,
                    median: f64::NAN,
                    iqr: f64::NAN,
                    mean: f64::NAN,
                    std: f64::NAN,
                },
            };
            rows.push(row);
        }
    }
    rows
}

pub fn write_summary<W: Write>(spec: &SweepSpec, rows: &[SummaryRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["experiment", "param", "value", "metric", "count", "median", "iqr", "mean", "std"])?;
    for r in rows {
        w.write_record([
            spec.experiment.clone(),
            spec.param.name().to_string(),
            fmt_num(r.value),
            r.metric.to_string(),
            r.count.to_string(),
            fmt_num(r.median),
            fmt_num(r.iqr),
            fmt_num(r.mean),
            fmt_num(r.std),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Output file names for an experiment under `dir`.
pub fn output_paths(dir: &Path, experiment: &str) -> (PathBuf, PathBuf) {
    (
        dir.join(format!("{experiment}_records.csv")),
        dir.join(format!("{experiment}_summary.csv")),
    )
}
