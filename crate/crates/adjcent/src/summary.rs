//! Median and interquartile range over samples that may contain infinities.
//!
//! Quartiles use linear interpolation between closest ranks over the sorted
//! sample, with positions `(count - 1) * q` (the "inclusive" rule, as in
//! numpy's default or R type 7). `-inf` sorts below and `+inf` above every
//! finite value. Interpolating next to an infinity yields that infinity.

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SummaryStat {
    pub median: f64,
    pub iqr: f64,
    pub count: usize,
    pub mean: f64,
    /// Sample standard deviation; 0 for a single value, `+inf` once any value
    /// is infinite.
    pub std: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SummaryError {
    #[error("cannot summarize an empty sample")]
    Empty,
    #[error("sample contains NaN")]
    NotANumber,
}

/// Quantile `q` of an ascending sample under the inclusive rule.
pub fn quantile_sorted(sorted: &[f64], q: f64) -> f64 {
    debug_assert!(!sorted.is_empty());
    let h = (sorted.len() - 1) as f64 * q;
    let lo = h.floor() as usize;
    let frac = h - lo as f64;
    let a = sorted[lo];
    if frac == 0.0 || lo + 1 >= sorted.len() {
        return a;
    }
    let b = sorted[lo + 1];
    match (a.is_infinite(), b.is_infinite()) {
        (false, false) => a + frac * (b - a),
        (true, false) => a,
        (false, true) => b,
        // Both infinite: equal signs give that infinity, -inf..+inf has no value.
        (true, true) if a == b => a,
        (true, true) => f64::NAN,
    }
}

pub fn summarize(values: &[f64]) -> Result<SummaryStat, SummaryError> {
    if values.is_empty() {
        return Err(SummaryError::Empty);
    }
    if values.iter().any(|v| v.is_nan()) {
        return Err(SummaryError::NotANumber);
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let q1 = quantile_sorted(&sorted, 0.25);
    let q3 = quantile_sorted(&sorted, 0.75);
    let iqr = if q1.is_infinite() || q3.is_infinite() {
        f64::INFINITY
    } else {
        q3 - q1
    };
    let n = values.len();
    let mean = values.iter().sum::<f64>() / n as f64;
    let std = if values.iter().any(|v| v.is_infinite()) {
        f64::INFINITY
    } else if n == 1 {
        0.0
    } else {
        let ss: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
        (ss / (n - 1) as f64).sqrt()
    };
    Ok(SummaryStat {
        median: quantile_sorted(&sorted, 0.5),
        iqr,
        count: n,
        mean,
        std,
    })
}
