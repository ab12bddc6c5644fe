//! Useful intervals of `alpha`: the range between the first and last values
//! at which the node ranking under a log measure changes.
//!
//! Each node's log centrality is a line in `alpha`, so the endpoints are the
//! leftmost and rightmost crossings of those lines once exact duplicates
//! (nodes tied at every `alpha`) are merged.

use alloc::vec::Vec;

use crate::centrality::{Benchmarks, Reach};
use crate::error::{Error, Result};
use crate::extrema::{extrema, Line};
use crate::graph::WeightedGraph;
use crate::numeric::{log2, ExtendedInterval};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degeneracy {
    None,
    /// No two distinct lines cross; the interval is the whole real line.
    NoChangePoints,
    /// Every crossing happens at the same `alpha`.
    SinglePoint,
}

#[derive(Debug, Clone, PartialEq)]
pub struct UsefulInterval {
    pub interval: ExtendedInterval,
    pub degenerate: Degeneracy,
    /// Groups of tags whose lines coincide (tied at every `alpha`), two or
    /// more tags per group, each group sorted.
    pub ties: Vec<Vec<usize>>,
    pub left_pair: Option<(usize, usize)>,
    pub right_pair: Option<(usize, usize)>,
}

impl UsefulInterval {
    pub fn length(&self) -> f64 {
        self.interval.length()
    }
}

/// One line per node: slope `log2(s/k)`, intercept `log2(k)`.
pub fn degree_lines(g: &WeightedGraph) -> Result<Vec<Line>> {
    let bench = Benchmarks::compute(g);
    degree_lines_from(&bench)
}

pub fn degree_lines_from(bench: &Benchmarks) -> Result<Vec<Line>> {
    bench
        .degree
        .iter()
        .zip(&bench.strength)
        .enumerate()
        .map(|(u, (&k, &s))| {
            if k == 0 {
                return Err(Error::ZeroDegree(u));
            }
            let k = k as f64;
            Ok(Line::new(log2(s / k), log2(k), u))
        })
        .collect()
}

/// One line per node: slope `log2(C_C^w / C_C)`, intercept `log2(C_C)`.
///
/// With `invert` set, weighted closeness uses reciprocal edge weights.
pub fn closeness_lines(g: &WeightedGraph, invert: bool) -> Result<Vec<Line>> {
    let bench = if invert {
        Benchmarks::compute(&g.invert_weights())
    } else {
        Benchmarks::compute(g)
    };
    closeness_lines_from(&bench)
}

pub fn closeness_lines_from(bench: &Benchmarks) -> Result<Vec<Line>> {
    match (&bench.closeness, &bench.weighted_closeness) {
        (Some(cc), Some(ccw)) => Ok(cc
            .iter()
            .zip(ccw)
            .enumerate()
            .map(|(u, (&c, &w))| Line::new(log2(w / c), log2(c), u))
            .collect()),
        _ => Err(Error::Disconnected),
    }
}

/// Useful interval spanned by the crossings of `lines`.
pub fn useful_interval(lines: &[Line]) -> UsefulInterval {
    let (survivors, ties) = dedup_coincident(lines);
    let no_change = UsefulInterval {
        interval: ExtendedInterval::real_line(),
        degenerate: Degeneracy::NoChangePoints,
        ties: ties.clone(),
        left_pair: None,
        right_pair: None,
    };
    if survivors.len() < 2 {
        return no_change;
    }
    // Survivors are pairwise non-coincident, so this cannot fail.
    let ext = match extrema(&survivors) {
        Ok(e) => e,
        Err(_) => return no_change,
    };
    if !ext.has_intersection {
        return no_change;
    }
    let degenerate = if ext.leftmost == ext.rightmost {
        Degeneracy::SinglePoint
    } else {
        Degeneracy::None
    };
    UsefulInterval {
        interval: ExtendedInterval::new(ext.leftmost, ext.rightmost)
            .unwrap_or(ExtendedInterval::real_line()),
        degenerate,
        ties,
        left_pair: ext.leftmost_pair,
        right_pair: ext.rightmost_pair,
    }
}

pub fn degree_useful_interval(g: &WeightedGraph) -> Result<UsefulInterval> {
    Ok(useful_interval(&degree_lines(g)?))
}

pub fn closeness_useful_interval(g: &WeightedGraph, invert: bool) -> Result<UsefulInterval> {
    Ok(useful_interval(&closeness_lines(g, invert)?))
}

/// Useful interval for either reach; closeness honours `invert`.
pub fn useful_interval_for(g: &WeightedGraph, reach: Reach, invert: bool) -> Result<UsefulInterval> {
    match reach {
        Reach::Degree => degree_useful_interval(g),
        Reach::Closeness => closeness_useful_interval(g, invert),
    }
}

fn dedup_coincident(lines: &[Line]) -> (Vec<Line>, Vec<Vec<usize>>) {
    let mut sorted = lines.to_vec();
    sorted.sort_by(|a, b| {
        (a.slope + 0.0)
            .total_cmp(&(b.slope + 0.0))
            .then((a.intercept + 0.0).total_cmp(&(b.intercept + 0.0)))
            .then(a.tag.cmp(&b.tag))
    });
    let mut survivors: Vec<Line> = Vec::with_capacity(sorted.len());
    let mut ties = Vec::new();
    let mut group: Vec<usize> = Vec::new();
    for line in sorted {
        match survivors.last() {
            Some(last) if last.slope == line.slope && last.intercept == line.intercept => {
                if group.is_empty() {
                    group.push(last.tag);
                }
                group.push(line.tag);
            }
            _ => {
                if group.len() > 1 {
                    ties.push(core::mem::take(&mut group));
                }
                group.clear();
                survivors.push(line);
            }
        }
    }
    if group.len() > 1 {
        ties.push(group);
    }
    (survivors, ties)
}
