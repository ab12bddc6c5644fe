//! Leftmost and rightmost crossings of a set of unbounded lines.
//!
//! [`leftmost_intersection`] runs in `O(n log n)`:
//!
//! 1. Find any crossing `r` of two lines with different slopes. If none
//!    exists every line is parallel to the first one and there is no crossing.
//! 2. The leftmost crossing is at most `r`, hence strictly left of any probe
//!    `X > r`. Sort the lines by their value at `X`.
//! 3. Walk the sorted lines. A line can only cross an earlier (lower at `X`)
//!    line to the left of `X` if that line has a smaller slope, and among those
//!    the one with the greatest slope gives the leftmost candidate. An ordered
//!    slope index answers that predecessor query in `O(log n)`.
//!
//! The rightmost crossing is the mirrored leftmost crossing of the lines with
//! negated slopes. [`brute_force_extrema`] checks all pairs and serves as the
//! reference.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};

/// `y = slope * x + intercept`, carrying a caller-defined tag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    pub slope: f64,
    pub intercept: f64,
    pub tag: usize,
}

impl Line {
    pub fn new(slope: f64, intercept: f64, tag: usize) -> Self {
        Self {
            slope,
            intercept,
            tag,
        }
    }

    pub fn at(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }

    fn mirrored(&self) -> Self {
        Self {
            slope: -self.slope,
            ..*self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Intersection {
    Point(f64),
    Parallel,
    Coincident,
}

/// Abscissa where two lines cross: `(b2 - b1) / (a1 - a2)`.
pub fn pairwise_intersection(l1: &Line, l2: &Line) -> Intersection {
    if l1.slope == l2.slope {
        if l1.intercept == l2.intercept {
            Intersection::Coincident
        } else {
            Intersection::Parallel
        }
    } else {
        Intersection::Point(crossing(l1, l2))
    }
}

// `+ 0.0` turns a negative zero into a positive one.
fn crossing(l1: &Line, l2: &Line) -> f64 {
    (l2.intercept - l1.intercept) / (l1.slope - l2.slope) + 0.0
}

/// An extremal crossing and the tags of the two lines that form it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Crossing {
    /// `-inf` (leftmost) or `+inf` (rightmost) when no two lines cross.
    pub x: f64,
    pub pair: Option<(usize, usize)>,
}

impl Crossing {
    const fn none(x: f64) -> Self {
        Self { x, pair: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremaResult {
    pub leftmost: f64,
    pub rightmost: f64,
    pub has_intersection: bool,
    pub leftmost_pair: Option<(usize, usize)>,
    pub rightmost_pair: Option<(usize, usize)>,
}

impl ExtremaResult {
    fn from_crossings(left: Crossing, right: Crossing) -> Self {
        Self {
            leftmost: left.x,
            rightmost: right.x,
            has_intersection: left.pair.is_some(),
            leftmost_pair: left.pair,
            rightmost_pair: right.pair,
        }
    }
}

/// Checks every pair of lines. `O(n^2)`.
pub fn brute_force_extrema(lines: &[Line]) -> Result<ExtremaResult> {
    let mut left = Crossing::none(f64::NEG_INFINITY);
    let mut right = Crossing::none(f64::INFINITY);
    for (i, li) in lines.iter().enumerate() {
        for lj in &lines[i + 1..] {
            match pairwise_intersection(li, lj) {
                Intersection::Coincident => return Err(Error::CoincidentLines(li.tag, lj.tag)),
                Intersection::Parallel => {}
                Intersection::Point(x) => {
                    if left.pair.is_none() || x < left.x {
                        left = Crossing {
                            x,
                            pair: Some((li.tag, lj.tag)),
                        };
                    }
                    if right.pair.is_none() || x > right.x {
                        right = Crossing {
                            x,
                            pair: Some((li.tag, lj.tag)),
                        };
                    }
                }
            }
        }
    }
    Ok(ExtremaResult::from_crossings(left, right))
}

/// Both extrema via the `O(n log n)` sweep.
pub fn extrema(lines: &[Line]) -> Result<ExtremaResult> {
    Ok(ExtremaResult::from_crossings(
        leftmost_intersection(lines)?,
        rightmost_intersection(lines)?,
    ))
}

/// Smallest abscissa at which two of the lines cross.
pub fn leftmost_intersection(lines: &[Line]) -> Result<Crossing> {
    let Some(r) = first_crossing(lines) else {
        ensure_distinct_intercepts(lines)?;
        return Ok(Crossing::none(f64::NEG_INFINITY));
    };

    let probe = probe_right_of(r);
    let ranks = slope_ranks(lines);
    let distinct = ranks.iter().copied().max().map_or(0, |r| r + 1);

    // Each entry carries its own line so the sweep below reads memory in
    // order instead of chasing indices.
    let mut order: Vec<(Dd, Line, usize)> = lines
        .iter()
        .zip(&ranks)
        .map(|(l, &r)| (Dd::line_value(l, probe), *l, r))
        .collect();
    order.sort_unstable_by(|(ka, la, ra), (kb, lb, rb)| {
        ka.cmp(kb)
            .then_with(|| ra.cmp(rb))
            .then_with(|| la.intercept.total_cmp(&lb.intercept))
    });

    // Per distinct slope, the line with the smallest intercept seen so far.
    let mut lowest: Vec<Option<Line>> = vec![None; distinct];
    let mut seen = RankSet::new(distinct);
    let mut best = Crossing::none(f64::NEG_INFINITY);
    let mut previous: Option<&Line> = None;
    for (_, line, rank) in &order {
        // Coincident lines share slope and key, so they end up adjacent.
        if let Some(prev) = previous {
            if prev.slope == line.slope && prev.intercept == line.intercept {
                return Err(Error::CoincidentLines(prev.tag, line.tag));
            }
        }
        previous = Some(line);

        if let Some(below) = seen.predecessor(*rank).and_then(|r| lowest[r]) {
            let t = crossing(line, &below);
            if best.pair.is_none() || t < best.x {
                best = Crossing {
                    x: t,
                    pair: Some((below.tag, line.tag)),
                };
            }
        }
        let slot = &mut lowest[*rank];
        match slot {
            Some(kept) if kept.intercept <= line.intercept => {}
            _ => *slot = Some(*line),
        }
        seen.insert(*rank);
    }
    Ok(best)
}

/// Largest abscissa at which two of the lines cross.
pub fn rightmost_intersection(lines: &[Line]) -> Result<Crossing> {
    let mirrored: Vec<Line> = lines.iter().map(Line::mirrored).collect();
    let left = leftmost_intersection(&mirrored)?;
    Ok(Crossing {
        x: -left.x + 0.0,
        pair: left.pair,
    })
}

/// Replaces slopes that lie within `tolerance` of each other (chained through
/// the sorted slope sequence) by the smallest slope of their group, so exact
/// comparisons afterwards treat them as parallel.
pub fn snap_slopes(lines: &[Line], tolerance: f64) -> Vec<Line> {
    let mut out = lines.to_vec();
    if !(tolerance > 0.0) || out.len() < 2 {
        return out;
    }
    let mut order: Vec<usize> = (0..out.len()).collect();
    order.sort_by(|&a, &b| out[a].slope.total_cmp(&out[b].slope));
    let mut anchor = out[order[0]].slope;
    let mut prev = anchor;
    for &i in &order[1..] {
        let s = out[i].slope;
        if s - prev > tolerance {
            anchor = s;
        }
        prev = s;
        out[i].slope = anchor;
    }
    out
}

fn first_crossing(lines: &[Line]) -> Option<f64> {
    let first = lines.first()?;
    lines
        .iter()
        .find(|l| l.slope != first.slope)
        .map(|l| crossing(first, l))
}

// Any probe strictly greater than `r` works; `r + 1` unless that rounds back
// to `r` for huge magnitudes.
fn probe_right_of(r: f64) -> f64 {
    r + f64::max(1.0, r.abs() * 1e-9)
}

fn ensure_distinct_intercepts(lines: &[Line]) -> Result<()> {
    let mut sorted: Vec<&Line> = lines.iter().collect();
    sorted.sort_by(|a, b| a.intercept.total_cmp(&b.intercept));
    match sorted.windows(2).find(|w| w[0].intercept == w[1].intercept) {
        Some(w) => Err(Error::CoincidentLines(w[0].tag, w[1].tag)),
        None => Ok(()),
    }
}

/// Dense rank of each line's slope among the distinct slopes, `-0.0` and
/// `0.0` counting as one.
fn slope_ranks(lines: &[Line]) -> Vec<usize> {
    let mut by_slope: Vec<(f64, usize)> = lines.iter().enumerate().map(|(i, l)| (l.slope + 0.0, i)).collect();
    by_slope.sort_unstable_by(|a, b| a.0.total_cmp(&b.0));
    let mut ranks = vec![0; lines.len()];
    let mut rank = 0;
    for (j, &(slope, i)) in by_slope.iter().enumerate() {
        if j > 0 && slope != by_slope[j - 1].0 {
            rank += 1;
        }
        ranks[i] = rank;
    }
    ranks
}

/// Set of integers below a fixed bound with predecessor queries.
///
/// Level 0 holds one bit per element; bit `j` of level `l + 1` is set when
/// word `j` of level `l` is non-zero. Queries walk up until a word has a set
/// bit below the position, then take the highest bit on the way down.
struct RankSet {
    levels: Vec<Vec<u64>>,
}

impl RankSet {
    fn new(universe: usize) -> Self {
        let mut levels = Vec::new();
        let mut size = universe.max(1);
        loop {
            let words = size.div_ceil(64);
            levels.push(vec![0u64; words]);
            if words == 1 {
                break;
            }
            size = words;
        }
        Self { levels }
    }

    fn insert(&mut self, mut x: usize) {
        for level in &mut self.levels {
            level[x / 64] |= 1 << (x % 64);
            x /= 64;
        }
    }

    /// Largest member strictly below `x`.
    fn predecessor(&self, mut x: usize) -> Option<usize> {
        for (l, level) in self.levels.iter().enumerate() {
            let below = level[x / 64] & ((1u64 << (x % 64)) - 1);
            if below != 0 {
                let mut found = (x / 64) * 64 + highest_bit(below);
                for lower in self.levels[..l].iter().rev() {
                    found = found * 64 + highest_bit(lower[found]);
                }
                return Some(found);
            }
            x /= 64;
        }
        None
    }
}

fn highest_bit(word: u64) -> usize {
    63 - word.leading_zeros() as usize
}

/// `slope * x + intercept` held as an unevaluated sum `hi + lo`, accurate to
/// about 106 bits, so near-parallel lines sort in their true order.
#[derive(Debug, Clone, Copy)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    fn line_value(line: &Line, x: f64) -> Self {
        let p = line.slope * x;
        let p_err = libm::fma(line.slope, x, -p);
        let (s, s_err) = two_sum(p, line.intercept);
        let (hi, lo) = fast_two_sum(s, p_err + s_err);
        Self { hi, lo }
    }

    fn cmp(&self, other: &Self) -> Ordering {
        self.hi
            .total_cmp(&other.hi)
            .then_with(|| (self.lo + 0.0).total_cmp(&(other.lo + 0.0)))
    }
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

fn fast_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}
