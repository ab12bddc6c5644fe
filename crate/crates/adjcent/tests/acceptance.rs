//! Acceptance gate. Runs every criterion in sequence and prints one line per
//! criterion; the process fails if any criterion fails.
//!
//! Criterion 12 needs the three real-world networks, which are not
//! redistributed. Point `ADJCENT_TABLE2_DIR` at a directory holding
//! `messages.tsv` (directed arcs), `usflights.tsv` and `voting.tsv` to run it.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use adjcent::analysis::Prepared;
use adjcent::io::{load_directed_edge_list, load_edge_list, parse_edge_list};
use adjcent::sweep::{run_sweep, summarize_records, SweepSpec};
use adjcent_core::extrema::{brute_force_extrema, extrema, leftmost_intersection, Line};
use adjcent_core::{
    degree_useful_interval, derive_seed, er_normal, rewire, wrg, Degeneracy, Error, ExtendedInterval,
    MeasureKind, ModelConfig, Reach, WeightedGraph,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const SAMPLE: &str = "A\tB\t100\nD\tA\t106\nB\tC\t104\nD\tB\t103\nB\tE\t102\nE\tD\t105\n";

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn rel_close(a: f64, b: f64, rel: f64) -> bool {
    a == b || (a - b).abs() <= rel * a.abs().max(b.abs())
}

fn sample_file() -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().expect("temp file");
    std::io::Write::write_all(&mut f, SAMPLE.as_bytes()).expect("write sample");
    f
}

/// Runs `adjcent analyze` and returns the header and data row.
fn cli_analyze(path: &Path, extra: &[&str]) -> Result<(Vec<String>, Vec<String>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_adjcent"))
        .args(extra)
        .arg("analyze")
        .arg(path)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(String::from_utf8_lossy(&out.stderr).into_owned());
    }
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let mut lines = text.lines();
    let split = |l: Option<&str>| l.unwrap_or("").split(',').map(str::to_string).collect::<Vec<_>>();
    Ok((split(lines.next()), split(lines.next())))
}

fn column(header: &[String], row: &[String], name: &str) -> f64 {
    let i = header.iter().position(|h| h == name).expect("column present");
    match row[i].as_str() {
        "inf" => f64::INFINITY,
        "-inf" => f64::NEG_INFINITY,
        x => x.parse().unwrap_or(f64::NAN),
    }
}

fn sample_safe_intervals() -> Outcome {
    let f = sample_file();
    let start = Instant::now();
    let (h, r) = cli_analyze(f.path(), &[])?;
    let elapsed = start.elapsed();
    let near = |name: &str, want: f64| (column(&h, &r, name) - want).abs() <= 0.05;
    let ok = near("sd_prod_lo", -118.03)
        && near("sd_prod_hi", 118.03)
        && near("sd_sum_lo", -152.2)
        && near("sd_sum_hi", 152.2)
        && near("sc_sum_lo", -152.2)
        && near("sc_sum_hi", 152.2)
        && elapsed < Duration::from_secs(1);
    check(
        ok,
        format!(
            "S_D^prod=[{}, {}] S_D^sum=[{}, {}] S_C^sum=[{}, {}] in {:?}",
            column(&h, &r, "sd_prod_lo"),
            column(&h, &r, "sd_prod_hi"),
            column(&h, &r, "sd_sum_lo"),
            column(&h, &r, "sd_sum_hi"),
            column(&h, &r, "sc_sum_lo"),
            column(&h, &r, "sc_sum_hi"),
            elapsed
        ),
    )
}

/// Quadratic reference written independently of the library.
fn oracle(lines: &[(f64, f64)]) -> Option<(f64, f64)> {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let ((a1, b1), (a2, b2)) = (lines[i], lines[j]);
            if a1 != a2 {
                let x = (b2 - b1) / (a1 - a2);
                lo = lo.min(x);
                hi = hi.max(x);
            }
        }
    }
    (lo <= hi).then_some((lo, hi))
}

fn sample_useful_interval() -> Outcome {
    let start = Instant::now();
    let g = parse_edge_list(SAMPLE).map_err(|e| e.to_string())?;
    let u = degree_useful_interval(&g).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let pairs: Vec<(f64, f64)> = g
        .degrees()
        .iter()
        .zip(g.strengths())
        .map(|(&k, s)| ((s / k as f64).log2(), (k as f64).log2()))
        .collect();
    let (lo, hi) = oracle(&pairs).ok_or("oracle found no crossing")?;
    let (ulo, uhi) = (u.interval.lo(), u.interval.hi());
    let ok = rel_close(ulo, lo, 1e-9)
        && rel_close(uhi, hi, 1e-9)
        && (ulo + 171.9).abs() <= 0.1
        && (uhi - 143.8).abs() <= 0.1
        && ulo < -135.0
        && uhi > 135.0
        && elapsed < Duration::from_secs(1);
    check(ok, format!("U_D=[{ulo}, {uhi}] oracle=[{lo}, {hi}] in {elapsed:?}"))
}

fn random_lines(rng: &mut ChaCha8Rng, n: usize) -> Vec<(f64, f64)> {
    let mut out: Vec<(f64, f64)> = Vec::with_capacity(n);
    while out.len() < n {
        match rng.random_range(0..4) {
            // Parallel cluster.
            0 => {
                let a = rng.random_range(-10.0..10.0);
                for _ in 0..rng.random_range(2..8) {
                    out.push((a, rng.random_range(-100.0..100.0)));
                }
            }
            // Slopes a few ulps apart.
            1 => {
                let a: f64 = rng.random_range(-5.0..5.0);
                for k in 0..rng.random_range(2..5u64) {
                    let bits = a.to_bits().wrapping_add(k * rng.random_range(1..4u64));
                    out.push((f64::from_bits(bits), rng.random_range(-1.0..1.0)));
                }
            }
            // Small integers, many exact ties between crossings.
            2 => out.push((
                f64::from(rng.random_range(-4..=4)),
                f64::from(rng.random_range(-4..=4)),
            )),
            _ => out.push((rng.random_range(-1e3..1e3), rng.random_range(-1e3..1e3))),
        }
    }
    out.truncate(n);
    out.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.total_cmp(&y.1)));
    out.dedup();
    out.shuffle(rng);
    out
}

fn extrema_oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let sets = 1200;
    let mut compared = 0;
    for s in 0..sets {
        let n = rng.random_range(2..=200);
        let pairs = random_lines(&mut rng, n);
        let lines: Vec<Line> = pairs.iter().enumerate().map(|(i, &(a, b))| Line::new(a, b, i)).collect();
        let fast = extrema(&lines).map_err(|e| format!("set {s}: {e}"))?;
        match oracle(&pairs) {
            None => {
                if fast.has_intersection {
                    return Err(format!("set {s}: spurious intersection"));
                }
            }
            Some((lo, hi)) => {
                if !(rel_close(fast.leftmost, lo, 1e-9) && rel_close(fast.rightmost, hi, 1e-9)) {
                    return Err(format!(
                        "set {s} (n={n}): fast [{}, {}] vs oracle [{lo}, {hi}]",
                        fast.leftmost, fast.rightmost
                    ));
                }
                compared += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    check(
        elapsed < Duration::from_secs(30),
        format!("{sets} sets ({compared} with crossings) agree in {elapsed:?}"),
    )
}

/// Random spanning tree plus extra edges, all with weight produced by `weight`.
fn random_connected<F: FnMut(&mut ChaCha8Rng) -> f64>(rng: &mut ChaCha8Rng, n: usize, extra: usize, mut weight: F) -> WeightedGraph {
    let mut seen = std::collections::BTreeSet::new();
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        seen.insert((u, v));
        edges.push((u, v, weight(rng)));
    }
    for _ in 0..extra {
        let (a, b) = (rng.random_range(0..n), rng.random_range(0..n));
        let key = (a.min(b), a.max(b));
        if a != b && seen.insert(key) {
            edges.push((key.0, key.1, weight(rng)));
        }
    }
    WeightedGraph::from_edges(n, &edges).expect("valid random graph")
}

/// `d`-regular circulant graph on `n` nodes with shuffled labels.
fn random_regular(rng: &mut ChaCha8Rng, n: usize, half_d: usize) -> WeightedGraph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges = Vec::new();
    for i in 0..n {
        for s in 1..=half_d {
            let j = (i + s) % n;
            edges.push((perm[i], perm[j], rng.random_range(0.5..50.0)));
        }
    }
    WeightedGraph::from_edges(n, &edges).expect("circulant graph is simple")
}

fn degenerate_cases() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for i in 0..20 {
        let n = rng.random_range(5..60);
        let g = random_connected(&mut rng, n, 2 * n, |_| 1.0);
        let degrees = g.degrees();
        if degrees.iter().min() == degrees.iter().max() {
            return Err(format!("unit instance {i} drew equal degrees"));
        }
        let u = degree_useful_interval(&g).map_err(|e| e.to_string())?;
        if u.interval != ExtendedInterval::real_line() || u.degenerate != Degeneracy::NoChangePoints {
            return Err(format!("unit instance {i}: {:?}", u.interval));
        }
    }
    for i in 0..20 {
        let n = rng.random_range(7..60);
        let half_d = rng.random_range(1..=3);
        let g = random_regular(&mut rng, n, half_d);
        let u = degree_useful_interval(&g).map_err(|e| e.to_string())?;
        let (lo, hi) = (u.interval.lo(), u.interval.hi());
        if !(lo == 0.0 && hi == 0.0) {
            return Err(format!("regular instance {i}: [{lo}, {hi}]"));
        }
    }
    Ok("20 unit-weight graphs give (-inf, inf); 20 regular graphs give [0, 0]".into())
}

fn uniform_weight_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    for i in 0..100 {
        let t = [0.5, 1.0, 7.0][i % 3];
        let n = rng.random_range(3..40);
        let g = random_connected(&mut rng, n, n, |_| t);
        let p = Prepared::new(g, true, false);
        let s = p
            .safe_interval(MeasureKind::DEGREE_PROD)
            .and_then(|a| Ok((a, p.safe_interval(MeasureKind::DEGREE_SUM)?)))
            .map_err(|e| e.to_string())?;
        let both = s.0.intersect(&s.1).ok_or("safe intervals are disjoint")?;
        for j in 0..50 {
            let alpha = both.lo() + (both.hi() - both.lo()) * (j as f64 + 0.5) / 50.0;
            let prod = p.values(MeasureKind::DEGREE_PROD, alpha, false).map_err(|e| e.to_string())?;
            let sum = p.values(MeasureKind::DEGREE_SUM, alpha, false).map_err(|e| e.to_string())?;
            for (u, &k) in p.degree_bench.degree.iter().enumerate() {
                let want = k as f64 * t.powf(alpha);
                if !(rel_close(prod[u], want, 1e-9) && rel_close(sum[u], want, 1e-9)) {
                    return Err(format!(
                        "graph {i} t={t} alpha={alpha} node {u}: prod {} sum {} want {want}",
                        prod[u], sum[u]
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} node values match k*t^alpha"))
}

/// Floyd-Warshall all-pairs distances; hop counts when `hops` is set.
fn floyd(g: &WeightedGraph, hops: bool) -> Vec<Vec<f64>> {
    let n = g.node_count();
    let mut d = vec![vec![f64::INFINITY; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0.0;
    }
    for e in g.edges() {
        let w = if hops { 1.0 } else { e.weight };
        d[e.u][e.v] = w;
        d[e.v][e.u] = w;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

fn benchmark_reduction() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for i in 0..50 {
        let n = rng.random_range(3..30);
        let g = random_connected(&mut rng, n, n, |r| r.random_range(0.1..100.0));
        let p = Prepared::new(g.clone(), true, true);
        let inv = g.invert_weights();
        let hop = floyd(&inv, true);
        let dist = floyd(&inv, false);
        let cc: Vec<f64> = hop.iter().map(|r| 1.0 / r.iter().sum::<f64>()).collect();
        let ccw: Vec<f64> = dist.iter().map(|r| 1.0 / r.iter().sum::<f64>()).collect();
        let mut k = vec![0.0; n];
        let mut s = vec![0.0; n];
        for e in g.edges() {
            for x in [e.u, e.v] {
                k[x] += 1.0;
                s[x] += e.weight;
            }
        }
        for kind in MeasureKind::ALL {
            let (plain, weighted) = match kind.reach {
                Reach::Degree => (&k, &s),
                Reach::Closeness => (&cc, &ccw),
            };
            for (alpha, want) in [(0.0, plain), (1.0, weighted)] {
                let got = p.values(kind, alpha, false).map_err(|e| e.to_string())?;
                for u in 0..n {
                    let target = if kind.is_log() { want[u].log2() } else { want[u] };
                    let ok = if kind.is_log() {
                        (got[u] - target).abs() <= 1e-12 * target.abs().max(1.0)
                    } else {
                        rel_close(got[u], target, 1e-12)
                    };
                    if !ok {
                        return Err(format!("graph {i} {kind} alpha={alpha} node {u}: {} vs {target}", got[u]));
                    }
                }
            }
        }
    }
    Ok("all six measures reduce to their benchmarks at alpha 0 and 1 on 50 graphs".into())
}

fn rank_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut compared = 0;
    let mut rejected = 0;
    for i in 0..50 {
        let n = rng.random_range(4..40);
        let g = random_connected(&mut rng, n, n, |r| r.random_range(0.5..200.0));
        let p = Prepared::new(g, true, true);
        for (prod, log) in [
            (MeasureKind::DEGREE_PROD, MeasureKind::DEGREE_LOG),
            (MeasureKind::CLOSENESS_PROD, MeasureKind::CLOSENESS_LOG),
        ] {
            let s = p.safe_interval(prod).map_err(|e| e.to_string())?;
            let mut accepted = 0;
            let mut draws = 0;
            while accepted < 50 {
                draws += 1;
                if draws > 100_000 {
                    return Err(format!("graph {i} {prod}: no computable alpha found"));
                }
                let alpha = rng.random_range(s.lo()..s.hi());
                // Staying inside S does not stop the product itself from
                // leaving binary64; such draws cannot be ranked at all.
                let pv = match p.values(prod, alpha, false) {
                    Ok(v) => v,
                    Err(Error::Computability { .. }) => {
                        rejected += 1;
                        continue;
                    }
                    Err(e) => return Err(e.to_string()),
                };
                accepted += 1;
                let lv = p.values(log, alpha, false).map_err(|e| e.to_string())?;
                let pr = p.ranks(prod, &pv).map_err(|e| e.to_string())?;
                let lr = p.ranks(log, &lv).map_err(|e| e.to_string())?;
                if pr != lr {
                    return Err(format!("graph {i} {prod} vs {log} at alpha={alpha}: {pr:?} vs {lr:?}"));
                }
                compared += 1;
            }
        }
    }
    Ok(format!("{compared} rankings identical ({rejected} draws rejected as not representable)"))
}

fn wrg_strength() -> Outcome {
    let start = Instant::now();
    let (n, p, reps) = (200usize, 0.2, 1000u64);
    let means: Vec<f64> = (0..reps)
        .into_par_iter()
        .map(|k| {
            let g = wrg(n, p, derive_seed(8, k)).expect("valid parameters");
            g.strengths().iter().sum::<f64>() / n as f64
        })
        .collect();
    let mean = means.iter().sum::<f64>() / reps as f64;
    let target = p * (n as f64 - 1.0) / (1.0 - p);
    let elapsed = start.elapsed();
    let ok = (mean - target).abs() <= 0.02 * target && elapsed < Duration::from_secs(120);
    check(ok, format!("mean strength {mean:.4} vs {target} in {elapsed:?}"))
}

fn median_lengths(spec: &str) -> Result<Vec<f64>, String> {
    let spec = SweepSpec::parse(spec).map_err(|e| e.to_string())?;
    let records = run_sweep(&spec, spec.seed.unwrap_or(0), None).map_err(|e| e.to_string())?;
    let summary = summarize_records(&spec, &records);
    Ok(summary
        .iter()
        .filter(|r| r.metric == "ud_len")
        .map(|r| r.median)
        .collect())
}

fn er_normal_trends() -> Outcome {
    let start = Instant::now();
    let base = "model=er_normal\nn=200\np=0.2\nreplicates=100\nseed=9\n";
    let by_mu = median_lengths(&format!("{base}param=mu\ngrid=10,20,40,80\nsigma=1\n"))?;
    let by_sigma = median_lengths(&format!("{base}param=sigma\ngrid=1,2,4,8\nmu=10\n"))?;
    let elapsed = start.elapsed();
    let rising = by_mu.windows(2).all(|w| w[0] < w[1]);
    let falling = by_sigma.windows(2).all(|w| w[0] > w[1]);
    check(
        rising && falling && elapsed < Duration::from_secs(300),
        format!("median |U_D| over mu {by_mu:.1?}, over sigma {by_sigma:.1?} in {elapsed:?}"),
    )
}

fn sorted_weights(g: &WeightedGraph) -> Vec<f64> {
    let mut w: Vec<f64> = g.edges().iter().map(|e| e.weight).collect();
    w.sort_by(f64::total_cmp);
    w
}

fn table2_dir() -> Option<PathBuf> {
    std::env::var_os("ADJCENT_TABLE2_DIR").map(PathBuf::from)
}

fn rewiring_invariants() -> Outcome {
    let mut graphs: Vec<(String, WeightedGraph)> = vec![
        ("sample".into(), parse_edge_list(SAMPLE).map_err(|e| e.to_string())?),
        (
            "er_normal".into(),
            er_normal(&ModelConfig { n: 100, p: 0.1, seed: 10, ..ModelConfig::default() }).map_err(|e| e.to_string())?,
        ),
        ("wrg".into(), wrg(100, 0.1, 11).map_err(|e| e.to_string())?),
    ];
    if let Some(dir) = table2_dir() {
        for (name, directed) in [("messages", true), ("usflights", false), ("voting", false)] {
            let path = dir.join(format!("{name}.tsv"));
            let g = if directed { load_directed_edge_list(&path) } else { load_edge_list(&path) };
            if let Ok(g) = g {
                if g.edge_count() <= 5000 {
                    graphs.push((name.into(), g));
                }
            }
        }
    }
    let mut runs = 0;
    for (name, g) in &graphs {
        let m = g.edge_count();
        for swaps in [0, m, 10 * m] {
            let r = rewire(g, swaps, 12).map_err(|e| format!("{name} swaps={swaps}: {e}"))?;
            if r.degrees() != g.degrees() || sorted_weights(&r) != sorted_weights(g) {
                return Err(format!("{name} swaps={swaps}: degree or weight multiset changed"));
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} surrogates keep degrees and weights exactly"))
}

fn timed_leftmost(lines: &[Line]) -> Duration {
    let start = Instant::now();
    std::hint::black_box(leftmost_intersection(std::hint::black_box(lines)).expect("distinct lines"));
    start.elapsed()
}

fn uniform_lines(rng: &mut ChaCha8Rng, n: usize) -> Vec<Line> {
    (0..n)
        .map(|i| Line::new(rng.random_range(-1e3..1e3), rng.random_range(-1e3..1e3), i))
        .collect()
}

fn scaling() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let small = uniform_lines(&mut rng, 2000);
    let fast = extrema(&small).map_err(|e| e.to_string())?;
    let brute = brute_force_extrema(&small).map_err(|e| e.to_string())?;
    if fast.leftmost != brute.leftmost || fast.rightmost != brute.rightmost {
        return Err("n=2000 disagrees with the quadratic oracle".into());
    }
    let million = uniform_lines(&mut rng, 1_000_000);
    let t_million = timed_leftmost(&million);
    drop(million);
    // Each round times the three sizes back to back, so a burst of outside
    // load affects one round's ratios rather than one size. The median
    // ratio over the rounds is then insensitive to such bursts.
    let inputs: Vec<Vec<Line>> = [100_000, 200_000, 400_000]
        .iter()
        .map(|&n| uniform_lines(&mut rng, n))
        .collect();
    let rounds = 21;
    let mut per_round: Vec<[f64; 2]> = Vec::with_capacity(rounds);
    for _ in 0..rounds {
        let t: Vec<f64> = inputs.iter().map(|l| timed_leftmost(l).as_secs_f64()).collect();
        per_round.push([t[1] / t[0], t[2] / t[1]]);
    }
    let ratios: Vec<f64> = (0..2)
        .map(|k| {
            let mut r: Vec<f64> = per_round.iter().map(|x| x[k]).collect();
            r.sort_by(f64::total_cmp);
            r[rounds / 2]
        })
        .collect();
    let ok = t_million < Duration::from_secs(5) && ratios.iter().all(|&r| r < 2.5);
    check(
        ok,
        format!("1e6 lines in {t_million:?}; median doubling ratios over {rounds} rounds {ratios:.2?}"),
    )
}

fn table2() -> Option<Outcome> {
    let dir = table2_dir()?;
    // (file, directed, S_D^prod, S_C^prod, S^sum, U_D, U_C)
    let expected = [
        ("messages", true, 82.1, 177.1, 103.5, (-108.6, 104.1), (-177.8, 114629.0)),
        ("usflights", false, 40.0, 90.5, 48.5, (-147724.5, 14114.7), (-86532.4, 119285.9)),
        ("voting", false, 110.1, 58.4, 104.7, (-12469.3, 7452.4), (-160602.5, 38498.1)),
    ];
    let mut notes = Vec::new();
    let mut ok = true;
    for (name, directed, sdp, scp, ss, ud, uc) in expected {
        let path = dir.join(format!("{name}.tsv"));
        let flags: &[&str] = if directed { &["--directed"] } else { &[] };
        let (h, r) = match cli_analyze(&path, flags) {
            Ok(x) => x,
            Err(e) => return Some(Err(format!("{name}: {e}"))),
        };
        let c = |n: &str| column(&h, &r, n);
        let safe_ok = [(c("sd_prod_hi"), sdp), (c("sc_prod_hi"), scp), (c("sd_sum_hi"), ss), (c("sc_sum_hi"), ss)]
            .iter()
            .all(|(got, want)| (got - want).abs() <= 0.1);
        let useful_ok = [(c("ud_lo"), ud.0), (c("ud_hi"), ud.1), (c("uc_lo"), uc.0), (c("uc_hi"), uc.1)]
            .iter()
            .all(|(got, want)| (got - want).abs() <= 1.0);
        ok &= safe_ok && useful_ok;
        notes.push(format!(
            "{name}: S_D^prod {:.1} S_C^prod {:.1} S^sum {:.1} U_D [{:.1}, {:.1}] U_C [{:.1}, {:.1}]",
            c("sd_prod_hi"),
            c("sc_prod_hi"),
            c("sd_sum_hi"),
            c("ud_lo"),
            c("ud_hi"),
            c("uc_lo"),
            c("uc_hi")
        ));
    }
    Some(check(ok, notes.join("; ")))
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        (1, "sample network safe intervals", sample_safe_intervals),
        (2, "sample network useful interval", sample_useful_interval),
        (3, "extrema match the quadratic oracle", extrema_oracle_equivalence),
        (4, "degenerate useful intervals", degenerate_cases),
        (5, "uniform weights collapse prod and sum", uniform_weight_identity),
        (6, "benchmarks at alpha 0 and 1", benchmark_reduction),
        (7, "prod and log rankings agree", rank_equivalence),
        (8, "WRG mean strength", wrg_strength),
        (9, "ER+normal useful-interval trends", er_normal_trends),
        (10, "rewiring invariants", rewiring_invariants),
        (11, "n log n scaling", scaling),
    ];
    let mut failed = 0;
    for (id, name, run) in criteria {
        match run() {
            Ok(detail) => println!("criterion {id:>2} PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name}: {detail}");
            }
        }
    }
    match table2() {
        None => println!("criterion 12 SKIP  real-network table: set ADJCENT_TABLE2_DIR to run"),
        Some(Ok(detail)) => println!("criterion 12 PASS  real-network table: {detail}"),
        Some(Err(detail)) => {
            failed += 1;
            println!("criterion 12 FAIL  real-network table: {detail}");
        }
    }
    if failed > 0 {
        println!("{failed} criterion/criteria failed");
        std::process::exit(1);
    }
}
