//! The `adjcent` command line.
//!
//! Exit status: 0 on success, 1 for usage errors (bad flags, bad sweep spec,
//! invalid model parameters), 2 for unreadable or invalid data, 3 when a
//! requested `alpha` is not computable in binary64.

use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use adjcent_core::{er_normal, rewire, wrg_with, MeasureKind, ModelConfig, Reach, WeightedGraph};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{alpha_grid, fmt_num, rank_trace, variance_trace, AnalyzeReport, Prepared};
use crate::error::CliError;
use crate::io::{load_directed_edge_list, load_edge_list, write_edge_list};
use crate::sweep::{output_paths, run_sweep, summarize_records, write_records, write_summary, SweepSpec};

#[derive(Debug, Parser)]
#[command(name = "adjcent", version, about = "Adjustable node centrality on weighted graphs")]
pub struct Cli {
    /// Seed for random models and rewiring (default: derived from the clock
    /// and printed).
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Use reciprocal weights as lengths for closeness measures (default).
    #[arg(long, global = true, overrides_with = "no_invert_weights")]
    pub invert_weights: bool,

    /// Use weights as lengths for closeness measures unchanged.
    #[arg(long, global = true, overrides_with = "invert_weights")]
    pub no_invert_weights: bool,

    /// Evaluate alpha values outside the safe interval anyway.
    #[arg(long, global = true)]
    pub force: bool,

    /// Read input edge lists as directed arcs and sum opposite directions.
    #[arg(long, global = true)]
    pub directed: bool,

    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    fn invert(&self) -> bool {
        !self.no_invert_weights
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Safe and useful intervals of a network, as one CSV row.
    Analyze(AnalyzeArgs),
    /// Per-node value and rank of one measure over an alpha grid.
    RankTrace(RankTraceArgs),
    /// Sample a random network and write it as an edge list.
    Generate(GenerateArgs),
    /// Degree-preserving rewiring of a network.
    Rewire(RewireArgs),
    /// Run a parameter sweep described by a key=value spec file.
    Sweep(SweepArgs),
    /// Across-node variance of all six measures over an alpha grid.
    VarianceTrace(VarianceTraceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReachArg {
    Degree,
    Closeness,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub input: PathBuf,

    /// Measure families to evaluate.
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [ReachArg::Degree, ReachArg::Closeness])]
    pub measures: Vec<ReachArg>,

    /// Also evaluate every selected measure on this grid, given as MIN:MAX:STEPS.
    #[arg(long, value_name = "MIN:MAX:STEPS")]
    pub alpha_grid: Option<String>,

    /// Where to write the per-alpha values (default: after the summary row on
    /// standard output).
    #[arg(long, requires = "alpha_grid")]
    pub values_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha_min: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha_max: f64,
    #[arg(long, default_value_t = 101)]
    pub steps: usize,
}

#[derive(Debug, Args)]
pub struct RankTraceArgs {
    pub input: PathBuf,
    /// One of degree-prod, degree-sum, degree-log, closeness-prod,
    /// closeness-sum, closeness-log.
    #[arg(long, value_parser = parse_measure)]
    pub measure: MeasureKind,
    #[command(flatten)]
    pub grid: GridArgs,
}

#[derive(Debug, Args)]
pub struct VarianceTraceArgs {
    pub input: PathBuf,
    #[command(flatten)]
    pub grid: GridArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    ErNormal,
    Wrg,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    pub model: ModelArg,
    #[arg(long, default_value_t = 200)]
    pub n: usize,
    #[arg(long, default_value_t = 0.2)]
    pub p: f64,
    #[arg(long, default_value_t = 10.0)]
    pub mu: f64,
    #[arg(long, default_value_t = 1.0)]
    pub sigma: f64,
    /// Resample until the graph is connected.
    #[arg(long)]
    pub require_connected: bool,
    #[arg(long, default_value_t = 100)]
    pub max_retries: usize,
    #[arg(short, long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct RewireArgs {
    pub input: PathBuf,
    /// Number of successful edge switches.
    #[arg(long)]
    pub swaps: usize,
    #[arg(short, long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    pub spec: PathBuf,
    /// Directory for `<experiment>_records.csv` and `<experiment>_summary.csv`.
    #[arg(long, default_value = ".")]
    pub out_dir: PathBuf,
}

fn parse_measure(s: &str) -> Result<MeasureKind, String> {
    s.parse::<MeasureKind>().map_err(|e| e.to_string())
}

fn parse_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let bad = || CliError::usage(format!("--alpha-grid expects MIN:MAX:STEPS, got `{spec}`"));
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let min: f64 = parts[0].trim().parse().map_err(|_| bad())?;
    let max: f64 = parts[1].trim().parse().map_err(|_| bad())?;
    let steps: usize = parts[2].trim().parse().map_err(|_| bad())?;
    Ok(alpha_grid(min, max, steps)?)
}

fn effective_seed(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(|| {
        SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_nanos() as u64)
            .unwrap_or(0)
    })
}

fn load(cli: &Cli, path: &Path) -> Result<WeightedGraph, CliError> {
    Ok(if cli.directed {
        load_directed_edge_list(path)?
    } else {
        load_edge_list(path)?
    })
}

fn save(g: &WeightedGraph, path: &Path) -> Result<(), CliError> {
    let file = File::create(path).map_err(|e| CliError::data(format!("{}: {e}", path.display())))?;
    write_edge_list(g, BufWriter::new(file))?;
    Ok(())
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `out` and diagnostics to `err`. Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Analyze(a) => analyze(cli, a, out),
        Command::RankTrace(a) => trace_ranks(cli, a, out),
        Command::Generate(a) => generate(cli, a, out),
        Command::Rewire(a) => rewire_cmd(cli, a, out),
        Command::Sweep(a) => sweep(cli, a, out, err),
        Command::VarianceTrace(a) => trace_variance(cli, a, out, err),
    }
}

fn analyze(cli: &Cli, a: &AnalyzeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let g = load(cli, &a.input)?;
    let degree = a.measures.contains(&ReachArg::Degree);
    let closeness = a.measures.contains(&ReachArg::Closeness);
    let prepared = Prepared::new(g, cli.invert(), closeness);
    let report = AnalyzeReport::compute(&prepared, degree, closeness)?;

    let grid = a.alpha_grid.as_deref().map(parse_grid).transpose()?;
    let mut values = Vec::new();
    if let Some(grid) = &grid {
        let kinds: Vec<MeasureKind> = MeasureKind::ALL
            .into_iter()
            .filter(|k| match k.reach {
                Reach::Degree => degree,
                Reach::Closeness => closeness,
            })
            .collect();
        for &alpha in grid {
            for &kind in &kinds {
                let v = prepared.values(kind, alpha, cli.force)?;
                values.push((alpha, kind, v));
            }
        }
    }

    let mut w = csv::Writer::from_writer(&mut *out);
    w.write_record(AnalyzeReport::HEADER)?;
    w.write_record(report.row())?;
    w.flush()?;
    drop(w);

    if grid.is_some() {
        let write_values = |sink: &mut dyn Write| -> Result<(), CliError> {
            let mut w = csv::Writer::from_writer(sink);
            w.write_record(["alpha", "measure", "node", "label", "value"])?;
            for (alpha, kind, v) in &values {
                for (u, x) in v.iter().enumerate() {
                    w.write_record([
                        fmt_num(*alpha),
                        kind.name().to_string(),
                        u.to_string(),
                        prepared.graph.labels()[u].clone(),
                        fmt_num(*x),
                    ])?;
                }
            }
            w.flush()?;
            Ok(())
        };
        match &a.values_out {
            Some(path) => {
                let file = File::create(path).map_err(|e| CliError::data(format!("{}: {e}", path.display())))?;
                write_values(&mut BufWriter::new(file))?;
            }
            None => {
                writeln!(out)?;
                write_values(out)?;
            }
        }
    }
    Ok(())
}

fn trace_ranks(cli: &Cli, a: &RankTraceArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let g = load(cli, &a.input)?;
    let grid = alpha_grid(a.grid.alpha_min, a.grid.alpha_max, a.grid.steps)?;
    let prepared = Prepared::new(g, cli.invert(), a.measure.reach == Reach::Closeness);
    let trace = rank_trace(&prepared, a.measure, &grid, cli.force)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["alpha", "node", "label", "value", "rank"])?;
    for t in trace {
        w.write_record([
            fmt_num(t.alpha),
            t.node.to_string(),
            prepared.graph.labels()[t.node].clone(),
            fmt_num(t.value),
            t.rank.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn trace_variance(cli: &Cli, a: &VarianceTraceArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let g = load(cli, &a.input)?;
    let grid = alpha_grid(a.grid.alpha_min, a.grid.alpha_max, a.grid.steps)?;
    let connected = g.is_connected();
    if !connected {
        writeln!(err, "warning: graph is not connected; closeness columns are NA")?;
    }
    let prepared = Prepared::new(g, cli.invert(), connected);
    let rows = variance_trace(&prepared, &grid, cli.force)?;
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["alpha".to_string()];
    header.extend(MeasureKind::ALL.iter().map(|k| k.name().to_string()));
    w.write_record(&header)?;
    for (alpha, row) in rows {
        let mut rec = vec![fmt_num(alpha)];
        rec.extend(row.iter().map(|&x| fmt_num(x)));
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

fn generate(cli: &Cli, a: &GenerateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let seed = effective_seed(cli.seed);
    let cfg = ModelConfig {
        n: a.n,
        p: a.p,
        mu: a.mu,
        sigma: a.sigma,
        seed,
        require_connected: a.require_connected,
        max_retries: a.max_retries,
    };
    let g = match a.model {
        ModelArg::ErNormal => er_normal(&cfg)?,
        ModelArg::Wrg => wrg_with(&cfg)?,
    };
    save(&g, &a.out)?;
    writeln!(out, "seed={seed}")?;
    Ok(())
}

fn rewire_cmd(cli: &Cli, a: &RewireArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let g = load(cli, &a.input)?;
    let seed = effective_seed(cli.seed);
    let r = rewire(&g, a.swaps, seed)?;
    save(&r, &a.out)?;
    writeln!(out, "seed={seed}")?;
    writeln!(out, "swaps={}", a.swaps)?;
    Ok(())
}

fn sweep(cli: &Cli, a: &SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let text = fs::read_to_string(&a.spec).map_err(|e| CliError::data(format!("{}: {e}", a.spec.display())))?;
    let spec = SweepSpec::parse(&text)?;
    let seed = cli
        .seed
        .or(spec.seed)
        .ok_or_else(|| CliError::usage("sweep needs a seed (`seed=` in the spec or --seed)"))?;
    let input = match &spec.input {
        Some(path) => {
            // Relative inputs resolve against the spec file's directory.
            let path = match a.spec.parent() {
                Some(dir) if path.is_relative() => dir.join(path),
                _ => path.clone(),
            };
            Some(if spec.directed {
                load_directed_edge_list(&path)?
            } else {
                load_edge_list(&path)?
            })
        }
        None => None,
    };
    let records = run_sweep(&spec, seed, input.as_ref())?;
    let failures = records.iter().filter(|r| r.error.is_some()).count();
    if failures > 0 {
        writeln!(err, "warning: {failures} record(s) carry errors")?;
    }
    let summary = summarize_records(&spec, &records);
    fs::create_dir_all(&a.out_dir)?;
    let (records_path, summary_path) = output_paths(&a.out_dir, &spec.experiment);
    write_records(&spec, &records, BufWriter::new(File::create(&records_path)?))?;
    write_summary(&spec, &summary, BufWriter::new(File::create(&summary_path)?))?;
    writeln!(out, "seed={seed}")?;
    writeln!(out, "records={}", records_path.display())?;
    writeln!(out, "summary={}", summary_path.display())?;
    Ok(())
}
