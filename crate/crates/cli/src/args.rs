use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "bcast", version, about = "Broadcast independence, packing and independence numbers of small graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact α, ρ and α_b of a graph.
    Compute(ComputeArgs),
    /// Check that a function is an independent broadcast.
    Verify(VerifyArgs),
    /// Build and verify an independent-set witness family from a broadcast.
    Witness(WitnessArgs),
    /// One run of the randomized star-gluing construction.
    Generate(GenerateArgs),
    /// Many construction runs, one CSV row per seed.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum ParamChoice {
    Alpha,
    Rho,
    AlphaB,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Bruteforce,
}

/// Where the graph comes from.
#[derive(Args, Debug, Clone, Default)]
pub struct GraphInput {
    /// Graph file, or `-` for stdin.
    #[arg(long)]
    pub input: Option<String>,
    /// Named graph instead of a file: petersen, heawood, pappus, mcgee, pN, cN, kN, starN, ka,b, honeycombRxC.
    #[arg(long)]
    pub graph: Option<String>,
    /// Input format (graph6 or edgelist); inferred from the file extension when omitted.
    #[arg(long)]
    pub format: Option<String>,
}

/// Options shared by every subcommand.
#[derive(Args, Debug, Clone, Default)]
pub struct Common {
    /// Write the main output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Read option values from a JSON config file; a flag that disagrees with it is an error.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Write the effective options to a JSON config file.
    #[arg(long)]
    pub save_config: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    #[arg(long, value_enum)]
    pub param: Option<ParamChoice>,
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    /// Wall-clock limit per solve in milliseconds (default 60000).
    #[arg(long)]
    pub budget_ms: Option<u64>,
    /// Include wall-clock times; the output is then no longer reproducible.
    #[arg(long)]
    pub timings: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    /// Broadcast values, e.g. `2,0,0,2`.
    #[arg(long)]
    pub broadcast: Option<String>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct WitnessArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    /// 1, 3i or 3ii.
    #[arg(long)]
    pub theorem: Option<String>,
    /// Scaling parameter for 3ii, in [2, 4); decimal or fraction.
    #[arg(long)]
    pub xi: Option<String>,
    /// Broadcast values; defaults to an optimal broadcast from the exact solver.
    #[arg(long)]
    pub broadcast: Option<String>,
    #[arg(long)]
    pub budget_ms: Option<u64>,
    #[arg(long)]
    pub timings: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub epsilon: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// On a degenerate run, retry with the next seed up to this many times.
    #[arg(long)]
    pub retry: Option<u64>,
    /// Wall-clock limit for the α solve in milliseconds (default 10000).
    #[arg(long)]
    pub budget_ms: Option<u64>,
    /// Also solve α_b exactly when the final graph has at most this many vertices.
    #[arg(long)]
    pub alpha_b_max_vertices: Option<usize>,
    /// Write the final graph in graph6 here.
    #[arg(long)]
    pub graph_out: Option<PathBuf>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Host sizes, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub n: Option<Vec<usize>>,
    /// Star sizes, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub k: Option<Vec<usize>>,
    /// Fixed ε; by default 0.9/(2k²) for each k.
    #[arg(long)]
    pub epsilon: Option<f64>,
    /// First seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Number of seeds per (n, k).
    #[arg(long)]
    pub seeds: Option<u64>,
    #[arg(long)]
    pub budget_ms: Option<u64>,
    /// Write the JSON summary here (stderr otherwise).
    #[arg(long)]
    pub summary: Option<PathBuf>,
    #[command(flatten)]
    pub common: Common,
}

/// Every option that can live in a config file.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub param: Option<ParamChoice>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<Method>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget_ms: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub broadcast: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seeds: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub retry: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha_b_max_vertices: Option<usize>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))
    }

    pub fn save(&self, path: &Path) -> Result<(), CliError> {
        let text = serde_json::to_string_pretty(self).expect("config serializes") + "\n";
        std::fs::write(path, text).map_err(|e| CliError::io(path, e))
    }
}

/// Combines a flag with the config value of the same name.
pub fn merge<T: PartialEq + std::fmt::Debug>(
    name: &str,
    flag: Option<T>,
    config: Option<T>,
) -> Result<Option<T>, CliError> {
    match (flag, config) {
        (Some(a), Some(b)) if a != b => {
            Err(CliError::Usage(format!("--{name} {a:?} conflicts with the config value {b:?}")))
        }
        (Some(a), _) => Ok(Some(a)),
        (None, b) => Ok(b),
    }
}

fn load_config(common: &Common) -> Result<Config, CliError> {
    common.config.as_deref().map_or(Ok(Config::default()), Config::load)
}

fn merge_graph(g: &GraphInput, cfg: &mut Config) -> Result<(), CliError> {
    cfg.input = merge("input", g.input.clone(), cfg.input.take())?;
    cfg.graph = merge("graph", g.graph.clone(), cfg.graph.take())?;
    cfg.format = merge("format", g.format.clone(), cfg.format.take())?;
    Ok(())
}

fn finish(common: &Common, cfg: Config) -> Result<Config, CliError> {
    if let Some(path) = &common.save_config {
        cfg.save(path)?;
    }
    Ok(cfg)
}

impl ComputeArgs {
    pub fn resolve(&self) -> Result<Config, CliError> {
        let mut cfg = load_config(&self.common)?;
        merge_graph(&self.graph, &mut cfg)?;
        cfg.param = merge("param", self.param, cfg.param)?;
        cfg.method = merge("method", self.method, cfg.method)?;
        cfg.budget_ms = merge("budget-ms", self.budget_ms, cfg.budget_ms)?;
        finish(&self.common, cfg)
    }
}

impl VerifyArgs {
    pub fn resolve(&self) -> Result<Config, CliError> {
        let mut cfg = load_config(&self.common)?;
        merge_graph(&self.graph, &mut cfg)?;
        cfg.broadcast = merge("broadcast", self.broadcast.clone(), cfg.broadcast.take())?;
        finish(&self.common, cfg)
    }
}

impl WitnessArgs {
    pub fn resolve(&self) -> Result<Config, CliError> {
        let mut cfg = load_config(&self.common)?;
        merge_graph(&self.graph, &mut cfg)?;
        cfg.theorem = merge("theorem", self.theorem.clone(), cfg.theorem.take())?;
        cfg.xi = merge("xi", self.xi.clone(), cfg.xi.take())?;
        cfg.broadcast = merge("broadcast", self.broadcast.clone(), cfg.broadcast.take())?;
        cfg.budget_ms = merge("budget-ms", self.budget_ms, cfg.budget_ms)?;
        finish(&self.common, cfg)
    }
}

impl GenerateArgs {
    pub fn resolve(&self) -> Result<Config, CliError> {
        let mut cfg = load_config(&self.common)?;
        cfg.n = merge("n", self.n.map(|n| vec![n]), cfg.n.take())?;
        cfg.k = merge("k", self.k.map(|k| vec![k]), cfg.k.take())?;
        cfg.epsilon = merge("epsilon", self.epsilon, cfg.epsilon)?;
        cfg.seed = merge("seed", self.seed, cfg.seed)?;
        cfg.retry = merge("retry", self.retry, cfg.retry)?;
        cfg.budget_ms = merge("budget-ms", self.budget_ms, cfg.budget_ms)?;
        cfg.alpha_b_max_vertices = merge("alpha-b-max-vertices", self.alpha_b_max_vertices, cfg.alpha_b_max_vertices)?;
        finish(&self.common, cfg)
    }
}

impl SweepArgs {
    pub fn resolve(&self) -> Result<Config, CliError> {
        let mut cfg = load_config(&self.common)?;
        cfg.n = merge("n", self.n.clone(), cfg.n.take())?;
        cfg.k = merge("k", self.k.clone(), cfg.k.take())?;
        cfg.epsilon = merge("epsilon", self.epsilon, cfg.epsilon)?;
        cfg.seed = merge("seed", self.seed, cfg.seed)?;
        cfg.seeds = merge("seeds", self.seeds, cfg.seeds)?;
        cfg.budget_ms = merge("budget-ms", self.budget_ms, cfg.budget_ms)?;
        finish(&self.common, cfg)
    }
}
