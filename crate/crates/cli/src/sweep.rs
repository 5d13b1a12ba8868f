use std::path::Path;

use bcast_core::extremal::{run_construction, ConstructionOptions, ConstructionReport};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::Config;
use crate::commands::{construction_options, default_epsilon};
use crate::{emit, to_json, CliError, SCHEMA};

/// One CSV line per construction run.
#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub schema: u32,
    pub seed: u64,
    pub n: usize,
    pub k: usize,
    pub epsilon: f64,
    #[serde(rename = "F")]
    pub f: usize,
    pub ell: usize,
    pub n_ell: usize,
    pub bridges: usize,
    pub girth: Option<usize>,
    pub mindeg: Option<usize>,
    pub weight: u64,
    pub alpha: Option<u64>,
    pub alpha_exact: Option<bool>,
    pub ratio: Option<f64>,
    pub degenerate_stage: Option<&'static str>,
}

impl From<&ConstructionReport> for SweepRow {
    fn from(r: &ConstructionReport) -> Self {
        SweepRow {
            schema: SCHEMA,
            seed: r.seed,
            n: r.n,
            k: r.k,
            epsilon: r.epsilon.unwrap_or(f64::NAN),
            f: r.short_cycle_removals.len(),
            ell: r.repair_steps,
            n_ell: r.surviving_stars,
            bridges: r.bridges_added,
            girth: r.girth,
            mindeg: r.min_degree,
            weight: r.broadcast_weight,
            alpha: r.alpha.map(|a| a.value),
            alpha_exact: r.alpha.map(|a| a.exact),
            ratio: r.achieved_ratio,
            degenerate_stage: r.degenerate.map(|d| d.as_str()),
        }
    }
}

/// Aggregate over the runs sharing one `(n, k, ε)`.
#[derive(Clone, Debug, Serialize)]
pub struct GroupSummary {
    pub n: usize,
    pub k: usize,
    pub epsilon: f64,
    pub runs: usize,
    pub degenerate: usize,
    pub degenerate_fraction: f64,
    pub degenerate_short_cycles: usize,
    pub degenerate_repair: usize,
    pub degenerate_single_star: usize,
    pub structural_violations: usize,
    pub ratio_min: Option<f64>,
    pub ratio_median: Option<f64>,
    pub ratio_max: Option<f64>,
    pub reference_ratio: f64,
}

/// Median achieved ratio per `n` for one `k`, and whether it never decreases as `n` grows.
#[derive(Clone, Debug, Serialize)]
pub struct Trend {
    pub k: usize,
    pub n: Vec<usize>,
    pub median_ratio: Vec<Option<f64>>,
    /// `None` when some median is undefined because every run was degenerate.
    pub nondecreasing: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary {
    pub schema: u32,
    pub groups: Vec<GroupSummary>,
    pub trends: Vec<Trend>,
}

fn median(sorted: &[f64]) -> Option<f64> {
    let m = sorted.len();
    match m {
        0 => None,
        _ if m % 2 == 1 => Some(sorted[m / 2]),
        _ => Some((sorted[m / 2 - 1] + sorted[m / 2]) / 2.0),
    }
}

pub fn summarize(reports: &[ConstructionReport]) -> SweepSummary {
    let mut keys: Vec<(usize, usize, u64)> =
        reports.iter().map(|r| (r.n, r.k, r.epsilon.unwrap_or(f64::NAN).to_bits())).collect();
    keys.sort_unstable_by_key(|&(n, k, e)| (k, n, e));
    keys.dedup();
    let groups: Vec<GroupSummary> = keys
        .iter()
        .map(|&(n, k, e)| {
            let rs: Vec<&ConstructionReport> = reports
                .iter()
                .filter(|r| r.n == n && r.k == k && r.epsilon.unwrap_or(f64::NAN).to_bits() == e)
                .collect();
            let stage = |s: &str| rs.iter().filter(|r| r.degenerate.is_some_and(|d| d.as_str() == s)).count();
            let degenerate = rs.iter().filter(|r| r.is_degenerate()).count();
            let mut ratios: Vec<f64> =
                rs.iter().filter(|r| !r.is_degenerate()).filter_map(|r| r.achieved_ratio).collect();
            ratios.sort_by(f64::total_cmp);
            GroupSummary {
                n,
                k,
                epsilon: f64::from_bits(e),
                runs: rs.len(),
                degenerate,
                degenerate_fraction: degenerate as f64 / rs.len() as f64,
                degenerate_short_cycles: stage("short_cycles"),
                degenerate_repair: stage("repair"),
                degenerate_single_star: stage("single_star"),
                structural_violations: rs.iter().filter(|r| r.checks.is_some_and(|c| !c.all())).count(),
                ratio_min: ratios.first().copied(),
                ratio_median: median(&ratios),
                ratio_max: ratios.last().copied(),
                reference_ratio: 2.0 * (1.0 - 1.0 / k as f64),
            }
        })
        .collect();
    let mut ks: Vec<usize> = groups.iter().map(|g| g.k).collect();
    ks.dedup();
    let trends = ks
        .into_iter()
        .map(|k| {
            let gs: Vec<&GroupSummary> = groups.iter().filter(|g| g.k == k).collect();
            let medians: Vec<Option<f64>> = gs.iter().map(|g| g.ratio_median).collect();
            let nondecreasing =
                medians.iter().copied().collect::<Option<Vec<f64>>>().map(|m| m.windows(2).all(|w| w[1] >= w[0]));
            Trend { k, n: gs.iter().map(|g| g.n).collect(), median_ratio: medians, nondecreasing }
        })
        .collect();
    SweepSummary { schema: SCHEMA, groups, trends }
}

/// Runs every `(k, n, seed)` combination in parallel; reports come back
/// ordered by `k`, then `n`, then seed.
pub fn run_sweep(
    ns: &[usize],
    ks: &[usize],
    epsilon: Option<f64>,
    seeds: std::ops::Range<u64>,
    options: &ConstructionOptions,
) -> Result<Vec<ConstructionReport>, CliError> {
    let jobs: Vec<(usize, usize, u64)> = ks
        .iter()
        .flat_map(|&k| ns.iter().flat_map(|&n| seeds.clone().map(move |s| (k, n, s))).collect::<Vec<_>>())
        .collect();
    let reports = jobs
        .par_iter()
        .map(|&(k, n, seed)| {
            let eps = epsilon.unwrap_or_else(|| default_epsilon(k));
            run_construction(n, k, eps, seed, options).map(|c| c.report)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(reports)
}

pub fn sweep(cfg: &Config, summary_path: Option<&Path>, out: Option<&Path>) -> Result<(), CliError> {
    let ns = cfg.n.clone().ok_or_else(|| CliError::Usage("--n is required".into()))?;
    let ks = cfg.k.clone().ok_or_else(|| CliError::Usage("--k is required".into()))?;
    let start = cfg.seed.unwrap_or(0);
    let count = cfg.seeds.unwrap_or(1);
    let reports = run_sweep(&ns, &ks, cfg.epsilon, start..start + count, &construction_options(cfg))?;

    let mut writer = csv::Writer::from_writer(Vec::new());
    for r in &reports {
        writer.serialize(SweepRow::from(r)).map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let bytes = writer.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
    emit(out, &String::from_utf8(bytes).expect("csv output is utf-8"))?;

    let summary = to_json(&summarize(&reports));
    match summary_path {
        Some(p) => std::fs::write(p, summary).map_err(|e| CliError::io(p, e)),
        None => {
            eprint!("{summary}");
            Ok(())
        }
    }
}
