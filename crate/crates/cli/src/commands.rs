use std::io::Read;
use std::path::Path;
use std::time::Duration;

use bcast_core::extremal::{run_construction, Construction, ConstructionOptions, ConstructionReport};
use bcast_core::io::{parse_graph, serialize_graph, Format};
use bcast_core::solvers::{
    alpha_b_bruteforce, alpha_b_exact, max_independent_set, max_packing, validate_broadcast, Budget, SolverResult,
    Violation, DEFAULT_BRUTEFORCE_CAP, DEFAULT_BUDGET,
};
use bcast_core::witness::{
    strict_improvement_check, verify_witness, Certificate, Theorem, WitnessFamily, WitnessViolation, Xi,
};
use bcast_core::{families, witness, Broadcast, Graph};
use serde::Serialize;

use crate::args::{Config, Method, ParamChoice};
use crate::{emit, to_json, CliError, SCHEMA};

/// Generator solve budget when none is given.
pub const DEFAULT_GENERATE_BUDGET_MS: u64 = 10_000;

#[derive(Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub graph6: String,
}

impl GraphSummary {
    fn of(g: &Graph) -> Self {
        GraphSummary { n: g.n(), m: g.edge_count(), graph6: serialize_graph(g, Format::Graph6) }
    }
}

/// Reads the graph named by `--graph` or the file given by `--input`.
pub fn load_graph(cfg: &Config) -> Result<(Graph, Vec<String>), CliError> {
    match (&cfg.graph, &cfg.input) {
        (Some(_), Some(_)) => Err(CliError::Usage("give either --graph or --input, not both".into())),
        (Some(name), None) => families::by_name(name)
            .map(|g| (g, Vec::new()))
            .ok_or_else(|| CliError::Usage(format!("unknown graph name '{name}'"))),
        (None, Some(input)) => {
            let text = if input == "-" {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::io(Path::new("<stdin>"), e))?;
                s
            } else {
                std::fs::read_to_string(input).map_err(|e| CliError::io(Path::new(input), e))?
            };
            let format = match &cfg.format {
                Some(f) => f.parse::<Format>()?,
                None => infer_format(input),
            };
            let parsed = parse_graph(&text, format)?;
            Ok((parsed.graph, parsed.warnings))
        }
        (None, None) => Err(CliError::Usage("no graph given; use --input or --graph".into())),
    }
}

fn infer_format(path: &str) -> Format {
    let ext = Path::new(path).extension().and_then(|e| e.to_str()).unwrap_or("");
    match ext {
        "txt" | "edges" | "el" | "edgelist" => Format::EdgeList,
        _ => Format::Graph6,
    }
}

fn budget(cfg: &Config, default_ms: u64) -> Budget {
    Budget::new(Duration::from_millis(cfg.budget_ms.unwrap_or(default_ms)))
}

fn timed(r: SolverResult, timings: bool) -> SolverResult {
    if timings {
        r
    } else {
        r.without_timing()
    }
}

#[derive(Serialize)]
struct ComputeOutput {
    schema: u32,
    graph: GraphSummary,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    warnings: Vec<String>,
    results: Vec<SolverResult>,
}

pub fn compute(cfg: &Config, timings: bool, out: Option<&Path>) -> Result<(), CliError> {
    let (g, warnings) = load_graph(cfg)?;
    let default_ms = DEFAULT_BUDGET.as_millis() as u64;
    let param = cfg.param.unwrap_or(ParamChoice::All);
    let mut results = Vec::new();
    if matches!(param, ParamChoice::Alpha | ParamChoice::All) {
        results.push(timed(max_independent_set(&g, &budget(cfg, default_ms))?, timings));
    }
    if matches!(param, ParamChoice::Rho | ParamChoice::All) {
        results.push(timed(max_packing(&g, &budget(cfg, default_ms))?, timings));
    }
    if matches!(param, ParamChoice::AlphaB | ParamChoice::All) {
        let r = match cfg.method.unwrap_or(Method::Exact) {
            Method::Exact => alpha_b_exact(&g, &budget(cfg, default_ms))?,
            Method::Bruteforce => alpha_b_bruteforce(&g, DEFAULT_BRUTEFORCE_CAP)?,
        };
        results.push(timed(r, timings));
    }
    let output = ComputeOutput { schema: SCHEMA, graph: GraphSummary::of(&g), warnings, results };
    emit(out, &to_json(&output))
}

#[derive(Serialize)]
struct VerifyOutput {
    schema: u32,
    valid: bool,
    weight: u64,
    violations: Vec<Violation>,
}

fn parse_broadcast(text: &str) -> Result<Broadcast, CliError> {
    Ok(text.parse::<Broadcast>()?)
}

pub fn verify(cfg: &Config, out: Option<&Path>) -> Result<(), CliError> {
    let (g, _) = load_graph(cfg)?;
    let text = cfg.broadcast.as_deref().ok_or_else(|| CliError::Usage("--broadcast is required".into()))?;
    let f = parse_broadcast(text)?;
    let violations = validate_broadcast(&g, &f)?;
    let valid = violations.is_empty();
    emit(out, &to_json(&VerifyOutput { schema: SCHEMA, valid, weight: f.weight(), violations }))?;
    if valid {
        Ok(())
    } else {
        Err(CliError::Verification("not an independent broadcast".into()))
    }
}

#[derive(Serialize)]
#[serde(rename_all = "snake_case")]
enum BroadcastSource {
    Input,
    ExactSolver,
}

#[derive(Serialize)]
struct BroadcastInfo {
    source: BroadcastSource,
    values: Broadcast,
    weight: u64,
}

/// Result of trying to beat `weight/2` when every positive value is 2.
#[derive(Serialize)]
struct Improvement {
    applicable: bool,
    improved_set: Option<Vec<usize>>,
    alpha_lower_bound: Option<usize>,
}

#[derive(Serialize)]
struct WitnessOutput {
    schema: u32,
    graph: GraphSummary,
    broadcast: BroadcastInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha_b: Option<SolverResult>,
    family: WitnessFamily,
    certificate: Option<Certificate>,
    violation: Option<WitnessViolation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    improvement: Option<Improvement>,
}

pub fn witness(cfg: &Config, timings: bool, out: Option<&Path>) -> Result<(), CliError> {
    let (g, _) = load_graph(cfg)?;
    let theorem: Theorem = cfg.theorem.as_deref().unwrap_or("1").parse()?;
    let xi = match (theorem, &cfg.xi) {
        (Theorem::GirthFourScaled, Some(x)) => Some(x.parse::<Xi>()?),
        (Theorem::GirthFourScaled, None) => return Err(CliError::Usage("--xi is required for theorem 3ii".into())),
        (_, Some(_)) => return Err(CliError::Usage("--xi only applies to theorem 3ii".into())),
        (_, None) => None,
    };
    let (f, source, alpha_b) = match &cfg.broadcast {
        Some(text) => (parse_broadcast(text)?, BroadcastSource::Input, None),
        None => {
            let r = alpha_b_exact(&g, &budget(cfg, DEFAULT_BUDGET.as_millis() as u64))?;
            let f = r.witness.as_broadcast().expect("α_b witness is a broadcast").clone();
            (f, BroadcastSource::ExactSolver, Some(timed(r, timings)))
        }
    };
    let family = match theorem {
        Theorem::GirthSixDegreeThree => witness::witness_thm1(&g, &f)?,
        Theorem::GirthSixDegreeFive => witness::witness_thm3i(&g, &f)?,
        Theorem::GirthFourScaled => witness::witness_thm3ii(&g, &f, xi.expect("checked above"))?,
    };
    let checked = verify_witness(&g, &f, &family);
    let improvement = (theorem == Theorem::GirthSixDegreeThree && checked.is_ok()).then(|| {
        let support = f.support();
        let all_two = !support.is_empty() && support.iter().all(|&x| f.get(x) == 2);
        if all_two {
            let set = strict_improvement_check(&g, &support).ok().flatten();
            let bound = set.as_ref().map(Vec::len);
            Improvement { applicable: true, improved_set: set, alpha_lower_bound: bound }
        } else {
            Improvement { applicable: false, improved_set: None, alpha_lower_bound: None }
        }
    });
    let improvement_failed = improvement.as_ref().is_some_and(|i| i.applicable && i.improved_set.is_none());
    let (certificate, violation) = match checked {
        Ok(c) => (Some(c), None),
        Err(v) => (None, Some(v)),
    };
    let failed = violation.is_some() || improvement_failed;
    let output = WitnessOutput {
        schema: SCHEMA,
        graph: GraphSummary::of(&g),
        broadcast: BroadcastInfo { source, weight: f.weight(), values: f },
        alpha_b,
        family,
        certificate,
        violation,
        improvement,
    };
    emit(out, &to_json(&output))?;
    if failed {
        Err(CliError::Verification("witness family failed verification".into()))
    } else {
        Ok(())
    }
}

#[derive(Serialize)]
struct Attempt {
    seed: u64,
    degenerate: Option<&'static str>,
}

#[derive(Serialize)]
struct GenerateOutput {
    schema: u32,
    attempts: Vec<Attempt>,
    report: ConstructionReport,
}

pub fn construction_options(cfg: &Config) -> ConstructionOptions {
    let ms = Duration::from_millis(cfg.budget_ms.unwrap_or(DEFAULT_GENERATE_BUDGET_MS));
    ConstructionOptions {
        alpha_budget: ms,
        alpha_b_max_vertices: cfg.alpha_b_max_vertices.unwrap_or(0),
        alpha_b_budget: ms,
    }
}

fn single(name: &str, values: &Option<Vec<usize>>) -> Result<usize, CliError> {
    match values.as_deref() {
        Some([v]) => Ok(*v),
        Some(_) => Err(CliError::Usage(format!("--{name} takes a single value here"))),
        None => Err(CliError::Usage(format!("--{name} is required"))),
    }
}

pub fn generate(cfg: &Config, graph_out: Option<&Path>, out: Option<&Path>) -> Result<(), CliError> {
    let n = single("n", &cfg.n)?;
    let k = single("k", &cfg.k)?;
    let epsilon = cfg.epsilon.unwrap_or_else(|| default_epsilon(k));
    let seed = cfg.seed.unwrap_or(0);
    let options = construction_options(cfg);
    let mut attempts = Vec::new();
    let mut current = seed;
    let last = seed.saturating_add(cfg.retry.unwrap_or(0));
    let run: Construction = loop {
        let c = run_construction(n, k, epsilon, current, &options)?;
        attempts.push(Attempt { seed: current, degenerate: c.report.degenerate.map(|d| d.as_str()) });
        if c.report.degenerate.is_none() || current == last {
            break c;
        }
        current += 1;
    };
    if let Some(path) = graph_out {
        let text = run.graph.as_ref().map(|g| serialize_graph(g, Format::Graph6) + "\n").unwrap_or_default();
        std::fs::write(path, text).map_err(|e| CliError::io(path, e))?;
    }
    emit(out, &to_json(&GenerateOutput { schema: SCHEMA, attempts, report: run.report }))
}

/// `0.9 / (2k²)`, inside the theorem's range `ε < 1/k²`.
pub fn default_epsilon(k: usize) -> f64 {
    0.9 / (2.0 * (k * k) as f64)
}
