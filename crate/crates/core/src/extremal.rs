//! Randomized construction of connected graphs with girth and minimum degree
//! at least `k` whose broadcast independence number is close to twice the
//! independence number.
//!
//! A random host graph `H` on `n` vertices is sampled, every host vertex
//! becomes a star `K_{1,k}` and every host edge a leaf-to-leaf glue edge with
//! uniformly random ports. Short host cycles are cut, stars with deficient
//! leaves are pruned together with their glue neighbors, the remaining
//! components are bridged, and the surviving centers broadcast with value 2.
//!
//! Vertex layout: star `i` occupies `i(k+1) ..= i(k+1)+k`, center first.
//!
//! All randomness comes from one ChaCha8 stream seeded with the seed's
//! little-endian bytes (the rest of the 32-byte key is zero). A uniform draw
//! is `(next_u64 >> 11) · 2⁻⁵³`; a port is `⌊u · k⌋`. Host pairs are drawn in
//! lexicographic order, then two ports per host edge in lexicographic edge
//! order.

use std::time::Duration;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{components, girth, is_connected, min_degree, shortest_cycle, DistanceMatrix};
use crate::solvers::{alpha_b_exact, independent_set_search, validate_broadcast, Broadcast, Budget};

/// Seeded generator with a fixed, documented draw procedure.
pub struct PortableRng(ChaCha8Rng);

impl PortableRng {
    pub fn new(seed: u64) -> Self {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        PortableRng(ChaCha8Rng::from_seed(key))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform on `[0, 1)` with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform on `0..k`.
    pub fn next_index(&mut self, k: usize) -> usize {
        ((self.next_f64() * k as f64) as usize).min(k - 1)
    }
}

/// `p = n^(ε−1)`.
pub fn edge_probability(n: usize, epsilon: f64) -> f64 {
    (n as f64).powf(epsilon - 1.0)
}

fn check_host_params(n: usize, epsilon: f64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n = {n} < 2")));
    }
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::InvalidParameter(format!("epsilon = {epsilon} is outside (0, 1)")));
    }
    Ok(())
}

fn sample_host_with(rng: &mut PortableRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.next_f64() < p {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("pairs are distinct and in range")
}

/// Random graph in `G(n, p)` for an explicit `p`, one draw per pair.
pub fn sample_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("p = {p} is outside [0, 1]")));
    }
    Ok(sample_host_with(&mut PortableRng::new(seed), n, p))
}

/// Random graph in `G(n, p)` with `p = n^(ε−1)`, one draw per pair.
pub fn sample_host(n: usize, epsilon: f64, seed: u64) -> Result<Graph> {
    check_host_params(n, epsilon)?;
    Ok(sample_host_with(&mut PortableRng::new(seed), n, edge_probability(n, epsilon)))
}

/// One glue edge: the host edge `u–v` realized between leaves `leaf_u ∈ L_u` and `leaf_v ∈ L_v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Port {
    pub host: (usize, usize),
    pub leaves: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarSystem {
    k: usize,
    host: Graph,
    glued: Graph,
    ports: Vec<Port>,
    collisions: Vec<Port>,
}

impl StarSystem {
    /// Stars on `host.n()` host vertices joined by the given glue ports.
    /// Ports whose leaf pair repeats an earlier port are collapsed and logged.
    pub fn from_parts(host: Graph, k: usize, ports: Vec<Port>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be at least 1".into()));
        }
        let n = host.n();
        let mut edges = Vec::with_capacity(n * k + ports.len());
        for i in 0..n {
            let c = i * (k + 1);
            edges.extend((1..=k).map(|j| (c, c + j)));
        }
        let mut seen = std::collections::HashSet::new();
        let mut collisions = Vec::new();
        for port in &ports {
            let (a, b) = port.leaves;
            let (u, v) = port.host;
            for (leaf, star) in [(a, u), (b, v)] {
                if star >= n || leaf / (k + 1) != star || leaf % (k + 1) == 0 {
                    return Err(Error::InvalidParameter(format!("port leaf {leaf} is not a leaf of star {star}")));
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("port joins star {u} to itself")));
            }
            if seen.insert((a.min(b), a.max(b))) {
                edges.push((a, b));
            } else {
                collisions.push(*port);
            }
        }
        let glued = Graph::from_edges(n * (k + 1), &edges)?;
        Ok(StarSystem { k, host, glued, ports, collisions })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    /// The glued graph `G` on `n(k+1)` vertices.
    pub fn glued(&self) -> &Graph {
        &self.glued
    }

    pub fn ports(&self) -> &[Port] {
        &self.ports
    }

    pub fn collisions(&self) -> &[Port] {
        &self.collisions
    }

    pub fn star_count(&self) -> usize {
        self.host.n()
    }

    pub fn center(&self, star: usize) -> usize {
        star * (self.k + 1)
    }

    pub fn leaves(&self, star: usize) -> std::ops::RangeInclusive<usize> {
        let c = self.center(star);
        c + 1..=c + self.k
    }

    pub fn star_of(&self, v: usize) -> usize {
        v / (self.k + 1)
    }

    pub fn is_center(&self, v: usize) -> bool {
        v.is_multiple_of(self.k + 1)
    }

    fn vertices_of(&self, stars: &[usize]) -> Vec<usize> {
        stars.iter().flat_map(|&s| self.center(s)..=self.center(s) + self.k).collect()
    }
}

fn glue_with(rng: &mut PortableRng, host: Graph, k: usize) -> StarSystem {
    let ports: Vec<Port> = host
        .edges()
        .collect::<Vec<_>>()
        .into_iter()
        .map(|(u, v)| {
            let a = u * (k + 1) + 1 + rng.next_index(k);
            let b = v * (k + 1) + 1 + rng.next_index(k);
            Port { host: (u, v), leaves: (a, b) }
        })
        .collect();
    StarSystem::from_parts(host, k, ports).expect("ports are drawn from the right stars")
}

/// Replace each host vertex by `K_{1,k}` and each host edge by a glue edge
/// between uniformly chosen leaves.
pub fn glue_stars(host: &Graph, k: usize, seed: u64) -> Result<StarSystem> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    Ok(glue_with(&mut PortableRng::new(seed), host.clone(), k))
}

/// Host vertices (ascending) removed so that the remaining host graph has no
/// cycle shorter than `k`: while a shortest cycle is too short, its
/// smallest-index vertex is removed.
pub fn break_short_cycles(host: &Graph, k: usize) -> Vec<usize> {
    let mut alive: Vec<usize> = (0..host.n()).collect();
    let mut removed = Vec::new();
    loop {
        let sub = host.induced(&alive);
        match shortest_cycle(&sub) {
            Some(cycle) if cycle.len() < k => {
                let victim = alive[*cycle.iter().min().expect("cycles are nonempty")];
                removed.push(victim);
                alive.retain(|&v| v != victim);
            }
            _ => break,
        }
    }
    removed.sort_unstable();
    removed
}

/// One pruning step: `leaf` had degree below `k`, so its star and the stars
/// its glue edges reach were removed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepairStep {
    pub leaf: usize,
    pub star: usize,
    pub neighbors: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Repair {
    /// Surviving stars, ascending.
    pub survivors: Vec<usize>,
    pub steps: Vec<RepairStep>,
}

/// Prunes stars until every vertex of the glued graph restricted to the
/// surviving stars has degree at least `k`. Each step takes the lowest-index
/// deficient vertex.
pub fn repair_min_degree(system: &StarSystem, alive: &[usize]) -> Repair {
    let k = system.k;
    let g = system.glued();
    let mut live = vec![false; system.star_count()];
    for &s in alive {
        live[s] = true;
    }
    let mut steps = Vec::new();
    loop {
        let deficient = (0..system.star_count()).filter(|&s| live[s]).find_map(|s| {
            system.leaves(s).find(|&x| g.neighbors(x).iter().filter(|&&w| live[system.star_of(w)]).count() < k)
        });
        let Some(leaf) = deficient else { break };
        let star = system.star_of(leaf);
        let mut neighbors: Vec<usize> =
            g.neighbors(leaf).iter().map(|&w| system.star_of(w)).filter(|&s| s != star && live[s]).collect();
        neighbors.sort_unstable();
        neighbors.dedup();
        live[star] = false;
        for &s in &neighbors {
            live[s] = false;
        }
        steps.push(RepairStep { leaf, star, neighbors });
    }
    let survivors = (0..system.star_count()).filter(|&s| live[s]).collect();
    Repair { survivors, steps }
}

/// Checks that `set` is an independent transversal of the glued graph:
/// independent, free of centers, and at most one vertex per leaf set.
pub fn is_independent_transversal(system: &StarSystem, set: &[usize]) -> bool {
    let mut stars: Vec<usize> = set.iter().map(|&v| system.star_of(v)).collect();
    stars.sort_unstable();
    let distinct = stars.windows(2).all(|w| w[0] != w[1]);
    distinct && set.iter().all(|&v| v < system.glued.n() && !system.is_center(v)) && system.glued.is_independent(set)
}

/// The graph on the surviving stars, relabeled so that survivor `j` occupies
/// block `j`, plus the bridges added to make it connected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bridged {
    pub graph: Graph,
    pub bridges: Vec<(usize, usize)>,
}

/// Joins the components of `g` (in star layout with star size `k`) in a
/// chain: the lowest leaf of the lowest star of each component is linked to
/// the same vertex of the next component.
pub fn add_bridges(g: &Graph, k: usize) -> Bridged {
    let comps = components(g).groups();
    let anchors: Vec<usize> = comps.iter().map(|c| c[0] - c[0] % (k + 1) + 1).collect();
    let bridges: Vec<(usize, usize)> = anchors.windows(2).map(|w| (w[0], w[1])).collect();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend(&bridges);
    let graph = Graph::from_edges(g.n(), &edges).expect("bridges join distinct components");
    Bridged { graph, bridges }
}

/// `f = 2` on every center of a graph in star layout, 0 elsewhere; the
/// result is checked with [`validate_broadcast`].
pub fn center_broadcast(g: &Graph, k: usize) -> Result<Broadcast> {
    let stars = g.n() / (k + 1);
    if stars < 2 || !g.n().is_multiple_of(k + 1) {
        return Err(Error::Degenerate(format!("{stars} star(s); the center broadcast needs at least 2")));
    }
    let values = (0..g.n()).map(|v| if v % (k + 1) == 0 { 2 } else { 0 }).collect();
    let f = Broadcast::new(values);
    if let Some(v) = validate_broadcast(g, &f)?.first() {
        return Err(Error::Degenerate(format!("center broadcast is invalid: {v}")));
    }
    Ok(f)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transversal {
    pub beta: usize,
    /// One leaf per chosen star, ascending.
    pub witness: Vec<usize>,
    pub nodes: u64,
    pub budget_hit: bool,
}

/// Largest independent transversal of a graph in star layout: a maximum
/// independent set of the leaf graph in which each leaf set is a clique.
pub fn max_independent_transversal(g: &Graph, k: usize, budget: &Budget) -> Transversal {
    let leaves: Vec<usize> = (0..g.n()).filter(|v| v % (k + 1) != 0).collect();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in leaves.iter().enumerate() {
        index[v] = i;
    }
    let mut edges = Vec::new();
    for (i, &v) in leaves.iter().enumerate() {
        for &w in g.neighbors(v) {
            if index[w] != usize::MAX && v < w {
                edges.push((i, index[w]));
            }
        }
        for &w in &leaves[i + 1..] {
            if w / (k + 1) == v / (k + 1) && !g.has_edge(v, w) {
                edges.push((i, index[w]));
            }
        }
    }
    let aux = Graph::from_edges(leaves.len(), &edges).expect("aux edges are distinct");
    let found = independent_set_search(&aux, budget);
    let witness: Vec<usize> = found.set.iter().map(|&i| leaves[i]).collect();
    Transversal { beta: witness.len(), witness, nodes: found.nodes, budget_hit: found.budget_hit }
}

/// Stage at which a run left the theorem's regime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DegenerateStage {
    /// More than `n/2` host vertices were needed to cut the short cycles.
    ShortCycles,
    /// Pruning removed every star.
    Repair,
    /// Exactly one star survived, so no center can broadcast with value 2.
    SingleStar,
}

impl DegenerateStage {
    pub fn as_str(&self) -> &'static str {
        match self {
            DegenerateStage::ShortCycles => "short_cycles",
            DegenerateStage::Repair => "repair",
            DegenerateStage::SingleStar => "single_star",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaMethod {
    Exact,
    /// `n_ℓ + (k−1)β` with an exact transversal number β.
    TransversalBound,
    /// `k · n_ℓ`.
    StarBound,
}

/// `α(G*)`, exact or an upper bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaValue {
    pub value: u64,
    pub exact: bool,
    pub method: AlphaMethod,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaBValue {
    pub value: u64,
    pub exact: bool,
}

/// Post-construction checks, each recomputed from the final graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralChecks {
    pub girth_ok: bool,
    pub min_degree_ok: bool,
    pub connected: bool,
    pub broadcast_valid: bool,
    pub centers_packing: bool,
    pub transversal_ok: bool,
    pub accounting_ok: bool,
    pub repair_steps_small: bool,
}

impl StructuralChecks {
    pub fn all(&self) -> bool {
        self.girth_ok
            && self.min_degree_ok
            && self.connected
            && self.broadcast_valid
            && self.centers_packing
            && self.transversal_ok
            && self.accounting_ok
            && self.repair_steps_small
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstructionReport {
    pub schema: u32,
    pub seed: u64,
    pub n: usize,
    pub k: usize,
    /// Absent when the host graph was supplied by the caller.
    pub epsilon: Option<f64>,
    pub p: Option<f64>,
    pub host_edges: usize,
    pub glue_collisions: usize,
    pub short_cycle_removals: Vec<usize>,
    pub repair_steps: usize,
    pub repair_log: Vec<RepairStep>,
    pub surviving_stars: usize,
    pub bridges_added: usize,
    pub vertices: usize,
    pub edges: usize,
    /// `None` when the final graph is acyclic or was never built.
    pub girth: Option<usize>,
    pub min_degree: Option<usize>,
    pub connected: Option<bool>,
    pub broadcast_weight: u64,
    pub alpha: Option<AlphaValue>,
    pub beta: Option<usize>,
    pub alpha_b: Option<AlphaBValue>,
    /// `2n_ℓ / α`; a lower bound on the true ratio when α is only bounded.
    pub achieved_ratio: Option<f64>,
    /// The asymptotic target `2(1 − 1/k)`.
    pub reference_ratio: f64,
    pub degenerate: Option<DegenerateStage>,
    pub checks: Option<StructuralChecks>,
}

impl ConstructionReport {
    pub fn is_degenerate(&self) -> bool {
        self.degenerate.is_some()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstructionOptions {
    /// Wall-clock limit for the exact α (and β) solves.
    pub alpha_budget: Duration,
    /// Run the exact α_b solver when the final graph has at most this many vertices.
    pub alpha_b_max_vertices: usize,
    pub alpha_b_budget: Duration,
}

impl Default for ConstructionOptions {
    fn default() -> Self {
        ConstructionOptions {
            alpha_budget: Duration::from_secs(10),
            alpha_b_max_vertices: 0,
            alpha_b_budget: Duration::from_secs(10),
        }
    }
}

/// A finished run: the report, and the final graph with its center broadcast
/// when the run was not degenerate.
#[derive(Clone, Debug)]
pub struct Construction {
    pub report: ConstructionReport,
    pub graph: Option<Graph>,
    pub broadcast: Option<Broadcast>,
}

/// Full pipeline in the theorem's regime: `k ≥ 3` and `0 < ε < 1/k²`.
pub fn run_construction(
    n: usize,
    k: usize,
    epsilon: f64,
    seed: u64,
    options: &ConstructionOptions,
) -> Result<Construction> {
    check_host_params(n, epsilon)?;
    if k < 3 {
        return Err(Error::InvalidParameter(format!("k = {k} < 3")));
    }
    if epsilon * (k * k) as f64 >= 1.0 {
        return Err(Error::InvalidParameter(format!("epsilon = {epsilon} is not below 1/k² = 1/{}", k * k)));
    }
    let p = edge_probability(n, epsilon);
    let mut rng = PortableRng::new(seed);
    let host = sample_host_with(&mut rng, n, p);
    Ok(pipeline(rng, host, k, seed, Some((epsilon, p)), options))
}

/// The pipeline after host sampling, on a caller-supplied host graph. Ports
/// are drawn from a fresh stream for `seed`. No regime restriction applies.
pub fn construct_from_host(host: &Graph, k: usize, seed: u64, options: &ConstructionOptions) -> Result<Construction> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    Ok(pipeline(PortableRng::new(seed), host.clone(), k, seed, None, options))
}

fn pipeline(
    mut rng: PortableRng,
    host: Graph,
    k: usize,
    seed: u64,
    regime: Option<(f64, f64)>,
    options: &ConstructionOptions,
) -> Construction {
    let n = host.n();
    let system = glue_with(&mut rng, host, k);
    let f_set = break_short_cycles(system.host(), k);
    let mut report = ConstructionReport {
        schema: 1,
        seed,
        n,
        k,
        epsilon: regime.map(|r| r.0),
        p: regime.map(|r| r.1),
        host_edges: system.host().edge_count(),
        glue_collisions: system.collisions().len(),
        short_cycle_removals: f_set.clone(),
        repair_steps: 0,
        repair_log: Vec::new(),
        surviving_stars: 0,
        bridges_added: 0,
        vertices: 0,
        edges: 0,
        girth: None,
        min_degree: None,
        connected: None,
        broadcast_weight: 0,
        alpha: None,
        beta: None,
        alpha_b: None,
        achieved_ratio: None,
        reference_ratio: 2.0 * (1.0 - 1.0 / k as f64),
        degenerate: None,
        checks: None,
    };
    if 2 * f_set.len() > n {
        report.degenerate = Some(DegenerateStage::ShortCycles);
        return Construction { report, graph: None, broadcast: None };
    }

    let alive: Vec<usize> = (0..n).filter(|v| f_set.binary_search(v).is_err()).collect();
    let repair = repair_min_degree(&system, &alive);
    let n_ell = repair.survivors.len();
    report.repair_steps = repair.steps.len();
    report.surviving_stars = n_ell;
    let removed_by_repair: usize = repair.steps.iter().map(|s| 1 + s.neighbors.len()).sum();
    let accounting_ok = n_ell + f_set.len() + removed_by_repair == n;
    let xs: Vec<usize> = repair.steps.iter().map(|s| s.leaf).collect();
    let transversal_ok = is_independent_transversal(&system, &xs);
    let repair_steps_small = repair.steps.iter().all(|s| s.neighbors.len() < k);
    report.repair_log = repair.steps;
    if n_ell == 0 {
        report.degenerate = Some(DegenerateStage::Repair);
        return Construction { report, graph: None, broadcast: None };
    }

    let core = system.glued().induced(&system.vertices_of(&repair.survivors));
    let bridged = add_bridges(&core, k);
    let g = bridged.graph;
    report.bridges_added = bridged.bridges.len();
    report.vertices = g.n();
    report.edges = g.edge_count();
    report.girth = girth(&g);
    let delta = min_degree(&g).expect("nonempty");
    report.min_degree = Some(delta);
    let connected = is_connected(&g);
    report.connected = Some(connected);
    if n_ell == 1 {
        report.degenerate = Some(DegenerateStage::SingleStar);
        return Construction { report, graph: Some(g), broadcast: None };
    }

    let broadcast = center_broadcast(&g, k).ok();
    let broadcast_valid = broadcast.is_some();
    let dm = DistanceMatrix::new(&g);
    let centers: Vec<usize> = (0..n_ell).map(|j| j * (k + 1)).collect();
    let centers_packing = centers.iter().enumerate().all(|(i, &u)| centers[i + 1..].iter().all(|&v| dm.get(u, v) >= 3));
    report.broadcast_weight = 2 * n_ell as u64;
    report.checks = Some(StructuralChecks {
        girth_ok: report.girth.is_none_or(|gi| gi >= k),
        min_degree_ok: delta >= k,
        connected,
        broadcast_valid,
        centers_packing,
        transversal_ok,
        accounting_ok,
        repair_steps_small,
    });

    let alpha = {
        let found = independent_set_search(&g, &Budget::new(options.alpha_budget));
        if found.budget_hit {
            let t = max_independent_transversal(&g, k, &Budget::new(options.alpha_budget));
            if t.budget_hit {
                AlphaValue { value: (k * n_ell) as u64, exact: false, method: AlphaMethod::StarBound }
            } else {
                report.beta = Some(t.beta);
                let bound = (n_ell + (k - 1) * t.beta).min(k * n_ell);
                AlphaValue { value: bound as u64, exact: false, method: AlphaMethod::TransversalBound }
            }
        } else {
            AlphaValue { value: found.set.len() as u64, exact: true, method: AlphaMethod::Exact }
        }
    };
    report.alpha = Some(alpha);
    report.achieved_ratio = Some(report.broadcast_weight as f64 / alpha.value as f64);

    if g.n() <= options.alpha_b_max_vertices {
        if let Ok(r) = alpha_b_exact(&g, &Budget::new(options.alpha_b_budget)) {
            report.alpha_b = Some(AlphaBValue { value: r.optimum, exact: !r.time_budget_hit });
        }
    }
    Construction { report, graph: Some(g), broadcast }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{cycle, path};

    fn star_system(n: usize, k: usize, glue: &[(usize, usize)]) -> StarSystem {
        let ports: Vec<Port> =
            glue.iter().map(|&(a, b)| Port { host: (a / (k + 1), b / (k + 1)), leaves: (a, b) }).collect();
        let mut host_edges: Vec<(usize, usize)> = ports.iter().map(|p| p.host).collect();
        host_edges.sort_unstable();
        host_edges.dedup();
        StarSystem::from_parts(Graph::from_edges(n, &host_edges).unwrap(), k, ports).unwrap()
    }

    #[test]
    fn edge_probability_formula() {
        assert!((edge_probability(100, 0.05) - 0.012589).abs() < 1e-6);
    }

    #[test]
    fn host_sampling_is_deterministic() {
        assert_eq!(sample_host(40, 0.3, 7).unwrap(), sample_host(40, 0.3, 7).unwrap());
        assert_ne!(sample_host(40, 0.3, 7).unwrap(), sample_host(40, 0.3, 8).unwrap());
        assert!(sample_host(1, 0.3, 0).is_err());
        assert!(sample_host(10, 1.0, 0).is_err());
        assert!(sample_host(10, 0.0, 0).is_err());
    }

    #[test]
    fn rng_stream_is_pinned() {
        let mut rng = PortableRng::new(42);
        let first: Vec<u64> = (0..3).map(|_| rng.next_u64()).collect();
        let mut again = PortableRng::new(42);
        assert_eq!(first, (0..3).map(|_| again.next_u64()).collect::<Vec<_>>());
        for _ in 0..1000 {
            let u = rng.next_f64();
            assert!((0.0..1.0).contains(&u));
            assert!(rng.next_index(3) < 3);
        }
    }

    #[test]
    fn glue_counts() {
        let s = glue_stars(&path(2), 3, 1).unwrap();
        assert_eq!(s.glued().n(), 8);
        assert_eq!(s.glued().edge_count(), 7);
        let s = glue_stars(&path(3), 3, 1).unwrap();
        assert_eq!(s.glued().edge_count(), 9 + 2);
        assert_eq!(s.ports().len(), 2);
        for p in s.ports() {
            assert!(!s.is_center(p.leaves.0) && s.star_of(p.leaves.0) == p.host.0);
            assert!(!s.is_center(p.leaves.1) && s.star_of(p.leaves.1) == p.host.1);
        }
        for i in 0..3 {
            assert_eq!(s.glued().degree(s.center(i)), 3);
        }
    }

    #[test]
    fn collisions_collapse() {
        let s = star_system(2, 3, &[(1, 5), (1, 5), (2, 6)]);
        assert_eq!(s.collisions().len(), 1);
        assert_eq!(s.glued().edge_count(), 8);
    }

    #[test]
    fn short_cycles() {
        assert!(break_short_cycles(&path(6), 5).is_empty());
        assert_eq!(break_short_cycles(&cycle(3), 4), vec![0]);
        assert!(break_short_cycles(&cycle(5), 5).is_empty());
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(break_short_cycles(&two_triangles, 4), vec![0, 3]);
    }

    #[test]
    fn repair_examples() {
        let lone = star_system(1, 3, &[]);
        let r = repair_min_degree(&lone, &[0]);
        assert!(r.survivors.is_empty());
        assert_eq!(r.steps, vec![RepairStep { leaf: 1, star: 0, neighbors: vec![] }]);

        // k = 1: a glued pair of K_{1,1} already has minimum degree 1.
        let pair = star_system(2, 1, &[(1, 3)]);
        let r = repair_min_degree(&pair, &[0, 1]);
        assert_eq!(r.survivors, vec![0, 1]);
        assert!(r.steps.is_empty());
    }

    #[test]
    fn bridges_chain_components() {
        let k = 3;
        let two = star_system(2, k, &[]).glued().clone();
        let b = add_bridges(&two, k);
        assert_eq!(b.bridges, vec![(1, 5)]);
        assert!(is_connected(&b.graph));
        let three = star_system(3, k, &[]).glued().clone();
        let b = add_bridges(&three, k);
        assert_eq!(b.bridges.len(), 2);
        assert!(is_connected(&b.graph));
        let joined = star_system(2, k, &[(1, 5)]).glued().clone();
        assert!(add_bridges(&joined, k).bridges.is_empty());
    }

    #[test]
    fn center_broadcast_examples() {
        let g = star_system(2, 3, &[(1, 5)]).glued().clone();
        let f = center_broadcast(&g, 3).unwrap();
        assert_eq!(f.weight(), 4);
        assert_eq!(f.support(), vec![0, 4]);
        let single = star_system(1, 3, &[]).glued().clone();
        assert!(matches!(center_broadcast(&single, 3), Err(Error::Degenerate(_))));
    }

    #[test]
    fn transversal_examples() {
        let budget = Budget::unlimited();
        let one = star_system(1, 3, &[]).glued().clone();
        assert_eq!(max_independent_transversal(&one, 3, &budget).beta, 1);
        let two = star_system(2, 3, &[(1, 5)]).glued().clone();
        let t = max_independent_transversal(&two, 3, &budget);
        assert_eq!(t.beta, 2);
        assert!(!t.witness.contains(&1) || !t.witness.contains(&5));
        let all: Vec<(usize, usize)> = (1..=3).flat_map(|a| (5..=7).map(move |b| (a, b))).collect();
        let full = star_system(2, 3, &all);
        assert_eq!(full.collisions().len(), 0);
        assert_eq!(max_independent_transversal(full.glued(), 3, &budget).beta, 1);
    }

    #[test]
    fn theorem_regime_parameters() {
        let o = ConstructionOptions::default();
        assert!(run_construction(30, 2, 0.1, 0, &o).is_err());
        assert!(run_construction(30, 3, 0.2, 0, &o).is_err());
        assert!(run_construction(30, 3, 0.05, 0, &o).is_ok());
    }

    #[test]
    fn dense_host_run_is_well_formed() {
        let host = sample_gnp(30, 0.7, 3).unwrap();
        let c = construct_from_host(&host, 3, 3, &ConstructionOptions::default()).unwrap();
        let r = &c.report;
        assert!(r.degenerate.is_none(), "{r:?}");
        assert!(r.checks.unwrap().all(), "{r:?}");
        assert_eq!(c.broadcast.unwrap().weight(), 2 * r.surviving_stars as u64);
        assert!(r.alpha.unwrap().exact);
    }
}
