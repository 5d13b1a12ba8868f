//! Independent-set witness families built from an independent broadcast.
//!
//! Each broadcasting vertex `x` receives a set `I(x)` (itself, its
//! neighborhood, its distance-{0,2} sphere, or neighborhoods along an
//! isometric path from `x`) so that the union of all `I(x)` is independent and
//! its size bounds `α(G)` from below in terms of the broadcast weight. The
//! sizes are computed exactly and every claimed bound is re-checked by
//! [`verify_witness`].

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error as ThisError;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{bfs_distances, girth, is_connected, min_degree, DistanceMatrix};
use crate::solvers::{validate_broadcast, Broadcast};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Theorem {
    /// Girth at least 6, minimum degree at least 3: `α ≥ weight / 2`.
    #[serde(rename = "thm1")]
    GirthSixDegreeThree,
    /// Girth at least 6, minimum degree at least 5: `α ≥ weight − |{x : f(x) ≥ 2}|`.
    #[serde(rename = "thm3i")]
    GirthSixDegreeFive,
    /// Girth at least 4, minimum degree at least `10 / ξ`: `α ≥ weight / ξ`.
    #[serde(rename = "thm3ii")]
    GirthFourScaled,
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().trim_start_matches("thm") {
            "1" => Ok(Theorem::GirthSixDegreeThree),
            "3i" => Ok(Theorem::GirthSixDegreeFive),
            "3ii" => Ok(Theorem::GirthFourScaled),
            other => Err(Error::InvalidParameter(format!("unknown theorem '{other}' (expected 1, 3i or 3ii)"))),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::GirthSixDegreeThree => "thm1",
            Theorem::GirthSixDegreeFive => "thm3i",
            Theorem::GirthFourScaled => "thm3ii",
        })
    }
}

/// The scaling parameter ξ ∈ [2, 4), held as an exact reduced fraction.
///
/// Decimal strings and fractions parse exactly; an `f64` converts to the
/// exact dyadic rational it represents. All comparisons cross-multiply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Xi {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Xi {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidParameter("ξ has a zero denominator".into()));
        }
        let d = gcd(num, den);
        let xi = Xi { num: num / d, den: den / d };
        if xi.num < 2 * xi.den || xi.num >= 4 * xi.den {
            return Err(Error::InvalidParameter(format!("ξ = {xi} is outside [2, 4)")));
        }
        Ok(xi)
    }

    pub fn from_f64(x: f64) -> Result<Self> {
        if !(2.0..4.0).contains(&x) {
            return Err(Error::InvalidParameter(format!("ξ = {x} is outside [2, 4)")));
        }
        // x = 1.m * 2 with 52 mantissa bits: x = mantissa / 2^51.
        let bits = x.to_bits();
        let mantissa = (bits & ((1 << 52) - 1)) | (1 << 52);
        Xi::new(mantissa, 1 << 51)
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `a * ξ >= b`, exactly.
    pub fn scaled_at_least(&self, a: u64, b: u64) -> bool {
        u128::from(a) * u128::from(self.num) >= u128::from(b) * u128::from(self.den)
    }

    /// `⌊ξ · a⌋`.
    pub fn floor_times(&self, a: u64) -> u64 {
        (u128::from(a) * u128::from(self.num) / u128::from(self.den)) as u64
    }

    /// `⌈b / ξ⌉`.
    pub fn ceil_div(&self, b: u64) -> u64 {
        (u128::from(b) * u128::from(self.den)).div_ceil(u128::from(self.num)) as u64
    }
}

impl FromStr for Xi {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidParameter(format!("cannot parse ξ from '{s}'"));
        if let Some((a, b)) = s.split_once('/') {
            return Xi::new(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if int.is_empty() && frac.is_empty() || frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let den = 10u64.pow(frac.len() as u32);
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let frac: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        let num = int.checked_mul(den).and_then(|v| v.checked_add(frac)).ok_or_else(bad)?;
        Xi::new(num, den)
    }
}

impl fmt::Display for Xi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Serialize for Xi {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_f64(self.to_f64())
    }
}

/// Which construction produced `I(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// `I(x) = {x}`.
    Singleton,
    /// `I(x) = N(x)`.
    Neighborhood,
    /// Vertices at distance 0 or 2 from `x`.
    DistanceZeroTwo,
    /// Distance-{0,2} sphere plus neighborhoods of odd path vertices `x_5, x_7, …`.
    SphereAndPath,
    /// Neighborhoods of evenly spaced vertices on an isometric path from `x`.
    PathNeighborhoods,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WitnessEntry {
    pub x: usize,
    #[serde(rename = "f")]
    pub value: u32,
    pub rule: Rule,
    /// Number of path segments used by the path-based rules.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
    /// The isometric path `x, x_1, …, x_L`, when the rule needs one.
    pub path: Option<Vec<usize>>,
    /// `I(x)`, ascending.
    pub set: Vec<usize>,
    pub size: usize,
    /// Lower bound on `|I(x)|` guaranteed by the hypotheses.
    pub bound: usize,
    pub bound_satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WitnessFamily {
    pub theorem: Theorem,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub xi: Option<Xi>,
    /// Entries ordered by ascending broadcaster.
    pub entries: Vec<WitnessEntry>,
}

impl WitnessFamily {
    pub fn total_size(&self) -> usize {
        self.entries.iter().map(|e| e.size).sum()
    }

    /// Union of all `I(x)`, ascending.
    pub fn union(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.entries.iter().flat_map(|e| e.set.iter().copied()).collect();
        all.sort_unstable();
        all.dedup();
        all
    }
}

/// An isometric path `x = p_0, p_1, …, p_length` with `dist(x, p_i) = i`.
///
/// The endpoint is the smallest-index vertex at distance `length`; walking
/// back, each predecessor is the smallest-index neighbor one step closer.
pub fn shortest_path_of_length(g: &Graph, x: usize, length: usize) -> Result<Vec<usize>> {
    let row = bfs_distances(g, x)?;
    let ecc = row.max_finite().ok_or(Error::Disconnected)? as usize;
    if length > ecc {
        return Err(Error::PathTooLong { vertex: x, length, ecc });
    }
    Ok(isometric_path(g, &row.dist, length))
}

fn isometric_path(g: &Graph, dist: &[u32], length: usize) -> Vec<usize> {
    let end = (0..g.n()).find(|&v| dist[v] as usize == length).expect("length at most the eccentricity");
    let mut path = vec![end];
    let mut cur = end;
    for d in (0..length).rev() {
        cur = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| dist[w] as usize == d)
            .expect("a vertex at distance d+1 has a neighbor at distance d");
        path.push(cur);
    }
    path.reverse();
    path
}

fn set_of(iter: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = iter.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v
}

fn neighborhood_minus(g: &Graph, v: usize, skip: Option<usize>) -> impl Iterator<Item = usize> + '_ {
    g.neighbors(v).iter().copied().filter(move |&w| Some(w) != skip)
}

fn check_hypotheses(
    g: &Graph,
    f: &Broadcast,
    min_girth: usize,
    degree_ok: impl Fn(usize) -> std::result::Result<(), String>,
) -> Result<usize> {
    if f.len() != g.n() {
        return Err(Error::SizeMismatch { expected: g.n(), got: f.len() });
    }
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !is_connected(g) {
        return Err(Error::Hypothesis("graph is disconnected".into()));
    }
    if let Some(gi) = girth(g).filter(|&gi| gi < min_girth) {
        return Err(Error::Hypothesis(format!("girth {gi} < {min_girth}")));
    }
    let delta = min_degree(g)?;
    degree_ok(delta).map_err(Error::Hypothesis)?;
    let violations = validate_broadcast(g, f)?;
    if let Some(v) = violations.first() {
        return Err(Error::Hypothesis(format!("not an independent broadcast: {v}")));
    }
    Ok(delta)
}

fn at_least(required: usize) -> impl Fn(usize) -> std::result::Result<(), String> {
    move |delta| {
        if delta >= required {
            Ok(())
        } else {
            Err(format!("minimum degree {delta} < {required}"))
        }
    }
}

fn entry(
    x: usize,
    value: u32,
    rule: Rule,
    ell: Option<usize>,
    path: Option<Vec<usize>>,
    set: Vec<usize>,
    bound: usize,
) -> WitnessEntry {
    let size = set.len();
    WitnessEntry { x, value, rule, ell, path, set, size, bound, bound_satisfied: size >= bound }
}

/// Family for connected graphs of girth at least 6 and minimum degree at least 3.
///
/// `f(x) ∈ {1,2}`: `{x}`; `3..=5`: `N(x)`; `6..=13`: the distance-{0,2}
/// sphere; `f(x) ≥ 14`: the sphere plus `N(x_{2i+3}) \ {x_{2i+2}}` for
/// `i = 1..=ℓ`, `ℓ = ⌊(f(x) − 9)/4⌋`, along an isometric path of length `2ℓ + 4`.
pub fn witness_thm1(g: &Graph, f: &Broadcast) -> Result<WitnessFamily> {
    check_hypotheses(g, f, 6, at_least(3))?;
    let dm = DistanceMatrix::new(g);
    let entries = f
        .support()
        .into_iter()
        .map(|x| {
            let value = f.get(x);
            let row = dm.row(x);
            let sphere = || (0..g.n()).filter(|&y| row[y] == 0 || row[y] == 2);
            match value {
                1 | 2 => entry(x, value, Rule::Singleton, None, None, vec![x], 1),
                3..=5 => entry(x, value, Rule::Neighborhood, None, None, g.neighbors(x).to_vec(), 3),
                6..=13 => entry(x, value, Rule::DistanceZeroTwo, None, None, set_of(sphere()), 7),
                _ => {
                    let ell = ((value - 9) / 4) as usize;
                    let path = isometric_path(g, row, 2 * ell + 4);
                    let extra = (1..=ell).flat_map(|i| {
                        neighborhood_minus(g, path[2 * i + 3], Some(path[2 * i + 2])).collect::<Vec<_>>()
                    });
                    let set = set_of(sphere().chain(extra));
                    entry(x, value, Rule::SphereAndPath, Some(ell), Some(path), set, 7 + 2 * ell)
                }
            }
        })
        .collect();
    Ok(WitnessFamily { theorem: Theorem::GirthSixDegreeThree, xi: None, entries })
}

/// Family for connected graphs of girth at least 6 and minimum degree at least 5.
///
/// `f(x) ∈ {1,2}`: `{x}`; `f(x) ≥ 3`: `N(x) ∪ ⋃_{i=2..=ℓ} N(x_{2i−2}) \ {x_{2i−3}}`
/// with `ℓ = ⌊(f(x) + 1)/4⌋` along an isometric path of length `2ℓ − 1`.
pub fn witness_thm3i(g: &Graph, f: &Broadcast) -> Result<WitnessFamily> {
    check_hypotheses(g, f, 6, at_least(5))?;
    let dm = DistanceMatrix::new(g);
    let entries = f
        .support()
        .into_iter()
        .map(|x| {
            let value = f.get(x);
            if value <= 2 {
                return entry(x, value, Rule::Singleton, None, None, vec![x], 1);
            }
            let ell = ((value + 1) / 4) as usize;
            let path = isometric_path(g, dm.row(x), 2 * ell - 1);
            let extra = (2..=ell)
                .flat_map(|i| neighborhood_minus(g, path[2 * i - 2], Some(path[2 * i - 3])).collect::<Vec<_>>());
            let set = set_of(g.neighbors(x).iter().copied().chain(extra));
            entry(x, value, Rule::PathNeighborhoods, Some(ell), Some(path), set, 5 + 4 * (ell - 1))
        })
        .collect();
    Ok(WitnessFamily { theorem: Theorem::GirthSixDegreeFive, xi: None, entries })
}

/// Family for connected graphs of girth at least 4 and minimum degree at least `10/ξ`.
///
/// `f(x) ∈ {1,2}`: `{x}`; `f(x) ≥ 3`: `⋃_{i=1..=ℓ} N(x_{4(i−1)})` with
/// `ℓ = ⌊(f(x) + 5)/8⌋` along an isometric path of length `4ℓ − 3`.
pub fn witness_thm3ii(g: &Graph, f: &Broadcast, xi: Xi) -> Result<WitnessFamily> {
    let delta = check_hypotheses(g, f, 4, |delta| {
        if xi.scaled_at_least(delta as u64, 10) {
            Ok(())
        } else {
            Err(format!("minimum degree {delta} < 10/ξ with ξ = {xi}"))
        }
    })?;
    let dm = DistanceMatrix::new(g);
    let entries = f
        .support()
        .into_iter()
        .map(|x| {
            let value = f.get(x);
            if value <= 2 {
                return entry(x, value, Rule::Singleton, None, None, vec![x], 1);
            }
            let ell = ((value + 5) / 8) as usize;
            let path = isometric_path(g, dm.row(x), 4 * ell - 3);
            let set = set_of((1..=ell).flat_map(|i| g.neighbors(path[4 * (i - 1)]).to_vec()));
            let bound = structural_bound_thm3ii(value, delta, xi);
            entry(x, value, Rule::PathNeighborhoods, Some(ell), Some(path), set, bound)
        })
        .collect();
    Ok(WitnessFamily { theorem: Theorem::GirthFourScaled, xi: Some(xi), entries })
}

fn structural_bound_thm3ii(value: u32, delta: usize, xi: Xi) -> usize {
    match value {
        0 => 0,
        1 | 2 => 1,
        v if u64::from(v) <= xi.floor_times(delta as u64) => delta,
        v => delta * ((v + 5) / 8) as usize,
    }
}

/// Bound on `|I(x)|` for the given theorem, recomputed from `f(x)` alone.
fn expected_bound(theorem: Theorem, value: u32, delta: usize, xi: Option<Xi>) -> usize {
    match theorem {
        Theorem::GirthSixDegreeThree => match value {
            1 | 2 => 1,
            3..=5 => 3,
            6..=13 => 7,
            v => 7 + 2 * ((v - 9) / 4) as usize,
        },
        Theorem::GirthSixDegreeFive => match value {
            1 | 2 => 1,
            v => 5 + 4 * (((v + 1) / 4) as usize - 1),
        },
        Theorem::GirthFourScaled => structural_bound_thm3ii(value, delta, xi.expect("thm3ii family carries ξ")),
    }
}

/// One verified inequality or structural property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub clause: Clause,
    pub statement: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    Coverage,
    Independent,
    Disjoint,
    NonAdjacent,
    EntryBound,
    Aggregate,
    Packing,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json_name(*self);
        f.write_str(s)
    }
}

fn serde_json_name(c: Clause) -> &'static str {
    match c {
        Clause::Coverage => "coverage",
        Clause::Independent => "independent",
        Clause::Disjoint => "disjoint",
        Clause::NonAdjacent => "non_adjacent",
        Clause::EntryBound => "entry_bound",
        Clause::Aggregate => "aggregate",
        Clause::Packing => "packing",
    }
}

/// Machine-readable record that a witness family checks out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub theorem: Theorem,
    pub weight: u64,
    pub support_size: usize,
    /// `Σ |I(x)|`, which equals `|⋃ I(x)|` and is a lower bound on `α(G)`.
    pub total_size: usize,
    pub alpha_lower_bound: usize,
    pub checks: Vec<CheckRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, ThisError, Serialize)]
#[error("witness check '{clause}' failed: {detail}")]
pub struct WitnessViolation {
    pub clause: Clause,
    pub detail: String,
}

fn fail(clause: Clause, detail: String) -> std::result::Result<Certificate, WitnessViolation> {
    Err(WitnessViolation { clause, detail })
}

/// Checks, in order: coverage of the support, independence of every `I(x)`,
/// pairwise disjointness, no edges between different sets, the per-entry
/// cardinality bounds, and the aggregate bound for the family's theorem.
pub fn verify_witness(
    g: &Graph,
    f: &Broadcast,
    w: &WitnessFamily,
) -> std::result::Result<Certificate, WitnessViolation> {
    let n = g.n();
    let mut checks = Vec::new();
    if f.len() != n {
        return fail(Clause::Coverage, format!("broadcast has {} values for {n} vertices", f.len()));
    }
    let xs: Vec<usize> = w.entries.iter().map(|e| e.x).collect();
    let support = f.support();
    if xs != support {
        return fail(Clause::Coverage, format!("entries {xs:?} do not match the support {support:?}"));
    }
    if let Some(e) = w.entries.iter().find(|e| e.value != f.get(e.x)) {
        return fail(Clause::Coverage, format!("entry x={} records f={} but f(x)={}", e.x, e.value, f.get(e.x)));
    }
    checks.push(CheckRecord {
        clause: Clause::Coverage,
        statement: format!("entries cover the support X, |X| = {}", support.len()),
    });

    for e in &w.entries {
        if let Some(&v) = e.set.iter().find(|&&v| v >= n) {
            return fail(Clause::Independent, format!("I({}) contains vertex {v} outside the graph", e.x));
        }
        for (i, &u) in e.set.iter().enumerate() {
            for &v in &e.set[i + 1..] {
                if u == v {
                    return fail(Clause::Independent, format!("I({}) lists vertex {u} twice", e.x));
                }
                if g.has_edge(u, v) {
                    return fail(Clause::Independent, format!("I({}) contains the edge {u}-{v}", e.x));
                }
            }
        }
    }
    checks.push(CheckRecord { clause: Clause::Independent, statement: "every I(x) is independent".into() });

    let mut owner = vec![usize::MAX; n];
    for (k, e) in w.entries.iter().enumerate() {
        for &v in &e.set {
            if owner[v] != usize::MAX {
                let other = w.entries[owner[v]].x;
                return fail(Clause::Disjoint, format!("I({other}) and I({}) share vertex {v}", e.x));
            }
            owner[v] = k;
        }
    }
    checks.push(CheckRecord { clause: Clause::Disjoint, statement: "the sets I(x) are pairwise disjoint".into() });

    for (u, v) in g.edges() {
        let (a, b) = (owner[u], owner[v]);
        if a != usize::MAX && b != usize::MAX && a != b {
            return fail(
                Clause::NonAdjacent,
                format!("edge {u}-{v} joins I({}) and I({})", w.entries[a].x, w.entries[b].x),
            );
        }
    }
    checks.push(CheckRecord { clause: Clause::NonAdjacent, statement: "no edge joins two different sets".into() });

    let delta = if n == 0 { 0 } else { min_degree(g).unwrap_or(0) };
    if w.theorem == Theorem::GirthFourScaled && w.xi.is_none() {
        return fail(Clause::EntryBound, "thm3ii family without ξ".into());
    }
    for e in &w.entries {
        let bound = expected_bound(w.theorem, e.value, delta, w.xi);
        let size = e.set.len();
        if e.size != size || e.bound != bound {
            return fail(
                Clause::EntryBound,
                format!("entry x={} records size {} and bound {}, expected {size} and {bound}", e.x, e.size, e.bound),
            );
        }
        if size < bound {
            return fail(Clause::EntryBound, format!("|I({})| = {size} < {bound}", e.x));
        }
        let value = u64::from(e.value);
        let size64 = size as u64;
        let relation_ok = match w.theorem {
            // Strict unless f(x) = 2, where |I(x)| = 1 = f(x)/2.
            Theorem::GirthSixDegreeThree if e.value == 2 => 2 * size64 == value,
            Theorem::GirthSixDegreeThree => 2 * size64 > value,
            Theorem::GirthSixDegreeFive if e.value == 1 => size64 >= 1,
            Theorem::GirthSixDegreeFive => size64 + 1 >= value,
            Theorem::GirthFourScaled => w.xi.expect("checked").scaled_at_least(size64, value),
        };
        if !relation_ok {
            return fail(Clause::EntryBound, format!("|I({})| = {size} is too small for f = {}", e.x, e.value));
        }
    }
    checks.push(CheckRecord {
        clause: Clause::EntryBound,
        statement: match w.theorem {
            Theorem::GirthSixDegreeThree => "|I(x)| > f(x)/2, with equality only where f(x) = 2".into(),
            Theorem::GirthSixDegreeFive => "|I(x)| = 1 for f(x) <= 2 and |I(x)| >= f(x) - 1 otherwise".into(),
            Theorem::GirthFourScaled => format!("|I(x)| >= f(x)/ξ with ξ = {}", w.xi.expect("checked")),
        },
    });

    let weight = f.weight();
    let total: usize = w.entries.iter().map(|e| e.set.len()).sum();
    let total64 = total as u64;
    match w.theorem {
        Theorem::GirthSixDegreeThree => {
            if 2 * total64 < weight {
                return fail(Clause::Aggregate, format!("Σ|I(x)| = {total} < weight/2 = {weight}/2"));
            }
            let all_two = support.iter().all(|&x| f.get(x) == 2);
            if !all_two && 2 * total64 <= weight {
                return fail(
                    Clause::Aggregate,
                    format!("Σ|I(x)| = {total} is not above weight/2 although some f(x) ≠ 2"),
                );
            }
            let rel = if all_two { ">=" } else { ">" };
            checks.push(CheckRecord {
                clause: Clause::Aggregate,
                statement: format!(
                    "α >= Σ|I(x)| = {total} {rel} weight/2 = {weight}/2, so α >= {}",
                    weight.div_ceil(2)
                ),
            });
        }
        Theorem::GirthSixDegreeFive => {
            let heavy: Vec<usize> = support.iter().copied().filter(|&x| f.get(x) >= 2).collect();
            let need = weight - heavy.len() as u64;
            if total64 < need {
                return fail(Clause::Aggregate, format!("Σ|I(x)| = {total} < weight − |X∖X1| = {need}"));
            }
            checks.push(CheckRecord {
                clause: Clause::Aggregate,
                statement: format!("α >= Σ|I(x)| = {total} >= weight − |X∖X1| = {weight} − {} = {need}", heavy.len()),
            });
            let dm = DistanceMatrix::new(g);
            for (i, &u) in heavy.iter().enumerate() {
                for &v in &heavy[i + 1..] {
                    if dm.get(u, v) < 3 {
                        return fail(
                            Clause::Packing,
                            format!("X∖X1 is not a packing: dist({u},{v}) = {}", dm.get(u, v)),
                        );
                    }
                }
            }
            checks.push(CheckRecord {
                clause: Clause::Packing,
                statement: format!("X∖X1 is a packing of size {}, so ρ >= {}", heavy.len(), heavy.len()),
            });
        }
        Theorem::GirthFourScaled => {
            let xi = w.xi.expect("checked");
            if !xi.scaled_at_least(total64, weight) {
                return fail(Clause::Aggregate, format!("Σ|I(x)| = {total} < weight/ξ = {weight}/({xi})"));
            }
            checks.push(CheckRecord {
                clause: Clause::Aggregate,
                statement: format!(
                    "α >= Σ|I(x)| = {total} >= weight/ξ = {weight}/({xi}), so α >= {}",
                    xi.ceil_div(weight)
                ),
            });
        }
    }

    Ok(Certificate {
        theorem: w.theorem,
        weight,
        support_size: support.len(),
        total_size: total,
        alpha_lower_bound: total,
        checks,
    })
}

/// Given a packing `X`, swaps some `x ∈ X` for two nonadjacent neighbors
/// `y < z`, returning the larger independent set `(X ∖ {x}) ∪ {y, z}`.
/// Candidates are tried with `x` ascending, then `(y, z)` lexicographically.
/// `Ok(None)` means no vertex of `X` has two nonadjacent neighbors that work.
pub fn strict_improvement_check(g: &Graph, packing: &[usize]) -> Result<Option<Vec<usize>>> {
    for &x in packing {
        g.check_vertex(x)?;
    }
    let mut xs = packing.to_vec();
    xs.sort_unstable();
    xs.dedup();
    for (i, &u) in xs.iter().enumerate() {
        let row = bfs_distances(g, u)?;
        for &v in &xs[i + 1..] {
            if row.get(v).is_some_and(|d| d < 3) {
                return Err(Error::NotAPacking(u, v));
            }
        }
    }
    for &x in &xs {
        let nb = g.neighbors(x);
        for (a, &y) in nb.iter().enumerate() {
            for &z in &nb[a + 1..] {
                if g.has_edge(y, z) {
                    continue;
                }
                let candidate = set_of(xs.iter().copied().filter(|&v| v != x).chain([y, z]));
                if candidate.len() == xs.len() + 1 && g.is_independent(&candidate) {
                    return Ok(Some(candidate));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn single(n: usize, x: usize, v: u32) -> Broadcast {
        let mut values = vec![0; n];
        values[x] = v;
        Broadcast::new(values)
    }

    #[test]
    fn path_examples() {
        assert_eq!(shortest_path_of_length(&path(5), 0, 3), Ok(vec![0, 1, 2, 3]));
        assert_eq!(shortest_path_of_length(&cycle(6), 0, 3), Ok(vec![0, 1, 2, 3]));
        assert_eq!(shortest_path_of_length(&petersen(), 4, 0), Ok(vec![4]));
        assert_eq!(shortest_path_of_length(&cycle(6), 0, 4), Err(Error::PathTooLong { vertex: 0, length: 4, ecc: 3 }));
    }

    #[test]
    fn thm1_rules_on_heawood() {
        let g = heawood();
        let f2 = witness_thm1(&g, &single(14, 0, 2)).unwrap();
        assert_eq!(f2.entries[0].rule, Rule::Singleton);
        assert_eq!(f2.entries[0].set, vec![0]);

        let f3 = witness_thm1(&g, &single(14, 0, 3)).unwrap();
        assert_eq!(f3.entries[0].rule, Rule::Neighborhood);
        assert_eq!(f3.entries[0].set, g.neighbors(0).to_vec());
        assert!(verify_witness(&g, &single(14, 0, 3), &f3).is_ok());
    }

    #[test]
    fn thm1_long_path_rule_on_honeycomb_torus() {
        let g = honeycomb_torus(8, 40);
        assert_eq!(girth(&g), Some(6));
        let ecc = crate::metrics::eccentricity(&g, 0).unwrap();
        assert!(ecc >= 17, "ecc {ecc}");
        for value in [14, 17] {
            let f = single(g.n(), 0, value);
            let w = witness_thm1(&g, &f).unwrap();
            let e = &w.entries[0];
            assert_eq!(e.rule, Rule::SphereAndPath);
            assert_eq!(e.path.as_ref().unwrap().len(), 2 * e.ell.unwrap() + 5);
            assert!(e.bound_satisfied && 2 * e.size > value as usize);
            let cert = verify_witness(&g, &f, &w).unwrap();
            assert_eq!(cert.total_size, e.size);
        }
    }

    #[test]
    fn hypotheses_are_checked() {
        let err = witness_thm1(&petersen(), &Broadcast::zeros(10)).unwrap_err();
        assert_eq!(err, Error::Hypothesis("girth 5 < 6".into()));
        let err = witness_thm3i(&heawood(), &Broadcast::zeros(14)).unwrap_err();
        assert_eq!(err, Error::Hypothesis("minimum degree 3 < 5".into()));
        let err = witness_thm1(&heawood(), &single(14, 0, 4)).unwrap_err();
        assert!(matches!(err, Error::Hypothesis(m) if m.contains("(B1)")));
        let xi: Xi = "2".parse().unwrap();
        let err = witness_thm3ii(&heawood(), &Broadcast::zeros(14), xi).unwrap_err();
        assert!(matches!(err, Error::Hypothesis(m) if m.starts_with("minimum degree 3 < 10/ξ")));
        let xi: Xi = "3.5".parse().unwrap();
        assert!(witness_thm3ii(&heawood(), &Broadcast::zeros(14), xi).is_ok());
        assert_eq!(witness_thm1(&heawood(), &Broadcast::zeros(3)), Err(Error::SizeMismatch { expected: 14, got: 3 }));
    }

    #[test]
    fn empty_support_gives_empty_certificate() {
        let g = heawood();
        let f = Broadcast::zeros(14);
        let w = witness_thm1(&g, &f).unwrap();
        assert!(w.entries.is_empty());
        let cert = verify_witness(&g, &f, &w).unwrap();
        assert_eq!((cert.weight, cert.total_size), (0, 0));
    }

    #[test]
    fn shared_vertex_is_a_disjointness_violation() {
        let g = heawood();
        let f = Broadcast::new(vec![1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0]);
        let mut w = witness_thm1(&g, &f).unwrap();
        assert!(verify_witness(&g, &f, &w).is_ok());
        w.entries[1].set = vec![0];
        let err = verify_witness(&g, &f, &w).unwrap_err();
        assert_eq!(err.clause, Clause::Disjoint);
    }

    #[test]
    fn xi_parsing_is_exact() {
        assert_eq!("2.5".parse::<Xi>().unwrap(), Xi::new(5, 2).unwrap());
        assert_eq!("5/2".parse::<Xi>().unwrap(), Xi::new(5, 2).unwrap());
        assert_eq!(Xi::from_f64(2.5).unwrap(), Xi::new(5, 2).unwrap());
        assert!("4".parse::<Xi>().is_err());
        assert!("1.99".parse::<Xi>().is_err());
        assert!("abc".parse::<Xi>().is_err());
        let xi = Xi::new(5, 2).unwrap();
        assert!(xi.scaled_at_least(4, 10));
        assert!(!xi.scaled_at_least(3, 10));
        assert_eq!(xi.floor_times(5), 12);
        assert_eq!(xi.ceil_div(11), 5);
        // 10/3 is not representable in binary; the nearest f64 is a dyadic rational just above it.
        let third = Xi::from_f64(10.0 / 3.0).unwrap();
        assert_ne!(third, Xi::new(10, 3).unwrap());
        assert_eq!(third.denom(), 1 << 51);
        assert!(Xi::new(10, 3).unwrap().scaled_at_least(3, 10));
    }

    #[test]
    fn improvement_examples() {
        assert_eq!(strict_improvement_check(&cycle(6), &[0]), Ok(Some(vec![1, 5])));
        assert_eq!(strict_improvement_check(&complete(4), &[0]), Ok(None));
        assert_eq!(strict_improvement_check(&cycle(6), &[0, 1]), Err(Error::NotAPacking(0, 1)));
    }

    #[test]
    fn theorem_names() {
        assert_eq!("1".parse::<Theorem>().unwrap(), Theorem::GirthSixDegreeThree);
        assert_eq!("3i".parse::<Theorem>().unwrap(), Theorem::GirthSixDegreeFive);
        assert_eq!("thm3ii".parse::<Theorem>().unwrap(), Theorem::GirthFourScaled);
        assert!("2".parse::<Theorem>().is_err());
    }
}
