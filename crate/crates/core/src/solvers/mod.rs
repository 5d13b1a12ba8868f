//! Exact solvers for the independence, packing and broadcast independence numbers.
//!
//! Every solver returns a [`SolverResult`] whose witness has been re-checked
//! against the original graph. When the wall-clock [`Budget`] runs out the
//! result is flagged and `optimum` is only the best value found so far.

use std::time::{Duration, Instant};

use serde::Serialize;

mod alpha_b;
mod broadcast;
mod mis;

pub use alpha_b::{alpha_b_bruteforce, alpha_b_exact, diametral_broadcast, DEFAULT_BRUTEFORCE_CAP};
pub use broadcast::{validate_broadcast, Broadcast, Violation};
pub use mis::{independent_set_search, max_independent_set, max_packing, IndependentSetSearch};

pub(crate) use broadcast::check_broadcast;

/// Default per-solve wall-clock limit.
pub const DEFAULT_BUDGET: Duration = Duration::from_secs(60);

/// Wall-clock limit for one solve. Polled every few hundred search nodes.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    start: Instant,
    limit: Option<Duration>,
}

impl Budget {
    pub fn new(limit: Duration) -> Self {
        Budget { start: Instant::now(), limit: Some(limit) }
    }

    pub fn unlimited() -> Self {
        Budget { start: Instant::now(), limit: None }
    }

    pub fn expired(&self) -> bool {
        self.limit.is_some_and(|l| self.start.elapsed() >= l)
    }

    pub fn elapsed_ms(&self) -> u64 {
        self.start.elapsed().as_millis() as u64
    }

    /// A fresh budget with the same limit, restarting the clock.
    pub fn restart(&self) -> Self {
        Budget { start: Instant::now(), limit: self.limit }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parameter {
    Alpha,
    Rho,
    AlphaB,
    /// Largest independent transversal of a star system.
    Beta,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    /// Sorted vertex set.
    Set(Vec<usize>),
    Broadcast(Broadcast),
}

impl Witness {
    pub fn as_set(&self) -> Option<&[usize]> {
        match self {
            Witness::Set(s) => Some(s),
            Witness::Broadcast(_) => None,
        }
    }

    pub fn as_broadcast(&self) -> Option<&Broadcast> {
        match self {
            Witness::Broadcast(b) => Some(b),
            Witness::Set(_) => None,
        }
    }
}

/// Outcome of an exact solve; serializes to
/// `{parameter, optimum, witness, nodes, budget_hit, wall_ms}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolverResult {
    pub parameter: Parameter,
    pub optimum: u64,
    pub witness: Witness,
    #[serde(rename = "nodes")]
    pub nodes_explored: u64,
    #[serde(rename = "budget_hit")]
    pub time_budget_hit: bool,
    /// Wall-clock time; `None` when the caller asked for reproducible output.
    pub wall_ms: Option<u64>,
}

impl SolverResult {
    /// Drops the timing so that output is byte-for-byte reproducible.
    pub fn without_timing(mut self) -> Self {
        self.wall_ms = None;
        self
    }
}
