//! Broadcast independence number: exhaustive oracle and branch and bound.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::DistanceMatrix;

use super::{check_broadcast, max_independent_set, Broadcast, Budget, Parameter, SolverResult, Witness};

/// Largest graph the exhaustive oracle accepts by default.
pub const DEFAULT_BRUTEFORCE_CAP: usize = 10;

const POLL_EVERY: u64 = 512;

fn connected_distances(g: &Graph) -> Result<(DistanceMatrix, Vec<u32>)> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let dm = DistanceMatrix::new(g);
    let ecc = dm.eccentricities()?;
    Ok((dm, ecc))
}

/// α_b by enumerating every `f` with `0 <= f(x) <= ecc(x)` in lexicographic
/// order and keeping the first of maximum weight that passes the full
/// broadcast check. Partial assignments that already break the distance
/// condition are skipped, which removes only invalid functions.
pub fn alpha_b_bruteforce(g: &Graph, cap: usize) -> Result<SolverResult> {
    if g.n() > cap {
        return Err(Error::CapExceeded { n: g.n(), cap });
    }
    let (dm, ecc) = connected_distances(g)?;
    let n = g.n();
    let mut values = vec![0u32; n];
    let mut best = values.clone();
    let mut best_weight = 0u64;
    let mut nodes = 0u64;

    #[allow(clippy::too_many_arguments)]
    fn rec(
        x: usize,
        weight: u64,
        values: &mut Vec<u32>,
        dm: &DistanceMatrix,
        ecc: &[u32],
        best: &mut Vec<u32>,
        best_weight: &mut u64,
        nodes: &mut u64,
    ) {
        *nodes += 1;
        let n = values.len();
        if x == n {
            if weight > *best_weight && check_broadcast(dm, ecc, values).is_empty() {
                *best_weight = weight;
                best.copy_from_slice(values);
            }
            return;
        }
        for v in 0..=ecc[x] {
            let clash = v > 0 && (0..x).any(|y| values[y] > 0 && dm.get(x, y) <= v.max(values[y]));
            if clash {
                continue;
            }
            values[x] = v;
            rec(x + 1, weight + u64::from(v), values, dm, ecc, best, best_weight, nodes);
        }
        values[x] = 0;
    }

    let start = std::time::Instant::now();
    rec(0, 0, &mut values, &dm, &ecc, &mut best, &mut best_weight, &mut nodes);
    Ok(SolverResult {
        parameter: Parameter::AlphaB,
        optimum: best_weight,
        witness: Witness::Broadcast(Broadcast::new(best)),
        nodes_explored: nodes,
        time_budget_hit: false,
        wall_ms: Some(start.elapsed().as_millis() as u64),
    })
}

enum Goal {
    /// Find a strictly heavier broadcast than the incumbent.
    Improve,
    /// Find any broadcast of at least this weight.
    Reach(u64),
}

struct Search<'a> {
    g: &'a Graph,
    dm: &'a DistanceMatrix,
    ecc: &'a [u32],
    order: Vec<usize>,
    fixed: Vec<Option<u32>>,
    values: Vec<u32>,
    /// `caps[d][y]`: largest value `y` may still take at depth `d`.
    caps: Vec<Vec<u32>>,
    goal: Goal,
    best_weight: u64,
    best: Option<Vec<u32>>,
    stamp: Vec<u32>,
    stamp_gen: u32,
    budget: &'a Budget,
    nodes: u64,
    hit: bool,
    done: bool,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, dm: &'a DistanceMatrix, ecc: &'a [u32], budget: &'a Budget) -> Self {
        let n = g.n();
        Search {
            g,
            dm,
            ecc,
            order: Vec::new(),
            fixed: vec![None; n],
            values: vec![0; n],
            caps: vec![ecc.to_vec(); n + 1],
            goal: Goal::Improve,
            best_weight: 0,
            best: None,
            stamp: vec![0; n],
            stamp_gen: 0,
            budget,
            nodes: 0,
            hit: false,
            done: false,
        }
    }

    /// Fixed vertices first (ascending), then descending eccentricity, then ascending index.
    fn set_order(&mut self) {
        let n = self.g.n();
        let mut free: Vec<usize> = (0..n).filter(|&v| self.fixed[v].is_none()).collect();
        free.sort_by_key(|&v| (std::cmp::Reverse(self.ecc[v]), v));
        self.order = (0..n).filter(|&v| self.fixed[v].is_some()).chain(free).collect();
    }

    fn run(&mut self) {
        self.done = false;
        self.caps[0].copy_from_slice(self.ecc);
        self.values.fill(0);
        self.dfs(0, 0);
    }

    /// Upper bound on the weight still obtainable from positions `depth..`.
    ///
    /// Vertices are grouped greedily into a vertex plus some of its free
    /// neighbors; any two members are within distance 2, so a group holds one
    /// broadcaster of value at least 2, or value-1 broadcasters forming an
    /// independent set (the center alone or a subset of the rest).
    fn bound(&mut self, depth: usize) -> u64 {
        self.stamp_gen += 1;
        let gen = self.stamp_gen;
        let caps = &self.caps[depth];
        let cap_of = |v: usize, fixed: &[Option<u32>]| fixed[v].map_or(caps[v], |f| f.min(caps[v]));
        for &v in &self.order[depth..] {
            self.stamp[v] = gen;
        }
        let mut plain = 0u64;
        let mut grouped = 0u64;
        for &v in &self.order[depth..] {
            let cv = cap_of(v, &self.fixed);
            plain += u64::from(cv);
            if self.stamp[v] != gen || cv == 0 {
                continue;
            }
            self.stamp[v] = 0;
            let mut max_cap = cv;
            let mut others = 0u32;
            for &w in self.g.neighbors(v) {
                if self.stamp[w] == gen {
                    let cw = cap_of(w, &self.fixed);
                    if cw > 0 {
                        self.stamp[w] = 0;
                        max_cap = max_cap.max(cw);
                        others += 1;
                    }
                }
            }
            grouped += u64::from(max_cap.max(others));
        }
        plain.min(grouped)
    }

    fn dfs(&mut self, depth: usize, weight: u64) {
        if self.done || self.hit {
            return;
        }
        self.nodes += 1;
        if self.nodes % POLL_EVERY == 1 && self.budget.expired() {
            self.hit = true;
            return;
        }
        let n = self.g.n();
        if depth == n {
            match self.goal {
                Goal::Improve if weight > self.best_weight || self.best.is_none() => {
                    self.best_weight = weight;
                    self.best = Some(self.values.clone());
                }
                Goal::Reach(t) if weight >= t => {
                    self.best_weight = weight;
                    self.best = Some(self.values.clone());
                    self.done = true;
                }
                _ => {}
            }
            return;
        }
        let ub = weight + self.bound(depth);
        let prune = match self.goal {
            Goal::Improve => self.best.is_some() && ub <= self.best_weight,
            Goal::Reach(t) => ub < t,
        };
        if prune {
            return;
        }

        let x = self.order[depth];
        let cap = self.caps[depth][x];
        let choices: Vec<u32> = match self.fixed[x] {
            Some(v) if v <= cap => vec![v],
            Some(_) => return,
            None => (1..=cap).rev().chain(std::iter::once(0)).collect(),
        };
        for v in choices {
            self.values[x] = v;
            let (head, tail) = self.caps.split_at_mut(depth + 1);
            let (cur, next) = (&head[depth], &mut tail[0]);
            next.copy_from_slice(cur);
            if v > 0 {
                for &y in &self.order[depth + 1..] {
                    let d = self.dm.get(x, y);
                    next[y] = if d <= v { 0 } else { next[y].min(d - 1) };
                }
            }
            self.dfs(depth + 1, weight + u64::from(v));
            if self.done || self.hit {
                break;
            }
        }
        self.values[x] = 0;
    }
}

/// α_b by branch and bound with propagated value caps.
///
/// Assigning `f(x) = v > 0` forces `f(y) = 0` for every `y` within distance
/// `v` and caps every other `y` at `dist(x, y) - 1`. The optimal broadcast
/// returned is the lexicographically smallest one, obtained by fixing values
/// in index order with feasibility searches once the optimum is known.
pub fn alpha_b_exact(g: &Graph, budget: &Budget) -> Result<SolverResult> {
    let (dm, ecc) = connected_distances(g)?;
    let n = g.n();

    let mut search = Search::new(g, &dm, &ecc, budget);
    // Incumbent: one peripheral vertex broadcasting at its eccentricity.
    let peripheral = (0..n).max_by_key(|&v| (ecc[v], std::cmp::Reverse(v))).expect("nonempty graph");
    let mut seed = vec![0; n];
    seed[peripheral] = ecc[peripheral];
    search.best_weight = u64::from(ecc[peripheral]);
    search.best = Some(seed);
    search.set_order();
    search.run();

    let optimum = search.best_weight;
    let mut witness = search.best.take().expect("incumbent always present");
    let hit = search.hit;

    if !hit {
        search.goal = Goal::Reach(optimum);
        for i in 0..n {
            for v in 0..witness[i] {
                search.fixed[i] = Some(v);
                search.set_order();
                search.best = None;
                search.run();
                if search.hit {
                    break;
                }
                if let Some(found) = search.best.take() {
                    witness = found;
                    break;
                }
            }
            if search.hit {
                break;
            }
            search.fixed[i] = Some(witness[i]);
        }
    }

    assert!(check_broadcast(&dm, &ecc, &witness).is_empty(), "solver produced an invalid broadcast");
    let witness = Broadcast::new(witness);
    assert_eq!(witness.weight(), optimum);
    Ok(SolverResult {
        parameter: Parameter::AlphaB,
        optimum,
        witness: Witness::Broadcast(witness),
        nodes_explored: search.nodes,
        time_budget_hit: hit,
        wall_ms: Some(budget.elapsed_ms()),
    })
}

/// The heavier of two always-valid broadcasts: value 1 on a maximum
/// independent set, or the eccentricity on one peripheral vertex.
/// Ties go to the independent-set broadcast.
pub fn diametral_broadcast(g: &Graph, budget: &Budget) -> Result<Broadcast> {
    let (dm, ecc) = connected_distances(g)?;
    let n = g.n();
    let mis = max_independent_set(g, budget)?;
    let diam = ecc.iter().copied().max().unwrap_or(0);
    let f = if u64::from(diam) > mis.optimum {
        let peripheral = (0..n).find(|&v| ecc[v] == diam).expect("some vertex attains the diameter");
        let mut values = vec![0; n];
        values[peripheral] = diam;
        values
    } else {
        let mut values = vec![0; n];
        for &v in mis.witness.as_set().expect("set witness") {
            values[v] = 1;
        }
        values
    };
    debug_assert!(check_broadcast(&dm, &ecc, &f).is_empty());
    Ok(Broadcast::new(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::solvers::validate_broadcast;

    fn brute(g: &Graph) -> SolverResult {
        alpha_b_bruteforce(g, DEFAULT_BRUTEFORCE_CAP).unwrap()
    }

    fn exact(g: &Graph) -> SolverResult {
        alpha_b_exact(g, &Budget::unlimited()).unwrap()
    }

    #[test]
    fn bruteforce_examples() {
        let p4 = brute(&path(4));
        assert_eq!(p4.optimum, 4);
        assert_eq!(p4.witness, Witness::Broadcast(Broadcast::new(vec![2, 0, 0, 2])));
        assert_eq!(brute(&cycle(4)).optimum, 2);
        let k13 = brute(&star(3));
        assert_eq!(k13.optimum, 3);
        assert_eq!(k13.witness, Witness::Broadcast(Broadcast::new(vec![0, 1, 1, 1])));
        assert_eq!(brute(&cycle(6)).optimum, 4);
        assert_eq!(brute(&petersen()).optimum, 4);
    }

    #[test]
    fn bruteforce_cap_and_connectivity() {
        assert_eq!(alpha_b_bruteforce(&path(11), 10), Err(Error::CapExceeded { n: 11, cap: 10 }));
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(alpha_b_bruteforce(&g, 10), Err(Error::Disconnected));
        assert_eq!(alpha_b_exact(&g, &Budget::unlimited()), Err(Error::Disconnected));
    }

    #[test]
    fn exact_examples() {
        let c6 = exact(&cycle(6));
        assert_eq!(c6.optimum, 4);
        assert_eq!(c6.witness, Witness::Broadcast(Broadcast::new(vec![0, 0, 2, 0, 0, 2])));
        assert_eq!(exact(&petersen()).optimum, 4);
        assert_eq!(exact(&path(4)).optimum, 4);
        assert_eq!(exact(&Graph::empty(1)).optimum, 0);
        assert_eq!(exact(&path(2)).optimum, 1);
    }

    #[test]
    fn exact_matches_bruteforce_witness() {
        for g in [path(7), cycle(7), cycle(8), star(5), complete(4), complete_bipartite(2, 4), petersen()] {
            let (e, b) = (exact(&g), brute(&g));
            assert_eq!((e.optimum, &e.witness), (b.optimum, &b.witness), "{g:?}");
        }
    }

    #[test]
    fn diametral_examples() {
        let budget = Budget::unlimited();
        let p4 = diametral_broadcast(&path(4), &budget).unwrap();
        assert!(p4.weight() >= 3);
        assert_eq!(diametral_broadcast(&complete(4), &budget).unwrap().weight(), 1);
        let c6 = diametral_broadcast(&cycle(6), &budget).unwrap();
        assert!(c6.weight() >= 3);
        for g in [path(4), cycle(6), petersen(), heawood()] {
            let f = diametral_broadcast(&g, &budget).unwrap();
            assert_eq!(validate_broadcast(&g, &f), Ok(vec![]));
        }
    }

    #[test]
    fn heawood_respects_strict_bound() {
        let r = exact(&heawood());
        assert!(r.optimum < 14);
        assert!(r.optimum >= 7);
    }
}
