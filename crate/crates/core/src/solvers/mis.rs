//! Maximum independent set by bitset branch and bound.
//!
//! Each node applies the simplicial reductions (degree 0, degree 1, degree 2
//! with adjacent neighbors), splits into connected components, bounds with a
//! greedy clique cover, and branches on a maximum-degree vertex. After the
//! optimum is known a second pass of decision queries picks the
//! lexicographically smallest optimal set.

use crate::bitset::Bits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{square_graph, DistanceMatrix};

use super::{Budget, Parameter, SolverResult, Witness};

const POLL_EVERY: u64 = 256;

struct Search<'a> {
    adj: Vec<Bits>,
    budget: &'a Budget,
    nodes: u64,
    hit: bool,
}

impl<'a> Search<'a> {
    fn new(g: &Graph, budget: &'a Budget) -> Self {
        let adj = (0..g.n())
            .map(|v| {
                let mut b = Bits::new(g.n());
                for &w in g.neighbors(v) {
                    b.insert(w);
                }
                b
            })
            .collect();
        Search { adj, budget, nodes: 0, hit: false }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if !self.hit && self.nodes % POLL_EVERY == 1 && self.budget.expired() {
            self.hit = true;
        }
        self.hit
    }

    /// Greedy clique cover of `cand`; its size bounds α(G[cand]).
    fn clique_cover(&self, cand: &Bits) -> usize {
        let mut rest = cand.clone();
        let mut count = 0;
        while let Some(v) = rest.first() {
            rest.remove(v);
            let mut common = rest.intersection(&self.adj[v]);
            while let Some(w) = common.first() {
                rest.remove(w);
                common.remove(w);
                common.intersect_with(&self.adj[w]);
            }
            count += 1;
        }
        count
    }

    fn take(&self, cand: &mut Bits, v: usize) {
        cand.remove(v);
        cand.difference_with(&self.adj[v]);
    }

    /// Vertices forced by the simplicial rules; removes their closed neighborhoods.
    fn reduce(&self, cand: &mut Bits) -> Vec<usize> {
        let mut forced = Vec::new();
        loop {
            let pick = cand.iter().find(|&v| {
                let nb = self.adj[v].intersection(cand);
                match nb.len() {
                    0 | 1 => true,
                    2 => {
                        let mut it = nb.iter();
                        let (a, b) = (it.next().unwrap(), it.next().unwrap());
                        self.adj[a].contains(b)
                    }
                    _ => false,
                }
            });
            match pick {
                Some(v) => {
                    forced.push(v);
                    self.take(cand, v);
                }
                None => return forced,
            }
        }
    }

    fn split(&self, cand: &Bits) -> Vec<Bits> {
        let n = self.adj.len();
        let mut rest = cand.clone();
        let mut parts = Vec::new();
        while let Some(s) = rest.first() {
            let mut comp = Bits::new(n);
            let mut stack = vec![s];
            comp.insert(s);
            rest.remove(s);
            while let Some(u) = stack.pop() {
                let fresh = self.adj[u].intersection(&rest);
                for w in fresh.iter() {
                    rest.remove(w);
                    comp.insert(w);
                    stack.push(w);
                }
            }
            parts.push(comp);
        }
        parts
    }

    /// A maximum independent set of `G[cand]` if its size exceeds `floor`,
    /// otherwise `None`. Once the budget is hit the answer is best-effort.
    fn solve(&mut self, mut cand: Bits, floor: isize) -> Option<Vec<usize>> {
        if self.tick() {
            return None;
        }
        let forced = self.reduce(&mut cand);
        let floor = floor - forced.len() as isize;
        if cand.is_empty() {
            return (0 > floor).then_some(forced);
        }
        if (self.clique_cover(&cand) as isize) <= floor {
            return None;
        }

        let parts = self.split(&cand);
        if parts.len() > 1 {
            let bounds: Vec<isize> = parts.iter().map(|p| self.clique_cover(p) as isize).collect();
            let mut total = forced;
            let mut found = 0isize;
            for (i, part) in parts.into_iter().enumerate() {
                let rest: isize = bounds[i + 1..].iter().sum();
                let need = (floor - found - rest).max(-1);
                let s = self.solve(part, need)?;
                found += s.len() as isize;
                total.extend(s);
            }
            return (found > floor).then_some(total);
        }

        let pivot = cand
            .iter()
            .max_by_key(|&v| (self.adj[v].intersection_len(&cand), std::cmp::Reverse(v)))
            .expect("nonempty candidate set");
        let mut floor = floor;
        let mut best = None;

        let mut with = cand.clone();
        self.take(&mut with, pivot);
        if let Some(mut s) = self.solve(with, floor - 1) {
            s.push(pivot);
            floor = s.len() as isize;
            best = Some(s);
        }
        let mut without = cand;
        without.remove(pivot);
        if let Some(s) = self.solve(without, floor) {
            best = Some(s);
        }
        best.map(|mut s| {
            s.extend(forced);
            s
        })
    }

    fn greedy(&self, n: usize) -> Vec<usize> {
        let mut cand = Bits::full(n);
        let mut out = Vec::new();
        while !cand.is_empty() {
            let v = cand.iter().min_by_key(|&v| (self.adj[v].intersection_len(&cand), v)).expect("nonempty");
            out.push(v);
            self.take(&mut cand, v);
        }
        out
    }

    /// Lexicographically smallest independent set of size `target`, built by
    /// deciding each vertex in index order with a feasibility query.
    fn lex_smallest(&mut self, n: usize, target: usize) -> Option<Vec<usize>> {
        let mut chosen = Vec::with_capacity(target);
        let mut cand = Bits::full(n);
        for v in 0..n {
            if chosen.len() == target {
                break;
            }
            if !cand.contains(v) {
                continue;
            }
            cand.remove(v);
            let mut rest = cand.clone();
            rest.difference_with(&self.adj[v]);
            let need = (target - chosen.len() - 1) as isize;
            if need == 0 || self.solve(rest.clone(), need - 1).is_some() {
                chosen.push(v);
                cand = rest;
            }
            if self.hit {
                return None;
            }
        }
        (chosen.len() == target).then_some(chosen)
    }
}

/// Low-level entry point: maximum independent set with node count and budget flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependentSetSearch {
    pub set: Vec<usize>,
    pub nodes: u64,
    pub budget_hit: bool,
}

pub fn independent_set_search(g: &Graph, budget: &Budget) -> IndependentSetSearch {
    let n = g.n();
    let mut search = Search::new(g, budget);
    let greedy = search.greedy(n);
    let mut best = search.solve(Bits::full(n), greedy.len() as isize).unwrap_or(greedy);
    if !search.hit {
        if let Some(lex) = search.lex_smallest(n, best.len()) {
            best = lex;
        }
    }
    best.sort_unstable();
    debug_assert!(g.is_independent(&best));
    IndependentSetSearch { set: best, nodes: search.nodes, budget_hit: search.hit }
}

/// Independence number with a lexicographically smallest maximum independent set.
pub fn max_independent_set(g: &Graph, budget: &Budget) -> Result<SolverResult> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let found = independent_set_search(g, budget);
    assert!(g.is_independent(&found.set), "solver produced a dependent set");
    Ok(SolverResult {
        parameter: Parameter::Alpha,
        optimum: found.set.len() as u64,
        witness: Witness::Set(found.set),
        nodes_explored: found.nodes,
        time_budget_hit: found.budget_hit,
        wall_ms: Some(budget.elapsed_ms()),
    })
}

/// Packing number, solved as the independence number of the square graph and
/// re-checked against distances in `g`.
pub fn max_packing(g: &Graph, budget: &Budget) -> Result<SolverResult> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let found = independent_set_search(&square_graph(g), budget);
    let dm = DistanceMatrix::new(g);
    for (i, &u) in found.set.iter().enumerate() {
        for &v in &found.set[i + 1..] {
            assert!(dm.get(u, v) >= 3, "packing witness has dist({u},{v}) < 3");
        }
    }
    Ok(SolverResult {
        parameter: Parameter::Rho,
        optimum: found.set.len() as u64,
        witness: Witness::Set(found.set),
        nodes_explored: found.nodes,
        time_budget_hit: found.budget_hit,
        wall_ms: Some(budget.elapsed_ms()),
    })
}
