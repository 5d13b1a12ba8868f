//! Distances, eccentricities, girth, connectivity and the square graph.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Distance sentinel for vertices in a different component.
pub const UNREACHABLE: u32 = u32::MAX;

/// Edge-distances from one source vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: usize,
    pub dist: Vec<u32>,
}

impl DistanceRow {
    pub fn get(&self, v: usize) -> Option<u32> {
        let d = self.dist[v];
        (d != UNREACHABLE).then_some(d)
    }

    /// Largest finite distance, or `None` if some vertex is unreachable.
    pub fn max_finite(&self) -> Option<u32> {
        self.dist.iter().try_fold(0, |m, &d| (d != UNREACHABLE).then_some(m.max(d)))
    }
}

pub fn bfs_distances(g: &Graph, source: usize) -> Result<DistanceRow> {
    g.check_vertex(source)?;
    Ok(DistanceRow { source, dist: bfs_raw(g, source) })
}

fn bfs_raw(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// All-pairs distances, row-major. Built once per solve so distance lookups are O(1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut data = Vec::with_capacity(n * n);
        for s in 0..n {
            data.extend(bfs_raw(g, s));
        }
        DistanceMatrix { n, data }
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.row(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Eccentricities of every vertex; requires a connected graph.
    pub fn eccentricities(&self) -> Result<Vec<u32>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok((0..self.n).map(|u| self.row(u).iter().copied().max().unwrap_or(0)).collect())
    }
}

/// Eccentricity of `v` in a connected graph.
pub fn eccentricity(g: &Graph, v: usize) -> Result<u32> {
    let row = bfs_distances(g, v)?;
    row.max_finite().ok_or(Error::Disconnected)
}

pub fn diameter(g: &Graph) -> Result<u32> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let ecc = DistanceMatrix::new(g).eccentricities()?;
    Ok(ecc.into_iter().max().unwrap_or(0))
}

pub fn min_degree(g: &Graph) -> Result<usize> {
    (0..g.n()).map(|v| g.degree(v)).min().ok_or(Error::EmptyGraph)
}

/// Component id per vertex, numbered by smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    pub labels: Vec<usize>,
    pub count: usize,
}

impl Components {
    /// Members of each component, ascending.
    pub fn groups(&self) -> Vec<Vec<usize>> {
        let mut groups = vec![Vec::new(); self.count];
        for (v, &c) in self.labels.iter().enumerate() {
            groups[c].push(v);
        }
        groups
    }
}

pub fn components(g: &Graph) -> Components {
    let mut labels = vec![usize::MAX; g.n()];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..g.n() {
        if labels[s] != usize::MAX {
            continue;
        }
        labels[s] = count;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if labels[w] == usize::MAX {
                    labels[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    Components { labels, count }
}

pub fn is_connected(g: &Graph) -> bool {
    components(g).count <= 1
}

/// A shortest cycle as a vertex sequence, or `None` for forests.
///
/// One BFS per root; a non-tree edge `uw` seen from root `r` closes a walk of
/// length `d(u) + d(w) + 1`. The globally minimal such walk is a simple cycle.
/// Ties go to the smallest root, then to BFS discovery order.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<(u32, usize, usize, usize)> = None;
    let mut dist = vec![UNREACHABLE; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if best.is_some_and(|b| b.0 == 3) {
            break;
        }
        if let Some(found) = bfs_cycle(g, root, best.map(|b| b.0), &mut dist, &mut parent, &mut queue) {
            best = Some(found);
        }
    }
    let (_, root, u, w) = best?;
    bfs_cycle(g, root, None, &mut dist, &mut parent, &mut queue);
    let climb = |mut v: usize| {
        let mut path = vec![v];
        while v != root {
            v = parent[v];
            path.push(v);
        }
        path
    };
    let left = climb(u);
    let mut right = climb(w);
    right.pop();
    let mut cycle = left;
    cycle.extend(right.into_iter().rev());
    Some(cycle)
}

/// BFS from `root` returning the shortest closing walk strictly shorter than `limit`.
fn bfs_cycle(
    g: &Graph,
    root: usize,
    limit: Option<u32>,
    dist: &mut [u32],
    parent: &mut [usize],
    queue: &mut VecDeque<usize>,
) -> Option<(u32, usize, usize, usize)> {
    dist.fill(UNREACHABLE);
    parent.fill(usize::MAX);
    queue.clear();
    dist[root] = 0;
    queue.push_back(root);
    let mut best: Option<(u32, usize, usize, usize)> = None;
    let bound = |best: &Option<(u32, usize, usize, usize)>| best.map(|b| b.0).or(limit);
    while let Some(u) = queue.pop_front() {
        if bound(&best).is_some_and(|b| 2 * dist[u] + 1 >= b) {
            break;
        }
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            } else if w != parent[u] && dist[w] >= dist[u] {
                let len = dist[u] + dist[w] + 1;
                if bound(&best).is_none_or(|b| len < b) {
                    best = Some((len, root, u, w));
                }
            }
        }
    }
    best
}

/// Length of a shortest cycle; `None` means the graph is acyclic.
pub fn girth(g: &Graph) -> Option<usize> {
    shortest_cycle(g).map(|c| c.len())
}

/// Same vertex set, with `uv` an edge iff `1 <= dist(u, v) <= 2`.
pub fn square_graph(g: &Graph) -> Graph {
    let mut edges = Vec::new();
    for u in 0..g.n() {
        let mut near: Vec<usize> = g.neighbors(u).to_vec();
        for &w in g.neighbors(u) {
            near.extend_from_slice(g.neighbors(w));
        }
        near.sort_unstable();
        near.dedup();
        edges.extend(near.into_iter().filter(|&v| v > u).map(|v| (u, v)));
    }
    Graph::from_edges(g.n(), &edges).expect("square graph edges are simple and deduplicated")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn bfs_examples() {
        assert_eq!(bfs_distances(&path(3), 0).unwrap().dist, vec![0, 1, 2]);
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let row = bfs_distances(&g, 0).unwrap();
        assert_eq!(row.dist, vec![0, 1, UNREACHABLE]);
        assert_eq!(row.get(2), None);
        assert_eq!(bfs_distances(&cycle(6), 0).unwrap().dist, vec![0, 1, 2, 3, 2, 1]);
        assert_eq!(bfs_distances(&path(3), 3), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
    }

    #[test]
    fn eccentricity_examples() {
        assert_eq!(eccentricity(&star(3), 0), Ok(1));
        assert_eq!(eccentricity(&star(3), 1), Ok(2));
        assert_eq!(eccentricity(&path(4), 0), Ok(3));
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(eccentricity(&g, 0), Err(Error::Disconnected));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&cycle(5)), Some(5));
        assert_eq!(girth(&path(4)), None);
        assert_eq!(girth(&petersen()), Some(5));
        assert_eq!(girth(&heawood()), Some(6));
        assert_eq!(girth(&pappus()), Some(6));
        assert_eq!(girth(&mcgee()), Some(7));
        assert_eq!(girth(&complete(4)), Some(3));
        assert_eq!(girth(&complete_bipartite(3, 3)), Some(4));
    }

    #[test]
    fn shortest_cycle_is_a_cycle() {
        for g in [petersen(), heawood(), mcgee(), cycle(7), complete_bipartite(2, 3)] {
            let c = shortest_cycle(&g).unwrap();
            let mut sorted = c.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), c.len());
            for i in 0..c.len() {
                assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
            }
        }
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(min_degree(&complete(4)), Ok(3));
        assert_eq!(min_degree(&path(4)), Ok(1));
        assert_eq!(min_degree(&petersen()), Ok(3));
        assert_eq!(min_degree(&Graph::empty(0)), Err(Error::EmptyGraph));
    }

    #[test]
    fn connectivity_examples() {
        assert!(is_connected(&path(4)));
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let comps = components(&two_k2);
        assert!(!is_connected(&two_k2));
        assert_eq!(comps.labels, vec![0, 0, 1, 1]);
        assert!(is_connected(&Graph::empty(1)));
    }

    #[test]
    fn square_examples() {
        assert_eq!(square_graph(&path(3)), complete(3));
        assert_eq!(square_graph(&complete(3)), complete(3));
        let sq = square_graph(&path(5));
        let expected: Vec<_> =
            (0..5usize).flat_map(|u| (u + 1..5).filter(move |v| v - u <= 2).map(move |v| (u, v))).collect();
        assert_eq!(sq.edges().collect::<Vec<_>>(), expected);
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(diameter(&petersen()), Ok(2));
        assert_eq!(diameter(&heawood()), Ok(3));
        assert_eq!(diameter(&path(5)), Ok(4));
    }
}
