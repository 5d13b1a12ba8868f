//! Simple undirected graphs on dense vertex indices `0..n`.

use crate::error::{Error, Result};

/// A finite simple undirected graph.
///
/// Vertices are `0..n`. Neighbor lists are sorted ascending and symmetric, with
/// no self-loops or repeated entries. The graph is immutable once built; every
/// "smallest neighbor" tie-break downstream relies on the sorted order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph { n, adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list, rejecting self-loops, out-of-range
    /// endpoints and repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let (g, dups) = Self::from_edges_collapsing(n, edges)?;
        match dups.first() {
            Some(&(u, v)) => Err(Error::DuplicateEdge(u, v)),
            None => Ok(g),
        }
    }

    /// Like [`Graph::from_edges`] but collapses repeated edges, returning the
    /// collapsed pairs (normalized `u < v`) alongside the graph.
    pub fn from_edges_collapsing(n: usize, edges: &[(usize, usize)]) -> Result<(Self, Vec<(usize, usize)>)> {
        let mut pairs = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            pairs.push((u.min(v), u.max(v)));
        }
        pairs.sort_unstable();
        let mut dups: Vec<(usize, usize)> = pairs.windows(2).filter(|w| w[0] == w[1]).map(|w| w[0]).collect();
        dups.dedup();
        pairs.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &pairs {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok((Graph { n, adj }, dups))
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// True iff no two vertices of `set` are adjacent.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Induced subgraph on `keep` (any order); vertex `keep[i]` becomes `i`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> =
                    self.adj[v].iter().filter_map(|&w| (index[w] != usize::MAX).then_some(index[w])).collect();
                list.sort_unstable();
                list
            })
            .collect();
        Graph { n: keep.len(), adj }
    }
}

/// Standard small graphs used throughout the tests, the CLI and the bindings.
pub mod families {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path edges are simple")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle edges are simple")
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(n, &edges).expect("complete graph edges are simple")
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("star edges are simple")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Graph::from_edges(a + b, &edges).expect("bipartite edges are simple")
    }

    /// Hamiltonian cubic graph from LCF notation: a cycle `0..n` plus chords
    /// `i -- i + shifts[i % len]`.
    pub fn lcf(n: usize, shifts: &[i64]) -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        for i in 0..n {
            let j = (i as i64 + shifts[i % shifts.len()]).rem_euclid(n as i64) as usize;
            edges.push((i.min(j), i.max(j)));
        }
        let (g, _) = Graph::from_edges_collapsing(n, &edges).expect("LCF edges are in range");
        g
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("Petersen edges are simple")
    }

    /// Heawood graph: cubic, 14 vertices, girth 6.
    pub fn heawood() -> Graph {
        lcf(14, &[5, -5])
    }

    /// Pappus graph: cubic, 18 vertices, girth 6.
    pub fn pappus() -> Graph {
        lcf(18, &[5, 7, -7, 7, -7, -5])
    }

    /// McGee graph: cubic, 24 vertices, girth 7.
    pub fn mcgee() -> Graph {
        lcf(24, &[12, 7, -7])
    }

    /// Hexagonal tiling of a torus in brick-wall form: vertex `(i, j)` is
    /// `i * cols + j`, rows and columns wrap, and the vertical edge below
    /// `(i, j)` exists when `i + j` is even. Cubic for even `rows, cols >= 2`;
    /// girth 6 once both are at least 6, with diameter growing linearly.
    pub fn honeycomb_torus(rows: usize, cols: usize) -> Graph {
        let id = |i: usize, j: usize| (i % rows) * cols + j % cols;
        let mut edges = Vec::new();
        for i in 0..rows {
            for j in 0..cols {
                edges.push((id(i, j), id(i, j + 1)));
                if (i + j) % 2 == 0 {
                    edges.push((id(i, j), id(i + 1, j)));
                }
            }
        }
        Graph::from_edges_collapsing(rows * cols, &edges).expect("in range").0
    }

    /// Parse a family name such as `petersen`, `heawood`, `p5`, `c6`, `k4`,
    /// `star3`, `k3,3` or `honeycomb8x40`.
    pub fn by_name(name: &str) -> Option<Graph> {
        let name = name.trim().to_ascii_lowercase();
        match name.as_str() {
            "petersen" => return Some(petersen()),
            "heawood" => return Some(heawood()),
            "pappus" => return Some(pappus()),
            "mcgee" => return Some(mcgee()),
            _ => {}
        }
        if let Some((r, c)) = name.strip_prefix("honeycomb").and_then(|r| r.split_once('x')) {
            return Some(honeycomb_torus(r.parse().ok()?, c.parse().ok()?));
        }
        if let Some(rest) = name.strip_prefix("star") {
            return rest.parse().ok().map(star);
        }
        if let Some((a, b)) = name.strip_prefix('k').and_then(|r| r.split_once(',')) {
            return Some(complete_bipartite(a.parse().ok()?, b.parse().ok()?));
        }
        let (head, rest) = name.split_at(1.min(name.len()));
        let size: usize = rest.parse().ok()?;
        match head {
            "p" if size >= 1 => Some(path(size)),
            "c" if size >= 3 => Some(cycle(size)),
            "k" if size >= 1 => Some(complete(size)),
            _ => None,
        }
    }
}
