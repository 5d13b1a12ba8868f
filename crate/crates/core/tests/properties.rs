// Oracles index distance matrices directly, mirroring the textbook recurrences.
#![allow(clippy::needless_range_loop)]

use bcast_core::extremal::{break_short_cycles, glue_stars, is_independent_transversal, repair_min_degree, sample_gnp};
use bcast_core::io::{parse_graph, serialize_graph, Format};
use bcast_core::metrics::{eccentricity, girth, is_connected, square_graph, DistanceMatrix, UNREACHABLE};
use bcast_core::solvers::{alpha_b_exact, max_independent_set, max_packing, validate_broadcast, Budget};
use bcast_core::{Broadcast, Graph};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn connected_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    graph_strategy(max_n).prop_filter("connected", is_connected)
}

/// Floyd–Warshall with `u32::MAX` for unreachable pairs.
fn floyd(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut d = vec![vec![UNREACHABLE; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for &v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for m in 0..n {
        for u in 0..n {
            for v in 0..n {
                if d[u][m] != UNREACHABLE && d[m][v] != UNREACHABLE {
                    d[u][v] = d[u][v].min(d[u][m] + d[m][v]);
                }
            }
        }
    }
    d
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
}

/// Exhaustive search over all value vectors with `f(x) <= ecc(x)`.
fn alpha_b_oracle(g: &Graph) -> u64 {
    let d = floyd(g);
    let ecc: Vec<u32> = d.iter().map(|row| *row.iter().max().unwrap()).collect();
    let n = g.n();
    let mut f = vec![0u32; n];
    let mut best = 0;
    loop {
        let ok = (0..n).all(|u| (u + 1..n).all(|v| f[u] == 0 || f[v] == 0 || d[u][v] > f[u].max(f[v])));
        if ok {
            best = best.max(f.iter().map(|&x| u64::from(x)).sum());
        }
        let mut i = 0;
        while i < n && f[i] == ecc[i] {
            f[i] = 0;
            i += 1;
        }
        if i == n {
            return best;
        }
        f[i] += 1;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn distances_match_floyd_and_satisfy_triangle_inequality(g in graph_strategy(10)) {
        let dm = DistanceMatrix::new(&g);
        let d = floyd(&g);
        let n = g.n();
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(dm.get(u, v), d[u][v]);
                prop_assert_eq!(dm.get(u, v), dm.get(v, u));
                for w in 0..n {
                    if d[u][w] != UNREACHABLE && d[w][v] != UNREACHABLE {
                        prop_assert!(dm.get(u, v) <= d[u][w] + d[w][v]);
                    }
                }
            }
        }
    }

    #[test]
    fn eccentricity_is_max_distance(g in connected_strategy(10)) {
        let d = floyd(&g);
        for v in 0..g.n() {
            prop_assert_eq!(eccentricity(&g, v).unwrap(), *d[v].iter().max().unwrap());
        }
    }

    #[test]
    fn square_graph_joins_pairs_at_distance_one_or_two(g in graph_strategy(10)) {
        let sq = square_graph(&g);
        let d = floyd(&g);
        for u in 0..g.n() {
            for v in 0..g.n() {
                prop_assert_eq!(sq.has_edge(u, v), u != v && (d[u][v] == 1 || d[u][v] == 2));
            }
        }
    }

    #[test]
    fn girth_matches_edge_deletion_oracle(g in graph_strategy(9)) {
        // Shortest cycle through edge uv has length dist_{G-uv}(u, v) + 1.
        let mut expected = None::<usize>;
        let edges: Vec<_> = g.edges().collect();
        for &(u, v) in &edges {
            let rest: Vec<_> = edges.iter().copied().filter(|&e| e != (u, v)).collect();
            let d = floyd(&Graph::from_edges(g.n(), &rest).unwrap());
            if d[u][v] != UNREACHABLE {
                let len = d[u][v] as usize + 1;
                expected = Some(expected.map_or(len, |e| e.min(len)));
            }
        }
        prop_assert_eq!(girth(&g), expected);
    }

    #[test]
    fn formats_round_trip(g in graph_strategy(70)) {
        for format in [Format::Graph6, Format::EdgeList] {
            let text = serialize_graph(&g, format);
            prop_assert_eq!(&parse_graph(&text, format).unwrap().graph, &g);
        }
    }

    #[test]
    fn alpha_and_rho_match_subset_enumeration(g in graph_strategy(10)) {
        let d = floyd(&g);
        let (mut alpha, mut rho) = (0, 0);
        for s in subsets(g.n()) {
            if g.is_independent(&s) {
                alpha = alpha.max(s.len());
            }
            if s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| d[u][v] >= 3)) {
                rho = rho.max(s.len());
            }
        }
        let budget = Budget::unlimited();
        prop_assert_eq!(max_independent_set(&g, &budget).unwrap().optimum, alpha as u64);
        prop_assert_eq!(max_packing(&g, &budget).unwrap().optimum, rho as u64);
    }

    #[test]
    fn alpha_b_matches_value_enumeration(g in connected_strategy(7)) {
        let r = alpha_b_exact(&g, &Budget::unlimited()).unwrap();
        prop_assert_eq!(r.optimum, alpha_b_oracle(&g));
        let f = r.witness.as_broadcast().unwrap();
        prop_assert!(validate_broadcast(&g, f).unwrap().is_empty());
    }

    #[test]
    fn validation_matches_definition(g in connected_strategy(8), raw in proptest::collection::vec(0u32..4, 8)) {
        let f = Broadcast::new(raw[..g.n()].to_vec());
        let d = floyd(&g);
        let n = g.n();
        let b1 = (0..n).all(|x| f.get(x) <= *d[x].iter().max().unwrap());
        let b2 = (0..n).all(|u| (u + 1..n).all(|v| f.get(u) == 0 || f.get(v) == 0 || d[u][v] > f.get(u).max(f.get(v))));
        prop_assert_eq!(validate_broadcast(&g, &f).unwrap().is_empty(), b1 && b2);
    }

    #[test]
    fn star_system_invariants(n in 2usize..25, k in 1usize..6, p in 0.0f64..1.0, seed in any::<u64>()) {
        let host = sample_gnp(n, p, seed).unwrap();
        let s = glue_stars(&host, k, seed).unwrap();
        let g = s.glued();
        prop_assert_eq!(g.n(), n * (k + 1));
        prop_assert_eq!(g.edge_count(), n * k + host.edge_count() - s.collisions().len());
        prop_assert_eq!(s.ports().len(), host.edge_count());
        for i in 0..n {
            prop_assert_eq!(g.degree(s.center(i)), k);
        }
        let f = break_short_cycles(&host, k);
        let keep: Vec<usize> = (0..n).filter(|v| !f.contains(v)).collect();
        prop_assert!(girth(&host.induced(&keep)).is_none_or(|gi| gi >= k));
        let repair = repair_min_degree(&s, &keep);
        let xs: Vec<usize> = repair.steps.iter().map(|st| st.leaf).collect();
        prop_assert!(is_independent_transversal(&s, &xs));
        let removed: usize = repair.steps.iter().map(|st| 1 + st.neighbors.len()).sum();
        prop_assert_eq!(repair.survivors.len() + removed, keep.len());
        prop_assert!(repair.steps.iter().all(|st| st.neighbors.len() < k.max(1)));
    }
}
