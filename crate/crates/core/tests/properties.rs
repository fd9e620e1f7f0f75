//! Property-based invariants over randomly generated graphs.

mod common;

use megset::{
    add_universal_vertex, build_replicated_gadget, coverage_map, exact_meg, exact_vertex_cover,
    excluded_vertices, is_monitored, is_vertex_cover, meg_apx, meg_check, meg_from_vc,
    monitored_edges, monitored_edges_by_counting, prune_meg_set, vc_from_meg, Graph, INFINITY,
};
use proptest::prelude::*;

/// Random connected graph: random spanning tree plus extra edges.
fn connected_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            proptest::collection::vec(any::<prop::sample::Index>(), n - 1),
            proptest::collection::vec(proptest::bool::weighted(0.3), pairs),
        )
            .prop_map(move |(parents, extra)| {
                let mut edges = Vec::new();
                for v in 1..n {
                    edges.push((parents[v - 1].index(v), v));
                }
                let mut idx = 0;
                for u in 0..n {
                    for v in (u + 1)..n {
                        if extra[idx] {
                            edges.push((u, v));
                        }
                        idx += 1;
                    }
                }
                Graph::new(n, &edges).unwrap()
            })
    })
}

/// Arbitrary simple graph, possibly disconnected.
fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::weighted(0.4), pairs).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if mask[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn bfs_rows_are_consistent(g in connected_graph(2, 9)) {
        let rows: Vec<_> = (0..g.vertex_count()).map(|v| g.bfs_distances(v)).collect();
        for (s, row) in rows.iter().enumerate() {
            prop_assert_eq!(row.get(s), 0);
            for &(u, v) in g.edges() {
                prop_assert!(row.get(u).abs_diff(row.get(v)) <= 1);
            }
            for (t, back_row) in rows.iter().enumerate() {
                prop_assert!(row.get(t) < INFINITY);
                prop_assert_eq!(row.get(t), back_row.get(s));
            }
        }
    }

    #[test]
    fn edge_deletion_never_shortens(g in connected_graph(2, 8)) {
        for x in 0..g.vertex_count() {
            let row = g.bfs_distances(x);
            for y in 0..g.vertex_count() {
                for e in 0..g.edge_count() {
                    prop_assert!(g.distance_without_edge(x, y, e) >= row.get(y));
                }
            }
        }
    }

    #[test]
    fn diameter_matches_all_pairs_maximum(g in connected_graph(2, 9)) {
        let by_rows = (0..g.vertex_count())
            .map(|v| g.bfs_distances(v).dist.into_iter().max().unwrap())
            .max()
            .unwrap();
        prop_assert_eq!(g.diameter().unwrap(), by_rows);
    }

    #[test]
    fn counting_route_matches_removal_route(g in connected_graph(2, 8)) {
        for x in 0..g.vertex_count() {
            for y in (x + 1)..g.vertex_count() {
                prop_assert_eq!(
                    monitored_edges_by_counting(&g, x, y).unwrap(),
                    monitored_edges(&g, x, y).unwrap()
                );
            }
        }
    }

    #[test]
    fn endpoints_monitor_their_edge(g in connected_graph(2, 9)) {
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            prop_assert!(is_monitored(&g, u, v, e).unwrap());
        }
    }

    #[test]
    fn full_vertex_set_is_always_feasible(g in connected_graph(2, 9)) {
        let all: Vec<usize> = (0..g.vertex_count()).collect();
        prop_assert!(meg_check(&g, &all, g.vertex_count()).unwrap());
    }

    #[test]
    fn coverage_restricts_to_subsets(g in connected_graph(4, 8)) {
        let all: Vec<usize> = (0..g.vertex_count()).collect();
        let sub: Vec<usize> = all.iter().copied().step_by(2).collect();
        prop_assume!(sub.len() >= 2);
        let full = coverage_map(&g, &all).unwrap();
        let restricted = coverage_map(&g, &sub).unwrap();
        for ((x, y), set) in restricted.iter() {
            prop_assert_eq!(full.get(x, y), Some(set));
        }
        for ((x, y), set) in full.iter() {
            if sub.contains(&x) && sub.contains(&y) {
                prop_assert_eq!(restricted.get(x, y), Some(set));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn greedy_solution_is_certified_and_bounded(g in connected_graph(2, 9)) {
        let report = meg_apx(&g).unwrap();
        prop_assert!(report.certified);
        prop_assert!(meg_check(&g, &report.solution, g.vertex_count()).unwrap());
        prop_assert!(report.size as u64 <= 2 * report.stats.greedy_iterations);
        for leaf in g.leaves() {
            prop_assert!(report.solution.contains(&leaf));
        }
    }

    #[test]
    fn exact_solution_is_minimal_and_contains_leaves(g in connected_graph(2, 7)) {
        let report = exact_meg(&g).unwrap();
        prop_assert!(report.certified);
        prop_assert_eq!(report.size, common::oracle_min_meg(&g));
        for leaf in g.leaves() {
            prop_assert!(report.solution.contains(&leaf));
        }
        let greedy = meg_apx(&g).unwrap();
        prop_assert!(greedy.size >= report.size);
    }

    #[test]
    fn stripping_excluded_preserves_certification(g in connected_graph(3, 9)) {
        let all: Vec<usize> = (0..g.vertex_count()).collect();
        for &u in &excluded_vertices(&g) {
            let without: Vec<usize> = all.iter().copied().filter(|&v| v != u).collect();
            prop_assert!(meg_check(&g, &without, g.vertex_count()).unwrap());
        }
        let pruned = prune_meg_set(&g, &all).unwrap();
        prop_assert!(meg_check(&g, &pruned, g.vertex_count()).unwrap());
    }

    #[test]
    fn exact_vertex_cover_matches_oracle(g in any_graph(7)) {
        let report = exact_vertex_cover(&g).unwrap();
        prop_assert!(is_vertex_cover(&g, &report.solution));
        prop_assert_eq!(report.size, common::oracle_min_vc(&g));
    }

    #[test]
    fn gadget_round_trip_is_sound(
        base in connected_graph(3, 5),
        copies in 1usize..=2,
    ) {
        // A universal vertex caps the diameter at 2, making any connected
        // base graph a valid gadget source.
        let (source, _) = add_universal_vertex(&base).unwrap();
        let inst = build_replicated_gadget(&source, copies).unwrap();
        let n = source.vertex_count();
        prop_assert_eq!(inst.graph.vertex_count(), (copies + 2) * n + 2);
        prop_assert_eq!(
            inst.graph.edge_count(),
            copies * source.edge_count() + copies * n + 2 * n + 1
        );

        let vc = exact_vertex_cover(&source).unwrap();
        let lifted = meg_from_vc(&inst, &vc.solution).unwrap();
        prop_assert_eq!(lifted.len(), copies * vc.size + n + 1);

        let extracted = vc_from_meg(&inst, &lifted).unwrap();
        prop_assert!(is_vertex_cover(&source, &extracted));
        // Extraction never inflates the cover side.
        prop_assert!(extracted.len() <= vc.size);
        let size_bound = (lifted.len() - n - 1) / copies;
        prop_assert!(extracted.len() <= size_bound);
    }
}

/// Exhaustive cross-check of the two monitored-edge routes: every labeled
/// connected graph on up to 5 vertices plus a batch of random 6-vertex
/// graphs.
#[test]
fn counting_route_exhaustive_on_small_graphs() {
    let mut family = Vec::new();
    for n in 2..=5 {
        family.extend(common::connected_labeled_graphs(n));
    }
    let mut rng = common::rng(0xD1CE);
    for _ in 0..200 {
        family.push(common::random_connected(6, 0.35, &mut rng));
    }
    for g in &family {
        for x in 0..g.vertex_count() {
            for y in (x + 1)..g.vertex_count() {
                assert_eq!(
                    monitored_edges_by_counting(g, x, y).unwrap(),
                    monitored_edges(g, x, y).unwrap(),
                    "routes disagree on {:?} pair ({x},{y})",
                    g.edges()
                );
            }
        }
    }
}

/// Both vertex-cover searches agree with exhaustive enumeration on every
/// labeled graph (connected or not) with 4 vertices.
#[test]
fn vertex_cover_exhaustive_on_labeled_n4() {
    let pairs: Vec<(usize, usize)> = (0..4).flat_map(|u| ((u + 1)..4).map(move |v| (u, v))).collect();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(4, &edges).unwrap();
        let optimum = common::oracle_min_vc(&g);
        assert_eq!(exact_vertex_cover(&g).unwrap().size, optimum);
        let bounded = megset::bounded_vertex_cover_search(&g, optimum + 1)
            .unwrap()
            .expect("optimum is below the bound");
        assert_eq!(bounded.size, optimum);
        if optimum > 0 {
            assert!(megset::bounded_vertex_cover_search(&g, optimum)
                .unwrap()
                .is_none());
        }
    }
}

/// Replication identity on named sources: the gadget optimum is exactly
/// `c * cover + n + 1` for K3, C4 and K4 with one and two copies.
#[test]
fn replicated_round_trip_on_named_sources() {
    let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    for f in [k3, c4, k4] {
        let opt_vc = exact_vertex_cover(&f).unwrap().size;
        for copies in [1, 2] {
            let inst = build_replicated_gadget(&f, copies).unwrap();
            let meg = exact_meg(&inst.graph).unwrap();
            assert_eq!(meg.size, copies * opt_vc + f.vertex_count() + 1);
        }
    }
}
