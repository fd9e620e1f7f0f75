//! Shared test oracles and instance generators.
//!
//! Everything here is deliberately independent of the library's fast paths:
//! monitored edges are found by enumerating every shortest path, and minima
//! are found by unpruned exhaustive subset enumeration.

#![allow(dead_code)]

use megset::{meg_check, Graph};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// All edges lying on every shortest `x`–`y` path, by enumerating every
/// shortest path and intersecting their edge sets.
pub fn oracle_monitored(g: &Graph, x: usize, y: usize) -> Vec<usize> {
    let to_y = g.bfs_distances(y);
    let mut intersection: Option<Vec<bool>> = None;
    let mut stack = vec![(x, Vec::new())];
    while let Some((cur, path)) = stack.pop() {
        if cur == y {
            let mut mask = vec![false; g.edge_count()];
            for &e in &path {
                mask[e] = true;
            }
            intersection = Some(match intersection {
                None => mask,
                Some(prev) => prev
                    .iter()
                    .zip(&mask)
                    .map(|(&a, &b)| a && b)
                    .collect(),
            });
            continue;
        }
        for &(next, e) in g.adjacency(cur) {
            if to_y.get(next) + 1 == to_y.get(cur) {
                let mut longer = path.clone();
                longer.push(e);
                stack.push((next, longer));
            }
        }
    }
    let mask = intersection.expect("graph is connected");
    (0..g.edge_count()).filter(|&e| mask[e]).collect()
}

fn mask_vertices(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask & (1 << v) != 0).collect()
}

/// Minimum monitoring-set size by checking every vertex subset, smallest
/// cardinality first, with no pruning of any kind.
pub fn oracle_min_meg(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 16, "oracle is exponential");
    for k in 0..=n {
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            if meg_check(g, &mask_vertices(mask, n), n).unwrap() {
                return k;
            }
        }
    }
    unreachable!("the full vertex set is always feasible");
}

/// Minimum vertex-cover size by exhaustive enumeration.
pub fn oracle_min_vc(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 16, "oracle is exponential");
    let covers_all = |mask: u32| {
        g.edges()
            .iter()
            .all(|&(u, v)| mask & (1 << u) != 0 || mask & (1 << v) != 0)
    };
    (0u32..(1 << n))
        .filter(|&mask| covers_all(mask))
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap()
}

/// Optimal set-cover size by exhaustive enumeration over subset choices.
/// Returns `None` if the union of all subsets misses part of the universe.
pub fn oracle_min_set_cover(universe: usize, subsets: &[Vec<usize>]) -> Option<usize> {
    assert!(subsets.len() <= 20, "oracle is exponential");
    let full: u64 = if universe == 64 {
        u64::MAX
    } else {
        (1u64 << universe) - 1
    };
    assert!(universe <= 64);
    let masks: Vec<u64> = subsets
        .iter()
        .map(|s| s.iter().fold(0u64, |acc, &e| acc | (1 << e)))
        .collect();
    let mut best: Option<usize> = None;
    for choice in 0u32..(1 << subsets.len()) {
        let picked = choice.count_ones() as usize;
        if best.is_some_and(|b| picked >= b) {
            continue;
        }
        let mut union = 0u64;
        for (i, &m) in masks.iter().enumerate() {
            if choice & (1 << i) != 0 {
                union |= m;
            }
        }
        if union == full {
            best = Some(picked);
        }
    }
    best
}

/// Every connected labeled graph on exactly `n` vertices.
pub fn connected_labeled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() <= 20);
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Seeded RNG for reproducible random instances.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random connected graph: a random spanning tree plus extra edges kept
/// with probability `extra_p`. Always connected, no rejection loop.
pub fn random_connected(n: usize, extra_p: f64, rng: &mut ChaCha8Rng) -> Graph {
    assert!(n >= 2);
    let mut edges = Vec::new();
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        edges.push((parent, v));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(extra_p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Random connected Erdos-Renyi graph at `p = 2 ln n / n`, resampled until
/// connected.
pub fn random_connected_er(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    assert!(n >= 2);
    let p = 2.0 * (n as f64).ln() / n as f64;
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p.min(1.0)) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// Random connected graph with diameter at most 2, by rejection.
pub fn random_diam2(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let g = random_connected(n, 0.6, rng);
        if g.diameter().unwrap() <= 2 {
            return g;
        }
    }
}

/// A few classic named graphs used across the suites.
pub fn named_small_graphs() -> Vec<(&'static str, Graph)> {
    let path = |n: usize| {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).unwrap()
    };
    let cycle = |n: usize| {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, &edges).unwrap()
    };
    let complete = |n: usize| {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        Graph::new(n, &edges).unwrap()
    };
    let star = |n: usize| {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Graph::new(n, &edges).unwrap()
    };
    vec![
        ("k2", complete(2)),
        ("p3", path(3)),
        ("p4", path(4)),
        ("p6", path(6)),
        ("k3", complete(3)),
        ("k4", complete(4)),
        ("k5", complete(5)),
        ("k7", complete(7)),
        ("c4", cycle(4)),
        ("c5", cycle(5)),
        ("c6", cycle(6)),
        ("c7", cycle(7)),
        ("star5", star(5)),
        ("star7", star(7)),
    ]
}
