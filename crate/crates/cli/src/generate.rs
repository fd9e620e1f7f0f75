//! Deterministic instance generators. All randomness flows through one
//! seeded generator, so identical `(kind, n, seed)` triples produce
//! identical graphs.

use clap::ValueEnum;
use megset::{add_universal_vertex, Error, Graph, Result};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphKind {
    Path,
    Cycle,
    Complete,
    Star,
    RandomConnected,
    RandomDiam2,
}

impl GraphKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            GraphKind::Path => "path",
            GraphKind::Cycle => "cycle",
            GraphKind::Complete => "complete",
            GraphKind::Star => "star",
            GraphKind::RandomConnected => "random-connected",
            GraphKind::RandomDiam2 => "random-diam2",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "path" => Some(GraphKind::Path),
            "cycle" => Some(GraphKind::Cycle),
            "complete" => Some(GraphKind::Complete),
            "star" => Some(GraphKind::Star),
            "random-connected" => Some(GraphKind::RandomConnected),
            "random-diam2" => Some(GraphKind::RandomDiam2),
            _ => None,
        }
    }
}

pub fn generate(kind: GraphKind, n: usize, seed: u64) -> Result<Graph> {
    let min = match kind {
        GraphKind::Cycle => 3,
        _ => 2,
    };
    if n < min {
        return Err(Error::TooFewVertices { n, min });
    }
    match kind {
        GraphKind::Path => {
            let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            Graph::new(n, &edges)
        }
        GraphKind::Cycle => {
            let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            edges.push((n - 1, 0));
            Graph::new(n, &edges)
        }
        GraphKind::Complete => {
            let edges: Vec<_> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            Graph::new(n, &edges)
        }
        GraphKind::Star => {
            let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
            Graph::new(n, &edges)
        }
        GraphKind::RandomConnected => Ok(random_connected(n, seed)),
        GraphKind::RandomDiam2 => {
            let g = random_connected(n, seed);
            if g.diameter()? <= 2 {
                Ok(g)
            } else {
                // The universal vertex caps the diameter at 2; the result
                // has n + 1 vertices.
                Ok(add_universal_vertex(&g)?.0)
            }
        }
    }
}

/// Erdos-Renyi at `p = 2 ln n / n`, resampled until connected.
fn random_connected(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = (2.0 * (n as f64).ln() / n as f64).min(1.0);
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).expect("generated edges are valid");
        if g.is_connected() {
            return g;
        }
    }
}
