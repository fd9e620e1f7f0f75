//! Immutable simple undirected graphs with unweighted shortest-path queries,
//! including distance queries under single-edge deletion.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Distance sentinel for unreachable vertices. Kept well below `u32::MAX`
/// so that `INFINITY + n` never wraps in comparisons.
pub const INFINITY: u32 = u32::MAX / 2;

/// A simple, undirected graph over dense 0-based vertex ids.
///
/// Edges are stored in canonical `(min, max)` form; each edge gets a stable
/// index `0..m` in input order (after deduplication). All query methods are
/// read-only, so a `Graph` can be shared freely across threads.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// Per-vertex list of `(neighbor, edge index)`, sorted by neighbor id.
    adj: Vec<Vec<(usize, usize)>>,
    edge_index: HashMap<(usize, usize), usize>,
    connected: bool,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return false;
        }
        let mut a = self.edges.clone();
        let mut b = other.edges.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list. Edges are canonicalized to
    /// `(min, max)` and duplicates are dropped; self-loops and out-of-range
    /// endpoints are rejected.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(edge_list.len());
        let mut edge_index = HashMap::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange { u, v, n });
            }
            let e = (u.min(v), u.max(v));
            if let std::collections::hash_map::Entry::Vacant(slot) = edge_index.entry(e) {
                slot.insert(edges.len());
                edges.push(e);
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (idx, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, idx));
            adj[v].push((u, idx));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let mut g = Graph {
            n,
            edges,
            adj,
            edge_index,
            connected: false,
        };
        g.connected = g.compute_connected();
        Ok(g)
    }

    fn compute_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let row = self.bfs_distances(0);
        row.dist.iter().all(|&d| d < INFINITY)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edges in index order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints of the edge with the given index, as `(min, max)`.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Index of the edge `{u, v}`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(u, _)| u)
    }

    /// Per-vertex adjacency as `(neighbor, edge index)` pairs.
    pub fn adjacency(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// Hop distances from `source` to every vertex; unreachable vertices get
    /// [`INFINITY`].
    pub fn bfs_distances(&self, source: usize) -> DistanceRow {
        assert!(source < self.n, "source {source} out of range");
        let mut dist = vec![INFINITY; self.n];
        dist[source] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &(v, _) in &self.adj[u] {
                if dist[v] == INFINITY {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        DistanceRow { source, dist }
    }

    /// `d(x, y)` in the graph with edge `e` removed; [`INFINITY`] if the
    /// removal disconnects `x` from `y`. The graph itself is left untouched:
    /// the BFS runs on an adjacency view that masks the one edge.
    pub fn distance_without_edge(&self, x: usize, y: usize, e: usize) -> u32 {
        assert!(x < self.n && y < self.n, "vertex out of range");
        assert!(e < self.edges.len(), "edge index out of range");
        if x == y {
            return 0;
        }
        let mut dist = vec![INFINITY; self.n];
        dist[x] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(x);
        while let Some(u) = queue.pop_front() {
            for &(v, idx) in &self.adj[u] {
                if idx == e || dist[v] != INFINITY {
                    continue;
                }
                dist[v] = dist[u] + 1;
                if v == y {
                    return dist[v];
                }
                queue.push_back(v);
            }
        }
        INFINITY
    }

    /// Longest shortest-path distance over all pairs.
    pub fn diameter(&self) -> Result<u32> {
        if !self.connected {
            return Err(Error::Disconnected);
        }
        let mut max = 0;
        for v in 0..self.n {
            let row = self.bfs_distances(v);
            for &d in &row.dist {
                max = max.max(d);
            }
        }
        Ok(max)
    }

    /// Degree-1 vertices, in ascending order.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Edge indices of one shortest path from `row.source` to `target`,
    /// listed from `target` back to the source. Ties are broken by walking
    /// to the smallest-id predecessor, so the path is deterministic.
    pub fn shortest_path_edges(&self, row: &DistanceRow, target: usize) -> Vec<usize> {
        assert!(target < self.n, "target out of range");
        assert!(row.dist[target] < INFINITY, "target unreachable from source");
        let mut path = Vec::with_capacity(row.dist[target] as usize);
        let mut cur = target;
        while cur != row.source {
            let want = row.dist[cur] - 1;
            // Adjacency is sorted by neighbor id, so the first hit is the
            // smallest-id predecessor.
            let &(pred, idx) = self.adj[cur]
                .iter()
                .find(|&&(u, _)| row.dist[u] == want)
                .expect("BFS row is consistent");
            path.push(idx);
            cur = pred;
        }
        path
    }
}

/// BFS distances from a single source vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: usize,
    pub dist: Vec<u32>,
}

impl DistanceRow {
    pub fn get(&self, v: usize) -> u32 {
        self.dist[v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn k2() -> Graph {
        Graph::new(2, &[(0, 1)]).unwrap()
    }

    #[test]
    fn builds_path_graph() {
        let g = p3();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(g.is_connected());
    }

    #[test]
    fn builds_four_cycle() {
        let g = c4();
        assert_eq!(g.edge_count(), 4);
        assert!(g.is_connected());
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3), (0, 3)]);
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(Graph::new(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
    }

    #[test]
    fn rejects_out_of_range_endpoint() {
        assert_eq!(
            Graph::new(2, &[(0, 5)]),
            Err(Error::EdgeOutOfRange { u: 0, v: 5, n: 2 })
        );
    }

    #[test]
    fn dedups_and_canonicalizes() {
        let g = Graph::new(3, &[(1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.edge_index(1, 0), Some(0));
    }

    #[test]
    fn reports_disconnected_flag() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.diameter(), Err(Error::Disconnected));
    }

    #[test]
    fn bfs_distances_examples() {
        assert_eq!(p3().bfs_distances(0).dist, vec![0, 1, 2]);
        assert_eq!(c4().bfs_distances(0).dist, vec![0, 1, 2, 1]);
        assert_eq!(k2().bfs_distances(1).dist, vec![1, 0]);
    }

    #[test]
    fn distance_without_edge_examples() {
        let p = p3();
        let e01 = p.edge_index(0, 1).unwrap();
        assert_eq!(p.distance_without_edge(0, 2, e01), INFINITY);

        let c = c4();
        let e01 = c.edge_index(0, 1).unwrap();
        assert_eq!(c.distance_without_edge(0, 2, e01), 2);
        assert_eq!(c.distance_without_edge(0, 1, e01), 3);
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(p3().diameter().unwrap(), 2);
        assert_eq!(c4().diameter().unwrap(), 2);
        assert_eq!(k2().diameter().unwrap(), 1);
    }

    #[test]
    fn leaves_examples() {
        assert_eq!(p3().leaves(), vec![0, 2]);
        assert!(c4().leaves().is_empty());
        assert_eq!(k2().leaves(), vec![0, 1]);
    }

    #[test]
    fn graphs_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Graph>();
        assert_send_sync::<DistanceRow>();
    }

    #[test]
    fn shortest_path_walks_back_deterministically() {
        let c = c4();
        let row = c.bfs_distances(0);
        // Two shortest paths to vertex 2; the walk-back picks predecessor 1.
        let path = c.shortest_path_edges(&row, 2);
        assert_eq!(path, vec![c.edge_index(1, 2).unwrap(), c.edge_index(0, 1).unwrap()]);
    }
}
