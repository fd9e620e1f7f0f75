//! The monitored-edge predicate, per-pair coverage sets and the
//! certification check for candidate monitoring sets.
//!
//! An edge is monitored by a vertex pair `{x, y}` when it lies on every
//! shortest path between `x` and `y`; equivalently, removing the edge
//! strictly increases `d(x, y)`. The removal characterization is what
//! [`is_monitored`] and [`meg_check`] implement; a shortest-path-counting
//! variant is provided as a faster, cross-checked alternative.

use crate::error::{Error, Result};
use crate::graph::{DistanceRow, Graph, INFINITY};

/// Shortest-path counts saturate here; anything at or above this value is
/// treated as "too many to trust" and triggers the per-edge removal test.
const SIGMA_SATURATED: u64 = (1 << 63) - 1;

/// Fixed-capacity bitset keyed by canonical edge index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    nbits: usize,
    words: Vec<u64>,
}

impl EdgeSet {
    pub fn new(nbits: usize) -> Self {
        EdgeSet {
            nbits,
            words: vec![0; nbits.div_ceil(64)],
        }
    }

    /// The set holding every edge index `0..nbits`.
    pub fn full(nbits: usize) -> Self {
        let mut s = EdgeSet::new(nbits);
        for i in 0..nbits {
            s.insert(i);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.nbits
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.nbits, "bit {i} out of range");
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        assert!(i < self.nbits, "bit {i} out of range");
        self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.nbits
    }

    pub fn union_with(&mut self, other: &EdgeSet) {
        assert_eq!(self.nbits, other.nbits, "capacity mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// Number of bits set in `self` but not in `covered`.
    pub fn gain_over(&self, covered: &EdgeSet) -> usize {
        assert_eq!(self.nbits, covered.nbits, "capacity mismatch");
        self.words
            .iter()
            .zip(&covered.words)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nbits).filter(move |&i| self.contains(i))
    }
}

impl FromIterator<usize> for EdgeSet {
    /// Collects indices into a set sized to the largest index seen.
    /// Mostly a convenience for tests; library code sizes sets explicitly.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let items: Vec<usize> = iter.into_iter().collect();
        let nbits = items.iter().max().map_or(0, |&m| m + 1);
        let mut s = EdgeSet::new(nbits);
        for i in items {
            s.insert(i);
        }
        s
    }
}

/// Nonempty per-pair coverage sets over a vertex set, in lexicographic
/// pair order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCoverage {
    pairs: Vec<(usize, usize)>,
    covers: Vec<EdgeSet>,
}

impl PairCoverage {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &EdgeSet)> + '_ {
        self.pairs.iter().copied().zip(self.covers.iter())
    }

    pub fn get(&self, x: usize, y: usize) -> Option<&EdgeSet> {
        let key = (x.min(y), x.max(y));
        self.pairs
            .binary_search(&key)
            .ok()
            .map(|i| &self.covers[i])
    }
}

fn check_pair(g: &Graph, x: usize, y: usize) -> Result<()> {
    let n = g.vertex_count();
    if x >= n {
        return Err(Error::VertexOutOfRange { vertex: x, n });
    }
    if y >= n {
        return Err(Error::VertexOutOfRange { vertex: y, n });
    }
    if x == y {
        return Err(Error::DegeneratePair(x));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// True iff edge `e` lies on every shortest `x`–`y` path, tested by checking
/// whether removing `e` strictly increases `d(x, y)`.
pub fn is_monitored(g: &Graph, x: usize, y: usize, e: usize) -> Result<bool> {
    check_pair(g, x, y)?;
    if e >= g.edge_count() {
        return Err(Error::EdgeIndexOutOfRange {
            index: e,
            m: g.edge_count(),
        });
    }
    let base = g.bfs_distances(x).get(y);
    Ok(g.distance_without_edge(x, y, e) > base)
}

/// All edges monitored by the pair `{x, y}`.
///
/// Only the edges of one extracted shortest path are removal-tested: an edge
/// on every shortest path is on the extracted one, and an edge off some
/// shortest path can never be monitored.
pub fn monitored_edges(g: &Graph, x: usize, y: usize) -> Result<EdgeSet> {
    check_pair(g, x, y)?;
    let row = g.bfs_distances(x);
    let base = row.get(y);
    let mut set = EdgeSet::new(g.edge_count());
    for e in g.shortest_path_edges(&row, y) {
        if g.distance_without_edge(x, y, e) > base {
            set.insert(e);
        }
    }
    Ok(set)
}

/// BFS distances plus saturating shortest-path counts from one source.
pub(crate) struct CountingRow {
    pub dist: DistanceRow,
    pub sigma: Vec<u64>,
}

pub(crate) fn counting_row(g: &Graph, source: usize) -> CountingRow {
    let dist = g.bfs_distances(source);
    let mut sigma = vec![0u64; g.vertex_count()];
    sigma[source] = 1;
    // Vertices in ascending distance order; within a level order is
    // irrelevant because counts only flow level to level.
    let mut order: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| dist.get(v) < INFINITY)
        .collect();
    order.sort_unstable_by_key(|&v| dist.get(v));
    for &v in &order {
        if v == source {
            continue;
        }
        let want = dist.get(v) - 1;
        let mut total: u64 = 0;
        for (u, _) in g.adjacency(v) {
            if dist.get(*u) == want {
                total = total.saturating_add(sigma[*u]);
            }
        }
        sigma[v] = total.min(SIGMA_SATURATED);
    }
    CountingRow { dist, sigma }
}

/// Counting-based variant of [`monitored_edges`]: an edge on the shortest
/// `x`–`y` DAG is monitored iff the paths through it account for every
/// shortest path. Saturated counts fall back to the removal test edge by
/// edge, so the answer never depends on overflow behavior.
pub fn monitored_edges_by_counting(g: &Graph, x: usize, y: usize) -> Result<EdgeSet> {
    check_pair(g, x, y)?;
    let rx = counting_row(g, x);
    let ry = counting_row(g, y);
    Ok(monitored_from_rows(g, &rx, &ry, y))
}

pub(crate) fn monitored_from_rows(
    g: &Graph,
    rx: &CountingRow,
    ry: &CountingRow,
    y: usize,
) -> EdgeSet {
    let x = rx.dist.source;
    let base = rx.dist.get(y);
    let total = rx.sigma[y];
    let mut set = EdgeSet::new(g.edge_count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        // Orient the edge along the x -> y direction if it lies on some
        // shortest path; at most one orientation can.
        let (a, b) = if rx.dist.get(u) + 1 + ry.dist.get(v) == base {
            (u, v)
        } else if rx.dist.get(v) + 1 + ry.dist.get(u) == base {
            (v, u)
        } else {
            continue;
        };
        let sa = rx.sigma[a];
        let sb = ry.sigma[b];
        if total >= SIGMA_SATURATED || sa >= SIGMA_SATURATED || sb >= SIGMA_SATURATED {
            if g.distance_without_edge(x, y, e) > base {
                set.insert(e);
            }
            continue;
        }
        // With all three counts exact, sa * sb <= total < 2^63, so the
        // product cannot overflow.
        if sa * sb == total {
            set.insert(e);
        }
    }
    set
}

/// Coverage sets for every pair within `vertices`, omitting pairs that
/// monitor nothing. Pairs are reported in lexicographic order.
pub fn coverage_map(g: &Graph, vertices: &[usize]) -> Result<PairCoverage> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let mut set: Vec<usize> = vertices.to_vec();
    set.sort_unstable();
    set.dedup();
    if let Some(&v) = set.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    if set.len() < 2 {
        return Err(Error::TooFewVertices {
            n: set.len(),
            min: 2,
        });
    }
    let rows: Vec<CountingRow> = set.iter().map(|&v| counting_row(g, v)).collect();
    let mut pairs = Vec::new();
    let mut covers = Vec::new();
    for i in 0..set.len() {
        for j in i + 1..set.len() {
            let cover = monitored_from_rows(g, &rows[i], &rows[j], set[j]);
            if !cover.is_empty() {
                pairs.push((set[i], set[j]));
                covers.push(cover);
            }
        }
    }
    Ok(PairCoverage { pairs, covers })
}

/// Certifies a candidate monitoring set: true iff the pairs within `m_set`
/// monitor every edge of `g` and `|m_set| <= k`.
///
/// Follows the removal-test route end to end, independently of the counting
/// shortcut used elsewhere, so it doubles as a cross-check when certifying
/// solver output.
pub fn meg_check(g: &Graph, m_set: &[usize], k: usize) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let mut set: Vec<usize> = m_set.to_vec();
    set.sort_unstable();
    set.dedup();
    if let Some(&v) = set.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    if set.len() > k {
        return Ok(false);
    }
    let mut covered = EdgeSet::new(g.edge_count());
    for i in 0..set.len() {
        let row = g.bfs_distances(set[i]);
        for &y in &set[i + 1..] {
            let base = row.get(y);
            for e in g.shortest_path_edges(&row, y) {
                if !covered.contains(e) && g.distance_without_edge(set[i], y, e) > base {
                    covered.insert(e);
                }
            }
        }
    }
    Ok(covered.is_full())
}
