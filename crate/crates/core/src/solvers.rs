//! Solvers: exact minimum monitoring-set search with leaf-based pruning,
//! the greedy set-cover approximation, and exact/bounded vertex-cover
//! search used by the approximation pipeline.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monitoring::{coverage_map, meg_check, EdgeSet, PairCoverage};

/// Which solver produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ExactMeg,
    GreedyMeg,
    ExactVc,
    BoundedVc,
    ApxVc,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ExactMeg => "exact-meg",
            Method::GreedyMeg => "greedy-meg",
            Method::ExactVc => "exact-vc",
            Method::BoundedVc => "bounded-vc",
            Method::ApxVc => "apx-vc",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Work counters carried by every report.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub pairs_evaluated: u64,
    pub subsets_enumerated: u64,
    pub greedy_iterations: u64,
}

/// A solved instance: the solution set, its size, how it was obtained and
/// whether the independent certifier accepted it. Every constructor in this
/// module certifies before returning, so `certified` is always true on a
/// successfully returned report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub solution: Vec<usize>,
    pub size: usize,
    pub method: Method,
    pub certified: bool,
    pub stats: SolveStats,
}

impl SolveReport {
    fn certified(solution: Vec<usize>, method: Method, stats: SolveStats) -> Self {
        let size = solution.len();
        SolveReport {
            solution,
            size,
            method,
            certified: true,
            stats,
        }
    }
}

/// Explicit resource limits for the exact solvers. Exceeding a limit is an
/// error, never a silently degraded answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveBudget {
    /// Cap on the number of free vertices the exact monitoring-set search
    /// may enumerate over (after forced and excluded vertices are removed).
    pub max_free_vertices: usize,
    /// Cap on search-tree nodes for both exact searches.
    pub max_branch_steps: u64,
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget {
            max_free_vertices: 24,
            max_branch_steps: 50_000_000,
        }
    }
}

/// Vertices that belong to every monitoring edge-geodetic set: the leaves.
/// A leaf's edge can only be monitored by a pair using the leaf itself.
pub fn mandatory_vertices(g: &Graph) -> Vec<usize> {
    g.leaves()
}

/// Non-leaf vertices adjacent to at least one leaf. Any monitoring set stays
/// valid after removing such a vertex, so minimal search can skip them.
pub fn excluded_vertices(g: &Graph) -> Vec<usize> {
    let leaves = g.leaves();
    let mut is_leaf = vec![false; g.vertex_count()];
    for &v in &leaves {
        is_leaf[v] = true;
    }
    (0..g.vertex_count())
        .filter(|&v| !is_leaf[v] && g.neighbors(v).any(|u| is_leaf[u]))
        .collect()
}

/// Strips every excluded vertex from a certified monitoring set; the result
/// is still a monitoring set.
pub fn prune_meg_set(g: &Graph, m_set: &[usize]) -> Result<Vec<usize>> {
    if !meg_check(g, m_set, g.vertex_count())? {
        return Err(Error::NotMegSet);
    }
    let excluded = excluded_vertices(g);
    let mut pruned: Vec<usize> = m_set
        .iter()
        .copied()
        .filter(|v| !excluded.contains(v))
        .collect();
    pruned.sort_unstable();
    pruned.dedup();
    debug_assert!(meg_check(g, &pruned, g.vertex_count()).unwrap());
    Ok(pruned)
}

struct ExactMegSearch<'a> {
    free: &'a [usize],
    mandatory: &'a [usize],
    pair_sets: &'a HashMap<(usize, usize), EdgeSet>,
    steps: u64,
    max_steps: u64,
    subsets_enumerated: u64,
}

impl ExactMegSearch<'_> {
    fn union_pairs_with(&self, cover: &mut EdgeSet, v: usize, others: &[usize]) {
        for &u in others {
            let key = (u.min(v), u.max(v));
            if let Some(set) = self.pair_sets.get(&key) {
                cover.union_with(set);
            }
        }
    }

    /// Depth-first choice of `slots` more vertices from `free[from..]`,
    /// unioning each new vertex's pair coverage against everything already
    /// in the set. Returns the first (lexicographically smallest) feasible
    /// choice.
    fn choose(
        &mut self,
        from: usize,
        slots: usize,
        cover: &EdgeSet,
        chosen: &mut Vec<usize>,
    ) -> Result<Option<Vec<usize>>> {
        self.steps += 1;
        if self.steps > self.max_steps {
            return Err(Error::BudgetExceeded("exact search step"));
        }
        if slots == 0 {
            self.subsets_enumerated += 1;
            if cover.is_full() {
                return Ok(Some(chosen.clone()));
            }
            return Ok(None);
        }
        for i in from..=self.free.len() - slots {
            let v = self.free[i];
            let mut next = cover.clone();
            self.union_pairs_with(&mut next, v, self.mandatory);
            self.union_pairs_with(&mut next, v, chosen);
            chosen.push(v);
            if let Some(found) = self.choose(i + 1, slots - 1, &next, chosen)? {
                return Ok(Some(found));
            }
            chosen.pop();
        }
        Ok(None)
    }
}

/// Minimum monitoring edge-geodetic set under the default budget.
pub fn exact_meg(g: &Graph) -> Result<SolveReport> {
    exact_meg_with_budget(g, SolveBudget::default())
}

/// Minimum monitoring edge-geodetic set.
///
/// Leaves are forced in, their non-leaf neighbors are excluded, and the
/// remaining free vertices are enumerated in increasing cardinality with
/// feasibility tested via precomputed pair-coverage bitsets. The first
/// feasible cardinality is minimal because some minimum solution always
/// survives the pruning. The winner is re-certified through the removal
/// test before it is returned.
pub fn exact_meg_with_budget(g: &Graph, budget: SolveBudget) -> Result<SolveReport> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mandatory = mandatory_vertices(g);
    let excluded = excluded_vertices(g);
    let free: Vec<usize> = (0..n)
        .filter(|v| !mandatory.contains(v) && !excluded.contains(v))
        .collect();
    if free.len() > budget.max_free_vertices {
        return Err(Error::BudgetExceeded("exact search free-vertex"));
    }
    let mut pool = mandatory.clone();
    pool.extend(&free);
    pool.sort_unstable();
    let coverage = coverage_map(g, &pool)?;
    let pair_sets: HashMap<(usize, usize), EdgeSet> = coverage
        .iter()
        .map(|(pair, set)| (pair, set.clone()))
        .collect();

    let mut base = EdgeSet::new(g.edge_count());
    for i in 0..mandatory.len() {
        for j in i + 1..mandatory.len() {
            if let Some(set) = pair_sets.get(&(mandatory[i], mandatory[j])) {
                base.union_with(set);
            }
        }
    }

    let mut search = ExactMegSearch {
        free: &free,
        mandatory: &mandatory,
        pair_sets: &pair_sets,
        steps: 0,
        max_steps: budget.max_branch_steps,
        subsets_enumerated: 0,
    };
    for k in 0..=free.len() {
        if let Some(extra) = search.choose(0, k, &base, &mut Vec::new())? {
            let mut solution = mandatory.clone();
            solution.extend(extra);
            solution.sort_unstable();
            if !meg_check(g, &solution, n)? {
                return Err(Error::Internal(
                    "exact search produced an uncertifiable set".into(),
                ));
            }
            let pool_pairs = (pool.len() * (pool.len() - 1) / 2) as u64;
            return Ok(SolveReport::certified(
                solution,
                Method::ExactMeg,
                SolveStats {
                    pairs_evaluated: pool_pairs,
                    subsets_enumerated: search.subsets_enumerated,
                    greedy_iterations: 0,
                },
            ));
        }
    }
    // The full pruned pool is itself a monitoring set, so the loop above
    // always returns.
    Err(Error::Internal("exhausted pruned search space".into()))
}

/// A set-cover instance over edge indices, with vertex pairs as labels.
#[derive(Debug, Clone)]
pub struct SetCoverInstance {
    universe_size: usize,
    subsets: Vec<((usize, usize), EdgeSet)>,
}

impl SetCoverInstance {
    /// Subsets must be nonempty and sized to the universe.
    pub fn new(universe_size: usize, subsets: Vec<((usize, usize), EdgeSet)>) -> Result<Self> {
        for (_, set) in &subsets {
            if set.is_empty() {
                return Err(Error::EmptySubset);
            }
            if set.capacity() != universe_size {
                return Err(Error::Internal("subset capacity mismatch".into()));
            }
        }
        Ok(SetCoverInstance {
            universe_size,
            subsets,
        })
    }

    pub fn from_coverage(universe_size: usize, coverage: &PairCoverage) -> Self {
        SetCoverInstance {
            universe_size,
            subsets: coverage
                .iter()
                .map(|(pair, set)| (pair, set.clone()))
                .collect(),
        }
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn subsets(&self) -> &[((usize, usize), EdgeSet)] {
        &self.subsets
    }
}

/// Classic greedy set cover: repeatedly pick the subset covering the most
/// still-uncovered elements, breaking ties toward the lexicographically
/// smallest pair label. Returns labels in pick order.
pub fn greedy_set_cover(inst: &SetCoverInstance) -> Result<Vec<(usize, usize)>> {
    let mut covered = EdgeSet::new(inst.universe_size);
    let mut picks = Vec::new();
    while !covered.is_full() {
        let mut best: Option<(usize, (usize, usize), usize)> = None;
        for (idx, (label, set)) in inst.subsets.iter().enumerate() {
            let gain = set.gain_over(&covered);
            if gain == 0 {
                continue;
            }
            let better = match best {
                None => true,
                Some((bg, bl, _)) => gain > bg || (gain == bg && *label < bl),
            };
            if better {
                best = Some((gain, *label, idx));
            }
        }
        match best {
            Some((_, label, idx)) => {
                covered.union_with(&inst.subsets[idx].1);
                picks.push(label);
            }
            None => return Err(Error::UniverseNotCoverable),
        }
    }
    Ok(picks)
}

/// Greedy approximation for the minimum monitoring set: build the set-cover
/// instance whose universe is the edge set and whose subsets are the
/// nonempty per-pair coverage sets, run greedy set cover, and take every
/// endpoint of the chosen pairs. The output is certified before returning;
/// its size is at most twice the number of picks.
pub fn meg_apx(g: &Graph) -> Result<SolveReport> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let all: Vec<usize> = (0..n).collect();
    let coverage = coverage_map(g, &all)?;
    let inst = SetCoverInstance::from_coverage(g.edge_count(), &coverage);
    let picks = greedy_set_cover(&inst)?;
    let mut solution: Vec<usize> = picks.iter().flat_map(|&(x, y)| [x, y]).collect();
    solution.sort_unstable();
    solution.dedup();
    debug_assert!(solution.len() <= 2 * picks.len());
    if !meg_check(g, &solution, n)? {
        return Err(Error::Internal(
            "greedy cover produced an uncertifiable set".into(),
        ));
    }
    Ok(SolveReport::certified(
        solution,
        Method::GreedyMeg,
        SolveStats {
            pairs_evaluated: (n * (n - 1) / 2) as u64,
            subsets_enumerated: 0,
            greedy_iterations: picks.len() as u64,
        },
    ))
}

/// True iff every edge of `h` has an endpoint in `s`.
pub fn is_vertex_cover(h: &Graph, s: &[usize]) -> bool {
    let mut in_set = vec![false; h.vertex_count()];
    for &v in s {
        if v < h.vertex_count() {
            in_set[v] = true;
        }
    }
    h.edges().iter().all(|&(u, v)| in_set[u] || in_set[v])
}

struct VcSearch<'a> {
    h: &'a Graph,
    best: Option<Vec<usize>>,
    /// Exclusive size cap: only covers strictly below it are recorded.
    best_size: usize,
    steps: u64,
    max_steps: u64,
}

impl VcSearch<'_> {
    fn run(&mut self, in_cover: &mut Vec<bool>, chosen: &mut Vec<usize>) -> Result<()> {
        self.steps += 1;
        if self.steps > self.max_steps {
            return Err(Error::BudgetExceeded("vertex cover search step"));
        }
        let uncovered: Vec<usize> = (0..self.h.edge_count())
            .filter(|&e| {
                let (u, v) = self.h.endpoints(e);
                !in_cover[u] && !in_cover[v]
            })
            .collect();
        if uncovered.is_empty() {
            if chosen.len() < self.best_size {
                self.best_size = chosen.len();
                let mut solution = chosen.clone();
                solution.sort_unstable();
                self.best = Some(solution);
            }
            return Ok(());
        }
        // Lower bound: a greedy matching on the uncovered edges; each
        // matched edge needs its own cover vertex.
        let mut matched = vec![false; self.h.vertex_count()];
        let mut bound = chosen.len();
        for &e in &uncovered {
            let (u, v) = self.h.endpoints(e);
            if !matched[u] && !matched[v] {
                matched[u] = true;
                matched[v] = true;
                bound += 1;
            }
        }
        if bound >= self.best_size {
            return Ok(());
        }
        // Branch on the highest-degree uncovered edge; one endpoint must be
        // in any cover.
        let &pick = uncovered
            .iter()
            .min_by_key(|&&e| {
                let (u, v) = self.h.endpoints(e);
                let (du, dv) = (self.h.degree(u), self.h.degree(v));
                (
                    std::cmp::Reverse(du.max(dv)),
                    std::cmp::Reverse(du + dv),
                    (u, v),
                )
            })
            .expect("uncovered is nonempty");
        let (u, v) = self.h.endpoints(pick);
        for w in [u, v] {
            in_cover[w] = true;
            chosen.push(w);
            self.run(in_cover, chosen)?;
            chosen.pop();
            in_cover[w] = false;
        }
        Ok(())
    }
}

fn vc_search(h: &Graph, exclusive_bound: usize, budget: SolveBudget) -> Result<(Option<Vec<usize>>, u64)> {
    let mut search = VcSearch {
        h,
        best: None,
        best_size: exclusive_bound,
        steps: 0,
        max_steps: budget.max_branch_steps,
    };
    if exclusive_bound > 0 {
        let mut in_cover = vec![false; h.vertex_count()];
        search.run(&mut in_cover, &mut Vec::new())?;
    }
    Ok((search.best, search.steps))
}

/// Minimum vertex cover by branch and bound. The input need not be
/// connected.
pub fn exact_vertex_cover(h: &Graph) -> Result<SolveReport> {
    exact_vertex_cover_with_budget(h, SolveBudget::default())
}

pub fn exact_vertex_cover_with_budget(h: &Graph, budget: SolveBudget) -> Result<SolveReport> {
    let (best, steps) = vc_search(h, h.vertex_count() + 1, budget)?;
    let solution = best.ok_or_else(|| Error::Internal("vertex set covers itself".into()))?;
    if !is_vertex_cover(h, &solution) {
        return Err(Error::Internal("search returned a non-cover".into()));
    }
    Ok(SolveReport::certified(
        solution,
        Method::ExactVc,
        SolveStats {
            pairs_evaluated: 0,
            subsets_enumerated: steps,
            greedy_iterations: 0,
        },
    ))
}

/// The minimum vertex cover when its size is strictly below `bound`,
/// otherwise `None`.
pub fn bounded_vertex_cover_search(h: &Graph, bound: usize) -> Result<Option<SolveReport>> {
    bounded_vertex_cover_search_with_budget(h, bound, SolveBudget::default())
}

pub fn bounded_vertex_cover_search_with_budget(
    h: &Graph,
    bound: usize,
    budget: SolveBudget,
) -> Result<Option<SolveReport>> {
    let (best, steps) = vc_search(h, bound.min(h.vertex_count() + 1), budget)?;
    Ok(best.map(|solution| {
        debug_assert!(is_vertex_cover(h, &solution));
        SolveReport::certified(
            solution,
            Method::BoundedVc,
            SolveStats {
                pairs_evaluated: 0,
                subsets_enumerated: steps,
                greedy_iterations: 0,
            },
        )
    }))
}

/// Exact partial harmonic sum `1 + 1/2 + ... + 1/n`, used when checking the
/// greedy guarantee as a testable rational inequality rather than an `ln`
/// approximation.
pub fn harmonic_number(n: usize) -> BigRational {
    let mut sum = BigRational::from_integer(BigInt::from(0));
    for k in 1..=n {
        sum += BigRational::new(BigInt::from(1), BigInt::from(k));
    }
    sum
}
