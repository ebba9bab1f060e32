//! Exact computation of the identifying code number and its total
//! dominating variant.
//!
//! Both problems are minimum hitting set problems over bitmasks: a code
//! must hit `N[v]` for every vertex (domination, or `N(v)` for total
//! domination) and the symmetric difference `N[u] Δ N[v]` for every pair
//! (separation). The search fixes a target size `k`, starting from a lower
//! bound and increasing it until a hitting set of size `k` exists, so the
//! first success is optimal. Each node branches on the unhit constraint with
//! the fewest remaining candidates, excluding earlier siblings, and prunes
//! with a greedy packing of pairwise disjoint unhit constraints.
//!
//! Separation constraints subsume the open-twin rule: for open twins `u, v`
//! the symmetric difference is `{u, v}`, so at most one of them can be left
//! out.

use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};

pub const DEFAULT_BUDGET: u64 = 100_000_000;
pub const BUDGET_ENV: &str = "IDCODE_BUDGET";
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph is not identifiable: closed twins {0:?}")]
    NotIdentifiable((Vertex, Vertex)),
    #[error("vertex {0} is isolated; no total dominating code exists")]
    IsolatedVertex(Vertex),
    #[error("graph order {0} exceeds the solver limit of {MAX_ORDER}")]
    TooLarge(usize),
    /// The node budget ran out; `best` is a valid code that is not proven optimal.
    #[error("node budget of {nodes} exhausted; best known code has size {}", best.len())]
    BudgetExceeded { best: VertexSet, nodes: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Node budget from `IDCODE_BUDGET`, falling back to [`DEFAULT_BUDGET`].
pub fn budget_from_env() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// Minimum size of an identifying code.
pub fn gamma_id(g: &Graph, budget: Option<u64>) -> Result<SolveResult, SolveError> {
    check_order(g)?;
    if let Some(&pair) = g.closed_twins().first() {
        return Err(SolveError::NotIdentifiable(pair));
    }
    let closed = g.closed_masks();
    let mut sets = closed.clone();
    sets.extend(separation_sets(&closed));
    let floor = id_size_floor(g.n());
    solve(g.n(), sets, floor, budget.unwrap_or_else(budget_from_env))
}

/// Minimum size of a total dominating identifying code.
pub fn gamma_tid(g: &Graph, budget: Option<u64>) -> Result<SolveResult, SolveError> {
    check_order(g)?;
    if let Some(v) = g.isolated_vertex() {
        return Err(SolveError::IsolatedVertex(v));
    }
    if let Some(&pair) = g.closed_twins().first() {
        return Err(SolveError::NotIdentifiable(pair));
    }
    let closed = g.closed_masks();
    let mut sets = g.open_masks();
    sets.extend(separation_sets(&closed));
    let floor = id_size_floor(g.n());
    solve(g.n(), sets, floor, budget.unwrap_or_else(budget_from_env))
}

fn check_order(g: &Graph) -> Result<(), SolveError> {
    if g.n() > MAX_ORDER {
        return Err(SolveError::TooLarge(g.n()));
    }
    Ok(())
}

fn separation_sets(closed: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(closed.len() * closed.len() / 2);
    for (i, &a) in closed.iter().enumerate() {
        for &b in &closed[i + 1..] {
            out.push(a ^ b);
        }
    }
    out
}

/// `n` distinct nonempty subsets of a `k`-set need `2^k - 1 >= n`.
fn id_size_floor(n: usize) -> usize {
    (0..=MAX_ORDER).find(|&k| (1u128 << k) > n as u128).unwrap_or(MAX_ORDER)
}

/// Drops duplicates and supersets, then orders by size so that the packing
/// bound sees small constraints first.
fn minimal_sets(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k & !s == 0) {
            kept.push(s);
        }
    }
    kept
}

fn hits_all(sets: &[u64], code: u64) -> bool {
    sets.iter().all(|&s| s & code != 0)
}

/// Removes vertices greedily from the full set while it stays a hitting set.
fn greedy_upper(n: usize, sets: &[u64]) -> u64 {
    let mut code = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for v in (0..n).rev() {
        let without = code & !(1u64 << v);
        if hits_all(sets, without) {
            code = without;
        }
    }
    code
}

struct BudgetExhausted;

struct Search<'a> {
    sets: &'a [u64],
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn dfs(&mut self, chosen: u64, excluded: u64, room: usize) -> Result<Option<u64>, BudgetExhausted> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(BudgetExhausted);
        }
        let mut branch: Option<u64> = None;
        let mut packed = 0u64;
        let mut packing = 0usize;
        for &s in self.sets {
            if s & chosen != 0 {
                continue;
            }
            let avail = s & !excluded;
            if avail == 0 {
                return Ok(None);
            }
            if branch.is_none_or(|b| avail.count_ones() < b.count_ones()) {
                branch = Some(avail);
            }
            if avail & packed == 0 {
                packed |= avail;
                packing += 1;
                if packing > room {
                    return Ok(None);
                }
            }
        }
        let Some(mut candidates) = branch else {
            return Ok(Some(chosen));
        };
        let mut excluded = excluded;
        while candidates != 0 {
            let bit = candidates & candidates.wrapping_neg();
            candidates &= candidates - 1;
            if let Some(found) = self.dfs(chosen | bit, excluded, room - 1)? {
                return Ok(Some(found));
            }
            excluded |= bit;
        }
        Ok(None)
    }
}

fn solve(n: usize, sets: Vec<u64>, floor: usize, budget: u64) -> Result<SolveResult, SolveError> {
    let start = Instant::now();
    let sets = minimal_sets(sets);
    let mut search = Search { sets: &sets, nodes: 0, budget };
    for k in floor.min(n)..=n {
        match search.dfs(0, 0, k) {
            Ok(Some(code)) => {
                debug_assert_eq!(code.count_ones() as usize, k);
                return Ok(SolveResult {
                    value: code.count_ones() as usize,
                    witness: VertexSet::from_mask(code),
                    nodes_explored: search.nodes,
                    elapsed: start.elapsed(),
                });
            }
            Ok(None) => {}
            Err(BudgetExhausted) => {
                return Err(SolveError::BudgetExceeded {
                    best: VertexSet::from_mask(greedy_upper(n, &sets)),
                    nodes: search.nodes - 1,
                });
            }
        }
    }
    unreachable!("the full vertex set hits every constraint of an identifiable graph")
}
