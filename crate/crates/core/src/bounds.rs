//! Upper and lower bounds on the identifying code number, with their
//! applicability conditions, evaluated against exact values when known.

use serde::Serialize;

use crate::constructions::{check_parity_shift, check_support_complement, check_twin_free_bipartite};
use crate::graph::{Graph, GraphProfile, VertexSet};
use crate::solver::{gamma_id, gamma_tid, MAX_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Upper,
    Lower,
}

/// One bound: its integer value (floor for upper, ceiling for lower
/// bounds), the raw fraction, and whether it applies to the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub kind: BoundKind,
    /// Bounds the total dominating variant rather than the plain one.
    pub total: bool,
    pub applicable: bool,
    pub reason: Option<String>,
    pub value: i64,
    pub raw: String,
    pub tight: Option<bool>,
}

impl BoundEntry {
    /// The exact value this entry is compared against.
    fn reference(&self, exact: Option<usize>, exact_total: Option<usize>) -> Option<i64> {
        if self.total { exact_total } else { exact }.map(|v| v as i64)
    }

    fn violated_by(&self, exact: i64) -> bool {
        match self.kind {
            BoundKind::Upper => exact > self.value,
            BoundKind::Lower => exact < self.value,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub profile: GraphProfile,
    pub bounds: Vec<BoundEntry>,
    pub exact: Option<usize>,
    pub exact_total: Option<usize>,
    pub witness: Option<VertexSet>,
}

impl BoundReport {
    pub fn bound(&self, name: &str) -> Option<&BoundEntry> {
        self.bounds.iter().find(|b| b.name == name)
    }

    /// Applicable bounds contradicted by the exact values. For the total
    /// dominating bound the plain value is used when the total one is
    /// unknown, since it is never larger.
    pub fn violations(&self) -> Vec<&BoundEntry> {
        self.bounds
            .iter()
            .filter(|b| b.applicable)
            .filter(|b| {
                let reference = match b.reference(self.exact, self.exact_total) {
                    None if b.total => self.exact.map(|v| v as i64),
                    r => r,
                };
                reference.is_some_and(|e| b.violated_by(e))
            })
            .collect()
    }

    /// Deterministic JSON with sorted keys.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report is serialisable")
    }
}

fn floor_div(num: i64, den: i64) -> i64 {
    num.div_euclid(den)
}

fn ceil_div(num: i64, den: i64) -> i64 {
    -(-num).div_euclid(den)
}

struct Spec {
    name: &'static str,
    kind: BoundKind,
    total: bool,
    num: i64,
    den: i64,
    applies: Result<(), String>,
}

fn requires(cond: bool, reason: &str) -> Result<(), String> {
    if cond { Ok(()) } else { Err(reason.to_string()) }
}

fn tree_with(p: &GraphProfile, min_n: usize) -> Result<(), String> {
    requires(p.is_tree, "not a tree")?;
    requires(p.n >= min_n, &format!("fewer than {min_n} vertices"))
}

/// Evaluates every bound; `exact` and `exact_total` are the known exact
/// values, if any.
pub fn bound_entries(
    g: &Graph,
    p: &GraphProfile,
    exact: Option<usize>,
    exact_total: Option<usize>,
) -> Vec<BoundEntry> {
    let n = p.n as i64;
    let l = p.leaf_count as i64;
    let s = p.support_count as i64;
    let err = |e: crate::constructions::ConstructionError| e.to_string();
    let shift_ok = check_parity_shift(g).map_err(err);
    let specs = vec![
        Spec {
            name: "T1",
            kind: BoundKind::Upper,
            total: false,
            num: n + 2 * l - 2,
            den: 2,
            applies: tree_with(p, 3),
        },
        Spec {
            name: "T2",
            kind: BoundKind::Upper,
            total: false,
            num: 3 * n + 2 * l - 1,
            den: 5,
            applies: tree_with(p, 3),
        },
        Spec {
            name: "L4",
            kind: BoundKind::Upper,
            total: true,
            num: n - s,
            den: 1,
            applies: check_support_complement(g).map_err(err),
        },
        Spec {
            name: "T5",
            kind: BoundKind::Upper,
            total: false,
            num: n - s + 1,
            den: 1,
            applies: requires(p.connected, "disconnected")
                .and_then(|_| requires(p.identifiable, "not identifiable"))
                .and_then(|_| requires(p.n >= 3, "fewer than 3 vertices")),
        },
        Spec {
            name: "T6",
            kind: BoundKind::Upper,
            total: false,
            num: n + l,
            den: 2,
            applies: shift_ok.clone(),
        },
        Spec {
            name: "C7",
            kind: BoundKind::Upper,
            total: false,
            // min(⌊(n+ℓ)/2⌋, n−s) as a single fraction over 2
            num: (2 * floor_div(n + l, 2)).min(2 * (n - s)),
            den: 2,
            applies: shift_ok.and_then(|_| requires(p.n >= 5, "fewer than 5 vertices")),
        },
        Spec {
            name: "C8",
            kind: BoundKind::Upper,
            total: false,
            num: 2 * n,
            den: 3,
            applies: check_twin_free_bipartite(g).map_err(err),
        },
        Spec {
            name: "T11",
            kind: BoundKind::Upper,
            total: false,
            num: 5 * n + 2 * l,
            den: 7,
            applies: requires(p.connected, "disconnected")
                .and_then(|_| requires(p.n >= 3, "fewer than 3 vertices"))
                .and_then(|_| requires(p.girth.at_least(5), "girth below 5"))
                .and_then(|_| requires(p.identifiable, "not identifiable"))
                .and_then(|_| requires(!p.has_isolated, "isolated vertex")),
        },
        Spec {
            name: "LB1",
            kind: BoundKind::Lower,
            total: false,
            num: 3 * (n - 1),
            den: 7,
            applies: tree_with(p, 3),
        },
        Spec {
            name: "LB2",
            kind: BoundKind::Lower,
            total: false,
            num: 2 * n - s + 3,
            den: 4,
            applies: tree_with(p, 4),
        },
        Spec {
            name: "LB3",
            kind: BoundKind::Lower,
            total: false,
            num: 3 * n + l - s + 1,
            den: 7,
            applies: tree_with(p, 3),
        },
    ];
    specs
        .into_iter()
        .map(|spec| {
            let value = match spec.kind {
                BoundKind::Upper => floor_div(spec.num, spec.den),
                BoundKind::Lower => ceil_div(spec.num, spec.den),
            };
            let mut entry = BoundEntry {
                name: spec.name,
                kind: spec.kind,
                total: spec.total,
                applicable: spec.applies.is_ok(),
                reason: spec.applies.err(),
                value,
                raw: format!("{}/{}", spec.num, spec.den),
                tight: None,
            };
            if entry.applicable {
                entry.tight = entry.reference(exact, exact_total).map(|e| e == value);
            }
            entry
        })
        .collect()
}

/// Bound report for `g`; with `with_exact`, runs the exact solvers when the
/// graph is in range (identifiable, at most 64 vertices, within budget).
pub fn evaluate_bounds(g: &Graph, with_exact: bool) -> BoundReport {
    evaluate_bounds_with_budget(g, with_exact, None)
}

pub fn evaluate_bounds_with_budget(g: &Graph, with_exact: bool, budget: Option<u64>) -> BoundReport {
    let p = GraphProfile::of(g);
    let (mut exact, mut exact_total, mut witness) = (None, None, None);
    if with_exact && p.identifiable && g.n() <= MAX_ORDER {
        if let Ok(r) = gamma_id(g, budget) {
            exact = Some(r.value);
            witness = Some(r.witness);
        }
        if !p.has_isolated {
            exact_total = gamma_tid(g, budget).ok().map(|r| r.value);
        }
    }
    BoundReport {
        n: g.n(),
        bounds: bound_entries(g, &p, exact, exact_total),
        profile: p,
        exact,
        exact_total,
        witness,
    }
}
