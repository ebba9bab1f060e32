//! I-sets and certified verification of identifying codes.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::{Graph, GraphError, Vertex, VertexSet};

/// `I(C; v) = N[v] ∩ C`.
pub fn i_set(g: &Graph, code: &VertexSet, v: Vertex) -> Result<VertexSet, GraphError> {
    if v >= g.n() {
        return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(g.closed_neighborhood(v).intersection(code))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    Valid,
    Undominated { vertex: Vertex },
    Unseparated { pair: (Vertex, Vertex) },
    NotTotalDominating { vertex: Vertex },
}

/// A code together with every vertex's I-set and the verification outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeCertificate {
    pub code: VertexSet,
    pub verdict: Verdict,
    pub iset_table: Vec<VertexSet>,
}

impl CodeCertificate {
    pub fn is_valid(&self) -> bool {
        self.verdict == Verdict::Valid
    }

    pub fn size(&self) -> usize {
        self.code.len()
    }

    /// Re-derives the verdict's witness from the stored I-set table.
    pub fn witness_consistent(&self, g: &Graph) -> bool {
        match self.verdict {
            Verdict::Valid => {
                let mut seen = std::collections::BTreeSet::new();
                self.iset_table.iter().all(|s| !s.is_empty() && seen.insert(s.clone()))
            }
            Verdict::Undominated { vertex } => self.iset_table[vertex].is_empty(),
            Verdict::Unseparated { pair: (u, v) } => {
                u < v && self.iset_table[u] == self.iset_table[v]
            }
            Verdict::NotTotalDominating { vertex } => {
                g.open_neighborhood(vertex).intersection(&self.code).is_empty()
            }
        }
    }
}

fn iset_table(g: &Graph, code: &VertexSet) -> Vec<VertexSet> {
    g.vertices().map(|v| g.closed_neighborhood(v).intersection(code)).collect()
}

fn identifying_verdict(table: &[VertexSet]) -> Verdict {
    if let Some(v) = table.iter().position(VertexSet::is_empty) {
        return Verdict::Undominated { vertex: v };
    }
    // Lexicographically smallest colliding pair: for each I-set class the
    // two smallest members, then the minimum over classes.
    let mut classes: BTreeMap<&VertexSet, (Vertex, Option<Vertex>)> = BTreeMap::new();
    for (v, s) in table.iter().enumerate() {
        classes
            .entry(s)
            .and_modify(|e| {
                if e.1.is_none() {
                    e.1 = Some(v);
                }
            })
            .or_insert((v, None));
    }
    classes
        .values()
        .filter_map(|&(u, v)| v.map(|v| (u, v)))
        .min()
        .map_or(Verdict::Valid, |pair| Verdict::Unseparated { pair })
}

/// Checks that every I-set is nonempty and all I-sets are pairwise distinct.
/// Code vertices outside `0..n` are ignored.
pub fn verify_identifying(g: &Graph, code: &VertexSet) -> CodeCertificate {
    let table = iset_table(g, code);
    CodeCertificate {
        code: code.clone(),
        verdict: identifying_verdict(&table),
        iset_table: table,
    }
}

/// Identifying and total dominating: every vertex also has a code neighbour.
/// Total domination is checked first, since it implies domination.
pub fn verify_td_identifying(g: &Graph, code: &VertexSet) -> CodeCertificate {
    let mut cert = verify_identifying(g, code);
    if let Some(v) = g
        .vertices()
        .find(|&v| !g.neighbors(v).iter().any(|&u| code.contains(u)))
    {
        cert.verdict = Verdict::NotTotalDominating { vertex: v };
    }
    cert
}

/// Bitmask check used on hot paths; `closed` from [`Graph::closed_masks`].
pub fn is_identifying_mask(closed: &[u64], code: u64) -> bool {
    let mut sigs: Vec<u64> = closed.iter().map(|&c| c & code).collect();
    if sigs.contains(&0) {
        return false;
    }
    sigs.sort_unstable();
    sigs.windows(2).all(|w| w[0] != w[1])
}
