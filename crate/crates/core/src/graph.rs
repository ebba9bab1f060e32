//! Simple undirected graphs and the structural predicates the code
//! constructions depend on (leaves, supports, girth, bipartition, twins).

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A set of vertex ids, always iterated in increasing order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        self.0.remove(&v)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.0.intersection(&other.0).copied().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.0.union(&other.0).copied().collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.0.difference(&other.0).copied().collect()
    }

    /// Largest id in the set, if any.
    pub fn max(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// Bitmask representation; every element must be below 64.
    pub fn to_mask(&self) -> u64 {
        self.iter().fold(0u64, |m, v| m | (1u64 << v))
    }

    pub fn from_mask(mask: u64) -> Self {
        let mut set = VertexSet::new();
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            set.insert(v);
            rest &= rest - 1;
        }
        set
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, Vertex>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edge_list(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut sets = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        Ok(Graph {
            adj: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn open_neighborhood(&self, v: Vertex) -> VertexSet {
        self.adj[v].iter().copied().collect()
    }

    pub fn closed_neighborhood(&self, v: Vertex) -> VertexSet {
        let mut set = self.open_neighborhood(v);
        set.insert(v);
        set
    }

    /// Closed neighbourhoods as bitmasks. Only valid for `n <= 64`.
    pub fn closed_masks(&self) -> Vec<u64> {
        debug_assert!(self.n() <= 64);
        self.vertices()
            .map(|v| self.adj[v].iter().fold(1u64 << v, |m, &u| m | (1u64 << u)))
            .collect()
    }

    /// Open neighbourhoods as bitmasks. Only valid for `n <= 64`.
    pub fn open_masks(&self) -> Vec<u64> {
        debug_assert!(self.n() <= 64);
        self.vertices()
            .map(|v| self.adj[v].iter().fold(0u64, |m, &u| m | (1u64 << u)))
            .collect()
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.degree(v) == 1
    }

    pub fn leaves(&self) -> VertexSet {
        self.vertices().filter(|&v| self.is_leaf(v)).collect()
    }

    pub fn supports(&self) -> VertexSet {
        self.vertices()
            .filter(|&v| self.adj[v].iter().any(|&u| self.is_leaf(u)))
            .collect()
    }

    pub fn isolated_vertex(&self) -> Option<Vertex> {
        self.vertices().find(|&v| self.degree(v) == 0)
    }

    /// Breadth-first distances from `root`; `None` for unreachable vertices.
    pub fn distances_from(&self, root: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Exact shortest-path distances from `root` in a connected graph.
    pub fn bfs_layers(&self, root: Vertex) -> Result<Vec<usize>, GraphError> {
        if root >= self.n() {
            return Err(GraphError::VertexOutOfRange { vertex: root, n: self.n() });
        }
        self.distances_from(root)
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or(GraphError::Disconnected)
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.m() + 1 == self.n() && self.is_connected()
    }

    /// Length of a shortest cycle. Runs a BFS from every vertex; a non-tree
    /// edge `(u, w)` met from root `r` closes a walk of length
    /// `d(u) + d(w) + 1`, and the minimum over all roots is the girth.
    pub fn girth(&self) -> Girth {
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in self.vertices() {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            'bfs: while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                    break 'bfs;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best.map_or(Girth::Infinite, Girth::Finite)
    }

    /// Two-colouring by BFS over every component; `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.n();
        let mut side: Vec<Option<u8>> = vec![None; n];
        let mut queue = VecDeque::new();
        for start in self.vertices() {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(0);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let su = side[u]?;
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(1 - su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        side.into_iter().collect()
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            !a.iter().any(|w| b.binary_search(w).is_ok())
        })
    }

    /// Pairs `(u, v)`, `u < v`, with `N(u) = N(v)`.
    pub fn open_twins(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for v in u + 1..self.n() {
                if self.adj[u] == self.adj[v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Pairs `(u, v)`, `u < v`, with `N[u] = N[v]`.
    pub fn closed_twins(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for &v in self.adj[u].iter().filter(|&&v| v > u) {
                if self.adj[u].len() != self.adj[v].len() {
                    continue;
                }
                let mut a = self.adj[u].clone();
                a.retain(|&w| w != v);
                let mut b = self.adj[v].clone();
                b.retain(|&w| w != u);
                if a == b {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True iff some open- or closed-twin pair has both degrees at least 2.
    pub fn has_twin_deg_ge2(&self) -> bool {
        self.open_twins()
            .into_iter()
            .chain(self.closed_twins())
            .any(|(u, v)| self.degree(u) >= 2 && self.degree(v) >= 2)
    }

    pub fn is_identifiable(&self) -> bool {
        self.closed_twins().is_empty()
    }

    pub fn is_twin_free(&self) -> bool {
        self.open_twins().is_empty() && self.closed_twins().is_empty()
    }

    /// Subgraph induced by `keep`, relabelled `0..keep.len()` in increasing
    /// id order. Returns the graph and the new-to-old id map.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<(Graph, Vec<Vertex>), GraphError> {
        let old: Vec<Vertex> = keep.to_vec();
        if let Some(&bad) = old.iter().find(|&&v| v >= self.n()) {
            return Err(GraphError::VertexOutOfRange { vertex: bad, n: self.n() });
        }
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let edges: Vec<_> = self
            .edges()
            .filter(|&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX)
            .map(|(u, v)| (new_id[u], new_id[v]))
            .collect();
        Ok((Graph::from_edge_list(old.len(), &edges)?, old))
    }

    /// Renders the graph in the edge-list text format.
    pub fn to_edge_list_string(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Parses the edge-list text format: `#` comment lines, a header line
    /// `n m`, then `m` lines `u v` with 0-indexed endpoints.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(GraphError::Parse {
            line: 0,
            msg: "missing header line \"n m\"".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            if edges.len() == m {
                return Err(GraphError::Parse { line, msg: format!("more than {m} edge lines") });
            }
            edges.push(parse_pair(line, l)?);
        }
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: 0,
                msg: format!("header declares {m} edges but {} were given", edges.len()),
            });
        }
        Graph::from_edge_list(n, &edges)
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), GraphError> {
    let bad = |msg: String| GraphError::Parse { line, msg };
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let tok = it.next().ok_or_else(|| bad("expected two integers".into()))?;
        tok.parse().map_err(|_| bad(format!("not a non-negative integer: {tok:?}")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(bad("trailing tokens".into()));
    }
    Ok(pair)
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Graph::parse_edge_list(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, g: usize) -> bool {
        match self {
            Girth::Finite(x) => x >= g,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Structural facts about a graph, computed once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphProfile {
    pub n: usize,
    pub m: usize,
    pub leaf_set: VertexSet,
    pub support_set: VertexSet,
    pub leaf_count: usize,
    pub support_count: usize,
    pub girth: Girth,
    pub bipartition: Option<Vec<u8>>,
    pub connected: bool,
    pub is_tree: bool,
    pub identifiable: bool,
    pub has_open_twins: bool,
    pub has_closed_twins: bool,
    pub has_twin_deg_ge2: bool,
    pub has_isolated: bool,
    pub triangle_free: bool,
}

impl GraphProfile {
    pub fn of(g: &Graph) -> Self {
        let leaf_set = g.leaves();
        let support_set = g.supports();
        let closed = g.closed_twins();
        let connected = g.is_connected();
        GraphProfile {
            n: g.n(),
            m: g.m(),
            leaf_count: leaf_set.len(),
            support_count: support_set.len(),
            leaf_set,
            support_set,
            girth: g.girth(),
            bipartition: g.bipartition(),
            connected,
            is_tree: connected && g.m() + 1 == g.n(),
            identifiable: closed.is_empty(),
            has_open_twins: !g.open_twins().is_empty(),
            has_closed_twins: !closed.is_empty(),
            has_twin_deg_ge2: g.has_twin_deg_ge2(),
            has_isolated: g.isolated_vertex().is_some(),
            triangle_free: g.is_triangle_free(),
        }
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }

    pub fn is_twin_free(&self) -> bool {
        !self.has_open_twins && !self.has_closed_twins
    }
}

pub fn profile(g: &Graph) -> GraphProfile {
    GraphProfile::of(g)
}
