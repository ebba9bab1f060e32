//! Named graph families, free tree enumeration, small-graph canonical
//! forms and recognition of 2-coronas.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};

pub const MAX_TREE_ORDER: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid parameters for {family}: {msg}")]
    InvalidParams { family: &'static str, msg: String },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("tree order {0} outside 1..={MAX_TREE_ORDER}")]
    TreeOrder(usize),
}

fn invalid(family: &'static str, msg: impl Into<String>) -> GenError {
    GenError::InvalidParams { family, msg: msg.into() }
}

/// A named graph family with its parameters.
///
/// Vertex numbering is deterministic. Stars, spiders and double stars put
/// their centres first. Coronas keep the inner graph's ids `0..h` and then
/// append each inner vertex's path in inner-id order, path vertex 1 being
/// the one joined to the inner vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    /// Star of the given order (centre 0).
    Star(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Legs of the given lengths attached to centre 0.
    Spider(Vec<usize>),
    /// Two adjacent centres with the given numbers of pendant leaves.
    DoubleStar(usize, usize),
    Corona { inner: Box<Graph>, k: usize },
    /// 1-corona of the complete graph `K_m`.
    CliqueCorona1(usize),
    /// Star `K_{1,k}` with a 7-cycle hung from every leaf.
    Prop12(usize),
    Fig2Left,
    Fig2Right,
    Petersen,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Star(_) => "star",
            Family::Complete(_) => "complete",
            Family::CompleteBipartite(..) => "complete_bipartite",
            Family::Spider(_) => "spider",
            Family::DoubleStar(..) => "double_star",
            Family::Corona { .. } => "corona",
            Family::CliqueCorona1(_) => "clique_corona1",
            Family::Prop12(_) => "prop12",
            Family::Fig2Left => "fig2_left",
            Family::Fig2Right => "fig2_right",
            Family::Petersen => "petersen",
        }
    }

    /// Parses `name params...`. A corona takes `k` followed by the inner
    /// family, e.g. `corona 2 path 3`.
    pub fn parse(name: &str, params: &[usize]) -> Result<Family, GenError> {
        let want = |family: &'static str, count: usize| -> Result<(), GenError> {
            if params.len() == count {
                Ok(())
            } else {
                Err(invalid(family, format!("expected {count} parameter(s), got {}", params.len())))
            }
        };
        Ok(match name {
            "path" => {
                want("path", 1)?;
                Family::Path(params[0])
            }
            "cycle" => {
                want("cycle", 1)?;
                Family::Cycle(params[0])
            }
            "star" => {
                want("star", 1)?;
                Family::Star(params[0])
            }
            "complete" => {
                want("complete", 1)?;
                Family::Complete(params[0])
            }
            "complete_bipartite" => {
                want("complete_bipartite", 2)?;
                Family::CompleteBipartite(params[0], params[1])
            }
            "spider" => Family::Spider(params.to_vec()),
            "double_star" => {
                want("double_star", 2)?;
                Family::DoubleStar(params[0], params[1])
            }
            "clique_corona1" => {
                want("clique_corona1", 1)?;
                Family::CliqueCorona1(params[0])
            }
            "prop12" => {
                want("prop12", 1)?;
                Family::Prop12(params[0])
            }
            "fig2_left" => {
                want("fig2_left", 0)?;
                Family::Fig2Left
            }
            "fig2_right" => {
                want("fig2_right", 0)?;
                Family::Fig2Right
            }
            "petersen" => {
                want("petersen", 0)?;
                Family::Petersen
            }
            other => return Err(GenError::UnknownFamily(other.to_string())),
        })
    }

    pub fn build(&self) -> Result<Graph, GenError> {
        generate(self)
    }
}

fn graph(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
    Graph::from_edge_list(n, edges).expect("generator produced a valid edge list")
}

pub fn path(n: usize) -> Graph {
    assert!(n >= 1);
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    graph(n, &e)
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    graph(n, &e)
}

pub fn star(order: usize) -> Graph {
    assert!(order >= 1);
    let e: Vec<_> = (1..order).map(|i| (0, i)).collect();
    graph(order, &e)
}

pub fn complete(n: usize) -> Graph {
    assert!(n >= 1);
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            e.push((u, v));
        }
    }
    graph(n, &e)
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut e = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            e.push((u, v));
        }
    }
    graph(a + b, &e)
}

pub fn corona(inner: &Graph, k: usize) -> Graph {
    let h = inner.n();
    let mut e: Vec<_> = inner.edges().collect();
    for v in 0..h {
        let base = h + v * k;
        for i in 0..k {
            let prev = if i == 0 { v } else { base + i - 1 };
            e.push((prev, base + i));
        }
    }
    graph(h * (k + 1), &e)
}

/// Builds a member of a named family.
pub fn generate(spec: &Family) -> Result<Graph, GenError> {
    Ok(match spec {
        &Family::Path(n) => {
            if n < 1 {
                return Err(invalid("path", "order must be at least 1"));
            }
            path(n)
        }
        &Family::Cycle(n) => {
            if n < 3 {
                return Err(invalid("cycle", "order must be at least 3"));
            }
            cycle(n)
        }
        &Family::Star(n) => {
            if n < 1 {
                return Err(invalid("star", "order must be at least 1"));
            }
            star(n)
        }
        &Family::Complete(n) => {
            if n < 1 {
                return Err(invalid("complete", "order must be at least 1"));
            }
            complete(n)
        }
        &Family::CompleteBipartite(a, b) => {
            if a < 1 || b < 1 {
                return Err(invalid("complete_bipartite", "both sides must be nonempty"));
            }
            complete_bipartite(a, b)
        }
        Family::Spider(legs) => {
            if legs.is_empty() || legs.contains(&0) {
                return Err(invalid("spider", "need at least one leg, each of length at least 1"));
            }
            let n = 1 + legs.iter().sum::<usize>();
            let mut e = Vec::new();
            let mut next = 1;
            for &len in legs {
                let mut prev = 0;
                for _ in 0..len {
                    e.push((prev, next));
                    prev = next;
                    next += 1;
                }
            }
            graph(n, &e)
        }
        &Family::DoubleStar(a, b) => {
            let mut e = vec![(0, 1)];
            e.extend((0..a).map(|i| (0, 2 + i)));
            e.extend((0..b).map(|i| (1, 2 + a + i)));
            graph(2 + a + b, &e)
        }
        Family::Corona { inner, k } => {
            if *k < 1 {
                return Err(invalid("corona", "k must be at least 1"));
            }
            corona(inner, *k)
        }
        &Family::CliqueCorona1(m) => {
            if m < 1 {
                return Err(invalid("clique_corona1", "m must be at least 1"));
            }
            corona(&complete(m), 1)
        }
        &Family::Prop12(k) => {
            if k < 1 {
                return Err(invalid("prop12", "k must be at least 1"));
            }
            prop12(k)
        }
        Family::Fig2Left => fig2_left(),
        Family::Fig2Right => fig2_right(),
        Family::Petersen => petersen(),
    })
}

/// Ids of the star-of-7-cycles graph for cycle `i` (0-based): the star leaf
/// `x_i = 1 + 8i` and the cycle vertices `c_j = 2 + 8i + j`, `j = 0..7`,
/// where `c_0` is joined to `x_i`. The star centre is 0.
pub fn prop12_ids(i: usize) -> (Vertex, [Vertex; 7]) {
    let x = 1 + 8 * i;
    (x, std::array::from_fn(|j| x + 1 + j))
}

fn prop12(k: usize) -> Graph {
    let mut e = Vec::new();
    for i in 0..k {
        let (x, c) = prop12_ids(i);
        e.push((0, x));
        e.push((x, c[0]));
        for j in 0..7 {
            e.push((c[j], c[(j + 1) % 7]));
        }
    }
    graph(8 * k + 1, &e)
}

/// Root 0 with two children 1 and 2, each carrying two leaves (3,4 and 5,6).
pub fn fig2_left() -> Graph {
    graph(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
}

/// Root 0 with children 1, 2 (a leaf) and 3; 1 - 4 and 3 - 5 lead to the
/// supports 4 (leaves 6, 7) and 5 (leaves 8, 9).
pub fn fig2_right() -> Graph {
    graph(10, &[(0, 1), (0, 2), (0, 3), (1, 4), (3, 5), (4, 6), (4, 7), (5, 8), (5, 9)])
}

/// The 3-regular graph of girth 5 on 10 vertices: outer 5-cycle `0..5`,
/// spokes `i - i+5`, inner pentagram.
pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    graph(10, &e)
}

/// Uniformly random labelled tree from a random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    assert!(n >= 1);
    if n <= 2 {
        return path(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    graph(n, &prufer_edges(n, &seq))
}

/// Decodes a Prüfer sequence of length `n - 2`.
pub fn prufer_edges(n: usize, seq: &[usize]) -> Vec<(Vertex, Vertex)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = leaves.pop_first().expect("a Prüfer sequence always leaves a leaf");
        edges.push((leaf.min(s), leaf.max(s)));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let last: Vec<_> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    edges
}

/// Random connected bipartite graph with no twins of degree at least 2:
/// a random tree plus up to `extra` random edges across the bipartition,
/// each kept only if it creates no such twins.
pub fn random_bipartite_no_deg2_twins(n: usize, extra: usize, seed: u64) -> Graph {
    let tree = random_tree(n, seed);
    let side = tree.bipartition().expect("trees are bipartite");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut edges: Vec<_> = tree.edges().collect();
    let mut g = tree;
    let mut attempts = 0;
    let mut added = 0;
    while added < extra && attempts < 50 * (extra + 1) {
        attempts += 1;
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if side[u] == side[v] || g.has_edge(u, v) {
            continue;
        }
        edges.push((u, v));
        let candidate = graph(n, &edges);
        if candidate.has_twin_deg_ge2() {
            edges.pop();
        } else {
            g = candidate;
            added += 1;
        }
    }
    g
}

/// Every free tree on `n` vertices exactly once up to isomorphism.
///
/// Walks canonical level sequences in the order of Wright, Richmond,
/// Odlyzko and McKay: each free tree is rooted at its centre and encoded by
/// the depths of a preorder traversal.
pub fn all_trees(n: usize) -> Result<TreeIter, GenError> {
    if !(1..=MAX_TREE_ORDER).contains(&n) {
        return Err(GenError::TreeOrder(n));
    }
    Ok(TreeIter::new(n))
}

pub struct TreeIter {
    n: usize,
    layout: Option<Vec<usize>>,
}

impl TreeIter {
    fn new(n: usize) -> Self {
        let layout = if n <= 2 {
            Some((0..n).collect())
        } else {
            // path rooted at its centre
            let mut l: Vec<usize> = (0..=n / 2).collect();
            l.extend(1..n.div_ceil(2));
            Some(l)
        };
        TreeIter { n, layout }
    }
}

impl Iterator for TreeIter {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.n <= 2 {
            let layout = self.layout.take()?;
            return Some(layout_to_graph(&layout));
        }
        let candidate = self.layout.take()?;
        let valid = next_free_tree(candidate)?;
        let out = layout_to_graph(&valid);
        self.layout = next_rooted_tree(&valid, None);
        Some(out)
    }
}

fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut stack: Vec<Vertex> = Vec::new();
    let mut edges = Vec::with_capacity(layout.len().saturating_sub(1));
    for (v, &depth) in layout.iter().enumerate() {
        stack.truncate(depth);
        if let Some(&parent) = stack.last() {
            edges.push((parent, v));
        }
        stack.push(v);
    }
    graph(layout.len(), &edges)
}

/// Beyer–Hedetniemi successor of a rooted level sequence.
fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits off the first subtree of the root: `(left, rest)`.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|&(_, &d)| d == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|d| d - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

/// Advances `candidate` to the next level sequence that is the canonical
/// centre-rooted form of a free tree.
fn next_free_tree(mut candidate: Vec<usize>) -> Option<Vec<usize>> {
    loop {
        let (left, rest) = split_tree(&candidate);
        let left_height = left.iter().copied().max().unwrap_or(0);
        let rest_height = rest.iter().copied().max().unwrap_or(0);
        let mut valid = rest_height >= left_height;
        if valid
            && rest_height == left_height
            && (left.len() > rest.len() || (left.len() == rest.len() && left > rest))
        {
            valid = false;
        }
        if valid {
            return Some(candidate);
        }
        let p = left.len();
        let mut next = next_rooted_tree(&candidate, Some(p))?;
        if candidate[p] > 2 {
            let (new_left, _) = split_tree(&next);
            let h = new_left.iter().copied().max().unwrap_or(0);
            let len = next.len();
            for (i, d) in (1..=h + 1).enumerate() {
                next[len - (h + 1) + i] = d;
            }
        }
        candidate = next;
    }
}

/// AHU canonical string of a tree, rooted at its centre (or the smaller
/// encoding over both centres). Equal strings iff isomorphic trees.
pub fn tree_canonical_form(t: &Graph) -> String {
    let centres = tree_centres(t);
    centres
        .iter()
        .map(|&c| ahu(t, c, usize::MAX))
        .min()
        .expect("a tree has one or two centres")
}

fn ahu(t: &Graph, v: Vertex, parent: Vertex) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| ahu(t, w, v))
        .collect();
    kids.sort_unstable();
    let mut s = String::from("(");
    for k in kids {
        s.push_str(&k);
    }
    s.push(')');
    s
}

fn tree_centres(t: &Graph) -> Vec<Vertex> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    let mut layer: Vec<Vertex> = t.vertices().filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &w in t.neighbors(leaf) {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Canonical adjacency form of a small graph (n ≤ 10): the lexicographically
/// smallest upper-triangle bitstring over vertex orders that respect a
/// degree-refined partition. Two graphs are isomorphic iff forms are equal.
pub fn canonical_form(g: &Graph) -> Vec<bool> {
    let n = g.n();
    assert!(n <= 10, "canonical_form is meant for desk-scale graphs");
    // colour = (degree, sorted multiset of neighbour degrees), refined once
    let mut keys: Vec<(usize, Vec<usize>)> = g
        .vertices()
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut cells: Vec<Vec<Vertex>> = Vec::new();
    for &v in &order {
        match cells.last_mut() {
            Some(cell) if keys[cell[0]] == keys[v] => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    keys.clear();
    let mut best: Option<Vec<bool>> = None;
    let mut perm = Vec::with_capacity(n);
    permute_cells(g, &cells, 0, &mut perm, &mut best);
    best.unwrap_or_default()
}

fn permute_cells(
    g: &Graph,
    cells: &[Vec<Vertex>],
    idx: usize,
    perm: &mut Vec<Vertex>,
    best: &mut Option<Vec<bool>>,
) {
    if idx == cells.len() {
        let n = perm.len();
        let mut bits = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
        for i in 0..n {
            for j in i + 1..n {
                bits.push(g.has_edge(perm[i], perm[j]));
            }
        }
        if best.as_ref().is_none_or(|b| bits < *b) {
            *best = Some(bits);
        }
        return;
    }
    let mut cell = cells[idx].clone();
    for_each_permutation(&mut cell, 0, &mut |p| {
        let len = perm.len();
        perm.extend_from_slice(p);
        permute_cells(g, cells, idx + 1, perm, best);
        perm.truncate(len);
    });
}

fn for_each_permutation(items: &mut Vec<Vertex>, k: usize, f: &mut dyn FnMut(&[Vertex])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        for_each_permutation(items, k + 1, f);
        items.swap(k, i);
    }
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_form(a) == canonical_form(b)
}

/// Every connected graph on `n ≤ 7` vertices, one per isomorphism class.
/// Built by adding a vertex with every possible neighbourhood to the
/// classes on `n - 1` vertices, then deduplicating by canonical form.
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n));
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

fn all_graphs(n: usize) -> Vec<Graph> {
    if n == 1 {
        return vec![path(1)];
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for base in all_graphs(n - 1) {
        let edges: Vec<_> = base.edges().collect();
        for mask in 0u32..(1 << (n - 1)) {
            let mut e = edges.clone();
            e.extend((0..n - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, n - 1)));
            let g = graph(n, &e);
            if seen.insert(canonical_form(&g)) {
                out.push(g);
            }
        }
    }
    out
}

/// Recovers `H` when `g = H ∘ 2`: the leaves are exactly the path ends,
/// each hanging from a degree-2 vertex whose other neighbour is a non-leaf;
/// those attachment vertices are distinct and make up the remaining third
/// of the graph. `H` is induced on the attachment vertices, relabelled in
/// increasing id order.
pub fn is_2corona(g: &Graph) -> Option<Graph> {
    let n = g.n();
    if !n.is_multiple_of(3) || n < 3 {
        return None;
    }
    let leaves = g.leaves();
    if leaves.len() != n / 3 {
        return None;
    }
    let mut middles = VertexSet::new();
    let mut anchors = VertexSet::new();
    for leaf in &leaves {
        let mid = g.neighbors(leaf)[0];
        if g.degree(mid) != 2 {
            return None;
        }
        let anchor = g.neighbors(mid).iter().copied().find(|&w| w != leaf)?;
        if g.is_leaf(anchor) || !middles.insert(mid) || !anchors.insert(anchor) {
            return None;
        }
    }
    let covered = leaves.len() + middles.len() + anchors.len();
    if covered != n
        || !leaves.intersection(&middles).is_empty()
        || !leaves.intersection(&anchors).is_empty()
        || !middles.intersection(&anchors).is_empty()
    {
        return None;
    }
    let (h, _) = g.induced_subgraph(&anchors).ok()?;
    Some(h)
}
