//! Independent oracles. These use only adjacency lists from the library and
//! recompute everything else the slow, obvious way.
#![allow(dead_code)]

use std::collections::BTreeSet;

use idcode::generators::prufer_edges;
use idcode::Graph;

fn closed(g: &Graph, v: usize) -> u64 {
    g.neighbors(v).iter().fold(1u64 << v, |m, &w| m | 1 << w)
}

/// Is `code` (a bitmask) an identifying code, total dominating if asked?
pub fn naive_is_code(g: &Graph, code: u64, total: bool) -> bool {
    let mut seen = BTreeSet::new();
    for v in 0..g.n() {
        let i = closed(g, v) & code;
        if i == 0 || !seen.insert(i) {
            return false;
        }
        if total && i & !(1u64 << v) == 0 {
            return false;
        }
    }
    true
}

/// Smallest code by trying every subset in order of size.
pub fn naive_gamma(g: &Graph, total: bool) -> Option<usize> {
    let n = g.n();
    let mut masks: Vec<u64> = (0..1u64 << n).collect();
    masks.sort_by_key(|m| m.count_ones());
    masks
        .into_iter()
        .find(|&m| naive_is_code(g, m, total))
        .map(|m| m.count_ones() as usize)
}

pub fn naive_identifiable(g: &Graph) -> bool {
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    naive_is_code(g, all, false)
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> =
        adj[v].iter().filter(|&&w| w != parent).map(|&w| rooted_code(adj, w, v)).collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Isomorphism invariant of a tree: the least rooted encoding over all roots.
pub fn tree_key(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    (0..n).map(|r| rooted_code(&adj, r, usize::MAX)).min().unwrap()
}

/// Number of free trees on `n` vertices by decoding Prüfer sequences and
/// deduplicating. With `sorted`, only sequences in which label `i` occurs at
/// least as often as label `i + 1` are decoded; relabelling any tree by
/// decreasing degree gives such a sequence, so nothing is lost.
pub fn prufer_tree_count(n: usize, sorted: bool) -> usize {
    if n <= 2 {
        return 1;
    }
    let len = n - 2;
    let mut keys = BTreeSet::new();
    let mut seq = vec![0usize; len];
    loop {
        let keep = !sorted || {
            let mut count = vec![0usize; n];
            seq.iter().for_each(|&s| count[s] += 1);
            count.windows(2).all(|w| w[0] >= w[1])
        };
        if keep {
            keys.insert(tree_key(n, &prufer_edges(n, &seq)));
        }
        // odometer, skipping labels that can never appear when sorted
        let limit = if sorted { len.min(n) } else { n };
        let mut i = len;
        loop {
            if i == 0 {
                return keys.len();
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < limit {
                break;
            }
            seq[i] = 0;
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Connected graphs on `n ≤ 6` vertices up to isomorphism, by brute force
/// over labelled graphs and all vertex permutations.
pub fn naive_connected_graph_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let perms = permutations(n);
    let mut classes = BTreeSet::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::from_edge_list(n, &edges).unwrap();
        if !g.is_connected() {
            continue;
        }
        let key = perms
            .iter()
            .map(|p| {
                let mut e: Vec<_> = edges.iter().map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v]))).collect();
                e.sort();
                e
            })
            .min()
            .unwrap();
        classes.insert(key);
    }
    classes.len()
}

/// Known closed forms for the identifying code number.
pub fn path_formula(n: usize) -> usize {
    (n + 1).div_ceil(2)
}

pub fn cycle_formula(n: usize) -> usize {
    match n {
        4 | 5 => 3,
        n if n % 2 == 0 => n / 2,
        n => n.div_ceil(2) + 1,
    }
}
