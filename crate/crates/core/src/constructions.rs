//! Polynomial-time identifying code constructions with size guarantees.

use serde::Serialize;
use thiserror::Error;

use crate::generators::{corona, prop12_ids, Family};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::identification::{verify_identifying, verify_td_identifying, Verdict};
use crate::solver::{gamma_id, SolveError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {n} vertices, at least {min} required")]
    TooSmall { n: usize, min: usize },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph has twins of degree 2 or greater")]
    TwinsDeg2,
    #[error("graph is not twin-free")]
    NotTwinFree,
    #[error("graph is the path P_4")]
    IsP4,
    #[error("G - L(G) is not identifiable and G contains a triangle")]
    SupportPrecondition,
    #[error("root {0} has no non-leaf neighbour to receive a shifted codeword")]
    NoShiftTarget(Vertex),
    #[error("constructed code {code} is not valid: {verdict:?}")]
    Invalid { code: VertexSet, verdict: Verdict },
    #[error(transparent)]
    Solver(#[from] SolveError),
}

impl ConstructionError {
    /// True for violated preconditions, false for internal failures.
    pub fn is_precondition(&self) -> bool {
        !matches!(
            self,
            ConstructionError::NoShiftTarget(_)
                | ConstructionError::Invalid { .. }
                | ConstructionError::Solver(_)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

/// One leaf codeword moved to a vertex one layer closer to the root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Shift {
    pub removed: Vertex,
    pub added: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShiftTrace {
    pub root: Vertex,
    pub parity: Parity,
    pub layers: Vec<usize>,
    pub base_code: VertexSet,
    pub shifts: Vec<Shift>,
    pub final_code: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityShift {
    pub code: VertexSet,
    pub even: ShiftTrace,
    pub odd: ShiftTrace,
}

pub fn is_p4(g: &Graph) -> bool {
    if g.n() != 4 || g.m() != 3 || !g.is_connected() {
        return false;
    }
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    deg.sort_unstable();
    deg == [1, 1, 2, 2]
}

fn require_connected(g: &Graph, min: usize) -> Result<(), ConstructionError> {
    if g.n() < min {
        return Err(ConstructionError::TooSmall { n: g.n(), min });
    }
    if !g.is_connected() {
        return Err(ConstructionError::Disconnected);
    }
    Ok(())
}

/// Preconditions of [`parity_shift_code`].
pub fn check_parity_shift(g: &Graph) -> Result<(), ConstructionError> {
    require_connected(g, 3)?;
    if !g.is_bipartite() {
        return Err(ConstructionError::NotBipartite);
    }
    if g.has_twin_deg_ge2() {
        return Err(ConstructionError::TwinsDeg2);
    }
    Ok(())
}

/// Layered construction for connected bipartite graphs without twins of
/// degree 2 or more. Roots the graph at the lowest-id non-leaf `x`, takes
/// the even layers plus all leaves (resp. the odd layers plus all leaves),
/// and moves the codeword off every leaf that is its support's only leaf
/// and sits in a layer of the wrong parity: it goes to the support's
/// lowest-id neighbour one layer up, or to the lowest-id non-leaf neighbour
/// of `x` when the support is `x` itself. Returns the smaller code (ties
/// go to the even one), which has at most `⌊(n + ℓ)/2⌋` vertices.
pub fn parity_shift_code(g: &Graph) -> Result<ParityShift, ConstructionError> {
    check_parity_shift(g)?;
    let root = g
        .vertices()
        .find(|&v| !g.is_leaf(v))
        .expect("a connected graph on at least 3 vertices has a non-leaf");
    let layers = g.bfs_layers(root).map_err(|_| ConstructionError::Disconnected)?;
    let even = shifted_code(g, root, &layers, Parity::Even)?;
    let odd = shifted_code(g, root, &layers, Parity::Odd)?;
    let code = if odd.final_code.len() < even.final_code.len() {
        odd.final_code.clone()
    } else {
        even.final_code.clone()
    };
    Ok(ParityShift { code, even, odd })
}

fn shifted_code(
    g: &Graph,
    root: Vertex,
    layers: &[usize],
    parity: Parity,
) -> Result<ShiftTrace, ConstructionError> {
    let keep = match parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    let base_code: VertexSet = g
        .vertices()
        .filter(|&v| layers[v] % 2 == keep || g.is_leaf(v))
        .collect();
    let mut code = base_code.clone();
    let mut shifts = Vec::new();
    for leaf in g.vertices().filter(|&v| g.is_leaf(v) && layers[v] % 2 != keep) {
        let support = g.neighbors(leaf)[0];
        let lone = g.neighbors(support).iter().filter(|&&w| g.is_leaf(w)).count() == 1;
        if !lone {
            continue;
        }
        let added = if support == root {
            g.neighbors(root)
                .iter()
                .copied()
                .find(|&w| !g.is_leaf(w))
                .ok_or(ConstructionError::NoShiftTarget(root))?
        } else {
            g.neighbors(support)
                .iter()
                .copied()
                .find(|&w| layers[w] + 1 == layers[support])
                .expect("every non-root vertex has a neighbour one layer up")
        };
        code.remove(leaf);
        code.insert(added);
        shifts.push(Shift { removed: leaf, added });
    }
    Ok(ShiftTrace {
        root,
        parity,
        layers: layers.to_vec(),
        base_code,
        shifts,
        final_code: code,
    })
}

/// Preconditions of [`support_complement_code`]: connected, at least four
/// vertices, not `P_4`, and either triangle-free or `G - L(G)` identifiable.
pub fn check_support_complement(g: &Graph) -> Result<(), ConstructionError> {
    require_connected(g, 4)?;
    if is_p4(g) {
        return Err(ConstructionError::IsP4);
    }
    if !g.is_triangle_free() {
        let core: VertexSet = g.vertices().filter(|&v| !g.is_leaf(v)).collect();
        let (inner, _) = g.induced_subgraph(&core).expect("ids come from g");
        if !inner.is_identifiable() {
            return Err(ConstructionError::SupportPrecondition);
        }
    }
    Ok(())
}

/// Whole vertex set minus the lowest-id leaf of every support vertex; a
/// total dominating identifying code of size `n - s(G)`.
pub fn support_complement_code(g: &Graph) -> Result<VertexSet, ConstructionError> {
    check_support_complement(g)?;
    let mut code: VertexSet = g.vertices().collect();
    for support in &g.supports() {
        let leaf = g
            .neighbors(support)
            .iter()
            .copied()
            .find(|&w| g.is_leaf(w))
            .expect("a support vertex has a leaf");
        code.remove(leaf);
    }
    let cert = verify_td_identifying(g, &code);
    if !cert.is_valid() {
        return Err(ConstructionError::Invalid { code, verdict: cert.verdict });
    }
    Ok(code)
}

/// Which construction produced a code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ParityShift,
    SupportComplement,
    Exact,
}

/// Smallest code among the applicable polynomial constructions. Errors
/// with the parity-shift precondition failure when neither applies.
pub fn best_construction(g: &Graph) -> Result<(Method, VertexSet), ConstructionError> {
    let parity = parity_shift_code(g).map(|p| p.code);
    let support = support_complement_code(g);
    match (parity, support) {
        (Ok(a), Ok(b)) if b.len() < a.len() => Ok((Method::SupportComplement, b)),
        (Ok(a), _) => Ok((Method::ParityShift, a)),
        (Err(_), Ok(b)) => Ok((Method::SupportComplement, b)),
        (Err(e), Err(_)) => Err(e),
    }
}

/// Preconditions of [`twin_free_bipartite_code`].
pub fn check_twin_free_bipartite(g: &Graph) -> Result<(), ConstructionError> {
    require_connected(g, 3)?;
    if !g.is_twin_free() {
        return Err(ConstructionError::NotTwinFree);
    }
    if !g.is_bipartite() {
        return Err(ConstructionError::NotBipartite);
    }
    if is_p4(g) {
        return Err(ConstructionError::IsP4);
    }
    Ok(())
}

/// Code of size at most `⌊2n/3⌋` for a connected twin-free bipartite graph
/// other than `P_4`. Below 5 vertices the exact solver is used.
pub fn twin_free_bipartite_code(g: &Graph) -> Result<(Method, VertexSet), ConstructionError> {
    check_twin_free_bipartite(g)?;
    if g.n() < 5 {
        let r = gamma_id(g, None)?;
        return Ok((Method::Exact, r.witness));
    }
    best_construction(g)
}

/// `H ∘ 2` with the code `{v, v_1 : v ∈ V(H)}` of size `2n/3`, where `v_1`
/// is the pendant-path vertex adjacent to `v`.
pub fn corona2_optimal_code(h: &Graph) -> Result<(Graph, VertexSet), ConstructionError> {
    require_connected(h, 2)?;
    let g = corona(h, 2);
    let k = h.n();
    let code: VertexSet = (0..k).flat_map(|v| [v, k + 2 * v]).collect();
    let cert = verify_identifying(&g, &code);
    if !cert.is_valid() {
        return Err(ConstructionError::Invalid { code, verdict: cert.verdict });
    }
    Ok((g, code))
}

/// The star-of-7-cycles graph on `8k + 1` vertices and a code of size `5k`:
/// per cycle the star leaf `x_i`, its cycle neighbour `v_i = c_0`, the
/// neighbour `w_i = c_1`, and `c_3`, `c_5`, whose I-sets are singletons.
pub fn prop12_code(k: usize) -> Result<(Graph, VertexSet), ConstructionError> {
    if k < 1 {
        return Err(ConstructionError::TooSmall { n: k, min: 1 });
    }
    let g = Family::Prop12(k).build().expect("k >= 1");
    let code: VertexSet = (0..k)
        .flat_map(|i| {
            let (x, c) = prop12_ids(i);
            [x, c[0], c[1], c[3], c[5]]
        })
        .collect();
    let cert = verify_identifying(&g, &code);
    if !cert.is_valid() {
        return Err(ConstructionError::Invalid { code, verdict: cert.verdict });
    }
    Ok((g, code))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, fig2_left, fig2_right, path, star};
    use crate::graph::GraphProfile;
    use crate::identification::i_set;

    fn set(v: &[Vertex]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn p4_trace() {
        let r = parity_shift_code(&path(4)).unwrap();
        assert_eq!(r.even.root, 1);
        assert_eq!(r.even.base_code, set(&[0, 1, 3]));
        assert_eq!(r.even.shifts, vec![Shift { removed: 0, added: 2 }]);
        assert_eq!(r.code, set(&[1, 2, 3]));
        assert_eq!(r.odd.base_code, set(&[0, 2, 3]));
        assert_eq!(r.odd.shifts, vec![Shift { removed: 3, added: 1 }]);
        assert_eq!(r.odd.final_code, set(&[0, 1, 2]));
        assert!(verify_identifying(&path(4), &r.code).is_valid());
    }

    #[test]
    fn figure_trees_reach_bound() {
        for (g, bound) in [(fig2_left(), 5), (fig2_right(), 7)] {
            let r = parity_shift_code(&g).unwrap();
            assert!(verify_identifying(&g, &r.code).is_valid());
            assert!(r.code.len() <= bound);
        }
        assert_eq!(parity_shift_code(&fig2_left()).unwrap().code.len(), 5);
        assert_eq!(parity_shift_code(&cycle(6)).unwrap().code.len(), 3);
    }

    #[test]
    fn parity_shift_preconditions() {
        assert_eq!(parity_shift_code(&path(2)).unwrap_err(), ConstructionError::TooSmall { n: 2, min: 3 });
        assert_eq!(parity_shift_code(&cycle(5)).unwrap_err(), ConstructionError::NotBipartite);
        assert_eq!(parity_shift_code(&cycle(4)).unwrap_err(), ConstructionError::TwinsDeg2);
        let two = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(parity_shift_code(&two).unwrap_err(), ConstructionError::Disconnected);
    }

    #[test]
    fn support_complement_examples() {
        let c = support_complement_code(&star(5)).unwrap();
        assert_eq!(c, set(&[0, 2, 3, 4]));
        let corona_p3 = corona(&path(3), 1);
        assert_eq!(support_complement_code(&corona_p3).unwrap(), set(&[0, 1, 2]));
        let ds = Family::DoubleStar(2, 2).build().unwrap();
        let c = support_complement_code(&ds).unwrap();
        assert_eq!(c.len(), 4);
        assert!(verify_td_identifying(&ds, &c).is_valid());
    }

    #[test]
    fn support_complement_preconditions() {
        assert_eq!(support_complement_code(&path(4)).unwrap_err(), ConstructionError::IsP4);
        assert_eq!(
            support_complement_code(&path(3)).unwrap_err(),
            ConstructionError::TooSmall { n: 3, min: 4 }
        );
        let k3c = corona(&complete(3), 1);
        assert_eq!(
            support_complement_code(&k3c).unwrap_err(),
            ConstructionError::SupportPrecondition
        );
        // K_4 minus nothing: no leaves, but closed twins everywhere
        assert_eq!(
            support_complement_code(&complete(4)).unwrap_err(),
            ConstructionError::SupportPrecondition
        );
    }

    #[test]
    fn twin_free_bipartite() {
        let (_, c) = twin_free_bipartite_code(&path(6)).unwrap();
        assert!(c.len() <= 4);
        assert_eq!(twin_free_bipartite_code(&path(4)).unwrap_err(), ConstructionError::IsP4);
        assert_eq!(twin_free_bipartite_code(&star(4)).unwrap_err(), ConstructionError::NotTwinFree);
        let (_, c) = twin_free_bipartite_code(&path(7)).unwrap();
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn corona_codes() {
        let (g, c) = corona2_optimal_code(&path(2)).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(c.len(), 4);
        let (g, c) = corona2_optimal_code(&path(3)).unwrap();
        assert_eq!((g.n(), c.len()), (9, 6));
        let (g, c) = corona2_optimal_code(&cycle(4)).unwrap();
        assert_eq!((g.n(), c.len()), (12, 8));
        assert!(corona2_optimal_code(&path(1)).is_err());
    }

    #[test]
    fn prop12_codes() {
        for k in 1..=4 {
            let (g, c) = prop12_code(k).unwrap();
            assert_eq!(g.n(), 8 * k + 1);
            assert_eq!(c.len(), 5 * k);
            for i in 0..k {
                let (_, cyc) = prop12_ids(i);
                assert_eq!(i_set(&g, &c, cyc[3]).unwrap(), set(&[cyc[3]]));
                assert_eq!(i_set(&g, &c, cyc[5]).unwrap(), set(&[cyc[5]]));
            }
        }
        assert!(prop12_code(0).is_err());
    }

    #[test]
    fn trace_invariants_hold_on_figures() {
        for g in [fig2_left(), fig2_right(), path(9), cycle(10)] {
            let r = parity_shift_code(&g).unwrap();
            let p = GraphProfile::of(&g);
            for t in [&r.even, &r.odd] {
                let keep = if t.parity == Parity::Even { 0 } else { 1 };
                for w in g.vertices().filter(|&w| !p.leaf_set.contains(w) && t.layers[w] % 2 != keep) {
                    assert!(g.open_neighborhood(w).is_subset(&t.final_code));
                }
            }
        }
    }
}
