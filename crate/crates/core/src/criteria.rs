//! The structural criteria for factor existence and coveredness, the
//! definition-based brute-force deciders, uniformity, and the
//! cross-validation glue between them.
//!
//! The criterion route and the search route are deliberately independent
//! code paths; the harness checks that they never disagree.

use serde::Serialize;
use thiserror::Error;

use crate::factor::{find_p3_factor, FactorError, SearchOptions};
use crate::graph::{bit, bridges, low_mask, EdgeRef, Graph, VertexSet, MAX_VERTICES};
use crate::sun::{sun_stats, x_spans_edge};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriteriaError {
    #[error("the coveredness criterion applies to connected graphs only")]
    Disconnected,
    #[error("uniformity is undefined for edgeless graphs")]
    Edgeless,
    #[error("search budget exhausted after {explored} nodes")]
    BudgetExhausted { explored: u64 },
}

fn lift_factor_error(e: FactorError) -> CriteriaError {
    match e {
        FactorError::BudgetExhausted { explored } => CriteriaError::BudgetExhausted { explored },
        other => unreachable!("internal constraint violation: {other}"),
    }
}

/// A violating vertex set together with the numbers that show the violation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionWitness {
    pub x: VertexSet,
    pub sun_count: usize,
    pub bound: usize,
    /// ε(X) of the coveredness criterion; absent for the plain existence
    /// criterion.
    pub epsilon: Option<usize>,
}

/// Outcome of a quantified criterion check. `holds == false` carries the
/// lexicographically least violating `X` of minimum size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionVerdict {
    pub holds: bool,
    pub witness: Option<CriterionWitness>,
}

/// Lexicographic k-subset enumeration of `0..n`, as bitmasks.
pub(crate) struct KSubsets {
    n: usize,
    idx: Vec<usize>,
    state: SubsetState,
}

enum SubsetState {
    Fresh,
    Running,
    Done,
}

impl KSubsets {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        let state = if k > n {
            SubsetState::Done
        } else {
            SubsetState::Fresh
        };
        KSubsets {
            n,
            idx: (0..k).collect(),
            state,
        }
    }

    fn mask(&self) -> u64 {
        self.idx.iter().map(|&i| bit(i)).sum()
    }
}

impl Iterator for KSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        match self.state {
            SubsetState::Done => None,
            SubsetState::Fresh => {
                self.state = SubsetState::Running;
                Some(self.mask())
            }
            SubsetState::Running => {
                let k = self.idx.len();
                // Rightmost position that can still advance.
                let mut i = k;
                loop {
                    if i == 0 {
                        self.state = SubsetState::Done;
                        return None;
                    }
                    i -= 1;
                    if self.idx[i] < self.n - k + i {
                        break;
                    }
                }
                self.idx[i] += 1;
                for j in (i + 1)..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                Some(self.mask())
            }
        }
    }
}

/// Vertex subsets in ascending cardinality, lexicographic within each
/// cardinality, stopping at the cardinality where the criteria bounds can
/// no longer be violated: once `2|X| − 2 ≥ n − |X|`, the bound exceeds
/// every possible component count.
fn for_each_candidate_subset(n: usize, mut f: impl FnMut(u64, usize) -> bool) {
    let mut k = 0usize;
    while k <= n && 3 * k < n + 2 {
        for x in KSubsets::new(n, k) {
            if !f(x, k) {
                return;
            }
        }
        k += 1;
    }
}

fn epsilon_of(adj: &[u64], x: u64, k: usize, comps: usize, suns: usize) -> usize {
    if x_spans_edge(adj, x) {
        2
    } else if k > 0 && comps > suns {
        1
    } else {
        0
    }
}

/// The existence criterion: holds iff `sun(G−X) ≤ 2|X|` for every
/// `X ⊆ V(G)`; equivalently, iff the graph has a spanning system of
/// ≥3-vertex paths.
pub fn kaneko_check(g: &Graph) -> CriterionVerdict {
    criterion_scan(g, false)
}

/// The coveredness criterion for connected graphs: holds iff
/// `sun(G−X) ≤ 2|X| − ε(X)` for every `X ⊆ V(G)`; equivalently, iff every
/// edge lies on some factor.
pub fn covered_check_criterion(g: &Graph) -> Result<CriterionVerdict, CriteriaError> {
    if !g.is_connected() {
        return Err(CriteriaError::Disconnected);
    }
    Ok(criterion_scan(g, true))
}

fn criterion_scan(g: &Graph, with_epsilon: bool) -> CriterionVerdict {
    let n = g.n();
    let adj = g.adj();
    let full = low_mask(n);
    let mut witness = None;

    for_each_candidate_subset(n, |x, k| {
        let (comps, suns) = sun_stats(adj, full & !x);
        let eps = if with_epsilon {
            epsilon_of(adj, x, k, comps, suns)
        } else {
            0
        };
        let bound = 2 * k - eps;
        if suns > bound {
            witness = Some(CriterionWitness {
                x: VertexSet::from_bits(x),
                sun_count: suns,
                bound,
                epsilon: with_epsilon.then_some(eps),
            });
            false
        } else {
            true
        }
    });

    debug_assert!(
        witness.as_ref().is_none_or(|w| witness_rechecks(g, w)),
        "criterion witness failed independent recheck"
    );
    CriterionVerdict {
        holds: witness.is_none(),
        witness,
    }
}

fn witness_rechecks(g: &Graph, w: &CriterionWitness) -> bool {
    use crate::sun::{epsilon, sun_count};
    let suns = if w.x == g.vertices() {
        0
    } else {
        sun_count(&g.delete_vertices(w.x).expect("proper subset")).0
    };
    let eps = w.epsilon.map_or(0, |_| epsilon(g, w.x));
    suns == w.sun_count && 2 * w.x.len() - eps == w.bound && suns > w.bound
}

/// Why a graph is not covered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CoverageFailure {
    /// Edgeless graphs are not covered by convention.
    Edgeless,
    /// This edge lies on no factor.
    Uncovered(EdgeRef),
}

/// Definition-based coveredness: every edge must lie on some factor, found
/// by exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoveredVerdict {
    pub covered: bool,
    pub failure: Option<CoverageFailure>,
}

pub fn covered_check_bruteforce(
    g: &Graph,
    node_budget: Option<u64>,
) -> Result<CoveredVerdict, CriteriaError> {
    let edges = g.edges();
    if edges.is_empty() {
        return Ok(CoveredVerdict {
            covered: false,
            failure: Some(CoverageFailure::Edgeless),
        });
    }
    for e in edges {
        let opts = SearchOptions {
            require: Some(e),
            node_budget,
            ..SearchOptions::default()
        };
        if find_p3_factor(g, &opts)
            .map_err(lift_factor_error)?
            .is_none()
        {
            return Ok(CoveredVerdict {
                covered: false,
                failure: Some(CoverageFailure::Uncovered(e)),
            });
        }
    }
    Ok(CoveredVerdict {
        covered: true,
        failure: None,
    })
}

/// How [`is_uniform`] decides coveredness of each `G − e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UniformRoute {
    /// Criterion when `G − e` is connected, brute force otherwise.
    Auto,
    /// Exhaustive factor search for every edge.
    BruteForce,
}

/// The coveredness verdict for `G − witness_edge`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum InnerVerdict {
    Criterion(CriterionVerdict),
    BruteForce(CoverageFailure),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniformVerdict {
    pub uniform: bool,
    /// An edge whose deletion leaves a non-covered graph.
    pub witness_edge: Option<EdgeRef>,
    pub inner: Option<InnerVerdict>,
}

/// Uniformity: `G − e` must be covered for every edge `e`.
pub fn is_uniform(
    g: &Graph,
    route: UniformRoute,
    node_budget: Option<u64>,
) -> Result<UniformVerdict, CriteriaError> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(CriteriaError::Edgeless);
    }
    for e in edges {
        let ge = g.delete_edge(e).expect("enumerated edge");
        let inner = match route {
            UniformRoute::Auto if ge.is_connected() => {
                let verdict = covered_check_criterion(&ge).expect("connected");
                if verdict.holds {
                    None
                } else {
                    Some(InnerVerdict::Criterion(verdict))
                }
            }
            _ => {
                let verdict = covered_check_bruteforce(&ge, node_budget)?;
                verdict.failure.map(InnerVerdict::BruteForce)
            }
        };
        if let Some(inner) = inner {
            return Ok(UniformVerdict {
                uniform: false,
                witness_edge: Some(e),
                inner: Some(inner),
            });
        }
    }
    // A factor of G−e2 covering e1 is a factor of G covering e1, so a
    // uniform graph with at least two edges is itself covered.
    debug_assert!(
        g.edge_count() < 2 || {
            if g.is_connected() {
                covered_check_criterion(g).expect("connected").holds
            } else {
                covered_check_bruteforce(g, None)
                    .expect("no budget")
                    .covered
            }
        },
        "uniform graph must be covered"
    );
    Ok(UniformVerdict {
        uniform: true,
        witness_edge: None,
        inner: None,
    })
}

/// The abstract pairwise formulation of uniformity: for every ordered pair
/// of distinct edges, some factor covers the first and excludes the second.
/// Agrees with [`is_uniform`] on every graph with at least two edges; kept
/// as an independent cross-check.
pub fn is_uniform_pairwise(g: &Graph, node_budget: Option<u64>) -> Result<bool, CriteriaError> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(CriteriaError::Edgeless);
    }
    for &e1 in &edges {
        for &e2 in &edges {
            if e1 == e2 {
                continue;
            }
            let opts = SearchOptions {
                require: Some(e1),
                forbid: Some(e2),
                node_budget,
                ..SearchOptions::default()
            };
            if find_p3_factor(g, &opts)
                .map_err(lift_factor_error)?
                .is_none()
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Subset-major uniformity for connected bridgeless graphs, criterion route
/// only. Equivalent to [`is_uniform`] with the `Auto` route but far cheaper
/// on graphs that turn out uniform: a subset `X` is skipped for every edge
/// once `sun(G−X) + 2 ≤ 2|X| − 2`, because deleting a single edge raises
/// the sun count by at most 2 and ε never exceeds 2.
///
/// Returns `None` when inapplicable (disconnected or bridged input).
#[doc(hidden)]
pub fn is_uniform_criterion_fast(g: &Graph) -> Option<bool> {
    let n = g.n();
    let adj = g.adj();
    let full = low_mask(n);
    if g.edge_count() == 0 || !g.is_connected() || !bridges(adj, full).is_empty() {
        return None;
    }
    let edges = g.edges();
    let mut buf = [0u64; MAX_VERTICES];
    buf[..n].copy_from_slice(adj);

    let mut uniform = true;
    for_each_candidate_subset(n, |x, k| {
        let alive = full & !x;
        let (_, suns0) = sun_stats(adj, alive);
        if k >= 2 && suns0 + 2 <= 2 * k - 2 {
            return true;
        }
        // Edges inside X, for the ε(X) edge test in each G−e.
        let mut x_edge_count = 0usize;
        let mut x_edge = None;
        let mut scan = x;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let within = adj[v] & x & !low_mask(v + 1);
            x_edge_count += within.count_ones() as usize;
            if within != 0 && x_edge.is_none() {
                x_edge = Some(EdgeRef::new(v, within.trailing_zeros() as usize));
            }
        }
        for &e in &edges {
            let (u, v) = e.endpoints();
            buf[u] &= !bit(v);
            buf[v] &= !bit(u);
            let (comps_e, suns_e) = sun_stats(&buf[..n], alive);
            buf[u] |= bit(v);
            buf[v] |= bit(u);

            let spans = match x_edge_count {
                0 => false,
                1 => x_edge != Some(e),
                _ => true,
            };
            let eps = if spans {
                2
            } else if k > 0 && comps_e > suns_e {
                1
            } else {
                0
            };
            if suns_e > 2 * k - eps {
                uniform = false;
                return false;
            }
        }
        true
    });
    Some(uniform)
}

/// Cross-validation of the criterion routes against the search routes on a
/// single graph. Any disagreement is an internal inconsistency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossReport {
    pub kaneko_holds: bool,
    pub factor_exists: bool,
    /// Present when the graph is connected.
    pub covered_criterion: Option<bool>,
    pub covered_bruteforce: Option<bool>,
    pub consistent: bool,
}

pub fn cross_validate(g: &Graph, node_budget: Option<u64>) -> Result<CrossReport, CriteriaError> {
    let kaneko_holds = kaneko_check(g).holds;
    let opts = SearchOptions {
        node_budget,
        ..SearchOptions::default()
    };
    let factor_exists = find_p3_factor(g, &opts)
        .map_err(lift_factor_error)?
        .is_some();

    let (covered_criterion, covered_bruteforce) = if g.is_connected() {
        let crit = covered_check_criterion(g)?.holds;
        let brute = covered_check_bruteforce(g, node_budget)?.covered;
        (Some(crit), Some(brute))
    } else {
        (None, None)
    };

    let consistent = kaneko_holds == factor_exists && covered_criterion == covered_bruteforce;
    Ok(CrossReport {
        kaneko_holds,
        factor_exists,
        covered_criterion,
        covered_bruteforce,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_bipartite, copies, cycle, path, remark1_graph, remark2_graph};
    use crate::graph::Graph;

    #[test]
    fn ksubsets_lex_order() {
        let got: Vec<u64> = KSubsets::new(4, 2).collect();
        // {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}
        assert_eq!(got, vec![0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]);
        assert_eq!(KSubsets::new(3, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(KSubsets::new(2, 3).count(), 0);
    }

    #[test]
    fn kaneko_fails_on_k1_at_empty_set() {
        let verdict = kaneko_check(&complete(1).unwrap());
        assert!(!verdict.holds);
        let w = verdict.witness.unwrap();
        assert!(w.x.is_empty());
        assert_eq!(w.sun_count, 1);
        assert_eq!(w.bound, 0);
    }

    #[test]
    fn kaneko_fails_on_claw_at_center() {
        let claw = complete_bipartite(1, 3).unwrap();
        let verdict = kaneko_check(&claw);
        assert!(!verdict.holds);
        let w = verdict.witness.unwrap();
        assert_eq!(w.x, VertexSet::singleton(0));
        assert_eq!(w.sun_count, 3);
        assert_eq!(w.bound, 2);
    }

    #[test]
    fn kaneko_holds_on_p3() {
        assert!(kaneko_check(&path(3).unwrap()).holds);
        assert!(crate::factor::has_p3_factor(&path(3).unwrap()));
    }

    #[test]
    fn covered_criterion_on_p3_holds() {
        let verdict = covered_check_criterion(&path(3).unwrap()).unwrap();
        assert!(verdict.holds);
    }

    #[test]
    fn covered_criterion_requires_connected() {
        let g = copies(2, &complete(3).unwrap()).unwrap();
        assert_eq!(
            covered_check_criterion(&g),
            Err(CriteriaError::Disconnected)
        );
    }

    #[test]
    fn remark1_deleted_graph_fails_at_the_clique() {
        // K3 ∨ (3K2 ∪ 2K1) fails with sun 5 > 4 = 2·3 − 2 at X = clique.
        let g = remark1_graph(0).unwrap();
        let gp = g.delete_edge(EdgeRef::new(3, 4)).unwrap();
        let verdict = covered_check_criterion(&gp).unwrap();
        assert!(!verdict.holds);
        let w = verdict.witness.unwrap();
        assert_eq!(w.x.to_vec(), vec![0, 1, 2]);
        assert_eq!(w.sun_count, 5);
        assert_eq!(w.bound, 4);
        assert_eq!(w.epsilon, Some(2));
    }

    #[test]
    fn remark2_deleted_graph_fails_at_the_clique() {
        // K2 ∨ (2K2 ∪ 2K1) fails with sun 4 > 2 = 2·2 − 2 at X = clique.
        let g = remark2_graph(1).unwrap();
        let gp = g.delete_edge(EdgeRef::new(2, 3)).unwrap();
        let verdict = covered_check_criterion(&gp).unwrap();
        assert!(!verdict.holds);
        let w = verdict.witness.unwrap();
        assert_eq!(w.x.to_vec(), vec![0, 1]);
        assert_eq!(w.sun_count, 4);
        assert_eq!(w.bound, 2);
    }

    #[test]
    fn bruteforce_coverage_examples() {
        assert!(covered_check_bruteforce(&complete(3).unwrap(), None)
            .unwrap()
            .covered);
        assert!(covered_check_bruteforce(&cycle(4).unwrap(), None)
            .unwrap()
            .covered);
        let edgeless = Graph::edgeless(2).unwrap();
        let verdict = covered_check_bruteforce(&edgeless, None).unwrap();
        assert!(!verdict.covered);
        assert_eq!(verdict.failure, Some(CoverageFailure::Edgeless));
    }

    #[test]
    fn c4_is_uniform() {
        let verdict = is_uniform(&cycle(4).unwrap(), UniformRoute::Auto, None).unwrap();
        assert!(verdict.uniform);
        let verdict = is_uniform(&cycle(4).unwrap(), UniformRoute::BruteForce, None).unwrap();
        assert!(verdict.uniform);
    }

    #[test]
    fn k2_is_not_uniform() {
        let verdict = is_uniform(&complete(2).unwrap(), UniformRoute::Auto, None).unwrap();
        assert!(!verdict.uniform);
        assert_eq!(verdict.witness_edge, Some(EdgeRef::new(0, 1)));
        assert_eq!(
            verdict.inner,
            Some(InnerVerdict::BruteForce(CoverageFailure::Edgeless))
        );
    }

    #[test]
    fn remark1_graph_is_not_uniform_with_pendant_block_witness() {
        let g = remark1_graph(0).unwrap();
        let verdict = is_uniform(&g, UniformRoute::Auto, None).unwrap();
        assert!(!verdict.uniform);
        // The witness edge lies inside the 4K2 part: both ends ≥ 3.
        let e = verdict.witness_edge.unwrap();
        assert!(e.u() >= 3 && e.v() >= 3);
    }

    #[test]
    fn edgeless_uniformity_is_an_error() {
        assert_eq!(
            is_uniform(&Graph::edgeless(3).unwrap(), UniformRoute::Auto, None),
            Err(CriteriaError::Edgeless)
        );
    }

    #[test]
    fn fast_uniformity_agrees_on_small_cases() {
        for g in [
            cycle(4).unwrap(),
            cycle(5).unwrap(),
            complete(4).unwrap(),
            complete(5).unwrap(),
            remark2_graph(1).unwrap(),
        ] {
            let reference = is_uniform(&g, UniformRoute::Auto, None).unwrap().uniform;
            assert_eq!(is_uniform_criterion_fast(&g), Some(reference), "{g:?}");
        }
        // Bridged graphs are out of scope for the fast path.
        assert_eq!(is_uniform_criterion_fast(&path(4).unwrap()), None);
    }

    #[test]
    fn cross_validate_consistency() {
        for g in [
            complete(1).unwrap(),
            path(3).unwrap(),
            cycle(5).unwrap(),
            complete(4).unwrap(),
            copies(2, &complete(3).unwrap()).unwrap(),
        ] {
            let report = cross_validate(&g, None).unwrap();
            assert!(report.consistent, "inconsistent on {g:?}: {report:?}");
        }
    }
}
