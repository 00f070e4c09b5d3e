//! Exact graph parameters (minimum degree, independence number,
//! connectivity, neighborhoods) and the hypothesis evaluators of the two
//! sufficient-condition theorems.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{bit, bridges, low_mask, Graph, VertexSet};
use crate::rational::ExactRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamsError {
    #[error("vertex connectivity needs at least 2 vertices, got {n}")]
    OrderTooSmall { n: usize },
    #[error("gamma must satisfy 1/3 ≤ γ ≤ 1, got {0}")]
    GammaOutOfRange(ExactRational),
    #[error("k must be a positive integer")]
    KMustBePositive,
}

/// δ(G).
pub fn min_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.degree(v)).min().expect("n ≥ 1")
}

/// `N_G(A)`: the union of the members' neighborhoods. May intersect `A` in
/// general; never does when `A` is independent.
pub fn neighborhood(g: &Graph, a: VertexSet) -> VertexSet {
    let mut out = 0u64;
    for v in a.iter() {
        out |= g.adj_row(v);
    }
    VertexSet::from_bits(out)
}

// ---------------------------------------------------------------------------
// Independence number: branch and bound on the complement-clique formulation
// with a greedy coloring bound.
// ---------------------------------------------------------------------------

fn greedy_color_order(adj: &[u64], cand: u64) -> Vec<(usize, usize)> {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut uncolored = cand;
    let mut color = 0usize;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            order.push((v, color));
            uncolored &= !bit(v);
            avail &= !(adj[v] | bit(v));
        }
    }
    order
}

fn expand_clique(adj: &[u64], cand: u64, size: usize, cur: u64, best: &mut (usize, u64)) {
    if cand == 0 {
        if size > best.0 {
            *best = (size, cur);
        }
        return;
    }
    let order = greedy_color_order(adj, cand);
    let mut cand = cand;
    for &(v, color) in order.iter().rev() {
        if size + color <= best.0 {
            return;
        }
        expand_clique(adj, cand & adj[v], size + 1, cur | bit(v), best);
        cand &= !bit(v);
    }
}

fn max_clique(adj: &[u64], n: usize) -> (usize, u64) {
    let mut best = (0usize, 0u64);
    expand_clique(adj, low_mask(n), 0, 0, &mut best);
    best
}

/// α(G) with a witness set that is independent and maximum.
pub fn independence_number(g: &Graph) -> (usize, VertexSet) {
    let n = g.n();
    let full = low_mask(n);
    let comp_adj: Vec<u64> = (0..n).map(|v| !g.adj_row(v) & full & !bit(v)).collect();
    let (size, bits) = max_clique(&comp_adj, n);
    let witness = VertexSet::from_bits(bits);
    debug_assert!(is_independent(g, witness), "witness not independent");
    debug_assert!(
        witness
            .complement(n)
            .iter()
            .all(|u| g.adj_row(u) & bits != 0),
        "maximum independent set must be maximal"
    );
    (size, witness)
}

pub(crate) fn is_independent(g: &Graph, a: VertexSet) -> bool {
    a.iter().all(|v| g.adj_row(v) & a.bits() == 0)
}

// ---------------------------------------------------------------------------
// Connectivity
// ---------------------------------------------------------------------------

/// Unit-capacity max-flow net over `2n` split nodes, Edmonds-Karp style.
struct FlowNet {
    nodes: usize,
    cap: Vec<i32>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            nodes,
            cap: vec![0; nodes * nodes],
        }
    }

    #[inline]
    fn at(&mut self, a: usize, b: usize) -> &mut i32 {
        &mut self.cap[a * self.nodes + b]
    }

    /// Augments one unit along a shortest residual path; false when none.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut parent = vec![usize::MAX; self.nodes];
        parent[s] = s;
        let mut queue = vec![s];
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            if v == t {
                break;
            }
            let row = &self.cap[v * self.nodes..(v + 1) * self.nodes];
            for (w, &cap) in row.iter().enumerate() {
                if cap > 0 && parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push(w);
                }
            }
        }
        if parent[t] == usize::MAX {
            return false;
        }
        let mut v = t;
        while v != s {
            let p = parent[v];
            *self.at(p, v) -= 1;
            *self.at(v, p) += 1;
            v = p;
        }
        true
    }

    fn max_flow(&mut self, s: usize, t: usize, stop_at: i32) -> i32 {
        let mut flow = 0;
        while flow < stop_at && self.augment(s, t) {
            flow += 1;
        }
        flow
    }
}

/// Internally vertex-disjoint s-t paths (s, t non-adjacent) by splitting
/// every other vertex into an in/out pair of unit capacity.
fn local_vertex_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.n();
    let inf = n as i32;
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { inf } else { 1 };
        *net.at(2 * v, 2 * v + 1) = c;
    }
    for u in 0..n {
        let mut nbrs = g.adj_row(u);
        while nbrs != 0 {
            let v = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            *net.at(2 * u + 1, 2 * v) = inf;
        }
    }
    net.max_flow(2 * s + 1, 2 * t, inf) as usize
}

/// κ(G): minimum number of vertices whose removal disconnects the graph or
/// reduces it to one vertex; `κ(K_n) = n − 1` by convention.
pub fn vertex_connectivity(g: &Graph) -> Result<usize, ParamsError> {
    let n = g.n();
    if n < 2 {
        return Err(ParamsError::OrderTooSmall { n });
    }
    if !g.is_connected() {
        return Ok(0);
    }
    let mut best = n - 1; // complete-graph convention
    for s in 0..n {
        for t in (s + 1)..n {
            if !g.has_edge(s, t) {
                best = best.min(local_vertex_connectivity(g, s, t));
            }
        }
    }
    Ok(best)
}

/// True iff every edge cut has at least `k` edges (`k = 1`: connected,
/// `k = 2`: connected and bridgeless).
pub fn edge_connectivity_at_least(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if !g.is_connected() {
        return false;
    }
    match k {
        1 => true,
        2 => bridges(g.adj(), low_mask(g.n())).is_empty(),
        _ => {
            let n = g.n();
            for t in 1..n {
                let mut net = FlowNet::new(n);
                for u in 0..n {
                    let mut nbrs = g.adj_row(u);
                    while nbrs != 0 {
                        let v = nbrs.trailing_zeros() as usize;
                        nbrs &= nbrs - 1;
                        *net.at(u, v) = 1;
                    }
                }
                if (net.max_flow(0, t, k as i32) as usize) < k {
                    return false;
                }
            }
            true
        }
    }
}

// ---------------------------------------------------------------------------
// Independent-set enumeration
// ---------------------------------------------------------------------------

/// All independent sets of exactly the requested size, ascending
/// lexicographic on the sorted member lists, each emitted once.
pub fn independent_sets(g: &Graph, size: usize) -> IndependentSets<'_> {
    IndependentSets {
        g,
        size,
        stack: vec![Frame {
            chosen: VertexSet::EMPTY,
            count: 0,
            start: 0,
        }],
    }
}

struct Frame {
    chosen: VertexSet,
    count: usize,
    start: usize,
}

pub struct IndependentSets<'a> {
    g: &'a Graph,
    size: usize,
    stack: Vec<Frame>,
}

impl Iterator for IndependentSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let n = self.g.n();
        while let Some(frame) = self.stack.pop() {
            if frame.count == self.size {
                debug_assert!(is_independent(self.g, frame.chosen));
                return Some(frame.chosen);
            }
            let slots = self.size - frame.count;
            // Children pushed in reverse so the smallest extension pops first.
            for v in (frame.start..n).rev() {
                if n - v < slots {
                    continue;
                }
                if self.g.adj_row(v) & frame.chosen.bits() != 0 {
                    continue;
                }
                let mut chosen = frame.chosen;
                chosen.insert(v);
                self.stack.push(Frame {
                    chosen,
                    count: frame.count + 1,
                    start: v + 1,
                });
            }
        }
        None
    }
}

// ---------------------------------------------------------------------------
// Hypothesis reports
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisCheck {
    pub name: String,
    pub required: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub theorem: String,
    pub satisfied: bool,
    pub checks: Vec<HypothesisCheck>,
    /// A violating independent set, when the neighborhood or independence
    /// side of the hypothesis failed.
    pub witness: Option<VertexSet>,
    /// True when the neighborhood condition held vacuously (no independent
    /// set of the required size exists).
    pub vacuous: bool,
}

/// Hypothesis of the minimum-degree theorem: 2-edge-connected and
/// `2δ(G) > α(G) + 4` (kept in integers; no halving).
pub fn check_thm13_hypothesis(g: &Graph) -> HypothesisReport {
    let two_ec = edge_connectivity_at_least(g, 2);
    let delta = min_degree(g);
    let (alpha, alpha_witness) = independence_number(g);
    let degree_ok = 2 * delta > alpha + 4;

    let checks = vec![
        HypothesisCheck {
            name: "two_edge_connected".into(),
            required: "G is 2-edge-connected".into(),
            actual: format!("{two_ec}"),
            pass: two_ec,
        },
        HypothesisCheck {
            name: "degree_vs_independence".into(),
            required: "2δ(G) > α(G) + 4".into(),
            actual: format!("2·{delta} = {} vs {alpha} + 4 = {}", 2 * delta, alpha + 4),
            pass: degree_ok,
        },
    ];
    HypothesisReport {
        theorem: "thm13".into(),
        satisfied: two_ec && degree_ok,
        witness: if degree_ok { None } else { Some(alpha_witness) },
        vacuous: false,
        checks,
    }
}

/// Parameters of the neighborhood theorem: positive `k` and rational
/// `γ ∈ [1/3, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Thm14Params {
    k: usize,
    gamma: ExactRational,
}

impl Thm14Params {
    pub fn new(k: usize, gamma: ExactRational) -> Result<Self, ParamsError> {
        if k == 0 {
            return Err(ParamsError::KMustBePositive);
        }
        let third = ExactRational::new(1, 3).expect("nonzero");
        if gamma < third || gamma > ExactRational::ONE {
            return Err(ParamsError::GammaOutOfRange(gamma));
        }
        Ok(Thm14Params { k, gamma })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn gamma(&self) -> ExactRational {
        self.gamma
    }

    /// `b = ⌊γ(2k+1)⌋`, always ≥ 1 over the valid range.
    pub fn b(&self) -> usize {
        let v = (self.gamma * ExactRational::from_integer(2 * self.k as i128 + 1)).floor();
        debug_assert!(v >= 1);
        v as usize
    }
}

/// Hypothesis of the neighborhood theorem: `(k+2)`-connected, order at
/// least `5k+3 − 3/(5γ−1)`, and `|N_G(A)| > γ(n−3k−2) + k + 2` for every
/// independent set `A` of size `⌊γ(2k+1)⌋`. All comparisons exact.
pub fn check_thm14_hypothesis(g: &Graph, p: &Thm14Params) -> HypothesisReport {
    let n = g.n();
    let k = p.k();
    let gamma = p.gamma();
    let rat = ExactRational::from_integer;

    // (i) connectivity
    let kappa = if n >= 2 {
        vertex_connectivity(g).expect("n ≥ 2")
    } else {
        0
    };
    let conn_ok = kappa >= k + 2;

    // (ii) order bound, multiplied through by 5γ−1 > 0.
    let d = gamma * rat(5) - ExactRational::ONE;
    let order_lhs = (rat(n as i128) - rat(5 * k as i128 + 3)) * d;
    let order_ok = order_lhs >= rat(-3);
    let order_bound = rat(5 * k as i128 + 3) - ExactRational::new(3, 1).expect("nonzero") / d;

    // (iii) neighborhood bound over every independent set of size b.
    let b = p.b();
    let threshold = gamma * rat(n as i128 - 3 * k as i128 - 2) + rat(k as i128 + 2);
    let mut found_any = false;
    let mut violation: Option<(VertexSet, usize)> = None;
    for a in independent_sets(g, b) {
        found_any = true;
        let nb = neighborhood(g, a).len();
        if rat(nb as i128) <= threshold {
            violation = Some((a, nb));
            break;
        }
    }
    let vacuous = !found_any;
    let nb_ok = violation.is_none();

    let nb_actual = match (&violation, vacuous) {
        (Some((a, nb)), _) => format!("violated at A = {a} with |N_G(A)| = {nb}"),
        (None, true) => format!("vacuous: no independent set of size {b}"),
        (None, false) => "all independent sets pass".into(),
    };
    let checks = vec![
        HypothesisCheck {
            name: "connectivity".into(),
            required: format!("κ(G) ≥ k+2 = {}", k + 2),
            actual: format!("κ(G) = {kappa}"),
            pass: conn_ok,
        },
        HypothesisCheck {
            name: "order".into(),
            required: format!("n ≥ 5k+3 − 3/(5γ−1) = {order_bound}"),
            actual: format!("n = {n}"),
            pass: order_ok,
        },
        HypothesisCheck {
            name: "neighborhood".into(),
            required: format!("|N_G(A)| > γ(n−3k−2)+k+2 = {threshold} for all independent A, |A| = {b}"),
            actual: nb_actual,
            pass: nb_ok,
        },
    ];
    HypothesisReport {
        theorem: "thm14".into(),
        satisfied: conn_ok && order_ok && nb_ok,
        witness: violation.map(|(a, _)| a),
        vacuous,
        checks,
    }
}
