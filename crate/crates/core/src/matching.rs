//! Maximum matching on general graphs (blossom contraction) and the
//! factor-critical test built on it.

use crate::graph::{bit, low_mask, EdgeRef, Graph, VertexSet};

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges of some host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<EdgeRef>,
}

impl Matching {
    pub fn edges(&self) -> &[EdgeRef] {
        &self.edges
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Vertices covered by the matching.
    pub fn covered(&self) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for e in &self.edges {
            s.insert(e.u());
            s.insert(e.v());
        }
        s
    }

    pub fn is_perfect(&self, n: usize) -> bool {
        2 * self.edges.len() == n
    }
}

/// Edmonds' augmenting-path search with blossom contraction, restricted to
/// the vertices in `alive`. Returns the mate array (`NONE` = unmatched).
/// Correct on non-bipartite graphs; odd cycles are contracted via the
/// `base` relabeling.
fn blossom_matching(adj: &[u64], alive: u64) -> Vec<usize> {
    let n = adj.len();
    let mut mate = vec![NONE; n];

    // Greedy seed matching cuts down the number of augmenting searches.
    let mut scan = alive;
    while scan != 0 {
        let v = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        if mate[v] == NONE {
            let mut free = adj[v] & alive;
            while free != 0 {
                let u = free.trailing_zeros() as usize;
                free &= free - 1;
                if mate[u] == NONE {
                    mate[v] = u;
                    mate[u] = v;
                    break;
                }
            }
        }
    }

    let mut parent = vec![NONE; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut queue: Vec<usize> = Vec::with_capacity(n);

    let mut roots = alive;
    while roots != 0 {
        let root = roots.trailing_zeros() as usize;
        roots &= roots - 1;
        if mate[root] != NONE {
            continue;
        }

        // BFS for an augmenting path from `root`.
        for v in 0..n {
            parent[v] = NONE;
            base[v] = v;
        }
        let mut in_tree_even = vec![false; n];
        in_tree_even[root] = true;
        queue.clear();
        queue.push(root);
        let mut head = 0;
        let mut augmented = false;

        'bfs: while head < queue.len() {
            let v = queue[head];
            head += 1;
            let mut nbrs = adj[v] & alive;
            while nbrs != 0 {
                let to = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                if base[v] == base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && parent[mate[to]] != NONE) {
                    // `to` is an even (outer) vertex: an odd cycle closes.
                    let cur_base = lca(&base, &mate, &parent, v, to);
                    let mut in_blossom = 0u64;
                    mark_path(&base, &mate, &mut parent, &mut in_blossom, v, cur_base, to);
                    mark_path(&base, &mate, &mut parent, &mut in_blossom, to, cur_base, v);
                    let mut scan = alive;
                    while scan != 0 {
                        let i = scan.trailing_zeros() as usize;
                        scan &= scan - 1;
                        if in_blossom & bit(base[i]) != 0 {
                            base[i] = cur_base;
                            if !in_tree_even[i] {
                                in_tree_even[i] = true;
                                queue.push(i);
                            }
                        }
                    }
                } else if parent[to] == NONE {
                    parent[to] = v;
                    if mate[to] == NONE {
                        augment(&mut mate, &parent, to);
                        augmented = true;
                        break 'bfs;
                    }
                    let next = mate[to];
                    if !in_tree_even[next] {
                        in_tree_even[next] = true;
                        queue.push(next);
                    }
                }
            }
        }
        let _ = augmented;
    }
    mate
}

/// Walks to the root from both sides to find the first common blossom base.
fn lca(base: &[usize], mate: &[usize], parent: &[usize], a: usize, b: usize) -> usize {
    let mut seen = 0u64;
    let mut v = a;
    loop {
        v = base[v];
        seen |= bit(v);
        if mate[v] == NONE {
            break;
        }
        v = parent[mate[v]];
    }
    let mut w = b;
    loop {
        w = base[w];
        if seen & bit(w) != 0 {
            return w;
        }
        w = parent[mate[w]];
    }
}

/// Marks blossom members from `v` down to the base `b`, rethreading parent
/// pointers so the contracted cycle can be traversed in both directions.
fn mark_path(
    base: &[usize],
    mate: &[usize],
    parent: &mut [usize],
    in_blossom: &mut u64,
    mut v: usize,
    b: usize,
    mut child: usize,
) {
    while base[v] != b {
        *in_blossom |= bit(base[v]);
        *in_blossom |= bit(base[mate[v]]);
        parent[v] = child;
        child = mate[v];
        v = parent[mate[v]];
    }
}

/// Flips matched/unmatched edges along the alternating path ending at `v`.
fn augment(mate: &mut [usize], parent: &[usize], mut v: usize) {
    while v != NONE {
        let pv = parent[v];
        let next = mate[pv];
        mate[v] = pv;
        mate[pv] = v;
        v = next;
    }
}

pub(crate) fn max_matching_masked(adj: &[u64], alive: u64) -> Vec<EdgeRef> {
    let mate = blossom_matching(adj, alive);
    let mut edges = Vec::new();
    let mut scan = alive;
    while scan != 0 {
        let v = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        if mate[v] != NONE && mate[v] > v {
            edges.push(EdgeRef::new(v, mate[v]));
        }
    }
    edges
}

/// Matching of maximum cardinality.
pub fn maximum_matching(g: &Graph) -> Matching {
    let edges = max_matching_masked(g.adj(), low_mask(g.n()));
    let m = Matching { edges };
    debug_assert!(matching_is_valid(g, &m), "blossom produced invalid matching");
    m
}

fn matching_is_valid(g: &Graph, m: &Matching) -> bool {
    let mut seen = 0u64;
    for e in m.edges() {
        if !g.has_edge(e.u(), e.v()) {
            return false;
        }
        let pair = bit(e.u()) | bit(e.v());
        if seen & pair != 0 {
            return false;
        }
        seen |= pair;
    }
    true
}

pub(crate) fn has_perfect_matching_masked(adj: &[u64], alive: u64) -> bool {
    let live = alive.count_ones() as usize;
    if !live.is_multiple_of(2) {
        return false;
    }
    // The empty graph is perfectly matched by the empty matching.
    if live == 0 {
        return true;
    }
    2 * max_matching_masked(adj, alive).len() == live
}

/// True iff a maximum matching covers every vertex.
pub fn has_perfect_matching(g: &Graph) -> bool {
    has_perfect_matching_masked(g.adj(), low_mask(g.n()))
}

pub(crate) fn is_factor_critical_masked(adj: &[u64], alive: u64) -> bool {
    let live = alive.count_ones() as usize;
    if live == 0 || live.is_multiple_of(2) {
        return false;
    }
    let mut scan = alive;
    while scan != 0 {
        let x = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        if !has_perfect_matching_masked(adj, alive & !bit(x)) {
            return false;
        }
    }
    true
}

/// True iff `g − x` has a perfect matching for every vertex `x`.
/// `K_1` qualifies: removing its vertex leaves the empty graph, which the
/// empty matching covers.
pub fn is_factor_critical(g: &Graph) -> bool {
    let verdict = is_factor_critical_masked(g.adj(), low_mask(g.n()));
    debug_assert!(
        !verdict || (g.n() % 2 == 1 && (g.n() == 1 || g.is_connected())),
        "factor-critical graphs are connected and of odd order"
    );
    verdict
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path};

    /// Independent oracle: maximum matching size by branching on the lowest
    /// unprocessed vertex (skip it, or match it with any neighbor).
    fn brute_matching_size(g: &Graph, avail: u64) -> usize {
        if avail == 0 {
            return 0;
        }
        let v = avail.trailing_zeros() as usize;
        let rest = avail & !bit(v);
        let mut best = brute_matching_size(g, rest);
        let mut nbrs = g.adj_row(v) & rest;
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            best = best.max(1 + brute_matching_size(g, rest & !bit(u)));
        }
        best
    }

    #[test]
    fn k4_and_c5_sizes() {
        assert_eq!(maximum_matching(&complete(4).unwrap()).size(), 2);
        assert_eq!(maximum_matching(&cycle(5).unwrap()).size(), 2);
    }

    #[test]
    fn petersen_matching_number_is_five() {
        let g = Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        )
        .unwrap();
        assert_eq!(brute_matching_size(&g, low_mask(10)), 5);
        assert_eq!(maximum_matching(&g).size(), 5);
    }

    #[test]
    fn perfect_matching_basics() {
        assert!(has_perfect_matching(&complete(2).unwrap()));
        assert!(!has_perfect_matching(&path(3).unwrap()));
        assert!(has_perfect_matching(&cycle(6).unwrap()));
    }

    #[test]
    fn factor_critical_examples() {
        assert!(is_factor_critical(&cycle(5).unwrap()));
        assert!(!is_factor_critical(&path(3).unwrap()));
        assert!(is_factor_critical(&complete(1).unwrap()));
        // Even order is never factor-critical.
        assert!(!is_factor_critical(&complete(4).unwrap()));
        // Odd cycles all are.
        for m in 1..=4 {
            assert!(is_factor_critical(&cycle(2 * m + 1).unwrap()));
        }
    }

    /// The classic blossom stress case: two triangles joined by a path,
    /// plus assorted graphs where greedy matchings get stuck.
    #[test]
    fn blossom_handles_odd_structures() {
        // Triangles 0-1-2 and 5-6-7 bridged 2-3-4-5.
        let g = Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (5, 7),
            ],
        )
        .unwrap();
        assert_eq!(maximum_matching(&g).size(), 4);
        assert!(has_perfect_matching(&g));
    }

    #[test]
    fn agrees_with_bruteforce_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xB10550);
        for n in 4..=8 {
            for _ in 0..300 {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in (u + 1)..n {
                        if rng.gen_bool(0.5) {
                            edges.push((u, v));
                        }
                    }
                }
                let g = Graph::from_edges(n, &edges).unwrap();
                assert_eq!(
                    maximum_matching(&g).size(),
                    brute_matching_size(&g, low_mask(n)),
                    "mismatch on {g:?}"
                );
            }
        }
    }
}
