//! Definition-based brute-force oracles, independent of the library's
//! implementation paths, plus small generators shared by the integration
//! suites.

// Each test target compiles its own copy and uses a different subset.
#![allow(dead_code)]

use pathfactor_core::graph::{Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Maximum matching size by branching on the lowest unprocessed vertex:
/// leave it unmatched, or match it with any neighbor.
pub fn brute_matching_size(g: &Graph, avail: u64) -> usize {
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

pub fn brute_has_perfect_matching(g: &Graph, mask: u64) -> bool {
    let live = mask.count_ones() as usize;
    live.is_multiple_of(2) && 2 * brute_matching_size_masked(g, mask) == live
}

fn brute_matching_size_masked(g: &Graph, avail: u64) -> usize {
    brute_matching_size(g, avail)
}

/// Factor-critical by definition, with the perfect-matching subchecks done
/// by the brute-force matcher (no blossom involvement).
pub fn brute_is_factor_critical(g: &Graph, mask: u64) -> bool {
    let live = mask.count_ones() as usize;
    if live == 0 || live.is_multiple_of(2) {
        return false;
    }
    let mut scan = mask;
    while scan != 0 {
        let x = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        if !brute_has_perfect_matching(g, mask & !bit(x)) {
            return false;
        }
    }
    true
}

/// Sun recognition straight from the definition: the graph is `K_1`, or it
/// splits as some core subset of exactly half the vertices inducing a
/// factor-critical graph, with the remaining vertices forming a pendant
/// perfect matching onto the core. Every candidate core is tried.
pub fn brute_is_sun(g: &Graph) -> bool {
    assert!(g.is_connected(), "oracle classifies connected graphs");
    let n = g.n();
    if n == 1 {
        return true;
    }
    if !n.is_multiple_of(2) {
        return false;
    }
    let half = n / 2;
    let full = (1u64 << n) - 1;
    'core: for core in 0..=full {
        if core & !full != 0 || core.count_ones() as usize != half {
            continue;
        }
        let pendants = full & !core;
        let mut hit = 0u64;
        let mut scan = pendants;
        while scan != 0 {
            let p = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let nb = g.adj_row(p);
            if nb.count_ones() != 1 || nb & core == 0 || nb & hit != 0 {
                continue 'core;
            }
            hit |= nb;
        }
        if hit != core {
            continue;
        }
        if brute_is_factor_critical(g, core) {
            return true;
        }
    }
    false
}

/// Seeded Bernoulli(1/2) graph for oracle sweeps.
pub fn random_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_connected_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let g = random_graph(n, rng);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every labeled graph on `n` vertices, as a plain loop over edge subsets.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let positions: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << positions.len();
    (0..total).map(move |mask| {
        let edges: Vec<(usize, usize)> = positions
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & bit(*i) != 0)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// All subsets of the vertices of `g`, as `VertexSet`s.
pub fn all_vertex_subsets(g: &Graph) -> impl Iterator<Item = VertexSet> {
    let full = (1u64 << g.n()) - 1;
    (0..=full).map(VertexSet::from_bits)
}
