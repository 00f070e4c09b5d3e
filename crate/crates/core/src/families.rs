//! Standard graph families and the two join constructions used by the
//! sharpness demonstrations.

use crate::graph::{Graph, GraphError, MAX_VERTICES};

/// The complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(n, &edges)
}

/// The complete bipartite graph `K_{m,n}`, left part labeled first.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
    if m == 0 || n == 0 {
        return Err(GraphError::BadParameter(
            "complete bipartite parts must be nonempty".into(),
        ));
    }
    let edges: Vec<_> = (0..m)
        .flat_map(|u| (0..n).map(move |v| (u, m + v)))
        .collect();
    Graph::from_edges(m + n, &edges)
}

/// The path `P_n` on vertices `0..n` in order.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

/// The cycle `C_n`, n ≥ 3.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::BadParameter(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// `m` disjoint copies of `g`, blocks labeled consecutively.
pub fn copies(m: usize, g: &Graph) -> Result<Graph, GraphError> {
    if m == 0 {
        return Err(GraphError::BadParameter("need at least one copy".into()));
    }
    let total = m * g.n();
    if total > MAX_VERTICES {
        return Err(GraphError::TooManyVertices { n: total });
    }
    let mut out = g.clone();
    for _ in 1..m {
        out = out.disjoint_union(g)?;
    }
    Ok(out)
}

/// `K_{3+t} ∨ (4+2t)K_2`: minimum degree exactly one half of
/// (independence number + 4), yet not uniform. Clique vertices are
/// `0..3+t`, then the pendant `K_2` blocks in order.
pub fn remark1_graph(t: usize) -> Result<Graph, GraphError> {
    let clique = complete(3 + t)?;
    let matching_part = copies(4 + 2 * t, &complete(2)?)?;
    clique.join(&matching_part)
}

/// `K_{k+1} ∨ (2k+1)K_2`: only `(k+1)`-connected and with neighborhood
/// unions meeting the weaker bound with equality, yet not uniform.
/// Clique vertices are `0..k+1`, then the `K_2` blocks in order.
pub fn remark2_graph(k: usize) -> Result<Graph, GraphError> {
    if k == 0 {
        return Err(GraphError::BadParameter("k must be positive".into()));
    }
    let clique = complete(k + 1)?;
    let matching_part = copies(2 * k + 1, &complete(2)?)?;
    clique.join(&matching_part)
}
