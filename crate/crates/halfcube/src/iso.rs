//! Exact graph isomorphism for small graphs via canonical labeling
//! (equitable refinement with individualization backtracking).

use crate::graph::{Graph, GraphError};

pub const ISO_VERTEX_LIMIT: usize = 5000;

/// Refine the coloring to an equitable fixpoint: two vertices share a color
/// only if their neighbor-color multisets agree. Returns the number of colors.
fn refine(g: &Graph, colors: &mut [u32]) -> usize {
    loop {
        let mut sigs: Vec<(u32, Vec<u32>, usize)> = (0..g.n)
            .map(|v| {
                let mut nc: Vec<u32> = g.neighbors(v).iter().map(|&u| colors[u]).collect();
                nc.sort_unstable();
                (colors[v], nc, v)
            })
            .collect();
        sigs.sort();
        let mut next = vec![0u32; g.n];
        let mut c = 0u32;
        for i in 0..sigs.len() {
            if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                c += 1;
            }
            next[sigs[i].2] = c;
        }
        let stable = (0..g.n).all(|v| {
            (0..g.n).all(|u| (colors[v] == colors[u]) == (next[v] == next[u]))
        });
        colors.copy_from_slice(&next);
        if stable {
            let mut distinct: Vec<u32> = colors.to_vec();
            distinct.sort_unstable();
            distinct.dedup();
            return distinct.len();
        }
    }
}

fn leaf_edges(g: &Graph, colors: &[u32]) -> Vec<(usize, usize)> {
    // colors form a permutation when the partition is discrete
    let mut perm = vec![0usize; g.n];
    for (v, &c) in colors.iter().enumerate() {
        perm[v] = c as usize;
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (perm[a], perm[b]);
            (x.min(y), x.max(y))
        })
        .collect();
    edges.sort_unstable();
    edges
}

fn search(g: &Graph, colors: Vec<u32>, ncolors: usize, best: &mut Option<Vec<(usize, usize)>>) {
    if ncolors == g.n {
        let cand = leaf_edges(g, &colors);
        if best.as_ref().is_none_or(|b| cand < *b) {
            *best = Some(cand);
        }
        return;
    }
    // smallest non-singleton color class, lowest color first
    let mut counts = vec![0usize; ncolors];
    for &c in &colors {
        counts[c as usize] += 1;
    }
    let target = (0..ncolors)
        .filter(|&c| counts[c] > 1)
        .min_by_key(|&c| (counts[c], c))
        .expect("non-discrete partition has a splittable cell");
    for v in 0..g.n {
        if colors[v] as usize != target {
            continue;
        }
        let mut child = colors.clone();
        // individualize v: push it below its old cell
        for c in child.iter_mut() {
            if *c as usize > target {
                *c += 1;
            }
        }
        child[v] = target as u32 + 1;
        let k = refine(g, &mut child);
        search(g, child, k, best);
    }
}

/// Canonical edge list: identical for isomorphic graphs, distinct otherwise.
pub fn canonical_form(g: &Graph) -> Result<Vec<(usize, usize)>, GraphError> {
    if g.n > ISO_VERTEX_LIMIT {
        return Err(GraphError::SizeLimitExceeded {
            what: "vertices",
            got: g.n,
            limit: ISO_VERTEX_LIMIT,
        });
    }
    if g.n == 0 {
        return Ok(Vec::new());
    }
    let mut colors = vec![0u32; g.n];
    let k = refine(g, &mut colors);
    let mut best = None;
    search(g, colors, k, &mut best);
    Ok(best.expect("search always reaches a discrete leaf"))
}

/// Exact isomorphism test for graphs within [`ISO_VERTEX_LIMIT`].
pub fn isomorphic(g1: &Graph, g2: &Graph) -> Result<bool, GraphError> {
    if g1.n != g2.n || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let mut d1: Vec<usize> = (0..g1.n).map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..g2.n).map(|v| g2.degree(v)).collect();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(false);
    }
    Ok(canonical_form(g1)? == canonical_form(g2)?)
}
