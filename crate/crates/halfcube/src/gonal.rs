//! Hypermetric inequality filters: the (2k+1)-gonal checks with ±1
//! coefficients, and the bipartite + 5-gonal partial-cube criterion.

use serde::Serialize;

use crate::graph::{is_bipartite, DistanceMatrix, Graph, GraphError};

/// A strict violation of a (2k+1)-gonal inequality: `k+1` vertices carry
/// coefficient +1 and `k` carry -1, and the same-sign distance sum exceeds
/// the cross sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GonalWitness {
    pub k: usize,
    pub positive_vertices: Vec<usize>,
    pub negative_vertices: Vec<usize>,
    pub lhs: u64,
    pub rhs: u64,
}

impl GonalWitness {
    /// Re-evaluate the inequality from the distance matrix.
    pub fn check(&self, dm: &DistanceMatrix) -> bool {
        let (lhs, rhs) = gonal_sides(dm, &self.positive_vertices, &self.negative_vertices);
        lhs == self.lhs && rhs == self.rhs && lhs > rhs
    }

    pub fn labeled(&self, g: &Graph) -> (Vec<String>, Vec<String>) {
        let lab = |vs: &[usize]| vs.iter().map(|&v| g.labels[v].clone()).collect();
        (lab(&self.positive_vertices), lab(&self.negative_vertices))
    }
}

fn gonal_sides(dm: &DistanceMatrix, pos: &[usize], neg: &[usize]) -> (u64, u64) {
    let mut lhs = 0u64;
    let mut rhs = 0u64;
    for (i, &a) in pos.iter().enumerate() {
        for &b in &pos[i + 1..] {
            lhs += dm.d(a, b) as u64;
        }
    }
    for (i, &a) in neg.iter().enumerate() {
        for &b in &neg[i + 1..] {
            lhs += dm.d(a, b) as u64;
        }
    }
    for &a in pos {
        for &b in neg {
            rhs += dm.d(a, b) as u64;
        }
    }
    (lhs, rhs)
}

/// Advance `idx` to the next lexicographic k-combination of `{0..n}`;
/// returns false once exhausted.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < i + n - k {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Scan all (k+1)/k signed splits of (2k+1)-subsets, in lexicographic
/// order, for a strict violation. `k = 1` is the triangle inequality and
/// always passes on a graph metric.
pub fn gonal_check(dm: &DistanceMatrix, k: usize) -> Result<Option<GonalWitness>, GraphError> {
    if !(1..=3).contains(&k) {
        return Err(GraphError::InvalidParams(
            "gonal checks support k in {1, 2, 3}".into(),
        ));
    }
    let m = 2 * k + 1;
    if dm.n < m {
        return Ok(None);
    }
    let mut subset: Vec<usize> = (0..m).collect();
    loop {
        if let Some(w) = check_subset(dm, k, &subset) {
            return Ok(Some(w));
        }
        if !next_combination(&mut subset, dm.n) {
            return Ok(None);
        }
    }
}

fn check_subset(dm: &DistanceMatrix, k: usize, subset: &[usize]) -> Option<GonalWitness> {
    let m = subset.len();
    // choose k positions for the negative side, lexicographically
    let mut neg_idx: Vec<usize> = (0..k).collect();
    loop {
        let neg: Vec<usize> = neg_idx.iter().map(|&i| subset[i]).collect();
        let pos: Vec<usize> = (0..m)
            .filter(|i| !neg_idx.contains(i))
            .map(|i| subset[i])
            .collect();
        let (lhs, rhs) = gonal_sides(dm, &pos, &neg);
        if lhs > rhs {
            return Some(GonalWitness {
                k,
                positive_vertices: pos,
                negative_vertices: neg,
                lhs,
                rhs,
            });
        }
        if !next_combination(&mut neg_idx, m) {
            return None;
        }
    }
}

/// The 5-gonal scan (k = 2).
pub fn five_gonal_check(dm: &DistanceMatrix) -> Option<GonalWitness> {
    gonal_check(dm, 2).expect("k = 2 is always valid")
}

#[derive(Debug, Clone, Serialize)]
pub struct PartialCubeVerdict {
    pub is_partial_cube: bool,
    pub reason: String,
}

/// Partial-cube decision: a connected graph is a partial cube iff it is
/// bipartite and its path metric satisfies all 5-gonal inequalities.
pub fn avis_partial_cube_test(g: &Graph, dm: &DistanceMatrix) -> PartialCubeVerdict {
    if !is_bipartite(g).is_bipartite() {
        return PartialCubeVerdict {
            is_partial_cube: false,
            reason: "not bipartite".into(),
        };
    }
    match five_gonal_check(dm) {
        Some(w) => PartialCubeVerdict {
            is_partial_cube: false,
            reason: format!(
                "5-gonal violation: positives {:?}, negatives {:?}, {} > {}",
                w.positive_vertices, w.negative_vertices, w.lhs, w.rhs
            ),
        },
        None => PartialCubeVerdict {
            is_partial_cube: true,
            reason: "bipartite and 5-gonal".into(),
        },
    }
}
