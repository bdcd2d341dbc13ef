//! Inverse line graphs via clique partitions.
//!
//! A graph `H` is a line graph exactly when its edges partition into
//! cliques with every vertex in at most two cliques; each partition is a
//! root graph `K` together with the H-vertex → K-edge correspondence
//! (cliques become root vertices, vertices in fewer than two cliques get
//! private pendant coordinates). Enumerating every partition enumerates
//! every root up to isomorphisms fixing the correspondence, which is the
//! granularity the embedding count needs: for `H = K_3` the two partitions
//! are the triangle (root `K_3`) and the single 3-clique (root `K_{1,3}`).

use crate::graph::Graph;

/// Assignment of a coordinate 2-set to each class; the root graph `K` has
/// the coordinates as vertices and the 2-sets as edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateGraph {
    pub m: usize,
    /// The 2-set of each class, index-aligned with the class list.
    pub class_pairs: Vec<(usize, usize)>,
}

/// A root graph of a line graph, with the correspondence.
#[derive(Debug, Clone)]
pub struct RootGraph {
    /// Number of root vertices (= coordinates).
    pub m: usize,
    /// For each vertex of H, the root edge it corresponds to.
    pub edge_of: Vec<(usize, usize)>,
}

struct Krausz<'a> {
    k: usize,
    adj: &'a dyn Fn(usize, usize) -> bool,
    /// Edges of H in lexicographic order.
    h_edges: Vec<(usize, usize)>,
    covered: Vec<bool>,
    cliques_at: Vec<Vec<usize>>,
    cliques: Vec<Vec<usize>>,
    out: Vec<CoordinateGraph>,
    /// Uncovered incident edge count per vertex.
    open_deg: Vec<usize>,
}

impl<'a> Krausz<'a> {
    fn edge_index(&self, u: usize, v: usize) -> usize {
        let (a, b) = (u.min(v), u.max(v));
        self.h_edges
            .binary_search(&(a, b))
            .expect("pair is an edge")
    }

    fn run(&mut self) {
        if let Some(first) = self.covered.iter().position(|&c| !c) {
            let (u, v) = self.h_edges[first];
            if self.cliques_at[u].len() == 2 || self.cliques_at[v].len() == 2 {
                return; // the first open edge can never be covered
            }
            // candidates that could extend {u, v} to a larger clique
            let cands: Vec<usize> = (0..self.k)
                .filter(|&w| {
                    w != u
                        && w != v
                        && self.cliques_at[w].len() < 2
                        && (self.adj)(u, w)
                        && (self.adj)(v, w)
                        && !self.covered[self.edge_index(u, w)]
                        && !self.covered[self.edge_index(v, w)]
                })
                .collect();
            let mut clique = vec![u, v];
            self.extend_clique(&mut clique, &cands, 0);
        } else {
            self.emit();
        }
    }

    fn extend_clique(&mut self, clique: &mut Vec<usize>, cands: &[usize], from: usize) {
        self.commit(clique.clone());
        for (pos, &w) in cands.iter().enumerate().skip(from) {
            let ok = clique[2..].iter().all(|&q| {
                (self.adj)(q, w) && !self.covered[self.edge_index(q, w)]
            });
            if ok {
                clique.push(w);
                self.extend_clique(clique, cands, pos + 1);
                clique.pop();
            }
        }
    }

    fn commit(&mut self, clique: Vec<usize>) {
        // feasibility: members reaching their second clique must have no
        // other open edges afterwards
        let mut edge_ids = Vec::new();
        for (i, &a) in clique.iter().enumerate() {
            for &b in &clique[i + 1..] {
                edge_ids.push(self.edge_index(a, b));
            }
        }
        for &e in &edge_ids {
            self.covered[e] = true;
        }
        let id = self.cliques.len();
        for &w in &clique {
            self.cliques_at[w].push(id);
            self.open_deg[w] -= clique.len() - 1;
        }
        self.cliques.push(clique.clone());

        let saturated_ok = clique
            .iter()
            .all(|&w| self.cliques_at[w].len() < 2 || self.open_deg[w] == 0);
        if saturated_ok {
            self.run();
        }

        self.cliques.pop();
        for &w in &clique {
            self.cliques_at[w].pop();
            self.open_deg[w] += clique.len() - 1;
        }
        for &e in &edge_ids {
            self.covered[e] = false;
        }
    }

    fn emit(&mut self) {
        let mut m = self.cliques.len();
        let mut class_pairs = Vec::with_capacity(self.k);
        for v in 0..self.k {
            let pair = match self.cliques_at[v].as_slice() {
                [a, b] => (*a.min(b), *a.max(b)),
                [a] => {
                    let p = m;
                    m += 1;
                    (*a, p)
                }
                [] => {
                    let (p, q) = (m, m + 1);
                    m += 2;
                    (p, q)
                }
                _ => unreachable!("at most two cliques per vertex"),
            };
            class_pairs.push(pair);
        }
        self.out.push(CoordinateGraph { m, class_pairs });
    }
}

/// Enumerate every coordinate assignment consistent with the 0/1 class
/// adjacency given by `adj` over `k` classes.
pub(crate) fn coordinate_graphs(k: usize, adj: &dyn Fn(usize, usize) -> bool) -> Vec<CoordinateGraph> {
    let mut h_edges = Vec::new();
    let mut open_deg = vec![0usize; k];
    for a in 0..k {
        for b in a + 1..k {
            if adj(a, b) {
                h_edges.push((a, b));
                open_deg[a] += 1;
                open_deg[b] += 1;
            }
        }
    }
    let ne = h_edges.len();
    let mut kr = Krausz {
        k,
        adj,
        h_edges,
        covered: vec![false; ne],
        cliques_at: vec![Vec::new(); k],
        cliques: Vec::new(),
        out: Vec::new(),
        open_deg,
    };
    kr.run();
    kr.out
}

/// All root graphs `K` with `L(K) ≅ H`, each with the vertex-of-H →
/// edge-of-K correspondence; empty when `H` is not a line graph.
/// Isolated vertices of `H` become free-standing root edges.
pub fn inverse_line_graphs(h: &Graph) -> Vec<RootGraph> {
    let adj = |a: usize, b: usize| h.has_edge(a, b);
    coordinate_graphs(h.n, &adj)
        .into_iter()
        .map(|cg| RootGraph {
            m: cg.m,
            edge_of: cg.class_pairs,
        })
        .collect()
}
