//! Core graph representation: simple undirected labeled graphs, BFS metrics,
//! structural predicates and graph combinators.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge endpoint {index} out of range (n = {n})")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("graph is disconnected: no path between {0} and {1}")]
    Disconnected(usize, usize),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("size limit exceeded: {what} = {got} > {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        got: usize,
        limit: usize,
    },
}

/// A simple undirected graph with distinct textual vertex labels.
///
/// Edges are stored deduplicated with `i < j`, sorted lexicographically;
/// the adjacency lists are ascending. All iteration downstream is therefore
/// deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    pub name: String,
    pub n: usize,
    pub labels: Vec<String>,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip)]
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Validate and normalize a labeled edge list into a [`Graph`].
    pub fn build(
        name: impl Into<String>,
        labels: Vec<String>,
        edge_list: &[(usize, usize)],
    ) -> Result<Graph, GraphError> {
        let n = labels.len();
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l) {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
        }
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            if a >= n {
                return Err(GraphError::IndexOutOfRange { index: a, n });
            }
            if b >= n {
                return Err(GraphError::IndexOutOfRange { index: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Graph::from_normalized(name.into(), labels, edges))
    }

    /// Build with default labels `"0".."n-1"`.
    pub fn build_plain(
        name: impl Into<String>,
        n: usize,
        edge_list: &[(usize, usize)],
    ) -> Result<Graph, GraphError> {
        Graph::build(name, (0..n).map(|i| i.to_string()).collect(), edge_list)
    }

    fn from_normalized(name: String, labels: Vec<String>, edges: Vec<(usize, usize)>) -> Graph {
        let n = labels.len();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        Graph {
            name,
            n,
            labels,
            edges,
            adj,
        }
    }

    /// Rebuild adjacency lists after deserialization and re-validate.
    pub fn revalidate(self) -> Result<Graph, GraphError> {
        if self.labels.len() != self.n {
            return Err(GraphError::InvalidParams(format!(
                "label count {} does not match n = {}",
                self.labels.len(),
                self.n
            )));
        }
        Graph::build(self.name, self.labels, &self.edges)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// BFS distances from `src`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_from(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || !self.bfs_from(0).contains(&usize::MAX)
    }

    /// Length of the shortest cycle, or `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let mut best = usize::MAX;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }
}

/// Exact all-pairs shortest-path hop counts of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    pub n: usize,
    d: Vec<u32>,
    pub diameter: usize,
}

impl DistanceMatrix {
    #[inline]
    pub fn d(&self, i: usize, j: usize) -> usize {
        self.d[i * self.n + j] as usize
    }
}

/// BFS all-pairs distances. Errors with a witness pair if `g` is disconnected.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix, GraphError> {
    let n = g.n;
    let mut d = vec![0u32; n * n];
    let mut diameter = 0;
    for i in 0..n {
        let row = g.bfs_from(i);
        for (j, &dist) in row.iter().enumerate() {
            if dist == usize::MAX {
                return Err(GraphError::Disconnected(i, j));
            }
            d[i * n + j] = dist as u32;
            diameter = diameter.max(dist);
        }
    }
    Ok(DistanceMatrix { n, d, diameter })
}

/// Outcome of the 2-coloring test: a bipartition or an odd closed walk.
#[derive(Debug, Clone)]
pub enum Bipartiteness {
    Bipartite { coloring: Vec<u8> },
    OddCycle { walk: Vec<usize> },
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }
}

/// 2-color the graph by BFS; on failure return an odd closed walk as witness.
pub fn is_bipartite(g: &Graph) -> Bipartiteness {
    let n = g.n;
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    queue.push_back(v);
                } else if color[v] == color[u] {
                    // walk u -> root, v -> root, spliced at the collision edge
                    let path = |mut x: usize| {
                        let mut p = vec![x];
                        while parent[x] != usize::MAX {
                            x = parent[x];
                            p.push(x);
                        }
                        p
                    };
                    let pu = path(u);
                    let pv = path(v);
                    // trim common tail
                    let mut iu = pu.len();
                    let mut iv = pv.len();
                    while iu > 1 && iv > 1 && pu[iu - 2] == pv[iv - 2] {
                        iu -= 1;
                        iv -= 1;
                    }
                    let mut walk: Vec<usize> = pu[..iu].to_vec();
                    let mut back: Vec<usize> = pv[..iv - 1].to_vec();
                    back.reverse();
                    walk.extend(back);
                    return Bipartiteness::OddCycle { walk };
                }
            }
        }
    }
    Bipartiteness::Bipartite { coloring: color }
}

/// Cartesian (box) product. Vertex `(u1, u2)` has index `u1 * g2.n + u2`
/// and label `"l1|l2"`; edges join pairs equal in one coordinate and
/// adjacent in the other, so distances add coordinate-wise.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Graph {
    let n2 = g2.n;
    let idx = |u1: usize, u2: usize| u1 * n2 + u2;
    let labels = g1
        .labels
        .iter()
        .flat_map(|l1| g2.labels.iter().map(move |l2| format!("{l1}|{l2}")))
        .collect();
    let mut edges = Vec::new();
    for u1 in 0..g1.n {
        for &(a, b) in &g2.edges {
            edges.push((idx(u1, a), idx(u1, b)));
        }
    }
    for &(a, b) in &g1.edges {
        for u2 in 0..g2.n {
            edges.push((idx(a, u2), idx(b, u2)));
        }
    }
    Graph::build(format!("{}x{}", g1.name, g2.name), labels, &edges)
        .expect("product of valid graphs is valid")
}

/// Bipartite double cover: vertices `(v, eps)`, edges `(u,0)-(v,1)` iff `u ~ v`.
pub fn bipartite_double(g: &Graph) -> Graph {
    let labels = (0..2)
        .flat_map(|eps| g.labels.iter().map(move |l| format!("{l}|{eps}")))
        .collect();
    let mut edges = Vec::new();
    for &(a, b) in &g.edges {
        edges.push((a, g.n + b));
        edges.push((b, g.n + a));
    }
    Graph::build(format!("double({})", g.name), labels, &edges)
        .expect("double of valid graph is valid")
}

/// BFS spanning tree with deterministic (ascending-neighbor) traversal.
#[derive(Debug, Clone)]
pub struct SpanningTree {
    pub root: usize,
    /// Parent of each vertex; the root maps to itself.
    pub parent: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

pub fn bfs_tree(g: &Graph, root: usize) -> Result<SpanningTree, GraphError> {
    let mut parent = vec![usize::MAX; g.n];
    parent[root] = root;
    let mut edges = Vec::with_capacity(g.n.saturating_sub(1));
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                edges.push((u.min(v), u.max(v)));
                queue.push_back(v);
            }
        }
    }
    if let Some(v) = parent.iter().position(|&p| p == usize::MAX) {
        return Err(GraphError::Disconnected(root, v));
    }
    edges.sort_unstable();
    Ok(SpanningTree {
        root,
        parent,
        edges,
    })
}
