//! Address reconstruction from a coordinate graph, embedding verification,
//! scale-1 collapse, and product embeddings.

use serde::Serialize;

use super::roots::CoordinateGraph;
use super::Embedding;
use crate::bits::BitVec;
use crate::graph::{cartesian_product, DistanceMatrix, Graph, GraphError, SpanningTree};

/// XOR the 2-set masks of the spanning-tree path edges, root at all-zeros.
/// `class_of_edge` maps each edge index to its class index in `root`.
pub fn assign_addresses(
    g: &Graph,
    tree: &SpanningTree,
    root: &CoordinateGraph,
    class_of_edge: &[usize],
    s: usize,
) -> Embedding {
    let m = root.m;
    let mask_of_class: Vec<BitVec> = root
        .class_pairs
        .iter()
        .map(|&(a, b)| {
            let mut w = BitVec::zeros(m);
            w.set(a, true);
            w.set(b, true);
            w
        })
        .collect();
    let mut addresses = vec![BitVec::zeros(m); g.n];
    let mut order: Vec<usize> = (0..g.n).collect();
    order.sort_by_key(|&v| depth(tree, v));
    for &v in &order {
        if v == tree.root {
            continue;
        }
        let p = tree.parent[v];
        let e = edge_index(g, p, v);
        let mut addr = addresses[p].clone();
        addr.xor_assign(&mask_of_class[class_of_edge[e]]);
        addresses[v] = addr;
    }
    Embedding {
        scale: 2,
        s,
        m,
        addresses,
    }
}

fn depth(tree: &SpanningTree, mut v: usize) -> usize {
    let mut d = 0;
    while tree.parent[v] != v {
        v = tree.parent[v];
        d += 1;
    }
    d
}

fn edge_index(g: &Graph, a: usize, b: usize) -> usize {
    let key = (a.min(b), a.max(b));
    g.edges.binary_search(&key).expect("tree edge is an edge")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    EqualityBroken,
    Exceeds,
    DuplicateAddress,
    Parity,
}

#[derive(Debug, Clone, Serialize)]
pub struct EmbedViolation {
    pub u: usize,
    pub v: usize,
    pub d: usize,
    pub d_prime: usize,
    pub kind: ViolationKind,
}

/// Pairwise re-check of an addressing against the distance matrix:
/// equality up to `s`, no excess beyond, injectivity, and even weights at
/// scale 2. Returns every violating pair.
pub fn verify_embedding(dm: &DistanceMatrix, emb: &Embedding) -> Vec<EmbedViolation> {
    let scale = emb.scale as usize;
    let mut violations = Vec::new();
    for (v, addr) in emb.addresses.iter().enumerate() {
        if emb.scale == 2 && addr.weight() % 2 != 0 {
            violations.push(EmbedViolation {
                u: v,
                v,
                d: 0,
                d_prime: 0,
                kind: ViolationKind::Parity,
            });
        }
    }
    for u in 0..dm.n {
        for v in u + 1..dm.n {
            let h = emb.addresses[u].hamming(&emb.addresses[v]);
            let d = dm.d(u, v);
            if h == 0 {
                violations.push(EmbedViolation {
                    u,
                    v,
                    d,
                    d_prime: 0,
                    kind: ViolationKind::DuplicateAddress,
                });
                continue;
            }
            if emb.scale == 2 && h % 2 != 0 {
                violations.push(EmbedViolation {
                    u,
                    v,
                    d,
                    d_prime: h,
                    kind: ViolationKind::Parity,
                });
                continue;
            }
            let d_prime = h / scale;
            if d <= emb.s {
                if d_prime != d {
                    violations.push(EmbedViolation {
                        u,
                        v,
                        d,
                        d_prime,
                        kind: ViolationKind::EqualityBroken,
                    });
                }
            } else if d_prime > d {
                violations.push(EmbedViolation {
                    u,
                    v,
                    d,
                    d_prime,
                    kind: ViolationKind::Exceeds,
                });
            }
        }
    }
    violations
}

/// Pairs beyond the truncation level whose derived distance fell short.
pub fn shortfall_pairs(dm: &DistanceMatrix, emb: &Embedding) -> Vec<(usize, usize, usize, usize)> {
    let scale = emb.scale as usize;
    let mut out = Vec::new();
    for u in 0..dm.n {
        for v in u + 1..dm.n {
            let d = dm.d(u, v);
            if d > emb.s {
                let d_prime = emb.addresses[u].hamming(&emb.addresses[v]) / scale;
                if d_prime < d {
                    out.push((u, v, d, d_prime));
                }
            }
        }
    }
    out
}

/// When no two classes share a coordinate the coordinate graph is a
/// perfect matching; merging each 2-set yields a scale-1 addressing.
pub fn collapse_to_scale1(
    emb: &Embedding,
    root: &CoordinateGraph,
) -> Result<Embedding, GraphError> {
    for (i, &(a, b)) in root.class_pairs.iter().enumerate() {
        for &(c, d) in &root.class_pairs[i + 1..] {
            if a == c || a == d || b == c || b == d {
                return Err(GraphError::InvalidParams(
                    "not collapsible: classes share a coordinate".into(),
                ));
            }
        }
    }
    let k = root.class_pairs.len();
    let addresses = emb
        .addresses
        .iter()
        .map(|addr| {
            let mut out = BitVec::zeros(k);
            for (c, &(a, _)) in root.class_pairs.iter().enumerate() {
                out.set(c, addr.get(a));
            }
            out
        })
        .collect();
    Ok(Embedding {
        scale: 1,
        s: emb.s,
        m: k,
        addresses,
    })
}

/// Concatenate the addressings of two full embeddings along the Cartesian
/// product; vertex (u1, u2) of the product receives `φ1(u1) · φ2(u2)`.
pub fn product_embed(
    g1: &Graph,
    emb1: &Embedding,
    g2: &Graph,
    emb2: &Embedding,
) -> Result<(Graph, Embedding), GraphError> {
    if emb1.scale != emb2.scale {
        return Err(GraphError::InvalidParams(
            "scale mismatch between factor embeddings".into(),
        ));
    }
    let product = cartesian_product(g1, g2);
    let m = emb1.m + emb2.m;
    let mut addresses = Vec::with_capacity(product.n);
    for a1 in &emb1.addresses {
        for a2 in &emb2.addresses {
            let mut w = BitVec::zeros(m);
            for i in 0..emb1.m {
                w.set(i, a1.get(i));
            }
            for j in 0..emb2.m {
                w.set(emb1.m + j, a2.get(j));
            }
            addresses.push(w);
        }
    }
    let emb = Embedding {
        scale: emb1.scale,
        s: emb1.s + emb2.s,
        m,
        addresses,
    };
    Ok((product, emb))
}
