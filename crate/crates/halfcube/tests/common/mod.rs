//! Shared test oracles: an address-placement brute-force embedder that is
//! independent of the search implementation, and an exhaustive corpus of
//! small connected graphs.

use halfcube::graph::{all_pairs_distances, Graph};
use halfcube::iso::canonical_form;

/// Brute-force scale-2 embeddability into half-cubes of dimension at most
/// `m_cap` (≤ 16): depth-first placement of addresses in vertex order with
/// full distance pruning. Coordinate symmetry is broken by requiring each
/// new address to use fresh coordinates as the lowest unused block, which
/// keeps the search complete up to coordinate permutation.
pub fn brute_embeddable(g: &Graph, m_cap: usize) -> bool {
    assert!(m_cap <= 16);
    let dm = match all_pairs_distances(g) {
        Ok(dm) => dm,
        Err(_) => return false,
    };
    let mut addresses = vec![0u32; g.n];
    place(g, &dm, m_cap, 1, &mut addresses)
}

fn place(
    g: &Graph,
    dm: &halfcube::graph::DistanceMatrix,
    m_cap: usize,
    v: usize,
    addresses: &mut Vec<u32>,
) -> bool {
    if v == g.n {
        return true;
    }
    let used = addresses[..v]
        .iter()
        .map(|a| 32 - a.leading_zeros() as usize)
        .max()
        .unwrap_or(0);
    for fresh in 0..=(m_cap - used) {
        let high = ((1u32 << fresh) - 1) << used;
        for low in 0..1u32 << used {
            let cand = low | high;
            if cand.count_ones() % 2 != 0 {
                continue;
            }
            if addresses[..v]
                .iter()
                .enumerate()
                .all(|(u, &a)| (a ^ cand).count_ones() as usize == 2 * dm.d(u, v))
            {
                addresses[v] = cand;
                if place(g, dm, m_cap, v + 1, addresses) {
                    return true;
                }
            }
        }
    }
    false
}

/// Every connected graph on `2..=max_n` vertices, one per isomorphism
/// class, built by single-vertex extensions with canonical-form dedup.
pub fn connected_corpus(max_n: usize) -> Vec<Graph> {
    let mut layer: Vec<Graph> = vec![Graph::build_plain("g1", 1, &[]).unwrap()];
    let mut all = Vec::new();
    for n in 2..=max_n {
        let mut seen = std::collections::HashSet::new();
        let mut next = Vec::new();
        for g in &layer {
            for subset in 1u32..1 << g.n {
                let mut edges = g.edges.clone();
                for b in 0..g.n {
                    if subset >> b & 1 == 1 {
                        edges.push((b, g.n));
                    }
                }
                let candidate =
                    Graph::build_plain(format!("g{n}x{}", next.len()), n, &edges).unwrap();
                let key = canonical_form(&candidate).unwrap();
                if seen.insert(key) {
                    next.push(candidate);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

#[allow(dead_code)]
pub fn corpus_sanity() {
    // connected graphs per vertex count: 1, 2, 6, 21, 112, 853
    let corpus = connected_corpus(7);
    let count = |n: usize| corpus.iter().filter(|g| g.n == n).count();
    assert_eq!(count(2), 1);
    assert_eq!(count(3), 2);
    assert_eq!(count(4), 6);
    assert_eq!(count(5), 21);
    assert_eq!(count(6), 112);
    assert_eq!(count(7), 853);
}
