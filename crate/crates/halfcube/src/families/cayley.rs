//! Cayley graphs on the symmetric group, with the generating sets that
//! reproduce the published addressings label-for-label.
//!
//! Permutations are words in one-line notation over `A, B, C, …` (`A`
//! standing for 1). An edge joins `g` to `g·s`, where `(g·s)(i) = g(s(i))`,
//! so right multiplication acts on positions: the adjacent-transposition
//! generator swaps two positions of the word, a cycle generator rotates a
//! block of positions.

use crate::graph::{Graph, GraphError};

use super::invalid;

pub const FACTORIAL_CAP: usize = 5040; // 7!

/// All permutations of {1..n} in lexicographic one-line order.
pub fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (1..=n as u8).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

pub fn perm_label(p: &[u8]) -> String {
    p.iter().map(|&x| (b'A' + x - 1) as char).collect()
}

/// Right action on positions: `(g·s)(i) = g(s(i))`.
fn compose(g: &[u8], s: &[u8]) -> Vec<u8> {
    s.iter().map(|&i| g[i as usize - 1]).collect()
}

/// How a generator acts on a one-line word.
#[derive(Clone, Copy, PartialEq)]
enum Action {
    /// `g ↦ g∘s`: rearranges positions (prefix reversal, block rotation).
    Positions,
    /// `g ↦ s∘g`: renames values (swap of the symbols k, k+1).
    Values,
}

fn inverse(p: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x as usize - 1] = i as u8 + 1;
    }
    inv
}

fn transposition(n: usize, a: usize, b: usize) -> Vec<u8> {
    let mut p: Vec<u8> = (1..=n as u8).collect();
    p.swap(a - 1, b - 1);
    p
}

/// Build the Cayley graph of `Sym(n)` for a generating set, closing it
/// under inverses first.
fn cayley_sym(
    name: String,
    n: usize,
    generators: &[Vec<u8>],
    action: Action,
) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(invalid("cayley graphs require n >= 2"));
    }
    let count: usize = (1..=n).product();
    if count > FACTORIAL_CAP {
        return Err(GraphError::SizeLimitExceeded {
            what: "group order",
            got: count,
            limit: FACTORIAL_CAP,
        });
    }
    let mut gens: Vec<Vec<u8>> = Vec::new();
    for s in generators {
        for t in [s.clone(), inverse(s)] {
            if !gens.contains(&t) {
                gens.push(t);
            }
        }
    }
    let perms = permutations(n);
    let index: std::collections::HashMap<&Vec<u8>, usize> =
        perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let labels: Vec<String> = perms.iter().map(|p| perm_label(p)).collect();
    let mut edges = Vec::new();
    for (i, g) in perms.iter().enumerate() {
        for s in &gens {
            let h = match action {
                Action::Positions => compose(g, s),
                Action::Values => compose(s, g),
            };
            let j = index[&h];
            if i < j {
                edges.push((i, j));
            }
        }
    }
    Graph::build(name, labels, &edges)
}

/// Star graph `SG(n)`: generators `(1,2), (1,3), …, (1,n)`.
pub fn star_graph(n: usize) -> Result<Graph, GraphError> {
    let gens: Vec<_> = (2..=n).map(|i| transposition(n, 1, i)).collect();
    cayley_sym(format!("SG({n})"), n, &gens, Action::Positions)
}

/// Bubble sort graph `BSG(n)`: adjacent transpositions, acting on values
/// so that the graph metric is the Kendall tau (relative inversion) count
/// and the inversion-set addressing is isometric.
pub fn bubble_sort_graph(n: usize) -> Result<Graph, GraphError> {
    let gens: Vec<_> = (1..n).map(|i| transposition(n, i, i + 1)).collect();
    cayley_sym(format!("BSG({n})"), n, &gens, Action::Values)
}

/// Pancake graph `Pc(n)`: prefix reversals of length 2..=n.
pub fn pancake_graph(n: usize) -> Result<Graph, GraphError> {
    let mut gens = Vec::new();
    for i in 2..=n {
        let mut p: Vec<u8> = (1..=n as u8).collect();
        p[..i].reverse();
        gens.push(p);
    }
    cayley_sym(format!("Pc({n})"), n, &gens, Action::Positions)
}

/// Swap-or-shift graphs. `full` builds `SOS^n_n` from the n-cycle
/// `(1,…,n)` plus the transposition `(1,2)`; otherwise `SOS^{n-1}_n` from
/// the (n-1)-cycle `(1,…,n-1)` plus `(n-1,n)`, the generator choice under
/// which the published `SOS^3_4` addressing verifies.
pub fn sos_graph(n: usize, full: bool) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid("sos graphs require n >= 3"));
    }
    let cycle_len = if full { n } else { n - 1 };
    let mut shift: Vec<u8> = (1..=n as u8).collect();
    shift[..cycle_len].rotate_left(1);
    let swap = if full {
        transposition(n, 1, 2)
    } else {
        transposition(n, n - 1, n)
    };
    let name = if full {
        format!("SOS({n},{n})")
    } else {
        format!("SOS({},{n})", n - 1)
    };
    cayley_sym(name, n, &[shift, swap], Action::Positions)
}

/// The inversion-set addressing of `BSG(n)` into `H_{n choose 2}`:
/// coordinate (i,j), i<j (lexicographic), is 1 when the word has an
/// inversion at positions (i,j). Hamming distance equals Kendall tau,
/// which is the graph distance.
pub fn bubble_sort_addressing(n: usize) -> Result<Vec<(String, String)>, GraphError> {
    if n < 2 {
        return Err(invalid("bubble sort addressing requires n >= 2"));
    }
    let count: usize = (1..=n).product();
    if count > FACTORIAL_CAP {
        return Err(GraphError::SizeLimitExceeded {
            what: "group order",
            got: count,
            limit: FACTORIAL_CAP,
        });
    }
    let mut rows = Vec::new();
    for p in permutations(n) {
        let mut bits = String::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                bits.push(if p[i] > p[j] { '1' } else { '0' });
            }
        }
        rows.push((perm_label(&p), bits));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, gp};
    use crate::graph::all_pairs_distances;
    use crate::iso::isomorphic;

    #[test]
    fn pancake3_is_c6() {
        let g = pancake_graph(3).unwrap();
        assert!(isomorphic(&g, &cycle(6).unwrap()).unwrap());
    }

    #[test]
    fn sos33_is_prism3() {
        let g = sos_graph(3, true).unwrap();
        assert!(isomorphic(&g, &gp(3, 1).unwrap()).unwrap());
    }

    #[test]
    fn sos_partial_small_is_c6() {
        // the (n-1)-shift plus (n-1,n) at n=3 degenerates to two adjacent
        // transpositions, i.e. BSG(3) = C6
        let g = sos_graph(3, false).unwrap();
        assert!(isomorphic(&g, &cycle(6).unwrap()).unwrap());
    }

    #[test]
    fn star_and_bubble_diameters() {
        assert_eq!(all_pairs_distances(&star_graph(4).unwrap()).unwrap().diameter, 4);
        assert_eq!(all_pairs_distances(&bubble_sort_graph(4).unwrap()).unwrap().diameter, 6);
        assert!(isomorphic(&bubble_sort_graph(3).unwrap(), &cycle(6).unwrap()).unwrap());
        assert!(isomorphic(&star_graph(3).unwrap(), &bubble_sort_graph(3).unwrap()).unwrap());
    }

    #[test]
    fn pancake_star_diameters() {
        assert_eq!(all_pairs_distances(&pancake_graph(4).unwrap()).unwrap().diameter, 4);
        assert_eq!(all_pairs_distances(&sos_graph(4, false).unwrap()).unwrap().diameter, 6);
        assert_eq!(all_pairs_distances(&sos_graph(4, true).unwrap()).unwrap().diameter, 6);
    }

    #[test]
    fn size_cap_enforced() {
        assert!(matches!(
            star_graph(8),
            Err(GraphError::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn bubble_addressing_n2() {
        let rows = bubble_sort_addressing(2).unwrap();
        assert_eq!(rows, vec![("AB".into(), "0".into()), ("BA".into(), "1".into())]);
    }

    #[test]
    fn bubble_addressing_isometric_n3() {
        let g = bubble_sort_graph(3).unwrap();
        let d = all_pairs_distances(&g).unwrap();
        let rows = bubble_sort_addressing(3).unwrap();
        for i in 0..g.n {
            assert_eq!(rows[i].0, g.labels[i]);
            for j in 0..g.n {
                let h = rows[i]
                    .1
                    .chars()
                    .zip(rows[j].1.chars())
                    .filter(|(a, b)| a != b)
                    .count();
                assert_eq!(h, d.d(i, j));
            }
        }
    }
}
