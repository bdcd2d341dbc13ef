//! Graphs of string-editing metrics: indel, Levenshtein and Ulam.

use crate::graph::{Graph, GraphError};

use super::cayley::{perm_label, permutations};
use super::invalid;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordKind {
    Indel,
    Levenshtein,
    Ulam,
}

/// All binary words of lengths `i..=n`, ordered by length then value;
/// the empty word is labeled `ε`.
fn binary_words(i: usize, n: usize) -> Vec<String> {
    let mut words = Vec::new();
    for len in i..=n {
        for x in 0..1usize << len {
            let w: String = (0..len)
                .rev()
                .map(|b| if x >> b & 1 == 1 { '1' } else { '0' })
                .collect();
            words.push(if w.is_empty() { "ε".to_string() } else { w });
        }
    }
    words
}

fn word_chars(w: &str) -> &str {
    if w == "ε" {
        ""
    } else {
        w
    }
}

fn is_subsequence(short: &str, long: &str) -> bool {
    let mut it = long.chars();
    short.chars().all(|c| it.by_ref().any(|d| d == c))
}

/// Indel graph `Ind_{i..n}`: adjacency is a single insertion or deletion.
pub fn indel_graph(i: usize, n: usize) -> Result<Graph, GraphError> {
    if i > n || n > 12 {
        return Err(invalid("indel requires 0 <= i <= n <= 12"));
    }
    let words = binary_words(i, n);
    let edges = word_edges(&words, false);
    Graph::build(format!("Ind({i},{n})"), words, &edges)
}

/// Levenshtein graph `Lev_{i..n}`: adjacency is a single insertion,
/// deletion, or character change.
pub fn levenshtein_graph(i: usize, n: usize) -> Result<Graph, GraphError> {
    if i > n || n > 12 {
        return Err(invalid("levenshtein requires 0 <= i <= n <= 12"));
    }
    let words = binary_words(i, n);
    let edges = word_edges(&words, true);
    Graph::build(format!("Lev({i},{n})"), words, &edges)
}

fn word_edges(words: &[String], with_substitutions: bool) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (a, wa) in words.iter().enumerate() {
        let ca = word_chars(wa);
        for (b, wb) in words.iter().enumerate().skip(a + 1) {
            let cb = word_chars(wb);
            let adjacent = if cb.len() == ca.len() + 1 {
                is_subsequence(ca, cb)
            } else if ca.len() == cb.len() + 1 {
                is_subsequence(cb, ca)
            } else if with_substitutions && ca.len() == cb.len() {
                ca.chars().zip(cb.chars()).filter(|(x, y)| x != y).count() == 1
            } else {
                false
            };
            if adjacent {
                edges.push((a, b));
            }
        }
    }
    edges
}

fn lcs_len(a: &[u8], b: &[u8]) -> usize {
    let mut dp = vec![0usize; b.len() + 1];
    for &x in a {
        let mut prev = 0;
        for (j, &y) in b.iter().enumerate() {
            let cur = dp[j + 1];
            dp[j + 1] = if x == y {
                prev + 1
            } else {
                dp[j + 1].max(dp[j])
            };
            prev = cur;
        }
    }
    dp[b.len()]
}

/// Ulam graph `Ul(n)` on `Sym(n)`: adjacency is one character move,
/// i.e. `LCS(x, y) = n - 1`.
pub fn ulam_graph(n: usize) -> Result<Graph, GraphError> {
    if !(2..=6).contains(&n) {
        return Err(invalid("ulam requires 2 <= n <= 6"));
    }
    let perms = permutations(n);
    let labels: Vec<String> = perms.iter().map(|p| perm_label(p)).collect();
    let mut edges = Vec::new();
    for (a, pa) in perms.iter().enumerate() {
        for (b, pb) in perms.iter().enumerate().skip(a + 1) {
            if lcs_len(pa, pb) == n - 1 {
                edges.push((a, b));
            }
        }
    }
    Graph::build(format!("Ul({n})"), labels, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_multipartite};
    use crate::graph::{all_pairs_distances, is_bipartite};
    use crate::iso::isomorphic;

    #[test]
    fn ind23_audit() {
        let g = indel_graph(2, 3).unwrap();
        assert_eq!(g.n, 12);
        assert!(is_bipartite(&g).is_bipartite());
        assert_eq!(all_pairs_distances(&g).unwrap().diameter, 6);
    }

    #[test]
    fn ind_small_diameters() {
        assert_eq!(all_pairs_distances(&indel_graph(0, 1).unwrap()).unwrap().diameter, 2);
        assert_eq!(all_pairs_distances(&indel_graph(0, 2).unwrap()).unwrap().diameter, 4);
        assert_eq!(all_pairs_distances(&indel_graph(3, 4).unwrap()).unwrap().diameter, 8);
    }

    #[test]
    fn lev01_is_k3() {
        let g = levenshtein_graph(0, 1).unwrap();
        assert!(isomorphic(&g, &complete(3).unwrap()).unwrap());
    }

    #[test]
    fn ulam3_is_octahedron() {
        let g = ulam_graph(3).unwrap();
        assert!(isomorphic(&g, &complete_multipartite(&[2, 2, 2]).unwrap()).unwrap());
        let u4 = ulam_graph(4).unwrap();
        assert_eq!(u4.n, 24);
        assert_eq!(all_pairs_distances(&u4).unwrap().diameter, 3);
    }
}
