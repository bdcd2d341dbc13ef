//! Deterministic generators for every graph family under study, plus the
//! closed-form addressings that exist independently of the search.

mod cayley;
mod fixed;
mod words;

pub use cayley::{bubble_sort_addressing, bubble_sort_graph, pancake_graph, sos_graph, star_graph};
pub use fixed::{
    dyck_graph, hoffman_singleton, klein_cubic, platonic, shrikhande, PlatonicSolid,
};
pub use words::{indel_graph, levenshtein_graph, ulam_graph, WordKind};

use serde::{Deserialize, Serialize};

use crate::graph::{bipartite_double, Graph, GraphError};

/// A generator request: which family, with which parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    Hypercube { m: usize },
    Halfcube { m: usize },
    Johnson { m: usize, k: usize },
    Cycle { n: usize },
    Path { n: usize },
    Complete { n: usize },
    CompleteMultipartite { parts: Vec<usize> },
    CocktailParty { n: usize },
    Gp { n: usize, k: usize },
    MoebiusLadder { n: usize },
    Odd { n: usize },
    DoubleOdd { n: usize },
    DeBruijn { m: usize, n: usize },
    Kautz { m: usize, n: usize },
    Ccc { n: usize },
    Butterfly { n: usize },
    Fibonacci { n: usize },
    Lucas { n: usize },
    Indel { i: usize, n: usize },
    Levenshtein { i: usize, n: usize },
    Ulam { n: usize },
    CayleyStar { n: usize },
    CayleyBubble { n: usize },
    CayleyPancake { n: usize },
    CayleySosFull { n: usize },
    CayleySosPartial { n: usize },
    Gcr { n: usize, chords: Vec<usize> },
    HoffmanSingleton,
    Shrikhande,
    Dyck,
    KleinCubic,
    K444,
    Platonic { solid: PlatonicSolid },
}

/// Build the canonical graph for `spec`.
pub fn make(spec: &FamilySpec) -> Result<Graph, GraphError> {
    use FamilySpec::*;
    match spec {
        Hypercube { m } => hypercube(*m),
        Halfcube { m } => halfcube(*m),
        Johnson { m, k } => johnson(*m, *k),
        Cycle { n } => cycle(*n),
        Path { n } => path(*n),
        Complete { n } => complete(*n),
        CompleteMultipartite { parts } => complete_multipartite(parts),
        CocktailParty { n } => cocktail_party(*n),
        Gp { n, k } => gp(*n, *k),
        MoebiusLadder { n } => moebius_ladder(*n),
        Odd { n } => odd_graph(*n),
        DoubleOdd { n } => double_odd(*n),
        DeBruijn { m, n } => debruijn(*m, *n),
        Kautz { m, n } => kautz(*m, *n),
        Ccc { n } => ccc(*n),
        Butterfly { n } => butterfly(*n),
        Fibonacci { n } => fibonacci_like(false, *n),
        Lucas { n } => fibonacci_like(true, *n),
        Indel { i, n } => indel_graph(*i, *n),
        Levenshtein { i, n } => levenshtein_graph(*i, *n),
        Ulam { n } => ulam_graph(*n),
        CayleyStar { n } => star_graph(*n),
        CayleyBubble { n } => bubble_sort_graph(*n),
        CayleyPancake { n } => pancake_graph(*n),
        CayleySosFull { n } => sos_graph(*n, true),
        CayleySosPartial { n } => sos_graph(*n, false),
        Gcr { n, chords } => gcr(*n, chords),
        HoffmanSingleton => hoffman_singleton(),
        Shrikhande => shrikhande(),
        Dyck => dyck_graph(),
        KleinCubic => klein_cubic(),
        K444 => complete_multipartite(&[4, 4, 4]),
        Platonic { solid } => platonic(*solid),
    }
}

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidParams(msg.into())
}

fn bitstring(x: usize, width: usize) -> String {
    (0..width)
        .rev()
        .map(|b| if x >> b & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// `H_m`: binary strings of length `m`, adjacent at Hamming distance 1.
pub fn hypercube(m: usize) -> Result<Graph, GraphError> {
    if m == 0 || m > 20 {
        return Err(invalid("hypercube requires 1 <= m <= 20"));
    }
    let n = 1usize << m;
    let labels = (0..n).map(|x| bitstring(x, m)).collect();
    let mut edges = Vec::new();
    for x in 0..n {
        for b in 0..m {
            let y = x ^ (1 << b);
            if x < y {
                edges.push((x, y));
            }
        }
    }
    Graph::build(format!("H_{m}"), labels, &edges)
}

/// `½H_m`: even-weight binary strings of length `m`, adjacent at Hamming 2.
pub fn halfcube(m: usize) -> Result<Graph, GraphError> {
    if m < 2 || m > 20 {
        return Err(invalid("halfcube requires 2 <= m <= 20"));
    }
    let verts: Vec<usize> = (0..1usize << m)
        .filter(|x| x.count_ones() % 2 == 0)
        .collect();
    let labels = verts.iter().map(|&x| bitstring(x, m)).collect();
    let mut edges = Vec::new();
    for (i, &x) in verts.iter().enumerate() {
        for (j, &y) in verts.iter().enumerate().skip(i + 1) {
            if (x ^ y).count_ones() == 2 {
                edges.push((i, j));
            }
        }
    }
    Graph::build(format!("halfH_{m}"), labels, &edges)
}

/// Johnson graph `J(m,k)`: k-subsets of an m-set, adjacent when the
/// intersection has k-1 elements.
pub fn johnson(m: usize, k: usize) -> Result<Graph, GraphError> {
    if k == 0 || k > m || m > 16 {
        return Err(invalid("johnson requires 1 <= k <= m <= 16"));
    }
    let mut sets: Vec<u32> = (0..1u32 << m)
        .filter(|x| x.count_ones() as usize == k)
        .collect();
    sets.sort_unstable();
    let labels = sets
        .iter()
        .map(|&s| {
            (0..m)
                .filter(|&b| s >> b & 1 == 1)
                .map(|b| (b + 1).to_string())
                .collect::<Vec<_>>()
                .join(".")
        })
        .collect();
    let mut edges = Vec::new();
    for (i, &x) in sets.iter().enumerate() {
        for (j, &y) in sets.iter().enumerate().skip(i + 1) {
            if (x ^ y).count_ones() == 2 {
                edges.push((i, j));
            }
        }
    }
    Graph::build(format!("J({m},{k})"), labels, &edges)
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid("cycle requires n >= 3"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::build_plain(format!("C_{n}"), n, &edges)
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(invalid("path requires n >= 1"));
    }
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::build_plain(format!("P_{n}"), n, &edges)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(invalid("complete requires n >= 1"));
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Graph::build_plain(format!("K_{n}"), n, &edges)
}

/// Complete multipartite graph; vertices of part `p` are labeled `p.q`.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    if parts.is_empty() || parts.iter().any(|&p| p == 0) {
        return Err(invalid("multipartite parts must be non-empty"));
    }
    let mut labels = Vec::new();
    let mut part_of = Vec::new();
    for (p, &size) in parts.iter().enumerate() {
        for q in 0..size {
            labels.push(format!("{p}.{q}"));
            part_of.push(p);
        }
    }
    let n = labels.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if part_of[i] != part_of[j] {
                edges.push((i, j));
            }
        }
    }
    let name = format!(
        "K({})",
        parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    Graph::build(name, labels, &edges)
}

/// Cocktail-party graph `K_{n×2}`.
pub fn cocktail_party(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(invalid("cocktail party requires n >= 1"));
    }
    let mut g = complete_multipartite(&vec![2; n])?;
    g.name = format!("K_{n}x2");
    Ok(g)
}

/// Generalized Petersen graph `GP(n,k)`: outer n-gon `o0..`, inner star
/// polygon `{n,k}` `i0..`, and spokes.
pub fn gp(n: usize, k: usize) -> Result<Graph, GraphError> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(invalid("gp requires n >= 3 and 1 <= k < n/2"));
    }
    let labels = (0..n)
        .map(|i| format!("o{i}"))
        .chain((0..n).map(|i| format!("i{i}")))
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + k) % n));
        edges.push((i, n + i));
    }
    Graph::build(format!("GP({n},{k})"), labels, &edges)
}

/// Möbius ladder `M_{2m}`: the cycle `C_{2m}` plus the m antipodal chords.
pub fn moebius_ladder(n: usize) -> Result<Graph, GraphError> {
    if n < 4 || n % 2 != 0 {
        return Err(invalid("moebius ladder requires even n >= 4"));
    }
    let m = n / 2;
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..m {
        edges.push((i, i + m));
    }
    Graph::build_plain(format!("M_{n}"), n, &edges)
}

/// Odd graph `O_n`: (n-1)-subsets of a (2n-1)-set, adjacent iff disjoint.
pub fn odd_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 2 || n > 7 {
        return Err(invalid("odd graph requires 2 <= n <= 7"));
    }
    let ground = 2 * n - 1;
    let mut sets: Vec<u32> = (0..1u32 << ground)
        .filter(|x| x.count_ones() as usize == n - 1)
        .collect();
    sets.sort_unstable();
    let labels = sets
        .iter()
        .map(|&s| {
            (0..ground)
                .filter(|&b| s >> b & 1 == 1)
                .map(|b| (b + 1).to_string())
                .collect::<Vec<_>>()
                .join(".")
        })
        .collect();
    let mut edges = Vec::new();
    for (i, &x) in sets.iter().enumerate() {
        for (j, &y) in sets.iter().enumerate().skip(i + 1) {
            if x & y == 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::build(format!("O_{n}"), labels, &edges)
}

/// Double Odd graph `DO_{2n-1}`: the bipartite double cover of `O_n`.
pub fn double_odd(n: usize) -> Result<Graph, GraphError> {
    let mut g = bipartite_double(&odd_graph(n)?);
    g.name = format!("DO_{}", 2 * n - 1);
    Ok(g)
}

/// Undirected de Bruijn graph `Br(m,n)`: shift edges on m-ary n-tuples,
/// loops removed, parallel edges collapsed.
pub fn debruijn(m: usize, n: usize) -> Result<Graph, GraphError> {
    if m < 2 || m > 9 || n < 1 || m.pow(n as u32) > 100_000 {
        return Err(invalid("debruijn requires 2 <= m <= 9 and m^n <= 100000"));
    }
    let count = m.pow(n as u32);
    let tuple_label = |mut x: usize| -> String {
        let mut digits = vec![0u8; n];
        for d in (0..n).rev() {
            digits[d] = (x % m) as u8;
            x /= m;
        }
        digits.iter().map(|d| (b'0' + d) as char).collect()
    };
    let labels: Vec<String> = (0..count).map(tuple_label).collect();
    let mut edges = Vec::new();
    for x in 0..count {
        for c in 0..m {
            let y = (x * m) % count + c;
            if x != y {
                edges.push((x.min(y), x.max(y)));
            }
        }
    }
    Graph::build(format!("Br({m},{n})"), labels, &edges)
}

/// Undirected Kautz graph `Ka(m,n)`: de Bruijn shift edges restricted to
/// tuples without equal consecutive characters.
pub fn kautz(m: usize, n: usize) -> Result<Graph, GraphError> {
    if m < 2 || m > 9 || n < 1 {
        return Err(invalid("kautz requires 2 <= m <= 9, n >= 1"));
    }
    let total = m
        .checked_pow(n as u32)
        .filter(|&t| t <= 1_000_000)
        .ok_or_else(|| invalid("kautz graph too large"))?;
    let to_digits = |mut x: usize| {
        let mut digits = vec![0u8; n];
        for d in (0..n).rev() {
            digits[d] = (x % m) as u8;
            x /= m;
        }
        digits
    };
    let tuples: Vec<Vec<u8>> = (0..total)
        .map(to_digits)
        .filter(|t| (1..n).all(|i| t[i] != t[i - 1]))
        .collect();
    let labels: Vec<String> = tuples
        .iter()
        .map(|t| t.iter().map(|d| (b'0' + d) as char).collect())
        .collect();
    let index: std::collections::HashMap<&Vec<u8>, usize> =
        tuples.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut edges = Vec::new();
    for (i, t) in tuples.iter().enumerate() {
        for c in 0..m as u8 {
            if n > 0 && c == t[n - 1] {
                continue;
            }
            let mut shifted = t[1..].to_vec();
            shifted.push(c);
            if let Some(&j) = index.get(&shifted) {
                if i != j {
                    edges.push((i.min(j), i.max(j)));
                }
            }
        }
    }
    Graph::build(format!("Ka({m},{n})"), labels, &edges)
}

/// Cube-connected cycles `CCC_n`: each vertex of `H_n` replaced by an n-cycle.
pub fn ccc(n: usize) -> Result<Graph, GraphError> {
    if n < 3 || n > 10 {
        return Err(invalid("ccc requires 3 <= n <= 10"));
    }
    let cube = 1usize << n;
    let idx = |x: usize, i: usize| x * n + i;
    let labels = (0..cube)
        .flat_map(|x| (0..n).map(move |i| format!("{}|{i}", bitstring(x, n))))
        .collect();
    let mut edges = Vec::new();
    for x in 0..cube {
        for i in 0..n {
            edges.push((idx(x, i), idx(x, (i + 1) % n)));
            let y = x ^ (1 << i);
            if x < y {
                edges.push((idx(x, i), idx(y, i)));
            }
        }
    }
    Graph::build(format!("CCC_{n}"), labels, &edges)
}

/// Undirected butterfly `But(n)` on pairs `(x, i)`, `i = 0..=n`: levels i and
/// i+1 joined where the words agree except possibly in bit i+1 (from the left).
pub fn butterfly(n: usize) -> Result<Graph, GraphError> {
    if n < 1 || n > 7 {
        return Err(invalid("butterfly requires 1 <= n <= 7"));
    }
    let w = 1usize << n;
    let idx = |x: usize, i: usize| i * w + x;
    let labels = (0..=n)
        .flat_map(|i| (0..w).map(move |x| format!("{}|{i}", bitstring(x, n))))
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for x in 0..w {
            let flip = x ^ (1 << (n - 1 - i));
            edges.push((idx(x, i), idx(x, i + 1)));
            edges.push((idx(x, i), idx(flip, i + 1)));
        }
    }
    Graph::build(format!("But({n})"), labels, &edges)
}

/// Fibonacci cube `Fi(n)` (no two consecutive ones) or Lucas cube `Lu(n)`
/// (additionally not both first and last one), as induced subgraphs of `H_n`.
/// The vertex labels are the addresses of the identity partial-cube addressing.
pub fn fibonacci_like(lucas: bool, n: usize) -> Result<Graph, GraphError> {
    if n < 1 || n > 20 {
        return Err(invalid("fibonacci/lucas requires 1 <= n <= 20"));
    }
    let verts: Vec<usize> = (0..1usize << n)
        .filter(|&x| {
            let no_adjacent = x & (x >> 1) == 0;
            let wrap_ok = !lucas || n < 2 || !(x >> (n - 1) & 1 == 1 && x & 1 == 1);
            no_adjacent && wrap_ok
        })
        .collect();
    let labels: Vec<String> = verts.iter().map(|&x| bitstring(x, n)).collect();
    let mut edges = Vec::new();
    for (i, &x) in verts.iter().enumerate() {
        for (j, &y) in verts.iter().enumerate().skip(i + 1) {
            if (x ^ y).count_ones() == 1 {
                edges.push((i, j));
            }
        }
    }
    let name = if lucas {
        format!("Lu_{n}")
    } else {
        format!("Fi_{n}")
    };
    Graph::build(name, labels, &edges)
}

/// Generalized chordal ring `GCR(n, chords)` on 1-based ring positions:
/// ring edges plus chords, odd positions reaching forward (`i + a`), even
/// positions backward (`i - a`), the orientation that matches the
/// published 24-vertex addressing row-for-row.
pub fn gcr(n: usize, chords: &[usize]) -> Result<Graph, GraphError> {
    if n < 4 || n % 2 != 0 {
        return Err(invalid("gcr requires even n >= 4"));
    }
    let mut prev = 0usize;
    for &a in chords {
        if a % 2 == 0 || a > n - 1 || a <= prev {
            return Err(invalid(
                "gcr chords must be strictly increasing odd values in [1, n-1]",
            ));
        }
        prev = a;
    }
    let labels = (1..=n).map(|i| i.to_string()).collect();
    let mut edges = Vec::new();
    for i in 1..=n {
        let j = i % n + 1;
        edges.push((i.min(j) - 1, i.max(j) - 1));
        for &a in chords {
            let j = if i % 2 == 1 {
                (i - 1 + a) % n + 1
            } else {
                (i + n - 1 - a) % n + 1
            };
            if i != j {
                edges.push((i.min(j) - 1, i.max(j) - 1));
            }
        }
    }
    let name = format!(
        "GCR({n};{})",
        chords
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    Graph::build(name, labels, &edges)
}

/// The identity addressing of a graph whose labels are already bit strings.
pub fn identity_addressing(g: &Graph) -> Vec<(String, String)> {
    g.labels.iter().map(|l| (l.clone(), l.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_pairs_distances, cartesian_product};
    use crate::iso::isomorphic;

    #[test]
    fn hypercube_h3() {
        let g = hypercube(3).unwrap();
        assert_eq!(g.n, 8);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(all_pairs_distances(&g).unwrap().diameter, 3);
    }

    #[test]
    fn halfcube_h4_is_cocktail_party() {
        let g = halfcube(4).unwrap();
        assert_eq!(g.n, 8);
        assert!(isomorphic(&g, &cocktail_party(4).unwrap()).unwrap());
    }

    #[test]
    fn johnson_j42_is_octahedron() {
        let g = johnson(4, 2).unwrap();
        assert!(isomorphic(&g, &cocktail_party(3).unwrap()).unwrap());
    }

    #[test]
    fn gp_family_audits() {
        for (n, k, diam, name) in [
            (5, 2, 2, "Petersen"),
            (6, 2, 4, "Durer"),
            (9, 2, 4, ""),
            (10, 2, 5, "Dodecahedron"),
            (10, 3, 5, "Desargues"),
            (8, 3, 4, "Moebius-Kantor"),
            (12, 5, 4, "Nauru"),
        ] {
            let g = gp(n, k).unwrap();
            assert_eq!(g.n, 2 * n, "{name}");
            assert!((0..g.n).all(|v| g.degree(v) == 3));
            assert_eq!(all_pairs_distances(&g).unwrap().diameter, diam, "{name}");
        }
    }

    #[test]
    fn petersen_girth_five() {
        assert_eq!(gp(5, 2).unwrap().girth(), Some(5));
    }

    #[test]
    fn butterfly_counts_and_diameter() {
        for n in 1..=3 {
            let g = butterfly(n).unwrap();
            assert_eq!(g.n, (1 << n) * (n + 1));
            assert_eq!(all_pairs_distances(&g).unwrap().diameter, 2 * n);
        }
        assert!(isomorphic(&butterfly(1).unwrap(), &cycle(4).unwrap()).unwrap());
    }

    #[test]
    fn ccc_audits() {
        let g = ccc(3).unwrap();
        assert_eq!(g.n, 24);
        assert!((0..24).all(|v| g.degree(v) == 3));
        assert_eq!(all_pairs_distances(&g).unwrap().diameter, 6);
        let g4 = ccc(4).unwrap();
        assert_eq!(all_pairs_distances(&g4).unwrap().diameter, 8);
    }

    #[test]
    fn fibonacci_lucas_counts() {
        assert_eq!(fibonacci_like(false, 4).unwrap().n, 8);
        assert_eq!(fibonacci_like(true, 4).unwrap().n, 7);
        let f1 = fibonacci_like(false, 1).unwrap();
        assert!(isomorphic(&f1, &hypercube(1).unwrap()).unwrap());
    }

    #[test]
    fn debruijn_kautz_identities() {
        let br22 = debruijn(2, 2).unwrap();
        let k4e =
            Graph::build_plain("K4-e", 4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(isomorphic(&br22, &k4e).unwrap());
        for n in 2..=4 {
            let ka = kautz(2, n).unwrap();
            assert_eq!(ka.n, 2);
            assert_eq!(ka.edge_count(), 1);
        }
        let ka32 = kautz(3, 2).unwrap();
        assert_eq!(ka32.n, 6);
        assert_eq!(all_pairs_distances(&ka32).unwrap().diameter, 2);
        let br32 = debruijn(3, 2).unwrap();
        assert_eq!(br32.n, 9);
        assert_eq!(all_pairs_distances(&br32).unwrap().diameter, 2);
    }

    #[test]
    fn moebius_m6_is_k33() {
        let m6 = moebius_ladder(6).unwrap();
        assert!(isomorphic(&m6, &complete_multipartite(&[3, 3]).unwrap()).unwrap());
        assert_eq!(all_pairs_distances(&moebius_ladder(8).unwrap()).unwrap().diameter, 2);
        assert_eq!(all_pairs_distances(&moebius_ladder(10).unwrap()).unwrap().diameter, 3);
    }

    #[test]
    fn odd_graphs() {
        let o3 = odd_graph(3).unwrap();
        assert!(isomorphic(&o3, &gp(5, 2).unwrap()).unwrap());
        let o4 = odd_graph(4).unwrap();
        assert_eq!(o4.n, 35);
        assert_eq!(all_pairs_distances(&o4).unwrap().diameter, 3);
    }

    #[test]
    fn double_odd_identities() {
        let do5 = double_odd(3).unwrap();
        assert_eq!(do5.n, 20);
        assert!(isomorphic(&do5, &gp(10, 3).unwrap()).unwrap());
        let dc5 = bipartite_double(&cycle(5).unwrap());
        assert!(isomorphic(&dc5, &cycle(10).unwrap()).unwrap());
    }

    #[test]
    fn gcr_family() {
        let c = gcr(12, &[1]).unwrap();
        assert!(isomorphic(&c, &cycle(12).unwrap()).unwrap());
        // chords join opposite ring parities, so GCR is always bipartite;
        // the a = 3 chordal ring is the prism exactly when n/2 is even
        let g = gcr(12, &[3]).unwrap();
        assert!(isomorphic(&g, &gp(6, 1).unwrap()).unwrap());
        let g = gcr(10, &[3]).unwrap();
        assert!(isomorphic(&g, &moebius_ladder(10).unwrap()).unwrap());
        let g = gcr(24, &[9, 11]).unwrap();
        assert_eq!(g.n, 24);
        assert!((0..24).all(|v| g.degree(v) == 4));
        assert_eq!(all_pairs_distances(&g).unwrap().diameter, 5);
    }

    #[test]
    fn gcr_rejects_bad_chords() {
        assert!(gcr(24, &[4]).is_err());
        assert!(gcr(24, &[11, 9]).is_err());
        assert!(gcr(23, &[3]).is_err());
    }

    #[test]
    fn product_c4_h2_is_gq() {
        let g = cartesian_product(&cycle(4).unwrap(), &hypercube(2).unwrap());
        assert_eq!(g.n, 16);
        assert!((0..16).all(|v| g.degree(v) == 4));
    }
}
