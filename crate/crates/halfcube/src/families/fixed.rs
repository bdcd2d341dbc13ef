//! Fixed sporadic graphs: Hoffman–Singleton, Shrikhande, Dyck, the cubic
//! Klein graph, and the Platonic solid skeletons.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError};
use crate::json;

use super::{complete, cocktail_party, gp, hypercube, invalid};

/// Hoffman–Singleton graph: five pentagons `Ph`, five pentagrams `Qk`,
/// with `Ph[i]` joined to `Qk[h*k + i mod 5]`.
pub fn hoffman_singleton() -> Result<Graph, GraphError> {
    let idx = |q: usize, h: usize, i: usize| q * 25 + h * 5 + i;
    let mut labels = Vec::with_capacity(50);
    for h in 0..5 {
        for i in 0..5 {
            labels.push(format!("P{h}{i}"));
        }
    }
    for k in 0..5 {
        for j in 0..5 {
            labels.push(format!("Q{k}{j}"));
        }
    }
    let mut edges = Vec::new();
    for h in 0..5 {
        for i in 0..5 {
            edges.push((idx(0, h, i), idx(0, h, (i + 1) % 5)));
            edges.push((idx(1, h, i), idx(1, h, (i + 2) % 5)));
        }
    }
    for h in 0..5 {
        for i in 0..5 {
            for k in 0..5 {
                edges.push((idx(0, h, i), idx(1, k, (h * k + i) % 5)));
            }
        }
    }
    Graph::build("HS", labels, &edges)
}

/// Shrikhande graph: Cayley graph on Z4 x Z4 with connection set
/// `{±(1,0), ±(0,1), ±(1,1)}`.
pub fn shrikhande() -> Result<Graph, GraphError> {
    let idx = |a: usize, b: usize| (a % 4) * 4 + (b % 4);
    let labels = (0..4)
        .flat_map(|a| (0..4).map(move |b| format!("{a}{b}")))
        .collect();
    let mut edges = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for (da, db) in [(1, 0), (0, 1), (1, 1), (3, 0), (0, 3), (3, 3)] {
                let j = idx(a + da, b + db);
                let i = idx(a, b);
                if i != j {
                    edges.push((i.min(j), i.max(j)));
                }
            }
        }
    }
    Graph::build("Shrikhande", labels, &edges)
}

/// Dyck graph from its cyclic (LCF) description `[5,-5,13,-13]^8`:
/// a Hamiltonian cycle on 32 vertices plus the rotating chord pattern.
pub fn dyck_graph() -> Result<Graph, GraphError> {
    lcf_graph("Dyck", 32, &[5, -5, 13, -13])
}

fn lcf_graph(name: &str, n: usize, shifts: &[i64]) -> Result<Graph, GraphError> {
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        let s = shifts[i % shifts.len()];
        let j = ((i as i64 + s).rem_euclid(n as i64)) as usize;
        edges.push((i.min(j), i.max(j)));
    }
    Graph::build_plain(name, n, &edges)
}

/// Cubic Klein graph (56 vertices, 3-regular, diameter 6), embedded as a
/// data file and revalidated on load.
pub fn klein_cubic() -> Result<Graph, GraphError> {
    static DATA: &str = include_str!("data/klein_cubic.json");
    let g = json::from_json(DATA).map_err(|e| invalid(format!("klein data: {e}")))?;
    debug_assert_eq!(g.n, 56);
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlatonicSolid {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl std::str::FromStr for PlatonicSolid {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "tetrahedron" => Ok(Self::Tetrahedron),
            "cube" => Ok(Self::Cube),
            "octahedron" => Ok(Self::Octahedron),
            "dodecahedron" => Ok(Self::Dodecahedron),
            "icosahedron" => Ok(Self::Icosahedron),
            other => Err(format!("unknown platonic solid {other:?}")),
        }
    }
}

/// Skeletons of the five Platonic polyhedra.
pub fn platonic(solid: PlatonicSolid) -> Result<Graph, GraphError> {
    match solid {
        PlatonicSolid::Tetrahedron => {
            let mut g = complete(4)?;
            g.name = "Tetrahedron".into();
            Ok(g)
        }
        PlatonicSolid::Cube => {
            let mut g = hypercube(3)?;
            g.name = "Cube".into();
            Ok(g)
        }
        PlatonicSolid::Octahedron => {
            let mut g = cocktail_party(3)?;
            g.name = "Octahedron".into();
            Ok(g)
        }
        PlatonicSolid::Dodecahedron => {
            let mut g = gp(10, 2)?;
            g.name = "Dodecahedron".into();
            Ok(g)
        }
        PlatonicSolid::Icosahedron => {
            let edges = [
                (0, 1),
                (0, 5),
                (0, 7),
                (0, 8),
                (0, 11),
                (1, 2),
                (1, 5),
                (1, 6),
                (1, 8),
                (2, 3),
                (2, 6),
                (2, 8),
                (2, 9),
                (3, 4),
                (3, 6),
                (3, 9),
                (3, 10),
                (4, 5),
                (4, 6),
                (4, 10),
                (4, 11),
                (5, 6),
                (5, 11),
                (7, 8),
                (7, 9),
                (7, 10),
                (7, 11),
                (8, 9),
                (9, 10),
                (10, 11),
            ];
            Graph::build_plain("Icosahedron", 12, &edges)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_pairs_distances, is_bipartite};

    #[test]
    fn hoffman_singleton_audit() {
        let g = hoffman_singleton().unwrap();
        assert_eq!(g.n, 50);
        assert!((0..50).all(|v| g.degree(v) == 7));
        assert_eq!(g.girth(), Some(5));
        assert_eq!(all_pairs_distances(&g).unwrap().diameter, 2);
    }

    #[test]
    fn shrikhande_audit() {
        let g = shrikhande().unwrap();
        assert_eq!(g.n, 16);
        assert!((0..16).all(|v| g.degree(v) == 6));
        assert_eq!(all_pairs_distances(&g).unwrap().diameter, 2);
        assert_eq!(g.girth(), Some(3));
    }

    #[test]
    fn dyck_audit() {
        let g = dyck_graph().unwrap();
        assert_eq!(g.n, 32);
        assert!((0..32).all(|v| g.degree(v) == 3));
        assert_eq!(g.girth(), Some(6));
        assert!(is_bipartite(&g).is_bipartite());
        assert_eq!(all_pairs_distances(&g).unwrap().diameter, 5);
    }

    #[test]
    fn klein_audit() {
        let g = klein_cubic().unwrap();
        assert_eq!(g.n, 56);
        assert!((0..56).all(|v| g.degree(v) == 3));
        assert_eq!(g.girth(), Some(7));
        assert_eq!(all_pairs_distances(&g).unwrap().diameter, 6);
    }

    #[test]
    fn platonic_audits() {
        for (solid, n, deg, diam) in [
            (PlatonicSolid::Tetrahedron, 4, 3, 1),
            (PlatonicSolid::Cube, 8, 3, 3),
            (PlatonicSolid::Octahedron, 6, 4, 2),
            (PlatonicSolid::Dodecahedron, 20, 3, 5),
            (PlatonicSolid::Icosahedron, 12, 5, 3),
        ] {
            let g = platonic(solid).unwrap();
            assert_eq!(g.n, n);
            assert!((0..n).all(|v| g.degree(v) == deg));
            assert_eq!(all_pairs_distances(&g).unwrap().diameter, diam);
        }
    }
}
