//! The distance oracle seeding the intersection table.

use crate::graph::DistanceMatrix;

/// Result of the oracle on a pair of oriented edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sigma {
    Known(i8),
    Unknown,
}

/// For oriented edges `e = (u,v)` and `e' = (x,y)` whose four cross
/// distances are all `<= s`, returns
/// `σ = d(u,y) + d(v,x) - d(u,x) - d(v,y)`.
///
/// In any valid scale-2 s-truncated embedding each coordinate of
/// `S_e ∩ S_e'` contributes ±1 to σ, so `i(e,e') >= |σ|` and
/// `i(e,e') ≡ σ (mod 2)`. The triangle inequality bounds σ to [-2, 2].
pub fn sigma_oracle(
    dm: &DistanceMatrix,
    s: usize,
    e: (usize, usize),
    f: (usize, usize),
) -> Sigma {
    let (u, v) = e;
    let (x, y) = f;
    let (dux, duy, dvx, dvy) = (dm.d(u, x), dm.d(u, y), dm.d(v, x), dm.d(v, y));
    if dux > s || duy > s || dvx > s || dvy > s {
        return Sigma::Unknown;
    }
    let sigma = duy as i64 + dvx as i64 - dux as i64 - dvy as i64;
    debug_assert!((-2..=2).contains(&sigma));
    Sigma::Known(sigma as i8)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::all_pairs_distances;

    #[test]
    fn identical_edges_force_two() {
        let g = families::complete(3).unwrap();
        let dm = all_pairs_distances(&g).unwrap();
        assert_eq!(sigma_oracle(&dm, 1, (0, 1), (0, 1)), Sigma::Known(2));
    }

    #[test]
    fn triangle_edges_sharing_vertex_force_one() {
        let g = families::complete(3).unwrap();
        let dm = all_pairs_distances(&g).unwrap();
        // e = (u,v) = (0,1), e' = (u,y) = (0,2)
        assert_eq!(sigma_oracle(&dm, 1, (0, 1), (0, 2)), Sigma::Known(1));
    }

    #[test]
    fn opposite_c4_edges_force_two() {
        let g = families::cycle(4).unwrap();
        let dm = all_pairs_distances(&g).unwrap();
        // oriented around the cycle: (0,1) and (2,3) -> |σ| = 2
        let Sigma::Known(s) = sigma_oracle(&dm, 2, (0, 1), (2, 3)) else {
            panic!("within range")
        };
        assert_eq!(s.abs(), 2);
    }

    #[test]
    fn out_of_range_is_unknown() {
        let g = families::path(6).unwrap();
        let dm = all_pairs_distances(&g).unwrap();
        assert_eq!(sigma_oracle(&dm, 2, (0, 1), (4, 5)), Sigma::Unknown);
        assert!(matches!(
            sigma_oracle(&dm, 5, (0, 1), (4, 5)),
            Sigma::Known(_)
        ));
    }
}
