//! Hypermetric necessary conditions: 5-gonal witnesses for the Thomsen
//! graph and K_{4,4,4}, and the bipartite + 5-gonal partial cube verdicts.

use halfcube::families::{self, FamilySpec};
use halfcube::gonal::{avis_partial_cube_test, five_gonal_check};
use halfcube::graph::all_pairs_distances;

fn main() {
    for spec in [
        FamilySpec::CompleteMultipartite { parts: vec![3, 3] },
        FamilySpec::K444,
        FamilySpec::Cycle { n: 5 },
        FamilySpec::Gp { n: 5, k: 2 },
    ] {
        let g = families::make(&spec).unwrap();
        let dm = all_pairs_distances(&g).unwrap();
        match five_gonal_check(&dm) {
            Some(w) => {
                let (pos, neg) = w.labeled(&g);
                println!(
                    "{:<12} 5-gonal violation: +{pos:?} -{neg:?}  {} > {}",
                    g.name, w.lhs, w.rhs
                );
            }
            None => println!("{:<12} 5-gonal: pass", g.name),
        }
    }
    for spec in [
        FamilySpec::Cycle { n: 6 },
        FamilySpec::CompleteMultipartite { parts: vec![3, 3] },
        FamilySpec::Gp { n: 10, k: 3 },
        FamilySpec::Fibonacci { n: 5 },
    ] {
        let g = families::make(&spec).unwrap();
        let dm = all_pairs_distances(&g).unwrap();
        let v = avis_partial_cube_test(&g, &dm);
        println!("{:<12} partial cube: {} ({})", g.name, v.is_partial_cube, v.reason);
    }
}
