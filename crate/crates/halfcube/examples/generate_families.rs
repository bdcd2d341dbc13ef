//! Build a few topologies, print their structural audit, and write one of
//! them in the graph JSON interchange format.

use halfcube::families::{self, FamilySpec};
use halfcube::graph::{all_pairs_distances, is_bipartite};
use halfcube::json;

fn main() {
    for spec in [
        FamilySpec::Hypercube { m: 4 },
        FamilySpec::Ccc { n: 3 },
        FamilySpec::Butterfly { n: 2 },
        FamilySpec::DeBruijn { m: 2, n: 3 },
        FamilySpec::Kautz { m: 3, n: 2 },
        FamilySpec::HoffmanSingleton,
        FamilySpec::Dyck,
        FamilySpec::KleinCubic,
        FamilySpec::CayleyPancake { n: 4 },
        FamilySpec::Gcr { n: 24, chords: vec![9, 11] },
    ] {
        let g = families::make(&spec).unwrap();
        let dm = all_pairs_distances(&g).unwrap();
        let degrees: Vec<usize> = (0..g.n).map(|v| g.degree(v)).collect();
        println!(
            "{:<14} n={:<4} m={:<4} deg={}..{} girth={:?} diam={} bipartite={}",
            g.name,
            g.n,
            g.edge_count(),
            degrees.iter().min().unwrap(),
            degrees.iter().max().unwrap(),
            g.girth(),
            dm.diameter,
            is_bipartite(&g).is_bipartite()
        );
    }
    let g = families::make(&FamilySpec::Gp { n: 5, k: 2 }).unwrap();
    print!("\ngraph JSON for {}:\n{}", g.name, json::to_json(&g));
}
