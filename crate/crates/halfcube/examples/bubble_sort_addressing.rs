//! The closed-form inversion-set addressing of bubble sort graphs, checked
//! as a certificate and rediscovered by the search.

use halfcube::certify::{verify_certificate, AddressingFile};
use halfcube::embed::{collapse_to_scale1, embed, EmbedOptions};
use halfcube::families::{self, bubble_sort_addressing, FamilySpec};
use halfcube::graph::all_pairs_distances;

fn main() {
    for n in [2usize, 3, 4, 5] {
        let g = families::make(&FamilySpec::CayleyBubble { n }).unwrap();
        let dm = all_pairs_distances(&g).unwrap();
        let rows = bubble_sort_addressing(n).unwrap();
        let addressing = AddressingFile { m: n * (n - 1) / 2, rows };
        let report = verify_certificate(&g, &addressing, 1, dm.diameter).unwrap();
        println!(
            "BSG({n}): {} vertices, Kendall addressing into H_{} -> {}",
            g.n,
            addressing.m,
            if report.pass { "isometric" } else { "FAIL" }
        );
    }
    let g = families::make(&FamilySpec::CayleyBubble { n: 4 }).unwrap();
    let out = embed(&g, None, &EmbedOptions::default()).unwrap();
    let sol = &out.solutions[0];
    let collapsed = collapse_to_scale1(&sol.embedding, &sol.root).unwrap();
    println!(
        "search on BSG(4): {} classes, collapses to H_{}",
        sol.classes.len(),
        collapsed.m
    );
}
