//! Editing-metric graphs: the indel table graph embeds, the general indel,
//! Levenshtein and Ulam families stop embedding almost immediately.

use halfcube::embed::{embed, EmbedOptions};
use halfcube::families::{self, FamilySpec};
use halfcube::graph::all_pairs_distances;

fn main() {
    let opts = EmbedOptions::default();
    let cases = [
        (FamilySpec::Indel { i: 2, n: 3 }, None),
        (FamilySpec::Indel { i: 0, n: 2 }, Some(2)),
        (FamilySpec::Indel { i: 3, n: 4 }, Some(2)),
        (FamilySpec::Levenshtein { i: 0, n: 1 }, None),
        (FamilySpec::Levenshtein { i: 1, n: 2 }, Some(2)),
        (FamilySpec::Ulam { n: 3 }, None),
        (FamilySpec::Ulam { n: 4 }, Some(2)),
    ];
    for (spec, s) in cases {
        let g = families::make(&spec).unwrap();
        let dm = all_pairs_distances(&g).unwrap();
        let out = embed(&g, s, &opts).unwrap();
        println!(
            "{:<10} n={:<3} diam={:<2} s={:<2} -> {}{}",
            g.name,
            g.n,
            dm.diameter,
            out.s,
            out.status,
            out.min_m().map(|m| format!(" (1/2 H_{m})")).unwrap_or_default()
        );
    }
}
