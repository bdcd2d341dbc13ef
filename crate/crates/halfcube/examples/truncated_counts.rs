//! Enumerate all inequivalent embeddings: the tetrahedron's two, the nine
//! 3-truncated butterflies, and the four 4-truncated swap-or-shift graphs.

use halfcube::embed::{enumerate, EmbedOptions};
use halfcube::families::{self, FamilySpec};

fn main() {
    let opts = EmbedOptions::default();
    for (spec, s) in [
        (FamilySpec::Complete { n: 4 }, None),
        (FamilySpec::Butterfly { n: 2 }, Some(3)),
        (FamilySpec::CayleySosPartial { n: 4 }, Some(4)),
    ] {
        let g = families::make(&spec).unwrap();
        let out = enumerate(&g, s, &opts).unwrap();
        let dims: Vec<usize> = out.solutions.iter().map(|s| s.embedding.m).collect();
        println!(
            "{:<10} s={:<2} {}: {} inequivalent embeddings, dims {:?}, {} nodes",
            g.name,
            out.s,
            out.status,
            out.count,
            dims,
            out.stats.nodes
        );
    }
}
