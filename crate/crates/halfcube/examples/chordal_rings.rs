//! Double chordal rings: the conjectured family around n/2 embeds into
//! H_{n/8+2}; single chords 5 and 7 fail even one step below the diameter.

use halfcube::embed::{collapse_to_scale1, embed, enumerate, EmbedOptions};
use halfcube::families::{self, FamilySpec};
use halfcube::graph::all_pairs_distances;

fn main() {
    let opts = EmbedOptions::default();
    for n in [24usize, 40, 56] {
        let h = n / 2;
        for chords in [vec![h - 3, h - 1], vec![h + 1, h + 3]] {
            let g = families::make(&FamilySpec::Gcr { n, chords: chords.clone() }).unwrap();
            let dm = all_pairs_distances(&g).unwrap();
            let out = enumerate(&g, None, &opts).unwrap();
            let m = out
                .solutions
                .iter()
                .filter_map(|s| collapse_to_scale1(&s.embedding, &s.root).ok())
                .map(|e| e.m)
                .min();
            println!(
                "{:<16} diam={} {}  scale-1 host: {}",
                g.name,
                dm.diameter,
                out.status,
                m.map(|m| format!("H_{m}")).unwrap_or_else(|| "-".into())
            );
        }
    }
    for (n, chords, label) in [
        (48usize, vec![13usize, 15], "table row"),
        (60, vec![21, 23], "table row"),
    ] {
        let g = families::make(&FamilySpec::Gcr { n, chords }).unwrap();
        let out = enumerate(&g, None, &opts).unwrap();
        let m = out
            .solutions
            .iter()
            .filter_map(|s| collapse_to_scale1(&s.embedding, &s.root).ok())
            .map(|e| e.m)
            .min();
        println!(
            "{:<16} ({label}) {}  scale-1 host: {}",
            g.name,
            out.status,
            m.map(|m| format!("H_{m}")).unwrap_or_else(|| "-".into())
        );
    }
    for a in [5usize, 7] {
        let g = families::make(&FamilySpec::Gcr { n: 2 * a, chords: vec![a] }).unwrap();
        let dm = all_pairs_distances(&g).unwrap();
        let out = embed(&g, Some(dm.diameter - 1), &opts).unwrap();
        println!("{:<16} diam={} {}", g.name, dm.diameter, out.status);
    }
}
