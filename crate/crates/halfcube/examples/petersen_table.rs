//! Reproduce the generalized Petersen embedding table: which GP(n,k) embed,
//! into which host, and which fail even truncated.

use halfcube::embed::{collapse_to_scale1, embed, enumerate, EmbedOptions};
use halfcube::families::{self, FamilySpec};

fn main() {
    let opts = EmbedOptions::default();
    println!("{:<10} {:<18} {:>4}  host", "(n,k)", "name", "diam");
    let rows: [(usize, usize, &str); 7] = [
        (6, 1, "Prism_6"),
        (5, 1, "Prism_5"),
        (10, 3, "Desargues"),
        (10, 2, "Dodecahedron"),
        (9, 2, ""),
        (6, 2, "Durer octahedron"),
        (5, 2, "Petersen"),
    ];
    for (n, k, name) in rows {
        let g = families::make(&FamilySpec::Gp { n, k }).unwrap();
        let out = enumerate(&g, None, &opts).unwrap();
        let scale1 = out
            .solutions
            .iter()
            .filter_map(|s| collapse_to_scale1(&s.embedding, &s.root).ok())
            .map(|e| e.m)
            .min();
        let host = match scale1 {
            Some(m) => format!("H_{m}"),
            None => format!("1/2 H_{}", out.min_m().unwrap()),
        };
        println!("({n},{k})     {name:<18} {:>4}  {host}", out.diameter);
    }
    for (n, k, name) in [(8, 3, "Moebius-Kantor"), (12, 5, "Nauru")] {
        let g = families::make(&FamilySpec::Gp { n, k }).unwrap();
        let out = embed(&g, Some(3), &opts).unwrap();
        println!("({n},{k})     {name:<18}    -  {}", out.status);
    }
}
