//! Regular-map skeletons: the Platonic solids and the Shrikhande graph
//! embed; the Dyck and cubic Klein graphs do not.

use halfcube::embed::{collapse_to_scale1, embed, enumerate, EmbedOptions};
use halfcube::families::{self, FamilySpec, PlatonicSolid};

fn main() {
    let opts = EmbedOptions::default();
    for solid in [
        PlatonicSolid::Tetrahedron,
        PlatonicSolid::Cube,
        PlatonicSolid::Octahedron,
        PlatonicSolid::Icosahedron,
        PlatonicSolid::Dodecahedron,
    ] {
        let g = families::make(&FamilySpec::Platonic { solid }).unwrap();
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
        println!("{:<14} -> {host}", g.name);
    }
    for spec in [FamilySpec::Shrikhande, FamilySpec::Dyck, FamilySpec::KleinCubic] {
        let g = families::make(&spec).unwrap();
        let out = embed(&g, None, &opts).unwrap();
        match out.min_m() {
            Some(m) => println!("{:<14} -> 1/2 H_{m}", g.name),
            None => println!("{:<14} -> {}", g.name, out.status),
        }
    }
}
