//! Product embeddings: tori from odd cycles, meshes from paths.

use halfcube::embed::{collapse_to_scale1, embed, enumerate, product_embed, verify_embedding, EmbedOptions};
use halfcube::families::{self, FamilySpec};
use halfcube::graph::all_pairs_distances;

fn main() {
    let opts = EmbedOptions::default();
    let c5 = families::make(&FamilySpec::Cycle { n: 5 }).unwrap();
    let e5 = embed(&c5, None, &opts).unwrap().solutions[0].embedding.clone();
    let (torus, emb) = product_embed(&c5, &e5, &c5, &e5).unwrap();
    let dm = all_pairs_distances(&torus).unwrap();
    println!(
        "{}: {} vertices -> 1/2 H_{} ({} violations)",
        torus.name,
        torus.n,
        emb.m,
        verify_embedding(&dm, &emb).len()
    );

    // generalized Boolean cube: a cycle times a hypercube
    let c4 = families::make(&FamilySpec::Cycle { n: 4 }).unwrap();
    let h2 = families::make(&FamilySpec::Hypercube { m: 2 }).unwrap();
    let e_c4 = embed(&c4, None, &opts).unwrap().solutions[0].embedding.clone();
    let e_h2 = embed(&h2, None, &opts).unwrap().solutions[0].embedding.clone();
    let (gq, emb) = product_embed(&c4, &e_c4, &h2, &e_h2).unwrap();
    let dm = all_pairs_distances(&gq).unwrap();
    println!(
        "{}: {} vertices -> 1/2 H_{} ({} violations); search finds H_{}",
        gq.name,
        gq.n,
        emb.m,
        verify_embedding(&dm, &emb).len(),
        {
            let out = enumerate(&gq, None, &opts).unwrap();
            out.solutions
                .iter()
                .filter_map(|s| collapse_to_scale1(&s.embedding, &s.root).ok())
                .map(|e| e.m)
                .min()
                .unwrap()
        }
    );

    let p3 = families::make(&FamilySpec::Path { n: 3 }).unwrap();
    let out = enumerate(&p3, None, &opts).unwrap();
    let scale1 = out
        .solutions
        .iter()
        .find_map(|s| collapse_to_scale1(&s.embedding, &s.root).ok())
        .unwrap();
    let (mesh, emb) = product_embed(&p3, &scale1, &p3, &scale1).unwrap();
    let dm = all_pairs_distances(&mesh).unwrap();
    println!(
        "{}: {} vertices -> H_{} ({} violations)",
        mesh.name,
        mesh.n,
        emb.m,
        verify_embedding(&dm, &emb).len()
    );
}
