//! Isomorphism certificates for controllable graphs.
//!
//! Random graphs are drawn until one has an invertible walk matrix; a
//! random relabeling is then recovered exactly from `W_Δ W_Γ⁻¹`.
//!
//! ```bash
//! cargo run --example controllable_isomorphism -- 9
//! ```

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use graphequiv::control::walk_row_matching;
use graphequiv::{controllable_iso, is_controllable, walk_matrix, Graph, Verdict};

fn random_graph(n: usize, rng: &mut impl Rng) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    Graph::new(n, &edges).unwrap()
}

fn main() -> graphequiv::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut tries = 0;
    let g = loop {
        tries += 1;
        let g = random_graph(n, &mut rng);
        if is_controllable(&g) {
            break g;
        }
    };
    println!("controllable graph on {n} vertices after {tries} draws: {:?}", g.edges());
    println!("det W = {}", walk_matrix(&g)?.det());

    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let h = g.permute(&perm)?;
    let cert = controllable_iso(&g, &h)?;
    println!("planted   {perm:?}");
    println!("recovered {:?}", cert.permutation);
    println!("row matching {:?}", walk_row_matching(&g, &h)?);
    println!("checks {:?}", cert.checks);
    assert_eq!(cert.verdict, Verdict::Isomorphic);
    assert_eq!(cert.permutation.as_deref(), Some(&perm[..]));

    // one edge flipped: same order, almost surely no isomorphism
    let (u, v) = (0, n - 1);
    let mut edges = h.edges();
    if let Some(pos) = edges.iter().position(|&e| e == (u, v)) {
        edges.remove(pos);
    } else {
        edges.push((u, v));
    }
    let h2 = Graph::new(n, &edges)?;
    println!("after flipping {u}-{v}: {:?}", controllable_iso(&g, &h2)?.verdict);
    Ok(())
}
