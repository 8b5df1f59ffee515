//! The Shrikhande graph and the 4x4 rook's graph: same parameters,
//! same spectrum, same coherent configuration data, not isomorphic.
//!
//! ```bash
//! cargo run --example srg_pair
//! ```

use graphequiv::graph::{find_isomorphism, rook_graph, shrikhande, Graph};
use graphequiv::{c3_equivalent, classify, cospectral, wl2_refine};

/// Number of 4-cliques inside the closed neighbourhood of each vertex.
fn local_k4_counts(g: &Graph) -> Vec<usize> {
    (0..g.order())
        .map(|x| {
            let mut ball: Vec<usize> = g.neighbors(x).to_vec();
            ball.push(x);
            let mut count = 0;
            for a in 0..ball.len() {
                for b in a + 1..ball.len() {
                    for c in b + 1..ball.len() {
                        for d in c + 1..ball.len() {
                            let q = [ball[a], ball[b], ball[c], ball[d]];
                            if (0..4).all(|i| (i + 1..4).all(|j| g.adjacent(q[i], q[j]))) {
                                count += 1;
                            }
                        }
                    }
                }
            }
            count
        })
        .collect()
}

fn main() -> graphequiv::Result<()> {
    let (s, r) = (shrikhande(), rook_graph(4, 4)?);
    println!("Shrikhande: {:?}", classify(&s)?);
    println!("rook 4x4:   {:?}", classify(&r)?);
    println!("wl2 ranks {} and {}", wl2_refine(&s)?.rank(), wl2_refine(&r)?.rank());
    println!("cospectral {}, c3 {}", cospectral(&s, &r), c3_equivalent(&s, &r)?);
    println!("K4 in closed neighbourhoods: {:?} vs {:?}", local_k4_counts(&s), local_k4_counts(&r));
    println!("isomorphism search: {:?}", find_isomorphism(&s, &r));
    Ok(())
}
