//! Spectra versus refinement on the two classic small pairs.
//!
//! `K_{1,4}` and `C4 + K1` share a spectrum but not their coherent
//! configurations; `C6` and `2K3` share their colour refinement but not a
//! spectrum.
//!
//! ```bash
//! cargo run --example cospectral_pairs
//! ```

use graphequiv::graph::named;
use graphequiv::report::compare;
use graphequiv::{char_poly, walk_counts};

fn main() -> graphequiv::Result<()> {
    for (a, b) in [("complete-bipartite:1,4", "union:cycle:4+complete:1"), ("cycle:6", "union:complete:3+complete:3")] {
        let (g, h) = (named(a)?, named(b)?);
        println!("{a}  vs  {b}");
        println!("  char polys: {}  |  {}", char_poly(&g), char_poly(&h));
        println!("  walk counts: {:?}  |  {:?}", walk_counts(&g, 4).0, walk_counts(&h, 4).0);
        let r = compare(&g, &h)?;
        println!(
            "  c2={} c3={} cospectral={} generalized={} walk-equivalent={}",
            r.c2, r.c3, r.cospectral, r.generalized_cospectral, r.walk_equivalent
        );
    }
    Ok(())
}
