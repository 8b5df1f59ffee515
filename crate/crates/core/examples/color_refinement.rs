//! Colour refinement, C²-equivalence and the fractional-isomorphism witness.
//!
//! `C6` and `2K3` are both 2-regular, so refinement cannot tell them apart
//! even though one is connected and the other is not.
//!
//! ```bash
//! cargo run --example color_refinement
//! ```

use graphequiv::graph::{complete, cycle, disjoint_union, path};
use graphequiv::{c2_equivalent, color_refine, fractional_witness};

fn main() -> graphequiv::Result<()> {
    let p5 = path(5)?;
    let stable = color_refine(&p5);
    println!("P5 colours {:?}, classes {:?}, rounds {}", stable.colors(), stable.class_sizes(), stable.rounds());

    let c6 = cycle(6)?;
    let two_k3 = disjoint_union(&complete(3)?, &complete(3)?);
    println!("C6 ~ 2K3 under colour refinement: {}", c2_equivalent(&c6, &two_k3));

    let s = fractional_witness(&c6, &two_k3)?.expect("C²-equivalent graphs have a witness");
    println!("doubly stochastic witness, entry (0,0) = {}", s.get(0, 0));
    println!("row sums {:?}", s.row_sums().iter().map(ToString::to_string).collect::<Vec<_>>());

    let p6 = path(6)?;
    println!("C6 ~ P6: {}, witness: {:?}", c2_equivalent(&c6, &p6), fractional_witness(&c6, &p6)?.is_some());
    Ok(())
}
