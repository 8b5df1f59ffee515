//! Two-dimensional refinement: the coherent configuration of a graph,
//! its rank, relation table and intersection numbers.
//!
//! ```bash
//! cargo run --example coherent_configuration
//! cargo run --example coherent_configuration -- 'subdivision:complete:4'
//! ```

use graphequiv::graph::named;
use graphequiv::wl2_refine;

fn main() -> graphequiv::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "cycle:8".into());
    let g = named(&spec)?;
    let cc = wl2_refine(&g)?;
    println!("{spec}: rank {} after {} rounds", cc.rank(), cc.rounds());
    println!("diagonal relations {:?}, edge relations {:?}", cc.diagonal_relations(), cc.edge_relations());

    println!("relation table:");
    for x in 0..g.order() {
        let row: Vec<String> = (0..g.order()).map(|y| cc.relation(x, y).to_string()).collect();
        println!("  {}", row.join(" "));
    }
    for i in 0..cc.rank() {
        println!("  R{i}: {} ordered pairs, converse R{}", cc.relation_size(i), cc.converse(i));
    }
    // nonzero intersection numbers over the first edge relation
    if let Some(&k) = cc.edge_relations().first() {
        for i in 0..cc.rank() {
            for j in 0..cc.rank() {
                if cc.p(i, j, k) > 0 {
                    println!("  p_{i},{j}({k}) = {}", cc.p(i, j, k));
                }
            }
        }
    }
    Ok(())
}
