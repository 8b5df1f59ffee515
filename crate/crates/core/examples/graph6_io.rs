//! Reading and writing graph6 and the JSON edge-list format.
//!
//! ```bash
//! cargo run --example graph6_io
//! cargo run --example graph6_io -- 'IheA@GUAo'
//! ```

use graphequiv::graph::graph6::{parse_edge_list_json, parse_graph6, write_edge_list_json, write_graph6};
use graphequiv::graph::petersen;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = match std::env::args().nth(1) {
        Some(text) => parse_graph6(&text)?,
        None => petersen(),
    };
    let g6 = write_graph6(&g);
    let json = write_edge_list_json(&g);
    println!("graph6: {g6}");
    println!("json:   {json}");

    // both encodings round-trip to the same labeled graph
    assert_eq!(parse_graph6(&g6)?, g);
    assert_eq!(parse_edge_list_json(&json)?, g);
    println!("n = {}, m = {}, degrees = {:?}", g.order(), g.size(), g.degrees());
    Ok(())
}
