//! Runs the implication suite over every labeled graph up to `n` vertices
//! and prints the summary, including the count of controllable graphs.
//!
//! ```bash
//! cargo run --release --example corpus_census -- 6
//! ```

use graphequiv::corpus::{verify_corpus, Source};
use graphequiv::report::Suite;

fn main() -> graphequiv::Result<()> {
    let n_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let summary = verify_corpus(Source::Enumerate { n_max }, Suite::All)?;
    print!("{}", summary.to_human());
    if !summary.is_clean() {
        std::process::exit(1);
    }
    Ok(())
}
