//! Distance-regular and distance-biregular graphs: classification,
//! intersection arrays, and intersection numbers from the array recurrences
//! compared against direct counting.
//!
//! ```bash
//! cargo run --example distance_regularized
//! ```

use graphequiv::drg::{dbrg_cospectral_iff_arrays, recurrence_matches_count, semiregular_bipartition, semiregular_spectral_check_with};
use graphequiv::graph::named;
use graphequiv::{classify, drg_pnums, Classification};

fn main() -> graphequiv::Result<()> {
    for spec in ["petersen", "cycle:8", "complete:5", "complete-bipartite:2,3", "subdivision:complete:4", "path:4"] {
        let g = named(spec)?;
        let c = classify(&g)?;
        let desc = match &c {
            Classification::DistanceRegular(a) => format!("distance-regular {a}"),
            Classification::DistanceBiregular(a) => {
                format!("distance-biregular {} / {}, (k, l) = ({}, {}), parts {} + {}", a.iota1, a.iota2, a.k, a.l, a.p, a.q)
            }
            other => other.kind().to_string(),
        };
        let check = if c.is_distance_regularized() {
            format!("recurrence = count: {}", recurrence_matches_count(&g)?)
        } else {
            String::new()
        };
        println!("{spec:<26} {desc}  {check}");
    }

    let Classification::DistanceRegular(iota) = classify(&named("petersen")?)? else { unreachable!() };
    let p = drg_pnums(&iota)?;
    println!("Petersen p_ij(2):");
    for i in 0..=2 {
        println!("  {:?}", (0..=2).map(|j| p.get(i, j, 2)).collect::<Vec<_>>());
    }

    let s = named("subdivision:complete:4")?;
    println!("subdivision(K4) vs itself: (cospectral, same arrays) = {:?}", dbrg_cospectral_iff_arrays(&s, &s)?);

    let star = named("complete-bipartite:1,4")?;
    let b = semiregular_bipartition(&star)?;
    let r = semiregular_spectral_check_with(&star, &b, &star, &b.swapped())?;
    println!("K_(1,4) with its parts read both ways: {r:?}");
    Ok(())
}
