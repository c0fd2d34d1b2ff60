//! Singularity spectra and the semicontinuity test against x^d + y^d:
//! for every l = 2..d-1 the number of spectral values below l/d may not
//! exceed (l-2)(l-1)/2. All comparisons are exact rational arithmetic.
//!
//! Run with `cargo run --example spectrum_semicontinuity`.

use cuspidal::{branch_from_newton_pairs, semicontinuity_check, spectrum};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (pairs, d) in [
        (vec![(2u64, 3u64)], 3u64),
        (vec![(4, 5)], 5),
        (vec![(3, 7)], 5),
        (vec![(2, 7), (4, 17)], 17),
    ] {
        let branch = branch_from_newton_pairs(&pairs)?;
        let sp = spectrum(&branch);
        println!("cusp {pairs:?}: {} spectral values in (0,1)", sp.len());
        if sp.len() <= 8 {
            let shown: Vec<String> = sp.values().iter().map(|v| v.to_string()).collect();
            println!("  spectrum: {{{}}}", shown.join(", "));
        }
        let rep = semicontinuity_check(&branch, d)?;
        println!("  semicontinuity against degree {d}: {}", if rep.pass { "passes" } else { "FAILS" });
        for row in rep.rows.iter().filter(|r| !r.pass) {
            println!(
                "    l = {:>2}: {} values below {}/{d}, bound {}",
                row.l, row.count, row.l, row.bound
            );
        }
        println!();
    }
    Ok(())
}
