//! The degree-17 candidate with Newton pairs (2,7), (4,17): every classical
//! necessary condition passes, including the semigroup distribution
//! property, yet spectrum semicontinuity fails at l = 12 — so no such curve
//! exists. This example walks the full refutation pipeline.
//!
//! Run with `cargo run --example degree17_counterexample`.

use cuspidal::{
    branch_from_newton_pairs, candidate_pipeline, semicontinuity_check, semigroup_of, spectrum,
    CurveSpec,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let branch = branch_from_newton_pairs(&[(2, 7), (4, 17)])?;
    let d = 17u64;

    let sg = semigroup_of(&branch)?;
    println!("candidate: degree {d}, Newton pairs {:?}", branch.newton_pairs());
    println!("semigroup <{}, {}, {}>", sg.generators()[0], sg.generators()[1], sg.generators()[2]);
    println!(
        "Milnor number {} = 16*15, so the genus formula admits degree 17",
        sg.mu()
    );

    let verdict = candidate_pipeline(&CurveSpec::new(d, vec![branch.clone()])?)?;
    println!("\nfilters:");
    println!("  genus condition       : {}", verdict.filters.genus);
    println!("  distribution property : {}", verdict.filters.dp);
    println!("  semicontinuity        : {}", verdict.filters.semicontinuity);

    let sp = spectrum(&branch);
    println!("\nspectrum has {} elements in (0,1)", sp.len());
    let report = semicontinuity_check(&branch, d)?;
    for row in report.rows.iter().filter(|r| !r.pass) {
        println!(
            "  l = {}: #(alpha < {}/{}) = {} exceeds the bound {} by {}",
            row.l,
            row.l,
            d,
            row.count,
            row.bound,
            row.count - row.bound
        );
    }
    println!("\nno unicuspidal rational plane curve of degree 17 carries this cusp.");
    Ok(())
}
