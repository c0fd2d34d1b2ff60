//! The semigroup distribution property at degree d and its equivalent
//! reformulations: D(t) = 0, N(t) = 0, R(t) = 0, R(1) = 0. The three
//! degree-5 semigroups show both outcomes, and the identity chain
//! R(t) = D(t^d)/(1-t^d) = N(t^d) is verified coefficientwise.
//!
//! Run with `cargo run --example distribution_property`.

use cuspidal::{branch_from_newton_pairs, distribution_report, semigroup_of, sw_both_ways};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = 5u64;
    for pairs in [vec![(4u64, 5u64)], vec![(2, 13)], vec![(3, 7)]] {
        let sg = semigroup_of(&branch_from_newton_pairs(&pairs)?)?;
        let sw = sw_both_ways(&sg, d)?;
        let rep = distribution_report(&sg, d, &sw)?;
        println!("cusp {pairs:?} at degree {d}: semigroup {:?}", sg.generators());
        for row in rep.interval_table.iter().take(6) {
            println!(
                "  interval l = {}: {} members, expected {}",
                row.l, row.count, row.expected
            );
        }
        println!("  D(t) = {}", rep.d_poly);
        println!("  N(t) = {}", rep.n_poly);
        println!("  R(t) = {}", rep.r_poly.unwrap());
        println!("  DP holds: {}", rep.dp_holds);
        println!("  R = D(t^d)/(1-t^d) = N(t^d): {}", rep.chain_ok.unwrap());
        println!("  R(1) = sw - (K^2+#)/8 - p_g: {}", rep.sw_identity_ok.unwrap());
        println!();
    }
    println!("(4,5) and (2,13) are realized by degree-5 curves; (3,7) is not, and DP refutes it.");
    Ok(())
}
