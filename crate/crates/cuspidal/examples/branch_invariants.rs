//! Local invariants of a single cusp from its Newton pairs: splice
//! decorations, semigroup, multiplicity sequence with blow-up counts, the
//! deformation codimensions and the characteristic polynomial.
//!
//! Run with `cargo run --example branch_invariants`.

use cuspidal::{
    alexander_poly, branch_from_newton_pairs, local_invariants, multiplicity_data, semigroup_of,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for pairs in [vec![(2u64, 3u64)], vec![(4, 5)], vec![(2, 7), (4, 17)]] {
        let branch = branch_from_newton_pairs(&pairs)?;
        let sg = semigroup_of(&branch)?;
        let md = multiplicity_data(&branch)?;
        let inv = local_invariants(&branch)?;
        let alex = alexander_poly(&sg)?;

        println!("cusp with Newton pairs {pairs:?}");
        println!("  splice decorations (p_k, a_k): {:?}", {
            let ps: Vec<_> = branch
                .newton_pairs()
                .iter()
                .map(|&(p, _)| p)
                .zip(branch.splice_decorations().iter().copied())
                .collect();
            ps
        });
        println!("  semigroup generators: {:?}", sg.generators());
        println!(
            "  delta = {}, Milnor number mu = {}, conductor = {}",
            sg.delta(),
            sg.mu(),
            sg.conductor()
        );
        println!(
            "  multiplicity sequence: [{}]",
            md.runs()
                .iter()
                .map(|&(m, c)| format!("{m}^{c}"))
                .collect::<Vec<_>>()
                .join(", ")
        );
        println!(
            "  inner blow-ups omega = {}, outer rho = {}, free points L = {}",
            md.omega(),
            md.rho(),
            md.free_points()
        );
        println!("  tau^es = {}  Mbar = tau^es - delta = {}", inv.tau_es, inv.mbar);
        let delta_poly = alex.delta_poly;
        if sg.mu() <= 24 {
            println!("  Delta(t) = {delta_poly}");
        } else {
            println!("  Delta(t): degree {}", sg.mu());
        }
        println!();
    }
    Ok(())
}
