//! The three canonical graded roots at d = 5: the surgeries along the
//! (2,13) and (4,5) torus knots match the Brieskorn sphere Sigma(5,5,6),
//! the (3,7) surgery does not. Prints the trees, the isomorphism verdicts,
//! and the graded ranks of the associated Z[U]-modules.
//!
//! Run with `cargo run --example graded_roots_d5`.

use cuspidal::cli::render_ascii;
use cuspidal::{
    branch_from_newton_pairs, hplus_ranks, root_from_tau, roots_isomorphic, semigroup_of,
    sw_from_root, tau_for, Manifold,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = 5u64;
    let knots = [vec![(2u64, 13u64)], vec![(4, 5)], vec![(3, 7)]];
    let mut roots = Vec::new();
    for pairs in &knots {
        let sg = semigroup_of(&branch_from_newton_pairs(pairs)?)?;
        let tau = tau_for(&Manifold::Surgery { sg: &sg, d })?;
        println!("S^3_{{-5}}(T_{{{},{}}}): tau = {:?}", pairs[0].0, pairs[0].1, tau.values);
        let root = root_from_tau(&tau);
        print!("{}", render_ascii(&root));
        println!();
        roots.push((format!("T_{{{},{}}}", pairs[0].0, pairs[0].1), tau, root));
    }
    let tau_b = tau_for(&Manifold::Brieskorn { d })?;
    println!("Sigma(5,5,6): tau = {:?}", tau_b.values);
    let root_b = root_from_tau(&tau_b);
    print!("{}", render_ascii(&root_b));
    println!();

    for (name, tau, root) in &roots {
        let iso = roots_isomorphic(root, &root_b);
        // surgery shift data: K^2 + # = 1 - d(d-2)^2 = -44
        let sw = sw_from_root(tau, -44);
        println!("S^3_{{-5}}({name}) vs Sigma(5,5,6): isomorphic = {iso}, sw = {sw}");
    }

    println!("\ngraded ranks of H(R, chi) for the (2,13) root, degrees -12..4:");
    let ranks = hplus_ranks(&roots[0].2, -12, 4)?;
    for (h, r) in &ranks.ranks {
        println!("  degree {h:>4}: rank {r}");
    }
    Ok(())
}
