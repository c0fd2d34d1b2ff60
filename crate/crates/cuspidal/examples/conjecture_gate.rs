//! The coefficient gate: for a collection of cusps with total Milnor number
//! (d-1)(d-2), the profile n_l = c_l - (l+1)(l+2)/2 is symmetric with
//! n_0 = 0, and realizable collections must have every n_l <= 0 (for a
//! single cusp the conjectural identity is n_l = 0).
//!
//! Run with `cargo run --example conjecture_gate`.

use cuspidal::{branch_from_newton_pairs, conjecture_a_check, CurveSpec};

type Case = (&'static str, u64, Vec<Vec<(u64, u64)>>);

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases: Vec<Case> = vec![
        ("quintic, cusp (2,13)", 5, vec![vec![(2, 13)]]),
        ("quintic, cusp (3,7) [not realizable]", 5, vec![vec![(3, 7)]]),
        ("cuspidal cubic", 3, vec![vec![(2, 3)]]),
        ("tricuspidal quartic", 4, vec![vec![(2, 3)]; 3]),
        (
            "degree 7, cusps (2,3)+(2,15)",
            7,
            vec![vec![(2, 3)], vec![(2, 15)]],
        ),
    ];
    for (name, d, cusp_pairs) in cases {
        let cusps = cusp_pairs
            .iter()
            .map(|p| branch_from_newton_pairs(p))
            .collect::<Result<Vec<_>, _>>()?;
        let spec = CurveSpec::new(d, cusps)?;
        let rep = conjecture_a_check(&spec)?;
        println!("{name} (d = {d})");
        println!("  c_l = {:?}", rep.c);
        println!("  n_l = {:?}  (symmetric, n_0 = 0)", rep.n);
        println!("  gate (all n_l <= 0): {}\n", rep.pass);
    }
    Ok(())
}
