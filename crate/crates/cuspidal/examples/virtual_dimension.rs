//! Global dimension bookkeeping for rational cuspidal curves: expected and
//! virtual dimension, Cbar^2, chi of the logarithmic tangent sheaf, the
//! Orevkov inequality and the non-negativity gate, plus the superisolated
//! smoothing invariants that depend on the degree alone.
//!
//! The cuspidal cubic is the classical boundary case: its one-dimensional
//! stabilizer makes the plain Orevkov inequality fail while the corrected
//! virtual dimension is exactly zero.
//!
//! Run with `cargo run --example virtual_dimension`.

use cuspidal::{
    branch_from_newton_pairs, dimensions_report, superisolated_invariants, CurveSpec,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // the cuspidal cubic x^2 y + z^3, a pencil member with stabilizer 1
    let cubic = CurveSpec::new(3, vec![branch_from_newton_pairs(&[(2, 3)])?])?
        .with_pencil(3, 1);
    // a quintic with the (4,5) cusp, stabilizer declared trivial
    let quintic = CurveSpec::new(5, vec![branch_from_newton_pairs(&[(4, 5)])?])?
        .with_stab_dim(0);
    // a quartic with three ordinary cusps: three cusps force stabilizer 0
    let b23 = branch_from_newton_pairs(&[(2, 3)])?;
    let tricuspidal = CurveSpec::new(4, vec![b23.clone(), b23.clone(), b23])?;

    for (name, spec) in [
        ("cuspidal cubic", cubic),
        ("quintic with a (4,5) cusp", quintic),
        ("tricuspidal quartic", tricuspidal),
    ] {
        let rep = dimensions_report(&spec, false)?;
        println!("{name} (degree {}, {} cusps)", rep.degree, rep.nu);
        println!("  genus condition ok     : {}", rep.genus_ok);
        println!("  stabilizer             : {} ({})", rep.stab.dim, rep.stab.source);
        println!("  expected dimension     : {}", rep.expdim);
        println!("  virtual dimension      : {}", rep.virtdim);
        println!("  Cbar^2 = {}, chi(Theta<D>) = {}", rep.cbar_sq, rep.chi_theta);
        println!("  sum Mbar <= 3d-9       : {}", rep.orevkov_ok);
        println!("  virtual dim >= 0       : {}", rep.virtdim_ok);
        println!("  expressions consistent : {}", rep.identities_ok);
        let si = superisolated_invariants(rep.degree)?;
        println!(
            "  superisolated: p_g = {}, K^2+# = {}, sigma(F) = {}",
            si.p_g, si.k2_plus_sharp, si.sigma_f
        );
        if let Some(note) = &rep.coolidge_nagata_note {
            println!("  note: {note}");
        }
        println!();
    }
    Ok(())
}
