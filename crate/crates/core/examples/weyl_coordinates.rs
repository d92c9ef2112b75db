//! Local operations do not move a gate in the Weyl chamber.
//!
//! Dresses CNOT with random single-qubit gates, then recovers its chamber
//! point and Makhlin invariants. Finishes with a round trip through the
//! canonical gate for a few random chamber points.
//!
//!     cargo run --example weyl_coordinates

use twoq::canonical::{coordinates_from_unitary, invariants_from_point, invariants_from_unitary};
use twoq::ensemble::{chamber_point_at, haar_su2_at, DEFAULT_SEED};
use twoq::matkit::canonical_gate;
use twoq::NamedGate;

fn main() -> twoq::Result<()> {
    let cnot = NamedGate::Cnot.unitary();
    println!("CNOT          {}", coordinates_from_unitary(&cnot)?);

    for i in 0..3 {
        let k: Vec<_> = (0..4)
            .map(|j| haar_su2_at(DEFAULT_SEED, 4 * i + j))
            .collect();
        let dressed = cnot.dress((&k[0], &k[1]), (&k[2], &k[3]))?;
        let inv = invariants_from_unitary(&dressed);
        println!(
            "dressed #{i}    {}   G1 = {:.3e}{:+.3e}i   G2 = {:.6}",
            coordinates_from_unitary(&dressed)?,
            inv.g1.re,
            inv.g1.im,
            inv.g2
        );
    }

    println!("\nround trip  c -> exp{{i/2 (c1 XX + c2 YY + c3 ZZ)}} -> c");
    for i in 0..5 {
        let c = chamber_point_at(DEFAULT_SEED, i);
        let u = canonical_gate(&c);
        let back = coordinates_from_unitary(&u)?;
        let inv_gap = invariants_from_unitary(&u).distance(&invariants_from_point(&c));
        println!(
            "{c}  ->  {back}   |dc| = {:.1e}   |dG| = {inv_gap:.1e}",
            c.max_abs_diff(&back)
        );
    }
    Ok(())
}
