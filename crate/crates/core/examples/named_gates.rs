//! Full report for each named gate: chamber point, local invariants, Schmidt
//! spectrum and the entanglement measures derived from it.
//!
//!     cargo run --example named_gates

use twoq::ensemble::analyze_unitary;
use twoq::NamedGate;

fn main() -> twoq::Result<()> {
    println!(
        "{:<10} {:<30} {:>7} {:>7} {:>7} {:>7} {:>7}  class",
        "gate", "[c1, c2, c3]", "|G1|", "G2", "K_Sch", "L", "e_p"
    );
    for gate in NamedGate::ALL {
        let r = analyze_unitary(&gate.unitary(), None)?;
        let class = match (r.class.is_local, r.class.is_perfect_entangler) {
            (true, _) => "local",
            (_, true) if r.class.is_special_perfect_entangler => "special perfect entangler",
            (_, true) => "perfect entangler",
            _ => "",
        };
        println!(
            "{:<10} {:<30} {:>7.4} {:>7.4} {:>7.4} {:>7.4} {:>7.4}  {}",
            gate.label(),
            r.coordinates.to_string(),
            r.invariants.g1_abs,
            r.invariants.g2,
            r.k_sch,
            r.l(),
            r.entangling_power,
            class
        );
    }
    Ok(())
}
