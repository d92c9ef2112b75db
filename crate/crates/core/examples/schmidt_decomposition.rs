//! Operator-Schmidt decomposition `U = Σ s_l A_l ⊗ B_l` of a few gates,
//! with the derived Schmidt strength, linear entropy and concurrence.
//!
//!     cargo run --example schmidt_decomposition

use twoq::matkit::{canonical_gate, max_abs_diff};
use twoq::schmidt::{
    linear_entropy_coeffs, linear_entropy_permutation, operator_concurrence, schmidt_decompose,
    schmidt_number, schmidt_strength, SCHMIDT_EPS,
};
use twoq::{NamedGate, WeylPoint};

fn main() -> twoq::Result<()> {
    let gates = [
        ("CNOT".to_string(), NamedGate::Cnot.unitary()),
        ("SQRT_SWAP".to_string(), NamedGate::SqrtSwap.unitary()),
        ("SWAP".to_string(), NamedGate::Swap.unitary()),
        (
            "[1.0, 0.6, 0.2]".to_string(),
            canonical_gate(&WeylPoint::new(1.0, 0.6, 0.2)),
        ),
    ];

    for (name, u) in &gates {
        let f = schmidt_decompose(u);
        let sp = &f.spectrum;
        let n = schmidt_number(sp, SCHMIDT_EPS)?;
        println!("{name}");
        println!("  s              = {:.6?}", sp.values());
        println!("  Schmidt number = {n}");
        println!("  K_Sch          = {:.6}", schmidt_strength(sp));
        println!(
            "  L              = {:.6} (coefficients), {:.6} (permutation trace)",
            linear_entropy_coeffs(sp),
            linear_entropy_permutation(u)
        );
        if n <= 2 {
            println!("  concurrence    = {:.6}", operator_concurrence(sp)?);
        }
        println!(
            "  reconstruction error {:.1e}",
            max_abs_diff(&f.reconstruct(), u.matrix())
        );
    }
    Ok(())
}
