//! Entangling power as a closed form in `G1` versus a Monte-Carlo average
//! over random product inputs.
//!
//!     cargo run --release --example entangling_power [samples]

use twoq::canonical::invariants_from_unitary;
use twoq::ensemble::{haar_su4_at, DEFAULT_SEED};
use twoq::nonlocal::{entangling_power_invariant, entangling_power_montecarlo};
use twoq::NamedGate;

fn main() {
    let samples: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("samples must be a positive integer"))
        .unwrap_or(100_000);

    let mut gates: Vec<(String, _)> = NamedGate::ALL
        .iter()
        .map(|g| (g.label().to_string(), g.unitary()))
        .collect();
    gates.extend((0..3).map(|i| (format!("haar #{i}"), haar_su4_at(DEFAULT_SEED, i))));

    println!(
        "{:<10} {:>10} {:>10} {:>10} {:>7}",
        "gate", "exact", "estimate", "std err", "z"
    );
    for (name, u) in &gates {
        let exact = entangling_power_invariant(&invariants_from_unitary(u));
        let mc = entangling_power_montecarlo(u, samples, DEFAULT_SEED);
        // local gates and SWAP never entangle, so every sample is zero
        let z = if mc.std_error > 1e-12 {
            format!("{:.2}", (mc.mean - exact) / mc.std_error)
        } else {
            "-".to_string()
        };
        println!(
            "{name:<10} {exact:>10.6} {:>10.6} {:>10.2e} {z:>7}",
            mc.mean, mc.std_error
        );
    }
}
