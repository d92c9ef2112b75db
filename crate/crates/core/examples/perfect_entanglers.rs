//! Perfect entanglers among uniformly sampled chamber points: how many there
//! are, and the range of linear entropy and of the local invariants they
//! reach.
//!
//!     cargo run --release --example perfect_entanglers [n]

use twoq::canonical::{classify, invariants_from_point};
use twoq::ensemble::{sample_chamber_uniform, DEFAULT_SEED};
use twoq::nonlocal::perfect_entangler_entropy_bounds;

fn main() -> twoq::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .map_or(50_000, |s| s.parse().expect("n must be an integer"));

    let mut pe = Vec::new();
    let mut special = 0;
    let (mut g1_max, mut g2_lo, mut g2_hi) = (0.0f64, f64::INFINITY, f64::NEG_INFINITY);
    for c in sample_chamber_uniform(n, DEFAULT_SEED) {
        let inv = invariants_from_point(&c);
        let class = classify(&c, &inv);
        if class.is_perfect_entangler {
            g1_max = g1_max.max(inv.g1.norm());
            g2_lo = g2_lo.min(inv.g2);
            g2_hi = g2_hi.max(inv.g2);
            special += usize::from(class.is_special_perfect_entangler);
            pe.push(c);
        }
    }

    let (lo, hi) = perfect_entangler_entropy_bounds(&pe)?;
    println!(
        "{} of {n} chamber points are perfect entanglers ({:.2}%)",
        pe.len(),
        100.0 * pe.len() as f64 / n as f64
    );
    println!("special perfect entanglers: {special}");
    println!("linear entropy range   [{lo:.6}, {hi:.6}]   (limits 7/16 and 3/4)");
    println!("max |G1|               {g1_max:.6}   (limit 1/4)");
    println!("G2 range               [{g2_lo:.6}, {g2_hi:.6}]   (limits -1 and 1)");
    Ok(())
}
