//! Runs the cross-formula identity checks and prints one line per check.
//!
//!     cargo run --release --example verify [n]

use twoq::ensemble::{run_verification, DEFAULT_SEED};

fn main() -> twoq::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .map_or(200, |s| s.parse().expect("n must be an integer"));
    let summary = run_verification(n, DEFAULT_SEED)?;
    for c in &summary.checks {
        println!(
            "{} {:<44} max deviation {:.2e}  (tol {:.0e}, {} samples)",
            if c.passed { "ok  " } else { "FAIL" },
            c.name,
            c.max_deviation,
            c.tolerance,
            c.samples
        );
    }
    println!(
        "{}",
        if summary.passed {
            "all checks passed"
        } else {
            "some checks failed"
        }
    );
    std::process::exit(if summary.passed { 0 } else { 1 });
}
