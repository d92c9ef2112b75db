//! Schmidt strength against linear entropy over random gates.
//!
//! Prints the correlation and covariance for both sampling modes and checks
//! that no gate falls below the Schmidt-number-2 curve `K(L)`, which bounds
//! the scatter from below.
//!
//!     cargo run --release --example scatter_study [n] [csv_path]

use std::fs::File;
use std::io::BufWriter;

use twoq::ensemble::format::write_scatter_csv;
use twoq::ensemble::{scatter_study, ScatterMode, DEFAULT_SEED};

fn main() -> twoq::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args
        .next()
        .map_or(20_000, |s| s.parse().expect("n must be an integer"));
    let csv = args.next();

    for mode in [ScatterMode::ChamberUniform, ScatterMode::Haar] {
        let study = scatter_study(n, DEFAULT_SEED, mode)?;
        let pe = study.records.iter().filter(|r| r.is_pe).count();
        println!("{mode:?}, n = {n}");
        println!("  pearson(K_Sch, L)    {:.4}", study.pearson);
        println!("  covariance(K_Sch, L) {:.4}", study.covariance);
        println!(
            "  perfect entanglers   {:.1}%",
            100.0 * pe as f64 / n as f64
        );
        println!("  below K(L) curve     {}", study.envelope_violations);
        if let Some(w) = &study.warning {
            println!("  warning: {w}");
        }

        if let (ScatterMode::ChamberUniform, Some(path)) = (mode, &csv) {
            write_scatter_csv(BufWriter::new(File::create(path)?), &study)?;
            println!("  wrote {path}");
        }
    }
    Ok(())
}
