//! Sweeps every chamber and perfect-entangler edge and writes one CSV per
//! edge, then checks which edge pairs share the same (K_Sch, L) profile.
//!
//!     cargo run --example edge_sweeps [out_dir] [steps]

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;

use twoq::ensemble::format::write_edge_csv;
use twoq::ensemble::{edge_sweep, Edge};

fn main() -> twoq::Result<()> {
    let mut args = std::env::args().skip(1);
    let out = PathBuf::from(args.next().unwrap_or_else(|| "edge_sweeps".into()));
    let steps: usize = args
        .next()
        .map_or(101, |s| s.parse().expect("steps must be an integer"));
    std::fs::create_dir_all(&out)?;

    for edge in Edge::all() {
        let records = edge_sweep(&edge.spec(), steps)?;
        let path = out.join(format!("{}.csv", edge.name()));
        write_edge_csv(BufWriter::new(File::create(&path)?), &records)?;

        let (k0, k1) = (records[0].record.k_sch, records[steps - 1].record.k_sch);
        let (l0, l1) = (records[0].record.l, records[steps - 1].record.l);
        println!(
            "{:<5} K_Sch {k0:.4} -> {k1:.4}   L {l0:.4} -> {l1:.4}   {}",
            edge.name(),
            path.display()
        );
    }

    println!();
    for (a, b) in [
        (Edge::QP, Edge::MN),
        (Edge::LQ, Edge::LM),
        (Edge::A2M, Edge::A2Q),
    ] {
        let (ra, rb) = (edge_sweep(&a.spec(), steps)?, edge_sweep(&b.spec(), steps)?);
        let gap = ra
            .iter()
            .zip(&rb)
            .map(|(x, y)| {
                (x.record.k_sch - y.record.k_sch)
                    .abs()
                    .max((x.record.l - y.record.l).abs())
            })
            .fold(0.0, f64::max);
        println!(
            "{} vs {}: max (K_Sch, L) difference {gap:.1e}",
            a.name(),
            b.name()
        );
    }
    Ok(())
}
