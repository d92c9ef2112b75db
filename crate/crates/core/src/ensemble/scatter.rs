use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::coordinates_from_unitary;
use crate::error::{Error, Result};
use crate::matkit::canonical_gate;
use crate::schmidt::strength_from_entropy_rank2;

use super::record::ScatterRecord;
use super::sampling::{chamber_point_at, haar_su4_at};
use super::stats::{covariance, pearson};

/// Slack on the lower envelope `K_Sch ≥ K_rank2(L)`.
pub const ENVELOPE_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScatterMode {
    /// Euclidean-uniform points of the reduced chamber.
    ChamberUniform,
    /// Haar-random gates.
    Haar,
}

impl FromStr for ScatterMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "chamber" | "chamber-uniform" => Ok(ScatterMode::ChamberUniform),
            "haar" => Ok(ScatterMode::Haar),
            other => Err(Error::Parse(format!("unknown scatter mode '{other}'"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScatterStudy {
    pub records: Vec<ScatterRecord>,
    /// Pearson correlation of `(K_Sch, L)`; NaN if a variance vanishes.
    pub pearson: f64,
    /// Sample covariance of `(K_Sch, L)`.
    pub covariance: f64,
    /// Records with `L ≤ 1/2` lying below the Schmidt-number-2 curve.
    pub envelope_violations: usize,
    pub warning: Option<String>,
}

impl ScatterStudy {
    pub fn from_records(records: Vec<ScatterRecord>) -> Result<Self> {
        let k: Vec<f64> = records.iter().map(|r| r.k_sch).collect();
        let l: Vec<f64> = records.iter().map(|r| r.l).collect();
        let pearson = pearson(&k, &l);
        let warning = pearson
            .is_nan()
            .then(|| "correlation undefined: zero variance in K_Sch or L".to_string());
        let mut envelope_violations = 0;
        for r in &records {
            if r.l <= 0.5 && r.k_sch < strength_from_entropy_rank2(r.l)? - ENVELOPE_TOL {
                envelope_violations += 1;
            }
        }
        Ok(Self {
            covariance: covariance(&k, &l),
            records,
            pearson,
            envelope_violations,
            warning,
        })
    }
}

/// Samples `n` gates and correlates their Schmidt strength with their linear
/// entropy.
pub fn scatter_study(n: usize, seed: u64, mode: ScatterMode) -> Result<ScatterStudy> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "scatter sample count",
            value: n as f64,
            lo: 2.0,
            hi: f64::INFINITY,
        });
    }
    let records = (0..n as u64)
        .into_par_iter()
        .map(|i| match mode {
            ScatterMode::ChamberUniform => {
                let c = chamber_point_at(seed, i);
                ScatterRecord::from_gate(c, &canonical_gate(&c))
            }
            ScatterMode::Haar => {
                let u = haar_su4_at(seed, i);
                ScatterRecord::from_gate(coordinates_from_unitary(&u)?, &u)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    ScatterStudy::from_records(records)
}
