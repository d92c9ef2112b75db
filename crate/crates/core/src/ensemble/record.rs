use serde::Serialize;

use crate::canonical::{classify, invariants_from_unitary, WeylPoint};
use crate::error::Result;
use crate::matkit::Unitary4;
use crate::nonlocal::entangling_power_invariant;
use crate::schmidt::{
    linear_entropy_coeffs, schmidt_decompose, schmidt_number, schmidt_strength, SCHMIDT_EPS,
};

/// Operator-entanglement measures of one gate, as emitted by sweeps and
/// scatter studies.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ScatterRecord {
    pub point: WeylPoint,
    pub spectrum: [f64; 4],
    pub k_sch: f64,
    pub l: f64,
    pub ep: f64,
    pub schmidt_number: usize,
    pub is_pe: bool,
}

impl ScatterRecord {
    /// `point` must be the chamber point of `u`; it is used for classification.
    pub fn from_gate(point: WeylPoint, u: &Unitary4) -> Result<Self> {
        let spectrum = schmidt_decompose(u).spectrum;
        let inv = invariants_from_unitary(u);
        Ok(Self {
            point,
            spectrum: spectrum.values(),
            k_sch: schmidt_strength(&spectrum),
            l: linear_entropy_coeffs(&spectrum),
            ep: entangling_power_invariant(&inv),
            schmidt_number: schmidt_number(&spectrum, SCHMIDT_EPS)?,
            is_pe: classify(&point, &inv).is_perfect_entangler,
        })
    }
}
