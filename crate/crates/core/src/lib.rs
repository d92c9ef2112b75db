//! Local invariants, Weyl chamber geometry and operator entanglement of
//! two-qubit gates.
//!
//! Given any 4×4 unitary the crate recovers its canonical coordinates
//! `[c1, c2, c3]` and Makhlin invariants `(G1, G2)`, decomposes it in
//! operator-Schmidt form, and evaluates the Schmidt strength, linear entropy,
//! operator concurrence and entangling power, most of them along several
//! independent routes that can be checked against each other.
//!
//! ```
//! use twoq::canonical::NamedGate;
//! use twoq::ensemble::analyze_unitary;
//!
//! let report = analyze_unitary(&NamedGate::Cnot.unitary(), None).unwrap();
//! assert!((report.l() - 0.5).abs() < 1e-9);
//! assert!(report.class.is_perfect_entangler);
//! ```
//!
//! Modules:
//! - [`matkit`]: small complex matrix kernel and the canonical gate
//! - [`canonical`]: coordinates, invariants, chamber reduction, classification
//! - [`schmidt`]: operator-Schmidt decomposition and the measures built on it
//! - [`nonlocal`]: closed forms in coordinates/invariants and Monte-Carlo entangling power
//! - [`ensemble`]: samplers, edge sweeps, scatter statistics, reports, verification

pub mod canonical;
pub mod ensemble;
pub mod error;
pub mod matkit;
pub mod nonlocal;
pub mod schmidt;

pub use canonical::{LocalInvariants, NamedGate, WeylPoint};
pub use error::{Error, Result};
pub use matkit::{ComplexMatrix, Unitary4};
pub use schmidt::SchmidtSpectrum;
