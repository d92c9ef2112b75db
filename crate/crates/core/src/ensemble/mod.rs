//! Samplers, edge sweeps, scatter statistics, single-gate reports and the
//! verification suite.

pub mod edges;
pub mod format;
pub mod record;
pub mod report;
pub mod sampling;
pub mod scatter;
pub mod stats;
pub mod verify;

pub use edges::{edge_point, edge_sweep, Edge, EdgeRecord, EdgeSpec};
pub use record::ScatterRecord;
pub use report::{analyze_gate, analyze_unitary, GateReport, MatrixSource, MonteCarloConfig};
pub use sampling::{
    chamber_point_at, haar_su2_at, haar_su4_at, sample_chamber_uniform, sample_haar_su4,
};
pub use scatter::{scatter_study, ScatterMode, ScatterStudy};
pub use verify::{run_verification, VerifySummary};

/// Seed used by the command-line tool when none is given.
pub const DEFAULT_SEED: u64 = 1;
