//! The six chamber edges and nine perfect-entangler polyhedron edges.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::{in_perfect_entangler_polyhedron, points, WeylPoint};
use crate::error::{Error, Result};
use crate::matkit::canonical_gate;

use super::record::ScatterRecord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Edge {
    OA1,
    OA2,
    OA3,
    A1A2,
    A1A3,
    A2A3,
    LM,
    LQ,
    LN,
    LP,
    MN,
    QP,
    A2M,
    A2Q,
    NP,
}

impl Edge {
    pub const CHAMBER: [Edge; 6] = [
        Edge::OA1,
        Edge::OA2,
        Edge::OA3,
        Edge::A1A2,
        Edge::A1A3,
        Edge::A2A3,
    ];

    pub const POLYHEDRON: [Edge; 9] = [
        Edge::LM,
        Edge::LQ,
        Edge::LN,
        Edge::LP,
        Edge::MN,
        Edge::QP,
        Edge::A2M,
        Edge::A2Q,
        Edge::NP,
    ];

    pub fn all() -> impl Iterator<Item = Edge> {
        Self::CHAMBER.into_iter().chain(Self::POLYHEDRON)
    }

    pub fn name(self) -> &'static str {
        match self {
            Edge::OA1 => "OA1",
            Edge::OA2 => "OA2",
            Edge::OA3 => "OA3",
            Edge::A1A2 => "A1A2",
            Edge::A1A3 => "A1A3",
            Edge::A2A3 => "A2A3",
            Edge::LM => "LM",
            Edge::LQ => "LQ",
            Edge::LN => "LN",
            Edge::LP => "LP",
            Edge::MN => "MN",
            Edge::QP => "QP",
            Edge::A2M => "A2M",
            Edge::A2Q => "A2Q",
            Edge::NP => "NP",
        }
    }

    pub fn spec(self) -> EdgeSpec {
        use points::*;
        let (start, end) = match self {
            Edge::OA1 => (O, A1),
            Edge::OA2 => (O, A2),
            Edge::OA3 => (O, A3),
            Edge::A1A2 => (A1, A2),
            Edge::A1A3 => (A1, A3),
            Edge::A2A3 => (A2, A3),
            Edge::LM => (L, M),
            Edge::LQ => (L, Q),
            Edge::LN => (L, N),
            Edge::LP => (L, P),
            Edge::MN => (M, N),
            Edge::QP => (Q, P),
            Edge::A2M => (A2, M),
            Edge::A2Q => (A2, Q),
            Edge::NP => (N, P),
        };
        EdgeSpec {
            edge: self,
            start,
            end,
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Edge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase();
        Edge::all()
            .find(|e| e.name() == key)
            .ok_or_else(|| Error::UnknownEdge(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EdgeSpec {
    pub edge: Edge,
    pub start: WeylPoint,
    pub end: WeylPoint,
}

/// Point at parameter `t ∈ [0, 1]` along the edge.
pub fn edge_point(e: &EdgeSpec, t: f64) -> Result<WeylPoint> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::OutOfRange {
            what: "edge parameter",
            value: t,
            lo: 0.0,
            hi: 1.0,
        });
    }
    Ok(e.start.lerp(&e.end, t))
}

/// Number of bounding planes of the perfect-entangler polyhedron through `c`.
pub fn active_polyhedron_faces(c: &WeylPoint, tol: f64) -> usize {
    let planes = [
        c.c1 + c.c2 - FRAC_PI_2,
        c.c1 - c.c2 - FRAC_PI_2,
        c.c2 + c.c3 - FRAC_PI_2,
        c.c3,
        c.c1 - c.c2,
        c.c2 - c.c3,
        c.c1 + c.c2 - PI,
    ];
    planes.iter().filter(|v| v.abs() <= tol).count()
}

/// Whether every point of the edge is a polyhedron member lying on at least
/// two of its faces, checked on a grid.
pub fn lies_on_polyhedron_edge(e: &EdgeSpec, steps: usize) -> bool {
    (0..steps).all(|k| {
        let c = e.start.lerp(&e.end, k as f64 / (steps - 1) as f64);
        in_perfect_entangler_polyhedron(&c, 1e-12) && active_polyhedron_faces(&c, 1e-12) >= 2
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EdgeRecord {
    pub t: f64,
    #[serde(flatten)]
    pub record: ScatterRecord,
}

/// Records at `t = k/(steps−1)`, `k = 0..steps`, ordered by `t`.
pub fn edge_sweep(e: &EdgeSpec, steps: usize) -> Result<Vec<EdgeRecord>> {
    if steps < 2 {
        return Err(Error::OutOfRange {
            what: "steps",
            value: steps as f64,
            lo: 2.0,
            hi: f64::INFINITY,
        });
    }
    (0..steps)
        .into_par_iter()
        .map(|k| {
            let t = k as f64 / (steps - 1) as f64;
            let c = edge_point(e, t)?;
            let record = ScatterRecord::from_gate(c, &canonical_gate(&c))?;
            Ok(EdgeRecord { t, record })
        })
        .collect()
}
