//! Weyl chamber coordinates, Makhlin invariants and perfect-entangler
//! classification of two-qubit gates.
//!
//! Coordinates follow `U = k1 · exp{(i/2)(c1 XX + c2 YY + c3 ZZ)} · k2`. The
//! reduced chamber is the tetrahedron with vertices `O = [0,0,0]`,
//! `A1 = [π,0,0]`, `A2 = [π/2,π/2,0]` and `A3 = [π/2,π/2,π/2]`, i.e.
//! `0 ≤ c3 ≤ c2 ≤ c1`, `c1 + c2 ≤ π`. On the base face `c3 = 0` the points
//! `[c1, c2, 0]` and `[π − c1, c2, 0]` are the same class; the representative
//! with `c1 ≤ π/2` is returned by [`weyl_reduce`].

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matkit::{self, eigenphases_symmetric_unitary, magic_basis, ComplexMatrix, Unitary4};

/// Tolerance for classification and chamber membership.
pub const CLASSIFY_TOL: f64 = 1e-9;

/// Tolerance for the coordinate-recovery invariant check.
pub const RECOVERY_TOL: f64 = 1e-8;

/// Below this `c3` a reduced point is treated as lying on the base face.
const BASE_FACE_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct WeylPoint {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl WeylPoint {
    pub const fn new(c1: f64, c2: f64, c3: f64) -> Self {
        Self { c1, c2, c3 }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.c1, self.c2, self.c3]
    }

    pub fn max_abs_diff(&self, other: &WeylPoint) -> f64 {
        (self.c1 - other.c1)
            .abs()
            .max((self.c2 - other.c2).abs())
            .max((self.c3 - other.c3).abs())
    }

    /// Membership in the reduced tetrahedron O–A1–A2–A3, with slack `tol`.
    pub fn in_chamber(&self, tol: f64) -> bool {
        let Self { c1, c2, c3 } = *self;
        c3 >= -tol
            && c2 >= c3 - tol
            && c1 >= c2 - tol
            && c1 + c2 <= PI + tol
            && c2 <= FRAC_PI_2 + tol
    }

    /// Linear interpolation `self + t (other − self)`.
    pub fn lerp(&self, other: &WeylPoint, t: f64) -> WeylPoint {
        WeylPoint::new(
            self.c1 + t * (other.c1 - self.c1),
            self.c2 + t * (other.c2 - self.c2),
            self.c3 + t * (other.c3 - self.c3),
        )
    }
}

impl fmt::Display for WeylPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.6}, {:.6}, {:.6}]", self.c1, self.c2, self.c3)
    }
}

/// Vertices of the chamber and of the perfect-entangler polyhedron.
pub mod points {
    use super::*;

    pub const O: WeylPoint = WeylPoint::new(0.0, 0.0, 0.0);
    pub const A1: WeylPoint = WeylPoint::new(PI, 0.0, 0.0);
    pub const A2: WeylPoint = WeylPoint::new(FRAC_PI_2, FRAC_PI_2, 0.0);
    pub const A3: WeylPoint = WeylPoint::new(FRAC_PI_2, FRAC_PI_2, FRAC_PI_2);
    pub const L: WeylPoint = WeylPoint::new(FRAC_PI_2, 0.0, 0.0);
    pub const M: WeylPoint = WeylPoint::new(3.0 * FRAC_PI_4, FRAC_PI_4, 0.0);
    pub const N: WeylPoint = WeylPoint::new(3.0 * FRAC_PI_4, FRAC_PI_4, FRAC_PI_4);
    pub const P: WeylPoint = WeylPoint::new(FRAC_PI_4, FRAC_PI_4, FRAC_PI_4);
    pub const Q: WeylPoint = WeylPoint::new(FRAC_PI_4, FRAC_PI_4, 0.0);

    pub const IDENTITY: WeylPoint = O;
    pub const CNOT: WeylPoint = L;
    pub const DCNOT: WeylPoint = A2;
    pub const SWAP: WeylPoint = A3;
    pub const SQRT_SWAP: WeylPoint = P;
}

/// Makhlin invariants `(G1, G2)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LocalInvariants {
    pub g1: Complex64,
    pub g2: f64,
}

impl LocalInvariants {
    /// Largest of `|ΔG1|` and `|ΔG2|`.
    pub fn distance(&self, other: &LocalInvariants) -> f64 {
        (self.g1 - other.g1).norm().max((self.g2 - other.g2).abs())
    }

    /// The necessary conditions `|G1| ≤ 1/4`, `−1 ≤ G2 ≤ 1` satisfied by every
    /// perfect entangler.
    pub fn within_perfect_entangler_bounds(&self, tol: f64) -> bool {
        self.g1.norm() <= 0.25 + tol && self.g2 >= -1.0 - tol && self.g2 <= 1.0 + tol
    }
}

/// Gates with a conventional name, used to label chamber points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum NamedGate {
    Identity,
    Cnot,
    Dcnot,
    Swap,
    SqrtSwap,
}

impl NamedGate {
    pub const ALL: [NamedGate; 5] = [
        NamedGate::Identity,
        NamedGate::Cnot,
        NamedGate::Dcnot,
        NamedGate::Swap,
        NamedGate::SqrtSwap,
    ];

    pub fn label(self) -> &'static str {
        match self {
            NamedGate::Identity => "IDENTITY",
            NamedGate::Cnot => "CNOT",
            NamedGate::Dcnot => "DCNOT",
            NamedGate::Swap => "SWAP",
            NamedGate::SqrtSwap => "SQRT_SWAP",
        }
    }

    pub fn matrix(self) -> ComplexMatrix {
        use matkit::gates;
        match self {
            NamedGate::Identity => matkit::identity(4),
            NamedGate::Cnot => gates::cnot(),
            NamedGate::Dcnot => gates::dcnot(),
            NamedGate::Swap => gates::swap(),
            NamedGate::SqrtSwap => gates::sqrt_swap(),
        }
    }

    pub fn unitary(self) -> Unitary4 {
        matkit::su4_normalize(&self.matrix()).expect("built-in gates are unitary")
    }

    /// Chamber points carrying this name. Both square roots of SWAP are
    /// labelled `SQRT_SWAP`; they sit at P and at its mirror image N.
    fn chamber_points(self) -> &'static [WeylPoint] {
        match self {
            NamedGate::Identity => &[points::O, points::A1],
            NamedGate::Cnot => &[points::L],
            NamedGate::Dcnot => &[points::A2],
            NamedGate::Swap => &[points::A3],
            NamedGate::SqrtSwap => &[points::P, points::N],
        }
    }
}

impl fmt::Display for NamedGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for NamedGate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase().replace('-', "_");
        match key.as_str() {
            "IDENTITY" | "I" | "ID" => Ok(NamedGate::Identity),
            "CNOT" | "CX" => Ok(NamedGate::Cnot),
            "DCNOT" => Ok(NamedGate::Dcnot),
            "SWAP" => Ok(NamedGate::Swap),
            "SQRT_SWAP" | "SQRTSWAP" => Ok(NamedGate::SqrtSwap),
            _ => Err(Error::UnknownGate(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GateClass {
    pub is_local: bool,
    pub is_perfect_entangler: bool,
    pub is_special_perfect_entangler: bool,
    pub named_equivalent: Option<NamedGate>,
}

/// `U_B = Q^dag U Q` in the magic basis.
pub fn magic_transform(u: &Unitary4) -> ComplexMatrix {
    let q = magic_basis();
    q.adjoint() * u.matrix() * q
}

/// `m = U_B^T U_B`, whose spectrum carries the nonlocal content of `u`.
fn magic_gram(u: &Unitary4) -> ComplexMatrix {
    let ub = magic_transform(u);
    ub.transpose() * ub
}

/// Makhlin invariants from the matrix: `G1 = tr²(m)/16`,
/// `G2 = (tr²(m) − tr(m²))/4`, `m = U_B^T U_B`.
pub fn invariants_from_unitary(u: &Unitary4) -> LocalInvariants {
    let m = magic_gram(u);
    let tr = matkit::trace(&m);
    let tr_sq = matkit::trace(&(&m * &m));
    let g1 = tr * tr / 16.0;
    let g2 = (tr * tr - tr_sq) / 4.0;
    debug_assert!(g2.im.abs() <= 1e-9, "G2 imaginary residue {}", g2.im);
    LocalInvariants { g1, g2: g2.re }
}

/// Makhlin invariants evaluated in closed form at a chamber point.
pub fn invariants_from_point(c: &WeylPoint) -> LocalInvariants {
    let (c1, c2, c3) = (c.c1, c.c2, c.c3);
    let cos2 = c1.cos().powi(2) * c2.cos().powi(2) * c3.cos().powi(2);
    let sin2 = c1.sin().powi(2) * c2.sin().powi(2) * c3.sin().powi(2);
    let g1 = Complex64::new(
        cos2 - sin2,
        0.25 * (2.0 * c1).sin() * (2.0 * c2).sin() * (2.0 * c3).sin(),
    );
    let g2 = 4.0 * cos2 - 4.0 * sin2 - (2.0 * c1).cos() * (2.0 * c2).cos() * (2.0 * c3).cos();
    LocalInvariants { g1, g2 }
}

/// Reduced chamber coordinates of `u`.
///
/// The eigenphases of `U_B^T U_B` are `2λ_j`, with `λ` the phases of the
/// canonical gate on the magic basis; three pairwise sums give `2c_k`. Any
/// assignment of the eigenvalues yields a locally equivalent point, which
/// [`weyl_reduce`] maps back into the chamber. If the result does not
/// reproduce the matrix invariants the remaining assignments are tried.
pub fn coordinates_from_unitary(u: &Unitary4) -> Result<WeylPoint> {
    let m = magic_gram(u);
    let phases = eigenphases_symmetric_unitary(&m)?;
    let target = invariants_from_unitary(u);

    let mut best: Option<(f64, WeylPoint)> = None;
    for perm in permutations4() {
        let theta = perm.map(|k| phases[k]);
        let c = weyl_reduce(coordinates_from_phases(theta));
        let residual = invariants_from_point(&c).distance(&target);
        if residual <= RECOVERY_TOL {
            return Ok(c);
        }
        if best.is_none_or(|(r, _)| residual < r) {
            best = Some((residual, c));
        }
    }
    Err(Error::CoordinateRecoveryFailed {
        residual: best.map_or(f64::INFINITY, |(r, _)| r),
    })
}

/// Solves `θ = 2λ` for the raw coordinates, after lifting one phase so that
/// `Σθ = 0`.
fn coordinates_from_phases(mut theta: [f64; 4]) -> [f64; 3] {
    let sum: f64 = theta.iter().sum();
    theta[2] -= 2.0 * PI * (sum / (2.0 * PI)).round();
    [
        0.5 * (theta[0] + theta[3]),
        0.5 * (theta[1] + theta[3]),
        0.5 * (theta[0] + theta[1]),
    ]
}

fn permutations4() -> impl Iterator<Item = [usize; 4]> {
    (0..24).map(|mut k| {
        let mut pool = vec![0usize, 1, 2, 3];
        let mut out = [0usize; 4];
        for (slot, radix) in out.iter_mut().zip([6, 2, 1, 1]) {
            *slot = pool.remove(k / radix);
            k %= radix;
        }
        out
    })
}

/// Maps raw coordinates into the reduced chamber using only local
/// equivalences: π shifts of any coordinate, permutations, sign flips of two
/// coordinates at once, and `[c1, c2, c3] → [π − c1, c2, −c3]`.
pub fn weyl_reduce(raw: [f64; 3]) -> WeylPoint {
    // each coordinate into [−π/2, π/2]
    let mut c = raw.map(|x| x - PI * (x / PI).round());
    c.sort_by(|a, b| b.abs().total_cmp(&a.abs()));
    let negatives = c
        .iter()
        .filter(|x| x.is_sign_negative() && **x != 0.0)
        .count();
    let mut c1 = c[0].abs();
    let c2 = c[1].abs();
    let mut c3 = c[2].abs();
    if negatives % 2 == 1 && c3 > 0.0 {
        c1 = PI - c1;
    }
    // base face: [c1, c2, 0] ~ [π − c1, c2, 0]
    if c3 <= BASE_FACE_TOL && c1 > FRAC_PI_2 {
        c1 = PI - c1;
    }
    if c3 < 0.0 {
        c3 = 0.0;
    }
    WeylPoint::new(c1, c2, c3)
}

/// Perfect-entangler half-spaces: `c1 + c2 ≥ π/2`, `c1 − c2 ≤ π/2`,
/// `c2 + c3 ≤ π/2` (closed).
pub fn in_perfect_entangler_polyhedron(c: &WeylPoint, tol: f64) -> bool {
    c.c1 + c.c2 >= FRAC_PI_2 - tol
        && c.c1 - c.c2 <= FRAC_PI_2 + tol
        && c.c2 + c.c3 <= FRAC_PI_2 + tol
}

/// Classifies a reduced chamber point.
pub fn classify(c: &WeylPoint, inv: &LocalInvariants) -> GateClass {
    let tol = CLASSIFY_TOL;
    let is_local = c.max_abs_diff(&points::O) <= tol || c.max_abs_diff(&points::A1) <= tol;
    let is_perfect_entangler = !is_local && in_perfect_entangler_polyhedron(c, tol);
    let is_special_perfect_entangler = is_perfect_entangler
        && (c.c1 - FRAC_PI_2).abs() <= tol
        && c.c3.abs() <= tol
        && c.c2 >= -tol
        && c.c2 <= FRAC_PI_2 + tol;
    let named_equivalent = NamedGate::ALL
        .into_iter()
        .find(|g| g.chamber_points().iter().any(|p| c.max_abs_diff(p) <= tol));
    debug_assert!(
        !is_perfect_entangler || inv.within_perfect_entangler_bounds(tol),
        "perfect entangler {c} violates invariant bounds {inv:?}"
    );
    GateClass {
        is_local,
        is_perfect_entangler,
        is_special_perfect_entangler,
        named_equivalent,
    }
}
