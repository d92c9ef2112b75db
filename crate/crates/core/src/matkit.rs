//! Small dense complex matrix kernel.
//!
//! Everything here works on [`ComplexMatrix`] (a dynamically sized
//! `nalgebra` matrix of `Complex64`); in practice the sizes are 2, 4 and 16.
//! The two-qubit basis is ordered `|ab>` with row index `2a + b`, `a` being
//! the left tensor factor.

use std::f64::consts::FRAC_1_SQRT_2;

use nalgebra::{DMatrix, SymmetricEigen, SVD};
use num_complex::Complex64;

use crate::canonical::WeylPoint;
use crate::error::{Error, Result};

pub type ComplexMatrix = DMatrix<Complex64>;

/// Tolerance on `U^dag U - I` accepted by [`su4_normalize`].
pub const UNITARY_TOL: f64 = 1e-10;

/// Residual above which an accepted input is projected back onto the unitary group.
const REPROJECT_TOL: f64 = 1e-14;

const SYMMETRIC_TOL: f64 = 1e-9;

#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn identity(n: usize) -> ComplexMatrix {
    ComplexMatrix::identity(n, n)
}

/// Builds a matrix from row-major entries.
pub fn from_rows<const R: usize, const C: usize>(rows: [[Complex64; C]; R]) -> ComplexMatrix {
    ComplexMatrix::from_fn(R, C, |i, j| rows[i][j])
}

pub fn from_real_rows<const R: usize, const C: usize>(rows: [[f64; C]; R]) -> ComplexMatrix {
    ComplexMatrix::from_fn(R, C, |i, j| c64(rows[i][j], 0.0))
}

pub fn pauli_x() -> ComplexMatrix {
    from_real_rows([[0.0, 1.0], [1.0, 0.0]])
}

pub fn pauli_y() -> ComplexMatrix {
    from_rows([
        [c64(0.0, 0.0), c64(0.0, -1.0)],
        [c64(0.0, 1.0), c64(0.0, 0.0)],
    ])
}

pub fn pauli_z() -> ComplexMatrix {
    from_real_rows([[1.0, 0.0], [0.0, -1.0]])
}

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kronecker(b)
}

/// Largest entry-wise modulus of `a - b`.
pub fn max_abs_diff(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Largest entry-wise modulus of `m^dag m - I`.
pub fn unitarity_deviation(m: &ComplexMatrix) -> f64 {
    max_abs_diff(&(m.adjoint() * m), &identity(m.ncols()))
}

/// Largest entry-wise modulus of `m - m^T`.
pub fn symmetry_deviation(m: &ComplexMatrix) -> f64 {
    max_abs_diff(m, &m.transpose())
}

pub fn trace(m: &ComplexMatrix) -> Complex64 {
    m.diagonal().iter().sum()
}

fn check_square(m: &ComplexMatrix, n: usize) -> Result<()> {
    if m.nrows() != n || m.ncols() != n {
        return Err(Error::Shape {
            expected: n,
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(())
}

/// A two-qubit gate normalised to determinant one.
#[derive(Clone, Debug, PartialEq)]
pub struct Unitary4(ComplexMatrix);

impl Unitary4 {
    /// Same as [`su4_normalize`].
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        su4_normalize(&m)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    pub fn det(&self) -> Complex64 {
        self.0.determinant()
    }

    pub fn adjoint(&self) -> Unitary4 {
        Unitary4(self.0.adjoint())
    }

    /// Matrix product `self · rhs`. Both factors have unit determinant, so the
    /// product does too.
    pub fn compose(&self, rhs: &Unitary4) -> Unitary4 {
        Unitary4(&self.0 * &rhs.0)
    }

    /// Local dressing `(a1 ⊗ b1) · self · (a2 ⊗ b2)` with 2×2 unitaries.
    pub fn dress(
        &self,
        before: (&ComplexMatrix, &ComplexMatrix),
        after: (&ComplexMatrix, &ComplexMatrix),
    ) -> Result<Unitary4> {
        let k1 = kron(before.0, before.1);
        let k2 = kron(after.0, after.1);
        su4_normalize(&(k1 * &self.0 * k2))
    }
}

/// Rescales a unitary by the principal fourth root of `1/det` so the result
/// has determinant one.
pub fn su4_normalize(m: &ComplexMatrix) -> Result<Unitary4> {
    su4_normalize_with_tol(m, UNITARY_TOL)
}

/// [`su4_normalize`] with a caller supplied unitarity tolerance. Inputs that
/// pass the check but are not unitary to machine precision are first replaced
/// by their nearest unitary (polar factor).
pub fn su4_normalize_with_tol(m: &ComplexMatrix, tol: f64) -> Result<Unitary4> {
    check_square(m, 4)?;
    let deviation = unitarity_deviation(m);
    if deviation > tol {
        return Err(Error::NonUnitary {
            deviation,
            tolerance: tol,
        });
    }
    let mut u = if deviation > REPROJECT_TOL {
        nearest_unitary(m)
    } else {
        m.clone()
    };
    let det = u.determinant();
    let phase = (-det.ln() / 4.0).exp();
    u *= phase;
    Ok(Unitary4(u))
}

fn nearest_unitary(m: &ComplexMatrix) -> ComplexMatrix {
    let svd = SVD::new(m.clone(), true, true);
    svd.u.expect("u requested") * svd.v_t.expect("v_t requested")
}

/// Magic (Bell) basis: columns are (|00>+|11>)/√2, (−i|00>+i|11>)/√2,
/// (|01>−|10>)/√2, (−i|01>−i|10>)/√2.
pub fn magic_basis() -> ComplexMatrix {
    let r = FRAC_1_SQRT_2;
    let o = c64(0.0, 0.0);
    from_rows([
        [c64(r, 0.0), c64(0.0, -r), o, o],
        [o, o, c64(r, 0.0), c64(0.0, -r)],
        [o, o, c64(-r, 0.0), c64(0.0, -r)],
        [c64(r, 0.0), c64(0.0, r), o, o],
    ])
}

/// Phases of `exp{(i/2)(c1 XX + c2 YY + c3 ZZ)}` on the magic basis columns.
pub(crate) fn magic_phases(c: &WeylPoint) -> [f64; 4] {
    let (c1, c2, c3) = (c.c1, c.c2, c.c3);
    [
        0.5 * (c1 - c2 + c3),
        0.5 * (-c1 + c2 + c3),
        0.5 * (-c1 - c2 - c3),
        0.5 * (c1 + c2 - c3),
    ]
}

/// The nonlocal gate `exp{(i/2)(c1 σx⊗σx + c2 σy⊗σy + c3 σz⊗σz)}`.
///
/// The generators are simultaneously diagonal in the magic basis, so the
/// exponential is assembled as `Q · diag(e^{iλ}) · Q^dag`.
pub fn canonical_gate(c: &WeylPoint) -> Unitary4 {
    let q = magic_basis();
    let phases = magic_phases(c);
    let d = ComplexMatrix::from_fn(4, 4, |i, j| {
        if i == j {
            Complex64::from_polar(1.0, phases[i])
        } else {
            c64(0.0, 0.0)
        }
    });
    Unitary4(&q * d * q.adjoint())
}

/// Singular value decomposition of a 4×4 complex matrix, sorted descending.
#[derive(Clone, Debug)]
pub struct Svd4 {
    pub singular_values: [f64; 4],
    /// Columns are the left singular vectors `u_l`.
    pub left: ComplexMatrix,
    /// Columns are the right singular vectors `v_l`, so `m = Σ σ_l u_l v_l^dag`.
    pub right: ComplexMatrix,
}

impl Svd4 {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(4, 4);
        for l in 0..4 {
            let u = self.left.column(l);
            let v = self.right.column(l);
            m += (u * v.adjoint()) * c64(self.singular_values[l], 0.0);
        }
        m
    }
}

pub fn svd4(m: &ComplexMatrix) -> Svd4 {
    assert_eq!(m.shape(), (4, 4), "svd4 expects a 4x4 matrix");
    let svd = SVD::new(m.clone(), true, true);
    let u = svd.u.expect("u requested");
    let v = svd.v_t.expect("v_t requested").adjoint();
    let mut order = [0usize, 1, 2, 3];
    // stable, so ties keep the factorisation's order
    order.sort_by(|&a, &b| svd.singular_values[b].total_cmp(&svd.singular_values[a]));
    let singular_values = order.map(|k| svd.singular_values[k]);
    let left = ComplexMatrix::from_fn(4, 4, |i, j| u[(i, order[j])]);
    let right = ComplexMatrix::from_fn(4, 4, |i, j| v[(i, order[j])]);
    Svd4 {
        singular_values,
        left,
        right,
    }
}

/// Eigenphases of a unitary, complex-symmetric 4×4 matrix `m`.
///
/// Real and imaginary parts of such a matrix are commuting real symmetric
/// matrices, so a real orthogonal basis diagonalises both. It is found from
/// a generic real combination `Re m + x·Im m`; several values of `x` are tried
/// and the one with the smallest off-diagonal residual wins.
pub fn eigenphases_symmetric_unitary(m: &ComplexMatrix) -> Result<[f64; 4]> {
    check_square(m, 4)?;
    let deviation = symmetry_deviation(m);
    if deviation > SYMMETRIC_TOL {
        return Err(Error::NotSymmetric { deviation });
    }
    let deviation = unitarity_deviation(m);
    if deviation > SYMMETRIC_TOL {
        return Err(Error::NonUnitary {
            deviation,
            tolerance: SYMMETRIC_TOL,
        });
    }

    let re = m.map(|z| z.re);
    let im = m.map(|z| z.im);
    let mut best: Option<(f64, [f64; 4])> = None;
    for x in [
        0.618_033_988_749_895,
        1.324_717_957_244_746,
        -0.412_310_562_561_766,
        2.414_213_562_373_095,
        0.0,
    ] {
        let combo = &re + &im * x;
        let eig = SymmetricEigen::new(combo);
        let o = eig.eigenvectors.map(|v| c64(v, 0.0));
        let d = o.transpose() * m * &o;
        let mut off = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    off = off.max(d[(i, j)].norm());
                }
            }
        }
        let phases = [0, 1, 2, 3].map(|k| d[(k, k)].arg());
        if best.is_none_or(|(b, _)| off < b) {
            best = Some((off, phases));
        }
        if off < 1e-13 {
            break;
        }
    }
    Ok(best.expect("at least one trial").1)
}

/// Built-in gate matrices (not phase normalised).
pub mod gates {
    use super::*;

    pub fn cnot() -> ComplexMatrix {
        from_real_rows([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [0.0, 0.0, 1.0, 0.0],
        ])
    }

    /// CNOT with the second qubit as control.
    pub fn cnot_reversed() -> ComplexMatrix {
        from_real_rows([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
        ])
    }

    /// Double CNOT: `CNOT_12 · CNOT_21`.
    pub fn dcnot() -> ComplexMatrix {
        cnot() * cnot_reversed()
    }

    pub fn swap() -> ComplexMatrix {
        from_real_rows([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ])
    }

    pub fn sqrt_swap() -> ComplexMatrix {
        let o = c64(0.0, 0.0);
        let one = c64(1.0, 0.0);
        let p = c64(0.5, 0.5);
        let m = c64(0.5, -0.5);
        from_rows([[one, o, o, o], [o, p, m, o], [o, m, p, o], [o, o, o, one]])
    }
}
