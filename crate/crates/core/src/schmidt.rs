//! Operator-Schmidt decomposition `U = Σ s_l A_l ⊗ B_l` and the operator
//! entanglement measures built on it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matkit::{self, c64, ComplexMatrix, Unitary4};

/// Default cut-off for counting a Schmidt coefficient as nonzero.
pub const SCHMIDT_EPS: f64 = 1e-8;

/// Coefficients below this are exact zeros in the entropy sum.
const ZERO_COEFF: f64 = 1e-12;

/// Operator-Schmidt coefficients, sorted descending, `Σ s² = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SchmidtSpectrum([f64; 4]);

impl SchmidtSpectrum {
    /// Sorts and validates the coefficients.
    pub fn new(mut s: [f64; 4]) -> Result<Self> {
        if s.iter().any(|x| !x.is_finite() || *x < 0.0) {
            return Err(Error::Parse(format!("invalid Schmidt coefficients {s:?}")));
        }
        s.sort_by(|a, b| b.total_cmp(a));
        let norm: f64 = s.iter().map(|x| x * x).sum();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::OutOfRange {
                what: "sum of squared Schmidt coefficients",
                value: norm,
                lo: 1.0,
                hi: 1.0,
            });
        }
        Ok(Self(s))
    }

    pub fn values(&self) -> [f64; 4] {
        self.0
    }

    pub fn weights(&self) -> [f64; 4] {
        self.0.map(|x| x * x)
    }
}

/// Spectrum plus the operator bases: `tr(A_k^dag A_l) = 2δ_kl`, same for `B`.
#[derive(Clone, Debug)]
pub struct SchmidtFactors {
    pub spectrum: SchmidtSpectrum,
    pub a_ops: [ComplexMatrix; 4],
    pub b_ops: [ComplexMatrix; 4],
}

impl SchmidtFactors {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let mut u = ComplexMatrix::zeros(4, 4);
        for (l, s) in self.spectrum.values().into_iter().enumerate() {
            u += matkit::kron(&self.a_ops[l], &self.b_ops[l]) * c64(s, 0.0);
        }
        u
    }
}

/// Realignment `R[2a+c, 2b+d] = U[2a+b, 2c+d]`: rows index the first qubit's
/// operator space, columns the second's.
pub fn realign(u: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::from_fn(4, 4, |row, col| {
        let (a, c) = (row / 2, row % 2);
        let (b, d) = (col / 2, col % 2);
        u[(2 * a + b, 2 * c + d)]
    })
}

pub fn schmidt_decompose(u: &Unitary4) -> SchmidtFactors {
    let svd = matkit::svd4(&realign(u.matrix()));
    let s = svd.singular_values.map(|x| x / 2.0);
    let root2 = c64(std::f64::consts::SQRT_2, 0.0);
    let a_ops = std::array::from_fn(|l| {
        ComplexMatrix::from_fn(2, 2, |a, c| svd.left[(2 * a + c, l)] * root2)
    });
    let b_ops = std::array::from_fn(|l| {
        ComplexMatrix::from_fn(2, 2, |b, d| svd.right[(2 * b + d, l)].conj() * root2)
    });
    // the SVD of a unitary's realignment has Frobenius norm 2; renormalise rounding
    let norm: f64 = s.iter().map(|x| x * x).sum::<f64>().sqrt();
    let spectrum = SchmidtSpectrum(s.map(|x| x / norm));
    SchmidtFactors {
        spectrum,
        a_ops,
        b_ops,
    }
}

/// Number of coefficients above `eps`; three is rejected as a tolerance problem.
pub fn schmidt_number(sp: &SchmidtSpectrum, eps: f64) -> Result<usize> {
    let count = sp.values().iter().filter(|&&s| s > eps).count();
    if count == 3 {
        return Err(Error::DegenerateCount {
            eps,
            spectrum: sp.values(),
        });
    }
    Ok(count)
}

/// Shannon entropy (bits) of `s_l²`, in `[0, 2]`.
pub fn schmidt_strength(sp: &SchmidtSpectrum) -> f64 {
    sp.values()
        .iter()
        .filter(|&&s| s >= ZERO_COEFF)
        .map(|s| {
            let p = s * s;
            -p * p.log2()
        })
        .sum::<f64>()
        .max(0.0)
}

/// `L = 1 − Σ s⁴`, in `[0, 3/4]`.
pub fn linear_entropy_coeffs(sp: &SchmidtSpectrum) -> f64 {
    1.0 - sp.weights().iter().map(|p| p * p).sum::<f64>()
}

/// Swaps qubits 1 and 3 of a four-qubit register, `|abcd> → |cbad>`, with
/// index `8a + 4b + 2c + d`.
pub fn t13_permutation() -> ComplexMatrix {
    let mut t = ComplexMatrix::zeros(16, 16);
    for idx in 0..16 {
        let (a, b, c, d) = (idx >> 3 & 1, idx >> 2 & 1, idx >> 1 & 1, idx & 1);
        t[(8 * c + 4 * b + 2 * a + d, idx)] = c64(1.0, 0.0);
    }
    t
}

/// `L = 1 − tr(U^dag⊗² T13 U⊗² T13)/16`.
pub fn linear_entropy_permutation(u: &Unitary4) -> f64 {
    let uu = matkit::kron(u.matrix(), u.matrix());
    let t = t13_permutation();
    let value = matkit::trace(&(uu.adjoint() * &t * &uu * &t)) / 16.0;
    debug_assert!(value.im.abs() <= 1e-10, "imaginary residue {}", value.im);
    1.0 - value.re
}

/// `C = 2 s1 s2`; only defined for Schmidt number at most two.
pub fn operator_concurrence(sp: &SchmidtSpectrum) -> Result<f64> {
    let schmidt_number = schmidt_number(sp, SCHMIDT_EPS)?;
    if schmidt_number > 2 {
        return Err(Error::NotSchmidtRank2 { schmidt_number });
    }
    let s = sp.values();
    Ok(2.0 * s[0] * s[1])
}

/// Schmidt strength as a function of linear entropy for Schmidt-number-2
/// gates, where `s1², s2² = (1 ± √(1 − 2L))/2`.
pub fn strength_from_entropy_rank2(l: f64) -> Result<f64> {
    if !(-1e-12..=0.5 + 1e-12).contains(&l) {
        return Err(Error::OutOfRange {
            what: "rank-2 linear entropy",
            value: l,
            lo: 0.0,
            hi: 0.5,
        });
    }
    let l = l.clamp(0.0, 0.5);
    let root = (1.0 - 2.0 * l).sqrt();
    let big = 0.5 * (1.0 + root);
    // (1 − √(1−2L))/2 without cancellation
    let small = l / (1.0 + root);
    let h = |p: f64| if p > 0.0 { -p * p.log2() } else { 0.0 };
    Ok(h(big) + h(small))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::{points, WeylPoint};
    use crate::ensemble::sampling::{chamber_point_at, haar_su2_at, haar_su4_at};
    use crate::matkit::{canonical_gate, gates, su4_normalize};
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn unit(m: ComplexMatrix) -> Unitary4 {
        su4_normalize(&m).unwrap()
    }

    fn spectrum(s: [f64; 4]) -> SchmidtSpectrum {
        SchmidtSpectrum::new(s).unwrap()
    }

    /// Moduli of the Pauli-basis coefficients of the canonical gate, from
    /// expanding the product of `cos(c/2) I + i sin(c/2) σσ` by hand.
    fn canonical_coefficients(c: &WeylPoint) -> [f64; 4] {
        let (a1, a2, a3) = ((c.c1 / 2.0).cos(), (c.c2 / 2.0).cos(), (c.c3 / 2.0).cos());
        let (b1, b2, b3) = ((c.c1 / 2.0).sin(), (c.c2 / 2.0).sin(), (c.c3 / 2.0).sin());
        let mut s = [
            (a1 * a2 * a3).hypot(b1 * b2 * b3),
            (a1 * b2 * b3).hypot(b1 * a2 * a3),
            (b1 * a2 * b3).hypot(a1 * b2 * a3),
            (b1 * b2 * a3).hypot(a1 * a2 * b3),
        ];
        s.sort_by(|a, b| b.total_cmp(a));
        s
    }

    #[test]
    fn named_spectra() {
        let id = schmidt_decompose(&unit(matkit::identity(4)))
            .spectrum
            .values();
        for (g, w) in id.iter().zip([1.0, 0.0, 0.0, 0.0]) {
            assert_abs_diff_eq!(*g, w, epsilon = 1e-12);
        }
        let cnot = schmidt_decompose(&unit(gates::cnot())).spectrum.values();
        for (g, w) in cnot.iter().zip([FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0, 0.0]) {
            assert_abs_diff_eq!(*g, w, epsilon = 1e-12);
        }
        let swap = schmidt_decompose(&unit(gates::swap())).spectrum.values();
        for g in swap {
            assert_abs_diff_eq!(g, 0.5, epsilon = 1e-12);
        }
    }

    #[test]
    fn spectrum_matches_pauli_expansion() {
        for seed in 0..200 {
            let c = chamber_point_at(seed, 0);
            let got = schmidt_decompose(&canonical_gate(&c)).spectrum.values();
            let want = canonical_coefficients(&c);
            for (g, w) in got.iter().zip(want) {
                assert_abs_diff_eq!(*g, w, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn factors_are_orthonormal_and_reconstruct() {
        for seed in 0..100 {
            let u = haar_su4_at(seed, 0);
            let f = schmidt_decompose(&u);
            assert!(matkit::max_abs_diff(&f.reconstruct(), u.matrix()) <= 1e-10);
            for k in 0..4 {
                for l in 0..4 {
                    let want = if k == l { 2.0 } else { 0.0 };
                    let ta = matkit::trace(&(f.a_ops[k].adjoint() * &f.a_ops[l]));
                    let tb = matkit::trace(&(f.b_ops[k].adjoint() * &f.b_ops[l]));
                    assert!((ta - c64(want, 0.0)).norm() <= 1e-9);
                    assert!((tb - c64(want, 0.0)).norm() <= 1e-9);
                }
            }
            let norm: f64 = f.spectrum.weights().iter().sum();
            assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn spectrum_locally_invariant() {
        for seed in 0..100 {
            let u = haar_su4_at(seed, 0);
            let dressed = u
                .dress(
                    (&haar_su2_at(seed, 1), &haar_su2_at(seed, 2)),
                    (&haar_su2_at(seed, 3), &haar_su2_at(seed, 4)),
                )
                .unwrap();
            let a = schmidt_decompose(&u).spectrum.values();
            let b = schmidt_decompose(&dressed).spectrum.values();
            for (x, y) in a.iter().zip(&b) {
                assert_abs_diff_eq!(*x, *y, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn schmidt_number_cases() {
        assert_eq!(
            schmidt_number(&spectrum([1.0, 0.0, 0.0, 0.0]), SCHMIDT_EPS).unwrap(),
            1
        );
        let cnot = schmidt_decompose(&unit(gates::cnot())).spectrum;
        assert_eq!(schmidt_number(&cnot, SCHMIDT_EPS).unwrap(), 2);
        let swap = schmidt_decompose(&unit(gates::swap())).spectrum;
        assert_eq!(schmidt_number(&swap, SCHMIDT_EPS).unwrap(), 4);
        let third = 1.0 / 3.0f64.sqrt();
        assert!(matches!(
            schmidt_number(&spectrum([third, third, third, 0.0]), SCHMIDT_EPS),
            Err(Error::DegenerateCount { .. })
        ));
    }

    #[test]
    fn strength_values() {
        assert_eq!(schmidt_strength(&spectrum([1.0, 0.0, 0.0, 0.0])), 0.0);
        assert_abs_diff_eq!(
            schmidt_strength(&spectrum([FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0, 0.0])),
            1.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(schmidt_strength(&spectrum([0.5; 4])), 2.0, epsilon = 1e-15);
    }

    #[test]
    fn linear_entropy_values() {
        assert_eq!(linear_entropy_coeffs(&spectrum([1.0, 0.0, 0.0, 0.0])), 0.0);
        assert_abs_diff_eq!(
            linear_entropy_coeffs(&spectrum([FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0, 0.0])),
            0.5,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            linear_entropy_coeffs(&spectrum([0.5; 4])),
            0.75,
            epsilon = 1e-15
        );
    }

    #[test]
    fn t13_is_an_involution_swapping_qubits_one_and_three() {
        let t = t13_permutation();
        assert_eq!(&t * &t, matkit::identity(16));
        // |1000> (index 8) -> |0010> (index 2)
        assert_eq!(t[(2, 8)], c64(1.0, 0.0));
        assert_eq!(t[(4, 4)], c64(1.0, 0.0));
    }

    #[test]
    fn permutation_route_named_gates() {
        assert_abs_diff_eq!(
            linear_entropy_permutation(&unit(matkit::identity(4))),
            0.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            linear_entropy_permutation(&unit(gates::cnot())),
            0.5,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            linear_entropy_permutation(&unit(gates::swap())),
            0.75,
            epsilon = 1e-12
        );
    }

    #[test]
    fn permutation_route_matches_coefficients() {
        for seed in 0..200 {
            let u = haar_su4_at(seed, 0);
            let a = linear_entropy_permutation(&u);
            let b = linear_entropy_coeffs(&schmidt_decompose(&u).spectrum);
            assert_abs_diff_eq!(a, b, epsilon = 1e-9);
        }
    }

    #[test]
    fn concurrence_values() {
        assert_eq!(
            operator_concurrence(&spectrum([1.0, 0.0, 0.0, 0.0])).unwrap(),
            0.0
        );
        let cnot = schmidt_decompose(&unit(gates::cnot())).spectrum;
        assert_abs_diff_eq!(operator_concurrence(&cnot).unwrap(), 1.0, epsilon = 1e-12);
        let sp = spectrum([3.0f64.sqrt() / 2.0, 0.5, 0.0, 0.0]);
        let c = operator_concurrence(&sp).unwrap();
        assert_abs_diff_eq!(c, 3.0f64.sqrt() / 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(
            c,
            (2.0 * linear_entropy_coeffs(&sp)).sqrt(),
            epsilon = 1e-15
        );
        assert!(matches!(
            operator_concurrence(&spectrum([0.5; 4])),
            Err(Error::NotSchmidtRank2 { schmidt_number: 4 })
        ));
    }

    #[test]
    fn rank2_strength_curve() {
        assert_eq!(strength_from_entropy_rank2(0.0).unwrap(), 0.0);
        assert_abs_diff_eq!(
            strength_from_entropy_rank2(0.5).unwrap(),
            1.0,
            epsilon = 1e-15
        );
        let want = -(0.75f64 * 0.75f64.log2()) - 0.25 * 0.25f64.log2();
        assert_abs_diff_eq!(
            strength_from_entropy_rank2(0.375).unwrap(),
            want,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(want, 0.811_278_124_459_132_9, epsilon = 1e-15);
        assert!(matches!(
            strength_from_entropy_rank2(0.6),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn rank2_strength_curve_strictly_increasing() {
        let grid: Vec<f64> = (0..1000)
            .map(|k| strength_from_entropy_rank2(0.5 * k as f64 / 999.0).unwrap())
            .collect();
        assert!(grid.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn oa1_rank2_identities() {
        for k in 1..100 {
            let c = points::O.lerp(&points::A1, k as f64 / 100.0);
            let sp = schmidt_decompose(&canonical_gate(&c)).spectrum;
            let l = linear_entropy_coeffs(&sp);
            let conc = operator_concurrence(&sp).unwrap();
            assert_abs_diff_eq!(conc, (2.0 * l).sqrt(), epsilon = 1e-10);
            assert_abs_diff_eq!(
                strength_from_entropy_rank2(l).unwrap(),
                schmidt_strength(&sp),
                epsilon = 1e-9
            );
        }
    }
}
