//! Closed-form linear entropy and entangling power from chamber coordinates
//! and local invariants, plus a Monte-Carlo estimate of the entangling power
//! over Haar-random product inputs.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::{classify, invariants_from_point, LocalInvariants, WeylPoint};
use crate::error::{Error, Result};
use crate::matkit::Unitary4;

/// Linear entropy of SWAP.
pub const SWAP_LINEAR_ENTROPY: f64 = 0.75;

/// Largest entangling power of a two-qubit gate.
pub const MAX_ENTANGLING_POWER: f64 = 2.0 / 9.0;

/// Samples drawn from one random stream in the Monte-Carlo estimate.
const MC_CHUNK: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoQubitPureState {
    amplitudes: [Complex64; 4],
}

impl TwoQubitPureState {
    pub fn new(amplitudes: [Complex64; 4]) -> Result<Self> {
        let norm: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::OutOfRange {
                what: "state norm",
                value: norm,
                lo: 1.0,
                hi: 1.0,
            });
        }
        Ok(Self { amplitudes })
    }

    pub fn product(a: [Complex64; 2], b: [Complex64; 2]) -> Self {
        Self {
            amplitudes: [a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]],
        }
    }

    pub fn amplitudes(&self) -> [Complex64; 4] {
        self.amplitudes
    }

    pub fn apply(&self, u: &Unitary4) -> Self {
        let m = u.matrix();
        let amplitudes =
            std::array::from_fn(|i| (0..4).map(|j| m[(i, j)] * self.amplitudes[j]).sum());
        Self { amplitudes }
    }
}

/// Every closed-form route side by side.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EntanglementReport {
    pub l_geometric: f64,
    pub l_invariant: f64,
    pub l_swapped: f64,
    pub ep_invariant: f64,
    pub ep_linear: f64,
}

impl EntanglementReport {
    pub fn new(c: &WeylPoint, inv: &LocalInvariants) -> Self {
        let l_invariant = linear_entropy_invariants(inv);
        let l_swapped = linear_entropy_swapped(inv);
        Self {
            l_geometric: linear_entropy_point(c),
            l_invariant,
            l_swapped,
            ep_invariant: entangling_power_invariant(inv),
            ep_linear: entangling_power_linear(l_invariant, l_swapped),
        }
    }
}

/// `L = 1 − (1 + cos²c1 cos²c2 + cos²c2 cos²c3 + cos²c3 cos²c1)/4`.
pub fn linear_entropy_point(c: &WeylPoint) -> f64 {
    let [x, y, z] = c.to_array().map(|v| v.cos().powi(2));
    1.0 - 0.25 * (1.0 + x * y + y * z + z * x)
}

/// `L = 1 − (3 + 2|G1| + G2)/8`.
pub fn linear_entropy_invariants(inv: &LocalInvariants) -> f64 {
    1.0 - (3.0 + 2.0 * inv.g1.norm() + inv.g2) / 8.0
}

/// Linear entropy of `U·SWAP`: `1 − (3 + 2|G1| − G2)/8`.
pub fn linear_entropy_swapped(inv: &LocalInvariants) -> f64 {
    1.0 - (3.0 + 2.0 * inv.g1.norm() - inv.g2) / 8.0
}

/// `e_p = (2/9)(1 − |G1|)`, clamped at zero since rounding can push `|G1|`
/// just past one for local gates and SWAP.
pub fn entangling_power_invariant(inv: &LocalInvariants) -> f64 {
    (MAX_ENTANGLING_POWER * (1.0 - inv.g1.norm())).max(0.0)
}

/// `e_p = (4/9)(L(U) + L(U·S) − L(S))`.
pub fn entangling_power_linear(l_u: f64, l_us: f64) -> f64 {
    4.0 / 9.0 * (l_u + l_us - SWAP_LINEAR_ENTROPY)
}

/// `1 − tr ρ_A²` for the reduced state of the first qubit; in `[0, 1/2]`.
pub fn state_linear_entropy(psi: &TwoQubitPureState) -> f64 {
    let a = &psi.amplitudes;
    // ρ_A[i][j] = Σ_b ψ[2i+b] ψ*[2j+b]
    let r00 = a[0].norm_sqr() + a[1].norm_sqr();
    let r11 = a[2].norm_sqr() + a[3].norm_sqr();
    let r01 = a[0] * a[2].conj() + a[1] * a[3].conj();
    let purity = r00 * r00 + r11 * r11 + 2.0 * r01.norm_sqr();
    (1.0 - purity).clamp(0.0, 0.5)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MonteCarloEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub samples: usize,
}

fn haar_qubit(rng: &mut ChaCha8Rng) -> [Complex64; 2] {
    let mut g = || -> f64 { StandardNormal.sample(rng) };
    let v = [Complex64::new(g(), g()), Complex64::new(g(), g())];
    let norm = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
    v.map(|z| z / norm)
}

/// Average of [`state_linear_entropy`] over `u` applied to `n` independent
/// Haar-random product states.
///
/// Samples are split into fixed chunks, chunk `k` drawing from stream `k` of
/// a ChaCha generator seeded with `seed`; partial sums are combined in chunk
/// order, so the result does not depend on the thread count.
pub fn entangling_power_montecarlo(u: &Unitary4, n: usize, seed: u64) -> MonteCarloEstimate {
    assert!(n >= 1, "need at least one sample");
    let chunks = n.div_ceil(MC_CHUNK);
    let partial: Vec<(f64, f64)> = (0..chunks)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k as u64);
            let len = MC_CHUNK.min(n - k * MC_CHUNK);
            let (mut sum, mut sum_sq) = (0.0, 0.0);
            for _ in 0..len {
                let a = haar_qubit(&mut rng);
                let b = haar_qubit(&mut rng);
                let e = state_linear_entropy(&TwoQubitPureState::product(a, b).apply(u));
                sum += e;
                sum_sq += e * e;
            }
            (sum, sum_sq)
        })
        .collect();
    let (sum, sum_sq) = partial
        .iter()
        .fold((0.0, 0.0), |(s, q), (ps, pq)| (s + ps, q + pq));
    let nf = n as f64;
    let mean = sum / nf;
    let std_error = if n > 1 {
        let var = ((sum_sq - nf * mean * mean) / (nf - 1.0)).max(0.0);
        (var / nf).sqrt()
    } else {
        f64::NAN
    };
    MonteCarloEstimate {
        mean,
        std_error,
        samples: n,
    }
}

/// Range of the coordinate closed-form linear entropy over perfect-entangler points.
pub fn perfect_entangler_entropy_bounds(points: &[WeylPoint]) -> Result<(f64, f64)> {
    if points.is_empty() {
        return Err(Error::Parse("no perfect-entangler samples".into()));
    }
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for (index, c) in points.iter().enumerate() {
        if !classify(c, &invariants_from_point(c)).is_perfect_entangler {
            return Err(Error::NotPerfectEntangler {
                index,
                point: c.to_string(),
            });
        }
        let l = linear_entropy_point(c);
        lo = lo.min(l);
        hi = hi.max(l);
    }
    Ok((lo, hi))
}
