//! Seeded samplers. Sample `index` of a stream is drawn from its own ChaCha
//! stream, so results never depend on how work is split across threads.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::canonical::{points, WeylPoint};
use crate::matkit::{su4_normalize, ComplexMatrix, Unitary4};

const SU2_SALT: u64 = 0x9e37_79b9_7f4a_7c15;
const CHAMBER_SALT: u64 = 0xd1b5_4a32_d192_ed03;

/// Generator for sample `index` of the stream identified by `seed`.
pub fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn complex_normal(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Haar-random `n×n` unitary: complex Ginibre matrix orthonormalised column
/// by column (Gram–Schmidt, applied twice). Keeping the triangular factor's
/// diagonal real and positive is what makes the result Haar distributed.
pub fn haar_unitary(n: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let mut m = ComplexMatrix::from_fn(n, n, |_, _| complex_normal(rng));
    for j in 0..n {
        for _ in 0..2 {
            for k in 0..j {
                let proj = m.column(k).dotc(&m.column(j));
                let qk = m.column(k).into_owned();
                m.column_mut(j).axpy(-proj, &qk, Complex64::new(1.0, 0.0));
            }
        }
        let norm = m.column(j).norm();
        m.column_mut(j).unscale_mut(norm);
    }
    m
}

/// Haar-random single-qubit unitary (used for local dressing).
pub fn haar_su2_at(seed: u64, index: u64) -> ComplexMatrix {
    haar_unitary(2, &mut stream_rng(seed ^ SU2_SALT, index))
}

/// Haar-random two-qubit gate, normalised to determinant one.
pub fn haar_su4_at(seed: u64, index: u64) -> Unitary4 {
    let m = haar_unitary(4, &mut stream_rng(seed, index));
    su4_normalize(&m).expect("Gram-Schmidt output is unitary")
}

pub fn sample_haar_su4(n: usize, seed: u64) -> Vec<Unitary4> {
    assert!(n >= 1, "need at least one sample");
    (0..n as u64)
        .into_par_iter()
        .map(|i| haar_su4_at(seed, i))
        .collect()
}

/// Uniform point of the tetrahedron O–A1–A2–A3 (Dirichlet(1,1,1,1) weights
/// from sorted uniforms).
pub fn chamber_point_at(seed: u64, index: u64) -> WeylPoint {
    let mut rng = stream_rng(seed ^ CHAMBER_SALT, index);
    let mut u: [f64; 3] = [rng.random(), rng.random(), rng.random()];
    u.sort_by(f64::total_cmp);
    let w = [u[0], u[1] - u[0], u[2] - u[1], 1.0 - u[2]];
    let vertices = [points::O, points::A1, points::A2, points::A3];
    let mut c = [0.0; 3];
    for (wk, v) in w.iter().zip(vertices) {
        for (ck, vk) in c.iter_mut().zip(v.to_array()) {
            *ck += wk * vk;
        }
    }
    WeylPoint::new(c[0], c[1], c[2])
}

pub fn sample_chamber_uniform(n: usize, seed: u64) -> Vec<WeylPoint> {
    assert!(n >= 1, "need at least one sample");
    (0..n as u64)
        .into_par_iter()
        .map(|i| chamber_point_at(seed, i))
        .collect()
}
