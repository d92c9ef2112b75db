//! Cross-formula identity suite behind the `verify` command.

use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::{
    classify, coordinates_from_unitary, invariants_from_point, invariants_from_unitary, NamedGate,
};
use crate::error::Result;
use crate::matkit::{canonical_gate, su4_normalize};
use crate::nonlocal::{linear_entropy_swapped, EntanglementReport};
use crate::schmidt::{
    linear_entropy_coeffs, linear_entropy_permutation, operator_concurrence, schmidt_decompose,
    schmidt_strength, strength_from_entropy_rank2,
};

use super::edges::{edge_sweep, Edge};
use super::report::{analyze_unitary, GateReport};
use super::sampling::{chamber_point_at, haar_su2_at, haar_su4_at};

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub samples: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifySummary {
    pub passed: bool,
    pub n: usize,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

fn check(name: &str, deviations: &[f64], tolerance: f64) -> CheckResult {
    let max_deviation =
        deviations.iter().copied().fold(
            0.0f64,
            |a, b| {
                if b.is_nan() {
                    f64::INFINITY
                } else {
                    a.max(b)
                }
            },
        );
    CheckResult {
        name: name.to_string(),
        passed: max_deviation <= tolerance,
        max_deviation,
        tolerance,
        samples: deviations.len(),
    }
}

fn max_spread(values: &[f64]) -> f64 {
    let mut d = 0.0f64;
    for a in values {
        for b in values {
            d = d.max((a - b).abs());
        }
    }
    d
}

/// Deviations of a report from expected `(L, K_Sch, e_p, is_pe)`.
fn named_deviation(r: &GateReport, l: f64, k: f64, ep: f64, pe: bool) -> f64 {
    let flag = if r.class.is_perfect_entangler == pe {
        0.0
    } else {
        1.0
    };
    (r.l() - l)
        .abs()
        .max((r.k_sch - k).abs())
        .max((r.entangling_power - ep).abs())
        .max(flag)
}

pub fn run_verification(n: usize, seed: u64) -> Result<VerifySummary> {
    let n = n.max(1);
    let mut checks = Vec::new();

    let named = [
        (NamedGate::Identity, 0.0, 0.0, 0.0, false),
        (NamedGate::Cnot, 0.5, 1.0, 2.0 / 9.0, true),
        (NamedGate::Dcnot, 0.75, 2.0, 2.0 / 9.0, true),
        (NamedGate::Swap, 0.75, 2.0, 0.0, false),
    ];
    let mut dev = Vec::new();
    for (gate, l, k, ep, pe) in named {
        dev.push(named_deviation(
            &analyze_unitary(&gate.unitary(), None)?,
            l,
            k,
            ep,
            pe,
        ));
    }
    checks.push(check("named gate table", &dev, 1e-9));

    let haar: Vec<_> = (0..n as u64).map(|i| haar_su4_at(seed, i)).collect();

    let dev = haar
        .par_iter()
        .map(|u| {
            let c = coordinates_from_unitary(u)?;
            let inv = invariants_from_unitary(u);
            let closed = EntanglementReport::new(&c, &inv);
            let routes = [
                linear_entropy_permutation(u),
                linear_entropy_coeffs(&schmidt_decompose(u).spectrum),
                closed.l_geometric,
                closed.l_invariant,
            ];
            Ok(max_spread(&routes))
        })
        .collect::<Result<Vec<f64>>>()?;
    checks.push(check("four-route linear entropy", &dev, 1e-8));

    let dev = (0..n as u64)
        .into_par_iter()
        .map(|i| {
            let u = &haar[i as usize];
            let dressed = u.dress(
                (&haar_su2_at(seed, 4 * i), &haar_su2_at(seed, 4 * i + 1)),
                (&haar_su2_at(seed, 4 * i + 2), &haar_su2_at(seed, 4 * i + 3)),
            )?;
            let a = invariants_from_unitary(u);
            let b = invariants_from_unitary(&dressed);
            let sa = schmidt_decompose(u).spectrum.values();
            let sb = schmidt_decompose(&dressed).spectrum.values();
            let ca = coordinates_from_unitary(u)?;
            let cb = coordinates_from_unitary(&dressed)?;
            let spec = sa
                .iter()
                .zip(&sb)
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max);
            Ok(a.distance(&b).max(spec).max(ca.max_abs_diff(&cb)))
        })
        .collect::<Result<Vec<f64>>>()?;
    checks.push(check("local invariance", &dev, 1e-8));

    let dev = (0..n as u64)
        .into_par_iter()
        .map(|i| {
            let c = chamber_point_at(seed, i);
            Ok(coordinates_from_unitary(&canonical_gate(&c))?.max_abs_diff(&c))
        })
        .collect::<Result<Vec<f64>>>()?;
    checks.push(check("coordinate round trip", &dev, 1e-8));

    let points: Vec<_> = (0..n as u64)
        .map(|i| chamber_point_at(seed ^ 1, i))
        .collect();
    let dev: Vec<f64> = points
        .iter()
        .map(|c| {
            let r = EntanglementReport::new(c, &invariants_from_point(c));
            (r.ep_invariant - r.ep_linear).abs()
        })
        .collect();
    checks.push(check(
        "entangling power: linear vs invariant form",
        &dev,
        1e-10,
    ));

    let dev: Vec<f64> = points
        .iter()
        .filter_map(|c| {
            let inv = invariants_from_point(c);
            classify(c, &inv).is_perfect_entangler.then(|| {
                let over_g1 = (inv.g1.norm() - 0.25).max(0.0);
                let over_g2 = (inv.g2 - 1.0).max(-1.0 - inv.g2).max(0.0);
                over_g1.max(over_g2)
            })
        })
        .collect();
    checks.push(check("perfect-entangler invariant bounds", &dev, 1e-9));

    let swap = su4_normalize(&NamedGate::Swap.matrix())?;
    let dev: Vec<f64> = haar
        .iter()
        .map(|u| {
            (linear_entropy_swapped(&invariants_from_unitary(u))
                - linear_entropy_permutation(&u.compose(&swap)))
            .abs()
        })
        .collect();
    checks.push(check("swapped-gate linear entropy", &dev, 1e-9));

    let oa1 = edge_sweep(&Edge::OA1.spec(), 200)?;
    let mut conc = Vec::new();
    let mut strength = Vec::new();
    for r in &oa1 {
        let u = canonical_gate(&r.record.point);
        let sp = schmidt_decompose(&u).spectrum;
        let l = linear_entropy_coeffs(&sp);
        conc.push((operator_concurrence(&sp)? - (2.0 * l).sqrt()).abs());
        strength.push((strength_from_entropy_rank2(l)? - schmidt_strength(&sp)).abs());
    }
    checks.push(check("OA1 concurrence = sqrt(2L)", &conc, 1e-10));
    checks.push(check("OA1 strength from entropy", &strength, 1e-9));

    let dev: Vec<f64> = edge_sweep(&Edge::A2A3.spec(), 100)?
        .iter()
        .map(|r| (r.record.k_sch - 2.0).abs().max((r.record.l - 0.75).abs()))
        .collect();
    checks.push(check("A2A3 maximal entanglement", &dev, 1e-9));

    for (a, b) in [
        (Edge::QP, Edge::MN),
        (Edge::LQ, Edge::LM),
        (Edge::A2M, Edge::A2Q),
    ] {
        let ra = edge_sweep(&a.spec(), 101)?;
        let rb = edge_sweep(&b.spec(), 101)?;
        let dev: Vec<f64> = ra
            .iter()
            .zip(&rb)
            .map(|(x, y)| {
                (x.record.k_sch - y.record.k_sch)
                    .abs()
                    .max((x.record.l - y.record.l).abs())
            })
            .collect();
        checks.push(check(&format!("edge pair {a}/{b}"), &dev, 1e-9));
    }

    Ok(VerifySummary {
        passed: checks.iter().all(|c| c.passed),
        n,
        seed,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let s = run_verification(50, 2).unwrap();
        for c in &s.checks {
            assert!(c.passed, "{c:?}");
        }
        assert!(s.passed);
        assert!(s.checks.len() >= 12);
    }
}
