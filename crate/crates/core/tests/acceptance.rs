//! Acceptance criteria, one test per criterion. Each test prints a single
//! `[PASS]` / `[FAIL]` line with the measured deviation before asserting.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};
use std::process::Command;

use twoq::canonical::{
    classify, coordinates_from_unitary, in_perfect_entangler_polyhedron, invariants_from_point,
    points, CLASSIFY_TOL,
};
use twoq::ensemble::{
    analyze_unitary, chamber_point_at, edge_sweep, haar_su2_at, haar_su4_at, scatter_study, Edge,
    EdgeRecord, GateReport, ScatterMode, DEFAULT_SEED,
};
use twoq::matkit::canonical_gate;
use twoq::nonlocal::{entangling_power_montecarlo, linear_entropy_point};
use twoq::schmidt::{operator_concurrence, strength_from_entropy_rank2};
use twoq::{NamedGate, SchmidtSpectrum, WeylPoint};

fn report(criterion: u32, passed: bool, detail: String) {
    let tag = if passed { "PASS" } else { "FAIL" };
    println!("[{tag}] criterion {criterion}: {detail}");
}

fn named(g: NamedGate) -> GateReport {
    analyze_unitary(&g.unitary(), None).unwrap()
}

fn max_abs(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// First `n` chamber-uniform points that classify as perfect entanglers.
fn perfect_entangler_samples(n: usize, seed: u64) -> Vec<WeylPoint> {
    let mut out = Vec::with_capacity(n);
    let mut i = 0u64;
    while out.len() < n {
        let c = chamber_point_at(seed, i);
        if classify(&c, &invariants_from_point(&c)).is_perfect_entangler {
            out.push(c);
        }
        i += 1;
    }
    out
}

#[test]
fn criterion_01_named_gate_table() {
    const TOL: f64 = 1e-9;
    let h = 0.5;
    let r2 = FRAC_1_SQRT_2;
    let mut dev = 0.0f64;
    let mut flags_ok = true;

    // (gate, coordinates, |G1|, G2, spectrum, K_Sch, L, e_p, PE)
    let table = [
        (
            NamedGate::Cnot,
            points::L,
            0.0,
            1.0,
            [r2, r2, 0.0, 0.0],
            1.0,
            0.5,
            2.0 / 9.0,
            true,
        ),
        (
            NamedGate::Swap,
            points::A3,
            1.0,
            -3.0,
            [h, h, h, h],
            2.0,
            0.75,
            0.0,
            false,
        ),
        (
            NamedGate::Identity,
            points::O,
            1.0,
            3.0,
            [1.0, 0.0, 0.0, 0.0],
            0.0,
            0.0,
            0.0,
            false,
        ),
    ];
    for (g, c, g1, g2, s, k, l, ep, pe) in table {
        let r = named(g);
        dev = dev
            .max(r.coordinates.max_abs_diff(&c))
            .max((r.invariants.g1_abs - g1).abs())
            .max((r.invariants.g2 - g2).abs())
            .max(max_abs(&r.spectrum, &s))
            .max((r.k_sch - k).abs())
            .max((r.l() - l).abs())
            .max((r.entangling_power - ep).abs());
        flags_ok &= r.class.is_perfect_entangler == pe;
    }
    let cnot = named(NamedGate::Cnot);
    dev = dev.max((cnot.concurrence.unwrap() - 1.0).abs());

    let dcnot = named(NamedGate::Dcnot);
    dev = dev
        .max((dcnot.l() - 0.75).abs())
        .max((dcnot.entangling_power - 2.0 / 9.0).abs());
    flags_ok &= dcnot.class.is_perfect_entangler;

    let passed = flags_ok && dev <= TOL;
    report(
        1,
        passed,
        format!("named-gate table max deviation {dev:.3e} (tol {TOL:e}), flags ok = {flags_ok}"),
    );
    assert!(passed);
}

#[test]
fn criterion_02_four_route_linear_entropy() {
    const N: u64 = 1000;
    const TOL: f64 = 1e-8;
    let seed = DEFAULT_SEED + 2;
    let dev = (0..N)
        .map(|i| {
            analyze_unitary(&haar_su4_at(seed, i), None)
                .unwrap()
                .linear_entropy
                .max_deviation
        })
        .fold(0.0, f64::max);
    let passed = dev <= TOL;
    report(
        2,
        passed,
        format!("{N} Haar gates, max pairwise L deviation {dev:.3e} (tol {TOL:e})"),
    );
    assert!(passed);
}

#[test]
fn criterion_03_local_invariance() {
    const N: u64 = 500;
    const TOL: f64 = 1e-8;
    let seed = DEFAULT_SEED + 3;
    let mut dev = 0.0f64;
    for i in 0..N {
        let u = haar_su4_at(seed, i);
        let a: Vec<_> = (0..4).map(|j| haar_su2_at(seed, 4 * i + j)).collect();
        let dressed = u.dress((&a[0], &a[1]), (&a[2], &a[3])).unwrap();
        let r0 = analyze_unitary(&u, None).unwrap();
        let r1 = analyze_unitary(&dressed, None).unwrap();
        dev = dev
            .max(r0.coordinates.max_abs_diff(&r1.coordinates))
            .max((r0.invariants.g1_abs - r1.invariants.g1_abs).abs())
            .max((r0.invariants.g2 - r1.invariants.g2).abs())
            .max(max_abs(&r0.spectrum, &r1.spectrum))
            .max((r0.k_sch - r1.k_sch).abs())
            .max((r0.l() - r1.l()).abs())
            .max((r0.entangling_power - r1.entangling_power).abs());
    }
    let passed = dev <= TOL;
    report(
        3,
        passed,
        format!("{N} dressed gates, max deviation {dev:.3e} (tol {TOL:e})"),
    );
    assert!(passed);
}

#[test]
fn criterion_04_round_trip() {
    const N: u64 = 1000;
    const TOL: f64 = 1e-8;
    let seed = DEFAULT_SEED + 4;
    let mut dev = 0.0f64;
    for i in 0..N {
        let c = chamber_point_at(seed, i);
        let back = coordinates_from_unitary(&canonical_gate(&c)).unwrap();
        dev = dev.max(back.max_abs_diff(&c));
    }
    let passed = dev <= TOL;
    report(
        4,
        passed,
        format!("{N} chamber points, max coordinate error {dev:.3e} (tol {TOL:e})"),
    );
    assert!(passed);
}

#[test]
fn criterion_05_schmidt_number_two_edge() {
    let sweep = edge_sweep(&Edge::OA1.spec(), 200).unwrap();
    let mut dev_c = 0.0f64;
    let mut dev_k = 0.0f64;
    for rec in &sweep {
        let r = &rec.record;
        let c = operator_concurrence(&SchmidtSpectrum::new(r.spectrum).unwrap()).unwrap();
        dev_c = dev_c.max((c - (2.0 * r.l).sqrt()).abs());
        dev_k = dev_k.max((r.k_sch - strength_from_entropy_rank2(r.l).unwrap()).abs());
    }

    // Points t and 1 − t share L; order by L and require K_Sch to rise with it.
    let mut by_l: Vec<(f64, f64)> = sweep.iter().map(|r| (r.record.l, r.record.k_sch)).collect();
    by_l.sort_by(|a, b| a.0.total_cmp(&b.0));
    let monotone = by_l.windows(2).all(|w| {
        if w[1].0 - w[0].0 > 1e-12 {
            w[1].1 > w[0].1
        } else {
            (w[1].1 - w[0].1).abs() <= 1e-9
        }
    });

    let passed = dev_c <= 1e-10 && dev_k <= 1e-9 && monotone;
    report(
        5,
        passed,
        format!("edge OA1: |C − √(2L)| {dev_c:.3e} (tol 1e-10), |K − K(L)| {dev_k:.3e} (tol 1e-9), monotone = {monotone}"),
    );
    assert!(passed);
}

#[test]
fn criterion_06_maximal_linear_entropy_edge() {
    let sweep = edge_sweep(&Edge::A2A3.spec(), 100).unwrap();
    let dev = sweep
        .iter()
        .map(|r| (r.record.k_sch - 2.0).abs().max((r.record.l - 0.75).abs()))
        .fold(0.0, f64::max);

    let seed = DEFAULT_SEED + 6;
    let mut off_edge_max = 0.0f64;
    let mut violations = 0;
    for i in 0..1000 {
        let c = chamber_point_at(seed, i);
        let on_edge = (c.c1 - FRAC_PI_2).abs() <= 1e-6 && (c.c2 - FRAC_PI_2).abs() <= 1e-6;
        if on_edge {
            continue;
        }
        let l = analyze_unitary(&canonical_gate(&c), None).unwrap().l();
        off_edge_max = off_edge_max.max(l);
        if l >= 0.75 - 1e-6 {
            violations += 1;
        }
    }

    let passed = dev <= 1e-9 && violations == 0;
    report(
        6,
        passed,
        format!("edge A2A3 deviation {dev:.3e} (tol 1e-9); off-edge max L {off_edge_max:.6}, violations {violations}"),
    );
    assert!(passed);
}

#[test]
fn criterion_07_edge_pair_coincidence() {
    const STEPS: usize = 101;
    const TOL: f64 = 1e-9;
    let measures = |e: Edge| -> Vec<(f64, f64)> {
        edge_sweep(&e.spec(), STEPS)
            .unwrap()
            .iter()
            .map(|r: &EdgeRecord| (r.record.k_sch, r.record.l))
            .collect()
    };
    let mut dev = 0.0f64;
    for (a, b) in [
        (Edge::QP, Edge::MN),
        (Edge::LQ, Edge::LM),
        (Edge::A2M, Edge::A2Q),
    ] {
        for (x, y) in measures(a).iter().zip(measures(b)) {
            dev = dev.max((x.0 - y.0).abs()).max((x.1 - y.1).abs());
        }
    }
    let passed = dev <= TOL;
    report(
        7,
        passed,
        format!("QP/MN, LQ/LM, A2M/A2Q max (K, L) deviation {dev:.3e} (tol {TOL:e})"),
    );
    assert!(passed);
}

#[test]
fn criterion_08_perfect_entangler_entropy_range() {
    const N: usize = 10_000;
    let pe = perfect_entangler_samples(N, DEFAULT_SEED);
    let ls: Vec<f64> = pe.iter().map(linear_entropy_point).collect();
    let lo = ls.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = ls.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let in_range = lo >= 0.4375 - 1e-9 && hi <= 0.75 + 1e-9;
    let (gap_lo, gap_hi) = (lo - 0.4375, 0.75 - hi);
    let passed = in_range && gap_lo <= 0.002 && gap_hi <= 0.002;
    report(
        8,
        passed,
        format!("{N} perfect entanglers: L in [{lo:.6}, {hi:.6}], gaps to [0.4375, 0.75] = ({gap_lo:.2e}, {gap_hi:.2e}) (tol 2e-3)"),
    );
    assert!(passed);
}

#[test]
fn criterion_09_perfect_entangler_invariant_bounds() {
    const N: usize = 10_000;
    let pe = perfect_entangler_samples(N, DEFAULT_SEED);
    let mut bad = 0;
    let (mut g1_max, mut g2_lo, mut g2_hi) = (0.0f64, f64::INFINITY, f64::NEG_INFINITY);
    for c in &pe {
        let inv = analyze_unitary(&canonical_gate(c), None)
            .unwrap()
            .invariants;
        g1_max = g1_max.max(inv.g1_abs);
        g2_lo = g2_lo.min(inv.g2);
        g2_hi = g2_hi.max(inv.g2);
        if inv.g1_abs > 0.25 + 1e-9 || inv.g2 < -1.0 - 1e-9 || inv.g2 > 1.0 + 1e-9 {
            bad += 1;
        }
        assert!(in_perfect_entangler_polyhedron(c, CLASSIFY_TOL));
    }
    let passed = bad == 0;
    report(
        9,
        passed,
        format!("{N} perfect entanglers: max |G1| {g1_max:.6}, G2 in [{g2_lo:.6}, {g2_hi:.6}], violations {bad}"),
    );
    assert!(passed);
}

#[test]
fn criterion_10_montecarlo_entangling_power() {
    const N: usize = 100_000;
    const SE_MAX: f64 = 0.002;
    let seed = DEFAULT_SEED + 10;
    let mut gates = vec![NamedGate::Cnot.unitary(), NamedGate::SqrtSwap.unitary()];
    gates.extend((0..10).map(|i| haar_su4_at(seed, i)));

    let mut worst_z = 0.0f64;
    let mut worst_se = 0.0f64;
    for (i, u) in gates.iter().enumerate() {
        let exact = analyze_unitary(u, None).unwrap().entangling_power;
        let est = entangling_power_montecarlo(u, N, seed + i as u64);
        worst_z = worst_z.max((est.mean - exact).abs() / est.std_error);
        worst_se = worst_se.max(est.std_error);
    }
    let passed = worst_z <= 3.0 && worst_se <= SE_MAX;
    report(
        10,
        passed,
        format!("{} gates at n = {N}: worst |Δ|/SE {worst_z:.2} (tol 3), worst SE {worst_se:.2e} (tol {SE_MAX:e})", gates.len()),
    );
    assert!(passed);
}

#[test]
fn criterion_11_correlation_reproduction() {
    const N: usize = 100_000;
    const TARGET: f64 = 0.0705;
    const TOL: f64 = 0.02;
    let study = scatter_study(N, DEFAULT_SEED, ScatterMode::ChamberUniform).unwrap();
    let passed = (study.pearson - TARGET).abs() <= TOL;
    report(
        11,
        passed,
        format!(
            "chamber-uniform n = {N}: Pearson(K, L) {:.4} vs {TARGET} ± {TOL}; covariance {:.4}",
            study.pearson, study.covariance
        ),
    );
    assert!(passed);
}

#[test]
fn criterion_12_lq_monotonicity() {
    let sweep = edge_sweep(&Edge::LQ.spec(), 200).unwrap();
    let mut by_l: Vec<(f64, f64)> = sweep.iter().map(|r| (r.record.l, r.record.k_sch)).collect();
    by_l.sort_by(|a, b| a.0.total_cmp(&b.0));
    let distinct_l = by_l.windows(2).all(|w| w[1].0 > w[0].0);
    let decreasing = by_l.windows(2).all(|w| w[1].1 < w[0].1);
    let passed = distinct_l && decreasing;
    report(
        12,
        passed,
        format!(
            "edge LQ: L spans [{:.6}, {:.6}], K_Sch strictly decreasing in L = {decreasing}",
            by_l[0].0,
            by_l[by_l.len() - 1].0
        ),
    );
    assert!(passed);
}

#[test]
fn criterion_13_cli_contract() {
    let bin = env!("CARGO_BIN_EXE_twoq");

    let verify = Command::new(bin).args(["verify"]).output().unwrap();
    let verify_ok = verify.status.code() == Some(0);

    let analyze = Command::new(bin)
        .args(["analyze", "--gate", "CNOT", "--json"])
        .output()
        .unwrap();
    let json: serde_json::Value = serde_json::from_slice(&analyze.stdout).unwrap();
    let f = |ptr: &str| {
        json.pointer(ptr)
            .and_then(|v| v.as_f64())
            .unwrap_or(f64::NAN)
    };
    let expected = [
        ("/coordinates/c1", FRAC_PI_2),
        ("/coordinates/c2", 0.0),
        ("/coordinates/c3", 0.0),
        ("/invariants/g1_abs", 0.0),
        ("/invariants/g2", 1.0),
        ("/spectrum/0", FRAC_1_SQRT_2),
        ("/spectrum/1", FRAC_1_SQRT_2),
        ("/spectrum/2", 0.0),
        ("/spectrum/3", 0.0),
        ("/k_sch", 1.0),
        ("/linear_entropy/coefficients", 0.5),
        ("/concurrence", 1.0),
        ("/entangling_power", 2.0 / 9.0),
    ];
    let dev = expected
        .iter()
        .map(|(ptr, v)| (f(ptr) - v).abs())
        .fold(
            0.0,
            |a: f64, b| if b.is_nan() { f64::INFINITY } else { a.max(b) },
        );
    let pe = json.pointer("/class/is_perfect_entangler") == Some(&serde_json::Value::Bool(true));
    let analyze_ok = analyze.status.success() && dev <= 1e-9 && pe;

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"matrix": [[[1, 0], [0, 0]], [[0, 0]]]}"#).unwrap();
    let bad = Command::new(bin)
        .args(["analyze", "--file"])
        .arg(&path)
        .output()
        .unwrap();
    let bad_ok = bad.status.code() == Some(2);

    let passed = verify_ok && analyze_ok && bad_ok;
    report(
        13,
        passed,
        format!("verify exit 0 = {verify_ok}; analyze CNOT values (max dev {dev:.1e}) = {analyze_ok}; malformed file exit 2 = {bad_ok}"),
    );
    assert!(passed);
}
