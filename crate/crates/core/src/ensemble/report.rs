//! Full characterisation of a single gate.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::canonical::{
    classify, coordinates_from_unitary, invariants_from_unitary, GateClass, NamedGate, WeylPoint,
};
use crate::error::{Error, Result};
use crate::matkit::{c64, su4_normalize_with_tol, ComplexMatrix, Unitary4};
use crate::nonlocal::{entangling_power_montecarlo, EntanglementReport, MonteCarloEstimate};
use crate::schmidt::{
    linear_entropy_coeffs, linear_entropy_permutation, operator_concurrence, schmidt_decompose,
    schmidt_number, schmidt_strength, SCHMIDT_EPS,
};

/// Unitarity tolerance for user supplied matrices.
pub const INPUT_UNITARY_TOL: f64 = 1e-8;

#[derive(Clone, Debug)]
pub enum MatrixSource {
    Named(NamedGate),
    Matrix(ComplexMatrix),
    File(PathBuf),
}

impl MatrixSource {
    fn label(&self) -> String {
        match self {
            MatrixSource::Named(g) => g.label().to_string(),
            MatrixSource::Matrix(_) => "matrix".to_string(),
            MatrixSource::File(p) => p.display().to_string(),
        }
    }

    pub fn load(&self) -> Result<Unitary4> {
        let m = match self {
            MatrixSource::Named(g) => g.matrix(),
            MatrixSource::Matrix(m) => m.clone(),
            MatrixSource::File(p) => read_matrix_file(p)?,
        };
        su4_normalize_with_tol(&m, INPUT_UNITARY_TOL)
    }
}

#[derive(Deserialize, Serialize)]
struct MatrixFile {
    matrix: Vec<Vec<[f64; 2]>>,
}

/// Parses `{"matrix": [[[re, im], ...4], ...4]}`.
pub fn parse_matrix_json(text: &str) -> Result<ComplexMatrix> {
    let file: MatrixFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if file.matrix.len() != 4 || file.matrix.iter().any(|row| row.len() != 4) {
        let cols = file.matrix.iter().map(Vec::len).max().unwrap_or(0);
        return Err(Error::Parse(format!(
            "expected 4 rows of 4 entries, got {} rows (widest {cols})",
            file.matrix.len()
        )));
    }
    Ok(ComplexMatrix::from_fn(4, 4, |i, j| {
        let [re, im] = file.matrix[i][j];
        c64(re, im)
    }))
}

pub fn matrix_to_json(m: &ComplexMatrix) -> String {
    let file = MatrixFile {
        matrix: (0..m.nrows())
            .map(|i| {
                (0..m.ncols())
                    .map(|j| [m[(i, j)].re, m[(i, j)].im])
                    .collect()
            })
            .collect(),
    };
    serde_json::to_string(&file).expect("plain data serialises")
}

pub fn read_matrix_file(path: &Path) -> Result<ComplexMatrix> {
    parse_matrix_json(&std::fs::read_to_string(path)?)
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct InvariantsSummary {
    pub g1_re: f64,
    pub g1_im: f64,
    pub g1_abs: f64,
    pub g2: f64,
}

/// Linear entropy by permutation trace, Schmidt coefficients, chamber
/// coordinates and local invariants.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct LinearEntropyRoutes {
    pub permutation: f64,
    pub coefficients: f64,
    pub geometric: f64,
    pub invariant: f64,
    pub max_deviation: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct GateReport {
    pub source: String,
    pub coordinates: WeylPoint,
    pub invariants: InvariantsSummary,
    pub spectrum: [f64; 4],
    pub schmidt_number: usize,
    pub k_sch: f64,
    pub linear_entropy: LinearEntropyRoutes,
    pub l_swapped: f64,
    pub concurrence: Option<f64>,
    pub entangling_power: f64,
    pub entangling_power_linear: f64,
    pub montecarlo: Option<MonteCarloEstimate>,
    pub class: GateClass,
}

impl GateReport {
    /// Linear entropy from the Schmidt coefficients.
    pub fn l(&self) -> f64 {
        self.linear_entropy.coefficients
    }
}

/// Monte-Carlo settings for [`analyze_gate`].
#[derive(Clone, Copy, Debug)]
pub struct MonteCarloConfig {
    pub samples: usize,
    pub seed: u64,
}

pub fn analyze_gate(source: &MatrixSource, mc: Option<MonteCarloConfig>) -> Result<GateReport> {
    let u = source.load()?;
    let mut report = analyze_unitary(&u, mc)?;
    report.source = source.label();
    Ok(report)
}

pub fn analyze_unitary(u: &Unitary4, mc: Option<MonteCarloConfig>) -> Result<GateReport> {
    let coordinates = coordinates_from_unitary(u)?;
    let inv = invariants_from_unitary(u);
    let spectrum = schmidt_decompose(u).spectrum;
    let number = schmidt_number(&spectrum, SCHMIDT_EPS)?;
    let closed = EntanglementReport::new(&coordinates, &inv);

    let routes = [
        linear_entropy_permutation(u),
        linear_entropy_coeffs(&spectrum),
        closed.l_geometric,
        closed.l_invariant,
    ];
    let mut max_deviation = 0.0f64;
    for a in routes {
        for b in routes {
            max_deviation = max_deviation.max((a - b).abs());
        }
    }

    Ok(GateReport {
        source: String::new(),
        coordinates,
        invariants: InvariantsSummary {
            g1_re: inv.g1.re,
            g1_im: inv.g1.im,
            g1_abs: inv.g1.norm(),
            g2: inv.g2,
        },
        spectrum: spectrum.values(),
        schmidt_number: number,
        k_sch: schmidt_strength(&spectrum),
        linear_entropy: LinearEntropyRoutes {
            permutation: routes[0],
            coefficients: routes[1],
            geometric: routes[2],
            invariant: routes[3],
            max_deviation,
        },
        l_swapped: closed.l_swapped,
        concurrence: if number <= 2 {
            Some(operator_concurrence(&spectrum)?)
        } else {
            None
        },
        entangling_power: closed.ep_invariant,
        entangling_power_linear: closed.ep_linear,
        montecarlo: mc.map(|cfg| entangling_power_montecarlo(u, cfg.samples, cfg.seed)),
        class: classify(&coordinates, &inv),
    })
}

/// `key,value` lines for the CSV output of `analyze`.
pub fn report_csv(r: &GateReport) -> String {
    use super::format::{fmt_sig, CSV_DIGITS};
    let f = |x: f64| fmt_sig(x, CSV_DIGITS);
    let mut rows: Vec<(String, String)> = vec![
        ("source".into(), r.source.clone()),
        ("c1".into(), f(r.coordinates.c1)),
        ("c2".into(), f(r.coordinates.c2)),
        ("c3".into(), f(r.coordinates.c3)),
        ("g1_re".into(), f(r.invariants.g1_re)),
        ("g1_im".into(), f(r.invariants.g1_im)),
        ("g1_abs".into(), f(r.invariants.g1_abs)),
        ("g2".into(), f(r.invariants.g2)),
    ];
    for (k, s) in r.spectrum.iter().enumerate() {
        rows.push((format!("s{}", k + 1), f(*s)));
    }
    rows.extend([
        ("schmidt_number".into(), r.schmidt_number.to_string()),
        ("k_sch".into(), f(r.k_sch)),
        ("l_permutation".into(), f(r.linear_entropy.permutation)),
        ("l_coefficients".into(), f(r.linear_entropy.coefficients)),
        ("l_geometric".into(), f(r.linear_entropy.geometric)),
        ("l_invariant".into(), f(r.linear_entropy.invariant)),
        ("l_max_deviation".into(), f(r.linear_entropy.max_deviation)),
        ("l_swapped".into(), f(r.l_swapped)),
        (
            "concurrence".into(),
            r.concurrence.map(f).unwrap_or_default(),
        ),
        ("ep".into(), f(r.entangling_power)),
        ("ep_linear".into(), f(r.entangling_power_linear)),
    ]);
    if let Some(mc) = r.montecarlo {
        rows.push(("ep_montecarlo".into(), f(mc.mean)));
        rows.push(("ep_montecarlo_std_error".into(), f(mc.std_error)));
        rows.push(("ep_montecarlo_samples".into(), mc.samples.to_string()));
    }
    rows.extend([
        ("is_local".into(), r.class.is_local.to_string()),
        ("is_pe".into(), r.class.is_perfect_entangler.to_string()),
        (
            "is_special_pe".into(),
            r.class.is_special_perfect_entangler.to_string(),
        ),
        (
            "named_equivalent".into(),
            r.class
                .named_equivalent
                .map(|g| g.label().to_string())
                .unwrap_or_default(),
        ),
    ]);
    let mut out = String::from("key,value\n");
    for (k, v) in rows {
        out.push_str(&format!("{k},{v}\n"));
    }
    out
}
