//! Sample statistics with `(n − 1)` normalisation.

pub fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Sample covariance; NaN for fewer than two samples.
pub fn covariance(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len(), "length mismatch");
    let n = xs.len();
    if n < 2 {
        return f64::NAN;
    }
    let (mx, my) = (mean(xs), mean(ys));
    xs.iter()
        .zip(ys)
        .map(|(x, y)| (x - mx) * (y - my))
        .sum::<f64>()
        / (n - 1) as f64
}

/// Pearson correlation coefficient; NaN when either variance vanishes.
pub fn pearson(xs: &[f64], ys: &[f64]) -> f64 {
    let sxy = covariance(xs, ys);
    let sxx = covariance(xs, xs);
    let syy = covariance(ys, ys);
    let scale = (sxx.abs() + syy.abs()).max(f64::MIN_POSITIVE);
    if !(sxx / scale > 1e-24 && syy / scale > 1e-24) {
        return f64::NAN;
    }
    (sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0)
}
