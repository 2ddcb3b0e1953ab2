//! Quadrature rules on uniform grids and a log-log order fit.

use num_complex::Complex64 as C64;

/// Composite Simpson weights for `n` equally spaced nodes with spacing `h`.
///
/// Odd `n` uses the 1-4-2-…-4-1 pattern; even `n ≥ 4` closes the last three
/// intervals with Simpson's 3/8 rule. `n = 2` degrades to the trapezoid.
pub fn simpson_weights(n: usize, h: f64) -> Vec<f64> {
    assert!(n >= 2, "at least two nodes");
    let mut w = vec![0.0; n];
    if n == 2 {
        w[0] = h / 2.0;
        w[1] = h / 2.0;
        return w;
    }
    let simpson_end = if n % 2 == 1 { n - 1 } else { n - 4 };
    let mut i = 0;
    while i < simpson_end {
        w[i] += h / 3.0;
        w[i + 1] += 4.0 * h / 3.0;
        w[i + 2] += h / 3.0;
        i += 2;
    }
    if n.is_multiple_of(2) {
        let s = n - 4;
        for (k, c) in [1.0, 3.0, 3.0, 1.0].into_iter().enumerate() {
            w[s + k] += 3.0 * h / 8.0 * c;
        }
    }
    w
}

/// Trapezoid rule on uniformly spaced samples.
pub fn trapezoid(values: &[f64], h: f64) -> f64 {
    match values.len() {
        0 | 1 => 0.0,
        n => h * (values[1..n - 1].iter().sum::<f64>() + 0.5 * (values[0] + values[n - 1])),
    }
}

/// `∫₀^1 v^k e^{iθv} dv` for `k = 0, 1`, stable for small `θ`.
fn filon_moments(theta: f64) -> (C64, C64) {
    if theta.abs() < 0.2 {
        // Power series Σ (iθ)^j / j! · 1/(j+1+k).
        let mut m0 = C64::new(0.0, 0.0);
        let mut m1 = C64::new(0.0, 0.0);
        let mut term = C64::new(1.0, 0.0);
        for j in 0..20 {
            m0 += term / (j as f64 + 1.0);
            m1 += term / (j as f64 + 2.0);
            term *= C64::new(0.0, theta) / (j as f64 + 1.0);
        }
        (m0, m1)
    } else {
        let it = C64::new(0.0, theta);
        let e = it.exp();
        let m0 = (e - 1.0) / it;
        let m1 = e / it - (e - 1.0) / (it * it);
        (m0, m1)
    }
}

/// Filon-type weights for `∫₀^{(n-1)h} e^{iωs} f(s) ds` with `f` sampled on
/// `s_k = k h` and interpolated piecewise linearly. Exact in the oscillatory
/// factor, so accuracy does not degrade as `ωh` grows.
pub fn filon_linear_weights(n: usize, h: f64, omega: f64) -> Vec<C64> {
    assert!(n >= 2, "at least two nodes");
    let (m0, m1) = filon_moments(omega * h);
    // On [s_k, s_k + h]: e^{iωs_k} h [ (m0 - m1) f_k + m1 f_{k+1} ].
    let left = (m0 - m1) * h;
    let right = m1 * h;
    let step = C64::from_polar(1.0, omega * h);
    let mut w = vec![C64::new(0.0, 0.0); n];
    let mut phase = C64::new(1.0, 0.0);
    for k in 0..n - 1 {
        if k % 64 == 0 {
            phase = C64::from_polar(1.0, omega * h * k as f64);
        }
        w[k] += phase * left;
        w[k + 1] += phase * right;
        phase *= step;
    }
    w
}

/// Least-squares slope of `ln(err)` against `ln(1/h)` — the observed order
/// of convergence for errors measured at step sizes `h`.
pub fn observed_order(steps: &[f64], errors: &[f64]) -> f64 {
    let pts: Vec<(f64, f64)> = steps
        .iter()
        .zip(errors)
        .map(|(&h, &e)| ((1.0 / h).ln(), e.max(f64::MIN_POSITIVE).ln()))
        .collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    -sxy / sxx
}
