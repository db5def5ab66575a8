//! Deterministic one-dimensional quadrature: composite Simpson for moment
//! checks and trapezoid weights for the second-stage integral.

/// Composite Simpson rule on `[a, b]` with `nodes` equally spaced points.
///
/// `nodes` must be odd and at least 3 so the interval count is even.
/// Summation is left to right, so the result is bit-reproducible.
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, nodes: usize) -> f64 {
    assert!(nodes >= 3 && nodes % 2 == 1, "simpson needs an odd node count >= 3");
    let h = (b - a) / (nodes - 1) as f64;
    let mut sum = f(a) + f(b);
    for i in 1..nodes - 1 {
        let coeff = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += coeff * f(a + i as f64 * h);
    }
    sum * h / 3.0
}

/// Uniform grid of `m >= 2` points on `[a, b]`, endpoints included.
pub fn uniform_grid(a: f64, b: f64, m: usize) -> Vec<f64> {
    assert!(m >= 2, "grid needs at least two nodes");
    let step = (b - a) / (m - 1) as f64;
    (0..m)
        .map(|i| if i == m - 1 { b } else { a + i as f64 * step })
        .collect()
}

/// Trapezoid weights for a uniform grid of `m >= 2` points on `[a, b]`:
/// spacing at interior nodes, half spacing at the endpoints.
pub fn trapezoid_weights(a: f64, b: f64, m: usize) -> Vec<f64> {
    assert!(m >= 2, "trapezoid rule needs at least two nodes");
    let step = (b - a) / (m - 1) as f64;
    (0..m)
        .map(|i| if i == 0 || i == m - 1 { 0.5 * step } else { step })
        .collect()
}
