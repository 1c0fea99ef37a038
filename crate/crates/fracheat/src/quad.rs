//! Small quadrature and summation utilities shared across the crate.

/// Compensated (Neumaier) summation; keeps long sums accurate to O(eps)
/// independent of length.
pub fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Nodes and weights of the N-point Gauss-Legendre rule on [-1, 1],
/// computed by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        // Tricomi initial guess for the i-th root.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre P_n(x) and derivative via the three-term recurrence.
            let (mut p0, mut p1) = (1.0f64, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// 16-point Gauss-Legendre on [a, b].
pub fn gl16<F: FnMut(f64) -> f64>(a: f64, b: f64, mut f: F) -> f64 {
    thread_local! {
        static RULE: (Vec<f64>, Vec<f64>) = gauss_legendre(16);
    }
    RULE.with(|(xs, ws)| {
        let c = 0.5 * (a + b);
        let h = 0.5 * (b - a);
        let mut acc = 0.0;
        for (&x, &w) in xs.iter().zip(ws) {
            acc += w * f(c + h * x);
        }
        acc * h
    })
}

/// Adaptive quadrature on [a, b] by interval bisection with an embedded
/// GL16-vs-two-half-GL16 error estimate. Suitable for smooth integrands;
/// singular endpoints should be handled by the caller (graded intervals).
pub fn adaptive<F: FnMut(f64) -> f64 + Copy>(a: f64, b: f64, rel_tol: f64, f: F) -> f64 {
    fn rec<F: FnMut(f64) -> f64 + Copy>(
        a: f64,
        b: f64,
        whole: f64,
        tol: f64,
        f: F,
        depth: usize,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let left = gl16(a, m, f);
        let right = gl16(m, b, f);
        let err = (left + right - whole).abs();
        if err <= tol || depth >= 40 {
            return left + right;
        }
        rec(a, m, left, 0.5 * tol, f, depth + 1) + rec(m, b, right, 0.5 * tol, f, depth + 1)
    }
    let whole = gl16(a, b, f);
    let tol = rel_tol * whole.abs().max(1e-300);
    rec(a, b, whole, tol, f, 0)
}

/// Composite GL16 over [a, b] split into `panels` equal panels. For
/// oscillatory integrands pick panels so each covers at most ~2 periods.
pub fn composite_gl16<F: FnMut(f64) -> f64>(a: f64, b: f64, panels: usize, mut f: F) -> f64 {
    let panels = panels.max(1);
    let h = (b - a) / panels as f64;
    let parts: Vec<f64> =
        (0..panels).map(|i| gl16(a + i as f64 * h, a + (i + 1) as f64 * h, &mut f)).collect();
    compensated_sum(parts)
}
