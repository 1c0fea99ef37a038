//! Discrete Fourier transforms on periodic grids, spectral multiplication
//! and torus convolution.
//!
//! Layout: spectra are flattened row-major like field values, axis 0 slow.
//! `forward` is unnormalized (zero mode = plain sum of values); `inverse`
//! carries the 1/n^d factor, so inverse(forward(f)) = f.

use crate::error::{Error, Result};
use crate::grid::{Field, Grid};
use rustfft::num_complex::Complex;
use rustfft::{Fft, FftPlanner};
use std::sync::{Arc, Mutex, OnceLock};

pub type Complex64 = Complex<f64>;

fn plan(len: usize, inverse: bool) -> Arc<dyn Fft<f64>> {
    static PLANNER: OnceLock<Mutex<FftPlanner<f64>>> = OnceLock::new();
    let mut planner = PLANNER.get_or_init(|| Mutex::new(FftPlanner::new())).lock().unwrap();
    if inverse {
        planner.plan_fft_inverse(len)
    } else {
        planner.plan_fft_forward(len)
    }
}

fn transform_nd(grid: &Grid, data: &mut [Complex64], inverse: bool) {
    let n = grid.points_per_axis();
    let fft = plan(n, inverse);
    match grid.dim() {
        1 => fft.process(data),
        _ => {
            // Rows (contiguous), then columns via transpose.
            for row in data.chunks_exact_mut(n) {
                fft.process(row);
            }
            transpose_square(data, n);
            for row in data.chunks_exact_mut(n) {
                fft.process(row);
            }
            transpose_square(data, n);
        }
    }
}

fn transpose_square(data: &mut [Complex64], n: usize) {
    for i in 0..n {
        for j in (i + 1)..n {
            data.swap(i * n + j, j * n + i);
        }
    }
}

/// Forward DFT of a real field. Zero mode equals the sum of the values.
pub fn forward(f: &Field) -> Vec<Complex64> {
    let mut buf: Vec<Complex64> =
        f.values().iter().map(|&v| Complex64::new(v, 0.0)).collect();
    transform_nd(f.grid(), &mut buf, false);
    buf
}

/// Inverse DFT back to a real field. The imaginary residue is checked
/// against `residue_tol` and discarded; a residue above tolerance signals a
/// non-symmetric multiplier bug upstream.
pub fn inverse_real(grid: &Grid, mut spectrum: Vec<Complex64>, residue_tol: f64) -> Result<Field> {
    transform_nd(grid, &mut spectrum, true);
    let scale = 1.0 / grid.len() as f64;
    let mut residue = 0.0f64;
    let mut values = Vec::with_capacity(spectrum.len());
    for c in &spectrum {
        residue = residue.max((c.im * scale).abs());
        values.push(c.re * scale);
    }
    if residue > residue_tol {
        return Err(Error::ImagResidue { residue, tolerance: residue_tol });
    }
    Ok(Field::from_values(*grid, values))
}

fn residue_tolerance(f: &Field, multiplier_sup: f64) -> f64 {
    1e-10 * f.sup_norm().max(f64::MIN_POSITIVE) * multiplier_sup.max(1.0)
}

/// Apply a real spectral multiplier m(xi) to a field:
/// inverse(m * forward(f)). The multiplier must be symmetric under
/// xi -> -xi (any function of ||xi|| is), or the residue check trips.
pub fn apply_real_multiplier(multiplier: &[f64], f: &Field) -> Result<Field> {
    if multiplier.len() != f.grid().len() {
        return Err(Error::MultiplierLength {
            expected: f.grid().len(),
            got: multiplier.len(),
        });
    }
    let mut spectrum = forward(f);
    let mut sup = 0.0f64;
    for (s, &m) in spectrum.iter_mut().zip(multiplier) {
        *s *= m;
        sup = sup.max(m.abs());
    }
    inverse_real(f.grid(), spectrum, residue_tolerance(f, sup))
}

/// Torus convolution with a kernel given by its spectral multiplier.
/// Kernel multipliers are real with values in [0, 1] and zero mode 1,
/// so convolution preserves the integral exactly.
pub fn convolve(multiplier: &[f64], f: &Field) -> Result<Field> {
    debug_assert!(
        multiplier.iter().all(|&m| (-1e-12..=1.0 + 1e-12).contains(&m)),
        "kernel multiplier out of [0, 1]"
    );
    apply_real_multiplier(multiplier, f)
}

/// Spectral partial derivative along `axis` (multiplier i*xi_axis, with the
/// Nyquist mode zeroed as usual for odd multipliers on even grids).
pub fn spectral_derivative(f: &Field, axis: usize) -> Result<Field> {
    let grid = *f.grid();
    let freqs = grid.axis_frequencies();
    let n = grid.points_per_axis();
    let nyquist = n / 2;
    let mut spectrum = forward(f);
    let mut sup = 0.0f64;
    match grid.dim() {
        1 => {
            for (k, s) in spectrum.iter_mut().enumerate() {
                let xi = if k == nyquist { 0.0 } else { freqs[k] };
                *s *= Complex64::new(0.0, xi);
                sup = sup.max(xi.abs());
            }
        }
        _ => {
            for (idx, s) in spectrum.iter_mut().enumerate() {
                let k = if axis == 0 { idx / n } else { idx % n };
                let xi = if k == nyquist { 0.0 } else { freqs[k] };
                *s *= Complex64::new(0.0, xi);
                sup = sup.max(xi.abs());
            }
        }
    }
    inverse_real(&grid, spectrum, residue_tolerance(f, sup))
}

/// Frequency-space energy matching ||f||_2^2 (discrete Parseval).
pub fn spectral_energy(f: &Field) -> f64 {
    let spectrum = forward(f);
    let scale = f.grid().cell_volume() / f.grid().len() as f64;
    crate::quad::compensated_sum(spectrum.iter().map(|c| c.norm_sqr())) * scale
}

/// Band-limited (trigonometric) interpolant of a field, evaluable at
/// arbitrary points of the torus. Modes with negligible coefficients are
/// pruned, so evaluation cost follows the field's spectral support.
pub struct TrigInterp {
    modes: Vec<(Complex64, [f64; 2])>,
    dim: usize,
    half_width: f64,
}

impl TrigInterp {
    pub fn new(f: &Field) -> Self {
        let grid = f.grid();
        let spectrum = forward(f);
        let scale = 1.0 / grid.len() as f64;
        let freqs = grid.axis_frequencies();
        let n = grid.points_per_axis();
        let peak = spectrum.iter().fold(0.0f64, |a, c| a.max(c.norm()));
        let cutoff = 1e-14 * peak;
        let mut modes = Vec::new();
        for (idx, c) in spectrum.iter().enumerate() {
            if c.norm() <= cutoff {
                continue;
            }
            let xi = match grid.dim() {
                1 => [freqs[idx], 0.0],
                _ => [freqs[idx / n], freqs[idx % n]],
            };
            modes.push((*c * scale, xi));
        }
        TrigInterp { modes, dim: grid.dim(), half_width: grid.half_width() }
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        let l = self.half_width;
        let mut acc = 0.0;
        for (c, xi) in &self.modes {
            let mut phase = xi[0] * (x[0] + l);
            if self.dim == 2 {
                phase += xi[1] * (x[1] + l);
            }
            // Real part of c * e^{i phase}; fine for the (real) Nyquist mode too.
            acc += c.re * phase.cos() - c.im * phase.sin();
        }
        acc
    }

    pub fn mode_count(&self) -> usize {
        self.modes.len()
    }
}
