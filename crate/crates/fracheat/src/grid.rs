//! Periodic grids on [-L, L]^d and real scalar fields sampled on them.
//!
//! The box [-L, L]^d stands in for R^d; every norm, integral and theorem
//! check in this crate is interpreted on the torus. Quadrature is the
//! rectangle rule, which is spectrally accurate for smooth periodic data and
//! matches the spectral convolution exactly.

use crate::error::{Error, Result};
use crate::quad::compensated_sum;
use std::f64::consts::PI;

/// Uniform periodic grid: `n` points per axis on [-L, L)^d, d in {1, 2}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    d: usize,
    n: usize,
    half_width: f64,
}

impl Grid {
    /// Points per axis must be a power of two >= 8 so transform behavior is
    /// uniform across resolutions.
    pub fn new(d: usize, n: usize, half_width: f64) -> Result<Self> {
        if d != 1 && d != 2 {
            return Err(Error::InvalidDimension(d));
        }
        if n < 8 || !n.is_power_of_two() {
            return Err(Error::NonPowerOfTwo(n));
        }
        if !(half_width > 0.0) || !half_width.is_finite() {
            return Err(Error::NonPositiveHalfWidth(half_width));
        }
        Ok(Grid { d, n, half_width })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn points_per_axis(&self) -> usize {
        self.n
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    /// Total number of grid points, n^d.
    pub fn len(&self) -> usize {
        self.n.pow(self.d as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / self.n as f64
    }

    /// Cell volume dx^d, the rectangle-rule weight.
    pub fn cell_volume(&self) -> f64 {
        self.spacing().powi(self.d as i32)
    }

    /// Per-axis sample points x_j = -L + j dx.
    pub fn axis_points(&self) -> Vec<f64> {
        let dx = self.spacing();
        (0..self.n).map(|j| -self.half_width + j as f64 * dx).collect()
    }

    /// Per-axis angular frequencies in transform order: xi_k = (pi/L) m(k)
    /// with m(k) = k for k <= n/2 and k - n otherwise.
    pub fn axis_frequencies(&self) -> Vec<f64> {
        let scale = PI / self.half_width;
        (0..self.n)
            .map(|k| {
                let m = if k <= self.n / 2 { k as isize } else { k as isize - self.n as isize };
                scale * m as f64
            })
            .collect()
    }

    /// Largest resolvable frequency magnitude (Nyquist, per axis).
    pub fn max_frequency(&self) -> f64 {
        PI / self.half_width * (self.n / 2) as f64
    }

    /// Coordinates of the flattened grid point `idx` (row-major, axis 0 slow).
    pub fn point(&self, idx: usize) -> [f64; 2] {
        let dx = self.spacing();
        match self.d {
            1 => [-self.half_width + idx as f64 * dx, 0.0],
            _ => {
                let j0 = idx / self.n;
                let j1 = idx % self.n;
                [-self.half_width + j0 as f64 * dx, -self.half_width + j1 as f64 * dx]
            }
        }
    }

    /// Flattened index of the grid point at the origin.
    pub fn origin_index(&self) -> usize {
        let h = self.n / 2;
        match self.d {
            1 => h,
            _ => h * self.n + h,
        }
    }

    /// Evaluate `f(xi_norm)` at every flattened spectral index, where
    /// xi_norm = ||xi|| is the Euclidean frequency magnitude.
    pub fn multiplier_from(&self, f: impl Fn(f64) -> f64) -> Vec<f64> {
        let freqs = self.axis_frequencies();
        match self.d {
            1 => freqs.iter().map(|&x| f(x.abs())).collect(),
            _ => {
                let mut out = Vec::with_capacity(self.len());
                for &fx in &freqs {
                    for &fy in &freqs {
                        out.push(f((fx * fx + fy * fy).sqrt()));
                    }
                }
                out
            }
        }
    }
}

/// Real scalar field sampled on a [`Grid`]. Values stay finite after every
/// public operation; constructors check.
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    grid: Grid,
    values: Vec<f64>,
}

impl Field {
    pub fn constant(grid: Grid, c: f64) -> Self {
        Field { grid, values: vec![c; grid.len()] }
    }

    pub fn zeros(grid: Grid) -> Self {
        Field::constant(grid, 0.0)
    }

    /// Sample `f` at every grid point. The closure receives a coordinate
    /// slice of length `grid.dim()`.
    pub fn from_fn(grid: Grid, f: impl Fn(&[f64]) -> f64) -> Self {
        let mut values = Vec::with_capacity(grid.len());
        match grid.dim() {
            1 => {
                for x in grid.axis_points() {
                    values.push(f(&[x]));
                }
            }
            _ => {
                let pts = grid.axis_points();
                for &x in &pts {
                    for &y in &pts {
                        values.push(f(&[x, y]));
                    }
                }
            }
        }
        Field { grid, values }
    }

    pub(crate) fn from_values(grid: Grid, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), grid.len());
        Field { grid, values }
    }

    pub fn grid(&self) -> &Grid {
        self.grid_copy_ref()
    }

    fn grid_copy_ref(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }

    pub fn min(&self) -> f64 {
        self.values.iter().cloned().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0f64, |a, v| a.max(v.abs()))
    }

    /// Rectangle-rule integral dx^d * sum(values); exact for the torus.
    pub fn integral(&self) -> f64 {
        self.grid.cell_volume() * compensated_sum(self.values.iter().cloned())
    }

    /// L^p norm; pass `f64::INFINITY` for the sup norm. Requires p >= 1.
    pub fn lp_norm(&self, p: f64) -> Result<f64> {
        if p.is_infinite() && p > 0.0 {
            return Ok(self.sup_norm());
        }
        if !(p >= 1.0) {
            return Err(Error::InvalidNormOrder(p));
        }
        let sum = compensated_sum(self.values.iter().map(|v| v.abs().powf(p)));
        Ok((self.grid.cell_volume() * sum).powf(1.0 / p))
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Field {
        Field { grid: self.grid, values: self.values.iter().map(|&v| f(v)).collect() }
    }

    pub fn scaled(&self, a: f64) -> Field {
        self.map(|v| a * v)
    }

    pub fn checked_add(&self, other: &Field) -> Result<Field> {
        self.zip(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Field) -> Result<Field> {
        self.zip(other, |a, b| a - b)
    }

    pub fn zip(&self, other: &Field, f: impl Fn(f64, f64) -> f64) -> Result<Field> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        let values =
            self.values.iter().zip(&other.values).map(|(&a, &b)| f(a, b)).collect();
        Ok(Field { grid: self.grid, values })
    }

    /// Largest |value| over points whose sup-norm distance from the origin is
    /// at least `fraction * L`; used to test decay toward the box edge.
    pub fn edge_magnitude(&self, fraction: f64) -> f64 {
        let cutoff = fraction * self.grid.half_width();
        let mut worst = 0.0f64;
        for (idx, v) in self.values.iter().enumerate() {
            let p = self.grid.point(idx);
            let r = match self.grid.dim() {
                1 => p[0].abs(),
                _ => p[0].abs().max(p[1].abs()),
            };
            if r >= cutoff {
                worst = worst.max(v.abs());
            }
        }
        worst
    }
}
