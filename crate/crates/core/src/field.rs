//! Periodic samples on [z_min, z_max) and spectral operations on them.

use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::Serialize;

use crate::error::{Error, Result};

/// Real field sampled at z_k = z_min + k dz, k = 0..n, with z_max
/// identified with z_min.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridField {
    z_min: f64,
    z_max: f64,
    values: Vec<f64>,
}

impl GridField {
    pub fn new(z_min: f64, z_max: f64, values: Vec<f64>) -> Result<Self> {
        check_grid(z_min, z_max, values.len())?;
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidGrid(format!("non-finite sample {v}")));
        }
        Ok(Self {
            z_min,
            z_max,
            values,
        })
    }

    pub fn from_fn(z_min: f64, z_max: f64, n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        check_grid(z_min, z_max, n)?;
        let dz = (z_max - z_min) / n as f64;
        let values = (0..n).map(|k| f(z_min + k as f64 * dz)).collect();
        Self::new(z_min, z_max, values)
    }

    pub fn zeros(z_min: f64, z_max: f64, n: usize) -> Result<Self> {
        Self::from_fn(z_min, z_max, n, |_| 0.0)
    }

    /// Same grid, new samples (length already known to match).
    pub(crate) fn with_values(&self, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), self.values.len());
        Self {
            z_min: self.z_min,
            z_max: self.z_max,
            values,
        }
    }

    pub fn spec(&self) -> GridSpec {
        GridSpec {
            z_min: self.z_min,
            z_max: self.z_max,
            n: self.n(),
        }
    }

    pub fn z_min(&self) -> f64 {
        self.z_min
    }

    pub fn z_max(&self) -> f64 {
        self.z_max
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn length(&self) -> f64 {
        self.z_max - self.z_min
    }

    pub fn dz(&self) -> f64 {
        self.length() / self.n() as f64
    }

    pub fn z(&self, k: usize) -> f64 {
        self.z_min + k as f64 * self.dz()
    }

    pub fn coords(&self) -> Vec<f64> {
        (0..self.n()).map(|k| self.z(k)).collect()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.n() as f64
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn same_grid(&self, other: &GridField) -> bool {
        self.n() == other.n() && self.z_min == other.z_min && self.z_max == other.z_max
    }

    pub fn check_same_grid(&self, other: &GridField) -> Result<()> {
        if self.same_grid(other) {
            Ok(())
        } else {
            Err(Error::GridMismatch(format!(
                "[{}, {}) x {} vs [{}, {}) x {}",
                self.z_min,
                self.z_max,
                self.n(),
                other.z_min,
                other.z_max,
                other.n()
            )))
        }
    }

    /// max |self - other|.
    pub fn max_abs_diff(&self, other: &GridField) -> Result<f64> {
        self.check_same_grid(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs())))
    }

    /// a*self + b*other.
    pub fn combine(&self, a: f64, other: &GridField, b: f64) -> Result<GridField> {
        self.check_same_grid(other)?;
        Ok(self.with_values(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(x, y)| a * x + b * y)
                .collect(),
        ))
    }

    pub fn scaled(&self, c: f64) -> GridField {
        self.with_values(self.values.iter().map(|v| c * v).collect())
    }

    /// Angular wavenumber of FFT bin k (negative frequencies in the upper
    /// half; the Nyquist bin is reported as positive).
    pub fn wavenumber(&self, k: usize) -> f64 {
        let n = self.n();
        let m = if k <= n / 2 { k as f64 } else { k as f64 - n as f64 };
        2.0 * PI * m / self.length()
    }

    pub fn spectrum(&self) -> Vec<Complex64> {
        let mut buf: Vec<Complex64> = self.values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        FftPlanner::new().plan_fft_forward(self.n()).process(&mut buf);
        buf
    }

    /// Inverse of [`spectrum`](Self::spectrum), keeping the real part.
    pub fn from_spectrum(&self, mut spec: Vec<Complex64>) -> GridField {
        let n = self.n();
        FftPlanner::new().plan_fft_inverse(n).process(&mut spec);
        let inv = 1.0 / n as f64;
        self.with_values(spec.iter().map(|c| c.re * inv).collect())
    }

    /// Applies the even Fourier multiplier m(|omega|).
    pub fn apply_even_multiplier(&self, m: impl Fn(f64) -> f64) -> GridField {
        let mut spec = self.spectrum();
        for (k, c) in spec.iter_mut().enumerate() {
            *c *= m(self.wavenumber(k).abs());
        }
        self.from_spectrum(spec)
    }

    /// Spectral d/dz. The Nyquist bin is dropped, as its derivative is not
    /// real-representable.
    pub fn derivative(&self) -> GridField {
        let n = self.n();
        let mut spec = self.spectrum();
        for (k, c) in spec.iter_mut().enumerate() {
            if 2 * k == n {
                *c = Complex64::new(0.0, 0.0);
            } else {
                *c *= Complex64::new(0.0, self.wavenumber(k));
            }
        }
        self.from_spectrum(spec)
    }

    /// Zero-mean periodic antiderivative. Fails if the mean exceeds
    /// `mean_tol * max(1, max|values|)`.
    pub fn antiderivative(&self, mean_tol: f64) -> Result<GridField> {
        let mean = self.mean();
        if mean.abs() > mean_tol * self.max_abs().max(1.0) {
            return Err(Error::NonZeroMean(mean));
        }
        let n = self.n();
        let mut spec = self.spectrum();
        for (k, c) in spec.iter_mut().enumerate() {
            if k == 0 || 2 * k == n {
                *c = Complex64::new(0.0, 0.0);
            } else {
                *c /= Complex64::new(0.0, self.wavenumber(k));
            }
        }
        Ok(self.from_spectrum(spec))
    }
}

/// Grid geometry without samples.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub z_min: f64,
    pub z_max: f64,
    pub n: usize,
}

impl GridSpec {
    pub fn new(z_min: f64, z_max: f64, n: usize) -> Result<Self> {
        check_grid(z_min, z_max, n)?;
        Ok(Self { z_min, z_max, n })
    }

    pub fn from_fn(&self, f: impl Fn(f64) -> f64) -> Result<GridField> {
        GridField::from_fn(self.z_min, self.z_max, self.n, f)
    }

    pub fn zeros(&self) -> Result<GridField> {
        GridField::zeros(self.z_min, self.z_max, self.n)
    }
}

fn check_grid(z_min: f64, z_max: f64, n: usize) -> Result<()> {
    if !(z_min.is_finite() && z_max.is_finite() && z_max > z_min) {
        return Err(Error::InvalidGrid(format!(
            "need finite z_min < z_max, got [{z_min}, {z_max})"
        )));
    }
    if n < 8 || !n.is_power_of_two() {
        return Err(Error::InvalidGrid(format!(
            "point count must be a power of two >= 8, got {n}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_validation() {
        assert!(matches!(GridField::zeros(0.0, 1.0, 12), Err(Error::InvalidGrid(_))));
        assert!(matches!(GridField::zeros(0.0, 1.0, 4), Err(Error::InvalidGrid(_))));
        assert!(matches!(GridField::zeros(1.0, 1.0, 8), Err(Error::InvalidGrid(_))));
        assert!(GridField::zeros(0.0, 1.0, 8).is_ok());
        let a = GridField::zeros(0.0, 1.0, 8).unwrap();
        let b = GridField::zeros(0.0, 2.0, 8).unwrap();
        assert!(matches!(a.check_same_grid(&b), Err(Error::GridMismatch(_))));
    }

    #[test]
    fn derivative_of_sine() {
        let l = 3.0;
        let k = 2.0 * PI / l;
        let f = GridField::from_fn(0.0, l, 64, |z| (3.0 * k * z).sin()).unwrap();
        let d = f.derivative();
        for (i, v) in d.values().iter().enumerate() {
            let z = f.z(i);
            assert!((v - 3.0 * k * (3.0 * k * z).cos()).abs() < 1e-12);
        }
    }

    #[test]
    fn antiderivative_round_trip_and_mean_check() {
        let l = 2.0 * PI;
        let f = GridField::from_fn(0.0, l, 32, |z| z.cos() + 0.5 * (2.0 * z).sin()).unwrap();
        let h = f.antiderivative(1e-12).unwrap();
        assert!(h.mean().abs() < 1e-14);
        assert!(h.derivative().max_abs_diff(&f).unwrap() < 1e-13);
        let g = GridField::from_fn(0.0, l, 32, |z| 1.0 + z.cos()).unwrap();
        assert!(matches!(g.antiderivative(1e-12), Err(Error::NonZeroMean(_))));
    }

    #[test]
    fn wavenumbers_follow_fft_order() {
        let f = GridField::zeros(0.0, 2.0 * PI, 8).unwrap();
        let w: Vec<f64> = (0..8).map(|k| f.wavenumber(k)).collect();
        assert_eq!(w, vec![0.0, 1.0, 2.0, 3.0, 4.0, -3.0, -2.0, -1.0]);
    }
}
