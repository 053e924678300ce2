//! Fourier coefficients and truncated-series operators as spectral
//! multipliers: one forward transform, a multiplier on the centered lattice,
//! one inverse transform. Exact for band-limited fields; the kernel-
//! convolution view lives in `oracles` as an independent cross-check.

use std::io::{self, Write};

use rustfft::num_complex::Complex64;

use crate::fft;
use crate::grid::{SampledField, TorusGrid};
use crate::{Result, TorusError};

/// Fourier coefficients `a_k` on the centered lattice `k ∈ [-N/2, N/2)^d`.
///
/// Storage is FFT index order per axis, row-major across axes.
#[derive(Debug, Clone)]
pub struct SpectralCoefficients {
    grid: TorusGrid,
    coeffs: Vec<Complex64>,
}

impl SpectralCoefficients {
    pub fn grid(&self) -> &TorusGrid {
        &self.grid
    }

    /// Raw coefficients in FFT index order.
    pub fn raw(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient at centered lattice point `k`, `k_i ∈ [-N/2, N/2)`.
    pub fn coefficient(&self, k: &[i64]) -> Result<Complex64> {
        let n = self.grid.points_per_axis() as i64;
        if k.len() != self.grid.dim() {
            return Err(TorusError::DimensionMismatch {
                expected: self.grid.dim(),
                actual: k.len(),
            });
        }
        let mut flat = 0usize;
        for &ki in k {
            if ki < -n / 2 || ki >= n / 2 {
                return Err(TorusError::WindowOutOfRange {
                    bound: ki.unsigned_abs() as usize,
                    limit: (n / 2) as usize,
                });
            }
            flat = flat * n as usize + ki.rem_euclid(n) as usize;
        }
        Ok(self.coeffs[flat])
    }

    /// The mean coefficient `a_0`.
    pub fn a0(&self) -> Complex64 {
        self.coefficient(&vec![0; self.grid.dim()]).unwrap()
    }

    /// Largest relative Hermitian-symmetry residual `|a_{-k} - conj(a_k)|`
    /// over pairs with both indices in the window.
    pub fn hermitian_residual(&self) -> f64 {
        let n = self.grid.points_per_axis() as i64;
        let d = self.grid.dim();
        let scale = self
            .coeffs
            .iter()
            .fold(0.0f64, |m, c| m.max(c.norm()))
            .max(1e-300);
        let mut worst = 0.0f64;
        for flat in 0..self.coeffs.len() {
            let k = self.lattice_point(flat);
            if k.iter().any(|&ki| ki == -n / 2) {
                continue; // -k falls outside the window
            }
            let neg: Vec<i64> = k.iter().map(|&ki| -ki).collect();
            let a = self.coeffs[flat];
            let b = self.coefficient(&neg).unwrap();
            worst = worst.max((b - a.conj()).norm());
            if d == 0 {
                break;
            }
        }
        worst / scale
    }

    /// Centered lattice point of a flat storage index.
    pub fn lattice_point(&self, flat: usize) -> Vec<i64> {
        let n = self.grid.points_per_axis();
        self.grid
            .decompose(flat)
            .iter()
            .map(|&idx| fft::centered_freq(idx, n))
            .collect()
    }

    /// Synthesize the field `Σ a_k e^{ik·x}` back onto the grid.
    pub fn synthesize(&self) -> SampledField {
        let out = fft::dft_inverse(&self.coeffs, &self.grid);
        real_field(&self.grid, &out)
    }

    /// Dump as CSV `k1,..,kd,re,im`, row-major over the centered window.
    pub fn write_csv(&self, out: &mut impl Write) -> io::Result<()> {
        let d = self.grid.dim();
        let n = self.grid.points_per_axis() as i64;
        let header: Vec<String> = (1..=d).map(|i| format!("k{i}")).collect();
        writeln!(out, "{},re,im", header.join(","))?;
        let mut k = vec![-n / 2; d];
        loop {
            let c = self.coefficient(&k).expect("window iteration in range");
            for &ki in &k {
                write!(out, "{ki},")?;
            }
            writeln!(out, "{:.16e},{:.16e}", c.re, c.im)?;
            // row-major increment, k_d fastest
            let mut axis = d;
            loop {
                if axis == 0 {
                    return Ok(());
                }
                axis -= 1;
                k[axis] += 1;
                if k[axis] < n / 2 {
                    break;
                }
                k[axis] = -n / 2;
            }
        }
    }
}

/// Compute the Fourier coefficients of a sampled field.
///
/// `a_k = (2π)^{-d} ∫ f(x) e^{-ik·x} dx`, evaluated by the discrete
/// transform; exact for band-limited `f` of degree below `N/2`.
pub fn coefficients(f: &SampledField) -> SpectralCoefficients {
    SpectralCoefficients {
        grid: *f.grid(),
        coeffs: fft::dft_forward(f),
    }
}

/// A truncation window on the frequency lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrequencyWindow {
    /// `|k_i| ≤ n` for every axis.
    Square { n: usize },
    /// `|k_i| ≤ bounds[i]` per axis.
    Rectangular { bounds: Vec<usize> },
}

impl FrequencyWindow {
    pub fn square(n: usize) -> Self {
        FrequencyWindow::Square { n }
    }

    pub fn rectangular(bounds: Vec<usize>) -> Self {
        FrequencyWindow::Rectangular { bounds }
    }

    /// Truncation must stay strictly inside the coefficient window.
    pub fn validate(&self, grid: &TorusGrid) -> Result<()> {
        let limit = grid.points_per_axis() / 2;
        match self {
            FrequencyWindow::Square { n } => {
                if *n >= limit {
                    return Err(TorusError::WindowOutOfRange { bound: *n, limit });
                }
            }
            FrequencyWindow::Rectangular { bounds } => {
                if bounds.len() != grid.dim() {
                    return Err(TorusError::DimensionMismatch {
                        expected: grid.dim(),
                        actual: bounds.len(),
                    });
                }
                for &b in bounds {
                    if b >= limit {
                        return Err(TorusError::WindowOutOfRange { bound: b, limit });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn contains(&self, k: &[i64]) -> bool {
        match self {
            FrequencyWindow::Square { n } => k.iter().all(|&ki| ki.unsigned_abs() <= *n as u64),
            FrequencyWindow::Rectangular { bounds } => k
                .iter()
                .zip(bounds.iter())
                .all(|(&ki, &b)| ki.unsigned_abs() <= b as u64),
        }
    }
}

/// One transform, multiplier, inverse transform; asserts the imaginary
/// residue of the synthesis is below 1e-12 (relative) before discarding it.
fn apply_multiplier(f: &SampledField, multiplier: impl Fn(&[i64]) -> Complex64) -> SampledField {
    let grid = *f.grid();
    let n = grid.points_per_axis();
    let d = grid.dim();
    let mut coeffs = fft::dft_forward(f);
    let mut k = vec![0i64; d];
    for (flat, c) in coeffs.iter_mut().enumerate() {
        let mut rem = flat;
        for axis in (0..d).rev() {
            k[axis] = fft::centered_freq(rem % n, n);
            rem /= n;
        }
        *c *= multiplier(&k);
    }
    let out = fft::dft_inverse(&coeffs, &grid);
    real_field(&grid, &out)
}

fn real_field(grid: &TorusGrid, values: &[Complex64]) -> SampledField {
    let scale = values
        .iter()
        .fold(0.0f64, |m, c| m.max(c.re.abs()))
        .max(1.0);
    let imag = values.iter().fold(0.0f64, |m, c| m.max(c.im.abs()));
    assert!(
        imag <= 1e-12 * scale,
        "synthesis imaginary residue {imag:.3e} exceeds 1e-12 (scale {scale:.3e})"
    );
    SampledField::new(*grid, values.iter().map(|c| c.re).collect())
        .expect("synthesis produced non-finite values")
}

/// Rectangular partial sum `Σ_{|k_i| ≤ n_i} a_k e^{ik·x}`.
pub fn rectangular_partial_sum(f: &SampledField, bounds: &[usize]) -> Result<SampledField> {
    let window = FrequencyWindow::rectangular(bounds.to_vec());
    window.validate(f.grid())?;
    Ok(apply_multiplier(f, |k| {
        if window.contains(k) {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    }))
}

/// Square partial sum `S_n f`.
pub fn square_partial_sum(f: &SampledField, n: usize) -> Result<SampledField> {
    let bounds = vec![n; f.grid().dim()];
    rectangular_partial_sum(f, &bounds)
}

/// Conjugate multiplier factor for one axis: `-i·sgn k`, zero at `k = 0`
/// and on the Nyquist row (whose conjugate sine samples to zero).
fn conjugate_factor(k: i64, n: usize) -> Complex64 {
    if k == 0 || k == -((n / 2) as i64) {
        Complex64::new(0.0, 0.0)
    } else {
        Complex64::new(0.0, -k.signum() as f64)
    }
}

/// Conjugate square partial sum `S̃_n f`: multiplier `∏_i (-i·sgn k_i)` over
/// the square window; any `k` with some `k_i = 0` contributes nothing.
pub fn conjugate_square_partial_sum(f: &SampledField, n: usize) -> Result<SampledField> {
    let window = FrequencyWindow::square(n);
    window.validate(f.grid())?;
    let npts = f.grid().points_per_axis();
    Ok(apply_multiplier(f, |k| {
        if !window.contains(k) {
            return Complex64::new(0.0, 0.0);
        }
        k.iter()
            .fold(Complex64::new(1.0, 0.0), |acc, &ki| {
                acc * conjugate_factor(ki, npts)
            })
    }))
}

/// Full conjugate field: multiplier `∏_i (-i·sgn k_i)` over the whole
/// coefficient window. This is the spectral route to the d-dimensional
/// conjugate function of the band-limited representative of `f`.
pub fn conjugate_field(f: &SampledField) -> SampledField {
    let npts = f.grid().points_per_axis();
    apply_multiplier(f, |k| {
        k.iter()
            .fold(Complex64::new(1.0, 0.0), |acc, &ki| {
                acc * conjugate_factor(ki, npts)
            })
    })
}

/// Per-axis weight of the modified sums: the exact Fourier expansion of
/// `sin nt / (2 tan(t/2))` gives weight 1 inside the window, 1/2 on the
/// edge `|k| = n`, 0 outside.
fn modified_weight(k: i64, n: usize) -> f64 {
    let a = k.unsigned_abs();
    if a < n as u64 {
        1.0
    } else if a == n as u64 {
        0.5
    } else {
        0.0
    }
}

/// Modified square partial sum `S*_n f` (or its conjugate `S̃*_n f`).
///
/// Realizes the kernels `sin nt/(2 tan(t/2))` and `(cos nt - 1)/(2 tan(t/2))`
/// spectrally via the per-axis edge weight 1/2.
pub fn modified_square_partial_sum(
    f: &SampledField,
    n: usize,
    conjugate: bool,
) -> Result<SampledField> {
    if n < 1 {
        return Err(TorusError::InvalidParameter(
            "modified sum degree must satisfy 1 <= n < N/2".into(),
        ));
    }
    FrequencyWindow::square(n).validate(f.grid())?;
    let npts = f.grid().points_per_axis();
    Ok(apply_multiplier(f, |k| {
        let mut m = Complex64::new(1.0, 0.0);
        for &ki in k {
            m *= modified_weight(ki, n);
            if conjugate {
                m *= conjugate_factor(ki, npts);
            }
        }
        m
    }))
}

/// Dirichlet kernel `D_n(t) = sin((n + 1/2)t) / (2 sin(t/2))`, with the
/// limit value `n + 1/2` on `2πZ`.
///
/// Evaluated through the angle addition `sin((n+1/2)t) = sin(nt)cos(t/2) +
/// cos(nt)sin(t/2)`: near the singularity the naive quotient amplifies the
/// rounding of the argument `(n+1/2)t` by `1/t`, the split form does not.
pub fn dirichlet_kernel(n: usize, t: f64) -> f64 {
    let r = t.rem_euclid(std::f64::consts::TAU);
    if r == 0.0 {
        return n as f64 + 0.5;
    }
    let nr = n as f64 * r;
    nr.sin() * (r / 2.0).cos() / (2.0 * (r / 2.0).sin()) + 0.5 * nr.cos()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::TorusGrid;
    use std::f64::consts::PI;

    fn grid1(n: usize) -> TorusGrid {
        TorusGrid::new(1, n).unwrap()
    }

    fn grid2(n: usize) -> TorusGrid {
        TorusGrid::new(2, n).unwrap()
    }

    fn assert_close(f: &SampledField, g: &SampledField, tol: f64) {
        let worst = f
            .values()
            .iter()
            .zip(g.values().iter())
            .fold(0.0f64, |m, (&a, &b)| m.max((a - b).abs()));
        assert!(worst <= tol, "max abs difference {worst:.3e} > {tol:.1e}");
    }

    #[test]
    fn coefficients_of_cosine() {
        let f = SampledField::sample(grid1(32), |x| x[0].cos()).unwrap();
        let c = coefficients(&f);
        assert!((c.coefficient(&[1]).unwrap() - Complex64::new(0.5, 0.0)).norm() < 1e-14);
        assert!((c.coefficient(&[-1]).unwrap() - Complex64::new(0.5, 0.0)).norm() < 1e-14);
        for k in [-3i64, -2, 0, 2, 3] {
            assert!(c.coefficient(&[k]).unwrap().norm() < 1e-14, "k={k}");
        }
    }

    #[test]
    fn coefficients_of_constant() {
        let f = SampledField::constant(grid2(16), 2.5).unwrap();
        let c = coefficients(&f);
        assert!((c.a0() - Complex64::new(2.5, 0.0)).norm() < 1e-14);
        assert!(c.coefficient(&[1, 0]).unwrap().norm() < 1e-14);
    }

    #[test]
    fn coefficients_of_sine_product() {
        let f = SampledField::sample(grid2(16), |x| x[0].sin() * x[1].sin()).unwrap();
        let c = coefficients(&f);
        for (k, want) in [
            ([1i64, 1i64], -0.25),
            ([-1, -1], -0.25),
            ([1, -1], 0.25),
            ([-1, 1], 0.25),
        ] {
            assert!(
                (c.coefficient(&k).unwrap() - Complex64::new(want, 0.0)).norm() < 1e-14,
                "k={k:?}"
            );
        }
    }

    #[test]
    fn hermitian_symmetry_and_mean() {
        let f = SampledField::sample(grid2(16), |x| {
            (3.0 * x[0]).cos() * (2.0 * x[1]).sin() + 0.7 * (x[0] + x[1]).cos() + 0.2
        })
        .unwrap();
        let c = coefficients(&f);
        assert!(c.hermitian_residual() < 1e-12);
        let mean = f.integrate() / f.grid().total_measure();
        assert!((c.a0().re - mean).abs() < 1e-12 * mean.abs().max(1.0));
        assert!(c.a0().im.abs() < 1e-14);
    }

    #[test]
    fn rectangular_reproduces_low_degree() {
        let f = SampledField::sample(grid2(32), |x| {
            (2.0 * x[0]).cos() + (3.0 * x[1]).sin() * x[0].cos()
        })
        .unwrap();
        let s = rectangular_partial_sum(&f, &[2, 3]).unwrap();
        assert_close(&f, &s, 1e-12);

        let c = SampledField::constant(grid2(32), -4.0).unwrap();
        let sc = rectangular_partial_sum(&c, &[5, 1]).unwrap();
        assert_close(&c, &sc, 1e-12);
    }

    #[test]
    fn rectangular_rejects_out_of_window() {
        let f = SampledField::constant(grid2(16), 1.0).unwrap();
        assert!(matches!(
            rectangular_partial_sum(&f, &[8, 1]),
            Err(TorusError::WindowOutOfRange { bound: 8, limit: 8 })
        ));
        assert!(rectangular_partial_sum(&f, &[1, 2, 3]).is_err());
    }

    #[test]
    fn square_sum_truncates_cos3x() {
        let g = grid1(32);
        let f = SampledField::sample(g, |x| (3.0 * x[0]).cos()).unwrap();
        let s2 = square_partial_sum(&f, 2).unwrap();
        assert!(s2.max_abs() < 1e-12);
        let s3 = square_partial_sum(&f, 3).unwrap();
        assert_close(&f, &s3, 1e-12);
    }

    #[test]
    fn conjugate_pairs_1d() {
        let g = grid1(64);
        let cos = SampledField::sample(g, |x| x[0].cos()).unwrap();
        let sin = SampledField::sample(g, |x| x[0].sin()).unwrap();
        let conj = conjugate_square_partial_sum(&cos, 5).unwrap();
        assert_close(&conj, &sin, 1e-12);

        let whole = conjugate_field(&cos);
        assert_close(&whole, &sin, 1e-12);

        let conj_sin = conjugate_field(&sin);
        let neg_cos = cos.scale(-1.0);
        assert_close(&conj_sin, &neg_cos, 1e-12);
    }

    #[test]
    fn conjugate_kills_axis_constant() {
        let g = grid2(16);
        let f = SampledField::sample(g, |x| x[0].cos()).unwrap();
        let conj = conjugate_square_partial_sum(&f, 4).unwrap();
        assert!(conj.max_abs() < 1e-12);
    }

    #[test]
    fn conjugate_of_cosine_product() {
        let g = grid2(16);
        let f = SampledField::sample(g, |x| x[0].cos() * x[1].cos()).unwrap();
        let want = SampledField::sample(g, |x| x[0].sin() * x[1].sin()).unwrap();
        let got = conjugate_square_partial_sum(&f, 3).unwrap();
        assert_close(&got, &want, 1e-12);
    }

    #[test]
    fn modified_sum_on_constants() {
        let g = grid2(16);
        let c = SampledField::constant(g, 3.0).unwrap();
        let plain = modified_square_partial_sum(&c, 4, false).unwrap();
        assert_close(&plain, &c, 1e-12);
        let conj = modified_square_partial_sum(&c, 4, true).unwrap();
        assert!(conj.max_abs() < 1e-12);
    }

    #[test]
    fn modified_sum_edge_weight_halves() {
        let g = grid1(64);
        let n = 5;
        let f = SampledField::sample(g, |x| (n as f64 * x[0]).cos()).unwrap();
        let m = modified_square_partial_sum(&f, n, false).unwrap();
        assert_close(&m, &f.scale(0.5), 1e-12);

        // below the edge the weight is 1
        let f3 = SampledField::sample(g, |x| (3.0 * x[0]).cos()).unwrap();
        let m3 = modified_square_partial_sum(&f3, n, false).unwrap();
        assert_close(&m3, &f3, 1e-12);
    }

    #[test]
    fn modified_vs_plain_matches_dirichlet_split() {
        // S_n f - S*_n f = (1/2) cos(nx) for f = cos(nx): the cosine term of
        // the Dirichlet kernel identity.
        let g = grid1(64);
        let n = 7;
        let f = SampledField::sample(g, |x| (n as f64 * x[0]).cos()).unwrap();
        let s = square_partial_sum(&f, n).unwrap();
        let m = modified_square_partial_sum(&f, n, false).unwrap();
        let gap = s.zip_with(&m, |a, b| a - b);
        assert_close(&gap, &f.scale(0.5), 1e-12);
    }

    #[test]
    fn dirichlet_kernel_values() {
        assert_eq!(dirichlet_kernel(4, 0.0), 4.5);
        assert_eq!(dirichlet_kernel(4, std::f64::consts::TAU), 4.5);
        assert!((dirichlet_kernel(1, PI) - (-0.5)).abs() < 1e-15);
    }

    #[test]
    fn dirichlet_identity_at_sample_point() {
        let n = 5usize;
        let t = PI / 7.0;
        let lhs = dirichlet_kernel(n, t);
        let rhs = (n as f64 * t).sin() / (2.0 * (t / 2.0).tan()) + 0.5 * (n as f64 * t).cos();
        assert!((lhs - rhs).abs() < 1e-12);
    }

    #[test]
    fn idempotence_and_commutation() {
        let g = grid2(32);
        let f = SampledField::sample(g, |x| {
            (5.0 * x[0]).cos() * (2.0 * x[1]).sin() + (x[0] + 3.0 * x[1]).cos()
        })
        .unwrap();
        let s = square_partial_sum(&f, 4).unwrap();
        let ss = square_partial_sum(&s, 4).unwrap();
        assert_close(&s, &ss, 1e-12);

        let a = conjugate_square_partial_sum(&square_partial_sum(&f, 4).unwrap(), 4).unwrap();
        let b = conjugate_square_partial_sum(&f, 4).unwrap();
        assert_close(&a, &b, 1e-12);
    }

    #[test]
    fn three_dimensional_truncation() {
        let g = TorusGrid::new(3, 16).unwrap();
        let f = SampledField::sample(g, |x| {
            (2.0 * x[0]).cos() * x[1].sin() + (3.0 * x[2]).cos()
        })
        .unwrap();
        let s = square_partial_sum(&f, 3).unwrap();
        assert_close(&f, &s, 1e-12);
        // every mode of this field sits outside the |k| <= 1 cube
        let s1 = square_partial_sum(&f, 1).unwrap();
        assert!(s1.max_abs() < 1e-12);
        let c = coefficients(&f);
        assert!((c.coefficient(&[2, 1, 0]).unwrap().im - (-0.25)).abs() < 1e-13);
    }

    #[test]
    fn coefficient_csv_shape() {
        let f = SampledField::sample(grid1(8), |x| x[0].cos()).unwrap();
        let c = coefficients(&f);
        let mut buf = Vec::new();
        c.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next().unwrap(), "k1,re,im");
        assert_eq!(text.lines().count(), 9);
        assert!(text.lines().nth(1).unwrap().starts_with("-4,"));
    }
}
