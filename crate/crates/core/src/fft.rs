//! Cached FFT plans and multi-axis transforms on row-major field buffers.
//!
//! Plans are shared behind a write-once registry keyed by (length, direction),
//! so repeated sweeps over the same grid reuse them.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rustfft::num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::grid::{SampledField, TorusGrid};

type PlanRegistry = Mutex<HashMap<(usize, bool), Arc<dyn Fft<f64>>>>;

fn plan(len: usize, forward: bool) -> Arc<dyn Fft<f64>> {
    static CACHE: OnceLock<PlanRegistry> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().expect("fft plan registry poisoned");
    map.entry((len, forward))
        .or_insert_with(|| {
            let mut planner = FftPlanner::new();
            if forward {
                planner.plan_fft_forward(len)
            } else {
                planner.plan_fft_inverse(len)
            }
        })
        .clone()
}

/// Unnormalized 1-D transform of `line` in place.
pub(crate) fn transform_line(line: &mut [Complex64], forward: bool) {
    plan(line.len(), forward).process(line);
}

/// Unnormalized transform along one axis of a row-major buffer.
fn transform_axis(buf: &mut [Complex64], grid: &TorusGrid, axis: usize, forward: bool) {
    let n = grid.points_per_axis();
    let stride = grid.stride(axis);
    let fft = plan(n, forward);
    let block = stride * n;
    let mut line = vec![Complex64::new(0.0, 0.0); n];
    for outer in 0..grid.node_count() / block {
        for inner in 0..stride {
            let base = outer * block + inner;
            for (j, slot) in line.iter_mut().enumerate() {
                *slot = buf[base + j * stride];
            }
            fft.process(&mut line);
            for (j, slot) in line.iter().enumerate() {
                buf[base + j * stride] = *slot;
            }
        }
    }
}

/// Fourier coefficients `a_k` of a real field, in FFT index order per axis
/// (index `m` holds centered frequency `m` if `m < N/2`, else `m - N`).
pub(crate) fn dft_forward(field: &SampledField) -> Vec<Complex64> {
    let grid = *field.grid();
    let mut buf: Vec<Complex64> = field
        .values()
        .iter()
        .map(|&v| Complex64::new(v, 0.0))
        .collect();
    for axis in 0..grid.dim() {
        transform_axis(&mut buf, &grid, axis, true);
    }
    let scale = 1.0 / grid.node_count() as f64;
    for c in buf.iter_mut() {
        *c *= scale;
    }
    buf
}

/// Synthesis `Σ_k a_k e^{ik·x}` at the grid nodes (unnormalized inverse).
pub(crate) fn dft_inverse(coeffs: &[Complex64], grid: &TorusGrid) -> Vec<Complex64> {
    let mut buf = coeffs.to_vec();
    for axis in 0..grid.dim() {
        transform_axis(&mut buf, grid, axis, false);
    }
    buf
}

/// FFT index -> centered frequency in `[-N/2, N/2)`.
pub(crate) fn centered_freq(index: usize, n: usize) -> i64 {
    if index < n / 2 {
        index as i64
    } else {
        index as i64 - n as i64
    }
}

/// Evaluate the band-limited interpolant of a 1-D line on the half-offset
/// oversampled grid `y_p = (p + 1/2) · 2π/(rN)`, `p = 0..rN`.
///
/// The Nyquist coefficient is split symmetrically between `±N/2`, which keeps
/// real lines real and realizes the cosine reading of the Nyquist mode.
pub(crate) fn oversample_offset_line(line: &[f64], refinement: usize) -> Vec<f64> {
    let n = line.len();
    let m = n * refinement;
    let mut buf: Vec<Complex64> = line.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    transform_line(&mut buf, true);
    let inv_n = 1.0 / n as f64;

    let mut padded = vec![Complex64::new(0.0, 0.0); m];
    for (idx, &c) in buf.iter().enumerate() {
        let coeff = c * inv_n;
        if idx == n / 2 {
            // Nyquist: half at +N/2, half at -N/2.
            let k_pos = (n / 2) as i64;
            padded[(n / 2) % m] += 0.5 * coeff * phase(k_pos, m);
            padded[m - n / 2] += 0.5 * coeff * phase(-k_pos, m);
        } else {
            let k = centered_freq(idx, n);
            let slot = k.rem_euclid(m as i64) as usize;
            padded[slot] = coeff * phase(k, m);
        }
    }
    transform_line(&mut padded, false);
    padded.iter().map(|c| c.re).collect()
}

/// Half-node phase `e^{iπk/M}` shifting synthesis onto the offset grid.
fn phase(k: i64, m: usize) -> Complex64 {
    Complex64::from_polar(1.0, k as f64 * std::f64::consts::PI / m as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{SampledField, TorusGrid};

    #[test]
    fn forward_inverse_round_trip() {
        let grid = TorusGrid::new(2, 16).unwrap();
        let f = SampledField::sample(grid, |x| (2.0 * x[0]).cos() * (3.0 * x[1]).sin()).unwrap();
        let coeffs = dft_forward(&f);
        let back = dft_inverse(&coeffs, &grid);
        for (orig, got) in f.values().iter().zip(back.iter()) {
            assert!((orig - got.re).abs() < 1e-12);
            assert!(got.im.abs() < 1e-12);
        }
    }

    #[test]
    fn offset_oversampling_matches_closed_form() {
        let n = 16;
        let grid = TorusGrid::new(1, n).unwrap();
        let f = SampledField::sample(grid, |x| (3.0 * x[0]).cos() + 0.25 * (x[0]).sin()).unwrap();
        let r = 4;
        let vals = oversample_offset_line(f.values(), r);
        let m = n * r;
        for (p, &v) in vals.iter().enumerate() {
            let y = (p as f64 + 0.5) * std::f64::consts::TAU / m as f64;
            let want = (3.0 * y).cos() + 0.25 * y.sin();
            assert!((v - want).abs() < 1e-12, "p={p}: {v} vs {want}");
        }
    }
}
