//! Independent brute-force references for the spectral and p.v. paths:
//! direct lattice summation with literal quadrature coefficients, dense
//! symmetric-pair p.v. quadrature with naively computed interpolants, and a
//! grid-search Luxemburg solver.
//!
//! Nothing here shares code with the modules it checks: coefficients come
//! from literal double sums instead of the FFT, interpolants are evaluated
//! term by term, and sums are plain sequential accumulation. Cost caps are
//! enforced before running. Single-threaded by design.

use crate::grid::SampledField;
use crate::orlicz::OrliczIndex;
use crate::spectral::FrequencyWindow;
use crate::{Result, TorusError};

/// Oracle run limits.
#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    /// Oversampling factor for dense p.v. quadrature (>= 8 for acceptance).
    pub oversample: usize,
    /// Maximum `nodes × window` product for direct summation.
    pub direct_sum_cap: u128,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            oversample: 8,
            direct_sum_cap: 200_000_000,
        }
    }
}

impl OracleConfig {
    fn check_oversample(&self) -> Result<()> {
        if self.oversample < 4 {
            return Err(TorusError::InvalidRefinement(self.oversample));
        }
        Ok(())
    }
}

/// Which multiplier flavor the direct sum applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DirectSumKind {
    Plain,
    Conjugate,
    ModifiedPlain,
    ModifiedConjugate,
}

#[derive(Clone, Copy)]
struct C {
    re: f64,
    im: f64,
}

impl C {
    const ZERO: C = C { re: 0.0, im: 0.0 };

    fn mul(self, other: C) -> C {
        C {
            re: self.re * other.re - self.im * other.im,
            im: self.re * other.im + self.im * other.re,
        }
    }

    fn add(self, other: C) -> C {
        C {
            re: self.re + other.re,
            im: self.im + other.im,
        }
    }

    fn scale(self, s: f64) -> C {
        C {
            re: s * self.re,
            im: s * self.im,
        }
    }

    fn expi(theta: f64) -> C {
        C {
            re: theta.cos(),
            im: theta.sin(),
        }
    }
}

fn window_lattice(window: &FrequencyWindow, dim: usize) -> Vec<Vec<i64>> {
    let bounds: Vec<i64> = match window {
        FrequencyWindow::Square { n } => vec![*n as i64; dim],
        FrequencyWindow::Rectangular { bounds } => bounds.iter().map(|&b| b as i64).collect(),
    };
    let mut points = vec![vec![]];
    for &b in &bounds {
        let mut next = Vec::with_capacity(points.len() * (2 * b as usize + 1));
        for p in &points {
            for k in -b..=b {
                let mut q = p.clone();
                q.push(k);
                next.push(q);
            }
        }
        points = next;
    }
    points
}

/// Literal truncated Fourier sum: coefficients from the literal quadrature
/// formula, synthesis by direct summation over the window lattice.
pub fn direct_partial_sum(
    f: &SampledField,
    window: &FrequencyWindow,
    kind: DirectSumKind,
    config: &OracleConfig,
) -> Result<SampledField> {
    let grid = *f.grid();
    window.validate(&grid)?;
    let lattice = window_lattice(window, grid.dim());
    let cost = grid.node_count() as u128 * lattice.len() as u128;
    if cost > config.direct_sum_cap {
        return Err(TorusError::CostCapExceeded {
            cost,
            cap: config.direct_sum_cap,
        });
    }

    let n_edge = match window {
        FrequencyWindow::Square { n } => *n as i64,
        FrequencyWindow::Rectangular { .. } => -1, // modified kinds use square windows
    };
    let h = grid.spacing();
    let node_count = grid.node_count();

    // literal a_k = (2π)^{-d} ∫ f e^{-ik·x} dx, rectangle rule
    let quad_scale = grid.cell_measure() / grid.total_measure();
    let mut coeffs = Vec::with_capacity(lattice.len());
    for k in &lattice {
        let mut acc = C::ZERO;
        for flat in 0..node_count {
            let idx = grid.decompose(flat);
            let mut kx = 0.0;
            for (ki, &j) in k.iter().zip(idx.iter()) {
                kx += *ki as f64 * j as f64 * h;
            }
            acc = acc.add(C::expi(-kx).scale(f.value(flat)));
        }
        coeffs.push(acc.scale(quad_scale));
    }

    // per-k multiplier, re-derived locally
    let weights: Vec<C> = lattice
        .iter()
        .map(|k| {
            let mut w = C { re: 1.0, im: 0.0 };
            for &ki in k {
                match kind {
                    DirectSumKind::Plain => {}
                    DirectSumKind::Conjugate => {
                        w = w.mul(C {
                            re: 0.0,
                            im: -(ki.signum() as f64),
                        });
                    }
                    DirectSumKind::ModifiedPlain | DirectSumKind::ModifiedConjugate => {
                        let edge = if ki.abs() == n_edge { 0.5 } else { 1.0 };
                        w = w.scale(edge);
                        if kind == DirectSumKind::ModifiedConjugate {
                            w = w.mul(C {
                                re: 0.0,
                                im: -(ki.signum() as f64),
                            });
                        }
                    }
                }
            }
            w
        })
        .collect();

    let mut out = Vec::with_capacity(node_count);
    for flat in 0..node_count {
        let idx = grid.decompose(flat);
        let mut acc = C::ZERO;
        for (k, (coeff, weight)) in lattice.iter().zip(coeffs.iter().zip(weights.iter())) {
            let mut kx = 0.0;
            for (ki, &j) in k.iter().zip(idx.iter()) {
                kx += *ki as f64 * j as f64 * h;
            }
            acc = acc.add(coeff.mul(*weight).mul(C::expi(kx)));
        }
        out.push(acc.re);
    }
    SampledField::new(grid, out)
}

/// Naive 1-D interpolation coefficients of a line, `c_k = (1/N) Σ v_j e^{-ikjh}`.
fn line_coefficients(line: &[f64]) -> Vec<C> {
    let n = line.len();
    let h = std::f64::consts::TAU / n as f64;
    let half = n as i64 / 2;
    (-half..half)
        .map(|k| {
            let mut acc = C::ZERO;
            for (j, &v) in line.iter().enumerate() {
                acc = acc.add(C::expi(-(k as f64) * j as f64 * h).scale(v));
            }
            acc.scale(1.0 / n as f64)
        })
        .collect()
}

/// Evaluate the interpolant at an arbitrary point, Nyquist read as cosine.
fn eval_interpolant(coeffs: &[C], y: f64) -> f64 {
    let n = coeffs.len();
    let half = n as i64 / 2;
    let mut acc = C::ZERO;
    for (slot, c) in coeffs.iter().enumerate() {
        let k = slot as i64 - half;
        if k == -half {
            acc = acc.add(C {
                re: c.re * (half as f64 * y).cos(),
                im: c.im * (half as f64 * y).cos(),
            });
        } else {
            acc = acc.add(c.mul(C::expi(k as f64 * y)));
        }
    }
    acc.re
}

/// Dense symmetric-pair p.v. quadrature along one axis:
/// `out(x) = Σ_pairs [κ(t) f(x - t) + κ(-t) f(x + t)] · 2π/M` on the
/// half-offset oversampled nodes, field values from naive interpolation.
pub fn dense_pv_quadrature(
    f: &SampledField,
    kernel: &dyn Fn(f64) -> f64,
    axis: usize,
    config: &OracleConfig,
) -> Result<SampledField> {
    config.check_oversample()?;
    let grid = *f.grid();
    if axis >= grid.dim() {
        return Err(TorusError::InvalidParameter(format!(
            "axis {axis} out of range for dimension {}",
            grid.dim()
        )));
    }
    let n = grid.points_per_axis();
    let m = n * config.oversample;
    let h_m = std::f64::consts::TAU / m as f64;
    let stride = grid.stride(axis);
    let block = stride * n;
    let mut out = vec![0.0f64; grid.node_count()];
    for outer in 0..grid.node_count() / block {
        for inner in 0..stride {
            let base = outer * block + inner;
            let line: Vec<f64> = (0..n).map(|j| f.value(base + j * stride)).collect();
            let coeffs = line_coefficients(&line);
            for j in 0..n {
                let x = j as f64 * grid.spacing();
                let mut acc = 0.0;
                for mm in 0..m / 2 {
                    let t = (mm as f64 + 0.5) * h_m;
                    acc += kernel(t) * eval_interpolant(&coeffs, x - t)
                        + kernel(-t) * eval_interpolant(&coeffs, x + t);
                }
                out[base + j * stride] = acc * h_m;
            }
        }
    }
    SampledField::new(grid, out)
}

/// Grid search over λ followed by local bisection; independent of the
/// orlicz module's solver (own `Log_k` evaluation, plain sequential sums).
pub fn brute_luxemburg(f: &SampledField, k: OrliczIndex) -> f64 {
    let log_k = |u: f64| -> f64 {
        let a = u.abs();
        if k.k() == 0 {
            a
        } else if a <= 1.0 {
            0.0
        } else {
            a * a.ln().powi(k.k() as i32)
        }
    };
    let cell = f.grid().cell_measure();
    let phi = |lambda: f64| -> f64 {
        let mut acc = 0.0;
        for &v in f.values() {
            acc += log_k(v / lambda);
        }
        cell * acc
    };
    let sup = f.values().iter().fold(0.0f64, |m, &v| m.max(v.abs()));
    if sup == 0.0 {
        return 0.0;
    }
    // expand upward until admissible, then walk down to bracket the root
    let mut hi = sup;
    while phi(hi) > 1.0 {
        hi *= 2.0;
    }
    let mut lo = hi;
    loop {
        let candidate = lo / 2.0;
        if phi(candidate) > 1.0 {
            lo = candidate;
            break;
        }
        lo = candidate;
        if lo < 1e-300 {
            return 0.0;
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if phi(mid) > 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi
}
