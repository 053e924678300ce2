//! Principal-value kernel operators: conjugate functions in one and several
//! variables, the diagonal conjugate, the Hardy–Littlewood maximal function,
//! and U-type operators.
//!
//! Every p.v. integral here is taken in the classical orientation
//! `p.v. ∫ κ(t) f(x - t) dt` and is discretized by symmetric-pair quadrature
//! on a half-offset oversampled grid: nodes `t = (m + 1/2)·2π/M` come in
//! exact ± pairs and never hit the singularity at `t = 0`. Field values off
//! the grid come from spectral interpolation, which makes the quadrature
//! exact (to roundoff) on band-limited fields.

use rayon::prelude::*;

use crate::fft;
use crate::grid::{pairwise_sum, SampledField, TorusGrid};
use crate::{Result, TorusError};

/// Symmetric-pair p.v. quadrature parameters.
///
/// `refinement` is the oversampling factor `R ≥ 2` (the quadrature grid has
/// `R·N` nodes); `pairing` sums the two members of each `(t, -t)` pair
/// jointly, which makes odd-kernel cancellation exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PvQuadratureScheme {
    refinement: usize,
    pairing: bool,
}

impl PvQuadratureScheme {
    pub fn new(refinement: usize, pairing: bool) -> Result<Self> {
        if refinement < 2 {
            return Err(TorusError::InvalidRefinement(refinement));
        }
        Ok(Self {
            refinement,
            pairing,
        })
    }

    pub fn refinement(&self) -> usize {
        self.refinement
    }

    pub fn pairing(&self) -> bool {
        self.pairing
    }
}

impl Default for PvQuadratureScheme {
    fn default() -> Self {
        Self {
            refinement: 4,
            pairing: true,
        }
    }
}

/// Which modulation factor a U-type operator carries on an axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisFactor {
    Sine,
    Cosine,
}

/// A U-type operator: per-axis factors `φ_k(n t_k) / (2 tan(t_k/2))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UTypeSpec {
    phis: Vec<AxisFactor>,
    n: usize,
}

impl UTypeSpec {
    pub fn new(phis: Vec<AxisFactor>, n: usize) -> Result<Self> {
        if n < 1 {
            return Err(TorusError::InvalidParameter(
                "U-type modulation degree must satisfy 1 <= n < N/2".into(),
            ));
        }
        Ok(Self { phis, n })
    }

    pub fn phis(&self) -> &[AxisFactor] {
        &self.phis
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    fn validate(&self, grid: &TorusGrid) -> Result<()> {
        if self.phis.len() != grid.dim() {
            return Err(TorusError::DimensionMismatch {
                expected: grid.dim(),
                actual: self.phis.len(),
            });
        }
        if self.n >= grid.points_per_axis() / 2 {
            return Err(TorusError::WindowOutOfRange {
                bound: self.n,
                limit: grid.points_per_axis() / 2,
            });
        }
        Ok(())
    }
}

/// Core 1-D p.v. pass: `out[j] = Σ κ(t) line(x_j - t) · 2π/M` over the
/// offset quadrature nodes, pairs `(t, -t)` summed jointly when requested.
pub(crate) fn pv_apply_line(
    line: &[f64],
    kernel: &dyn Fn(f64) -> f64,
    scheme: &PvQuadratureScheme,
) -> Vec<f64> {
    let n = line.len();
    let r = scheme.refinement;
    let m = n * r;
    let over = fft::oversample_offset_line(line, r);
    let h = std::f64::consts::TAU / m as f64;
    let mut out = Vec::with_capacity(n);
    let mut terms = vec![0.0f64; m / 2];
    for j in 0..n {
        let base = j * r;
        if scheme.pairing {
            for (mm, slot) in terms.iter_mut().enumerate() {
                let t = (mm as f64 + 0.5) * h;
                // x - t and x + t both land on the offset grid
                let behind = over[(base + m - mm - 1) % m];
                let ahead = over[(base + mm) % m];
                *slot = kernel(t) * behind + kernel(-t) * ahead;
            }
            out.push(h * pairwise_sum(&terms));
        } else {
            let mut acc = 0.0;
            for mm in 0..m / 2 {
                let t = (mm as f64 + 0.5) * h;
                acc += kernel(t) * over[(base + m - mm - 1) % m];
            }
            for mm in 0..m / 2 {
                let t = (mm as f64 + 0.5) * h;
                acc += kernel(-t) * over[(base + mm) % m];
            }
            out.push(h * acc);
        }
    }
    out
}

/// Apply a line operation along one axis, in parallel over the lines.
fn apply_along_axis(
    f: &SampledField,
    axis: usize,
    op: impl Fn(&[f64]) -> Vec<f64> + Sync,
) -> SampledField {
    let grid = *f.grid();
    let n = grid.points_per_axis();
    let stride = grid.stride(axis);
    let block = stride * n;
    let bases: Vec<usize> = (0..grid.node_count() / block)
        .flat_map(|outer| (0..stride).map(move |inner| outer * block + inner))
        .collect();
    let values = f.values();
    let processed: Vec<(usize, Vec<f64>)> = bases
        .par_iter()
        .map(|&base| {
            let line: Vec<f64> = (0..n).map(|j| values[base + j * stride]).collect();
            (base, op(&line))
        })
        .collect();
    let mut out = vec![0.0f64; values.len()];
    for (base, line) in processed {
        for (j, v) in line.into_iter().enumerate() {
            out[base + j * stride] = v;
        }
    }
    SampledField::new(grid, out).expect("line operation produced non-finite values")
}

fn conjugate_line(line: &[f64], scheme: &PvQuadratureScheme) -> Vec<f64> {
    // (1/π) p.v. ∫ f(x - t) / (2 tan(t/2)) dt
    let kernel = |t: f64| 1.0 / (std::f64::consts::TAU * (t / 2.0).tan());
    pv_apply_line(line, &kernel, scheme)
}

/// One-dimensional conjugate function via p.v. quadrature.
pub fn conjugate_1d(f: &SampledField, scheme: &PvQuadratureScheme) -> Result<SampledField> {
    if f.grid().dim() != 1 {
        return Err(TorusError::WrongDimension {
            required: 1,
            actual: f.grid().dim(),
        });
    }
    Ok(apply_along_axis(f, 0, |line| conjugate_line(line, scheme)))
}

/// d-dimensional conjugate: the 1-D kernel applied along axes `1..d` in order.
pub fn conjugate_dd(f: &SampledField, scheme: &PvQuadratureScheme) -> SampledField {
    let mut out = f.clone();
    for axis in 0..f.grid().dim() {
        out = apply_along_axis(&out, axis, |line| conjugate_line(line, scheme));
    }
    out
}

/// Same as [`conjugate_dd`] but with an explicit axis order; the result is
/// order-independent up to quadrature roundoff.
pub fn conjugate_dd_with_order(
    f: &SampledField,
    scheme: &PvQuadratureScheme,
    order: &[usize],
) -> Result<SampledField> {
    let d = f.grid().dim();
    let mut seen = vec![false; d];
    for &axis in order {
        if axis >= d || seen[axis] {
            return Err(TorusError::InvalidParameter(format!(
                "axis order {order:?} is not a permutation of 0..{d}"
            )));
        }
        seen[axis] = true;
    }
    if order.len() != d {
        return Err(TorusError::InvalidParameter(format!(
            "axis order {order:?} is not a permutation of 0..{d}"
        )));
    }
    let mut out = f.clone();
    for &axis in order {
        out = apply_along_axis(&out, axis, |line| conjugate_line(line, scheme));
    }
    Ok(out)
}

/// Apply a 1-D line op along the main diagonal of axes (0, 1), other axes
/// fixed. A diagonal line visits `(c + s, s, rest)` node indices; along it
/// the field is an ordinary N-sampled function on the circle.
fn apply_along_diagonal(
    f: &SampledField,
    op: impl Fn(&[f64]) -> Vec<f64> + Sync,
) -> SampledField {
    let grid = *f.grid();
    let n = grid.points_per_axis();
    let d = grid.dim();
    debug_assert!(d >= 2);
    let rest_count = grid.node_count() / (n * n);
    let values = f.values();
    let lines: Vec<(usize, usize)> = (0..n)
        .flat_map(|c| (0..rest_count).map(move |rest| (c, rest)))
        .collect();
    let s0 = grid.stride(0);
    let s1 = grid.stride(1);
    let flat_of = move |c: usize, s: usize, rest: usize| -> usize {
        ((c + s) % n) * s0 + s * s1 + rest
    };
    let processed: Vec<((usize, usize), Vec<f64>)> = lines
        .par_iter()
        .map(|&(c, rest)| {
            let line: Vec<f64> = (0..n).map(|s| values[flat_of(c, s, rest)]).collect();
            ((c, rest), op(&line))
        })
        .collect();
    let mut out = vec![0.0f64; values.len()];
    for ((c, rest), line) in processed {
        for (s, v) in line.into_iter().enumerate() {
            out[flat_of(c, s, rest)] = v;
        }
    }
    SampledField::new(grid, out).expect("diagonal operation produced non-finite values")
}

/// Diagonal conjugate `g(x) = p.v. ∫ f(x1 - t, x2 - t, x3, ..) / tan(t/2) dt`
/// (unnormalized kernel).
pub fn diagonal_conjugate(f: &SampledField, scheme: &PvQuadratureScheme) -> Result<SampledField> {
    if f.grid().dim() < 2 {
        return Err(TorusError::WrongDimension {
            required: 2,
            actual: f.grid().dim(),
        });
    }
    let kernel = |t: f64| 1.0 / (t / 2.0).tan();
    Ok(apply_along_diagonal(f, |line| {
        pv_apply_line(line, &kernel, scheme)
    }))
}

/// Hardy–Littlewood maximal function on the circle: supremum of arc
/// averages of `|f|` over every closed grid arc containing the node
/// (lengths 1..N cells).
pub fn hl_maximal_1d(f: &SampledField) -> Result<SampledField> {
    if f.grid().dim() != 1 {
        return Err(TorusError::WrongDimension {
            required: 1,
            actual: f.grid().dim(),
        });
    }
    Ok(SampledField::new(
        *f.grid(),
        maximal_line(f.values()),
    )
    .expect("maximal function produced non-finite values"))
}

/// O(N^2) maximal function of one circular line: for each window length,
/// a monotone-deque sliding maximum over window sums.
pub(crate) fn maximal_line(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let abs: Vec<f64> = values.iter().map(|v| v.abs()).collect();
    // prefix sums over the doubled array
    let mut prefix = vec![0.0f64; 2 * n + 1];
    for i in 0..2 * n {
        prefix[i + 1] = prefix[i] + abs[i % n];
    }
    let mut best = vec![f64::MIN; n];
    let mut deque: std::collections::VecDeque<usize> = std::collections::VecDeque::new();
    for len in 1..=n {
        // window sum of `len` nodes starting at real node s % n
        let win = |s: usize| prefix[s % n + len] - prefix[s % n];
        deque.clear();
        // arcs containing node j start at s in [j-len+1, j]; scan start
        // indices in doubled coordinates and read results at t = j + n.
        for t in 0..2 * n {
            let w = win(t);
            while let Some(&back) = deque.back() {
                if win(back) <= w {
                    deque.pop_back();
                } else {
                    break;
                }
            }
            deque.push_back(t);
            while let Some(&front) = deque.front() {
                if front + len <= t {
                    deque.pop_front();
                } else {
                    break;
                }
            }
            if t >= n {
                let j = t - n;
                let avg = win(*deque.front().unwrap()) / len as f64;
                if avg > best[j] {
                    best[j] = avg;
                }
            }
        }
    }
    best
}

/// U-type operator `U_n f`: per-axis kernels `φ(n t)/(2 tan(t/2))`, composed
/// axiswise. Each axis reduces to conjugates of modulated lines:
/// the proof's own modulation identity, reusing the p.v. conjugate path.
pub fn u_type_operator(
    f: &SampledField,
    spec: &UTypeSpec,
    scheme: &PvQuadratureScheme,
) -> Result<SampledField> {
    spec.validate(f.grid())?;
    let grid = *f.grid();
    let h = grid.spacing();
    let n = spec.n as f64;
    let mut out = f.clone();
    for (axis, &phi) in spec.phis.iter().enumerate() {
        out = apply_along_axis(&out, axis, |line| {
            let npts = line.len();
            let sin_mod: Vec<f64> = (0..npts)
                .map(|j| (n * j as f64 * h).sin() * line[j])
                .collect();
            let cos_mod: Vec<f64> = (0..npts)
                .map(|j| (n * j as f64 * h).cos() * line[j])
                .collect();
            let conj_sin = conjugate_line(&sin_mod, scheme);
            let conj_cos = conjugate_line(&cos_mod, scheme);
            (0..npts)
                .map(|j| {
                    let (s, c) = ((n * j as f64 * h).sin(), (n * j as f64 * h).cos());
                    match phi {
                        AxisFactor::Sine => -c * conj_sin[j] + s * conj_cos[j],
                        AxisFactor::Cosine => c * conj_cos[j] + s * conj_sin[j],
                    }
                })
                .collect()
        });
    }
    Ok(out)
}

/// The function `G = |f̃|`: modulus of the full d-dimensional conjugate.
pub fn g_field(f: &SampledField) -> SampledField {
    conjugate_dd(f, &PvQuadratureScheme::default()).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::TorusGrid;
    use crate::spectral;

    fn grid1(n: usize) -> TorusGrid {
        TorusGrid::new(1, n).unwrap()
    }

    fn grid2(n: usize) -> TorusGrid {
        TorusGrid::new(2, n).unwrap()
    }

    fn max_diff(f: &SampledField, g: &SampledField) -> f64 {
        f.values()
            .iter()
            .zip(g.values().iter())
            .fold(0.0f64, |m, (&a, &b)| m.max((a - b).abs()))
    }

    #[test]
    fn conjugate_1d_classical_pairs() {
        let g = grid1(64);
        let scheme = PvQuadratureScheme::default();
        let cos = SampledField::sample(g, |x| x[0].cos()).unwrap();
        let sin = SampledField::sample(g, |x| x[0].sin()).unwrap();

        let conj_cos = conjugate_1d(&cos, &scheme).unwrap();
        assert!(max_diff(&conj_cos, &sin) < 1e-10);

        let conj_sin = conjugate_1d(&sin, &scheme).unwrap();
        assert!(max_diff(&conj_sin, &cos.scale(-1.0)) < 1e-10);
    }

    #[test]
    fn conjugate_1d_kills_constants_exactly() {
        let g = grid1(32);
        let c = SampledField::constant(g, 7.3).unwrap();
        let conj = conjugate_1d(&c, &PvQuadratureScheme::default()).unwrap();
        assert_eq!(conj.max_abs(), 0.0);
    }

    #[test]
    fn conjugate_1d_agrees_with_spectral_multiplier() {
        // the primary correctness oracle for the quadrature path
        let g = grid1(128);
        let f = SampledField::sample(g, |x| {
            (3.0 * x[0]).cos() + 0.5 * (7.0 * x[0]).sin() - 1.25 * (11.0 * x[0]).cos()
        })
        .unwrap();
        let quad = conjugate_1d(&f, &PvQuadratureScheme::default()).unwrap();
        let mult = spectral::conjugate_field(&f);
        assert!(max_diff(&quad, &mult) < 1e-8);
    }

    #[test]
    fn conjugate_dd_product_and_degenerate() {
        let g = grid2(32);
        let scheme = PvQuadratureScheme::default();
        let f = SampledField::sample(g, |x| x[0].cos() * x[1].cos()).unwrap();
        let want = SampledField::sample(g, |x| x[0].sin() * x[1].sin()).unwrap();
        assert!(max_diff(&conjugate_dd(&f, &scheme), &want) < 1e-7);

        let c = SampledField::constant(g, -2.0).unwrap();
        assert_eq!(conjugate_dd(&c, &scheme).max_abs(), 0.0);

        let axis_free = SampledField::sample(g, |x| x[0].sin()).unwrap();
        assert!(conjugate_dd(&axis_free, &scheme).max_abs() < 1e-12);
    }

    #[test]
    fn conjugate_dd_axis_order_independent() {
        let g = grid2(32);
        let scheme = PvQuadratureScheme::default();
        let f = SampledField::sample(g, |x| {
            (2.0 * x[0] + x[1]).cos() + (x[0] - 3.0 * x[1]).sin() * 0.7
        })
        .unwrap();
        let fwd = conjugate_dd_with_order(&f, &scheme, &[0, 1]).unwrap();
        let rev = conjugate_dd_with_order(&f, &scheme, &[1, 0]).unwrap();
        assert!(max_diff(&fwd, &rev) < 1e-8);
        assert!(conjugate_dd_with_order(&f, &scheme, &[0, 0]).is_err());
    }

    #[test]
    fn double_conjugate_negates_mean_free_part() {
        let g = grid1(128);
        let scheme = PvQuadratureScheme::default();
        let f = SampledField::sample(g, |x| 2.0 + (4.0 * x[0]).cos() - (9.0 * x[0]).sin()).unwrap();
        let twice = conjugate_1d(&conjugate_1d(&f, &scheme).unwrap(), &scheme).unwrap();
        let mean = f.integrate() / f.grid().total_measure();
        let want = f.map(|v| -(v - mean));
        assert!(max_diff(&twice, &want) < 1e-7);
    }

    #[test]
    fn diagonal_conjugate_cases() {
        let g = grid2(32);
        let scheme = PvQuadratureScheme::default();

        let skew = SampledField::sample(g, |x| (x[0] - x[1]).cos()).unwrap();
        assert!(diagonal_conjugate(&skew, &scheme).unwrap().max_abs() < 1e-12);

        let sum = SampledField::sample(g, |x| (x[0] + x[1]).cos()).unwrap();
        let want = SampledField::sample(g, |x| {
            std::f64::consts::TAU * (x[0] + x[1]).sin()
        })
        .unwrap();
        assert!(max_diff(&diagonal_conjugate(&sum, &scheme).unwrap(), &want) < 1e-9);

        let c = SampledField::constant(g, 5.0).unwrap();
        assert_eq!(diagonal_conjugate(&c, &scheme).unwrap().max_abs(), 0.0);

        let d1 = SampledField::constant(grid1(32), 1.0).unwrap();
        assert!(diagonal_conjugate(&d1, &scheme).is_err());
    }

    #[test]
    fn maximal_of_constant_and_domination() {
        let g = grid1(64);
        let c = SampledField::constant(g, -3.5).unwrap();
        let m = hl_maximal_1d(&c).unwrap();
        assert!(m.values().iter().all(|&v| (v - 3.5).abs() < 1e-12));

        let f = SampledField::sample(g, |x| (3.0 * x[0]).sin() - 0.3).unwrap();
        let mf = hl_maximal_1d(&f).unwrap();
        for (v, m) in f.values().iter().zip(mf.values().iter()) {
            assert!(*m >= v.abs() - 1e-12);
        }
    }

    #[test]
    fn maximal_indicator_closed_form() {
        // indicator of an arc of len nodes: at arc-distance s the maximal
        // average is len/(len+s), attained by the arc reaching the far end
        let g = grid1(64);
        let len = 6usize;
        let start = 20usize;
        let mut vals = vec![0.0f64; 64];
        for v in vals.iter_mut().skip(start).take(len) {
            *v = 1.0;
        }
        let f = SampledField::new(g, vals).unwrap();
        let m = hl_maximal_1d(&f).unwrap();
        for s in 1..6usize {
            let j = start + len - 1 + s;
            let want = len as f64 / (len + s) as f64;
            assert!(
                (m.value(j) - want).abs() < 1e-12,
                "s={s}: {} vs {want}",
                m.value(j)
            );
        }
    }

    #[test]
    fn maximal_sublinear_and_homogeneous() {
        let g = grid1(32);
        let f = SampledField::sample(g, |x| (2.0 * x[0]).sin()).unwrap();
        let gfield = SampledField::sample(g, |x| (5.0 * x[0]).cos() - 0.4).unwrap();
        let mf = hl_maximal_1d(&f).unwrap();
        let mg = hl_maximal_1d(&gfield).unwrap();
        let msum = hl_maximal_1d(&f.zip_with(&gfield, |a, b| a + b)).unwrap();
        for i in 0..32 {
            assert!(msum.value(i) <= mf.value(i) + mg.value(i) + 1e-12);
        }

        let m2 = hl_maximal_1d(&f.scale(2.0)).unwrap();
        for i in 0..32 {
            assert_eq!(m2.value(i), 2.0 * mf.value(i));
        }
    }

    #[test]
    fn u_type_on_constants() {
        let g = grid2(32);
        let scheme = PvQuadratureScheme::default();
        let c = SampledField::constant(g, 4.0).unwrap();

        let all_sine = UTypeSpec::new(vec![AxisFactor::Sine, AxisFactor::Sine], 3).unwrap();
        let out = u_type_operator(&c, &all_sine, &scheme).unwrap();
        assert!(max_diff(&out, &c) < 1e-10);

        let g1 = grid1(32);
        let c1 = SampledField::constant(g1, 4.0).unwrap();
        let cosine = UTypeSpec::new(vec![AxisFactor::Cosine], 3).unwrap();
        let out1 = u_type_operator(&c1, &cosine, &scheme).unwrap();
        assert!(out1.max_abs() < 1e-10);
    }

    #[test]
    fn u_type_all_sine_equals_modified_sum() {
        let g = grid2(32);
        let scheme = PvQuadratureScheme::default();
        let f = SampledField::sample(g, |x| {
            (3.0 * x[0]).cos() * (5.0 * x[1]).sin() + 0.5 * (x[0] + x[1]).cos()
        })
        .unwrap();
        let n = 5;
        let spec = UTypeSpec::new(vec![AxisFactor::Sine, AxisFactor::Sine], n).unwrap();
        let u = u_type_operator(&f, &spec, &scheme).unwrap();
        let s_star = spectral::modified_square_partial_sum(&f, n, false).unwrap();
        assert!(max_diff(&u, &s_star) < 1e-8);
    }

    #[test]
    fn u_type_validates_spec() {
        let g = grid2(16);
        let f = SampledField::constant(g, 1.0).unwrap();
        let scheme = PvQuadratureScheme::default();
        let wrong_len = UTypeSpec::new(vec![AxisFactor::Sine], 3).unwrap();
        assert!(u_type_operator(&f, &wrong_len, &scheme).is_err());
        let too_big = UTypeSpec::new(vec![AxisFactor::Sine, AxisFactor::Sine], 8).unwrap();
        assert!(u_type_operator(&f, &too_big, &scheme).is_err());
    }

    #[test]
    fn g_field_matches_definition() {
        let g = grid2(32);
        let f = SampledField::sample(g, |x| x[0].cos() * x[1].cos()).unwrap();
        let want = SampledField::sample(g, |x| (x[0].sin() * x[1].sin()).abs()).unwrap();
        assert!(max_diff(&g_field(&f), &want) < 1e-7);

        let c = SampledField::constant(g, 9.0).unwrap();
        assert_eq!(g_field(&c).max_abs(), 0.0);

        // definitional: equals |conjugate_dd| exactly
        let fancy = SampledField::sample(g, |x| (2.0 * x[0] + x[1]).sin() + 0.3).unwrap();
        let direct = conjugate_dd(&fancy, &PvQuadratureScheme::default()).abs();
        assert_eq!(max_diff(&g_field(&fancy), &direct), 0.0);
    }

    #[test]
    fn scheme_rejects_tiny_refinement() {
        assert!(PvQuadratureScheme::new(1, true).is_err());
        assert!(PvQuadratureScheme::new(2, false).is_ok());
    }

    #[test]
    fn three_dimensional_conjugate_and_diagonal() {
        let g = TorusGrid::new(3, 16).unwrap();
        let scheme = PvQuadratureScheme::default();
        let f = SampledField::sample(g, |x| x[0].cos() * x[1].cos() * x[2].cos()).unwrap();
        let want = SampledField::sample(g, |x| x[0].sin() * x[1].sin() * x[2].sin()).unwrap();
        assert!(max_diff(&conjugate_dd(&f, &scheme), &want) < 1e-7);

        // diagonal acts on the first two axes, the third rides along
        let h = SampledField::sample(g, |x| (x[0] + x[1]).cos() * (2.0 * x[2]).cos()).unwrap();
        let dh = diagonal_conjugate(&h, &scheme).unwrap();
        let want = SampledField::sample(g, |x| {
            std::f64::consts::TAU * (x[0] + x[1]).sin() * (2.0 * x[2]).cos()
        })
        .unwrap();
        assert!(max_diff(&dh, &want) < 1e-8);

        let spec = UTypeSpec::new(
            vec![AxisFactor::Sine, AxisFactor::Sine, AxisFactor::Sine],
            2,
        )
        .unwrap();
        let c = SampledField::constant(g, 2.0).unwrap();
        let u = u_type_operator(&c, &spec, &scheme).unwrap();
        assert!(max_diff(&u, &c) < 1e-9);
    }
}
