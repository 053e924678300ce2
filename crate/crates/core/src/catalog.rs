//! Built-in test-function catalog: closed-form evaluators with metadata,
//! resolvable from string ids like `cos:3`, `const:2.0`, or `logsing:12`.
//!
//! Every entry is a trigonometric polynomial (or constant), so it is exactly
//! representable on any admissible grid: partial sums saturate once the
//! window covers the degree, which is what the sweep experiments probe.
//! `logsing` is the truncated series of `log(1/|2 sin(x/2)|)`, the classical
//! L log L–borderline singular model; `*_prod` entries are its 2-D products.

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::grid::{SampledField, TorusGrid};
use crate::{Result, TorusError};

type Evaluator = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// A catalog entry: id, dimension, evaluator, and metadata.
#[derive(Clone)]
pub struct FunctionCatalogEntry {
    pub id: String,
    pub dim: usize,
    /// Band-limited degree (max |k_i|); all catalog entries are band-limited.
    pub degree: usize,
    /// Truncation of a genuinely singular (L log L–borderline) model.
    pub singular_model: bool,
    evaluator: Evaluator,
}

impl FunctionCatalogEntry {
    pub fn eval(&self, x: &[f64]) -> f64 {
        (self.evaluator)(x)
    }

    /// Sample onto a grid. The grid must match the entry dimension and
    /// resolve the degree.
    pub fn sample(&self, grid: TorusGrid) -> Result<SampledField> {
        if grid.dim() != self.dim {
            return Err(TorusError::WrongDimension {
                required: self.dim,
                actual: grid.dim(),
            });
        }
        if self.degree >= grid.points_per_axis() / 2 {
            return Err(TorusError::WindowOutOfRange {
                bound: self.degree,
                limit: grid.points_per_axis() / 2,
            });
        }
        let ev = self.evaluator.clone();
        SampledField::sample(grid, move |x| ev(x))
    }
}

impl std::fmt::Debug for FunctionCatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FunctionCatalogEntry")
            .field("id", &self.id)
            .field("dim", &self.dim)
            .field("degree", &self.degree)
            .field("singular_model", &self.singular_model)
            .finish()
    }
}

fn entry(
    id: String,
    dim: usize,
    degree: usize,
    singular_model: bool,
    evaluator: Evaluator,
) -> FunctionCatalogEntry {
    FunctionCatalogEntry {
        id,
        dim,
        degree,
        singular_model,
        evaluator,
    }
}

/// Truncated square wave `(4/π) Σ_{odd j ≤ m} sin(jx)/j`.
fn square_wave(m: usize) -> impl Fn(f64) -> f64 {
    move |x: f64| {
        let mut acc = 0.0;
        let mut j = 1usize;
        while j <= m {
            acc += (j as f64 * x).sin() / j as f64;
            j += 2;
        }
        acc * 4.0 / std::f64::consts::PI
    }
}

/// Truncated sawtooth `2 Σ_{j ≤ m} (-1)^{j+1} sin(jx)/j` (the series of x).
fn sawtooth(m: usize) -> impl Fn(f64) -> f64 {
    move |x: f64| {
        let mut acc = 0.0;
        for j in 1..=m {
            let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
            acc += sign * (j as f64 * x).sin() / j as f64;
        }
        2.0 * acc
    }
}

/// Truncated series of `log(1/|2 sin(x/2)|)`: `Σ_{j ≤ m} cos(jx)/j`.
fn log_singular(m: usize) -> impl Fn(f64) -> f64 {
    move |x: f64| {
        let mut acc = 0.0;
        for j in 1..=m {
            acc += (j as f64 * x).cos() / j as f64;
        }
        acc
    }
}

fn parse_arg<T: std::str::FromStr>(id: &str, arg: Option<&str>, default: T) -> Result<T> {
    match arg {
        None => Ok(default),
        Some(s) => s
            .parse::<T>()
            .map_err(|_| TorusError::InvalidParameter(format!("bad argument in '{id}'"))),
    }
}

/// Resolve a function id of the form `name` or `name:arg`.
///
/// Known names: `const:<c>`, `cos:<m>`, `sin:<m>`, `square[:m]`,
/// `sawtooth[:m]`, `logsing[:m]` (1-D); `cos_sum`, `cos_prod`, `sin_prod`,
/// `sawtooth_prod[:m]`, `logsing_prod[:m]` (2-D); `random:<deg>` (any
/// dimension, coefficients drawn from the seeded generator).
pub fn resolve(id: &str, dim: usize, seed: u64) -> Result<FunctionCatalogEntry> {
    let (name, arg) = match id.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (id, None),
    };
    let id_string = id.to_string();
    match (name, dim) {
        ("const", _) => {
            let c: f64 = parse_arg(id, arg, 1.0)?;
            if !c.is_finite() {
                return Err(TorusError::InvalidParameter(format!(
                    "non-finite constant in '{id}'"
                )));
            }
            Ok(entry(id_string, dim, 0, false, Arc::new(move |_| c)))
        }
        ("cos", 1) => {
            let m: usize = parse_arg(id, arg, 1)?;
            Ok(entry(
                id_string,
                1,
                m,
                false,
                Arc::new(move |x| (m as f64 * x[0]).cos()),
            ))
        }
        ("sin", 1) => {
            let m: usize = parse_arg(id, arg, 1)?;
            Ok(entry(
                id_string,
                1,
                m,
                false,
                Arc::new(move |x| (m as f64 * x[0]).sin()),
            ))
        }
        ("square", 1) => {
            let m: usize = parse_arg(id, arg, 9)?;
            let f = square_wave(m);
            Ok(entry(id_string, 1, m, false, Arc::new(move |x| f(x[0]))))
        }
        ("sawtooth", 1) => {
            let m: usize = parse_arg(id, arg, 8)?;
            let f = sawtooth(m);
            Ok(entry(id_string, 1, m, false, Arc::new(move |x| f(x[0]))))
        }
        ("logsing", 1) => {
            let m: usize = parse_arg(id, arg, 12)?;
            let f = log_singular(m);
            Ok(entry(id_string, 1, m, true, Arc::new(move |x| f(x[0]))))
        }
        ("cos_sum", 2) => Ok(entry(
            id_string,
            2,
            1,
            false,
            Arc::new(|x| (x[0] + x[1]).cos()),
        )),
        ("cos_prod", 2) => Ok(entry(
            id_string,
            2,
            1,
            false,
            Arc::new(|x| x[0].cos() * x[1].cos()),
        )),
        ("sin_prod", 2) => Ok(entry(
            id_string,
            2,
            1,
            false,
            Arc::new(|x| x[0].sin() * x[1].sin()),
        )),
        ("sawtooth_prod", 2) => {
            let m: usize = parse_arg(id, arg, 6)?;
            let f = sawtooth(m);
            let g = sawtooth(m);
            Ok(entry(
                id_string,
                2,
                m,
                false,
                Arc::new(move |x| f(x[0]) * g(x[1])),
            ))
        }
        ("logsing_prod", 2) => {
            let m: usize = parse_arg(id, arg, 8)?;
            let f = log_singular(m);
            let g = log_singular(m);
            Ok(entry(
                id_string,
                2,
                m,
                true,
                Arc::new(move |x| f(x[0]) * g(x[1])),
            ))
        }
        ("random", _) => {
            let degree: usize = parse_arg(id, arg, 4)?;
            if degree == 0 {
                return Err(TorusError::InvalidParameter(format!(
                    "random degree must be >= 1 in '{id}'"
                )));
            }
            Ok(random_band_limited(id_string, dim, degree, seed))
        }
        _ => Err(TorusError::UnknownFunction(format!("{id} (dim {dim})"))),
    }
}

/// A random real band-limited field: independent N(0,1)-ish coefficients
/// on the half lattice, deterministic in the seed.
pub fn random_band_limited(
    id: String,
    dim: usize,
    degree: usize,
    seed: u64,
) -> FunctionCatalogEntry {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let side = 2 * degree + 1;
    let count = side.pow(dim as u32);
    // pairs (a_k cos(k·x) + b_k sin(k·x)) over the full window; the cos/sin
    // form keeps the field real without bookkeeping conjugate pairs.
    let amplitudes: Vec<(f64, f64)> = (0..count)
        .map(|_| {
            (
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            )
        })
        .collect();
    let scale = 1.0 / (count as f64).sqrt();
    let evaluator = move |x: &[f64]| -> f64 {
        let mut acc = 0.0;
        for (slot, &(a, b)) in amplitudes.iter().enumerate() {
            let mut rem = slot;
            let mut kx = 0.0;
            for &xi in x.iter().rev() {
                let k = (rem % side) as i64 - degree as i64;
                rem /= side;
                kx += k as f64 * xi;
            }
            acc += a * kx.cos() + b * kx.sin();
        }
        acc * scale
    };
    entry(id, dim, degree, false, Arc::new(evaluator))
}

/// The 1-D verification suite.
pub fn suite_1d() -> Vec<&'static str> {
    vec![
        "const:1.5",
        "cos:1",
        "cos:3",
        "sin:2",
        "square:9",
        "sawtooth:8",
        "logsing:12",
    ]
}

/// The 2-D verification suite.
pub fn suite_2d() -> Vec<&'static str> {
    vec![
        "const:1.0",
        "cos_prod",
        "cos_sum",
        "sin_prod",
        "sawtooth_prod:6",
        "logsing_prod:8",
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolves_and_samples_whole_suite() {
        let g1 = TorusGrid::new(1, 64).unwrap();
        for id in suite_1d() {
            let e = resolve(id, 1, 0).unwrap();
            let f = e.sample(g1).unwrap();
            assert!(f.l1_norm().is_finite());
        }
        let g2 = TorusGrid::new(2, 32).unwrap();
        for id in suite_2d() {
            let e = resolve(id, 2, 0).unwrap();
            let f = e.sample(g2).unwrap();
            assert!(f.l1_norm().is_finite());
        }
    }

    #[test]
    fn parses_parameters() {
        let e = resolve("const:2.5", 1, 0).unwrap();
        assert_eq!(e.eval(&[1.0]), 2.5);
        let e = resolve("cos:3", 1, 0).unwrap();
        assert_eq!(e.degree, 3);
        assert!(resolve("cos:x", 1, 0).is_err());
        assert!(resolve("nonsense", 1, 0).is_err());
        assert!(resolve("cos_sum", 1, 0).is_err());
    }

    #[test]
    fn logsing_matches_closed_form_away_from_singularity() {
        // Σ cos(jx)/j -> log(1/|2 sin(x/2)|); at m = 4000 the tail is small
        let e = resolve("logsing:4000", 1, 0).unwrap();
        for &x in &[1.0f64, 2.0, 3.0, 4.5] {
            let want = (1.0 / (2.0 * (x / 2.0).sin()).abs()).ln();
            assert!(
                (e.eval(&[x]) - want).abs() < 1e-3,
                "x={x}: {} vs {want}",
                e.eval(&[x])
            );
        }
    }

    #[test]
    fn random_fields_deterministic_in_seed() {
        let a = resolve("random:4", 2, 42).unwrap();
        let b = resolve("random:4", 2, 42).unwrap();
        let c = resolve("random:4", 2, 43).unwrap();
        let x = [1.3, 2.7];
        assert_eq!(a.eval(&x), b.eval(&x));
        assert_ne!(a.eval(&x), c.eval(&x));
    }

    #[test]
    fn sample_rejects_unresolvable_degree() {
        let e = resolve("cos:5", 1, 0).unwrap();
        assert!(e.sample(TorusGrid::new(1, 8).unwrap()).is_err());
        assert!(e.sample(TorusGrid::new(2, 64).unwrap()).is_err());
    }

    #[test]
    fn random_is_band_limited_on_grid() {
        let g = TorusGrid::new(1, 64).unwrap();
        let e = resolve("random:5", 1, 7).unwrap();
        let f = e.sample(g).unwrap();
        let coeffs = crate::spectral::coefficients(&f);
        for k in 6..32i64 {
            assert!(coeffs.coefficient(&[k]).unwrap().norm() < 1e-12);
            assert!(coeffs.coefficient(&[-k]).unwrap().norm() < 1e-12);
        }
    }
}
