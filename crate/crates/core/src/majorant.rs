//! Constructive majorant for square partial sums: the strictly positive
//! field `F` controlling `|S_n f| + |S̃_n f|` in an exponential integral.
//!
//! The 1-D base case is `F = Mf + floor`. The 2-D case assembles
//! `F = 4(F1 + F2 + F3 + G) + floor` out of slicewise maximal functions of
//! the diagonal conjugate `g`, the degenerate modulated-mean term, the
//! modified-sum remainders, and the modulus of the full conjugate.

use std::io::{self, Write};

use rayon::prelude::*;

use crate::grid::{GridMask, SampledField, TorusGrid};
use crate::singular::{self, PvQuadratureScheme};
use crate::spectral;
use crate::{Result, TorusError};

/// The named sub-fields of a majorant.
#[derive(Debug, Clone)]
pub struct MajorantParts {
    pub f1: SampledField,
    pub f2: SampledField,
    pub f3: SampledField,
    pub g: SampledField,
}

/// The function `F` with its construction provenance.
///
/// For the 2-D recursive construction `field = 4(F1 + F2 + F3 + G) + floor`;
/// the 1-D base case keeps `field = F1 + floor` with `F1 = Mf`. All parts
/// are nonnegative and the floor keeps `field` strictly positive.
#[derive(Debug, Clone)]
pub struct MajorantField {
    field: SampledField,
    parts: MajorantParts,
    floor: f64,
}

impl MajorantField {
    pub fn field(&self) -> &SampledField {
        &self.field
    }

    pub fn parts(&self) -> &MajorantParts {
        &self.parts
    }

    pub fn floor(&self) -> f64 {
        self.floor
    }

    pub fn grid(&self) -> &TorusGrid {
        self.field.grid()
    }

    pub fn value(&self, flat: usize) -> f64 {
        self.field.value(flat)
    }

    /// L1 masses of the four parts, for the dump sidecar.
    pub fn part_masses(&self) -> [(&'static str, f64); 4] {
        [
            ("F1", self.parts.f1.integrate()),
            ("F2", self.parts.f2.integrate()),
            ("F3", self.parts.f3.integrate()),
            ("G", self.parts.g.integrate()),
        ]
    }

    /// JSON sidecar naming the part-wise L1 masses.
    pub fn write_sidecar_json(&self, out: &mut impl Write) -> io::Result<()> {
        let mut obj = serde_json::Map::new();
        for (name, mass) in self.part_masses() {
            obj.insert(name.to_string(), serde_json::json!(mass));
        }
        obj.insert("floor".to_string(), serde_json::json!(self.floor));
        writeln!(out, "{}", serde_json::Value::Object(obj))
    }

    /// Rebuild with every part scaled, floor untouched. Test helper for the
    /// homogeneity contract.
    pub fn with_scaled_parts(&self, factor: f64) -> MajorantField {
        let parts = MajorantParts {
            f1: self.parts.f1.scale(factor),
            f2: self.parts.f2.scale(factor),
            f3: self.parts.f3.scale(factor),
            g: self.parts.g.scale(factor),
        };
        let field = self.field.map(|v| factor * (v - self.floor) + self.floor);
        MajorantField {
            field,
            parts,
            floor: self.floor,
        }
    }
}

/// Positivity floor `1e-8 · (1 + ‖f‖_L1)`: keeps exponential ratios finite
/// where every part vanishes.
fn positivity_floor(f: &SampledField) -> f64 {
    1e-8 * (1.0 + f.l1_norm())
}

/// 1-D base case: `F = Mf + floor`, parts `F1 = Mf`, the rest zero.
pub fn majorant_1d(f: &SampledField) -> Result<MajorantField> {
    let mf = singular::hl_maximal_1d(f)?;
    let floor = positivity_floor(f);
    let zero = SampledField::constant(*f.grid(), 0.0)?;
    let field = mf.map(|v| v + floor);
    Ok(MajorantField {
        field,
        parts: MajorantParts {
            f1: mf,
            f2: zero.clone(),
            f3: zero.clone(),
            g: zero,
        },
        floor,
    })
}

/// The diagonal-conjugate input of the recursion.
#[derive(Debug, Clone)]
pub struct GFunctionField {
    pub field: SampledField,
}

/// `g(x1, x2) = (1/π) p.v. ∫ f(x1 - t, x2 - t) / (2 tan(t/2)) dt`:
/// both final axes shifted together.
pub fn g_of(f: &SampledField) -> Result<GFunctionField> {
    if f.grid().dim() != 2 {
        return Err(TorusError::WrongDimension {
            required: 2,
            actual: f.grid().dim(),
        });
    }
    let diag = singular::diagonal_conjugate(f, &PvQuadratureScheme::default())?;
    Ok(GFunctionField {
        field: diag.scale(1.0 / std::f64::consts::TAU),
    })
}

/// Slicewise 1-D maximal function along `axis` (each line independent).
fn slicewise_maximal(f: &SampledField, axis: usize) -> SampledField {
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
            (base, singular::maximal_line(&line))
        })
        .collect();
    let mut out = vec![0.0f64; values.len()];
    for (base, line) in processed {
        for (j, v) in line.into_iter().enumerate() {
            out[base + j * stride] = v;
        }
    }
    SampledField::new(grid, out).expect("maximal slice produced non-finite values")
}

/// 2-D recursive majorant.
///
/// Parts:
/// - `F1`: maximal function of `g(·, x2)` along the first axis per slice;
/// - `F2`: same along the second axis per slice;
/// - `F3`: the x1-constant modulated-mean bound `(1/2π)∫|g(t, x2+π)|dt`
///   plus the modified-sum remainder `max_{n≤n_max}(|S_n f - S*_n f| +
///   |S̃_n f - S̃*_n f|)`;
/// - `G`: `|f̃|`, the modulus of the full conjugate.
pub fn majorant_2d(f: &SampledField, n_max: usize) -> Result<MajorantField> {
    let grid = *f.grid();
    if grid.dim() != 2 {
        return Err(TorusError::WrongDimension {
            required: 2,
            actual: grid.dim(),
        });
    }
    if n_max < 1 || n_max >= grid.points_per_axis() / 2 {
        return Err(TorusError::WindowOutOfRange {
            bound: n_max,
            limit: grid.points_per_axis() / 2,
        });
    }

    let g = g_of(f)?.field;
    let f1 = slicewise_maximal(&g, 0);
    let f2 = slicewise_maximal(&g, 1);

    // F3a: (1/2π) ∫ |g(t, x2 + π)| dt, constant in x1.
    let n = grid.points_per_axis();
    let mut row_mean = vec![0.0f64; n];
    for (j2, mean) in row_mean.iter_mut().enumerate() {
        let mut acc = 0.0;
        for j1 in 0..n {
            acc += g.value(j1 * n + j2).abs();
        }
        *mean = acc / n as f64;
    }
    let mut f3a_values = vec![0.0f64; grid.node_count()];
    for j1 in 0..n {
        for j2 in 0..n {
            f3a_values[j1 * n + j2] = row_mean[(j2 + n / 2) % n];
        }
    }
    let f3a = SampledField::new(grid, f3a_values)?;

    // F3b: pointwise sup over n of the modified-sum gaps.
    let gaps: Vec<SampledField> = (1..=n_max)
        .into_par_iter()
        .map(|deg| {
            let plain = spectral::square_partial_sum(f, deg)
                .unwrap()
                .zip_with(&spectral::modified_square_partial_sum(f, deg, false).unwrap(), |a, b| {
                    (a - b).abs()
                });
            let conj = spectral::conjugate_square_partial_sum(f, deg)
                .unwrap()
                .zip_with(&spectral::modified_square_partial_sum(f, deg, true).unwrap(), |a, b| {
                    (a - b).abs()
                });
            plain.zip_with(&conj, |a, b| a + b)
        })
        .collect();
    let zero = SampledField::constant(grid, 0.0)?;
    let f3b = gaps
        .iter()
        .fold(zero, |acc, gap| acc.zip_with(gap, f64::max));

    let f3 = f3a.zip_with(&f3b, |a, b| a + b);
    let gpart = singular::g_field(f);

    let floor = positivity_floor(f);
    let sum = f1
        .zip_with(&f2, |a, b| a + b)
        .zip_with(&f3, |a, b| a + b)
        .zip_with(&gpart, |a, b| a + b);
    let field = sum.map(|v| 4.0 * v + floor);

    Ok(MajorantField {
        field,
        parts: MajorantParts {
            f1,
            f2,
            f3,
            g: gpart,
        },
        floor,
    })
}

/// Exceptional-set extraction: threshold at the `(1 - ε/(2π)^d)` node
/// quantile of `F`, guaranteeing `measure(complement) ≤ ε` by counting.
pub fn exceptional_set(majorant: &MajorantField, eps: f64) -> Result<GridMask> {
    let grid = *majorant.grid();
    if !(eps > 0.0 && eps < grid.total_measure()) {
        return Err(TorusError::InvalidParameter(format!(
            "eps must lie in (0, (2π)^d) (got {eps})"
        )));
    }
    let excludable = (eps / grid.cell_measure()).floor() as usize;
    let mut sorted: Vec<f64> = majorant.field().values().to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let tau = sorted[excludable.min(sorted.len() - 1)];
    let included: Vec<bool> = majorant
        .field()
        .values()
        .iter()
        .map(|&v| v <= tau)
        .collect();
    GridMask::new(grid, included)
}
