//! Discretized torus grids, sampled fields, node masks, and quadrature.
//!
//! The grid is uniform with `N` (a power of two) nodes per axis, spacing
//! `2π/N`. All integrals use the rectangle rule, which is exact for
//! trigonometric polynomials of degree below `N/2` — the regime every other
//! module operates in. Set measure is node-counting measure.

use std::f64::consts::TAU;
use std::io::{self, Write};

use crate::{Result, TorusError};

/// A uniform discretization of the torus `T^d`.
///
/// Nodes along each axis are `x_j = j · 2π/N`, `j = 0..N`, stored row-major
/// with axis order `(x1, .., xd)`: the last axis is contiguous.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusGrid {
    dim: usize,
    points_per_axis: usize,
}

impl TorusGrid {
    pub fn new(dim: usize, points_per_axis: usize) -> Result<Self> {
        if !(1..=3).contains(&dim) {
            return Err(TorusError::InvalidDimension(dim));
        }
        if points_per_axis < 8 || !points_per_axis.is_power_of_two() {
            return Err(TorusError::InvalidGridSize(points_per_axis));
        }
        Ok(Self {
            dim,
            points_per_axis,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points_per_axis(&self) -> usize {
        self.points_per_axis
    }

    /// Grid spacing `2π/N` in radians.
    pub fn spacing(&self) -> f64 {
        TAU / self.points_per_axis as f64
    }

    /// Total number of nodes, `N^d`.
    pub fn node_count(&self) -> usize {
        self.points_per_axis.pow(self.dim as u32)
    }

    /// Measure of one grid cell, `(2π/N)^d`.
    pub fn cell_measure(&self) -> f64 {
        self.spacing().powi(self.dim as i32)
    }

    /// Measure of the full torus, `(2π)^d`.
    pub fn total_measure(&self) -> f64 {
        TAU.powi(self.dim as i32)
    }

    /// Stride of `axis` in the flat row-major layout.
    pub fn stride(&self, axis: usize) -> usize {
        debug_assert!(axis < self.dim);
        self.points_per_axis.pow((self.dim - 1 - axis) as u32)
    }

    /// Per-axis node indices of a flat index.
    pub fn decompose(&self, flat: usize) -> Vec<usize> {
        let n = self.points_per_axis;
        let mut idx = vec![0usize; self.dim];
        let mut rem = flat;
        for axis in (0..self.dim).rev() {
            idx[axis] = rem % n;
            rem /= n;
        }
        idx
    }

    /// Flat index of per-axis node indices.
    pub fn flatten(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.dim);
        let n = self.points_per_axis;
        idx.iter().fold(0usize, |acc, &j| acc * n + (j % n))
    }

    /// Coordinates of the node with the given flat index.
    pub fn node_coords(&self, flat: usize) -> Vec<f64> {
        let h = self.spacing();
        self.decompose(flat).iter().map(|&j| j as f64 * h).collect()
    }
}

/// Fixed-order pairwise summation: recursive halving down to pairs.
///
/// The order is a function of the slice length alone, so reductions are
/// run-to-run and thread-count independent. Halving also keeps symmetric
/// halves of power-of-two arrays disjoint, which makes odd-symmetry
/// cancellations (e.g. integrating `cos x`) exact in floating point.
pub(crate) fn pairwise_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        2 => values[0] + values[1],
        len => {
            let mid = len / 2;
            pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
        }
    }
}

/// A real scalar field sampled on a [`TorusGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct SampledField {
    grid: TorusGrid,
    values: Vec<f64>,
}

impl SampledField {
    /// Wrap existing values; every value must be finite.
    pub fn new(grid: TorusGrid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.node_count() {
            return Err(TorusError::LengthMismatch {
                expected: grid.node_count(),
                actual: values.len(),
            });
        }
        for (index, &value) in values.iter().enumerate() {
            if !value.is_finite() {
                return Err(TorusError::NonFiniteSample { index, value });
            }
        }
        Ok(Self { grid, values })
    }

    /// Sample a point evaluator at every grid node.
    pub fn sample(grid: TorusGrid, evaluator: impl Fn(&[f64]) -> f64) -> Result<Self> {
        let mut values = Vec::with_capacity(grid.node_count());
        let mut coords = vec![0.0f64; grid.dim()];
        let h = grid.spacing();
        for flat in 0..grid.node_count() {
            let idx = grid.decompose(flat);
            for (c, &j) in coords.iter_mut().zip(idx.iter()) {
                *c = j as f64 * h;
            }
            let value = evaluator(&coords);
            if !value.is_finite() {
                return Err(TorusError::NonFiniteSample { index: flat, value });
            }
            values.push(value);
        }
        Ok(Self { grid, values })
    }

    pub fn constant(grid: TorusGrid, c: f64) -> Result<Self> {
        Self::new(grid, vec![c; grid.node_count()])
    }

    pub fn grid(&self) -> &TorusGrid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, flat: usize) -> f64 {
        self.values[flat]
    }

    /// Rectangle-rule integral `(2π/N)^d · Σ values`.
    pub fn integrate(&self) -> f64 {
        self.grid.cell_measure() * pairwise_sum(&self.values)
    }

    /// Measure of the node set where `predicate` holds.
    pub fn measure_where(&self, predicate: impl Fn(f64) -> bool) -> f64 {
        let count = self.values.iter().filter(|&&v| predicate(v)).count();
        self.grid.cell_measure() * count as f64
    }

    pub fn map(&self, op: impl Fn(f64) -> f64) -> SampledField {
        SampledField {
            grid: self.grid,
            values: self.values.iter().map(|&v| op(v)).collect(),
        }
    }

    pub fn zip_with(&self, other: &SampledField, op: impl Fn(f64, f64) -> f64) -> SampledField {
        assert_eq!(self.grid, other.grid, "fields live on different grids");
        SampledField {
            grid: self.grid,
            values: self
                .values
                .iter()
                .zip(other.values.iter())
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    pub fn abs(&self) -> SampledField {
        self.map(f64::abs)
    }

    pub fn scale(&self, factor: f64) -> SampledField {
        self.map(|v| factor * v)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, &v| m.max(v.abs()))
    }

    /// L1 norm `∫ |f|`.
    pub fn l1_norm(&self) -> f64 {
        self.abs().integrate()
    }

    /// Cyclically shift the field by whole nodes along each axis.
    pub fn translate(&self, shift: &[usize]) -> SampledField {
        assert_eq!(shift.len(), self.grid.dim());
        let n = self.grid.points_per_axis();
        let mut values = vec![0.0f64; self.values.len()];
        for flat in 0..self.values.len() {
            let mut idx = self.grid.decompose(flat);
            for (j, &s) in idx.iter_mut().zip(shift.iter()) {
                *j = (*j + n - s % n) % n;
            }
            values[flat] = self.values[self.grid.flatten(&idx)];
        }
        SampledField {
            grid: self.grid,
            values,
        }
    }

    /// Dump as CSV: header `x1,..,xd,value`, one row per node in row-major
    /// order, 17 significant digits.
    pub fn write_csv(&self, out: &mut impl Write) -> io::Result<()> {
        let d = self.grid.dim();
        let header: Vec<String> = (1..=d).map(|i| format!("x{i}")).collect();
        writeln!(out, "{},value", header.join(","))?;
        let h = self.grid.spacing();
        for flat in 0..self.values.len() {
            let idx = self.grid.decompose(flat);
            for &j in &idx {
                write!(out, "{:.16e},", j as f64 * h)?;
            }
            writeln!(out, "{:.16e}", self.values[flat])?;
        }
        Ok(())
    }
}

/// A boolean node mask over a grid; measure is node-counting measure.
#[derive(Debug, Clone, PartialEq)]
pub struct GridMask {
    grid: TorusGrid,
    included: Vec<bool>,
}

impl GridMask {
    pub fn new(grid: TorusGrid, included: Vec<bool>) -> Result<Self> {
        if included.len() != grid.node_count() {
            return Err(TorusError::LengthMismatch {
                expected: grid.node_count(),
                actual: included.len(),
            });
        }
        Ok(Self { grid, included })
    }

    /// The full torus.
    pub fn full(grid: TorusGrid) -> Self {
        Self {
            grid,
            included: vec![true; grid.node_count()],
        }
    }

    pub fn grid(&self) -> &TorusGrid {
        &self.grid
    }

    pub fn included(&self) -> &[bool] {
        &self.included
    }

    pub fn contains(&self, flat: usize) -> bool {
        self.included[flat]
    }

    pub fn count(&self) -> usize {
        self.included.iter().filter(|&&b| b).count()
    }

    pub fn measure(&self) -> f64 {
        self.grid.cell_measure() * self.count() as f64
    }

    pub fn complement_measure(&self) -> f64 {
        self.grid.cell_measure() * (self.grid.node_count() - self.count()) as f64
    }

    /// True if every node of `self` is also in `other`.
    pub fn subset_of(&self, other: &GridMask) -> bool {
        self.included
            .iter()
            .zip(other.included.iter())
            .all(|(&a, &b)| !a || b)
    }
}
