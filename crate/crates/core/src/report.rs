//! Verification reports and their serialized forms.
//!
//! JSON schema: `{experiment, params, per_n, sup_metric, trend_slope,
//! calibration, saturated}`. The CSV twin is the two-column plot data
//! `(n, metric)`. Serialization is deterministic: ordered struct fields,
//! B-tree params, shortest-round-trip floats.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::{Result, TorusError};

/// One experiment's swept metric plus summary statistics.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct VerificationReport {
    pub experiment: String,
    pub params: BTreeMap<String, String>,
    pub per_n: Vec<(usize, f64)>,
    pub sup_metric: f64,
    pub trend_slope: f64,
    pub calibration: Option<(f64, f64)>,
    pub saturated: bool,
}

impl VerificationReport {
    /// Build from a swept series; computes the sup and the least-squares
    /// trend slope over the last half of the sweep.
    pub fn from_series(
        experiment: impl Into<String>,
        params: BTreeMap<String, String>,
        per_n: Vec<(usize, f64)>,
        calibration: Option<(f64, f64)>,
        saturated: bool,
    ) -> Self {
        debug_assert!(per_n.windows(2).all(|w| w[0].0 < w[1].0), "per_n not sorted");
        let sup_metric = per_n.iter().fold(0.0f64, |m, &(_, v)| m.max(v));
        let trend_slope = trend_slope_last_half(&per_n);
        Self {
            experiment: experiment.into(),
            params,
            per_n,
            sup_metric,
            trend_slope,
            calibration,
            saturated,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    /// Two-column plot data `(n, metric)`, one row per sweep entry.
    pub fn plot_csv(&self) -> String {
        let mut out = String::from("n,metric\n");
        for &(n, v) in &self.per_n {
            out.push_str(&format!("{n},{v:.16e}\n"));
        }
        out
    }
}

/// Parse the two-column plot CSV back into a series.
pub fn parse_plot_csv(text: &str) -> Result<Vec<(usize, f64)>> {
    let mut lines = text.lines();
    match lines.next() {
        Some("n,metric") => {}
        other => {
            return Err(TorusError::InvalidParameter(format!(
                "bad plot CSV header: {other:?}"
            )))
        }
    }
    let mut series = Vec::new();
    for line in lines {
        if line.is_empty() {
            continue;
        }
        let (n, v) = line.split_once(',').ok_or_else(|| {
            TorusError::InvalidParameter(format!("bad plot CSV row: {line:?}"))
        })?;
        let n = n
            .parse::<usize>()
            .map_err(|e| TorusError::InvalidParameter(format!("bad n in {line:?}: {e}")))?;
        let v = v
            .parse::<f64>()
            .map_err(|e| TorusError::InvalidParameter(format!("bad metric in {line:?}: {e}")))?;
        series.push((n, v));
    }
    Ok(series)
}

/// Least-squares slope of `value` against `n` over the last half of the
/// sweep (the "uniformly bounded in n" proxy). Zero when fewer than two
/// points remain or any value is non-finite.
pub fn trend_slope_last_half(series: &[(usize, f64)]) -> f64 {
    let tail = &series[series.len() - series.len().div_ceil(2)..];
    if tail.len() < 2 || tail.iter().any(|&(_, v)| !v.is_finite()) {
        return 0.0;
    }
    let n = tail.len() as f64;
    let mean_x = tail.iter().map(|&(x, _)| x as f64).sum::<f64>() / n;
    let mean_y = tail.iter().map(|&(_, y)| y).sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for &(x, y) in tail {
        let dx = x as f64 - mean_x;
        num += dx * (y - mean_y);
        den += dx * dx;
    }
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}
