//! Shared sampling, tolerance and grid utilities.

use crate::{Error, Result};

/// Equally spaced samples of `[0,1]` including both endpoints.
///
/// Every boundary condition of interest (the implication corner values,
/// left neutrality at x = 1, lowest truth/falsity at {0,1}) lives on the
/// boundary, so grids always contain 0 and 1 exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    resolution: usize,
    points: Vec<f64>,
}

impl Grid {
    /// Builds a grid with `resolution` points per axis, `resolution >= 2`.
    pub fn new(resolution: usize) -> Result<Self> {
        if resolution < 2 {
            return Err(Error::invalid(format!(
                "grid resolution must be at least 2, got {resolution}"
            )));
        }
        let last = (resolution - 1) as f64;
        let points = (0..resolution).map(|i| i as f64 / last).collect();
        Ok(Grid { resolution, points })
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    /// Iterates over the cartesian product of the grid with itself.
    pub fn pairs(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.points
            .iter()
            .flat_map(move |&x| self.points.iter().map(move |&y| (x, y)))
    }
}

/// Comparison tolerances used by all grid checks.
///
/// `eps_eq` bounds absolute differences in equality checks; `eps_mono` is
/// the slack allowed when checking non-strict monotonicity on consecutive
/// samples (zero by default, i.e. exact).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub eps_eq: f64,
    pub eps_mono: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { eps_eq: 1e-12, eps_mono: 0.0 }
    }
}

impl Tolerance {
    pub fn new(eps_eq: f64, eps_mono: f64) -> Result<Self> {
        if !(eps_eq >= 0.0) || !(eps_mono >= 0.0) {
            return Err(Error::invalid("tolerances must be non-negative"));
        }
        Ok(Tolerance { eps_eq, eps_mono })
    }

    /// Tolerance with a given equality epsilon and zero monotonicity slack.
    pub fn with_eps(eps_eq: f64) -> Result<Self> {
        Tolerance::new(eps_eq, 0.0)
    }

    /// `|a - b| <= eps_eq`, assuming finite inputs.
    pub(crate) fn close(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.eps_eq
    }
}

/// Absolute comparison of two finite reals under `tol.eps_eq`.
pub fn approx_eq(a: f64, b: f64, tol: Tolerance) -> Result<bool> {
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::invalid(format!(
            "approx_eq requires finite inputs, got {a} and {b}"
        )));
    }
    Ok((a - b).abs() <= tol.eps_eq)
}
