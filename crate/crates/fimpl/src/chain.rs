//! Increasing mappings `c : [0,1] -> [0,1]^n` with boundary conditions,
//! plus the F-chain test `F(c(t)) = t`.

use std::f64::consts::FRAC_PI_2;

use crate::aggregation::Aggregator;
use crate::numerics::{Grid, Tolerance};
use crate::unary::UnaryMap;
use crate::{Error, Result};

const VALIDATION_SAMPLES: usize = 1001;

/// An ordered vector of unary maps representing one chain.
///
/// Validation is sampling-based (1001 points per component): values stay
/// in `[0,1]`, each component is non-decreasing on consecutive samples,
/// `c(0) = (0,...,0)` and `c(1) = (1,...,1)`. A map that misbehaves only
/// between samples can pass; the builtin component families are
/// closed-form monotone, which keeps that gap theoretical.
#[derive(Debug, Clone)]
pub struct ChainMap {
    components: Vec<UnaryMap>,
}

impl ChainMap {
    pub fn new(components: Vec<UnaryMap>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::invalid("a chain needs at least one component"));
        }
        let tol = Tolerance::default();
        let grid = Grid::new(VALIDATION_SAMPLES).expect("fixed resolution");
        for c in &components {
            let mut prev = c.eval(0.0);
            for &t in &grid.points()[1..] {
                let v = c.eval(t);
                if v < -tol.eps_eq || v > 1.0 + tol.eps_eq {
                    return Err(Error::InvalidChain {
                        reason: format!("component {} leaves [0,1] (value {v})", c.name()),
                        witness: t,
                    });
                }
                if v < prev - tol.eps_mono {
                    return Err(Error::InvalidChain {
                        reason: format!("component {} is decreasing", c.name()),
                        witness: t,
                    });
                }
                prev = v;
            }
            if !tol.close(c.eval(0.0), 0.0) {
                return Err(Error::InvalidChain {
                    reason: format!("component {} has c(0) = {}, expected 0", c.name(), c.eval(0.0)),
                    witness: 0.0,
                });
            }
            if !tol.close(c.eval(1.0), 1.0) {
                return Err(Error::InvalidChain {
                    reason: format!("component {} has c(1) = {}, expected 1", c.name(), c.eval(1.0)),
                    witness: 1.0,
                });
            }
        }
        Ok(ChainMap { components })
    }

    /// The n-component chain whose every component is the identity.
    pub fn identity(arity: usize) -> Result<Self> {
        ChainMap::new((0..arity).map(|_| UnaryMap::identity()).collect())
    }

    /// Piecewise-linear components rescaling each `[e_{i-1}, e_i]` to
    /// `[0,1]`: component i is 0 up to `e_{i-1}`, the linear ramp on
    /// `(e_{i-1}, e_i]`, and 1 above. Intervals are left-open and
    /// right-closed, so branch selection at a breakpoint is exact.
    pub fn threshold(thresholds: &[f64]) -> Result<Self> {
        validate_thresholds(thresholds)?;
        let components = thresholds
            .windows(2)
            .map(|w| {
                let (lo, hi) = (w[0], w[1]);
                UnaryMap::new(format!("ramp[{lo},{hi}]"), move |x| {
                    if x <= lo {
                        0.0
                    } else if x <= hi {
                        (x - lo) / (hi - lo)
                    } else {
                        1.0
                    }
                })
            })
            .collect();
        ChainMap::new(components)
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[UnaryMap] {
        &self.components
    }

    pub fn component(&self, j: usize) -> &UnaryMap {
        &self.components[j]
    }

    pub(crate) fn eval_into(&self, t: f64, out: &mut Vec<f64>) {
        out.clear();
        out.extend(self.components.iter().map(|c| c.eval(t)));
    }
}

/// Strictly increasing sequence from 0 to 1, at least one interval.
pub(crate) fn validate_thresholds(e: &[f64]) -> Result<()> {
    if e.len() < 2 {
        return Err(Error::invalid("threshold sequence needs at least two entries"));
    }
    if e[0] != 0.0 || *e.last().unwrap() != 1.0 {
        return Err(Error::invalid(format!(
            "threshold sequence must run from 0 to 1, got {e:?}"
        )));
    }
    if e.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid(format!(
            "threshold sequence must be strictly increasing, got {e:?}"
        )));
    }
    Ok(())
}

/// Verdict of the pointwise test `F(c(t)) = t` over a grid.
#[derive(Debug, Clone, Copy)]
pub struct FChainReport {
    pub is_f_chain: bool,
    pub worst_deviation: f64,
    pub worst_t: f64,
}

/// Sweeps `|F(c(t)) - t|` over the grid.
pub fn is_f_chain(
    chain: &ChainMap,
    f: &Aggregator,
    grid: &Grid,
    tol: Tolerance,
) -> Result<FChainReport> {
    if chain.arity() != f.arity() {
        return Err(Error::ArityMismatch { expected: f.arity(), found: chain.arity() });
    }
    let mut buf = Vec::with_capacity(chain.arity());
    let mut worst = 0.0f64;
    let mut worst_t = 0.0;
    for &t in grid.points() {
        chain.eval_into(t, &mut buf);
        let dev = (f.apply_unchecked(&buf) - t).abs();
        if dev > worst {
            worst = dev;
            worst_t = t;
        }
    }
    Ok(FChainReport { is_f_chain: worst <= tol.eps_eq, worst_deviation: worst, worst_t })
}

/// `t^k` for `k > 0`.
pub fn power_map(k: f64) -> Result<UnaryMap> {
    if !(k > 0.0) {
        return Err(Error::invalid(format!("power exponent must be positive, got {k}")));
    }
    Ok(UnaryMap::new(format!("t^{k}"), move |t| t.powf(k)))
}

/// `t^(i+j)`: component j of chain i in the pure-power two-chain family;
/// commutes with the powers of the product t-norm.
pub fn power_pair_map(i: u32, j: u32) -> Result<UnaryMap> {
    power_map((i + j) as f64)
}

/// `sin^2(pi t / 2)`; commutes with the classical negation.
pub fn sin2_map() -> UnaryMap {
    UnaryMap::new("sin^2(pi t / 2)", |t| {
        let s = (FRAC_PI_2 * t).sin();
        s * s
    })
}

/// Piecewise-linear ramp: `t` on `[0, 0.5]`, `2t - 0.5` on `(0.5, 0.75]`,
/// `1` above.
pub fn accelerated_ramp() -> UnaryMap {
    UnaryMap::new("ramp(t | 2t-0.5 | 1)", |t| {
        if t <= 0.5 {
            t
        } else if t <= 0.75 {
            2.0 * t - 0.5
        } else {
            1.0
        }
    })
}
