//! Continuous t-norms, their real powers, and t-conorms.

use std::fmt;
use std::sync::Arc;

use crate::{Error, Result};

/// The three supported continuous t-norm families.
///
/// Restricting to these keeps the r-th power `x_T^(r)` in closed form:
/// minimum is idempotent (all powers fixed), product and Łukasiewicz have
/// the additive generators `-ln x` and `1 - x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContinuousTNorm {
    Minimum,
    Product,
    Lukasiewicz,
}

impl ContinuousTNorm {
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        match self {
            ContinuousTNorm::Minimum => x.min(y),
            ContinuousTNorm::Product => x * y,
            ContinuousTNorm::Lukasiewicz => (x + y - 1.0).max(0.0),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ContinuousTNorm::Minimum => "minimum",
            ContinuousTNorm::Product => "product",
            ContinuousTNorm::Lukasiewicz => "lukasiewicz",
        }
    }
}

impl fmt::Display for ContinuousTNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The r-th power of `x` under `T`, `r > 0`.
///
/// Closed forms: minimum -> `x`; product -> `x^r`;
/// Łukasiewicz -> `max(0, 1 - r(1 - x))`.
pub fn tnorm_power(tnorm: ContinuousTNorm, x: f64, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::invalid(format!("t-norm power exponent must be positive, got {r}")));
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::invalid(format!("t-norm power base must lie in [0,1], got {x}")));
    }
    Ok(match tnorm {
        ContinuousTNorm::Minimum => x,
        ContinuousTNorm::Product => x.powf(r),
        ContinuousTNorm::Lukasiewicz => (1.0 - r * (1.0 - x)).max(0.0),
    })
}

/// An evaluable binary operator used as a t-conorm.
#[derive(Clone)]
pub struct TConorm {
    name: String,
    f: Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>,
}

impl TConorm {
    pub fn new(name: impl Into<String>, f: impl Fn(f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        TConorm { name: name.into(), f: Arc::new(f) }
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        (self.f)(x, y)
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl fmt::Debug for TConorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TConorm({})", self.name)
    }
}

/// The Yager t-conorm `S(x,y) = min(1, (x^λ + y^λ)^(1/λ))`, `λ > 0`.
pub fn yager_tconorm(lambda: f64) -> Result<TConorm> {
    if !(lambda > 0.0) {
        return Err(Error::invalid(format!("Yager parameter must be positive, got {lambda}")));
    }
    Ok(TConorm::new(format!("yager({lambda})"), move |x, y| {
        (x.powf(lambda) + y.powf(lambda)).powf(1.0 / lambda).min(1.0)
    }))
}
