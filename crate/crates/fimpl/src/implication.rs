//! Base fuzzy implication functions and implication-to-implication
//! transforms.
//!
//! A fuzzy implication function is a binary operator on `[0,1]^2` that is
//! non-increasing in the first argument, non-decreasing in the second, and
//! takes the corner values `I(0,0) = I(1,1) = 1`, `I(1,0) = 0`. The type
//! does not re-verify these at construction; the `properties` module
//! provides the grid checks.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::negation::Negation;
use crate::properties::Property;
use crate::tnorm::TConorm;
use crate::{Error, Result};

/// An evaluable binary operator on the unit square claimed to satisfy the
/// implication axioms.
///
/// `analytic_flags` records properties known without verification; catalog
/// entries seed only what the sources state explicitly, everything else is
/// established empirically by the property engine.
#[derive(Clone)]
pub struct Implication {
    name: String,
    f: Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>,
    analytic_flags: BTreeSet<Property>,
}

impl Implication {
    pub fn from_fn(
        name: impl Into<String>,
        f: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Implication { name: name.into(), f: Arc::new(f), analytic_flags: BTreeSet::new() }
    }

    fn with_flags(mut self, flags: &[Property]) -> Self {
        self.analytic_flags = flags.iter().copied().collect();
        self
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        (self.f)(x, y)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn analytic_flags(&self) -> &BTreeSet<Property> {
        &self.analytic_flags
    }
}

impl fmt::Debug for Implication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Implication({})", self.name)
    }
}

/// Łukasiewicz implication `min(1, 1 - x + y)`.
pub fn lukasiewicz() -> Implication {
    Implication::from_fn("LK", |x, y| (1.0 - x + y).min(1.0))
        .with_flags(&[Property::Np, Property::Cb])
}

/// Kleene-Dienes implication `max(1 - x, y)`.
pub fn kleene_dienes() -> Implication {
    Implication::from_fn("KD", |x, y| (1.0 - x).max(y)).with_flags(&[Property::Np, Property::Cb])
}

/// Reichenbach implication `1 - x + xy`.
pub fn reichenbach() -> Implication {
    Implication::from_fn("RC", |x, y| 1.0 - x + x * y)
}

/// Gödel implication: `1` if `x <= y`, else `y`.
pub fn godel() -> Implication {
    Implication::from_fn("GD", |x, y| if x <= y { 1.0 } else { y })
}

/// Goguen implication: `1` if `x <= y`, else `y / x`.
pub fn goguen() -> Implication {
    Implication::from_fn("GG", |x, y| if x <= y { 1.0 } else { y / x })
}

/// Rescher implication: `1` if `x <= y`, else `0`.
///
/// Crisp order test; invariant under the powers of every supported
/// continuous t-norm, which makes it the catalog's power-invariance
/// fixture.
pub fn rescher() -> Implication {
    Implication::from_fn("RS", |x, y| if x <= y { 1.0 } else { 0.0 })
}

/// (S,N)-implication `S(N(x), y)` from a t-conorm and a fuzzy negation.
pub fn sn_implication(s: TConorm, n: Negation) -> Implication {
    let name = format!("sn({}, {})", s.name(), n.name());
    Implication::from_fn(name, move |x, y| s.eval(n.eval(x), y))
}

/// Looks up a parameterless catalog implication by its short name.
pub fn catalog(name: &str) -> Result<Implication> {
    match name {
        "LK" => Ok(lukasiewicz()),
        "KD" => Ok(kleene_dienes()),
        "RC" => Ok(reichenbach()),
        "GD" => Ok(godel()),
        "GG" => Ok(goguen()),
        "RS" => Ok(rescher()),
        other => Err(Error::invalid(format!(
            "unknown implication {other:?}; expected LK, KD, RC, GD, GG or RS (sn takes parameters)"
        ))),
    }
}

/// Names of the parameterless catalog implications, in listing order.
pub const CATALOG_NAMES: [&str; 6] = ["LK", "KD", "RC", "GD", "GG", "RS"];

/// N-reciprocation `I_N(x,y) = I(N(y), N(x))`.
pub fn n_reciprocation(i: &Implication, n: &Negation) -> Implication {
    let name = format!("recip({}, {})", i.name(), n.name());
    let i = i.clone();
    let n = n.clone();
    Implication::from_fn(name, move |x, y| i.eval(n.eval(y), n.eval(x)))
}

/// Sends `I(x, 0)` to zero for `x > 0`, leaving everything else alone.
pub fn zero_lower(i: &Implication) -> Implication {
    let name = format!("zlow({})", i.name());
    let i = i.clone();
    Implication::from_fn(name, move |x, y| {
        if x > 0.0 && y == 0.0 {
            0.0
        } else {
            i.eval(x, y)
        }
    })
}

/// Sends `I(1, y)` to zero for `y < 1`, leaving everything else alone.
pub fn zero_upper(i: &Implication) -> Implication {
    let name = format!("zup({})", i.name());
    let i = i.clone();
    Implication::from_fn(name, move |x, y| {
        if x == 1.0 && y < 1.0 {
            0.0
        } else {
            i.eval(x, y)
        }
    })
}

/// Applies both zero transforms at once.
pub fn zero_both(i: &Implication) -> Implication {
    let name = format!("zboth({})", i.name());
    let i = i.clone();
    Implication::from_fn(name, move |x, y| {
        if (x == 1.0 && y < 1.0) || (x > 0.0 && y == 0.0) {
            0.0
        } else {
            i.eval(x, y)
        }
    })
}
