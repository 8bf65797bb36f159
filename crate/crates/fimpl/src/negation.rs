//! Fuzzy negations.

use crate::numerics::{Grid, Tolerance};
use crate::unary::UnaryMap;
use crate::{Error, Result};

const VALIDATION_SAMPLES: usize = 1001;

/// A fuzzy negation: non-increasing with `N(0) = 1` and `N(1) = 0`.
///
/// `is_strong` records whether `N(N(x)) = x` held on the validation
/// samples; it is measured at construction rather than trusted.
#[derive(Debug, Clone)]
pub struct Negation {
    map: UnaryMap,
    is_strong: bool,
}

impl Negation {
    /// Validates `map` as a fuzzy negation on 1001 samples.
    pub fn new(map: UnaryMap) -> Result<Self> {
        let tol = Tolerance::default();
        let grid = Grid::new(VALIDATION_SAMPLES).expect("fixed resolution");
        if !tol.close(map.eval(0.0), 1.0) {
            return Err(Error::invalid(format!(
                "negation {}: N(0) = {} but must be 1",
                map.name(),
                map.eval(0.0)
            )));
        }
        if !tol.close(map.eval(1.0), 0.0) {
            return Err(Error::invalid(format!(
                "negation {}: N(1) = {} but must be 0",
                map.name(),
                map.eval(1.0)
            )));
        }
        let mut prev = map.eval(0.0);
        for &t in &grid.points()[1..] {
            let v = map.eval(t);
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::InvalidChain {
                    reason: format!("negation {} leaves [0,1]", map.name()),
                    witness: t,
                });
            }
            if v > prev + tol.eps_mono {
                return Err(Error::InvalidChain {
                    reason: format!("negation {} is increasing", map.name()),
                    witness: t,
                });
            }
            prev = v;
        }
        let is_strong = grid
            .points()
            .iter()
            .all(|&t| tol.close(map.eval(map.eval(t)), t));
        Ok(Negation { map, is_strong })
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.map.eval(t)
    }

    /// Whether `N о N = id` held on the validation samples.
    pub fn is_strong(&self) -> bool {
        self.is_strong
    }

    pub fn name(&self) -> &str {
        self.map.name()
    }

    pub fn as_unary(&self) -> &UnaryMap {
        &self.map
    }
}

/// The classical negation `N(x) = 1 - x` (an involution).
pub fn classical_negation() -> Negation {
    Negation::new(UnaryMap::new("1 - t", |t| 1.0 - t)).expect("classical negation is valid")
}

/// The non-strong negation `N(x) = 1 - x^2`.
pub fn quadratic_negation() -> Negation {
    Negation::new(UnaryMap::new("1 - t^2", |t| 1.0 - t * t)).expect("quadratic negation is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_boundary_and_strongness() {
        let n = classical_negation();
        assert_eq!(n.eval(0.0), 1.0);
        assert_eq!(n.eval(1.0), 0.0);
        assert_eq!(n.eval(0.3), 0.7);
        assert!(n.is_strong());
    }

    #[test]
    fn quadratic_is_not_strong() {
        let n = quadratic_negation();
        assert_eq!(n.eval(0.0), 1.0);
        assert!((n.eval(0.8) - 0.36).abs() < 1e-15);
        // N(N(0.5)) = 1 - 0.75^2 = 0.4375, not 0.5.
        assert!((n.eval(n.eval(0.5)) - 0.4375).abs() < 1e-15);
        assert!(!n.is_strong());
    }

    #[test]
    fn rejects_increasing_map() {
        let err = Negation::new(UnaryMap::identity()).unwrap_err();
        assert!(matches!(err, Error::InvalidArgument(_)));
    }

    #[test]
    fn rejects_wrong_boundary() {
        let err = Negation::new(UnaryMap::new("0.5", |_| 0.5)).unwrap_err();
        assert!(matches!(err, Error::InvalidArgument(_)));
    }

    #[test]
    fn negation_invariants_on_dense_grid() {
        let grid = Grid::new(1001).unwrap();
        for n in [classical_negation(), quadratic_negation()] {
            assert_eq!(n.eval(0.0), 1.0);
            assert_eq!(n.eval(1.0), 0.0);
            let mut prev = f64::INFINITY;
            for &t in grid.points() {
                let v = n.eval(t);
                assert!(v <= prev);
                prev = v;
            }
        }
    }
}
