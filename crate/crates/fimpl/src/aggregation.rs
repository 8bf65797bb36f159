//! n-ary aggregation functions with the structural metadata consumed by
//! the sufficient-condition checkers.

use std::fmt;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::negation::Negation;
use crate::numerics::{Grid, Tolerance};
use crate::{Error, Result};

/// Analytic knowledge about a structural feature of an aggregator.
///
/// Grid search can certify the presence of a multiplier but never its
/// absence, so builtins carry the answer analytically and `Unknown` marks
/// everything else; the sufficiency checkers treat `Unknown` as
/// "condition not established".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultiplierKind {
    /// A point with `F(x) = 1` and some coordinate different from 1.
    Unit,
    /// A point with `F(x) = 0` and some coordinate different from 0.
    Zero,
}

type AggregatorFn = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// A monotone function `[0,1]^n -> [0,1]` with `F(0,...,0) = 0` and
/// `F(1,...,1) = 1`.
#[derive(Clone)]
pub struct Aggregator {
    name: String,
    arity: usize,
    f: AggregatorFn,
    unit_multipliers: TriState,
    zero_multipliers: TriState,
    idempotent_on_diagonal: bool,
}

impl Aggregator {
    /// Wraps an arbitrary function with no analytic knowledge attached.
    pub fn from_fn(
        name: impl Into<String>,
        arity: usize,
        f: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        if arity == 0 {
            return Err(Error::invalid("aggregator arity must be at least 1"));
        }
        Ok(Aggregator {
            name: name.into(),
            arity,
            f: Arc::new(f),
            unit_multipliers: TriState::Unknown,
            zero_multipliers: TriState::Unknown,
            idempotent_on_diagonal: false,
        })
    }

    pub fn max(arity: usize) -> Result<Self> {
        let mut a = Aggregator::from_fn("max", arity, |xs| {
            xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
        })?;
        a.unit_multipliers = if arity >= 2 { TriState::Yes } else { TriState::No };
        a.zero_multipliers = TriState::No;
        a.idempotent_on_diagonal = true;
        Ok(a)
    }

    pub fn min(arity: usize) -> Result<Self> {
        let mut a = Aggregator::from_fn("min", arity, |xs| {
            xs.iter().cloned().fold(f64::INFINITY, f64::min)
        })?;
        a.unit_multipliers = TriState::No;
        a.zero_multipliers = if arity >= 2 { TriState::Yes } else { TriState::No };
        a.idempotent_on_diagonal = true;
        Ok(a)
    }

    pub fn product(arity: usize) -> Result<Self> {
        let mut a = Aggregator::from_fn("prod", arity, |xs| xs.iter().product())?;
        a.unit_multipliers = TriState::No;
        a.zero_multipliers = if arity >= 2 { TriState::Yes } else { TriState::No };
        a.idempotent_on_diagonal = arity == 1;
        Ok(a)
    }

    /// Weighted arithmetic mean; weights must lie in `[0,1]` and sum to 1
    /// within the default equality tolerance (no silent renormalisation).
    pub fn weighted_mean(weights: &[f64]) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::invalid("weighted mean needs at least one weight"));
        }
        if weights.iter().any(|w| !(0.0..=1.0).contains(w)) {
            return Err(Error::invalid(format!("weights must lie in [0,1], got {weights:?}")));
        }
        let sum: f64 = weights.iter().sum();
        let tol = Tolerance::default();
        if !tol.close(sum, 1.0) {
            return Err(Error::invalid(format!("weights must sum to 1, got {sum}")));
        }
        let w = weights.to_vec();
        let has_zero_weight = w.contains(&0.0);
        let mut a = Aggregator::from_fn(
            format!("wmean{w:?}"),
            w.len(),
            move |xs| w.iter().zip(xs).fold(0.0, |acc, (wi, xi)| acc + wi * xi),
        )?;
        let multipliers = if has_zero_weight { TriState::Yes } else { TriState::No };
        a.unit_multipliers = multipliers;
        a.zero_multipliers = multipliers;
        a.idempotent_on_diagonal = true;
        Ok(a)
    }

    /// `(max + min) / 2` of three arguments.
    pub fn maxmin_mean(arity: usize) -> Result<Self> {
        if arity != 3 {
            return Err(Error::invalid(format!("maxmin mean is ternary, got arity {arity}")));
        }
        let mut a = Aggregator::from_fn("maxminmean", 3, |xs| {
            let hi = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let lo = xs.iter().cloned().fold(f64::INFINITY, f64::min);
            (hi + lo) / 2.0
        })?;
        a.unit_multipliers = TriState::No;
        a.zero_multipliers = TriState::No;
        a.idempotent_on_diagonal = true;
        Ok(a)
    }

    pub fn apply(&self, xs: &[f64]) -> Result<f64> {
        if xs.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: xs.len() });
        }
        Ok((self.f)(xs))
    }

    pub(crate) fn apply_unchecked(&self, xs: &[f64]) -> f64 {
        debug_assert_eq!(xs.len(), self.arity);
        (self.f)(xs)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn unit_multipliers(&self) -> TriState {
        self.unit_multipliers
    }

    pub fn zero_multipliers(&self) -> TriState {
        self.zero_multipliers
    }

    pub fn idempotent_on_diagonal(&self) -> bool {
        self.idempotent_on_diagonal
    }
}

impl fmt::Debug for Aggregator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Aggregator({}, arity {})", self.name, self.arity)
    }
}

/// Outcome of a self N-duality sweep.
#[derive(Debug, Clone)]
pub struct DualityReport {
    pub self_dual: bool,
    pub worst_deviation: f64,
    pub witness: Option<Vec<f64>>,
}

const RANDOM_SAMPLES: usize = 20_000;
const SAMPLE_SEED: u64 = 0x5eed_f00d;

fn for_each_tuple(points: &[f64], arity: usize, mut visit: impl FnMut(&[f64])) {
    let mut index = vec![0usize; arity];
    let mut tuple = vec![points[0]; arity];
    loop {
        for (slot, &i) in tuple.iter_mut().zip(index.iter()) {
            *slot = points[i];
        }
        visit(&tuple);
        let mut pos = arity;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            index[pos] += 1;
            if index[pos] < points.len() {
                break;
            }
            index[pos] = 0;
        }
    }
}

/// Checks `F(N(x_1),...,N(x_n)) = N(F(x))` on the full n-fold grid
/// product for arity <= 3, and on a fixed-seed random sample otherwise.
pub fn is_self_n_dual(f: &Aggregator, n: &Negation, grid: &Grid, tol: Tolerance) -> DualityReport {
    let mut worst = 0.0f64;
    let mut witness = None;
    let mut negated = vec![0.0; f.arity()];
    let mut probe = |xs: &[f64], worst: &mut f64, witness: &mut Option<Vec<f64>>| {
        for (slot, &x) in negated.iter_mut().zip(xs) {
            *slot = n.eval(x);
        }
        let lhs = f.apply_unchecked(&negated);
        let rhs = n.eval(f.apply_unchecked(xs));
        let dev = (lhs - rhs).abs();
        if dev > *worst {
            *worst = dev;
            if dev > tol.eps_eq {
                *witness = Some(xs.to_vec());
            }
        }
    };
    if f.arity() <= 3 {
        for_each_tuple(grid.points(), f.arity(), |xs| probe(xs, &mut worst, &mut witness));
    } else {
        let mut rng = StdRng::seed_from_u64(SAMPLE_SEED);
        let mut xs = vec![0.0; f.arity()];
        for _ in 0..RANDOM_SAMPLES {
            for slot in xs.iter_mut() {
                *slot = grid.points()[rng.gen_range(0..grid.points().len())];
            }
            probe(&xs, &mut worst, &mut witness);
        }
    }
    DualityReport { self_dual: worst <= tol.eps_eq, worst_deviation: worst, witness }
}

/// Searches the grid for a unit or zero multiplier of `F`.
///
/// Exhaustive for arity <= 3, fixed-seed random sampling otherwise; a
/// `None` result is grid-relative, not a proof of absence.
pub fn find_multiplier(
    f: &Aggregator,
    which: MultiplierKind,
    grid: &Grid,
    tol: Tolerance,
) -> Option<Vec<f64>> {
    let (target, off) = match which {
        MultiplierKind::Unit => (1.0, 1.0),
        MultiplierKind::Zero => (0.0, 0.0),
    };
    let mut found = None;
    let probe = |xs: &[f64], found: &mut Option<Vec<f64>>| {
        if found.is_none()
            && tol.close(f.apply_unchecked(xs), target)
            && xs.iter().any(|&x| x != off)
        {
            *found = Some(xs.to_vec());
        }
    };
    if f.arity() <= 3 {
        for_each_tuple(grid.points(), f.arity(), |xs| probe(xs, &mut found));
    } else {
        let mut rng = StdRng::seed_from_u64(SAMPLE_SEED);
        let mut xs = vec![0.0; f.arity()];
        for _ in 0..RANDOM_SAMPLES {
            for slot in xs.iter_mut() {
                *slot = grid.points()[rng.gen_range(0..grid.points().len())];
            }
            probe(&xs, &mut found);
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::negation::classical_negation;

    fn builtins() -> Vec<Aggregator> {
        vec![
            Aggregator::max(2).unwrap(),
            Aggregator::min(2).unwrap(),
            Aggregator::product(2).unwrap(),
            Aggregator::weighted_mean(&[0.5, 0.25, 0.25]).unwrap(),
            Aggregator::maxmin_mean(3).unwrap(),
        ]
    }

    #[test]
    fn point_values() {
        let mean = Aggregator::weighted_mean(&[1.0 / 3.0; 3]).unwrap();
        assert!((mean.apply(&[0.3, 0.6, 0.9]).unwrap() - 0.6).abs() < 1e-12);
        let mm = Aggregator::maxmin_mean(3).unwrap();
        assert!((mm.apply(&[0.2, 0.5, 0.8]).unwrap() - 0.5).abs() < 1e-15);
        let max = Aggregator::max(2).unwrap();
        assert_eq!(max.apply(&[1.0, 0.5]).unwrap(), 1.0);
    }

    #[test]
    fn weighted_mean_rejects_bad_weights() {
        assert!(Aggregator::weighted_mean(&[0.5, 0.6]).is_err());
        assert!(Aggregator::weighted_mean(&[1.5, -0.5]).is_err());
        assert!(Aggregator::weighted_mean(&[]).is_err());
    }

    #[test]
    fn maxmin_mean_requires_arity_three() {
        assert!(Aggregator::maxmin_mean(2).is_err());
        assert!(Aggregator::maxmin_mean(3).is_ok());
    }

    #[test]
    fn apply_rejects_wrong_arity() {
        let max = Aggregator::max(2).unwrap();
        assert!(matches!(
            max.apply(&[0.1]),
            Err(Error::ArityMismatch { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn boundary_and_monotonicity_on_grids() {
        let grid = Grid::new(21).unwrap();
        for f in builtins() {
            let zeros = vec![0.0; f.arity()];
            let ones = vec![1.0; f.arity()];
            assert_eq!(f.apply(&zeros).unwrap(), 0.0, "{}", f.name());
            assert!((f.apply(&ones).unwrap() - 1.0).abs() < 1e-12, "{}", f.name());
            // Monotone in each coordinate over the full product grid.
            for_each_tuple(grid.points(), f.arity(), |xs| {
                let base = f.apply_unchecked(xs);
                let mut bumped = xs.to_vec();
                for k in 0..f.arity() {
                    let idx = grid.points().iter().position(|&p| p == xs[k]).unwrap();
                    if idx + 1 < grid.points().len() {
                        let saved = bumped[k];
                        bumped[k] = grid.points()[idx + 1];
                        assert!(
                            f.apply_unchecked(&bumped) >= base,
                            "{} not monotone at {xs:?} coord {k}",
                            f.name()
                        );
                        bumped[k] = saved;
                    }
                }
            });
        }
    }

    #[test]
    fn diagonal_idempotence() {
        let grid = Grid::new(1001).unwrap();
        for f in builtins() {
            if !f.idempotent_on_diagonal() {
                continue;
            }
            for &x in grid.points() {
                let diag = vec![x; f.arity()];
                assert!(
                    (f.apply(&diag).unwrap() - x).abs() < 1e-12,
                    "{} not idempotent at {x}",
                    f.name()
                );
            }
        }
    }

    #[test]
    fn self_duality_verdicts() {
        let grid = Grid::new(21).unwrap();
        let tol = Tolerance::default();
        let nc = classical_negation();
        let mm = Aggregator::maxmin_mean(3).unwrap();
        assert!(is_self_n_dual(&mm, &nc, &grid, tol).self_dual);
        // Weighted means are self N_c-dual as well.
        let wm = Aggregator::weighted_mean(&[0.2, 0.3, 0.5]).unwrap();
        assert!(is_self_n_dual(&wm, &nc, &grid, tol).self_dual);

        let prod = Aggregator::product(2).unwrap();
        let report = is_self_n_dual(&prod, &nc, &grid, tol);
        assert!(!report.self_dual);
        assert!(report.witness.is_some());
        // (0.5, 0.5): F(N) = 0.25 vs N(F) = 0.75.
        assert!(report.worst_deviation >= 0.5 - 1e-12);

        let min = Aggregator::min(2).unwrap();
        let report = is_self_n_dual(&min, &nc, &grid, tol);
        assert!(!report.self_dual);
        // witness (0.2, 0.8): min(N) = 0.2 vs N(min) = 0.8.
        let lhs = min.apply(&[nc.eval(0.2), nc.eval(0.8)]).unwrap();
        let rhs = nc.eval(min.apply(&[0.2, 0.8]).unwrap());
        assert!((lhs - 0.2).abs() < 1e-15 && (rhs - 0.8).abs() < 1e-15);
    }

    #[test]
    fn multiplier_search_agrees_with_analytic_flags() {
        let grid = Grid::new(21).unwrap();
        let tol = Tolerance::default();
        for f in builtins() {
            for (kind, flag) in [
                (MultiplierKind::Unit, f.unit_multipliers()),
                (MultiplierKind::Zero, f.zero_multipliers()),
            ] {
                let witness = find_multiplier(&f, kind, &grid, tol);
                match flag {
                    TriState::No => assert!(
                        witness.is_none(),
                        "{}: found {witness:?} despite flag No",
                        f.name()
                    ),
                    TriState::Yes => assert!(
                        witness.is_some(),
                        "{}: no {kind:?} multiplier found despite flag Yes",
                        f.name()
                    ),
                    TriState::Unknown => {}
                }
            }
        }
    }

    #[test]
    fn multiplier_examples() {
        let grid = Grid::new(21).unwrap();
        let tol = Tolerance::default();
        let max = Aggregator::max(2).unwrap();
        let w = find_multiplier(&max, MultiplierKind::Unit, &grid, tol).unwrap();
        assert!(w.contains(&1.0) && w.iter().any(|&x| x != 1.0));

        let wm = Aggregator::weighted_mean(&[0.4, 0.6]).unwrap();
        assert!(find_multiplier(&wm, MultiplierKind::Unit, &grid, tol).is_none());

        let prod = Aggregator::product(2).unwrap();
        let w = find_multiplier(&prod, MultiplierKind::Zero, &grid, tol).unwrap();
        assert!(w.contains(&0.0) && w.iter().any(|&x| x != 0.0));

        // A zero weight opens both kinds of multiplier.
        let degenerate = Aggregator::weighted_mean(&[1.0, 0.0]).unwrap();
        assert!(find_multiplier(&degenerate, MultiplierKind::Unit, &grid, tol).is_some());
        assert!(find_multiplier(&degenerate, MultiplierKind::Zero, &grid, tol).is_some());
    }

    #[test]
    fn randomized_search_used_for_higher_arity() {
        let grid = Grid::new(5).unwrap();
        let tol = Tolerance::default();
        let max4 = Aggregator::max(4).unwrap();
        assert!(find_multiplier(&max4, MultiplierKind::Unit, &grid, tol).is_some());
        let wm4 = Aggregator::weighted_mean(&[0.25; 4]).unwrap();
        let nc = classical_negation();
        assert!(is_self_n_dual(&wm4, &nc, &grid, tol).self_dual);
    }
}
