//! Classical construction methods in two interchangeable forms: a
//! closed-form evaluator (`direct`) and the equivalent chain-based
//! construction (`via_construction`).
//!
//! Keeping both routes in one value is the point: the instance invariant
//! is that they agree pointwise, and [`check_equivalence`] measures the
//! worst grid deviation between them.

use serde::Serialize;

use crate::aggregation::Aggregator;
use crate::chain::{validate_thresholds, ChainMap};
use crate::construction::Construction;
use crate::implication::{n_reciprocation, zero_lower, zero_upper, Implication};
use crate::negation::Negation;
use crate::numerics::Grid;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodKind {
    AggMax,
    AggMin,
    AggConvex,
    AggGeneral,
    ContrapUpper,
    ContrapLower,
    ContrapMedium,
    ThresholdHorizontal,
    ThresholdVertical,
    OrdinalSumExample,
}

/// A method instance carrying both evaluation routes.
#[derive(Debug, Clone)]
pub struct MethodInstance {
    kind: MethodKind,
    direct: Implication,
    via_construction: Construction,
}

impl MethodInstance {
    pub fn kind(&self) -> MethodKind {
        self.kind
    }

    pub fn direct(&self) -> &Implication {
        &self.direct
    }

    pub fn via_construction(&self) -> &Construction {
        &self.via_construction
    }
}

#[derive(Debug, Clone)]
pub enum AggregationKind {
    Max,
    Min,
    /// Convex combination with the given coefficients (must sum to 1).
    Convex(Vec<f64>),
    /// An arbitrary aggregation function applied pointwise.
    General(Aggregator),
}

/// Pointwise aggregation of implications; the construction route uses
/// identity chains, so both routes share one expression tree.
pub fn aggregation_method(kind: AggregationKind, impls: Vec<Implication>) -> Result<MethodInstance> {
    if impls.is_empty() {
        return Err(Error::invalid("aggregation of implications needs at least one input"));
    }
    let n = impls.len();
    let (method_kind, aggregator) = match kind {
        AggregationKind::Max => (MethodKind::AggMax, Aggregator::max(n)?),
        AggregationKind::Min => (MethodKind::AggMin, Aggregator::min(n)?),
        AggregationKind::Convex(lambda) => {
            (MethodKind::AggConvex, Aggregator::weighted_mean(&lambda)?)
        }
        AggregationKind::General(f) => {
            if f.arity() != n {
                return Err(Error::ArityMismatch { expected: n, found: f.arity() });
            }
            (MethodKind::AggGeneral, f)
        }
    };
    let direct = {
        let f = aggregator.clone();
        let impls = impls.clone();
        Implication::from_fn(format!("{}[..]", f.name()), move |x, y| {
            let values: Vec<f64> = impls.iter().map(|i| i.eval(x, y)).collect();
            f.apply_unchecked(&values)
        })
    };
    let via_construction = Construction::build(
        aggregator,
        ChainMap::identity(n)?,
        ChainMap::identity(n)?,
        impls,
    )?;
    Ok(MethodInstance { kind: method_kind, direct, via_construction })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContrapKind {
    Upper,
    Lower,
    Medium,
}

/// Contrapositivisation of `I` with respect to `N`.
///
/// Upper: `min(I, I_N)`; lower: `max(I, I_N)`; medium:
/// `min(max(I(x,y), N(x)), max(I_N(x,y), y))`, with `I_N(x,y) = I(N(y), N(x))`.
pub fn contrapositivisation(kind: ContrapKind, i: Implication, n: Negation) -> Result<MethodInstance> {
    let reciprocal = n_reciprocation(&i, &n);
    let (method_kind, label, f, inner) = match kind {
        ContrapKind::Upper => {
            (MethodKind::ContrapUpper, "upper", Aggregator::min(2)?, vec![i, reciprocal])
        }
        ContrapKind::Lower => {
            (MethodKind::ContrapLower, "lower", Aggregator::max(2)?, vec![i, reciprocal])
        }
        ContrapKind::Medium => {
            let first = {
                let i = i.clone();
                let n = n.clone();
                Implication::from_fn(format!("max({}, N(x))", i.name()), move |x, y| {
                    i.eval(x, y).max(n.eval(x))
                })
            };
            let second = {
                let r = reciprocal.clone();
                Implication::from_fn(format!("max({}, y)", r.name()), move |x, y| {
                    r.eval(x, y).max(y)
                })
            };
            (MethodKind::ContrapMedium, "medium", Aggregator::min(2)?, vec![first, second])
        }
    };
    let direct = {
        let f = f.clone();
        let inner = inner.clone();
        Implication::from_fn(format!("contrap({label})"), move |x, y| {
            let values: Vec<f64> = inner.iter().map(|i| i.eval(x, y)).collect();
            f.apply_unchecked(&values)
        })
    };
    let via_construction =
        Construction::build(f, ChainMap::identity(2)?, ChainMap::identity(2)?, inner)?;
    Ok(MethodInstance { kind: method_kind, direct, via_construction })
}

fn threshold_weights(e: &[f64]) -> Vec<f64> {
    e.windows(2).map(|w| w[1] - w[0]).collect()
}

/// Glues `n` implications along the second axis at thresholds `e`.
///
/// Direct form: `1` if `x = 0` or `y = 1`; `e_1 I_1(x, 0)` if `x > 0` and
/// `y = 0`; otherwise, with `j` such that `e_{j-1} < y <= e_j`,
/// `e_{j-1} + (e_j - e_{j-1}) I_j(x, (y - e_{j-1})/(e_j - e_{j-1}))`.
///
/// Construction form: weighted mean with weights `e_i - e_{i-1}`, identity
/// chain on the first argument, threshold chain on the second, and the
/// lower zero transform applied to every implication except the first.
pub fn horizontal_threshold(e: &[f64], impls: Vec<Implication>) -> Result<MethodInstance> {
    validate_thresholds(e)?;
    let n = e.len() - 1;
    if impls.len() != n {
        return Err(Error::ArityMismatch { expected: n, found: impls.len() });
    }
    let direct = {
        let e = e.to_vec();
        let impls = impls.clone();
        Implication::from_fn("hthreshold", move |x, y| {
            if x == 0.0 || y == 1.0 {
                return 1.0;
            }
            if y == 0.0 {
                return e[1] * impls[0].eval(x, 0.0);
            }
            let j = e[1..].iter().position(|&hi| y <= hi).expect("y <= 1") + 1;
            let (lo, hi) = (e[j - 1], e[j]);
            lo + (hi - lo) * impls[j - 1].eval(x, (y - lo) / (hi - lo))
        })
    };
    let transformed: Vec<Implication> = impls
        .iter()
        .enumerate()
        .map(|(idx, i)| if idx == 0 { i.clone() } else { zero_lower(i) })
        .collect();
    let via_construction = Construction::build(
        Aggregator::weighted_mean(&threshold_weights(e))?,
        ChainMap::identity(n)?,
        ChainMap::threshold(e)?,
        transformed,
    )?;
    Ok(MethodInstance { kind: MethodKind::ThresholdHorizontal, direct, via_construction })
}

/// Glues `n` implications along the first axis, hitting the value
/// `theta_i` on each seam `x = e_i`.
///
/// Direct form: `1` if `x = 0` or `y = 1`; `theta_{n-1} I_n(1, y)` if
/// `x = 1` and `y < 1`; otherwise, with `j` such that
/// `e_{j-1} <= x < e_j`,
/// `theta_j + (theta_{j-1} - theta_j) I_j((x - e_{j-1})/(e_j - e_{j-1}), y)`.
///
/// Construction form: weighted mean with weights `theta_{i-1} - theta_i`,
/// threshold chain on the first argument, identity chain on the second,
/// and the upper zero transform applied to every implication except the
/// last.
pub fn vertical_threshold(e: &[f64], theta: &[f64], impls: Vec<Implication>) -> Result<MethodInstance> {
    validate_thresholds(e)?;
    let n = e.len() - 1;
    if theta.len() != e.len() {
        return Err(Error::invalid(format!(
            "theta sequence must have {} entries to match the thresholds, got {}",
            e.len(),
            theta.len()
        )));
    }
    if theta[0] != 1.0 || *theta.last().unwrap() != 0.0 {
        return Err(Error::invalid(format!("theta must run from 1 to 0, got {theta:?}")));
    }
    if theta.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::invalid(format!(
            "theta must be strictly decreasing, got {theta:?}"
        )));
    }
    if impls.len() != n {
        return Err(Error::ArityMismatch { expected: n, found: impls.len() });
    }
    let direct = {
        let e = e.to_vec();
        let theta = theta.to_vec();
        let impls = impls.clone();
        Implication::from_fn("vthreshold", move |x, y| {
            if x == 0.0 || y == 1.0 {
                return 1.0;
            }
            if x == 1.0 {
                return theta[theta.len() - 2] * impls.last().unwrap().eval(1.0, y);
            }
            let j = e[1..].iter().position(|&hi| x < hi).expect("x < 1") + 1;
            let (lo, hi) = (e[j - 1], e[j]);
            theta[j] + (theta[j - 1] - theta[j]) * impls[j - 1].eval((x - lo) / (hi - lo), y)
        })
    };
    let weights: Vec<f64> = theta.windows(2).map(|w| w[0] - w[1]).collect();
    let transformed: Vec<Implication> = impls
        .iter()
        .enumerate()
        .map(|(idx, i)| if idx == n - 1 { i.clone() } else { zero_upper(i) })
        .collect();
    let via_construction = Construction::build(
        Aggregator::weighted_mean(&weights)?,
        ChainMap::threshold(e)?,
        ChainMap::identity(n)?,
        transformed,
    )?;
    Ok(MethodInstance { kind: MethodKind::ThresholdVertical, direct, via_construction })
}

/// Ordinal-sum-style gluing: distinct implications rescaled onto the
/// diagonal subsquares of a breakpoint sequence.
///
/// Direct form, with `x` in block `i` (`x ∈ (e_{i-1}, e_i]`) and `y` in
/// block `j` (`y ∈ [e_{j-1}, e_j)`): `1` above the diagonal (`i < j`);
/// `1 + e_{i-1} - e_i + (e_i - e_{i-1}) I_i(u, v)` on it, with `u, v` the
/// rescaled coordinates; two rescaled implication terms plus constants
/// below it. Construction form: weighted mean with the interval lengths
/// and the threshold chain on both arguments.
pub fn ordinal_sum_example(e: &[f64], impls: Vec<Implication>) -> Result<MethodInstance> {
    validate_thresholds(e)?;
    let n = e.len() - 1;
    if impls.len() != n {
        return Err(Error::ArityMismatch { expected: n, found: impls.len() });
    }
    let direct = {
        let e = e.to_vec();
        let impls = impls.clone();
        Implication::from_fn("osum", move |x, y| {
            if x == 0.0 || y == 1.0 {
                return 1.0;
            }
            let bi = e[1..].iter().position(|&hi| x <= hi).expect("x <= 1") + 1;
            let bj = e[1..].iter().position(|&hi| y < hi).expect("y < 1") + 1;
            if bi < bj {
                return 1.0;
            }
            let (xlo, xhi) = (e[bi - 1], e[bi]);
            let u = (x - xlo) / (xhi - xlo);
            if bi == bj {
                return 1.0 + xlo - xhi + (xhi - xlo) * impls[bi - 1].eval(u, (y - xlo) / (xhi - xlo));
            }
            let (ylo, yhi) = (e[bj - 1], e[bj]);
            1.0 + ylo - xhi
                + (yhi - ylo) * impls[bj - 1].eval(1.0, (y - ylo) / (yhi - ylo))
                + (xhi - xlo) * impls[bi - 1].eval(u, 0.0)
        })
    };
    let chain = ChainMap::threshold(e)?;
    let via_construction = Construction::build(
        Aggregator::weighted_mean(&threshold_weights(e))?,
        chain.clone(),
        chain,
        impls,
    )?;
    Ok(MethodInstance { kind: MethodKind::OrdinalSumExample, direct, via_construction })
}

/// Worst grid deviation between the two routes of a method instance.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct EquivalenceReport {
    pub max_deviation: f64,
    pub worst_point: (f64, f64),
}

pub fn check_equivalence(m: &MethodInstance, grid: &Grid) -> EquivalenceReport {
    let mut max_deviation = 0.0f64;
    let mut worst_point = (0.0, 0.0);
    for (x, y) in grid.pairs() {
        let dev = (m.direct.eval(x, y) - m.via_construction.eval_unchecked(x, y)).abs();
        if dev > max_deviation {
            max_deviation = dev;
            worst_point = (x, y);
        }
    }
    EquivalenceReport { max_deviation, worst_point }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::implication::{godel, kleene_dienes, lukasiewicz, reichenbach};
    use crate::negation::classical_negation;

    const E: [f64; 4] = [0.0, 0.5, 0.75, 1.0];

    fn lrk() -> Vec<Implication> {
        vec![lukasiewicz(), reichenbach(), kleene_dienes()]
    }

    #[test]
    fn aggregation_point_values() {
        let m = aggregation_method(AggregationKind::Max, vec![lukasiewicz(), kleene_dienes()])
            .unwrap();
        assert!((m.direct().eval(0.5, 0.2) - 0.7).abs() < 1e-15);

        let m = aggregation_method(
            AggregationKind::Convex(vec![0.5, 0.5]),
            vec![lukasiewicz(), kleene_dienes()],
        )
        .unwrap();
        for y in [0.0, 0.4, 1.0] {
            assert!((m.direct().eval(1.0, y) - y).abs() < 1e-12);
        }

        let m = aggregation_method(AggregationKind::Min, vec![lukasiewicz()]).unwrap();
        let grid = Grid::new(51).unwrap();
        let lk = lukasiewicz();
        for (x, y) in grid.pairs() {
            assert_eq!(m.direct().eval(x, y), lk.eval(x, y));
        }
    }

    #[test]
    fn aggregation_rejects_bad_weights() {
        assert!(aggregation_method(
            AggregationKind::Convex(vec![0.5, 0.6]),
            vec![lukasiewicz(), kleene_dienes()]
        )
        .is_err());
    }

    #[test]
    fn aggregation_routes_are_bitwise_equal() {
        let grid = Grid::new(101).unwrap();
        for kind in [
            AggregationKind::Max,
            AggregationKind::Min,
            AggregationKind::Convex(vec![0.2, 0.3, 0.5]),
            AggregationKind::General(Aggregator::maxmin_mean(3).unwrap()),
        ] {
            let m = aggregation_method(kind, lrk()).unwrap();
            let report = check_equivalence(&m, &grid);
            assert_eq!(report.max_deviation, 0.0, "{:?}", m.kind());
        }
    }

    #[test]
    fn contrapositivisation_point_values() {
        let nc = classical_negation();
        let m = contrapositivisation(ContrapKind::Upper, kleene_dienes(), nc.clone()).unwrap();
        assert!((m.direct().eval(0.3, 0.6) - 0.7).abs() < 1e-15);

        let m = contrapositivisation(ContrapKind::Medium, godel(), nc.clone()).unwrap();
        assert_eq!(m.direct().eval(1.0, 0.0), 0.0);

        // An implication already contrapositive w.r.t. N equals its lower
        // contrapositivisation pointwise.
        let m = contrapositivisation(ContrapKind::Lower, kleene_dienes(), nc).unwrap();
        let kd = kleene_dienes();
        let grid = Grid::new(101).unwrap();
        for (x, y) in grid.pairs() {
            assert!((m.direct().eval(x, y) - kd.eval(x, y)).abs() < 1e-15);
        }
    }

    #[test]
    fn contrapositivisation_equivalence() {
        let grid = Grid::new(101).unwrap();
        for kind in [ContrapKind::Upper, ContrapKind::Lower, ContrapKind::Medium] {
            let m = contrapositivisation(kind, kleene_dienes(), classical_negation()).unwrap();
            let report = check_equivalence(&m, &grid);
            assert!(report.max_deviation <= 1e-12, "{kind:?}: {}", report.max_deviation);
        }
    }

    #[test]
    fn horizontal_threshold_branch_values() {
        let m = horizontal_threshold(&[0.0, 0.5, 1.0], vec![lukasiewicz(), kleene_dienes()])
            .unwrap();
        // x > 0, y = 0 branch: e_1 * I_1(x, 0).
        assert!((m.direct().eval(0.4, 0.0) - 0.3).abs() < 1e-15);
        for (x, y) in [(0.0, 0.3), (0.7, 1.0), (0.0, 1.0)] {
            assert_eq!(m.direct().eval(x, y), 1.0);
        }

        let m = horizontal_threshold(&E, lrk()).unwrap();
        let rc = reichenbach();
        let v = m.direct().eval(0.5, 0.6);
        let expect = 0.5 + 0.25 * rc.eval(0.5, (0.6 - 0.5) / 0.25);
        assert!((v - expect).abs() < 1e-15);
        // Interior breakpoints evaluate to the threshold exactly.
        for x in [0.1, 0.5, 0.99] {
            assert_eq!(m.direct().eval(x, 0.5), 0.5);
            assert_eq!(m.direct().eval(x, 0.75), 0.75);
        }
    }

    #[test]
    fn horizontal_threshold_equivalence() {
        let m = horizontal_threshold(&E, lrk()).unwrap();
        let grid = Grid::new(101).unwrap();
        let report = check_equivalence(&m, &grid);
        assert!(report.max_deviation <= 1e-12, "{}", report.max_deviation);
    }

    #[test]
    fn vertical_threshold_branch_values() {
        let theta = [1.0, 0.5, 0.0];
        let m = vertical_threshold(&[0.0, 0.5, 1.0], &theta, vec![lukasiewicz(), kleene_dienes()])
            .unwrap();
        // x = 1, y < 1 branch: theta_{n-1} * I_n(1, y).
        assert!((m.direct().eval(1.0, 0.5) - 0.25).abs() < 1e-15);
        for y in [0.0, 0.3, 0.9] {
            assert_eq!(m.direct().eval(0.0, y), 1.0);
        }
        assert_eq!(m.direct().eval(0.6, 1.0), 1.0);
    }

    #[test]
    fn vertical_threshold_corollary_hits_theta_on_seams() {
        let theta = [1.0, 0.5, 0.25, 0.0];
        let m = vertical_threshold(&E, &theta, lrk()).unwrap();
        let grid = Grid::new(101).unwrap();
        for (i, &ei) in E.iter().enumerate().take(3).skip(1) {
            for &y in grid.points().iter().filter(|&&y| y < 1.0) {
                assert_eq!(m.direct().eval(ei, y), theta[i], "seam {ei}, y = {y}");
            }
        }
    }

    #[test]
    fn vertical_threshold_equivalence() {
        let theta = [1.0, 0.5, 0.25, 0.0];
        let m = vertical_threshold(&E, &theta, lrk()).unwrap();
        let grid = Grid::new(101).unwrap();
        let report = check_equivalence(&m, &grid);
        assert!(report.max_deviation <= 1e-12, "{}", report.max_deviation);
    }

    #[test]
    fn vertical_threshold_rejects_bad_theta() {
        let impls = vec![lukasiewicz(), kleene_dienes()];
        assert!(vertical_threshold(&[0.0, 0.5, 1.0], &[1.0, 0.5], impls.clone()).is_err());
        assert!(vertical_threshold(&[0.0, 0.5, 1.0], &[1.0, 0.5, 0.1], impls.clone()).is_err());
        assert!(vertical_threshold(&[0.0, 0.5, 1.0], &[1.0, 1.0, 0.0], impls).is_err());
    }

    #[test]
    fn ordinal_sum_branch_values() {
        let m = ordinal_sum_example(&E, lrk()).unwrap();
        // Above the diagonal: 1.
        assert_eq!(m.direct().eval(0.25, 0.6), 1.0);
        // Diagonal block 1 at (0.25, 0.25): 1 + 0 - 0.5 + 0.5 * LK(0.5, 0.5) = 1.
        assert!((m.direct().eval(0.25, 0.25) - 1.0).abs() < 1e-15);
        for y in [0.0, 0.4, 0.9] {
            assert_eq!(m.direct().eval(0.0, y), 1.0);
        }
    }

    #[test]
    fn ordinal_sum_equivalence() {
        let m = ordinal_sum_example(&E, lrk()).unwrap();
        let grid = Grid::new(101).unwrap();
        let report = check_equivalence(&m, &grid);
        assert!(report.max_deviation <= 1e-12, "{}", report.max_deviation);
    }
}
