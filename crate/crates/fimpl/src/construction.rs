//! The chain-based construction: aggregate n implications applied to
//! chain-transformed inputs.

use crate::aggregation::Aggregator;
use crate::chain::{is_f_chain, ChainMap};
use crate::implication::Implication;
use crate::numerics::{Grid, Tolerance};
use crate::unary::UnaryMap;
use crate::{Error, Result};

const FCHAIN_VALIDATION_SAMPLES: usize = 1001;

/// The tuple `(F, c1, c2, [I_1..I_n])` evaluated as
/// `F(I_1(c1_1(x), c2_1(y)), ..., I_n(c1_n(x), c2_n(y)))`.
///
/// With valid parts the result is again a fuzzy implication function; the
/// chains are not required to satisfy `F(c(t)) = t` for that, only the
/// monotonicity and boundary conditions enforced by [`ChainMap`]. The
/// classic single-implication form with a shared chain does require the
/// F-chain identity and is exposed as [`Construction::build_classic`].
///
/// Evaluation is literal: inner implications first, then one application
/// of `F`, with no algebraic simplification.
#[derive(Debug, Clone)]
pub struct Construction {
    aggregator: Aggregator,
    antecedent_chain: ChainMap,
    consequent_chain: ChainMap,
    implications: Vec<Implication>,
}

impl Construction {
    pub fn build(
        aggregator: Aggregator,
        antecedent_chain: ChainMap,
        consequent_chain: ChainMap,
        implications: Vec<Implication>,
    ) -> Result<Self> {
        let n = aggregator.arity();
        for (label, found) in [
            ("antecedent chain", antecedent_chain.arity()),
            ("consequent chain", consequent_chain.arity()),
            ("implication vector", implications.len()),
        ] {
            if found != n {
                return Err(Error::invalid(format!(
                    "{label} has arity {found} but the aggregator expects {n}"
                )));
            }
        }
        Ok(Construction { aggregator, antecedent_chain, consequent_chain, implications })
    }

    /// Single implication along a shared chain; requires `c` to be an
    /// F-chain (checked on 1001 samples).
    pub fn build_classic(aggregator: Aggregator, chain: ChainMap, implication: Implication) -> Result<Self> {
        let grid = Grid::new(FCHAIN_VALIDATION_SAMPLES).expect("fixed resolution");
        let report = is_f_chain(&chain, &aggregator, &grid, Tolerance::default())?;
        if !report.is_f_chain {
            return Err(Error::NotFChain {
                deviation: report.worst_deviation,
                at: report.worst_t,
            });
        }
        let implications = vec![implication; aggregator.arity()];
        Construction::build(aggregator, chain.clone(), chain, implications)
    }

    pub fn evaluate(&self, x: f64, y: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&x) || !(0.0..=1.0).contains(&y) {
            return Err(Error::invalid(format!("arguments must lie in [0,1], got ({x}, {y})")));
        }
        Ok(self.eval_unchecked(x, y))
    }

    pub(crate) fn eval_unchecked(&self, x: f64, y: f64) -> f64 {
        let values: Vec<f64> = self
            .implications
            .iter()
            .enumerate()
            .map(|(j, i)| {
                i.eval(self.antecedent_chain.component(j).eval(x), self.consequent_chain.component(j).eval(y))
            })
            .collect();
        self.aggregator.apply_unchecked(&values)
    }

    /// The unary map `x -> I(x, 0)`.
    pub fn natural_negation(&self) -> UnaryMap {
        let con = self.clone();
        UnaryMap::new("I(t, 0)", move |t| con.eval_unchecked(t, 0.0))
    }

    /// Wraps the construction as an [`Implication`] value so the property
    /// engine can consume it.
    pub fn as_implication(&self, name: impl Into<String>) -> Implication {
        let con = self.clone();
        Implication::from_fn(name, move |x, y| con.eval_unchecked(x, y))
    }

    pub fn aggregator(&self) -> &Aggregator {
        &self.aggregator
    }

    pub fn antecedent_chain(&self) -> &ChainMap {
        &self.antecedent_chain
    }

    pub fn consequent_chain(&self) -> &ChainMap {
        &self.consequent_chain
    }

    pub fn implications(&self) -> &[Implication] {
        &self.implications
    }

    pub fn arity(&self) -> usize {
        self.aggregator.arity()
    }
}
