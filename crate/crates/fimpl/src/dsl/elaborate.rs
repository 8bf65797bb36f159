//! Materialises parsed documents through the operator factories.

use indexmap::IndexMap;

use crate::aggregation::Aggregator;
use crate::chain::ChainMap;
use crate::construction::Construction;
use crate::implication::{self, Implication};
use crate::methods::{self, AggregationKind, ContrapKind, MethodInstance};
use crate::negation::{classical_negation, quadratic_negation, Negation};
use crate::tnorm::{yager_tconorm, ContinuousTNorm};
use crate::unary::UnaryMap;

use super::ast::*;
use super::{Diagnostic, Span};

/// A materialised binding.
#[derive(Debug, Clone)]
pub enum Bound {
    Negation(Negation),
    Tnorm(ContinuousTNorm),
    Implication(Implication),
    Aggregator(Aggregator),
    Chain(ChainMap),
    Construction(Construction),
    Method(MethodInstance),
}

impl Bound {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Bound::Negation(_) => "negation",
            Bound::Tnorm(_) => "t-norm",
            Bound::Implication(_) => "implication",
            Bound::Aggregator(_) => "aggregator",
            Bound::Chain(_) => "chain",
            Bound::Construction(_) => "construction",
            Bound::Method(_) => "method",
        }
    }
}

/// Name-to-value map in declaration order.
#[derive(Debug, Clone, Default)]
pub struct Bindings {
    map: IndexMap<String, Bound>,
}

impl Bindings {
    pub fn get(&self, name: &str) -> Option<&Bound> {
        self.map.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Bound)> {
        self.map.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

fn err(span: Span, message: impl Into<String>) -> Diagnostic {
    Diagnostic::new(span, message)
}

pub(crate) fn compile_unary(expr: &UnaryExpr) -> UnaryMap {
    let name = expr.to_string();
    let expr = expr.clone();
    UnaryMap::new(name, move |t| expr.eval(t))
}

struct Elaborator {
    bindings: Bindings,
}

impl Elaborator {
    fn lookup(&self, r: &Ref) -> Result<&Bound, Diagnostic> {
        self.bindings
            .get(r.name())
            .ok_or_else(|| err(r.span(), format!("unresolved reference {:?}", r.name())))
    }

    fn negation(&self, r: &Ref) -> Result<Negation, Diagnostic> {
        match self.lookup(r)? {
            Bound::Negation(n) => Ok(n.clone()),
            other => Err(err(
                r.span(),
                format!("{:?} is a {}, expected a negation", r.name(), other.kind_name()),
            )),
        }
    }

    fn implication(&self, r: &Ref) -> Result<Implication, Diagnostic> {
        match self.lookup(r)? {
            Bound::Implication(i) => Ok(i.clone()),
            other => Err(err(
                r.span(),
                format!("{:?} is a {}, expected an implication", r.name(), other.kind_name()),
            )),
        }
    }

    fn implications(&self, refs: &[Ref]) -> Result<Vec<Implication>, Diagnostic> {
        refs.iter().map(|r| self.implication(r)).collect()
    }

    fn aggregator(&self, r: &Ref) -> Result<Aggregator, Diagnostic> {
        match self.lookup(r)? {
            Bound::Aggregator(f) => Ok(f.clone()),
            other => Err(err(
                r.span(),
                format!("{:?} is a {}, expected an aggregator", r.name(), other.kind_name()),
            )),
        }
    }

    fn chain(&self, r: &Ref) -> Result<ChainMap, Diagnostic> {
        match self.lookup(r)? {
            Bound::Chain(c) => Ok(c.clone()),
            other => Err(err(
                r.span(),
                format!("{:?} is a {}, expected a chain", r.name(), other.kind_name()),
            )),
        }
    }

    fn bind(&mut self, decl: &Declaration) -> Result<Bound, Diagnostic> {
        let span = decl.expr.span;
        let fail = |e: crate::Error| err(span, e.to_string());
        Ok(match &decl.expr.node {
            Expr::Negation(spec) => Bound::Negation(match spec {
                NegationSpec::Classical => classical_negation(),
                NegationSpec::Quadratic => quadratic_negation(),
                NegationSpec::Unary(e) => Negation::new(compile_unary(e)).map_err(fail)?,
            }),
            Expr::Tnorm(kind) => Bound::Tnorm(match kind {
                TnormKindName::Minimum => ContinuousTNorm::Minimum,
                TnormKindName::Product => ContinuousTNorm::Product,
                TnormKindName::Lukasiewicz => ContinuousTNorm::Lukasiewicz,
            }),
            Expr::Implication(name) => {
                Bound::Implication(implication::catalog(name.as_str()).map_err(fail)?)
            }
            Expr::Sn { lambda, negation } => {
                let s = yager_tconorm(*lambda).map_err(fail)?;
                let n = self.negation(negation)?;
                Bound::Implication(implication::sn_implication(s, n))
            }
            Expr::Recip { implication: i, negation } => {
                let i = self.implication(i)?;
                let n = self.negation(negation)?;
                Bound::Implication(implication::n_reciprocation(&i, &n))
            }
            Expr::ZeroLower(r) => Bound::Implication(implication::zero_lower(&self.implication(r)?)),
            Expr::ZeroUpper(r) => Bound::Implication(implication::zero_upper(&self.implication(r)?)),
            Expr::ZeroBoth(r) => Bound::Implication(implication::zero_both(&self.implication(r)?)),
            Expr::Agg { kind, arity } => Bound::Aggregator(
                match kind {
                    AggKindName::Max => Aggregator::max(*arity),
                    AggKindName::Min => Aggregator::min(*arity),
                    AggKindName::Prod => Aggregator::product(*arity),
                    AggKindName::MaxMinMean => Aggregator::maxmin_mean(*arity),
                }
                .map_err(fail)?,
            ),
            Expr::Wmean(weights) => {
                Bound::Aggregator(Aggregator::weighted_mean(weights).map_err(fail)?)
            }
            Expr::Chain(components) => {
                let maps = components.iter().map(compile_unary).collect();
                Bound::Chain(ChainMap::new(maps).map_err(fail)?)
            }
            Expr::ThresholdChain(thresholds) => {
                Bound::Chain(ChainMap::threshold(thresholds).map_err(fail)?)
            }
            Expr::Construct { aggregator, antecedent, consequent, implications } => {
                let f = self.aggregator(aggregator)?;
                let c1 = self.chain(antecedent)?;
                let c2 = self.chain(consequent)?;
                let impls = self.implications(implications)?;
                Bound::Construction(Construction::build(f, c1, c2, impls).map_err(fail)?)
            }
            Expr::Classic { aggregator, chain, implication: i } => {
                let f = self.aggregator(aggregator)?;
                let c = self.chain(chain)?;
                let i = self.implication(i)?;
                Bound::Construction(Construction::build_classic(f, c, i).map_err(fail)?)
            }
            Expr::HThreshold { thresholds, implications } => {
                let impls = self.implications(implications)?;
                Bound::Method(methods::horizontal_threshold(thresholds, impls).map_err(fail)?)
            }
            Expr::VThreshold { thresholds, theta, implications } => {
                let impls = self.implications(implications)?;
                Bound::Method(
                    methods::vertical_threshold(thresholds, theta, impls).map_err(fail)?,
                )
            }
            Expr::OrdinalSum { thresholds, implications } => {
                let impls = self.implications(implications)?;
                Bound::Method(methods::ordinal_sum_example(thresholds, impls).map_err(fail)?)
            }
            Expr::Contrap { kind, implication: i, negation } => {
                let i = self.implication(i)?;
                let n = self.negation(negation)?;
                let kind = match kind {
                    ContrapKindName::Upper => ContrapKind::Upper,
                    ContrapKindName::Lower => ContrapKind::Lower,
                    ContrapKindName::Medium => ContrapKind::Medium,
                };
                Bound::Method(methods::contrapositivisation(kind, i, n).map_err(fail)?)
            }
            Expr::AggMethod(form) => {
                let (kind, refs) = match form {
                    AggMethodForm::Max(refs) => (AggregationKind::Max, refs),
                    AggMethodForm::Min(refs) => (AggregationKind::Min, refs),
                    AggMethodForm::Convex(lambda, refs) => {
                        (AggregationKind::Convex(lambda.clone()), refs)
                    }
                    AggMethodForm::General(f, refs) => {
                        (AggregationKind::General(self.aggregator(f)?), refs)
                    }
                };
                let impls = self.implications(refs)?;
                Bound::Method(methods::aggregation_method(kind, impls).map_err(fail)?)
            }
        })
    }
}

/// Builds every binding in order; the first factory or resolution error
/// aborts elaboration, reported at the offending declaration.
pub fn elaborate(doc: &DefinitionDocument) -> Result<Bindings, Diagnostic> {
    let mut elaborator = Elaborator { bindings: Bindings::default() };
    for decl in &doc.declarations {
        if elaborator.bindings.get(&decl.name.node).is_some() {
            return Err(err(decl.name.span, format!("duplicate binding {:?}", decl.name.node)));
        }
        let bound = elaborator.bind(decl)?;
        elaborator.bindings.map.insert(decl.name.node.clone(), bound);
    }
    Ok(elaborator.bindings)
}
