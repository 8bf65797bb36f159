//! Syntax tree and canonical formatting.

use std::fmt;

use super::Span;

/// A node with its source span. Equality ignores the span, so documents
/// compare structurally across reformatting.
#[derive(Debug, Clone)]
pub struct Spanned<T> {
    pub node: T,
    pub span: Span,
}

impl<T: PartialEq> PartialEq for Spanned<T> {
    fn eq(&self, other: &Self) -> bool {
        self.node == other.node
    }
}

impl<T> Spanned<T> {
    pub fn new(node: T, span: Span) -> Self {
        Spanned { node, span }
    }
}

/// An ordered list of named bindings.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DefinitionDocument {
    pub declarations: Vec<Declaration>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Declaration {
    pub name: Spanned<String>,
    pub expr: Spanned<Expr>,
}

/// A reference to an earlier binding.
#[derive(Debug, Clone, PartialEq)]
pub struct Ref(pub Spanned<String>);

impl Ref {
    pub fn name(&self) -> &str {
        &self.0.node
    }

    pub fn span(&self) -> Span {
        self.0.span
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogName {
    Lk,
    Kd,
    Rc,
    Gd,
    Gg,
    Rs,
}

impl CatalogName {
    pub fn as_str(&self) -> &'static str {
        match self {
            CatalogName::Lk => "LK",
            CatalogName::Kd => "KD",
            CatalogName::Rc => "RC",
            CatalogName::Gd => "GD",
            CatalogName::Gg => "GG",
            CatalogName::Rs => "RS",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TnormKindName {
    Minimum,
    Product,
    Lukasiewicz,
}

impl TnormKindName {
    pub fn as_str(&self) -> &'static str {
        match self {
            TnormKindName::Minimum => "minimum",
            TnormKindName::Product => "product",
            TnormKindName::Lukasiewicz => "lukasiewicz",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AggKindName {
    Max,
    Min,
    Prod,
    MaxMinMean,
}

impl AggKindName {
    pub fn as_str(&self) -> &'static str {
        match self {
            AggKindName::Max => "max",
            AggKindName::Min => "min",
            AggKindName::Prod => "prod",
            AggKindName::MaxMinMean => "maxminmean",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContrapKindName {
    Upper,
    Lower,
    Medium,
}

impl ContrapKindName {
    pub fn as_str(&self) -> &'static str {
        match self {
            ContrapKindName::Upper => "upper",
            ContrapKindName::Lower => "lower",
            ContrapKindName::Medium => "medium",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum NegationSpec {
    Classical,
    Quadratic,
    Unary(UnaryExpr),
}

#[derive(Debug, Clone, PartialEq)]
pub enum AggMethodForm {
    Max(Vec<Ref>),
    Min(Vec<Ref>),
    Convex(Vec<f64>, Vec<Ref>),
    General(Ref, Vec<Ref>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Negation(NegationSpec),
    Tnorm(TnormKindName),
    Implication(CatalogName),
    Sn { lambda: f64, negation: Ref },
    Recip { implication: Ref, negation: Ref },
    ZeroLower(Ref),
    ZeroUpper(Ref),
    ZeroBoth(Ref),
    Agg { kind: AggKindName, arity: usize },
    Wmean(Vec<f64>),
    Chain(Vec<UnaryExpr>),
    ThresholdChain(Vec<f64>),
    Construct { aggregator: Ref, antecedent: Ref, consequent: Ref, implications: Vec<Ref> },
    Classic { aggregator: Ref, chain: Ref, implication: Ref },
    HThreshold { thresholds: Vec<f64>, implications: Vec<Ref> },
    VThreshold { thresholds: Vec<f64>, theta: Vec<f64>, implications: Vec<Ref> },
    OrdinalSum { thresholds: Vec<f64>, implications: Vec<Ref> },
    Contrap { kind: ContrapKindName, implication: Ref, negation: Ref },
    AggMethod(AggMethodForm),
}

/// Expression over the variable `t`, closed under the arithmetic the
/// builtin chain components need.
#[derive(Debug, Clone, PartialEq)]
pub enum UnaryExpr {
    Var,
    Pi,
    Num(f64),
    Neg(Box<UnaryExpr>),
    Add(Box<UnaryExpr>, Box<UnaryExpr>),
    Sub(Box<UnaryExpr>, Box<UnaryExpr>),
    Mul(Box<UnaryExpr>, Box<UnaryExpr>),
    Div(Box<UnaryExpr>, Box<UnaryExpr>),
    Min(Box<UnaryExpr>, Box<UnaryExpr>),
    Max(Box<UnaryExpr>, Box<UnaryExpr>),
    Sqrt(Box<UnaryExpr>),
    Sin(Box<UnaryExpr>),
    Pow(Box<UnaryExpr>, f64),
    Piecewise(Vec<PieceBranch>),
}

/// One branch of a piecewise expression; the closure flags distinguish
/// `[a,b]`, `(a,b]`, `[a,b)` and `(a,b)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PieceBranch {
    pub lo: f64,
    pub lo_closed: bool,
    pub hi: f64,
    pub hi_closed: bool,
    pub body: UnaryExpr,
}

impl UnaryExpr {
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            UnaryExpr::Var => t,
            UnaryExpr::Pi => std::f64::consts::PI,
            UnaryExpr::Num(v) => *v,
            UnaryExpr::Neg(e) => -e.eval(t),
            UnaryExpr::Add(a, b) => a.eval(t) + b.eval(t),
            UnaryExpr::Sub(a, b) => a.eval(t) - b.eval(t),
            UnaryExpr::Mul(a, b) => a.eval(t) * b.eval(t),
            UnaryExpr::Div(a, b) => a.eval(t) / b.eval(t),
            UnaryExpr::Min(a, b) => a.eval(t).min(b.eval(t)),
            UnaryExpr::Max(a, b) => a.eval(t).max(b.eval(t)),
            UnaryExpr::Sqrt(e) => e.eval(t).sqrt(),
            UnaryExpr::Sin(e) => e.eval(t).sin(),
            UnaryExpr::Pow(e, k) => e.eval(t).powf(*k),
            UnaryExpr::Piecewise(branches) => {
                for b in branches {
                    let above = t > b.lo || (t == b.lo && b.lo_closed);
                    let below = t < b.hi || (t == b.hi && b.hi_closed);
                    if above && below {
                        return b.body.eval(t);
                    }
                }
                // Outside [0,1]; clamp to the nearest branch.
                if t <= branches[0].lo {
                    branches[0].body.eval(t)
                } else {
                    branches.last().unwrap().body.eval(t)
                }
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            UnaryExpr::Add(..) | UnaryExpr::Sub(..) => 1,
            UnaryExpr::Mul(..) | UnaryExpr::Div(..) => 2,
            UnaryExpr::Neg(..) => 3,
            _ => 4,
        }
    }

    fn fmt_child(&self, f: &mut fmt::Formatter<'_>, child: &UnaryExpr, min_prec: u8) -> fmt::Result {
        if child.precedence() < min_prec {
            write!(f, "({child})")
        } else {
            write!(f, "{child}")
        }
    }
}

impl fmt::Display for UnaryExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnaryExpr::Var => write!(f, "t"),
            UnaryExpr::Pi => write!(f, "pi"),
            UnaryExpr::Num(v) => write!(f, "{v}"),
            UnaryExpr::Neg(e) => {
                write!(f, "-")?;
                self.fmt_child(f, e, 3)
            }
            UnaryExpr::Add(a, b) => {
                self.fmt_child(f, a, 1)?;
                write!(f, " + ")?;
                self.fmt_child(f, b, 2)
            }
            UnaryExpr::Sub(a, b) => {
                self.fmt_child(f, a, 1)?;
                write!(f, " - ")?;
                self.fmt_child(f, b, 2)
            }
            UnaryExpr::Mul(a, b) => {
                self.fmt_child(f, a, 2)?;
                write!(f, " * ")?;
                self.fmt_child(f, b, 3)
            }
            UnaryExpr::Div(a, b) => {
                self.fmt_child(f, a, 2)?;
                write!(f, " / ")?;
                self.fmt_child(f, b, 3)
            }
            UnaryExpr::Min(a, b) => write!(f, "min({a}, {b})"),
            UnaryExpr::Max(a, b) => write!(f, "max({a}, {b})"),
            UnaryExpr::Sqrt(e) => write!(f, "sqrt({e})"),
            UnaryExpr::Sin(e) => write!(f, "sin({e})"),
            UnaryExpr::Pow(e, k) => write!(f, "pow({e}, {k})"),
            UnaryExpr::Piecewise(branches) => {
                write!(f, "piecewise(")?;
                for (i, b) in branches.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(
                        f,
                        "{}{}, {}{}: {}",
                        if b.lo_closed { '[' } else { '(' },
                        b.lo,
                        b.hi,
                        if b.hi_closed { ']' } else { ')' },
                        b.body
                    )?;
                }
                write!(f, ")")
            }
        }
    }
}

fn fmt_nums(out: &mut String, nums: &[f64]) {
    for (i, v) in nums.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(&v.to_string());
    }
}

fn fmt_num_list(out: &mut String, nums: &[f64]) {
    out.push('[');
    fmt_nums(out, nums);
    out.push(']');
}

fn fmt_refs(out: &mut String, refs: &[Ref]) {
    out.push('[');
    for (i, r) in refs.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(r.name());
    }
    out.push(']');
}

fn fmt_expr(out: &mut String, expr: &Expr) {
    match expr {
        Expr::Negation(NegationSpec::Classical) => out.push_str("negation(classical)"),
        Expr::Negation(NegationSpec::Quadratic) => out.push_str("negation(quadratic)"),
        Expr::Negation(NegationSpec::Unary(e)) => {
            out.push_str("negation(");
            out.push_str(&e.to_string());
            out.push(')');
        }
        Expr::Tnorm(kind) => {
            out.push_str("tnorm(");
            out.push_str(kind.as_str());
            out.push(')');
        }
        Expr::Implication(name) => {
            out.push_str("implication(");
            out.push_str(name.as_str());
            out.push(')');
        }
        Expr::Sn { lambda, negation } => {
            out.push_str(&format!("sn(yager({lambda}), {})", negation.name()));
        }
        Expr::Recip { implication, negation } => {
            out.push_str(&format!("recip({}, {})", implication.name(), negation.name()));
        }
        Expr::ZeroLower(r) => out.push_str(&format!("zlow({})", r.name())),
        Expr::ZeroUpper(r) => out.push_str(&format!("zup({})", r.name())),
        Expr::ZeroBoth(r) => out.push_str(&format!("zboth({})", r.name())),
        Expr::Agg { kind, arity } => out.push_str(&format!("agg({}, {arity})", kind.as_str())),
        Expr::Wmean(weights) => {
            out.push_str("wmean(");
            fmt_nums(out, weights);
            out.push(')');
        }
        Expr::Chain(components) => {
            out.push_str("chain[");
            for (i, c) in components.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&c.to_string());
            }
            out.push(']');
        }
        Expr::ThresholdChain(e) => {
            out.push_str("thresholdchain(");
            fmt_nums(out, e);
            out.push(')');
        }
        Expr::Construct { aggregator, antecedent, consequent, implications } => {
            out.push_str(&format!(
                "construct({}, {}, {}, ",
                aggregator.name(),
                antecedent.name(),
                consequent.name()
            ));
            fmt_refs(out, implications);
            out.push(')');
        }
        Expr::Classic { aggregator, chain, implication } => {
            out.push_str(&format!(
                "classic({}, {}, {})",
                aggregator.name(),
                chain.name(),
                implication.name()
            ));
        }
        Expr::HThreshold { thresholds, implications } => {
            out.push_str("hthreshold(");
            fmt_num_list(out, thresholds);
            out.push_str(", ");
            fmt_refs(out, implications);
            out.push(')');
        }
        Expr::VThreshold { thresholds, theta, implications } => {
            out.push_str("vthreshold(");
            fmt_num_list(out, thresholds);
            out.push_str(", ");
            fmt_num_list(out, theta);
            out.push_str(", ");
            fmt_refs(out, implications);
            out.push(')');
        }
        Expr::OrdinalSum { thresholds, implications } => {
            out.push_str("osum(");
            fmt_num_list(out, thresholds);
            out.push_str(", ");
            fmt_refs(out, implications);
            out.push(')');
        }
        Expr::Contrap { kind, implication, negation } => {
            out.push_str(&format!(
                "contrap({}, {}, {})",
                kind.as_str(),
                implication.name(),
                negation.name()
            ));
        }
        Expr::AggMethod(form) => match form {
            AggMethodForm::Max(refs) => {
                out.push_str("aggmethod(max, ");
                fmt_refs(out, refs);
                out.push(')');
            }
            AggMethodForm::Min(refs) => {
                out.push_str("aggmethod(min, ");
                fmt_refs(out, refs);
                out.push(')');
            }
            AggMethodForm::Convex(lambda, refs) => {
                out.push_str("aggmethod(convex, ");
                fmt_num_list(out, lambda);
                out.push_str(", ");
                fmt_refs(out, refs);
                out.push(')');
            }
            AggMethodForm::General(f, refs) => {
                out.push_str(&format!("aggmethod(general, {}, ", f.name()));
                fmt_refs(out, refs);
                out.push(')');
            }
        },
    }
}

/// Canonical one-declaration-per-line rendering; reparsing yields a
/// structurally equal document.
pub fn format_document(doc: &DefinitionDocument) -> String {
    let mut out = String::new();
    for decl in &doc.declarations {
        out.push_str(&decl.name.node);
        out.push_str(" = ");
        fmt_expr(&mut out, &decl.expr.node);
        out.push_str(";\n");
    }
    out
}
