use std::collections::HashSet;

use super::ast::*;
use super::lexer::{tokenize, Token, TokenKind};
use super::{Diagnostic, Span};

/// Words with grammatical meaning; not usable as binding names.
const RESERVED: &[&str] = &[
    "negation", "classical", "quadratic", "tnorm", "minimum", "product", "lukasiewicz",
    "implication", "sn", "yager", "recip", "zlow", "zup", "zboth", "agg", "max", "min", "prod",
    "maxminmean", "wmean", "chain", "thresholdchain", "construct", "classic", "hthreshold",
    "vthreshold", "osum", "contrap", "upper", "lower", "medium", "aggmethod", "convex", "general",
    "t", "pi", "sqrt", "sin", "pow", "piecewise", "LK", "KD", "RC", "GD", "GG", "RS",
];

/// Parses a document, collecting every declaration-level diagnostic by
/// resynchronising at the next `;`.
pub fn parse(source: &str) -> Result<DefinitionDocument, Vec<Diagnostic>> {
    let tokens = match tokenize(source) {
        Ok(tokens) => tokens,
        Err(diag) => return Err(vec![diag]),
    };
    let mut parser = Parser { tokens, pos: 0, declared: HashSet::new() };
    let mut declarations = Vec::new();
    let mut diagnostics = Vec::new();
    loop {
        while parser.eat(&TokenKind::Semi) {}
        if parser.at_eof() {
            break;
        }
        match parser.declaration() {
            Ok(decl) => declarations.push(decl),
            Err(diag) => {
                diagnostics.push(diag);
                parser.recover();
            }
        }
    }
    if diagnostics.is_empty() {
        Ok(DefinitionDocument { declarations })
    } else {
        Err(diagnostics)
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    declared: HashSet<String>,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn peek_ahead(&self, n: usize) -> &Token {
        &self.tokens[(self.pos + n).min(self.tokens.len() - 1)]
    }

    fn advance(&mut self) -> Token {
        let token = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        token
    }

    fn at_eof(&self) -> bool {
        matches!(self.peek().kind, TokenKind::Eof)
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if &self.peek().kind == kind {
            self.advance();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: TokenKind) -> Result<Token, Diagnostic> {
        if self.peek().kind == kind {
            Ok(self.advance())
        } else {
            Err(Diagnostic::new(
                self.peek().span,
                format!("expected {}, found {}", kind.describe(), self.peek().kind.describe()),
            ))
        }
    }

    fn prev_end(&self) -> usize {
        self.tokens[self.pos.saturating_sub(1)].span.end
    }

    fn recover(&mut self) {
        while !self.at_eof() {
            if matches!(self.advance().kind, TokenKind::Semi) {
                return;
            }
        }
    }

    fn ident(&mut self) -> Result<(String, Span), Diagnostic> {
        match self.peek().kind.clone() {
            TokenKind::Ident(name) => {
                let span = self.advance().span;
                Ok((name, span))
            }
            other => Err(Diagnostic::new(
                self.peek().span,
                format!("expected identifier, found {}", other.describe()),
            )),
        }
    }

    /// A number literal, or a simple fraction `a/b` of two literals.
    fn num(&mut self) -> Result<f64, Diagnostic> {
        let first = match self.peek().kind {
            TokenKind::Number(v) => {
                self.advance();
                v
            }
            _ => {
                return Err(Diagnostic::new(
                    self.peek().span,
                    format!("expected number, found {}", self.peek().kind.describe()),
                ))
            }
        };
        if self.peek().kind == TokenKind::Slash {
            if let TokenKind::Number(denom) = self.peek_ahead(1).kind {
                let slash_span = self.peek().span;
                self.advance();
                self.advance();
                if denom == 0.0 {
                    return Err(Diagnostic::new(slash_span, "fraction with zero denominator"));
                }
                return Ok(first / denom);
            }
        }
        Ok(first)
    }

    fn integer(&mut self) -> Result<usize, Diagnostic> {
        let span = self.peek().span;
        let v = self.num()?;
        if v.fract() != 0.0 || !(1.0..=64.0).contains(&v) {
            return Err(Diagnostic::new(span, format!("expected a small positive integer, got {v}")));
        }
        Ok(v as usize)
    }

    fn reference(&mut self) -> Result<Ref, Diagnostic> {
        let (name, span) = self.ident()?;
        if RESERVED.contains(&name.as_str()) {
            return Err(Diagnostic::new(span, format!("{name:?} is a reserved word, not a binding")));
        }
        if !self.declared.contains(&name) {
            return Err(Diagnostic::new(span, format!("unresolved reference {name:?}")));
        }
        Ok(Ref(Spanned::new(name, span)))
    }

    fn declaration(&mut self) -> Result<Declaration, Diagnostic> {
        let (name, name_span) = self.ident()?;
        if RESERVED.contains(&name.as_str()) {
            return Err(Diagnostic::new(
                name_span,
                format!("{name:?} is a reserved word and cannot be bound"),
            ));
        }
        if self.declared.contains(&name) {
            return Err(Diagnostic::new(name_span, format!("duplicate binding {name:?}")));
        }
        self.expect(TokenKind::Equals)?;
        let expr_start = self.peek().span;
        let expr = self.expression()?;
        let expr_span = Span {
            start: expr_start.start,
            end: self.prev_end(),
            line: expr_start.line,
            col: expr_start.col,
        };
        self.expect(TokenKind::Semi)?;
        self.declared.insert(name.clone());
        Ok(Declaration {
            name: Spanned::new(name, name_span),
            expr: Spanned::new(expr, expr_span),
        })
    }

    fn num_list_paren(&mut self) -> Result<Vec<f64>, Diagnostic> {
        let mut out = vec![self.num()?];
        while self.eat(&TokenKind::Comma) {
            out.push(self.num()?);
        }
        Ok(out)
    }

    fn num_list_bracketed(&mut self) -> Result<Vec<f64>, Diagnostic> {
        self.expect(TokenKind::LBracket)?;
        let out = self.num_list_paren()?;
        self.expect(TokenKind::RBracket)?;
        Ok(out)
    }

    fn ref_list_bracketed(&mut self) -> Result<Vec<Ref>, Diagnostic> {
        self.expect(TokenKind::LBracket)?;
        let mut out = vec![self.reference()?];
        while self.eat(&TokenKind::Comma) {
            out.push(self.reference()?);
        }
        self.expect(TokenKind::RBracket)?;
        Ok(out)
    }

    fn expression(&mut self) -> Result<Expr, Diagnostic> {
        let (head, head_span) = self.ident()?;
        match head.as_str() {
            "negation" => {
                self.expect(TokenKind::LParen)?;
                let spec = match (&self.peek().kind, &self.peek_ahead(1).kind) {
                    (TokenKind::Ident(word), TokenKind::RParen) if word == "classical" => {
                        self.advance();
                        NegationSpec::Classical
                    }
                    (TokenKind::Ident(word), TokenKind::RParen) if word == "quadratic" => {
                        self.advance();
                        NegationSpec::Quadratic
                    }
                    _ => NegationSpec::Unary(self.unary_expr()?),
                };
                self.expect(TokenKind::RParen)?;
                Ok(Expr::Negation(spec))
            }
            "tnorm" => {
                self.expect(TokenKind::LParen)?;
                let (kind, span) = self.ident()?;
                let kind = match kind.as_str() {
                    "minimum" => TnormKindName::Minimum,
                    "product" => TnormKindName::Product,
                    "lukasiewicz" => TnormKindName::Lukasiewicz,
                    other => {
                        return Err(Diagnostic::new(
                            span,
                            format!("unknown t-norm {other:?} (minimum, product, lukasiewicz)"),
                        ))
                    }
                };
                self.expect(TokenKind::RParen)?;
                Ok(Expr::Tnorm(kind))
            }
            "implication" => {
                self.expect(TokenKind::LParen)?;
                let (name, span) = self.ident()?;
                let name = match name.as_str() {
                    "LK" => CatalogName::Lk,
                    "KD" => CatalogName::Kd,
                    "RC" => CatalogName::Rc,
                    "GD" => CatalogName::Gd,
                    "GG" => CatalogName::Gg,
                    "RS" => CatalogName::Rs,
                    other => {
                        return Err(Diagnostic::new(
                            span,
                            format!("unknown implication {other:?} (LK, KD, RC, GD, GG, RS)"),
                        ))
                    }
                };
                self.expect(TokenKind::RParen)?;
                Ok(Expr::Implication(name))
            }
            "sn" => {
                self.expect(TokenKind::LParen)?;
                let (word, span) = self.ident()?;
                if word != "yager" {
                    return Err(Diagnostic::new(span, "sn expects a yager(..) t-conorm"));
                }
                self.expect(TokenKind::LParen)?;
                let lambda = self.num()?;
                self.expect(TokenKind::RParen)?;
                self.expect(TokenKind::Comma)?;
                let negation = self.reference()?;
                self.expect(TokenKind::RParen)?;
                Ok(Expr::Sn { lambda, negation })
            }
            "recip" => {
                self.expect(TokenKind::LParen)?;
                let implication = self.reference()?;
                self.expect(TokenKind::Comma)?;
                let negation = self.reference()?;
                self.expect(TokenKind::RParen)?;
                Ok(Expr::Recip { implication, negation })
            }
            "zlow" | "zup" | "zboth" => {
                self.expect(TokenKind::LParen)?;
                let r = self.reference()?;
                self.expect(TokenKind::RParen)?;
                Ok(match head.as_str() {
                    "zlow" => Expr::ZeroLower(r),
                    "zup" => Expr::ZeroUpper(r),
                    _ => Expr::ZeroBoth(r),
                })
            }
            "agg" => {
                self.expect(TokenKind::LParen)?;
                let (kind, span) = self.ident()?;
                let kind = match kind.as_str() {
                    "max" => AggKindName::Max,
                    "min" => AggKindName::Min,
                    "prod" => AggKindName::Prod,
                    "maxminmean" => AggKindName::MaxMinMean,
                    other => {
                        return Err(Diagnostic::new(
                            span,
                            format!("unknown aggregator {other:?} (max, min, prod, maxminmean)"),
                        ))
                    }
                };
                self.expect(TokenKind::Comma)?;
                let arity = self.integer()?;
                self.expect(TokenKind::RParen)?;
                Ok(Expr::Agg { kind, arity })
            }
            "wmean" => {
                self.expect(TokenKind::LParen)?;
                let weights = self.num_list_paren()?;
                self.expect(TokenKind::RParen)?;
                Ok(Expr::Wmean(weights))
            }
            "chain" => {
                self.expect(TokenKind::LBracket)?;
                let mut components = vec![self.unary_expr()?];
                while self.eat(&TokenKind::Comma) {
                    components.push(self.unary_expr()?);
                }
                self.expect(TokenKind::RBracket)?;
                Ok(Expr::Chain(components))
            }
            "thresholdchain" => {
                self.expect(TokenKind::LParen)?;
                let thresholds = self.num_list_paren()?;
                self.expect(TokenKind::RParen)?;
                Ok(Expr::ThresholdChain(thresholds))
            }
            "construct" => {
                self.expect(TokenKind::LParen)?;
                let aggregator = self.reference()?;
                self.expect(TokenKind::Comma)?;
                let antecedent = self.reference()?;
                self.expect(TokenKind::Comma)?;
                let consequent = self.reference()?;
                self.expect(TokenKind::Comma)?;
                let implications = self.ref_list_bracketed()?;
                self.expect(TokenKind::RParen)?;
                Ok(Expr::Construct { aggregator, antecedent, consequent, implications })
            }
            "classic" => {
                self.expect(TokenKind::LParen)?;
                let aggregator = self.reference()?;
                self.expect(TokenKind::Comma)?;
                let chain = self.reference()?;
                self.expect(TokenKind::Comma)?;
                let implication = self.reference()?;
                self.expect(TokenKind::RParen)?;
                Ok(Expr::Classic { aggregator, chain, implication })
            }
            "hthreshold" => {
                self.expect(TokenKind::LParen)?;
                let thresholds = self.num_list_bracketed()?;
                self.expect(TokenKind::Comma)?;
                let implications = self.ref_list_bracketed()?;
                self.expect(TokenKind::RParen)?;
                Ok(Expr::HThreshold { thresholds, implications })
            }
            "vthreshold" => {
                self.expect(TokenKind::LParen)?;
                let thresholds = self.num_list_bracketed()?;
                self.expect(TokenKind::Comma)?;
                let theta = self.num_list_bracketed()?;
                self.expect(TokenKind::Comma)?;
                let implications = self.ref_list_bracketed()?;
                self.expect(TokenKind::RParen)?;
                Ok(Expr::VThreshold { thresholds, theta, implications })
            }
            "osum" => {
                self.expect(TokenKind::LParen)?;
                let thresholds = self.num_list_bracketed()?;
                self.expect(TokenKind::Comma)?;
                let implications = self.ref_list_bracketed()?;
                self.expect(TokenKind::RParen)?;
                Ok(Expr::OrdinalSum { thresholds, implications })
            }
            "contrap" => {
                self.expect(TokenKind::LParen)?;
                let (kind, span) = self.ident()?;
                let kind = match kind.as_str() {
                    "upper" => ContrapKindName::Upper,
                    "lower" => ContrapKindName::Lower,
                    "medium" => ContrapKindName::Medium,
                    other => {
                        return Err(Diagnostic::new(
                            span,
                            format!("unknown contrapositivisation {other:?} (upper, lower, medium)"),
                        ))
                    }
                };
                self.expect(TokenKind::Comma)?;
                let implication = self.reference()?;
                self.expect(TokenKind::Comma)?;
                let negation = self.reference()?;
                self.expect(TokenKind::RParen)?;
                Ok(Expr::Contrap { kind, implication, negation })
            }
            "aggmethod" => {
                self.expect(TokenKind::LParen)?;
                let (kind, span) = self.ident()?;
                let form = match kind.as_str() {
                    "max" => {
                        self.expect(TokenKind::Comma)?;
                        AggMethodForm::Max(self.ref_list_bracketed()?)
                    }
                    "min" => {
                        self.expect(TokenKind::Comma)?;
                        AggMethodForm::Min(self.ref_list_bracketed()?)
                    }
                    "convex" => {
                        self.expect(TokenKind::Comma)?;
                        let lambda = self.num_list_bracketed()?;
                        self.expect(TokenKind::Comma)?;
                        AggMethodForm::Convex(lambda, self.ref_list_bracketed()?)
                    }
                    "general" => {
                        self.expect(TokenKind::Comma)?;
                        let f = self.reference()?;
                        self.expect(TokenKind::Comma)?;
                        AggMethodForm::General(f, self.ref_list_bracketed()?)
                    }
                    other => {
                        return Err(Diagnostic::new(
                            span,
                            format!("unknown method {other:?} (max, min, convex, general)"),
                        ))
                    }
                };
                self.expect(TokenKind::RParen)?;
                Ok(Expr::AggMethod(form))
            }
            other => Err(Diagnostic::new(
                head_span,
                format!("unknown form {other:?} at the start of a definition"),
            )),
        }
    }

    fn unary_expr(&mut self) -> Result<UnaryExpr, Diagnostic> {
        self.sum()
    }

    fn sum(&mut self) -> Result<UnaryExpr, Diagnostic> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(&TokenKind::Plus) {
                lhs = UnaryExpr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(&TokenKind::Minus) {
                lhs = UnaryExpr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<UnaryExpr, Diagnostic> {
        let mut lhs = self.signed_factor()?;
        loop {
            if self.eat(&TokenKind::Star) {
                lhs = UnaryExpr::Mul(Box::new(lhs), Box::new(self.signed_factor()?));
            } else if self.eat(&TokenKind::Slash) {
                lhs = UnaryExpr::Div(Box::new(lhs), Box::new(self.signed_factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn signed_factor(&mut self) -> Result<UnaryExpr, Diagnostic> {
        if self.eat(&TokenKind::Minus) {
            Ok(UnaryExpr::Neg(Box::new(self.signed_factor()?)))
        } else {
            self.factor()
        }
    }

    fn factor(&mut self) -> Result<UnaryExpr, Diagnostic> {
        match self.peek().kind.clone() {
            TokenKind::Number(v) => {
                self.advance();
                Ok(UnaryExpr::Num(v))
            }
            TokenKind::LParen => {
                self.advance();
                let e = self.sum()?;
                self.expect(TokenKind::RParen)?;
                Ok(e)
            }
            TokenKind::Ident(name) => {
                let span = self.peek().span;
                match name.as_str() {
                    "t" => {
                        self.advance();
                        Ok(UnaryExpr::Var)
                    }
                    "pi" => {
                        self.advance();
                        Ok(UnaryExpr::Pi)
                    }
                    "min" | "max" => {
                        self.advance();
                        self.expect(TokenKind::LParen)?;
                        let a = self.sum()?;
                        self.expect(TokenKind::Comma)?;
                        let b = self.sum()?;
                        self.expect(TokenKind::RParen)?;
                        Ok(if name == "min" {
                            UnaryExpr::Min(Box::new(a), Box::new(b))
                        } else {
                            UnaryExpr::Max(Box::new(a), Box::new(b))
                        })
                    }
                    "sqrt" | "sin" => {
                        self.advance();
                        self.expect(TokenKind::LParen)?;
                        let e = self.sum()?;
                        self.expect(TokenKind::RParen)?;
                        Ok(if name == "sqrt" {
                            UnaryExpr::Sqrt(Box::new(e))
                        } else {
                            UnaryExpr::Sin(Box::new(e))
                        })
                    }
                    "pow" => {
                        self.advance();
                        self.expect(TokenKind::LParen)?;
                        let e = self.sum()?;
                        self.expect(TokenKind::Comma)?;
                        let k = self.num()?;
                        self.expect(TokenKind::RParen)?;
                        Ok(UnaryExpr::Pow(Box::new(e), k))
                    }
                    "piecewise" => {
                        self.advance();
                        self.piecewise(span)
                    }
                    other => Err(Diagnostic::new(
                        span,
                        format!("unknown identifier {other:?} in expression (the variable is t)"),
                    )),
                }
            }
            other => Err(Diagnostic::new(
                self.peek().span,
                format!("expected an expression, found {}", other.describe()),
            )),
        }
    }

    fn piecewise(&mut self, head_span: Span) -> Result<UnaryExpr, Diagnostic> {
        self.expect(TokenKind::LParen)?;
        let mut branches = vec![self.piece_branch()?];
        while self.eat(&TokenKind::Comma) {
            branches.push(self.piece_branch()?);
        }
        self.expect(TokenKind::RParen)?;
        // Branches must tile [0,1] with complementary closures.
        let first = &branches[0];
        if first.lo != 0.0 || !first.lo_closed {
            return Err(Diagnostic::new(head_span, "piecewise must start at [0"));
        }
        let last = branches.last().unwrap();
        if last.hi != 1.0 || !last.hi_closed {
            return Err(Diagnostic::new(head_span, "piecewise must end at 1]"));
        }
        for b in &branches {
            if !(b.lo < b.hi) {
                return Err(Diagnostic::new(
                    head_span,
                    format!("piecewise breakpoints must increase ({} >= {})", b.lo, b.hi),
                ));
            }
        }
        for pair in branches.windows(2) {
            if pair[1].lo != pair[0].hi {
                return Err(Diagnostic::new(
                    head_span,
                    format!("piecewise gap between {} and {}", pair[0].hi, pair[1].lo),
                ));
            }
            if pair[1].lo_closed == pair[0].hi_closed {
                return Err(Diagnostic::new(
                    head_span,
                    format!("piecewise branches overlap or both exclude {}", pair[1].lo),
                ));
            }
        }
        Ok(UnaryExpr::Piecewise(branches))
    }

    fn piece_branch(&mut self) -> Result<PieceBranch, Diagnostic> {
        let lo_closed = match self.peek().kind {
            TokenKind::LBracket => true,
            TokenKind::LParen => false,
            _ => {
                return Err(Diagnostic::new(
                    self.peek().span,
                    "expected '[' or '(' to open an interval",
                ))
            }
        };
        self.advance();
        let lo = self.num()?;
        self.expect(TokenKind::Comma)?;
        let hi = self.num()?;
        let hi_closed = match self.peek().kind {
            TokenKind::RBracket => true,
            TokenKind::RParen => false,
            _ => {
                return Err(Diagnostic::new(
                    self.peek().span,
                    "expected ']' or ')' to close an interval",
                ))
            }
        };
        self.advance();
        self.expect(TokenKind::Colon)?;
        let body = self.sum()?;
        Ok(PieceBranch { lo, lo_closed, hi, hi_closed, body })
    }
}
