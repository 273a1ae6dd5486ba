//! Recursive-descent parser for scene files. Statements are line-oriented
//! with keyword heads; `{ ... }` and `( ... )` groups may span lines.

use super::ast::*;
use super::lexer::{lex, LexError, Token, TokenKind};
use crate::rational::{parse_rat, Rat};
use std::fmt;

#[derive(Debug, Clone)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl From<LexError> for ParseError {
    fn from(e: LexError) -> Self {
        ParseError {
            line: e.line,
            col: e.col,
            message: e.message,
        }
    }
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    /// Nesting depth of braces/parens; newlines are skipped inside groups.
    depth: usize,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn err<T>(&self, message: impl Into<String>) -> PResult<T> {
        let (line, col) = self
            .toks
            .get(self.pos)
            .map(|t| (t.line, t.col))
            .unwrap_or((0, 0));
        Err(ParseError {
            line,
            col,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<&TokenKind> {
        self.toks.get(self.pos).map(|t| &t.kind)
    }

    fn line(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.line).unwrap_or(0)
    }

    fn bump(&mut self) -> Option<TokenKind> {
        let t = self.toks.get(self.pos).map(|t| t.kind.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    /// Skip newline tokens (used between statements and inside groups).
    fn skip_newlines(&mut self) {
        while matches!(self.peek(), Some(TokenKind::Newline)) {
            self.pos += 1;
        }
    }

    fn skip_newlines_in_group(&mut self) {
        if self.depth > 0 {
            self.skip_newlines();
        }
    }

    fn expect(&mut self, kind: &TokenKind, what: &str) -> PResult<()> {
        self.skip_newlines_in_group();
        match self.peek() {
            Some(k) if k == kind => {
                self.pos += 1;
                Ok(())
            }
            _ => self.err(format!("expected {what}")),
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> PResult<()> {
        self.skip_newlines_in_group();
        match self.peek() {
            Some(TokenKind::Ident(s)) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => self.err(format!("expected keyword `{kw}`")),
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        if let Some(TokenKind::Ident(s)) = self.peek() {
            if s == kw {
                self.pos += 1;
                return true;
            }
        }
        false
    }

    fn ident(&mut self, what: &str) -> PResult<String> {
        self.skip_newlines_in_group();
        match self.peek() {
            Some(TokenKind::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => self.err(format!("expected {what}")),
        }
    }

    fn integer(&mut self, what: &str) -> PResult<i64> {
        self.skip_newlines_in_group();
        let neg = matches!(self.peek(), Some(TokenKind::Minus));
        if neg {
            self.pos += 1;
        }
        match self.peek() {
            Some(TokenKind::Number(s)) if !s.contains('/') => {
                let v: i64 = s.parse().map_err(|_| ParseError {
                    line: self.line(),
                    col: 0,
                    message: format!("integer out of range in {what}"),
                })?;
                self.pos += 1;
                Ok(if neg { -v } else { v })
            }
            _ => self.err(format!("expected integer for {what}")),
        }
    }

    fn unsigned(&mut self, what: &str) -> PResult<usize> {
        let v = self.integer(what)?;
        if v < 0 {
            return self.err(format!("{what} must be non-negative"));
        }
        Ok(v as usize)
    }

    fn rational(&mut self, what: &str) -> PResult<Rat> {
        self.skip_newlines_in_group();
        let neg = matches!(self.peek(), Some(TokenKind::Minus));
        if neg {
            self.pos += 1;
        }
        match self.peek() {
            Some(TokenKind::Number(s)) => {
                let r = parse_rat(s).ok_or_else(|| ParseError {
                    line: self.line(),
                    col: 0,
                    message: format!("bad rational in {what}"),
                })?;
                self.pos += 1;
                Ok(if neg { -r } else { r })
            }
            _ => self.err(format!("expected rational for {what}")),
        }
    }

    fn end_statement(&mut self) -> PResult<()> {
        match self.peek() {
            Some(TokenKind::Newline) | None => {
                self.skip_newlines();
                Ok(())
            }
            _ => self.err("expected end of statement"),
        }
    }

    // ----- expressions (precedence climbing) -----

    fn expr(&mut self) -> PResult<Expr> {
        self.additive()
    }

    fn additive(&mut self) -> PResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            self.skip_newlines_in_group();
            match self.peek() {
                Some(TokenKind::Plus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
                }
                Some(TokenKind::Minus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        self.skip_newlines_in_group();
        if matches!(self.peek(), Some(TokenKind::Minus)) {
            self.pos += 1;
            let e = self.term()?;
            return Ok(Expr::Neg(Box::new(e)));
        }
        let mut lhs = self.power()?;
        loop {
            self.skip_newlines_in_group();
            match self.peek() {
                Some(TokenKind::Star) => {
                    self.pos += 1;
                    // unary minus binds tighter than * on the right
                    let rhs = if matches!(self.peek(), Some(TokenKind::Minus)) {
                        self.pos += 1;
                        Expr::Neg(Box::new(self.power()?))
                    } else {
                        self.power()?
                    };
                    lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn power(&mut self) -> PResult<Expr> {
        let base = self.primary()?;
        self.skip_newlines_in_group();
        if matches!(self.peek(), Some(TokenKind::Caret)) {
            self.pos += 1;
            let e = self.unsigned("exponent")?;
            return Ok(Expr::Pow(Box::new(base), e as u32));
        }
        Ok(base)
    }

    fn primary(&mut self) -> PResult<Expr> {
        self.skip_newlines_in_group();
        match self.peek().cloned() {
            Some(TokenKind::Number(s)) => {
                self.pos += 1;
                let r = parse_rat(&s).ok_or_else(|| ParseError {
                    line: self.line(),
                    col: 0,
                    message: "bad rational literal".into(),
                })?;
                Ok(Expr::Num(r))
            }
            Some(TokenKind::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Ident(s))
            }
            Some(TokenKind::LParen) => {
                self.pos += 1;
                self.depth += 1;
                let e = self.expr()?;
                self.depth -= 1;
                self.expect(&TokenKind::RParen, "`)`")?;
                Ok(e)
            }
            _ => self.err("expected expression"),
        }
    }

    /// Comma-separated expression list; empty lists allowed before `stop`.
    fn expr_list_until(&mut self, stop: &TokenKind) -> PResult<Vec<Expr>> {
        let mut out = Vec::new();
        self.skip_newlines_in_group();
        if self.peek() == Some(stop) {
            return Ok(out);
        }
        loop {
            out.push(self.expr()?);
            self.skip_newlines_in_group();
            if matches!(self.peek(), Some(TokenKind::Comma)) {
                self.pos += 1;
            } else {
                return Ok(out);
            }
        }
    }

    /// `( expr, expr, ... )`
    fn paren_expr_list(&mut self) -> PResult<Vec<Expr>> {
        self.expect(&TokenKind::LParen, "`(`")?;
        self.depth += 1;
        let es = self.expr_list_until(&TokenKind::RParen)?;
        self.depth -= 1;
        self.expect(&TokenKind::RParen, "`)`")?;
        Ok(es)
    }

    /// `{ lhs => rhs ; ... }` entry block.
    fn entry_block(&mut self) -> PResult<Vec<(Expr, Expr)>> {
        self.expect(&TokenKind::LBrace, "`{`")?;
        self.depth += 1;
        let mut out = Vec::new();
        loop {
            self.skip_newlines();
            if matches!(self.peek(), Some(TokenKind::RBrace)) {
                break;
            }
            let lhs = self.expr()?;
            self.expect(&TokenKind::FatArrow, "`=>`")?;
            let rhs = self.expr()?;
            self.expect(&TokenKind::Semi, "`;`")?;
            out.push((lhs, rhs));
        }
        self.depth -= 1;
        self.expect(&TokenKind::RBrace, "`}`")?;
        Ok(out)
    }

    fn optional_label(&mut self) -> PResult<Option<String>> {
        if self.eat_keyword("label") {
            match self.bump() {
                Some(TokenKind::Str(s)) => Ok(Some(s)),
                _ => self.err("expected string after `label`"),
            }
        } else {
            Ok(None)
        }
    }

    // ----- statements -----

    fn item(&mut self) -> PResult<Item> {
        let line = self.line();
        let head = self.ident("statement keyword")?;
        match head.as_str() {
            "ring" => self.ring_item(line),
            "class" => {
                let name = self.ident("class name")?;
                self.expect_keyword("in")?;
                let ring = self.ident("ring name")?;
                self.expect(&TokenKind::Assign, "`:=`")?;
                let expr = self.expr()?;
                self.end_statement()?;
                Ok(Item::Class {
                    name,
                    ring,
                    expr,
                    line,
                })
            }
            "quotient" => {
                let name = self.ident("ring name")?;
                self.expect_keyword("of")?;
                let of = self.ident("source ring")?;
                self.expect_keyword("by")?;
                let by = self.paren_expr_list()?;
                self.end_statement()?;
                Ok(Item::Quotient { name, of, by, line })
            }
            "pbundle" => {
                let name = self.ident("bundle ring name")?;
                self.expect_keyword("over")?;
                let base = self.ident("base ring")?;
                self.expect_keyword("rank")?;
                let rank = self.unsigned("rank")?;
                self.expect_keyword("chern")?;
                let chern = self.paren_expr_list()?;
                self.expect_keyword("hyperplane")?;
                let hyperplane = self.ident("hyperplane name")?;
                self.end_statement()?;
                Ok(Item::PBundle {
                    name,
                    base,
                    rank,
                    chern,
                    hyperplane,
                    line,
                })
            }
            "blowup" => {
                let name = self.ident("model name")?;
                self.expect_keyword("ambient")?;
                let ambient = self.ident("ambient ring")?;
                self.expect_keyword("center")?;
                let center = self.ident("center ring")?;
                self.expect_keyword("pullback")?;
                let pullback = self.ident("pullback name")?;
                self.expect_keyword("pushforward")?;
                let pushforward = self.ident("pushforward name")?;
                self.expect_keyword("normal")?;
                let normal = self.paren_expr_list()?;
                self.expect_keyword("exceptional")?;
                let exceptional = self.ident("exceptional class name")?;
                self.end_statement()?;
                Ok(Item::Blowup {
                    name,
                    ambient,
                    center,
                    pullback,
                    pushforward,
                    normal,
                    exceptional,
                    line,
                })
            }
            "present" => {
                let model = self.ident("model name")?;
                self.expect_keyword("as")?;
                let ring_name = self.ident("ring name")?;
                self.end_statement()?;
                Ok(Item::Present {
                    model,
                    ring_name,
                    line,
                })
            }
            "strict" => {
                let name = self.ident("class name")?;
                self.expect_keyword("in")?;
                let model = self.ident("model name")?;
                self.expect(&TokenKind::Colon, "`:`")?;
                let class_expr = self.expr()?;
                let cap = if self.eat_keyword("cap") {
                    Some(self.expr()?)
                } else {
                    None
                };
                self.expect_keyword("case")?;
                let case = match self.ident("transform case")?.as_str() {
                    "expected" => TransformCase::Expected,
                    "excess" => TransformCase::Excess,
                    other => return self.err(format!("unknown case `{other}`")),
                };
                self.end_statement()?;
                Ok(Item::Strict {
                    name,
                    model,
                    class_expr,
                    cap,
                    case,
                    line,
                })
            }
            "jpush" => {
                let name = self.ident("class name")?;
                self.expect_keyword("in")?;
                let model = self.ident("model name")?;
                self.expect(&TokenKind::Colon, "`:`")?;
                let expr = self.expr()?;
                self.end_statement()?;
                Ok(Item::JPush {
                    name,
                    model,
                    expr,
                    line,
                })
            }
            "pullback" => {
                let name = self.ident("pullback name")?;
                self.expect(&TokenKind::Colon, "`:`")?;
                let source = self.ident("source ring")?;
                self.expect(&TokenKind::Arrow, "`->`")?;
                let target = self.ident("target ring")?;
                let entries = self.entry_block()?;
                let mut images = Vec::new();
                for (l, r) in entries {
                    match l {
                        Expr::Ident(g) => images.push((g, r)),
                        other => {
                            return self.err(format!(
                                "pullback entry left side must be a generator, got `{other}`"
                            ))
                        }
                    }
                }
                self.end_statement()?;
                Ok(Item::Pullback {
                    name,
                    source,
                    target,
                    images,
                    line,
                })
            }
            "pushforward" => {
                let name = self.ident("pushforward name")?;
                self.expect(&TokenKind::Colon, "`:`")?;
                let source = self.ident("source ring")?;
                self.expect(&TokenKind::Arrow, "`->`")?;
                let target = self.ident("target ring")?;
                self.expect_keyword("shift")?;
                let shift = self.integer("shift")?;
                let via = if self.eat_keyword("via") {
                    Some(self.ident("pullback name")?)
                } else {
                    None
                };
                let entries = self.entry_block()?;
                self.end_statement()?;
                Ok(Item::Pushforward {
                    name,
                    source,
                    target,
                    shift,
                    via,
                    entries,
                    line,
                })
            }
            "fibration" => {
                let name = self.ident("fibration name")?;
                self.expect_keyword("total")?;
                let total = self.ident("total ring")?;
                self.expect_keyword("base")?;
                let base = self.ident("base ring")?;
                self.expect_keyword("pullback")?;
                let pullback = self.ident("pullback name")?;
                self.expect_keyword("pushforward")?;
                let pushforward = self.ident("pushforward name")?;
                self.expect_keyword("K")?;
                let canonical = self.expr()?;
                let chern = if self.eat_keyword("c1") {
                    let c1 = self.expr()?;
                    self.expect_keyword("c2")?;
                    let c2 = self.expr()?;
                    Some((c1, c2))
                } else {
                    None
                };
                self.end_statement()?;
                Ok(Item::Fibration {
                    name,
                    total,
                    base,
                    pullback,
                    pushforward,
                    canonical,
                    chern,
                    line,
                })
            }
            "fiberprod" => {
                let name = self.ident("product ring name")?;
                self.expect_keyword("of")?;
                let a = self.ident("first factor")?;
                let b = self.ident("second factor")?;
                self.expect_keyword("over")?;
                let base = self.ident("base ring")?;
                self.expect_keyword("maps")?;
                let pa = self.ident("first base map")?;
                let pb = self.ident("second base map")?;
                self.expect_keyword("projections")?;
                let proj_a = self.ident("first projection pullback name")?;
                let proj_b = self.ident("second projection pullback name")?;
                let push = if self.eat_keyword("pushforward") {
                    let new = self.ident("pushforward name")?;
                    self.expect_keyword("from")?;
                    let from = self.ident("factor pushforward")?;
                    Some((new, from))
                } else {
                    None
                };
                self.end_statement()?;
                Ok(Item::FiberProd {
                    name,
                    a,
                    b,
                    base,
                    pa,
                    pb,
                    proj_a,
                    proj_b,
                    push,
                    line,
                })
            }
            "adjoin" => {
                let class_name = self.ident("class name")?;
                self.expect_keyword("to")?;
                let ring = self.ident("ring name")?;
                self.expect_keyword("degree")?;
                let degree = self.unsigned("degree")?;
                self.expect_keyword("as")?;
                let new_ring = self.ident("new ring name")?;
                let rels = if self.eat_keyword("rels") {
                    self.paren_expr_list()?
                } else {
                    Vec::new()
                };
                let extend = if self.eat_keyword("extend") {
                    let push = self.ident("pushforward name")?;
                    self.expect_keyword("as")?;
                    let new_push = self.ident("new pushforward name")?;
                    let entries = self.entry_block()?;
                    Some((push, new_push, entries))
                } else {
                    None
                };
                self.end_statement()?;
                Ok(Item::Adjoin {
                    class_name,
                    ring,
                    degree,
                    new_ring,
                    rels,
                    extend,
                    line,
                })
            }
            "kappa" => {
                let name = self.ident("class name")?;
                self.expect_keyword("from")?;
                let fibration = self.ident("fibration name")?;
                self.expect(&TokenKind::LParen, "`(`")?;
                self.depth += 1;
                let a = self.integer("kappa index a")?;
                self.expect(&TokenKind::Comma, "`,`")?;
                let b = self.integer("kappa index b")?;
                self.expect(&TokenKind::Comma, "`,`")?;
                let c = self.integer("kappa index c")?;
                self.depth -= 1;
                self.expect(&TokenKind::RParen, "`)`")?;
                self.end_statement()?;
                Ok(Item::Kappa {
                    name,
                    fibration,
                    a,
                    b,
                    c,
                    line,
                })
            }
            "grr" => {
                let fibration = self.ident("fibration name")?;
                self.expect_keyword("rank")?;
                let rank = self.integer("rank")?;
                self.expect_keyword("chern")?;
                let chern = self.paren_expr_list()?;
                self.expect_keyword("parts")?;
                self.expect(&TokenKind::LParen, "`(`")?;
                self.depth += 1;
                let mut parts = Vec::new();
                loop {
                    parts.push(self.ident("part name")?);
                    if matches!(self.peek(), Some(TokenKind::Comma)) {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                self.depth -= 1;
                self.expect(&TokenKind::RParen, "`)`")?;
                self.end_statement()?;
                Ok(Item::Grr {
                    fibration,
                    rank,
                    chern,
                    parts,
                    line,
                })
            }
            "assert" => self.assert_item(line),
            other => self.err(format!("unknown statement `{other}`")),
        }
    }

    fn ring_item(&mut self, line: usize) -> PResult<Item> {
        let name = self.ident("ring name")?;
        self.expect(&TokenKind::LBrace, "`{`")?;
        self.depth += 1;
        self.expect_keyword("gens")?;
        self.expect(&TokenKind::Colon, "`:`")?;
        let mut gens = Vec::new();
        self.skip_newlines();
        if !matches!(self.peek(), Some(TokenKind::Semi)) {
            loop {
                let gname = self.ident("generator name")?;
                self.expect(&TokenKind::Colon, "`:`")?;
                let degree = self.unsigned("generator degree")?;
                gens.push(GenDecl {
                    name: gname,
                    degree,
                });
                self.skip_newlines();
                if matches!(self.peek(), Some(TokenKind::Comma)) {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        self.expect(&TokenKind::Semi, "`;`")?;
        self.expect_keyword("rels")?;
        self.expect(&TokenKind::Colon, "`:`")?;
        let rels = self.expr_list_until(&TokenKind::Semi)?;
        self.expect(&TokenKind::Semi, "`;`")?;
        self.expect_keyword("top")?;
        self.expect(&TokenKind::Colon, "`:`")?;
        let top = self.unsigned("top degree")?;
        self.depth -= 1;
        self.expect(&TokenKind::RBrace, "`}`")?;
        self.end_statement()?;
        Ok(Item::Ring {
            name,
            gens,
            rels,
            top,
            line,
        })
    }

    fn assert_item(&mut self, line: usize) -> PResult<Item> {
        let kind = self.ident("assertion kind")?;
        let ring = if self.eat_keyword("in") {
            Some(self.ident("ring name")?)
        } else {
            None
        };
        self.expect(&TokenKind::Colon, "`:`")?;
        let body = match kind.as_str() {
            "eq" => {
                let lhs = self.expr()?;
                self.expect(&TokenKind::EqEq, "`==`")?;
                let rhs = self.expr()?;
                AssertBody::Eq { lhs, rhs }
            }
            "zero" => AssertBody::Zero { expr: self.expr()? },
            "dim" => {
                let degree = self.unsigned("degree")?;
                self.expect(&TokenKind::EqEq, "`==`")?;
                let expected = self.unsigned("expected dimension")?;
                AssertBody::Dim { degree, expected }
            }
            "hilbert" => {
                self.expect(&TokenKind::LParen, "`(`")?;
                self.depth += 1;
                let mut dims = Vec::new();
                loop {
                    dims.push(self.unsigned("dimension")?);
                    if matches!(self.peek(), Some(TokenKind::Comma)) {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                self.depth -= 1;
                self.expect(&TokenKind::RParen, "`)`")?;
                AssertBody::Hilbert { dims }
            }
            "mapok" => AssertBody::MapOk {
                name: self.ident("morphism name")?,
            },
            "projform" => {
                let pull = self.ident("pullback name")?;
                let push = self.ident("pushforward name")?;
                AssertBody::ProjForm { pull, push }
            }
            "pushpull" => {
                let pull = self.ident("pullback name")?;
                let push = self.ident("pushforward name")?;
                let n = if matches!(
                    self.peek(),
                    Some(TokenKind::Number(_)) | Some(TokenKind::Minus)
                ) {
                    self.rational("cover degree")?
                } else {
                    Rat::from_integer(1.into())
                };
                AssertBody::PushPull { pull, push, n }
            }
            other => return self.err(format!("unknown assertion kind `{other}`")),
        };
        let label = self.optional_label()?;
        self.end_statement()?;
        Ok(Item::Assert(Assertion {
            body,
            ring,
            label,
            line,
        }))
    }
}

pub fn parse_scene(src: &str) -> Result<Scene, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        depth: 0,
    };
    let mut items = Vec::new();
    loop {
        p.skip_newlines();
        if p.peek().is_none() {
            break;
        }
        items.push(p.item()?);
    }
    Ok(Scene { items })
}

/// Parse a standalone expression (used for CLI `eval` and element parsing).
pub fn parse_expr_str(src: &str) -> Result<Expr, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        depth: 1, // ignore newlines
    };
    p.skip_newlines();
    let e = p.expr()?;
    p.skip_newlines();
    if p.peek().is_some() {
        return p.err("trailing input after expression");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ring_statement() {
        let s = parse_scene("ring J { gens: T:1; rels: T^3; top: 2 }").unwrap();
        assert_eq!(s.items.len(), 1);
        match &s.items[0] {
            Item::Ring { name, gens, rels, top, .. } => {
                assert_eq!(name, "J");
                assert_eq!(gens.len(), 1);
                assert_eq!(rels.len(), 1);
                assert_eq!(*top, 2);
            }
            _ => panic!("not a ring"),
        }
    }

    #[test]
    fn parses_eq_assert() {
        let s =
            parse_scene("assert eq in P: H^4 == -(H^3*T) - 1/2*H^2*T^2 label \"quartic\"")
                .unwrap();
        match &s.items[0] {
            Item::Assert(a) => {
                assert_eq!(a.ring.as_deref(), Some("P"));
                assert_eq!(a.label.as_deref(), Some("quartic"));
                assert!(matches!(a.body, AssertBody::Eq { .. }));
            }
            _ => panic!("not an assert"),
        }
    }

    #[test]
    fn rejects_unicode_names() {
        let err = parse_scene("ring J { gens: Θ:1; rels: ; top: 2 }").unwrap_err();
        assert!(err.message.contains("ASCII"), "{err}");
    }

    #[test]
    fn empty_scene() {
        assert!(parse_scene("\n# just a comment\n").unwrap().items.is_empty());
    }

    #[test]
    fn print_parse_round_trip() {
        let src = r#"
ring P { gens: H:1, T:1; rels: T^3, H^4 + H^3*T + 1/2*H^2*T^2; top: 6 }
class c in P := 5*H^2 + 3*H*T + 1/2*T^2
pullback f : P -> P {
  H => H;
  T => T;
}
pushforward g : P -> P shift 0 via f {
  1 => 1;
}
assert eq in P : H*T == T*H label "commutativity"
assert hilbert in P : ( 1, 2, 3, 3, 2, 1, 0 )
assert dim in P : 2 == 3
assert zero in P : H^4 + H^3*T + 1/2*H^2*T^2
assert mapok : f
assert projform : f g
assert pushpull : f g 1
"#;
        let scene = parse_scene(src).unwrap();
        let printed = scene.to_string();
        let reparsed = parse_scene(&printed).unwrap_or_else(|e| panic!("reparse: {e}\n{printed}"));
        // Statement lines move under printing; the canonical text is the
        // stable comparison point: print(parse(print(s))) == print(s).
        assert_eq!(reparsed.to_string(), printed, "printed:\n{printed}");
    }
}
