use std::fmt;

use thiserror::Error;

use super::ast::*;
use super::lexer::{tokenize, Token, TokenKind};
use crate::outcome::Sign;

/// First lexical or syntax error, with position and the tokens that would
/// have been accepted.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub lexeme: String,
    pub expected: Vec<String>,
    pub message: String,
}

impl Diagnostic {
    pub(crate) fn new(span: Span, lexeme: &str, expected: &[&str], message: &str) -> Diagnostic {
        Diagnostic {
            line: span.line,
            column: span.column,
            lexeme: lexeme.to_string(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            message: message.to_string(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {} at `{}`",
            self.line, self.column, self.message, self.lexeme
        )?;
        if !self.expected.is_empty() {
            write!(f, "; expected {}", self.expected.join(", "))?;
        }
        Ok(())
    }
}

pub fn parse(src: &str) -> Result<Ast, Diagnostic> {
    let tokens = tokenize(src)?;
    Parser { tokens, pos: 0 }.program()
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

type PResult<T> = Result<T, Diagnostic>;

const DECL_KEYWORDS: [&str; 4] = ["space", "event", "ineq", "builtin"];

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn peek_at(&self, offset: usize) -> &Token {
        let i = (self.pos + offset).min(self.tokens.len() - 1);
        &self.tokens[i]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.kind != TokenKind::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str], message: &str) -> Diagnostic {
        let t = self.peek();
        Diagnostic::new(t.span, &t.kind.to_string(), expected, message)
    }

    fn skip_newlines(&mut self) {
        while self.peek().kind == TokenKind::Newline {
            self.pos += 1;
        }
    }

    fn at(&self, kind: &TokenKind) -> bool {
        &self.peek().kind == kind
    }

    fn at_keyword(&self, word: &str) -> bool {
        matches!(&self.peek().kind, TokenKind::Ident(s) if s == word)
    }

    fn expect(&mut self, kind: TokenKind) -> PResult<Token> {
        if self.at(&kind) {
            Ok(self.bump())
        } else {
            let shown = kind.to_string();
            Err(self.error(&[&shown], "unexpected token"))
        }
    }

    fn expect_keyword(&mut self, word: &str) -> PResult<()> {
        if self.at_keyword(word) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[word], "unexpected token"))
        }
    }

    fn ident(&mut self, what: &str) -> PResult<Ident> {
        match &self.peek().kind {
            TokenKind::Ident(name) => {
                let name = name.clone();
                let span = self.bump().span;
                Ok(Ident { name, span })
            }
            _ => Err(self.error(&[what], "unexpected token")),
        }
    }

    fn program(&mut self) -> PResult<Ast> {
        let mut decls = Vec::new();
        loop {
            while matches!(self.peek().kind, TokenKind::Newline | TokenKind::Semicolon) {
                self.pos += 1;
            }
            if self.at(&TokenKind::Eof) {
                return Ok(Ast { decls });
            }
            decls.push(self.decl()?);
            match self.peek().kind {
                TokenKind::Newline | TokenKind::Semicolon | TokenKind::Eof => {}
                _ => {
                    return Err(self.error(&["newline", ";"], "expected end of statement"));
                }
            }
        }
    }

    fn decl(&mut self) -> PResult<Decl> {
        let word = match &self.peek().kind {
            TokenKind::Ident(s) if DECL_KEYWORDS.contains(&s.as_str()) => s.clone(),
            _ => return Err(self.error(&DECL_KEYWORDS, "expected a declaration")),
        };
        self.bump();
        match word.as_str() {
            "space" => self.space_decl().map(Decl::Space),
            "event" => self.event_decl().map(Decl::Event),
            "ineq" => self.ineq_decl().map(Decl::Ineq),
            _ => self.builtin_decl().map(Decl::Builtin),
        }
    }

    fn space_decl(&mut self) -> PResult<SpaceDecl> {
        let name = self.ident("space name")?;
        self.expect(TokenKind::LBrace)?;
        self.skip_newlines();
        self.expect_keyword("vars")?;
        let mut vars = Vec::new();
        loop {
            self.skip_newlines();
            vars.push(self.ident("variable name")?);
            self.skip_newlines();
            if self.at(&TokenKind::Comma) {
                self.bump();
            } else {
                break;
            }
        }
        let mut anticorrelations = Vec::new();
        if self.at(&TokenKind::Semicolon) || self.at_keyword("anticorrelate") {
            if self.at(&TokenKind::Semicolon) {
                self.bump();
                self.skip_newlines();
            }
            self.expect_keyword("anticorrelate")?;
            loop {
                self.skip_newlines();
                let a = self.ident("variable name")?;
                self.skip_newlines();
                self.expect(TokenKind::Tilde)?;
                self.skip_newlines();
                let b = self.ident("variable name")?;
                anticorrelations.push((a, b));
                self.skip_newlines();
                if self.at(&TokenKind::Comma) {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        if !self.at(&TokenKind::RBrace) {
            let expected: &[&str] = if anticorrelations.is_empty() {
                &[",", ";", "}"]
            } else {
                &[",", "}"]
            };
            return Err(self.error(expected, "unexpected token"));
        }
        self.bump();
        Ok(SpaceDecl {
            name,
            vars,
            anticorrelations,
        })
    }

    fn assignments(&mut self) -> PResult<Vec<Assignment>> {
        let mut out = Vec::new();
        loop {
            self.skip_newlines();
            let label = self.ident("variable name")?;
            self.skip_newlines();
            self.expect(TokenKind::Eq)?;
            self.skip_newlines();
            let sign = match self.peek().kind {
                TokenKind::Plus => Sign::Plus,
                TokenKind::Minus => Sign::Minus,
                _ => return Err(self.error(&["+", "-"], "expected a sign")),
            };
            self.bump();
            out.push(Assignment { label, sign });
            self.skip_newlines();
            if self.at(&TokenKind::Comma) {
                self.bump();
            } else if self.at(&TokenKind::RBrace) {
                self.bump();
                return Ok(out);
            } else {
                return Err(self.error(&[",", "}"], "unexpected token"));
            }
        }
    }

    fn event_decl(&mut self) -> PResult<EventDecl> {
        let name = self.ident("event name")?;
        self.expect_keyword("on")?;
        let space = self.ident("space name")?;
        self.expect(TokenKind::Eq)?;
        self.skip_newlines();
        self.expect(TokenKind::LBrace)?;
        let assignments = self.assignments()?;
        Ok(EventDecl {
            name,
            space,
            assignments,
        })
    }

    fn term(&mut self) -> PResult<Term> {
        let is_inline = matches!(&self.peek().kind, TokenKind::Ident(s) if s == "P")
            && self.peek_at(1).kind == TokenKind::LBrace;
        if is_inline {
            let span = self.bump().span;
            self.bump();
            let assignments = self.assignments()?;
            Ok(Term::Inline { assignments, span })
        } else if matches!(self.peek().kind, TokenKind::Ident(_)) {
            Ok(Term::Named(self.ident("event name")?))
        } else {
            Err(self.error(&["P{", "event name"], "expected a probability term"))
        }
    }

    fn side(&mut self) -> PResult<Vec<Term>> {
        let mut terms = vec![self.term()?];
        while self.at(&TokenKind::Plus) {
            self.bump();
            self.skip_newlines();
            terms.push(self.term()?);
        }
        Ok(terms)
    }

    fn ineq_decl(&mut self) -> PResult<IneqDecl> {
        let name = self.ident("inequality name")?;
        self.expect_keyword("on")?;
        let space = self.ident("space name")?;
        self.expect(TokenKind::Colon)?;
        self.skip_newlines();
        let lhs = self.side()?;
        if !self.at(&TokenKind::Le) {
            return Err(self.error(&["+", "<="], "unexpected token"));
        }
        self.bump();
        self.skip_newlines();
        let (constant, rhs) = match &self.peek().kind {
            TokenKind::Number(text) => {
                let text = text.clone();
                let span = self.bump().span;
                let value: f64 = text
                    .parse()
                    .map_err(|_| Diagnostic::new(span, &text, &["number"], "malformed number"))?;
                let rhs = if self.at(&TokenKind::Plus) {
                    self.bump();
                    self.skip_newlines();
                    self.side()?
                } else {
                    Vec::new()
                };
                (Some(value), rhs)
            }
            TokenKind::Ident(_) => (None, self.side()?),
            _ => return Err(self.error(&["number", "P{", "event name"], "expected right-hand side")),
        };
        Ok(IneqDecl {
            name,
            space,
            lhs,
            constant,
            rhs,
        })
    }

    fn builtin_decl(&mut self) -> PResult<BuiltinDecl> {
        let kind = self.ident("builtin kind")?;
        let n = match &self.peek().kind {
            TokenKind::Number(text) => {
                let text = text.clone();
                let span = self.bump().span;
                Some(text.parse::<usize>().map_err(|_| {
                    Diagnostic::new(span, &text, &["integer"], "chain length must be an integer")
                })?)
            }
            _ => None,
        };
        Ok(BuiltinDecl { kind, n })
    }
}
