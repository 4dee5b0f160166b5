use std::fmt;

use super::ast::Span;
use super::parser::Diagnostic;

#[derive(Debug, Clone, PartialEq)]
pub enum TokenKind {
    Ident(String),
    /// Non-negative decimal literal, kept as written.
    Number(String),
    LBrace,
    RBrace,
    Comma,
    Semicolon,
    Newline,
    Eq,
    Plus,
    Minus,
    Tilde,
    Colon,
    Le,
    Eof,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Ident(s) | TokenKind::Number(s) => write!(f, "{s}"),
            TokenKind::LBrace => f.write_str("{"),
            TokenKind::RBrace => f.write_str("}"),
            TokenKind::Comma => f.write_str(","),
            TokenKind::Semicolon => f.write_str(";"),
            TokenKind::Newline => f.write_str("newline"),
            TokenKind::Eq => f.write_str("="),
            TokenKind::Plus => f.write_str("+"),
            TokenKind::Minus => f.write_str("-"),
            TokenKind::Tilde => f.write_str("~"),
            TokenKind::Colon => f.write_str(":"),
            TokenKind::Le => f.write_str("<="),
            TokenKind::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: Span,
}

pub fn tokenize(src: &str) -> Result<Vec<Token>, Diagnostic> {
    let chars: Vec<char> = src.chars().collect();
    let mut tokens = Vec::new();
    let (mut i, mut line, mut column) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let span = Span { line, column };
        let start = i;
        let single = match c {
            '{' => Some(TokenKind::LBrace),
            '}' => Some(TokenKind::RBrace),
            ',' => Some(TokenKind::Comma),
            ';' => Some(TokenKind::Semicolon),
            '=' => Some(TokenKind::Eq),
            '+' => Some(TokenKind::Plus),
            '-' => Some(TokenKind::Minus),
            '~' => Some(TokenKind::Tilde),
            ':' => Some(TokenKind::Colon),
            _ => None,
        };
        if let Some(kind) = single {
            tokens.push(Token { kind, span });
            i += 1;
            column += 1;
            continue;
        }
        match c {
            '\n' => {
                tokens.push(Token {
                    kind: TokenKind::Newline,
                    span,
                });
                i += 1;
                line += 1;
                column = 1;
            }
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            c if c.is_whitespace() => {
                i += 1;
                column += 1;
            }
            '<' => {
                if chars.get(i + 1) == Some(&'=') {
                    tokens.push(Token {
                        kind: TokenKind::Le,
                        span,
                    });
                    i += 2;
                    column += 2;
                } else {
                    return Err(Diagnostic::new(span, "<", &["<="], "only `<=` comparisons are supported"));
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                column += i - start;
                tokens.push(Token {
                    kind: TokenKind::Ident(text),
                    span,
                });
            }
            c if c.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if chars.get(i) == Some(&'.') {
                    i += 1;
                    let frac = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i == frac {
                        let text: String = chars[start..i].iter().collect();
                        return Err(Diagnostic::new(span, &text, &["digit"], "malformed number"));
                    }
                }
                let text: String = chars[start..i].iter().collect();
                column += i - start;
                tokens.push(Token {
                    kind: TokenKind::Number(text),
                    span,
                });
            }
            other => {
                return Err(Diagnostic::new(
                    span,
                    &other.to_string(),
                    &[],
                    "unexpected character",
                ));
            }
        }
    }
    tokens.push(Token {
        kind: TokenKind::Eof,
        span: Span { line, column },
    });
    Ok(tokens)
}
