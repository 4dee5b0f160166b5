use crate::outcome::Sign;

/// 1-based source position. Never affects equality of AST nodes.
#[derive(Debug, Clone, Copy, Default, Eq)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

impl PartialEq for Span {
    fn eq(&self, _: &Span) -> bool {
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ident {
    pub name: String,
    pub span: Span,
}

impl Ident {
    pub fn new(name: impl Into<String>) -> Ident {
        Ident {
            name: name.into(),
            span: Span::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub label: Ident,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Term {
    /// `P{label=sign, ...}`
    Inline { assignments: Vec<Assignment>, span: Span },
    /// Reference to a declared event.
    Named(Ident),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpaceDecl {
    pub name: Ident,
    pub vars: Vec<Ident>,
    pub anticorrelations: Vec<(Ident, Ident)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EventDecl {
    pub name: Ident,
    pub space: Ident,
    pub assignments: Vec<Assignment>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IneqDecl {
    pub name: Ident,
    pub space: Ident,
    pub lhs: Vec<Term>,
    /// Right-hand constant; `None` when absent.
    pub constant: Option<f64>,
    pub rhs: Vec<Term>,
}

/// `builtin KIND [N]`: pulls in one of the predefined inequalities.
#[derive(Debug, Clone, PartialEq)]
pub struct BuiltinDecl {
    pub kind: Ident,
    pub n: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Decl {
    Space(SpaceDecl),
    Event(EventDecl),
    Ineq(IneqDecl),
    Builtin(BuiltinDecl),
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Ast {
    pub decls: Vec<Decl>,
}
