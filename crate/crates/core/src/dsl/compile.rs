use std::fmt;
use std::sync::Arc;

use indexmap::IndexMap;
use thiserror::Error;

use super::ast::*;
use crate::outcome::{Event, LinearInequality, OutcomeSpace, Sign, VariableSet};
use crate::suite::{build_inequality, InequalityKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct CompileError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl CompileError {
    fn at(span: Span, message: impl Into<String>) -> CompileError {
        CompileError {
            line: span.line,
            column: span.column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Warning {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

#[derive(Debug, Clone)]
pub struct CompiledInequality {
    pub inequality: LinearInequality,
    /// Declared space name; `None` for builtins.
    pub space: Option<String>,
    pub builtin: Option<InequalityKind>,
}

#[derive(Debug, Clone, Default)]
pub struct Program {
    pub spaces: IndexMap<String, Arc<OutcomeSpace>>,
    /// Named events with the space each was declared on.
    pub events: IndexMap<String, (String, Event)>,
    pub inequalities: Vec<CompiledInequality>,
    pub warnings: Vec<Warning>,
}

impl Program {
    pub fn inequality(&self, name: &str) -> Option<&CompiledInequality> {
        self.inequalities.iter().find(|c| c.inequality.name() == name)
    }
}

struct Compiler {
    program: Program,
}

impl Compiler {
    fn space(&self, id: &Ident) -> Result<Arc<OutcomeSpace>, CompileError> {
        self.program
            .spaces
            .get(&id.name)
            .cloned()
            .ok_or_else(|| CompileError::at(id.span, format!("unknown space `{}`", id.name)))
    }

    fn space_decl(&mut self, decl: &SpaceDecl) -> Result<(), CompileError> {
        if self.program.spaces.contains_key(&decl.name.name) {
            return Err(CompileError::at(
                decl.name.span,
                format!("space `{}` is already declared", decl.name.name),
            ));
        }
        let names = decl.vars.iter().map(|v| v.name.clone());
        let pairs = decl
            .anticorrelations
            .iter()
            .map(|(a, b)| (a.name.clone(), b.name.clone()));
        let vars = VariableSet::with_anticorrelations(names, pairs)
            .map_err(|e| CompileError::at(decl.name.span, format!("space `{}`: {e}", decl.name.name)))?;
        self.program
            .spaces
            .insert(decl.name.name.clone(), OutcomeSpace::build(vars));
        Ok(())
    }

    /// Conjunction of assignments; contradictions give the empty event plus a
    /// warning.
    fn conjunction(
        &mut self,
        space: &Arc<OutcomeSpace>,
        list: &[Assignment],
        span: Span,
    ) -> Result<Event, CompileError> {
        let vars = space.vars();
        let mut fixed: Vec<(usize, Sign, &Ident)> = Vec::new();
        let mut conflict: Option<String> = None;
        for a in list {
            let index = vars.index_of(&a.label.name).ok_or_else(|| {
                CompileError::at(a.label.span, format!("unknown variable `{}`", a.label.name))
            })?;
            for &(j, s, other) in &fixed {
                if conflict.is_some() {
                    break;
                }
                if j == index && s != a.sign {
                    conflict = Some(format!("`{}` is assigned both signs", a.label.name));
                } else if vars.partner(index) == Some(j) && s == a.sign {
                    conflict = Some(format!(
                        "`{}={}` and `{}={}` contradict the anticorrelation {} ~ {}",
                        other.name,
                        s.symbol(),
                        a.label.name,
                        a.sign.symbol(),
                        other.name,
                        a.label.name
                    ));
                }
            }
            fixed.push((index, a.sign, &a.label));
        }
        if let Some(reason) = conflict {
            self.program.warnings.push(Warning {
                line: span.line,
                column: span.column,
                message: format!("empty event: {reason}"),
            });
            return Ok(Event::empty(space));
        }
        let pairs: Vec<(&str, Sign)> = list.iter().map(|a| (a.label.name.as_str(), a.sign)).collect();
        Event::from_assignments(space, &pairs).map_err(|e| CompileError::at(span, e.to_string()))
    }

    fn event_decl(&mut self, decl: &EventDecl) -> Result<(), CompileError> {
        if self.program.events.contains_key(&decl.name.name) {
            return Err(CompileError::at(
                decl.name.span,
                format!("event `{}` is already declared", decl.name.name),
            ));
        }
        let space = self.space(&decl.space)?;
        let event = self.conjunction(&space, &decl.assignments, decl.name.span)?;
        self.program
            .events
            .insert(decl.name.name.clone(), (decl.space.name.clone(), event));
        Ok(())
    }

    fn term(&mut self, space_name: &str, space: &Arc<OutcomeSpace>, t: &Term) -> Result<Event, CompileError> {
        match t {
            Term::Inline { assignments, span } => self.conjunction(space, assignments, *span),
            Term::Named(id) => {
                let (declared_on, event) = self
                    .program
                    .events
                    .get(&id.name)
                    .ok_or_else(|| CompileError::at(id.span, format!("unknown event `{}`", id.name)))?;
                if declared_on != space_name {
                    return Err(CompileError::at(
                        id.span,
                        format!(
                            "event `{}` is declared on `{declared_on}`, not `{space_name}`",
                            id.name
                        ),
                    ));
                }
                Ok(event.clone())
            }
        }
    }

    fn check_unique_ineq(&self, id: &Ident, name: &str) -> Result<(), CompileError> {
        if self.program.inequality(name).is_some() {
            return Err(CompileError::at(
                id.span,
                format!("inequality `{name}` is already declared"),
            ));
        }
        Ok(())
    }

    fn ineq_decl(&mut self, decl: &IneqDecl) -> Result<(), CompileError> {
        self.check_unique_ineq(&decl.name, &decl.name.name)?;
        let space = self.space(&decl.space)?;
        let mut ineq = LinearInequality::new(decl.name.name.clone(), &space);
        let location = |e: crate::outcome::OutcomeError| CompileError::at(decl.name.span, e.to_string());
        for t in &decl.lhs {
            let e = self.term(&decl.space.name, &space, t)?;
            ineq.add_lhs(&e).map_err(location)?;
        }
        for t in &decl.rhs {
            let e = self.term(&decl.space.name, &space, t)?;
            ineq.add_rhs(&e).map_err(location)?;
        }
        if let Some(c) = decl.constant {
            ineq.set_constant(c).map_err(location)?;
        }
        self.program.inequalities.push(CompiledInequality {
            inequality: ineq,
            space: Some(decl.space.name.clone()),
            builtin: None,
        });
        Ok(())
    }

    fn builtin_decl(&mut self, decl: &BuiltinDecl) -> Result<(), CompileError> {
        let kind = InequalityKind::from_parts(&decl.kind.name, decl.n)
            .map_err(|e| CompileError::at(decl.kind.span, e.to_string()))?;
        let (_, ineq) =
            build_inequality(kind).map_err(|e| CompileError::at(decl.kind.span, e.to_string()))?;
        self.check_unique_ineq(&decl.kind, ineq.name())?;
        self.program.inequalities.push(CompiledInequality {
            inequality: ineq,
            space: None,
            builtin: Some(kind),
        });
        Ok(())
    }
}

/// Builds spaces, events and inequalities in declaration order. Term
/// multiplicities accumulate, so a repeated term counts twice.
pub fn compile(ast: &Ast) -> Result<Program, CompileError> {
    let mut c = Compiler {
        program: Program::default(),
    };
    for decl in &ast.decls {
        match decl {
            Decl::Space(d) => c.space_decl(d)?,
            Decl::Event(d) => c.event_decl(d)?,
            Decl::Ineq(d) => c.ineq_decl(d)?,
            Decl::Builtin(d) => c.builtin_decl(d)?,
        }
    }
    Ok(c.program)
}
