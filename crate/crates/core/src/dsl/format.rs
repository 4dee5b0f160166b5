use std::fmt::Write;

use super::ast::*;

fn assignments(out: &mut String, list: &[Assignment]) {
    let parts: Vec<String> = list
        .iter()
        .map(|a| format!("{}={}", a.label.name, a.sign.symbol()))
        .collect();
    out.push_str(&parts.join(", "));
}

fn term(out: &mut String, t: &Term) {
    match t {
        Term::Inline { assignments: list, .. } => {
            out.push_str("P{");
            assignments(out, list);
            out.push('}');
        }
        Term::Named(id) => out.push_str(&id.name),
    }
}

fn side(out: &mut String, terms: &[Term]) {
    for (i, t) in terms.iter().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        term(out, t);
    }
}

/// Canonical text, one declaration per line. Comments are not kept.
pub fn format(ast: &Ast) -> String {
    let mut out = String::new();
    for decl in &ast.decls {
        match decl {
            Decl::Space(s) => {
                let vars: Vec<&str> = s.vars.iter().map(|v| v.name.as_str()).collect();
                let _ = write!(out, "space {} {{ vars {}", s.name.name, vars.join(", "));
                if !s.anticorrelations.is_empty() {
                    let pairs: Vec<String> = s
                        .anticorrelations
                        .iter()
                        .map(|(a, b)| format!("{} ~ {}", a.name, b.name))
                        .collect();
                    let _ = write!(out, "; anticorrelate {}", pairs.join(", "));
                }
                out.push_str(" }");
            }
            Decl::Event(e) => {
                let _ = write!(out, "event {} on {} = {{ ", e.name.name, e.space.name);
                assignments(&mut out, &e.assignments);
                out.push_str(" }");
            }
            Decl::Ineq(i) => {
                let _ = write!(out, "ineq {} on {} : ", i.name.name, i.space.name);
                side(&mut out, &i.lhs);
                out.push_str(" <= ");
                if let Some(c) = i.constant {
                    let _ = write!(out, "{c}");
                    if !i.rhs.is_empty() {
                        out.push_str(" + ");
                    }
                }
                side(&mut out, &i.rhs);
            }
            Decl::Builtin(b) => {
                out.push_str("builtin ");
                out.push_str(&b.kind.name);
                if let Some(n) = b.n {
                    let _ = write!(out, " {n}");
                }
            }
        }
        out.push('\n');
    }
    out
}
