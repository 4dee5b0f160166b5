//! `check`: classical validity verdicts.

use std::io::Write;

use realism_core::dsl::{compile_source, DslError};
use realism_core::outcome::LinearInequality;
use realism_core::suite::{
    build_inequality, check_kind, classical_validity_report, default_support, InequalityKind,
    ValidityEntry,
};

use crate::{CheckArgs, CliError};

fn verdict(holds: bool) -> &'static str {
    if holds {
        "HOLDS"
    } else {
        "FAILS"
    }
}

/// Witness atom description and the margin of the delta measure on it.
fn witness_text(ineq: &LinearInequality, description: Option<String>) -> String {
    let verdict = ineq.holds_universally();
    match (verdict.witness, description) {
        (Some(w), Some(d)) => {
            let margin = ineq.evaluate(&w).map(|e| e.margin).unwrap_or(f64::NAN);
            format!("  witness: delta at {{{d}}}, margin {margin}")
        }
        _ => String::new(),
    }
}

fn entry_line(e: &ValidityEntry, ineq: &LinearInequality) -> String {
    let mut line = format!(
        "{:<20} {}  (on rhs support: {})",
        e.kind.to_string(),
        verdict(e.holds),
        verdict(e.holds_on_support)
    );
    line.push_str(&witness_text(ineq, e.witness.clone()));
    if !e.as_expected() {
        line.push_str(&format!("  UNEXPECTED, expected {}", verdict(e.expected)));
    }
    line
}

fn builtins(selector: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let entries = if selector.eq_ignore_ascii_case("all") {
        classical_validity_report()
    } else {
        let kind: InequalityKind = selector
            .parse()
            .map_err(|e| CliError::Usage(format!("--builtin: {e}")))?;
        vec![check_kind(kind).map_err(|e| CliError::Usage(e.to_string()))?]
    };
    let mut unexpected = Vec::new();
    for e in &entries {
        let (_, ineq) = build_inequality(e.kind).map_err(|err| CliError::Usage(err.to_string()))?;
        writeln!(out, "{}", entry_line(e, &ineq))?;
        if !e.as_expected() {
            unexpected.push(e.kind.to_string());
        }
    }
    if unexpected.is_empty() {
        Ok(())
    } else {
        Err(CliError::Regression(format!("unexpected verdict for {}", unexpected.join(", "))))
    }
}

/// The builtin with identical coefficients on an identical space, if any.
fn matching_builtin(ineq: &LinearInequality) -> Option<InequalityKind> {
    InequalityKind::report_instances().into_iter().find(|&k| {
        build_inequality(k)
            .map(|(_, b)| b.same_coefficients(ineq))
            .unwrap_or(false)
    })
}

fn file(path: &std::path::Path, out: &mut dyn Write) -> Result<(), CliError> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let program = compile_source(&src).map_err(|e| {
        let stage = match e {
            DslError::Parse(_) => "parse error",
            DslError::Compile(_) => "compile error",
        };
        CliError::Parse(format!("{}: {stage}: {e}", path.display()))
    })?;
    for w in &program.warnings {
        eprintln!("realism: {}: warning: {w}", path.display());
    }
    let mut unexpected = Vec::new();
    for c in &program.inequalities {
        let ineq = &c.inequality;
        let verdict_all = ineq.holds_universally();
        let restricted = ineq
            .holds_on_support(&default_support(ineq))
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let known = c.builtin.or_else(|| matching_builtin(ineq));
        let mut line = format!(
            "{:<20} {}  (on rhs support: {})",
            ineq.name(),
            verdict(verdict_all.holds),
            verdict(restricted.holds)
        );
        let description = verdict_all.witness_atom().map(|i| ineq.space().describe_atom(i));
        line.push_str(&witness_text(ineq, description));
        if let Some(kind) = known {
            line.push_str(&format!("  [= {kind}]"));
            if verdict_all.holds != kind.expected_to_hold() {
                line.push_str(&format!("  UNEXPECTED, expected {}", verdict(kind.expected_to_hold())));
                unexpected.push(ineq.name().to_string());
            }
        }
        writeln!(out, "{line}")?;
    }
    if unexpected.is_empty() {
        Ok(())
    } else {
        Err(CliError::Regression(format!("unexpected verdict for {}", unexpected.join(", "))))
    }
}

pub fn run(args: &CheckArgs, out: &mut dyn Write) -> Result<(), CliError> {
    match (&args.builtin, &args.file) {
        (Some(sel), None) => builtins(sel, out),
        (None, Some(path)) => file(path, out),
        _ => Err(CliError::Usage("give either FILE or --builtin".into())),
    }
}
