//! `sets`: the subset facts behind the two-particle inequalities.

use std::io::Write;
use std::sync::Arc;

use realism_core::outcome::{Event, OutcomeSpace};
use realism_core::suite::events::*;

use crate::CliError;

fn signs(space: &Arc<OutcomeSpace>, atom: usize) -> String {
    let a = space.atom(atom);
    (0..space.vars().len()).map(|l| a.sign(l).symbol()).collect()
}

fn members(space: &Arc<OutcomeSpace>, e: &Event) -> String {
    e.indices().map(|i| signs(space, i)).collect::<Vec<_>>().join(" ")
}

/// Prints `lhs ⊆ union(rhs)` and returns whether it matched `expected`.
fn fact(
    out: &mut dyn Write,
    space: &Arc<OutcomeSpace>,
    text: &str,
    lhs: &Event,
    rhs: &[Event],
    expected: bool,
) -> Result<bool, CliError> {
    let union = rhs
        .iter()
        .try_fold(Event::empty(space), |acc, e| acc.union(e))
        .expect("events share the space");
    let check = lhs.is_subset(&union).expect("events share the space");
    write!(out, "{text}: {}", check.subset)?;
    if let Some(w) = check.witness {
        let all: Vec<String> = lhs
            .indices()
            .filter(|&i| !union.contains(i))
            .map(|i| signs(space, i))
            .collect();
        write!(
            out,
            "\n  witness {} ({{{}}}); all atoms outside the union: {}",
            signs(space, w),
            space.describe_atom(w),
            all.join(" ")
        )?;
    }
    writeln!(out)?;
    Ok(check.subset == expected)
}

pub fn run(out: &mut dyn Write) -> Result<(), CliError> {
    let mut ok = true;

    let s = lg3_space();
    writeln!(out, "Omega(LG): {} atoms, labels {}", s.len(), s.vars().names().join(" "))?;
    ok &= fact(out, &s, "K32 <= K21 u K31", &lg3_k32(&s), &[lg3_k21(&s), lg3_k31(&s)], true)?;
    writeln!(out)?;

    let s = lg_pair_space();
    writeln!(out, "Omega(LG~): {} atoms, labels {}", s.len(), s.vars().names().join(" "))?;
    let events = [
        ("K~32", lgt_k32(&s)),
        ("K~31", lgt_k31(&s)),
        ("K~12", lgt_k12(&s)),
        ("K~21", lgt_k21(&s)),
        ("K~23", lgt_k23(&s)),
    ];
    for (name, e) in &events {
        writeln!(out, "{name} ({} atoms): {}", e.len(), members(&s, e))?;
    }
    ok &= fact(out, &s, "K~32 <= K~31 u K~12", &lgt_k32(&s), &[lgt_k31(&s), lgt_k12(&s)], true)?;
    ok &= fact(out, &s, "K~21 <= K~23 u K~31", &lgt_k21(&s), &[lgt_k23(&s), lgt_k31(&s)], false)?;

    if ok {
        Ok(())
    } else {
        Err(CliError::Regression("a subset fact did not reproduce".into()))
    }
}
