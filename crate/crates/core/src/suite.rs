//! The named Wigner and Leggett–Garg inequalities as [`LinearInequality`]s.
//!
//! Three-time and two-particle events are transcribed from their explicit
//! atom lists (see [`events`]); the n-time chains are generated from
//! partial assignments.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::outcome::{
    Event, LinearInequality, OutcomeError, OutcomeSpace, Sign, VariableSet,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SuiteError {
    #[error("{kind} needs n >= 3, got {n}")]
    ChainTooShort { kind: &'static str, n: usize },
    #[error("unknown inequality kind `{0}`")]
    UnknownKind(String),
    #[error(transparent)]
    Outcome(#[from] OutcomeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InequalityKind {
    /// Three-time Leggett–Garg inequality in Wigner form.
    Lgw3,
    /// Three-time form with constant 1, defined on the whole space.
    Lgw3Closed,
    /// n-time chain.
    Lgwn(usize),
    /// Single-particle Wigner inequality on Ω.
    WignerSingle,
    /// Two-particle Wigner inequality on the anticorrelated space Ω̃.
    WignerPair,
    /// Cyclic permutation a→b→c→a of [`InequalityKind::WignerPair`].
    WignerPairCyclic,
    /// Finite-n chain over axes A = C_n, ..., C_1 = B.
    WignerChain(usize),
    /// Two-subsystem inequality for the hypothesis of realism.
    Lgw2Pair,
    /// Cyclically permuted time labels of [`InequalityKind::Lgw2Pair`]; not valid.
    NoLgw2Pair,
}

impl InequalityKind {
    /// Instances covered by the classical-validity report.
    pub fn report_instances() -> Vec<InequalityKind> {
        use InequalityKind::*;
        let mut kinds = vec![Lgw3, Lgw3Closed];
        kinds.extend([3, 4, 5, 8].map(Lgwn));
        kinds.extend([WignerSingle, WignerPair, WignerPairCyclic]);
        kinds.extend([3, 4, 5, 8].map(WignerChain));
        kinds.extend([Lgw2Pair, NoLgw2Pair]);
        kinds
    }

    /// Whether the inequality is classically valid on its space.
    pub fn expected_to_hold(self) -> bool {
        self != InequalityKind::NoLgw2Pair
    }

    pub fn base_name(self) -> &'static str {
        use InequalityKind::*;
        match self {
            Lgw3 => "LGW3",
            Lgw3Closed => "LGW3_CLOSED",
            Lgwn(_) => "LGWN",
            WignerSingle => "WIGNER_SINGLE",
            WignerPair => "WIGNER_PAIR",
            WignerPairCyclic => "WIGNER_PAIR_CYCLIC",
            WignerChain(_) => "WIGNER_CHAIN",
            Lgw2Pair => "LGW2_PAIR",
            NoLgw2Pair => "NO_LGW2_PAIR",
        }
    }

    pub fn chain_length(self) -> Option<usize> {
        match self {
            InequalityKind::Lgwn(n) | InequalityKind::WignerChain(n) => Some(n),
            _ => None,
        }
    }

    /// Parses a base name plus optional chain length, as used by `builtin NAME N`.
    pub fn from_parts(name: &str, n: Option<usize>) -> Result<InequalityKind, SuiteError> {
        use InequalityKind::*;
        let unknown = || SuiteError::UnknownKind(match n {
            Some(n) => format!("{name} {n}"),
            None => name.to_string(),
        });
        let kind = match (name, n) {
            ("LGW3", None) => Lgw3,
            ("LGW3_CLOSED", None) => Lgw3Closed,
            ("LGWN", Some(n)) => Lgwn(n),
            ("WIGNER_SINGLE", None) => WignerSingle,
            ("WIGNER_PAIR", None) => WignerPair,
            ("WIGNER_PAIR_CYCLIC", None) => WignerPairCyclic,
            ("WIGNER_CHAIN", Some(n)) => WignerChain(n),
            ("LGW2_PAIR", None) => Lgw2Pair,
            ("NO_LGW2_PAIR", None) => NoLgw2Pair,
            _ => return Err(unknown()),
        };
        kind.validate()?;
        Ok(kind)
    }

    fn validate(self) -> Result<(), SuiteError> {
        match self.chain_length() {
            Some(n) if n < 3 => Err(SuiteError::ChainTooShort {
                kind: self.base_name(),
                n,
            }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for InequalityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.chain_length() {
            Some(n) => write!(f, "{}{{{n}}}", self.base_name()),
            None => f.write_str(self.base_name()),
        }
    }
}

impl FromStr for InequalityKind {
    type Err = SuiteError;

    /// Accepts `LGW3`, `LGWN{4}`, `WIGNER_CHAIN{5}` and so on.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once('{') {
            Some((base, rest)) => {
                let n = rest
                    .strip_suffix('}')
                    .and_then(|n| n.parse().ok())
                    .ok_or_else(|| SuiteError::UnknownKind(s.to_string()))?;
                InequalityKind::from_parts(base, Some(n))
            }
            None => InequalityKind::from_parts(s, None),
        }
    }
}

/// Outcome spaces and the explicitly listed events that live on them.
pub mod events {
    use super::*;

    /// Union of the atoms written as sign strings in declared label order.
    pub fn union_of(space: &Arc<OutcomeSpace>, patterns: &[&str]) -> Event {
        let indices: Vec<usize> = patterns
            .iter()
            .map(|p| {
                let signs: Vec<Sign> = p
                    .chars()
                    .map(|c| if c == '+' { Sign::Plus } else { Sign::Minus })
                    .collect();
                space
                    .index_of_signs(&signs)
                    .unwrap_or_else(|| panic!("`{p}` is not an atom of the space"))
            })
            .collect();
        Event::from_indices(space, &indices).expect("indices come from the space")
    }

    pub(crate) fn assign(space: &Arc<OutcomeSpace>, c: &[(&str, Sign)]) -> Event {
        Event::from_assignments(space, c).expect("labels exist in the space")
    }

    /// Ω^(LG): one observable at three times, labels `q3, q2, q1`.
    pub fn lg3_space() -> Arc<OutcomeSpace> {
        OutcomeSpace::build(VariableSet::new(["q3", "q2", "q1"]).expect("distinct labels"))
    }

    /// Ω^(LGn): labels `q{n}, ..., q1`.
    pub fn lgn_space(n: usize) -> Arc<OutcomeSpace> {
        let names = (1..=n).rev().map(|i| format!("q{i}"));
        OutcomeSpace::build(VariableSet::new(names).expect("distinct labels"))
    }

    /// Ω: spin projections on three axes, labels `a, b, c`.
    pub fn wigner_space() -> Arc<OutcomeSpace> {
        OutcomeSpace::build(VariableSet::new(["a", "b", "c"]).expect("distinct labels"))
    }

    /// Ω̃: two fully anticorrelated particles, `a1 b1 c1 a2 b2 c2`.
    pub fn wigner_pair_space() -> Arc<OutcomeSpace> {
        OutcomeSpace::build(
            VariableSet::with_anticorrelations(
                ["a1", "b1", "c1", "a2", "b2", "c2"],
                [("a1", "a2"), ("b1", "b2"), ("c1", "c2")],
            )
            .expect("valid pairs"),
        )
    }

    /// Labels `a, c{n-1}, ..., c2, b` of the finite Wigner chain.
    pub fn wigner_chain_labels(n: usize) -> Vec<String> {
        let mut labels = vec!["a".to_string()];
        labels.extend((2..n).rev().map(|i| format!("c{i}")));
        labels.push("b".to_string());
        labels
    }

    pub fn wigner_chain_space(n: usize) -> Arc<OutcomeSpace> {
        OutcomeSpace::build(VariableSet::new(wigner_chain_labels(n)).expect("distinct labels"))
    }

    /// Ω^(LG̃): `q<particle>_<time>`, anticorrelated at the first time.
    pub fn lg_pair_space() -> Arc<OutcomeSpace> {
        OutcomeSpace::build(
            VariableSet::with_anticorrelations(
                ["q2_3", "q2_2", "q2_1", "q1_3", "q1_2", "q1_1"],
                [("q2_1", "q1_1")],
            )
            .expect("valid pairs"),
        )
    }

    /// 𝒦₃₂, 𝒦₂₁, 𝒦₃₁ on Ω^(LG).
    pub fn lg3_k32(s: &Arc<OutcomeSpace>) -> Event {
        union_of(s, &["+-+", "+--"])
    }
    pub fn lg3_k21(s: &Arc<OutcomeSpace>) -> Event {
        union_of(s, &["+-+", "--+"])
    }
    pub fn lg3_k31(s: &Arc<OutcomeSpace>) -> Event {
        union_of(s, &["++-", "+--"])
    }
    pub fn lg3_k1_plus(s: &Arc<OutcomeSpace>) -> Event {
        union_of(s, &["+++", "+-+", "-++", "--+"])
    }
    pub fn lg3_k1_minus(s: &Arc<OutcomeSpace>) -> Event {
        union_of(s, &["++-", "+--", "-+-", "---"])
    }

    /// 𝒦_AB, 𝒦_BC, 𝒦_AC on Ω.
    pub fn wigner_kab(s: &Arc<OutcomeSpace>) -> Event {
        union_of(s, &["+-+", "+--"])
    }
    pub fn wigner_kbc(s: &Arc<OutcomeSpace>) -> Event {
        union_of(s, &["+-+", "--+"])
    }
    pub fn wigner_kac(s: &Arc<OutcomeSpace>) -> Event {
        union_of(s, &["++-", "+--"])
    }

    /// 𝒜, ℬ, 𝒞 and the cyclic variants on Ω̃.
    pub fn pair_a(s: &Arc<OutcomeSpace>) -> Event {
        union_of(s, &["-+++--", "-+-+-+"])
    }
    pub fn pair_b(s: &Arc<OutcomeSpace>) -> Event {
        union_of(s, &["-+-+-+", "++---+"])
    }
    pub fn pair_c(s: &Arc<OutcomeSpace>) -> Event {
        union_of(s, &["-+++--", "--+++-"])
    }
    pub fn pair_b_tilde(s: &Arc<OutcomeSpace>) -> Event {
        union_of(s, &["+-+-+-", "--+++-"])
    }
    pub fn pair_a_tilde(s: &Arc<OutcomeSpace>) -> Event {
        union_of(s, &["+-+-+-", "+---++"])
    }

    /// 𝒦̃₃₂ on Ω^(LG̃).
    pub fn lgt_k32(s: &Arc<OutcomeSpace>) -> Event {
        union_of(s, &["+-+++-", "+-+-+-", "+--+++", "+---++"])
    }
    /// 𝒦̃₃₁ on Ω^(LG̃).
    pub fn lgt_k31(s: &Arc<OutcomeSpace>) -> Event {
        union_of(
            s,
            &[
                "++-+++", "++-+-+", "++--++", "++---+", "+--+++", "+--+-+", "+---++", "+----+",
            ],
        )
    }
    /// 𝒦̃₁₂ on Ω^(LG̃).
    pub fn lgt_k12(s: &Arc<OutcomeSpace>) -> Event {
        union_of(
            s,
            &[
                "+++++-", "+++-+-", "+-+++-", "+-+-+-", "-++++-", "-++-+-", "--+++-", "--+-+-",
            ],
        )
    }
    /// 𝒦̃₂₁ on Ω^(LG̃).
    pub fn lgt_k21(s: &Arc<OutcomeSpace>) -> Event {
        union_of(
            s,
            &[
                "++-+++", "++--++", "++-+-+", "++---+", "-+-+++", "-+--++", "-+-+-+", "-+---+",
            ],
        )
    }
    /// 𝒦̃₂₃ on Ω^(LG̃).
    pub fn lgt_k23(s: &Arc<OutcomeSpace>) -> Event {
        union_of(s, &["++++--", "+++---", "++-+-+", "++---+"])
    }
}

/// Events `{C_i = +, C_{i-1} = -}` for consecutive labels, outermost first.
fn chain_terms(space: &Arc<OutcomeSpace>, labels: &[String]) -> Vec<Event> {
    labels
        .windows(2)
        .map(|w| events::assign(space, &[(&w[0], Sign::Plus), (&w[1], Sign::Minus)]))
        .collect()
}

fn chain_inequality(
    name: String,
    space: Arc<OutcomeSpace>,
    labels: &[String],
) -> Result<(Arc<OutcomeSpace>, LinearInequality), SuiteError> {
    let first = &labels[0];
    let last = &labels[labels.len() - 1];
    let lhs = events::assign(&space, &[(first, Sign::Plus), (last, Sign::Minus)]);
    let rhs = chain_terms(&space, labels);
    let rhs: Vec<&Event> = rhs.iter().collect();
    let ineq = LinearInequality::new(name, &space)
        .with_lhs(&[&lhs])?
        .with_rhs(&rhs)?;
    Ok((space, ineq))
}

/// The space of `kind` and its inequality in coefficient form.
pub fn build_inequality(
    kind: InequalityKind,
) -> Result<(Arc<OutcomeSpace>, LinearInequality), SuiteError> {
    use events::*;
    use InequalityKind::*;
    use Sign::{Minus as M, Plus as P};
    kind.validate()?;
    let name = kind.to_string();
    let built = match kind {
        Lgw3 => {
            let s = lg3_space();
            let ineq = LinearInequality::new(name, &s)
                .with_lhs(&[&lg3_k32(&s)])?
                .with_rhs(&[&lg3_k21(&s), &lg3_k31(&s)])?;
            (s, ineq)
        }
        Lgw3Closed => {
            let s = lg3_space();
            let ineq = LinearInequality::new(name, &s)
                .with_lhs(&[
                    &lg3_k32(&s),
                    &assign(&s, &[("q2", P), ("q1", P)]),
                    &assign(&s, &[("q3", M), ("q1", M)]),
                ])?
                .with_constant(1.0)?;
            (s, ineq)
        }
        Lgwn(n) => {
            let s = lgn_space(n);
            let labels: Vec<String> = s.vars().names().to_vec();
            chain_inequality(name, s, &labels)?
        }
        WignerSingle => {
            let s = wigner_space();
            let ineq = LinearInequality::new(name, &s)
                .with_lhs(&[&wigner_kab(&s)])?
                .with_rhs(&[&wigner_kbc(&s), &wigner_kac(&s)])?;
            (s, ineq)
        }
        WignerPair => {
            let s = wigner_pair_space();
            let ineq = LinearInequality::new(name, &s)
                .with_lhs(&[&pair_a(&s)])?
                .with_rhs(&[&pair_b(&s), &pair_c(&s)])?;
            (s, ineq)
        }
        WignerPairCyclic => {
            let s = wigner_pair_space();
            let ineq = LinearInequality::new(name, &s)
                .with_lhs(&[&pair_b_tilde(&s)])?
                .with_rhs(&[&pair_c(&s), &pair_a_tilde(&s)])?;
            (s, ineq)
        }
        WignerChain(n) => {
            let s = wigner_chain_space(n);
            let labels = wigner_chain_labels(n);
            chain_inequality(name, s, &labels)?
        }
        Lgw2Pair => {
            let s = lg_pair_space();
            let ineq = LinearInequality::new(name, &s)
                .with_lhs(&[&lgt_k32(&s)])?
                .with_rhs(&[&lgt_k31(&s), &lgt_k12(&s)])?;
            (s, ineq)
        }
        NoLgw2Pair => {
            let s = lg_pair_space();
            let ineq = LinearInequality::new(name, &s)
                .with_lhs(&[&lgt_k21(&s)])?
                .with_rhs(&[&lgt_k23(&s), &lgt_k31(&s)])?;
            (s, ineq)
        }
    };
    Ok(built)
}

/// One line of [`classical_validity_report`].
#[derive(Debug, Clone)]
pub struct ValidityEntry {
    pub kind: InequalityKind,
    pub name: String,
    pub holds: bool,
    /// Described witness atom when the inequality fails.
    pub witness: Option<String>,
    /// Verdict restricted to measures supported on the rhs events (the whole
    /// space when the constant is nonzero).
    pub holds_on_support: bool,
    pub expected: bool,
}

impl ValidityEntry {
    pub fn as_expected(&self) -> bool {
        self.holds == self.expected
    }
}

/// Support used for the restricted validity reading.
pub fn default_support(ineq: &LinearInequality) -> Event {
    if ineq.rhs_const() == 0.0 {
        ineq.rhs_support()
    } else {
        Event::full(ineq.space())
    }
}

pub fn check_kind(kind: InequalityKind) -> Result<ValidityEntry, SuiteError> {
    let (space, ineq) = build_inequality(kind)?;
    let verdict = ineq.holds_universally();
    let restricted = ineq.holds_on_support(&default_support(&ineq))?;
    Ok(ValidityEntry {
        kind,
        name: ineq.name().to_string(),
        holds: verdict.holds,
        witness: verdict.witness_atom().map(|i| space.describe_atom(i)),
        holds_on_support: restricted.holds,
        expected: kind.expected_to_hold(),
    })
}

/// Classical-validity verdicts for [`InequalityKind::report_instances`].
pub fn classical_validity_report() -> Vec<ValidityEntry> {
    InequalityKind::report_instances()
        .into_iter()
        .map(|k| check_kind(k).expect("report instances are well formed"))
        .collect()
}
