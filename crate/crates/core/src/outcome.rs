//! Finite Kolmogorov models over dichotomic variables.
//!
//! An [`OutcomeSpace`] enumerates every complete sign assignment (atom) that
//! is compatible with the anticorrelation constraints of its
//! [`VariableSet`]. Events are sets of atoms, measures are non-negative
//! weight vectors over atoms, and a [`LinearInequality`] is linear in the
//! measure with integer term multiplicities, so its classical validity can
//! be decided exactly on the delta measures.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use rand::Rng;
use thiserror::Error;

/// Tolerance on `Σ w = 1` for a measure to count as normalized.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Largest number of free (non-mirrored) variables a space may have.
pub const MAX_FREE_VARIABLES: usize = 24;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OutcomeError {
    #[error("duplicate variable label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown variable label `{0}`")]
    UnknownLabel(String),
    #[error("label `{0}` appears in more than one anticorrelation constraint")]
    LabelInTwoConstraints(String),
    #[error("label `{0}` cannot be anticorrelated with itself")]
    SelfAnticorrelation(String),
    #[error("label `{0}` is constrained to both signs")]
    ConflictingConstraint(String),
    #[error("{0} free variables exceed the supported maximum of {MAX_FREE_VARIABLES}")]
    TooManyVariables(usize),
    #[error("objects belong to different outcome spaces")]
    SpaceMismatch,
    #[error("expected {expected} per-atom values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("atom index {index} out of range for a space of {len} atoms")]
    AtomOutOfRange { index: usize, len: usize },
    #[error("weight {value} at atom {index} is negative or not finite")]
    InvalidWeight { index: usize, value: f64 },
    #[error("measure is not normalized (total {0}) but the inequality has a nonzero constant")]
    NotNormalized(f64),
    #[error("inequality constant {0} must be finite and non-negative")]
    InvalidConstant(f64),
}

pub type Result<T> = std::result::Result<T, OutcomeError>;

/// Value of a dichotomic observable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Ordered labels plus the anticorrelated pairs among them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableSet {
    names: Vec<String>,
    anticorrelations: Vec<(usize, usize)>,
}

impl VariableSet {
    /// Free variables only.
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::with_anticorrelations(names, std::iter::empty::<(&str, &str)>())
    }

    pub fn with_anticorrelations<I, S, P, A, B>(names: I, pairs: P) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
        P: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(OutcomeError::DuplicateLabel(name.clone()));
            }
        }
        if names.len() > 64 {
            return Err(OutcomeError::TooManyVariables(names.len()));
        }
        let lookup = |label: &str| {
            names
                .iter()
                .position(|n| n == label)
                .ok_or_else(|| OutcomeError::UnknownLabel(label.to_string()))
        };
        let mut used = vec![false; names.len()];
        let mut anticorrelations = Vec::new();
        for (a, b) in pairs {
            let (a, b) = (a.as_ref(), b.as_ref());
            let (i, j) = (lookup(a)?, lookup(b)?);
            if i == j {
                return Err(OutcomeError::SelfAnticorrelation(a.to_string()));
            }
            for k in [i, j] {
                if used[k] {
                    return Err(OutcomeError::LabelInTwoConstraints(names[k].clone()));
                }
                used[k] = true;
            }
            anticorrelations.push((i.min(j), i.max(j)));
        }
        let free = names.len() - anticorrelations.len();
        if free > MAX_FREE_VARIABLES {
            return Err(OutcomeError::TooManyVariables(free));
        }
        Ok(VariableSet {
            names,
            anticorrelations,
        })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Anticorrelated pairs as label indices, smaller index first.
    pub fn anticorrelations(&self) -> &[(usize, usize)] {
        &self.anticorrelations
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.names.iter().position(|n| n == label)
    }

    /// Partner of `index` under an anticorrelation constraint, if any.
    pub fn partner(&self, index: usize) -> Option<usize> {
        self.anticorrelations.iter().find_map(|&(a, b)| {
            if a == index {
                Some(b)
            } else if b == index {
                Some(a)
            } else {
                None
            }
        })
    }
}

/// A complete sign assignment; bit `i` set means label `i` is `-`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Atom {
    bits: u64,
}

impl Atom {
    pub fn sign(&self, label: usize) -> Sign {
        if self.bits >> label & 1 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }
}

/// All constraint-satisfying atoms of a [`VariableSet`], in canonical order.
///
/// Canonical order is lexicographic over the declared labels with `+`
/// before `-`; the later member of each anticorrelated pair is mirrored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutcomeSpace {
    vars: VariableSet,
    atoms: Vec<Atom>,
    free: Vec<usize>,
}

impl OutcomeSpace {
    pub fn build(vars: VariableSet) -> Arc<OutcomeSpace> {
        let mirrored: Vec<(usize, usize)> = vars.anticorrelations.clone();
        let free: Vec<usize> = (0..vars.len())
            .filter(|i| !mirrored.iter().any(|&(_, b)| b == *i))
            .collect();
        let count = 1usize << free.len();
        let atoms = (0..count)
            .map(|index| {
                let mut bits = 0u64;
                for (digit, &label) in free.iter().enumerate() {
                    let shift = free.len() - 1 - digit;
                    if index >> shift & 1 == 1 {
                        bits |= 1 << label;
                    }
                }
                for &(a, b) in &mirrored {
                    if bits >> a & 1 == 0 {
                        bits |= 1 << b;
                    }
                }
                Atom { bits }
            })
            .collect();
        Arc::new(OutcomeSpace { vars, atoms, free })
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atom(&self, index: usize) -> Atom {
        self.atoms[index]
    }

    /// Canonical index of an atom, or `None` if it violates a constraint.
    pub fn index_of_atom(&self, atom: Atom) -> Option<usize> {
        let satisfies = self
            .vars
            .anticorrelations
            .iter()
            .all(|&(a, b)| atom.sign(a) != atom.sign(b));
        if !satisfies || atom.bits >> self.vars.len() != 0 {
            return None;
        }
        let index = self.free.iter().fold(0usize, |acc, &label| {
            (acc << 1) | (atom.bits >> label & 1) as usize
        });
        Some(index)
    }

    /// Looks up the atom with the given full assignment (declared label order).
    pub fn index_of_signs(&self, signs: &[Sign]) -> Option<usize> {
        if signs.len() != self.vars.len() {
            return None;
        }
        let bits = signs
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Sign::Minus)
            .fold(0u64, |acc, (i, _)| acc | 1 << i);
        self.index_of_atom(Atom { bits })
    }

    /// `label=sign` pairs of an atom, e.g. `q3=+, q2=-, q1=+`.
    pub fn describe_atom(&self, index: usize) -> String {
        let atom = self.atoms[index];
        self.vars
            .names
            .iter()
            .enumerate()
            .map(|(i, name)| format!("{name}={}", atom.sign(i)))
            .collect::<Vec<_>>()
            .join(", ")
    }

    fn same(a: &Arc<OutcomeSpace>, b: &Arc<OutcomeSpace>) -> bool {
        Arc::ptr_eq(a, b) || a.vars == b.vars
    }
}

/// Fixed-width set of atom indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct AtomSet {
    words: Vec<u64>,
    len: usize,
}

impl AtomSet {
    fn empty(len: usize) -> Self {
        AtomSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    fn full(len: usize) -> Self {
        let mut set = Self::empty(len);
        for i in 0..len {
            set.insert(i);
        }
        set
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn zip(&self, other: &AtomSet, op: impl Fn(u64, u64) -> u64) -> AtomSet {
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| op(*a, *b))
            .collect();
        AtomSet {
            words,
            len: self.len,
        }
    }

    fn complement(&self) -> AtomSet {
        let full = Self::full(self.len);
        self.zip(&full, |a, f| !a & f)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }
}

/// A set of atoms of one outcome space.
#[derive(Debug, Clone)]
pub struct Event {
    space: Arc<OutcomeSpace>,
    members: AtomSet,
}

impl PartialEq for Event {
    fn eq(&self, other: &Self) -> bool {
        OutcomeSpace::same(&self.space, &other.space) && self.members == other.members
    }
}

/// Result of [`Event::is_subset`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetCheck {
    pub subset: bool,
    /// Index of some atom in `e1 \ e2` when `subset` is false.
    pub witness: Option<usize>,
}

impl Event {
    pub fn empty(space: &Arc<OutcomeSpace>) -> Event {
        Event {
            space: Arc::clone(space),
            members: AtomSet::empty(space.len()),
        }
    }

    pub fn full(space: &Arc<OutcomeSpace>) -> Event {
        Event {
            space: Arc::clone(space),
            members: AtomSet::full(space.len()),
        }
    }

    /// All atoms matching every `(label, sign)` constraint.
    ///
    /// Repeating a constraint with the same sign is allowed; constraints that
    /// clash with an anticorrelation pair simply yield the empty event.
    pub fn from_assignments<S: AsRef<str>>(
        space: &Arc<OutcomeSpace>,
        constraints: &[(S, Sign)],
    ) -> Result<Event> {
        let mut fixed: Vec<(usize, Sign)> = Vec::with_capacity(constraints.len());
        for (label, sign) in constraints {
            let label = label.as_ref();
            let index = space
                .vars
                .index_of(label)
                .ok_or_else(|| OutcomeError::UnknownLabel(label.to_string()))?;
            match fixed.iter().find(|(i, _)| *i == index) {
                Some((_, s)) if s != sign => {
                    return Err(OutcomeError::ConflictingConstraint(label.to_string()))
                }
                Some(_) => {}
                None => fixed.push((index, *sign)),
            }
        }
        let mut members = AtomSet::empty(space.len());
        for (i, atom) in space.atoms.iter().enumerate() {
            if fixed.iter().all(|&(label, sign)| atom.sign(label) == sign) {
                members.insert(i);
            }
        }
        Ok(Event {
            space: Arc::clone(space),
            members,
        })
    }

    pub fn from_indices(space: &Arc<OutcomeSpace>, indices: &[usize]) -> Result<Event> {
        let mut members = AtomSet::empty(space.len());
        for &i in indices {
            if i >= space.len() {
                return Err(OutcomeError::AtomOutOfRange {
                    index: i,
                    len: space.len(),
                });
            }
            members.insert(i);
        }
        Ok(Event {
            space: Arc::clone(space),
            members,
        })
    }

    pub fn space(&self) -> &Arc<OutcomeSpace> {
        &self.space
    }

    pub fn len(&self) -> usize {
        self.members.count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, atom: usize) -> bool {
        atom < self.members.len && self.members.contains(atom)
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    fn check(&self, other: &Event) -> Result<()> {
        if OutcomeSpace::same(&self.space, &other.space) {
            Ok(())
        } else {
            Err(OutcomeError::SpaceMismatch)
        }
    }

    pub fn union(&self, other: &Event) -> Result<Event> {
        self.check(other)?;
        Ok(Event {
            space: Arc::clone(&self.space),
            members: self.members.zip(&other.members, |a, b| a | b),
        })
    }

    pub fn intersect(&self, other: &Event) -> Result<Event> {
        self.check(other)?;
        Ok(Event {
            space: Arc::clone(&self.space),
            members: self.members.zip(&other.members, |a, b| a & b),
        })
    }

    pub fn complement(&self) -> Event {
        Event {
            space: Arc::clone(&self.space),
            members: self.members.complement(),
        }
    }

    pub fn is_subset(&self, other: &Event) -> Result<SubsetCheck> {
        self.check(other)?;
        let witness = self.indices().find(|&i| !other.members.contains(i));
        Ok(SubsetCheck {
            subset: witness.is_none(),
            witness,
        })
    }
}

/// Non-negative weights on the atoms of a space.
#[derive(Debug, Clone)]
pub struct Measure {
    space: Arc<OutcomeSpace>,
    weights: Vec<f64>,
    normalized: bool,
}

impl Measure {
    pub fn new(space: &Arc<OutcomeSpace>, weights: Vec<f64>) -> Result<Measure> {
        if weights.len() != space.len() {
            return Err(OutcomeError::LengthMismatch {
                expected: space.len(),
                got: weights.len(),
            });
        }
        if let Some((index, &value)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| !w.is_finite() || **w < 0.0)
        {
            return Err(OutcomeError::InvalidWeight { index, value });
        }
        let total: f64 = weights.iter().sum();
        Ok(Measure {
            space: Arc::clone(space),
            normalized: (total - 1.0).abs() <= NORMALIZATION_TOL,
            weights,
        })
    }

    pub fn uniform(space: &Arc<OutcomeSpace>) -> Measure {
        let w = 1.0 / space.len() as f64;
        Measure {
            space: Arc::clone(space),
            weights: vec![w; space.len()],
            normalized: true,
        }
    }

    pub fn delta(space: &Arc<OutcomeSpace>, atom: usize) -> Result<Measure> {
        if atom >= space.len() {
            return Err(OutcomeError::AtomOutOfRange {
                index: atom,
                len: space.len(),
            });
        }
        let mut weights = vec![0.0; space.len()];
        weights[atom] = 1.0;
        Ok(Measure {
            space: Arc::clone(space),
            weights,
            normalized: true,
        })
    }

    /// Uniformly distributed point of the probability simplex.
    pub fn random<R: Rng + ?Sized>(space: &Arc<OutcomeSpace>, rng: &mut R) -> Measure {
        // normalized i.i.d. exponentials are Dirichlet(1, ..., 1)
        let raw: Vec<f64> = (0..space.len())
            .map(|_| -(1.0 - rng.gen::<f64>()).ln())
            .collect();
        let total: f64 = raw.iter().sum();
        let mut weights: Vec<f64> = raw.iter().map(|w| w / total).collect();
        // push the rounding residue into the largest weight
        let residue = 1.0 - weights.iter().sum::<f64>();
        if let Some(max) = weights.iter_mut().max_by(|a, b| a.total_cmp(b)) {
            *max += residue;
        }
        Measure::new(space, weights).expect("simplex sample is a valid measure")
    }

    /// Non-negative weights with no normalization, scaled by `scale`.
    pub fn random_unnormalized<R: Rng + ?Sized>(
        space: &Arc<OutcomeSpace>,
        rng: &mut R,
        scale: f64,
    ) -> Measure {
        let weights = (0..space.len()).map(|_| rng.gen::<f64>() * scale).collect();
        Measure::new(space, weights).expect("non-negative finite weights")
    }

    pub fn space(&self) -> &Arc<OutcomeSpace> {
        &self.space
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn total(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// `Σ_{ω ∈ e} w(ω)`; covers every marginalization over unmeasured variables.
    pub fn probability(&self, event: &Event) -> Result<f64> {
        if !OutcomeSpace::same(&self.space, &event.space) {
            return Err(OutcomeError::SpaceMismatch);
        }
        Ok(event.indices().map(|i| self.weights[i]).sum())
    }

    /// Atom carrying the largest weight (first in canonical order on ties).
    pub fn argmax(&self) -> usize {
        self.weights
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |best, (i, &w)| {
                if w > best.1 {
                    (i, w)
                } else {
                    best
                }
            })
            .0
    }
}

/// Free-function form of [`Measure::probability`].
pub fn marginal_prob(measure: &Measure, event: &Event) -> Result<f64> {
    measure.probability(event)
}

/// `Σ lhs·w <= rhs_const + Σ rhs·w` with integer per-atom multiplicities.
#[derive(Debug, Clone)]
pub struct LinearInequality {
    name: String,
    space: Arc<OutcomeSpace>,
    lhs: Vec<u32>,
    rhs: Vec<u32>,
    rhs_const: f64,
}

impl PartialEq for LinearInequality {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.same_coefficients(other)
    }
}

/// Classical-validity decision over the probability simplex.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub holds: bool,
    /// Delta measure on a maximally violating atom when `holds` is false.
    pub witness: Option<Measure>,
    /// `rhs_const + rhs(ω) - lhs(ω)` for every atom ω.
    pub slack: Vec<f64>,
}

impl Verdict {
    pub fn witness_atom(&self) -> Option<usize> {
        self.witness.as_ref().map(Measure::argmax)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`; negative means violated.
    pub margin: f64,
}

impl LinearInequality {
    pub fn new(name: impl Into<String>, space: &Arc<OutcomeSpace>) -> LinearInequality {
        LinearInequality {
            name: name.into(),
            space: Arc::clone(space),
            lhs: vec![0; space.len()],
            rhs: vec![0; space.len()],
            rhs_const: 0.0,
        }
    }

    /// Builds from coefficient vectors directly.
    pub fn from_coefficients(
        name: impl Into<String>,
        space: &Arc<OutcomeSpace>,
        lhs: Vec<u32>,
        rhs: Vec<u32>,
        rhs_const: f64,
    ) -> Result<LinearInequality> {
        for v in [&lhs, &rhs] {
            if v.len() != space.len() {
                return Err(OutcomeError::LengthMismatch {
                    expected: space.len(),
                    got: v.len(),
                });
            }
        }
        let mut ineq = LinearInequality::new(name, space);
        ineq.lhs = lhs;
        ineq.rhs = rhs;
        ineq.set_constant(rhs_const)?;
        Ok(ineq)
    }

    fn add(&mut self, event: &Event, lhs: bool) -> Result<()> {
        if !OutcomeSpace::same(&self.space, &event.space) {
            return Err(OutcomeError::SpaceMismatch);
        }
        let side = if lhs { &mut self.lhs } else { &mut self.rhs };
        for i in event.indices() {
            side[i] += 1;
        }
        Ok(())
    }

    /// Adds one probability term `w(event)` to the left side.
    pub fn add_lhs(&mut self, event: &Event) -> Result<()> {
        self.add(event, true)
    }

    /// Adds one probability term `w(event)` to the right side.
    pub fn add_rhs(&mut self, event: &Event) -> Result<()> {
        self.add(event, false)
    }

    pub fn set_constant(&mut self, value: f64) -> Result<()> {
        if !value.is_finite() || value < 0.0 {
            return Err(OutcomeError::InvalidConstant(value));
        }
        self.rhs_const = value;
        Ok(())
    }

    pub fn with_lhs(mut self, events: &[&Event]) -> Result<Self> {
        for e in events {
            self.add_lhs(e)?;
        }
        Ok(self)
    }

    pub fn with_rhs(mut self, events: &[&Event]) -> Result<Self> {
        for e in events {
            self.add_rhs(e)?;
        }
        Ok(self)
    }

    pub fn with_constant(mut self, value: f64) -> Result<Self> {
        self.set_constant(value)?;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rename(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn space(&self) -> &Arc<OutcomeSpace> {
        &self.space
    }

    pub fn lhs_coeff(&self) -> &[u32] {
        &self.lhs
    }

    pub fn rhs_coeff(&self) -> &[u32] {
        &self.rhs
    }

    pub fn rhs_const(&self) -> f64 {
        self.rhs_const
    }

    /// Same space, coefficient vectors and constant; names are ignored.
    pub fn same_coefficients(&self, other: &LinearInequality) -> bool {
        OutcomeSpace::same(&self.space, &other.space)
            && self.lhs == other.lhs
            && self.rhs == other.rhs
            && self.rhs_const == other.rhs_const
    }

    /// Atoms with a positive right-hand coefficient.
    pub fn rhs_support(&self) -> Event {
        let indices: Vec<usize> = (0..self.space.len()).filter(|&i| self.rhs[i] > 0).collect();
        Event::from_indices(&self.space, &indices).expect("indices are in range")
    }

    fn slack(&self) -> Vec<f64> {
        self.lhs
            .iter()
            .zip(&self.rhs)
            .map(|(&l, &r)| self.rhs_const + f64::from(r) - f64::from(l))
            .collect()
    }

    fn decide(&self, candidates: impl Iterator<Item = usize>) -> Verdict {
        let slack = self.slack();
        // first atom in canonical order among those with minimal slack
        let worst = candidates.fold(None::<usize>, |best, i| match best {
            Some(b) if slack[b] <= slack[i] => Some(b),
            _ => Some(i),
        });
        let violating = worst.filter(|&i| slack[i] < 0.0);
        Verdict {
            holds: violating.is_none(),
            witness: violating.map(|i| Measure::delta(&self.space, i).expect("index in range")),
            slack,
        }
    }

    /// Validity for every normalized measure (and every non-negative measure
    /// when the constant is zero).
    ///
    /// The simplex's vertices are the delta measures, so per-atom domination
    /// `lhs(ω) <= rhs_const + rhs(ω)` is necessary and sufficient.
    pub fn holds_universally(&self) -> Verdict {
        self.decide(0..self.space.len())
    }

    /// Validity for measures supported on `support` only.
    pub fn holds_on_support(&self, support: &Event) -> Result<Verdict> {
        if !OutcomeSpace::same(&self.space, &support.space) {
            return Err(OutcomeError::SpaceMismatch);
        }
        Ok(self.decide(support.indices()))
    }

    pub fn evaluate(&self, measure: &Measure) -> Result<Evaluation> {
        if !OutcomeSpace::same(&self.space, &measure.space) {
            return Err(OutcomeError::SpaceMismatch);
        }
        if self.rhs_const != 0.0 && !measure.normalized {
            return Err(OutcomeError::NotNormalized(measure.total()));
        }
        let dot = |coeff: &[u32]| -> f64 {
            coeff
                .iter()
                .zip(&measure.weights)
                .map(|(&c, &w)| f64::from(c) * w)
                .sum()
        };
        let lhs = dot(&self.lhs);
        let rhs = self.rhs_const + dot(&self.rhs);
        Ok(Evaluation {
            lhs,
            rhs,
            margin: rhs - lhs,
        })
    }
}
