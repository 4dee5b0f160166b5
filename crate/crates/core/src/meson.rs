//! Neutral pseudoscalar meson mixing: flavor/mass bases, decaying time
//! evolution and sequential flavor measurements on a flavor-entangled pair.
//!
//! Flavor basis order is `(M, M̄)` for one meson and
//! `(MM, MM̄, M̄M, M̄M̄)` for the pair, meson 1 written first.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::linalg::{ComplexMatrix2, TwoParticleState, C64, ONE, ZERO};

/// Tolerance on `|p|² + |q|² = 1` and on `|p| = |q|`.
pub const NORM_TOL: f64 = 1e-12;

pub type TwoMesonState = TwoParticleState;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MesonError {
    #[error("|p|² + |q|² = {0}, expected 1")]
    NotNormalized(f64),
    #[error("p and q must both be nonzero")]
    ZeroMixing,
    #[error("widths must be positive, got gamma_L = {gamma_l}, gamma_H = {gamma_h}")]
    NonPositiveWidth { gamma_l: f64, gamma_h: f64 },
    #[error("kappa is undefined when delta_m = 0")]
    ZeroMassSplitting,
    #[error("parameter {0} is not finite")]
    NonFinite(&'static str),
    #[error("unknown species `{0}`")]
    UnknownSpecies(String),
    #[error("times must satisfy 0 <= t2 <= t3, got t2 = {t2}, t3 = {t3}")]
    InvalidTimes { t2: f64, t3: f64 },
    #[error("the closed form needs |p| = |q|, got |p| = {p}, |q| = {q}")]
    UnequalMixing { p: f64, q: f64 },
    #[error("the closed form covers only the M, M outcome pair")]
    ClosedFormOutcomes,
    #[error("need alpha > beta > 0, got alpha = {alpha}, beta = {beta}")]
    InvalidAngles { alpha: f64, beta: f64 },
    #[error("line {line}: {message}")]
    ParamsFile { line: usize, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixingParams {
    p: C64,
    q: C64,
    m_l: f64,
    m_h: f64,
    gamma_l: f64,
    gamma_h: f64,
}

impl MixingParams {
    pub fn new(
        p: C64,
        q: C64,
        m_l: f64,
        m_h: f64,
        gamma_l: f64,
        gamma_h: f64,
    ) -> Result<Self, MesonError> {
        for (name, v) in [
            ("p", p.re),
            ("p", p.im),
            ("q", q.re),
            ("q", q.im),
            ("m_L", m_l),
            ("m_H", m_h),
            ("gamma_L", gamma_l),
            ("gamma_H", gamma_h),
        ] {
            if !v.is_finite() {
                return Err(MesonError::NonFinite(name));
            }
        }
        let norm = p.norm_sqr() + q.norm_sqr();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(MesonError::NotNormalized(norm));
        }
        if p == ZERO || q == ZERO {
            return Err(MesonError::ZeroMixing);
        }
        if !(gamma_l > 0.0 && gamma_h > 0.0) {
            return Err(MesonError::NonPositiveWidth { gamma_l, gamma_h });
        }
        Ok(MixingParams {
            p,
            q,
            m_l,
            m_h,
            gamma_l,
            gamma_h,
        })
    }

    /// `p = q = 1/√2` with masses and widths given through their splittings.
    pub fn symmetric(m_l: f64, delta_m: f64, gamma: f64, delta_gamma: f64) -> Result<Self, MesonError> {
        let h = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        MixingParams::new(
            h,
            h,
            m_l,
            m_l + delta_m,
            gamma - delta_gamma / 2.0,
            gamma + delta_gamma / 2.0,
        )
    }

    pub fn p(&self) -> C64 {
        self.p
    }

    pub fn q(&self) -> C64 {
        self.q
    }

    pub fn m_l(&self) -> f64 {
        self.m_l
    }

    pub fn m_h(&self) -> f64 {
        self.m_h
    }

    pub fn gamma_l(&self) -> f64 {
        self.gamma_l
    }

    pub fn gamma_h(&self) -> f64 {
        self.gamma_h
    }

    pub fn delta_m(&self) -> f64 {
        self.m_h - self.m_l
    }

    pub fn delta_gamma(&self) -> f64 {
        self.gamma_h - self.gamma_l
    }

    /// Mean width.
    pub fn gamma(&self) -> f64 {
        0.5 * (self.gamma_h + self.gamma_l)
    }

    pub fn mean_mass(&self) -> f64 {
        0.5 * (self.m_h + self.m_l)
    }

    /// `ΔΓ / (2 Δm)`
    pub fn kappa(&self) -> Result<f64, MesonError> {
        let dm = self.delta_m();
        if dm == 0.0 {
            return Err(MesonError::ZeroMassSplitting);
        }
        Ok(self.delta_gamma() / (2.0 * dm))
    }

    /// `⟨M_L|M_H⟩ = |p|² - |q|²`
    pub fn overlap(&self) -> f64 {
        self.p.norm_sqr() - self.q.norm_sqr()
    }

    pub fn has_equal_mixing(&self) -> bool {
        (self.p.norm() - self.q.norm()).abs() <= NORM_TOL
    }

    /// Complex energies `(E_L, E_H)` with `E = m - iΓ/2`.
    pub fn complex_energies(&self) -> (C64, C64) {
        (
            C64::new(self.m_l, -self.gamma_l / 2.0),
            C64::new(self.m_h, -self.gamma_h / 2.0),
        )
    }

    /// Effective Hamiltonian `D⁻¹ diag(E_L, E_H) D` in the flavor basis.
    pub fn effective_hamiltonian(&self) -> ComplexMatrix2 {
        let (p, q) = (self.p, self.q);
        let (el, eh) = self.complex_energies();
        let d = ComplexMatrix2::new(q, p, q, -p).scale(ONE / (p * q * 2.0));
        let d_inv = ComplexMatrix2::new(p, p, q, -q);
        d_inv * ComplexMatrix2::diag(el, eh) * d
    }

    /// Flavor-basis decay matrix `i(H - H†)`.
    pub fn decay_matrix(&self) -> ComplexMatrix2 {
        let h = self.effective_hamiltonian();
        (h - h.adjoint()).scale(C64::new(0.0, 1.0))
    }

    /// Whether the decay matrix is positive semidefinite, i.e. evolution can
    /// only remove norm. Always true for `|p| = |q|`; for unequal mixing it
    /// bounds the overlap against the width splitting.
    pub fn is_dissipative(&self) -> bool {
        let g = self.decay_matrix();
        let det = (g.get(0, 0) * g.get(1, 1) - g.get(0, 1) * g.get(1, 0)).re;
        let scale = g.trace().re.abs().max(1.0);
        g.trace().re >= 0.0 && det >= -NORM_TOL * scale * scale
    }
}

impl fmt::Display for MixingParams {
    /// Round-trips through [`parse_params`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p_re = {:e}", self.p.re)?;
        writeln!(f, "p_im = {:e}", self.p.im)?;
        writeln!(f, "q_re = {:e}", self.q.re)?;
        writeln!(f, "q_im = {:e}", self.q.im)?;
        writeln!(f, "m_L = {:e}", self.m_l)?;
        writeln!(f, "m_H = {:e}", self.m_h)?;
        writeln!(f, "gamma_L = {:e}", self.gamma_l)?;
        write!(f, "gamma_H = {:e}", self.gamma_h)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Species {
    Bs,
}

impl FromStr for Species {
    type Err = MesonError;
    fn from_str(s: &str) -> Result<Self, MesonError> {
        match s.to_ascii_lowercase().as_str() {
            "bs" | "b_s" => Ok(Species::Bs),
            _ => Err(MesonError::UnknownSpecies(s.to_string())),
        }
    }
}

/// B_s: Δm = 1.2e-8 MeV, ΔΓ = -6.0e-11 MeV, m_L = 5366.92 MeV, Γ = 4.33e-10 MeV.
pub fn preset(species: Species) -> MixingParams {
    match species {
        Species::Bs => MixingParams::symmetric(5366.92, 1.2e-8, 4.33e-10, -6.0e-11)
            .expect("preset parameters are valid"),
    }
}

const PARAM_KEYS: [&str; 8] = [
    "p_re", "p_im", "q_re", "q_im", "m_L", "m_H", "gamma_L", "gamma_H",
];

/// Parses `key = value` lines; `#` starts a comment, blank lines are skipped.
/// All eight keys are required exactly once.
pub fn parse_params(text: &str) -> Result<MixingParams, MesonError> {
    let mut values: HashMap<&str, f64> = HashMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let err = |message: String| MesonError::ParamsFile {
            line: line_no,
            message,
        };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| err(format!("expected `key = value`, got `{line}`")))?;
        let key = key.trim();
        let key = PARAM_KEYS
            .iter()
            .copied()
            .find(|k| *k == key)
            .ok_or_else(|| err(format!("unknown key `{key}`")))?;
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|_| err(format!("bad number `{}` for {key}", value.trim())))?;
        if values.insert(key, value).is_some() {
            return Err(err(format!("duplicate key `{key}`")));
        }
    }
    let line = text.lines().count();
    let get = |k: &str| {
        values.get(k).copied().ok_or_else(|| MesonError::ParamsFile {
            line,
            message: format!("missing key `{k}`"),
        })
    };
    MixingParams::new(
        C64::new(get("p_re")?, get("p_im")?),
        C64::new(get("q_re")?, get("q_im")?),
        get("m_L")?,
        get("m_H")?,
        get("gamma_L")?,
        get("gamma_H")?,
    )
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GPair {
    pub g_plus: C64,
    pub g_minus: C64,
}

/// `g±(t) = ½(e^{-iE_H t} ± e^{-iE_L t})`, evaluated as
/// `e^{-i m̄ t - Γt/2}·(cos z, -i sin z)` with `z = (Δm/2 - iΔΓ/4) t`.
pub fn g_functions(params: &MixingParams, t: f64) -> GPair {
    let common = C64::new(-params.gamma() * t / 2.0, -params.mean_mass() * t).exp();
    let z = C64::new(params.delta_m() / 2.0, -params.delta_gamma() / 4.0) * t;
    GPair {
        g_plus: common * z.cos(),
        g_minus: common * z.sin() * C64::new(0.0, -1.0),
    }
}

/// Single-meson evolution in the flavor basis.
pub fn s_matrix_single(params: &MixingParams, t: f64) -> ComplexMatrix2 {
    let g = g_functions(params, t);
    let (p, q) = (params.p, params.q);
    ComplexMatrix2::new(g.g_plus, -(p / q) * g.g_minus, -(q / p) * g.g_minus, g.g_plus)
}

/// `(|M M̄⟩ + |M̄ M⟩)/√2`
pub fn bell_state_plus() -> TwoMesonState {
    let h = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    TwoParticleState([ZERO, h, h, ZERO])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    M,
    MBar,
}

impl Flavor {
    pub fn projector(self) -> ComplexMatrix2 {
        match self {
            Flavor::M => ComplexMatrix2::diag(ONE, ZERO),
            Flavor::MBar => ComplexMatrix2::diag(ZERO, ONE),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScenarioKind {
    /// Meson 1 measured at `t2`, meson 2 at `t3`.
    Scen32,
    /// Meson 1 measured at `t1 = 0`, meson 2 at `t3`; nothing at `t2`.
    Scen31,
    /// Meson 2 measured at `t1 = 0`, meson 1 at `t2`; state read at `t3`.
    Scen12,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementScenario {
    pub kind: ScenarioKind,
    pub t2: f64,
    pub t3: f64,
    /// Outcome for meson 1.
    pub first: Flavor,
    /// Outcome for meson 2.
    pub second: Flavor,
}

impl MeasurementScenario {
    /// Both mesons found as `M`.
    pub fn flavor_m(kind: ScenarioKind, t2: f64, t3: f64) -> Self {
        MeasurementScenario {
            kind,
            t2,
            t3,
            first: Flavor::M,
            second: Flavor::M,
        }
    }

    fn validate(&self) -> Result<(), MesonError> {
        if !(self.t2 >= 0.0 && self.t2 <= self.t3 && self.t3.is_finite()) {
            return Err(MesonError::InvalidTimes {
                t2: self.t2,
                t3: self.t3,
            });
        }
        Ok(())
    }
}

fn evolve_pair(params: &MixingParams, state: &TwoMesonState, t: f64) -> TwoMesonState {
    let s = s_matrix_single(params, t);
    state.apply(&s, &s)
}

/// Projector/evolution chain of the scenario applied to `Ψ⁺`, unnormalized.
pub fn scenario_state(
    params: &MixingParams,
    scen: &MeasurementScenario,
) -> Result<TwoMesonState, MesonError> {
    scen.validate()?;
    let p1 = scen.first.projector();
    let p2 = scen.second.projector();
    let psi = bell_state_plus();
    let out = match scen.kind {
        ScenarioKind::Scen32 => {
            let s = evolve_pair(params, &psi, scen.t2).apply_first(&p1);
            evolve_pair(params, &s, scen.t3 - scen.t2).apply_second(&p2)
        }
        ScenarioKind::Scen31 => {
            let s = psi.apply_first(&p1);
            evolve_pair(params, &s, scen.t3).apply_second(&p2)
        }
        ScenarioKind::Scen12 => {
            let s = psi.apply_second(&p2);
            let s = evolve_pair(params, &s, scen.t2).apply_first(&p1);
            evolve_pair(params, &s, scen.t3 - scen.t2)
        }
    };
    Ok(out)
}

/// Squared norm of [`scenario_state`]; valid for any `p`, `q`.
pub fn joint_flavor_probability(
    params: &MixingParams,
    scen: &MeasurementScenario,
) -> Result<f64, MesonError> {
    Ok(scenario_state(params, scen)?.norm_sqr())
}

/// Closed-form `M, M` probabilities for `|p| = |q|`:
///
/// - `Scen32`: `¼e^{-2Γt₃} ch(ΔΓ(t₃-t₂)/2) [ch(ΔΓ(t₂+t₃)/2) - cos(Δm(t₂+t₃))]`
/// - `Scen31`: `¼e^{-2Γt₃} ch(ΔΓt₃/2) [ch(ΔΓt₃/2) - cos(Δm t₃)]`
/// - `Scen12`: `¼e^{-2Γt₃} ch(ΔΓ(t₃-t₂)/2) ch(ΔΓt₃/2) [ch(ΔΓt₂/2) - cos(Δm t₂)]`
pub fn closed_form_probability(
    params: &MixingParams,
    scen: &MeasurementScenario,
) -> Result<f64, MesonError> {
    scen.validate()?;
    if !params.has_equal_mixing() {
        return Err(MesonError::UnequalMixing {
            p: params.p.norm(),
            q: params.q.norm(),
        });
    }
    if scen.first != Flavor::M || scen.second != Flavor::M {
        return Err(MesonError::ClosedFormOutcomes);
    }
    let (dm, dg) = (params.delta_m(), params.delta_gamma());
    let (t2, t3) = (scen.t2, scen.t3);
    let ch = |t: f64| (dg * t / 2.0).cosh();
    let bracket = |t: f64| ch(t) - (dm * t).cos();
    let prefactor = 0.25 * (-2.0 * params.gamma() * t3).exp();
    let value = match scen.kind {
        ScenarioKind::Scen32 => ch(t3 - t2) * bracket(t2 + t3),
        ScenarioKind::Scen31 => ch(t3) * bracket(t3),
        ScenarioKind::Scen12 => ch(t3 - t2) * ch(t3) * bracket(t2),
    };
    Ok(prefactor * value)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lgw2Margin {
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`; negative means violated.
    pub margin: f64,
    /// `cos α + cos β - cos(α+β)`, the `κ = 0` form compared against 1.
    pub cosine_lhs: f64,
}

impl Lgw2Margin {
    pub fn violated(&self) -> bool {
        self.margin < 0.0
    }
}

/// Two-time pair inequality in dimensionless form (`κ = ΔΓ/2Δm`,
/// `α = Δm t₃`, `β = Δm t₂`), with the common `¼e^{-2Γt₃}` divided out:
///
/// `[ch κ(α+β) - cos(α+β)] ch κ(α-β)
///   <= [ch κα - cos α] ch κα + [ch κβ - cos β] ch κ(α-β) ch κα`
pub fn lgw2_meson_margin(kappa: f64, alpha: f64, beta: f64) -> Result<Lgw2Margin, MesonError> {
    if !(beta > 0.0 && alpha > beta && alpha.is_finite()) {
        return Err(MesonError::InvalidAngles { alpha, beta });
    }
    if !kappa.is_finite() {
        return Err(MesonError::NonFinite("kappa"));
    }
    let ch = |x: f64| (kappa * x).cosh();
    let lhs = (ch(alpha + beta) - (alpha + beta).cos()) * ch(alpha - beta);
    let rhs = (ch(alpha) - alpha.cos()) * ch(alpha)
        + (ch(beta) - beta.cos()) * ch(alpha - beta) * ch(alpha);
    Ok(Lgw2Margin {
        lhs,
        rhs,
        margin: rhs - lhs,
        cosine_lhs: alpha.cos() + beta.cos() - (alpha + beta).cos(),
    })
}
