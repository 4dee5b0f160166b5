//! Spin-1/2 precession about `y` and sequential projective measurements
//! along axes in the (x, z) plane. ħ = 1 throughout.

use std::f64::consts::{PI, TAU};

use thiserror::Error;

use crate::linalg::{ComplexMatrix2, Spinor, TwoParticleState, C64};
use crate::outcome::Sign;

/// Tolerance for unit-norm states, orthogonality and Hermiticity checks.
pub const STATE_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpinError {
    #[error("chain needs n >= 3, got {0}")]
    ChainTooShort(usize),
    #[error("measurement times must be strictly ascending")]
    NonAscendingTimes,
    #[error("protocol needs at least one time")]
    NoTimes,
    #[error("{times} times but {axes} axes")]
    AxisCountMismatch { times: usize, axes: usize },
    #[error("initial state has squared norm {0}, expected 1")]
    NotNormalized(f64),
    #[error("at least one measurement is required")]
    NoMeasurements,
    #[error("time index {index} out of range for {len} times")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("measured time indices must be strictly ascending")]
    NonAscendingMeasurements,
    #[error("hamiltonian is not Hermitian")]
    NotHermitian,
    #[error("bra and ket overlap by {0}, expected orthogonal states")]
    NotOrthogonal(f64),
    #[error("total angle {0} must lie strictly between 0 and 2π")]
    InvalidAngle(f64),
    #[error("need at least two times for a transition, got n = {0}")]
    TooFewTimes(usize),
    #[error("duration {0} must be finite and non-negative")]
    InvalidDuration(f64),
}

/// Unit vector in the (x, z) plane at angle `theta` from `z` towards `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementAxis {
    theta: f64,
}

impl MeasurementAxis {
    /// Any angle, reduced into [0, 2π).
    pub fn new(theta: f64) -> Self {
        let reduced = theta.rem_euclid(TAU);
        MeasurementAxis {
            theta: if reduced >= TAU { 0.0 } else { reduced },
        }
    }

    pub fn z() -> Self {
        MeasurementAxis { theta: 0.0 }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Eigenvector of `n̂·σ` for the given outcome.
    pub fn eigenstate(&self, outcome: Sign) -> Spinor {
        let (s, c) = (self.theta / 2.0).sin_cos();
        match outcome {
            Sign::Plus => Spinor::real(c, s),
            Sign::Minus => Spinor::real(-s, c),
        }
    }
}

/// `exp(-i (ω/2) σ_y dt) = cos(ω dt/2) I - i sin(ω dt/2) σ_y`.
pub fn evolution_operator(omega: f64, dt: f64) -> ComplexMatrix2 {
    let (s, c) = (omega * dt / 2.0).sin_cos();
    ComplexMatrix2::identity().scale(C64::new(c, 0.0))
        + ComplexMatrix2::pauli_y().scale(C64::new(0.0, -s))
}

/// The precession Hamiltonian `(ω/2) σ_y`.
pub fn precession_hamiltonian(omega: f64) -> ComplexMatrix2 {
    ComplexMatrix2::pauli_y().scale(C64::new(omega / 2.0, 0.0))
}

/// `(I ± n̂·σ)/2`
pub fn projector(axis: MeasurementAxis, outcome: Sign) -> ComplexMatrix2 {
    let (s, c) = axis.theta.sin_cos();
    let n_sigma = ComplexMatrix2::pauli_x().scale(C64::new(s, 0.0))
        + ComplexMatrix2::pauli_z().scale(C64::new(c, 0.0));
    let sign = C64::new(f64::from(outcome.value()), 0.0);
    (ComplexMatrix2::identity() + n_sigma.scale(sign)).scale(C64::new(0.5, 0.0))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpinProtocol {
    omega: f64,
    times: Vec<f64>,
    axes: Vec<MeasurementAxis>,
    initial_state: Spinor,
}

impl SpinProtocol {
    /// `initial_state` is the state at `times[0]`.
    pub fn new(
        omega: f64,
        times: Vec<f64>,
        axes: Vec<MeasurementAxis>,
        initial_state: Spinor,
    ) -> Result<Self, SpinError> {
        if times.is_empty() {
            return Err(SpinError::NoTimes);
        }
        if times.len() != axes.len() {
            return Err(SpinError::AxisCountMismatch {
                times: times.len(),
                axes: axes.len(),
            });
        }
        if times.windows(2).any(|w| w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less)) {
            return Err(SpinError::NonAscendingTimes);
        }
        let norm = initial_state.norm_sqr();
        if (norm - 1.0).abs() > STATE_TOL {
            return Err(SpinError::NotNormalized(norm));
        }
        Ok(SpinProtocol {
            omega,
            times,
            axes,
            initial_state,
        })
    }

    /// `n` equally spaced times over `[0, 1]` with field `ω = rotation`.
    pub fn equal_intervals(
        n: usize,
        rotation: f64,
        axes: Vec<MeasurementAxis>,
        initial_state: Spinor,
    ) -> Result<Self, SpinError> {
        if n < 2 {
            return Err(SpinError::TooFewTimes(n));
        }
        let times = (0..n).map(|i| i as f64 / (n - 1) as f64).collect();
        SpinProtocol::new(rotation, times, axes, initial_state)
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn axes(&self) -> &[MeasurementAxis] {
        &self.axes
    }

    /// Squared norm of `P_k U ... P_j U P_i |ψ⟩` for the listed outcomes.
    pub fn sequential_probability(&self, measured: &[(usize, Sign)]) -> Result<f64, SpinError> {
        if measured.is_empty() {
            return Err(SpinError::NoMeasurements);
        }
        let mut state = self.initial_state;
        let mut now = self.times[0];
        let mut last: Option<usize> = None;
        for &(index, outcome) in measured {
            if index >= self.times.len() {
                return Err(SpinError::IndexOutOfRange {
                    index,
                    len: self.times.len(),
                });
            }
            if last.is_some_and(|l| index <= l) {
                return Err(SpinError::NonAscendingMeasurements);
            }
            last = Some(index);
            let t = self.times[index];
            state = evolution_operator(self.omega, t - now).apply(&state);
            state = projector(self.axes[index], outcome).apply(&state);
            now = t;
        }
        Ok(state.norm_sqr())
    }

    /// Probability of `to` given the system was found in `from`: the state is
    /// re-prepared as the eigenstate of the earlier outcome.
    pub fn transition_probability(
        &self,
        from: (usize, Sign),
        to: (usize, Sign),
    ) -> Result<f64, SpinError> {
        for index in [from.0, to.0] {
            if index >= self.times.len() {
                return Err(SpinError::IndexOutOfRange {
                    index,
                    len: self.times.len(),
                });
            }
        }
        if to.0 <= from.0 {
            return Err(SpinError::NonAscendingMeasurements);
        }
        let prepared = self.axes[from.0].eigenstate(from.1);
        let dt = self.times[to.0] - self.times[from.0];
        let state = evolution_operator(self.omega, dt).apply(&prepared);
        Ok(projector(self.axes[to.0], to.1).apply(&state).norm_sqr())
    }
}

/// Both sides of an inequality `lhs <= rhs`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Margin {
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
}

impl Margin {
    pub fn new(lhs: f64, rhs: f64) -> Self {
        Margin {
            lhs,
            rhs,
            margin: rhs - lhs,
        }
    }
}

/// Protocol behind [`lgwn_spin_margin`]: fixed `z` axis, total rotation π.
pub fn lgwn_protocol(n: usize) -> Result<SpinProtocol, SpinError> {
    if n < 3 {
        return Err(SpinError::ChainTooShort(n));
    }
    let axis = MeasurementAxis::z();
    SpinProtocol::equal_intervals(n, PI, vec![axis; n], axis.eigenstate(Sign::Plus))
}

/// n-time chain evaluated on the precessing spin, in reduced form:
/// `lhs = w(q_n+ | q_1-) = sin²(π/2)`,
/// `rhs = Σ w(q_i+ | q_{i-1}-) = (n-1) sin²(π/(2(n-1)))`.
pub fn lgwn_spin_margin(n: usize) -> Result<Margin, SpinError> {
    let proto = lgwn_protocol(n)?;
    let lhs = proto.transition_probability((0, Sign::Minus), (n - 1, Sign::Plus))?;
    let mut rhs = 0.0;
    for i in 1..n {
        rhs += proto.transition_probability((i - 1, Sign::Minus), (i, Sign::Plus))?;
    }
    Ok(Margin::new(lhs, rhs))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZenoBound {
    /// `|⟨bra| e^{-iHτ} |ket⟩|²` with `τ = total_time/(n-1)`.
    pub pair_prob: f64,
    /// Second-order coefficient of the pair probability in `τ`.
    pub sigma: f64,
    /// `total_time² · sigma / (n-1)`.
    pub bound: f64,
    pub step: f64,
}

/// Short-time transition estimate between orthogonal states.
///
/// `sigma` is the `τ²` coefficient of `⟨b|U|k⟩⟨k|U†|b⟩`:
/// `⟨b|H|k⟩⟨k|H|b⟩ - ½(⟨b|H²|k⟩⟨k|b⟩ + ⟨b|k⟩⟨k|H²|b⟩)`, which is
/// non-negative for orthogonal `b`, `k`.
pub fn zeno_bound(
    hamiltonian: &ComplexMatrix2,
    bra: &Spinor,
    ket: &Spinor,
    total_time: f64,
    n: usize,
) -> Result<ZenoBound, SpinError> {
    if n < 2 {
        return Err(SpinError::TooFewTimes(n));
    }
    if !total_time.is_finite() || total_time < 0.0 {
        return Err(SpinError::InvalidDuration(total_time));
    }
    if !hamiltonian.is_hermitian(STATE_TOL) {
        return Err(SpinError::NotHermitian);
    }
    let overlap = bra.inner(ket);
    if overlap.norm() > STATE_TOL {
        return Err(SpinError::NotOrthogonal(overlap.norm()));
    }
    let steps = (n - 1) as f64;
    let step = total_time / steps;
    let evolution = ComplexMatrix2::evolve_hermitian(hamiltonian, step);
    let pair_prob = evolution.matrix_element(bra, ket).norm_sqr();

    let squared = *hamiltonian * *hamiltonian;
    let h_bk = hamiltonian.matrix_element(bra, ket);
    let h_kb = hamiltonian.matrix_element(ket, bra);
    let h2_bk = squared.matrix_element(bra, ket);
    let h2_kb = squared.matrix_element(ket, bra);
    let sigma =
        (h_bk * h_kb - (h2_bk * ket.inner(bra) + overlap * h2_kb) * 0.5).re;

    Ok(ZenoBound {
        pair_prob,
        sigma,
        bound: total_time * total_time * sigma / steps,
        step,
    })
}

/// One row of the Zeno table for the spin with total rotation π over unit time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZenoRow {
    pub n: usize,
    pub pair_prob: f64,
    /// Sum of the n-1 adjacent pair probabilities of the chain.
    pub chain_sum: f64,
    pub bound: f64,
}

impl ZenoRow {
    pub fn ratio(&self) -> f64 {
        self.chain_sum / self.bound
    }
}

pub fn spin_zeno_row(n: usize) -> Result<ZenoRow, SpinError> {
    let h = precession_hamiltonian(PI);
    let z = MeasurementAxis::z();
    let report = zeno_bound(&h, &z.eigenstate(Sign::Plus), &z.eigenstate(Sign::Minus), 1.0, n)?;
    let chain = lgwn_spin_margin(n)?;
    Ok(ZenoRow {
        n,
        pair_prob: report.pair_prob,
        chain_sum: chain.rhs,
        bound: report.bound,
    })
}

/// How pair probabilities of the singlet chain are normalised.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChainNormalization {
    /// Joint probabilities on the anticorrelated pair (carry the factor ½).
    #[default]
    Paired,
    /// Conditioned on the first particle's outcome (factor ½ divided out).
    Reduced,
}

/// Spin singlet `(|↑↓⟩ - |↓↑⟩)/√2`.
pub fn singlet() -> TwoParticleState {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    TwoParticleState([C64::new(0.0, 0.0), C64::new(h, 0.0), C64::new(-h, 0.0), C64::new(0.0, 0.0)])
}

/// `‖(P₁ ⊗ P₂) Ψ⁻‖²`
pub fn singlet_joint_probability(
    first: (MeasurementAxis, Sign),
    second: (MeasurementAxis, Sign),
) -> f64 {
    singlet()
        .apply(&projector(first.0, first.1), &projector(second.0, second.1))
        .norm_sqr()
}

/// Finite-n Wigner chain on the singlet with equally spaced axes
/// `A = C_n, ..., C_1 = B` spanning `theta_total`.
///
/// `w(x+, y-)` for one particle is realised as `x+` on particle 1 and `y+`
/// on its anticorrelated partner.
pub fn wigner_chain_quantum(
    n: usize,
    theta_total: f64,
    normalization: ChainNormalization,
) -> Result<Margin, SpinError> {
    if n < 3 {
        return Err(SpinError::ChainTooShort(n));
    }
    if !(theta_total > 0.0 && theta_total < TAU) {
        return Err(SpinError::InvalidAngle(theta_total));
    }
    let step = theta_total / (n - 1) as f64;
    // C_k sits at (k-1)·step, so A = C_n is at theta_total and B = C_1 at 0
    let axis = |k: usize| MeasurementAxis::new((k - 1) as f64 * step);
    let scale = match normalization {
        ChainNormalization::Paired => 1.0,
        ChainNormalization::Reduced => 2.0,
    };
    let pair = |x: usize, y: usize| {
        scale * singlet_joint_probability((axis(x), Sign::Plus), (axis(y), Sign::Plus))
    };
    let lhs = pair(n, 1);
    let rhs: f64 = (2..=n).map(|k| pair(k, k - 1)).sum();
    Ok(Margin::new(lhs, rhs))
}
