//! 2×2 complex matrices, two-component spinors and the two-particle
//! tensor-product helpers used by the spin and meson models.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spinor(pub [C64; 2]);

impl Spinor {
    pub fn new(up: C64, down: C64) -> Spinor {
        Spinor([up, down])
    }

    pub fn real(up: f64, down: f64) -> Spinor {
        Spinor([C64::new(up, 0.0), C64::new(down, 0.0)])
    }

    pub fn up() -> Spinor {
        Spinor::real(1.0, 0.0)
    }

    pub fn down() -> Spinor {
        Spinor::real(0.0, 1.0)
    }

    /// `⟨self|other⟩`
    pub fn inner(&self, other: &Spinor) -> C64 {
        self.0[0].conj() * other.0[0] + self.0[1].conj() * other.0[1]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0[0].norm_sqr() + self.0[1].norm_sqr()
    }

    pub fn scale(&self, k: C64) -> Spinor {
        Spinor([self.0[0] * k, self.0[1] * k])
    }
}

/// Row-major 2×2 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix2(pub [[C64; 2]; 2]);

impl ComplexMatrix2 {
    pub fn new(a: C64, b: C64, c: C64, d: C64) -> Self {
        ComplexMatrix2([[a, b], [c, d]])
    }

    pub fn identity() -> Self {
        Self::new(ONE, ZERO, ZERO, ONE)
    }

    pub fn zero() -> Self {
        Self::new(ZERO, ZERO, ZERO, ZERO)
    }

    pub fn pauli_x() -> Self {
        Self::new(ZERO, ONE, ONE, ZERO)
    }

    pub fn pauli_y() -> Self {
        Self::new(ZERO, -I, I, ZERO)
    }

    pub fn pauli_z() -> Self {
        Self::new(ONE, ZERO, ZERO, -ONE)
    }

    pub fn diag(a: C64, d: C64) -> Self {
        Self::new(a, ZERO, ZERO, d)
    }

    /// `|v⟩⟨v|`
    pub fn outer(v: &Spinor) -> Self {
        let [a, b] = v.0;
        Self::new(a * a.conj(), a * b.conj(), b * a.conj(), b * b.conj())
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.0[row][col]
    }

    pub fn scale(&self, k: C64) -> Self {
        let m = self.0;
        Self::new(m[0][0] * k, m[0][1] * k, m[1][0] * k, m[1][1] * k)
    }

    pub fn adjoint(&self) -> Self {
        let m = self.0;
        Self::new(m[0][0].conj(), m[1][0].conj(), m[0][1].conj(), m[1][1].conj())
    }

    pub fn trace(&self) -> C64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn apply(&self, v: &Spinor) -> Spinor {
        let m = self.0;
        Spinor([
            m[0][0] * v.0[0] + m[0][1] * v.0[1],
            m[1][0] * v.0[0] + m[1][1] * v.0[1],
        ])
    }

    /// `⟨bra| self |ket⟩`
    pub fn matrix_element(&self, bra: &Spinor, ket: &Spinor) -> C64 {
        bra.inner(&self.apply(ket))
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let d = *self - *other;
        d.0.iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.adjoint()) <= tol
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        (self.adjoint() * *self).max_abs_diff(&Self::identity()) <= tol
    }

    /// Decomposition `h0·I + hx·σx + hy·σy + hz·σz` of a Hermitian matrix.
    pub fn pauli_components(&self) -> [f64; 4] {
        let m = self.0;
        [
            0.5 * (m[0][0].re + m[1][1].re),
            m[0][1].re,
            -m[0][1].im,
            0.5 * (m[0][0].re - m[1][1].re),
        ]
    }

    /// `exp(-i H t)` for Hermitian `H` in closed form:
    /// `e^{-i h0 t} (cos(|h| t) I - i sin(|h| t) ĥ·σ)`.
    pub fn evolve_hermitian(hamiltonian: &Self, t: f64) -> Self {
        let [h0, hx, hy, hz] = hamiltonian.pauli_components();
        let norm = (hx * hx + hy * hy + hz * hz).sqrt();
        let angle = norm * t;
        // sin(|h| t)/|h| without dividing by zero
        let sinc = if norm == 0.0 { t } else { angle.sin() / norm };
        let generator = Self::pauli_x().scale(C64::new(hx, 0.0))
            + Self::pauli_y().scale(C64::new(hy, 0.0))
            + Self::pauli_z().scale(C64::new(hz, 0.0));
        let body = Self::identity().scale(C64::new(angle.cos(), 0.0))
            + generator.scale(C64::new(0.0, -sinc));
        body.scale(C64::from_polar(1.0, -h0 * t))
    }
}

impl Add for ComplexMatrix2 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (a, b) = (self.0, rhs.0);
        Self::new(
            a[0][0] + b[0][0],
            a[0][1] + b[0][1],
            a[1][0] + b[1][0],
            a[1][1] + b[1][1],
        )
    }
}

impl Sub for ComplexMatrix2 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + rhs.scale(-ONE)
    }
}

impl Mul for ComplexMatrix2 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (a, b) = (self.0, rhs.0);
        Self::new(
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )
    }
}

/// Amplitudes on `H⁽¹⁾ ⊗ H⁽²⁾`; index `2·i₁ + i₂`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoParticleState(pub [C64; 4]);

impl TwoParticleState {
    pub fn product(first: &Spinor, second: &Spinor) -> Self {
        let mut out = [ZERO; 4];
        for (i, a) in first.0.iter().enumerate() {
            for (j, b) in second.0.iter().enumerate() {
                out[2 * i + j] = a * b;
            }
        }
        TwoParticleState(out)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    /// `(A ⊗ B) |self⟩`
    pub fn apply(&self, first: &ComplexMatrix2, second: &ComplexMatrix2) -> Self {
        let mut out = [ZERO; 4];
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = ZERO;
                for k in 0..2 {
                    for l in 0..2 {
                        acc += first.0[i][k] * second.0[j][l] * self.0[2 * k + l];
                    }
                }
                out[2 * i + j] = acc;
            }
        }
        TwoParticleState(out)
    }

    pub fn apply_first(&self, op: &ComplexMatrix2) -> Self {
        self.apply(op, &ComplexMatrix2::identity())
    }

    pub fn apply_second(&self, op: &ComplexMatrix2) -> Self {
        self.apply(&ComplexMatrix2::identity(), op)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_algebra() {
        let (x, y, z) = (
            ComplexMatrix2::pauli_x(),
            ComplexMatrix2::pauli_y(),
            ComplexMatrix2::pauli_z(),
        );
        assert!((x * y).max_abs_diff(&z.scale(I)) < 1e-15);
        assert!((y * y).max_abs_diff(&ComplexMatrix2::identity()) < 1e-15);
        for m in [x, y, z] {
            assert!(m.is_hermitian(0.0));
            assert!(m.is_unitary(1e-15));
        }
    }

    /// Truncated Taylor series of exp(-iHt), independent of the closed form.
    fn series_exp(h: &ComplexMatrix2, t: f64) -> ComplexMatrix2 {
        let a = h.scale(C64::new(0.0, -t));
        let mut term = ComplexMatrix2::identity();
        let mut sum = term;
        for k in 1..60 {
            term = (term * a).scale(C64::new(1.0 / k as f64, 0.0));
            sum = sum + term;
        }
        sum
    }

    #[test]
    fn closed_form_exponential_matches_series() {
        let hs = [
            ComplexMatrix2::new(
                C64::new(0.3, 0.0),
                C64::new(0.2, -0.7),
                C64::new(0.2, 0.7),
                C64::new(-1.1, 0.0),
            ),
            ComplexMatrix2::identity().scale(C64::new(0.8, 0.0)),
            ComplexMatrix2::zero(),
        ];
        for h in &hs {
            for t in [0.0, 0.37, 1.9] {
                let closed = ComplexMatrix2::evolve_hermitian(h, t);
                assert!(closed.max_abs_diff(&series_exp(h, t)) < 1e-12);
                assert!(closed.is_unitary(1e-12));
            }
        }
    }

    #[test]
    fn tensor_product_apply_is_kron() {
        let a = ComplexMatrix2::new(ONE, I, C64::new(2.0, 0.0), -ONE);
        let b = ComplexMatrix2::pauli_y();
        let u = Spinor::new(C64::new(0.6, 0.1), C64::new(-0.2, 0.3));
        let v = Spinor::new(C64::new(0.1, 0.0), C64::new(0.5, -0.4));
        let lhs = TwoParticleState::product(&u, &v).apply(&a, &b);
        let rhs = TwoParticleState::product(&a.apply(&u), &b.apply(&v));
        assert!(lhs.max_abs_diff(&rhs) < 1e-15);
    }
}
