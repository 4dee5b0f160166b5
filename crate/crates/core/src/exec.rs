//! Parameter scans with a switchable execution strategy.
//!
//! `Parallel` uses rayon when the `parallel` feature is on and silently falls
//! back to the sequential loop otherwise. Results come back in input order
//! either way.

use std::ops::RangeInclusive;

use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::meson::{lgw2_meson_margin, Lgw2Margin, MesonError};
use crate::outcome::{LinearInequality, Measure, OutcomeError};
use crate::spin::{lgwn_spin_margin, spin_zeno_row, Margin, SpinError, ZenoRow};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// Whether `Parallel` actually runs on a thread pool in this build.
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }
}

/// `lgwn_spin_margin` for every `n` in the range.
pub fn spin_scan(
    ns: RangeInclusive<usize>,
    exec: Execution,
) -> Result<Vec<(usize, Margin)>, SpinError> {
    let ns: Vec<usize> = ns.collect();
    exec.map(&ns, |&n| lgwn_spin_margin(n).map(|m| (n, m)))
        .into_iter()
        .collect()
}

/// Zeno rows for `n = 3..=n_max`.
pub fn zeno_table(n_max: usize, exec: Execution) -> Result<Vec<ZenoRow>, SpinError> {
    if n_max < 3 {
        return Err(SpinError::ChainTooShort(n_max));
    }
    let ns: Vec<usize> = (3..=n_max).collect();
    exec.map(&ns, |&n| spin_zeno_row(n)).into_iter().collect()
}

/// `steps` evenly spaced values from `lo` to `hi` inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridAxis {
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
}

impl GridAxis {
    pub fn new(lo: f64, hi: f64, steps: usize) -> Self {
        GridAxis { lo, hi, steps }
    }

    pub fn values(&self) -> Vec<f64> {
        match self.steps {
            0 => Vec::new(),
            1 => vec![self.lo],
            s => (0..s)
                .map(|i| self.lo + (self.hi - self.lo) * i as f64 / (s - 1) as f64)
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub kappa: f64,
    pub alpha: f64,
    pub beta: f64,
    /// `None` where `alpha > beta > 0` fails.
    pub result: Option<Lgw2Margin>,
}

/// Dimensionless meson margin over an `alpha × beta` grid, alpha outermost.
pub fn meson_grid(kappa: f64, alpha: GridAxis, beta: GridAxis, exec: Execution) -> Vec<GridPoint> {
    let betas = beta.values();
    let points: Vec<(f64, f64)> = alpha
        .values()
        .into_iter()
        .flat_map(|a| betas.iter().map(move |&b| (a, b)))
        .collect();
    exec.map(&points, |&(alpha, beta)| GridPoint {
        kappa,
        alpha,
        beta,
        result: match lgw2_meson_margin(kappa, alpha, beta) {
            Ok(m) => Some(m),
            Err(MesonError::InvalidAngles { .. }) => None,
            Err(e) => panic!("unexpected meson error: {e}"),
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleSummary {
    pub samples: usize,
    pub min_margin: f64,
    /// Samples with margin below `-1e-12`.
    pub violations: usize,
}

/// Evaluates the inequality on `samples` random normalized measures.
/// Sample `i` draws from its own generator seeded with `seed + i`, so the
/// outcome does not depend on the execution strategy.
pub fn random_validity_sample(
    ineq: &LinearInequality,
    samples: usize,
    seed: u64,
    exec: Execution,
) -> Result<SampleSummary, OutcomeError> {
    let indices: Vec<u64> = (0..samples as u64).collect();
    let space = ineq.space();
    let margins = exec.map(&indices, |&i| {
        let mut rng = StdRng::seed_from_u64(seed.wrapping_add(i));
        ineq.evaluate(&Measure::random(space, &mut rng)).map(|e| e.margin)
    });
    let mut summary = SampleSummary {
        samples,
        min_margin: f64::INFINITY,
        violations: 0,
    };
    for m in margins {
        let m = m?;
        summary.min_margin = summary.min_margin.min(m);
        if m < -1e-12 {
            summary.violations += 1;
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::suite::{build_inequality, InequalityKind};

    #[test]
    fn grid_axis_values() {
        assert_eq!(GridAxis::new(0.0, 1.0, 3).values(), vec![0.0, 0.5, 1.0]);
        assert_eq!(GridAxis::new(2.0, 9.0, 1).values(), vec![2.0]);
        assert!(GridAxis::new(0.0, 1.0, 0).values().is_empty());
    }

    #[test]
    fn strategies_agree() {
        let a = GridAxis::new(0.05, 3.1, 17);
        let b = GridAxis::new(0.05, 3.1, 13);
        let seq = meson_grid(-2.5e-3, a, b, Execution::Sequential);
        let par = meson_grid(-2.5e-3, a, b, Execution::Parallel);
        assert_eq!(seq, par);
        assert_eq!(seq.len(), 17 * 13);
        assert!(seq.iter().any(|p| p.result.is_none()));

        let (_, ineq) = build_inequality(InequalityKind::Lgw3).unwrap();
        let s = random_validity_sample(&ineq, 500, 7, Execution::Sequential).unwrap();
        let p = random_validity_sample(&ineq, 500, 7, Execution::Parallel).unwrap();
        assert_eq!(s, p);
        assert_eq!(s.violations, 0);
        assert!(s.min_margin >= -1e-12);

        assert_eq!(
            spin_scan(3..=40, Execution::Sequential).unwrap(),
            spin_scan(3..=40, Execution::Parallel).unwrap()
        );
    }

    #[test]
    fn zeno_table_rows() {
        let rows = zeno_table(12, Execution::default()).unwrap();
        assert_eq!(rows.len(), 10);
        assert_eq!(rows[0].n, 3);
        assert!(zeno_table(2, Execution::Sequential).is_err());
    }
}
