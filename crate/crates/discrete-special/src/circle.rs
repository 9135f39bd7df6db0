//! The `N`-point circle: lattice angles, the phase basis, the discrete
//! inner product and the finite Fourier transform.
//!
//! Transforms are direct `O(N²)` sums. `N` stays in the low hundreds
//! everywhere in this crate, and direct summation keeps the test baselines
//! bit-stable across platforms.

use num_complex::Complex64;
use std::f64::consts::TAU;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircleError {
    #[error("signals live on different lattices: {left} points vs {right} points")]
    DimensionMismatch { left: usize, right: usize },
}

/// The lattice of `N` equidistant angles `θ_m = 2πm/N`, indices counted
/// modulo `N`.
///
/// Angles are recomputed as `2π·m/N` from the integer index on every call
/// rather than accumulated, so the lattice symmetry `m ↔ N−m` is exact in
/// floating point up to the rounding of a single multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiscreteCircle {
    n_points: usize,
}

impl DiscreteCircle {
    /// A circle with `n_points ≥ 1` lattice points.
    pub fn new(n_points: usize) -> Self {
        assert!(n_points >= 1, "a discrete circle needs at least one point");
        Self { n_points }
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    /// Reduce an arbitrary index into `[0, N)`.
    pub fn reduce(&self, index: i64) -> usize {
        index.rem_euclid(self.n_points as i64) as usize
    }

    /// Reduce an arbitrary index into the symmetric window around zero:
    /// `[-(N-1)/2, (N-1)/2]` for odd `N`, `[-(N/2-1), N/2]` for even `N`.
    pub fn reduce_symmetric(&self, index: i64) -> i64 {
        let n = self.n_points as i64;
        let r = index.rem_euclid(n);
        if 2 * r > n {
            r - n
        } else {
            r
        }
    }

    /// Lattice angle `θ_m = 2π·(m mod N)/N`.
    pub fn angle(&self, m: i64) -> f64 {
        TAU * self.reduce(m) as f64 / self.n_points as f64
    }

    /// All `N` angles, strictly increasing on `[0, 2π)`.
    pub fn angles(&self) -> Vec<f64> {
        (0..self.n_points).map(|m| self.angle(m as i64)).collect()
    }

    /// Phase-basis element `Φ_n(θ_m) = N^{-1/2} exp(2πi·nm/N)`.
    ///
    /// The product `n·m` is reduced modulo `N` in integer arithmetic before
    /// touching floating point, so `Φ_n = Φ_{n±N}` holds bit-exactly.
    pub fn phase(&self, n: i64, m: i64) -> Complex64 {
        let nn = self.n_points as i64;
        let prod = (self.reduce(n) as i64 * self.reduce(m) as i64).rem_euclid(nn);
        let arg = TAU * prod as f64 / self.n_points as f64;
        Complex64::new(arg.cos(), arg.sin()) / (self.n_points as f64).sqrt()
    }
}

/// `N` complex values attached to a [`DiscreteCircle`], indexed cyclically.
#[derive(Debug, Clone, PartialEq)]
pub struct CyclicSignal {
    circle: DiscreteCircle,
    values: Vec<Complex64>,
}

impl CyclicSignal {
    pub fn new(circle: DiscreteCircle, values: Vec<Complex64>) -> Self {
        assert_eq!(
            values.len(),
            circle.n_points(),
            "signal length must match the lattice size"
        );
        Self { circle, values }
    }

    /// Build a signal by evaluating `f(m, θ_m)` on the lattice.
    pub fn from_fn(circle: DiscreteCircle, mut f: impl FnMut(usize, f64) -> Complex64) -> Self {
        let values = (0..circle.n_points())
            .map(|m| f(m, circle.angle(m as i64)))
            .collect();
        Self { circle, values }
    }

    /// The `n`-th phase-basis function as a signal.
    pub fn phase_basis(circle: DiscreteCircle, n: i64) -> Self {
        Self::from_fn(circle, |m, _| circle.phase(n, m as i64))
    }

    pub fn circle(&self) -> DiscreteCircle {
        self.circle
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Cyclic access: `get(m)` and `get(m ± N)` coincide.
    pub fn get(&self, m: i64) -> Complex64 {
        self.values[self.circle.reduce(m)]
    }

    /// Discrete inner product `Σ_m conj(f_m)·g_m`.
    pub fn inner_product(&self, other: &Self) -> Result<Complex64, CircleError> {
        if self.circle.n_points() != other.circle.n_points() {
            return Err(CircleError::DimensionMismatch {
                left: self.circle.n_points(),
                right: other.circle.n_points(),
            });
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(f, g)| f.conj() * g)
            .sum())
    }

    /// Forward transform: `F_n = ⟨Φ_n, f⟩` in the phase basis.
    pub fn dft(&self) -> CyclicSignal {
        let n_points = self.circle.n_points();
        let values = (0..n_points)
            .map(|n| {
                (0..n_points)
                    .map(|m| self.circle.phase(n as i64, m as i64).conj() * self.values[m])
                    .sum()
            })
            .collect();
        CyclicSignal::new(self.circle, values)
    }

    /// Inverse transform: `f_m = Σ_n F_n·Φ_n(θ_m)`.
    pub fn idft(&self) -> CyclicSignal {
        let n_points = self.circle.n_points();
        let values = (0..n_points)
            .map(|m| {
                (0..n_points)
                    .map(|n| self.values[n] * self.circle.phase(n as i64, m as i64))
                    .sum()
            })
            .collect();
        CyclicSignal::new(self.circle, values)
    }
}
