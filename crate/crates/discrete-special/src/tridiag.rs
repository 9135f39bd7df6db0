//! Self-contained symmetric tridiagonal eigensolver.
//!
//! Eigenvalues come from bisection on the Sturm sequence (the number of
//! negative pivots of the shifted LDLᵀ factorization counts eigenvalues
//! below the shift); eigenvectors come from inverse iteration with a
//! partially pivoted tridiagonal solve. The matrices in this crate stay
//! below a few hundred rows, so nothing fancier is warranted.

/// Symmetric tridiagonal matrix given by its diagonal and off-diagonal.
#[derive(Debug, Clone)]
pub struct SymTridiag {
    diag: Vec<f64>,
    off: Vec<f64>,
}

impl SymTridiag {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Self {
        assert_eq!(
            diag.len(),
            off.len() + 1,
            "off-diagonal must be one shorter than the diagonal"
        );
        Self { diag, off }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// Number of eigenvalues strictly below `x` (negative pivots of the
    /// shifted LDLᵀ factorization).
    pub fn count_below(&self, x: f64) -> usize {
        let guard = f64::MIN_POSITIVE.sqrt();
        let mut count = 0;
        let mut pivot = self.diag[0] - x;
        if pivot < 0.0 {
            count += 1;
        }
        for i in 1..self.dim() {
            let safe = if pivot.abs() < guard {
                if pivot < 0.0 {
                    -guard
                } else {
                    guard
                }
            } else {
                pivot
            };
            pivot = (self.diag[i] - x) - self.off[i - 1] * self.off[i - 1] / safe;
            if pivot < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn gershgorin(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..self.dim() {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i < self.dim() - 1 {
                self.off[i].abs()
            } else {
                0.0
            };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo - 1.0, hi + 1.0)
    }

    /// `k`-th smallest eigenvalue (0-based), bisected to machine width.
    pub fn eigenvalue(&self, k: usize) -> f64 {
        assert!(k < self.dim(), "eigenvalue index out of range");
        let (mut lo, mut hi) = self.gershgorin();
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if hi - lo < 2.0 * f64::EPSILON * mid.abs().max(1.0) {
                break;
            }
            if self.count_below(mid) <= k {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Solve `(T − shift·I)x = b` in place by Gaussian elimination with
    /// partial pivoting (one superdiagonal of fill-in).
    fn solve_shifted(&self, shift: f64, b: &mut [f64]) {
        let n = self.dim();
        assert_eq!(b.len(), n);
        let guard = f64::MIN_POSITIVE.sqrt();
        // band storage: sub, main, sup, sup2 (fill-in)
        let mut main: Vec<f64> = self.diag.iter().map(|d| d - shift).collect();
        let mut sup = self.off.clone();
        let mut sup2 = vec![0.0; n.saturating_sub(2)];
        let mut sub = self.off.clone();

        for i in 0..n - 1 {
            // row i:   [main[i], sup[i], sup2[i]]
            // row i+1: [sub[i],  main[i+1], sup[i+1]]
            if sub[i].abs() > main[i].abs() {
                std::mem::swap(&mut main[i], &mut sub[i]);
                std::mem::swap(&mut sup[i], &mut main[i + 1]);
                if i + 1 < n - 1 {
                    std::mem::swap(&mut sup2[i], &mut sup[i + 1]);
                }
                b.swap(i, i + 1);
            }
            let pivot = if main[i].abs() < guard {
                if main[i] < 0.0 {
                    -guard
                } else {
                    guard
                }
            } else {
                main[i]
            };
            let factor = sub[i] / pivot;
            main[i + 1] -= factor * sup[i];
            if i + 1 < n - 1 {
                sup[i + 1] -= factor * sup2[i];
            }
            b[i + 1] -= factor * b[i];
            main[i] = pivot;
        }
        // back substitution
        for i in (0..n).rev() {
            let mut acc = b[i];
            if i + 1 < n {
                acc -= sup[i] * b[i + 1];
            }
            if i + 2 < n {
                acc -= sup2[i] * b[i + 2];
            }
            let pivot = if main[i].abs() < guard {
                if main[i] < 0.0 {
                    -guard
                } else {
                    guard
                }
            } else {
                main[i]
            };
            b[i] = acc / pivot;
        }
    }

    /// Unit eigenvector for an already-converged eigenvalue, by inverse
    /// iteration. A diagonal matrix short-circuits to a coordinate vector.
    pub fn eigenvector(&self, lambda: f64) -> Vec<f64> {
        let n = self.dim();
        if self.off.iter().all(|&e| e == 0.0) {
            let mut best = 0;
            for i in 1..n {
                if (self.diag[i] - lambda).abs() < (self.diag[best] - lambda).abs() {
                    best = i;
                }
            }
            let mut v = vec![0.0; n];
            v[best] = 1.0;
            return v;
        }

        let mut v = vec![1.0 / (n as f64).sqrt(); n];
        let scale = self
            .diag
            .iter()
            .chain(self.off.iter())
            .fold(lambda.abs().max(1.0), |m, x| m.max(x.abs()));
        for _ in 0..5 {
            self.solve_shifted(lambda, &mut v);
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            for x in v.iter_mut() {
                *x /= norm;
            }
            if self.residual(lambda, &v) < 64.0 * f64::EPSILON * scale {
                break;
            }
        }
        v
    }

    /// `‖(T − λ)v‖_∞` for a unit vector `v`.
    pub fn residual(&self, lambda: f64, v: &[f64]) -> f64 {
        let n = self.dim();
        let mut worst = 0.0_f64;
        for i in 0..n {
            let mut acc = (self.diag[i] - lambda) * v[i];
            if i > 0 {
                acc += self.off[i - 1] * v[i - 1];
            }
            if i + 1 < n {
                acc += self.off[i] * v[i + 1];
            }
            worst = worst.max(acc.abs());
        }
        worst
    }
}
