//! Shared oracles for the integration suites: quadrature, finite
//! differences and a closed-form 3×3 singular-value routine. These stay
//! independent of the library's own evaluation paths.
#![allow(dead_code)] // each test binary uses its own subset

use num_complex::Complex64;
use std::f64::consts::TAU;

/// Periodic trapezoid rule on `[0, 2π)` with `n` points (for a periodic
/// integrand the end corrections cancel and this is the plain Riemann sum,
/// spectrally exact for trigonometric polynomials below the Nyquist
/// frequency).
pub fn trapezoid_periodic(n: usize, f: impl Fn(f64) -> f64) -> f64 {
    let h = TAU / n as f64;
    (0..n).map(|k| f(k as f64 * h)).sum::<f64>() * h
}

/// Complex-valued counterpart of [`trapezoid_periodic`].
pub fn trapezoid_periodic_complex(n: usize, f: impl Fn(f64) -> Complex64) -> Complex64 {
    let h = TAU / n as f64;
    (0..n).map(|k| f(k as f64 * h)).sum::<Complex64>() * h
}

/// Central difference `f'(x) ≈ (f(x+h) − f(x−h)) / 2h`.
pub fn central_difference(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// Singular values of a complex 3×3 matrix, descending, by poweriteration
/// with deflation. Going through the Gram matrix's characteristic
/// polynomial alone cannot see ratios below √ε ≈ 1e-8 (the squaring eats
/// half the digits); deflating the dominant pair first keeps the second
/// singular value accurate relative to itself.
pub fn singular_values_3x3(m: &[[Complex64; 3]; 3]) -> [f64; 3] {
    let mut work = *m;
    let mut out = [0.0_f64; 3];
    for sigma in out.iter_mut() {
        let (s, u, v) = dominant_singular_triplet(&work);
        *sigma = s;
        for i in 0..3 {
            for j in 0..3 {
                work[i][j] -= s * u[i] * v[j].conj();
            }
        }
    }
    out
}

fn dominant_singular_triplet(m: &[[Complex64; 3]; 3]) -> (f64, [Complex64; 3], [Complex64; 3]) {
    let apply = |mat: &[[Complex64; 3]; 3], x: &[Complex64; 3], adjoint: bool| {
        let mut y = [Complex64::new(0.0, 0.0); 3];
        for i in 0..3 {
            for j in 0..3 {
                if adjoint {
                    y[i] += mat[j][i].conj() * x[j];
                } else {
                    y[i] += mat[i][j] * x[j];
                }
            }
        }
        y
    };
    let norm = |x: &[Complex64; 3]| x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    // fixed, non-symmetric start so no exact orthogonality accident survives
    let mut v = [
        Complex64::new(0.6, 0.1),
        Complex64::new(-0.5, 0.3),
        Complex64::new(0.4, -0.2),
    ];
    let vn = norm(&v);
    for vi in v.iter_mut() {
        *vi /= vn;
    }
    for _ in 0..60 {
        let u = apply(m, &v, false);
        let w = apply(m, &u, true);
        let wn = norm(&w);
        if wn == 0.0 {
            return (0.0, [Complex64::new(0.0, 0.0); 3], v);
        }
        for (vi, wi) in v.iter_mut().zip(&w) {
            *vi = wi / wn;
        }
    }
    let mut u = apply(m, &v, false);
    let sigma = norm(&u);
    if sigma > 0.0 {
        for ui in u.iter_mut() {
            *ui /= sigma;
        }
    }
    (sigma, u, v)
}

#[cfg(test)]
mod self_tests {
    use super::*;

    #[test]
    fn trapezoid_is_exact_for_trig_polynomials() {
        let got = trapezoid_periodic(64, |x| (3.0 * x).cos() * (3.0 * x).cos());
        assert!((got - std::f64::consts::PI).abs() < 1e-13);
    }

    #[test]
    fn singular_values_of_a_diagonal_matrix() {
        let z = Complex64::new(0.0, 0.0);
        let m = [
            [Complex64::new(3.0, 0.0), z, z],
            [z, Complex64::new(-2.0, 0.0), z],
            [z, z, Complex64::new(0.5, 0.0)],
        ];
        let s = singular_values_3x3(&m);
        assert!((s[0] - 3.0).abs() < 1e-12);
        assert!((s[1] - 2.0).abs() < 1e-12);
        assert!((s[2] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn singular_values_of_a_rank_one_matrix() {
        let u = [1.0, 2.0, -1.0];
        let v = [0.5, -0.25, 1.5];
        let mut m = [[Complex64::new(0.0, 0.0); 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] = Complex64::new(u[i] * v[j], 0.3 * u[i] * v[j]);
            }
        }
        let s = singular_values_3x3(&m);
        assert!(s[0] > 1.0);
        assert!(
            s[1] / s[0] < 1e-12,
            "rank-1 matrix: sigma2/sigma1 = {:e}",
            s[1] / s[0]
        );
    }
}
