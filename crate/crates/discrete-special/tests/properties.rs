//! Property tests for the lattice invariants: cyclicity, parity, reality,
//! the exact identity family (sum rules, plane wave, Graf), transform
//! round-trips and the Mathieu normalization conventions.

use discrete_special::bessel::{
    discrete_bessel, discrete_bessel_sum, graf_sum, linear_relation_residuals, plane_wave_expand,
};
use discrete_special::circle::{CyclicSignal, DiscreteCircle};
use discrete_special::mathieu_continuous::{AngularKind, MathieuSolution};
use discrete_special::mathieu_discrete::DiscreteMathieu;
use num_complex::Complex64;
use proptest::prelude::*;

fn odd_lattice() -> impl Strategy<Value = usize> {
    (1_usize..20).prop_map(|k| 2 * k + 1)
}

proptest! {
    #[test]
    fn discrete_bessel_is_cyclic_bit_exactly(
        n_points in odd_lattice(),
        order in -60_i64..60,
        rho in -15.0_f64..15.0,
    ) {
        let base = discrete_bessel(n_points, order, rho).unwrap();
        let shifted = discrete_bessel(n_points, order + n_points as i64, rho).unwrap();
        prop_assert_eq!(base, shifted);
    }

    #[test]
    fn discrete_bessel_parity_on_the_window(
        n_points in odd_lattice(),
        frac in 0.0_f64..1.0,
        rho in -15.0_f64..15.0,
    ) {
        let j = (n_points as i64 - 1) / 2;
        let order = (frac * j as f64) as i64;
        let b = discrete_bessel(n_points, order, rho).unwrap();
        let minus = discrete_bessel(n_points, -order, rho).unwrap();
        let sign = if order % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert!((minus - sign * b).abs() < 1e-14);
        let reflected = discrete_bessel(n_points, order, -rho).unwrap();
        prop_assert!((reflected - sign * b).abs() < 1e-14);
    }

    #[test]
    fn defining_sum_stays_real(
        n_points in odd_lattice(),
        order in -60_i64..60,
        rho in -20.0_f64..20.0,
    ) {
        let sum = discrete_bessel_sum(n_points, order, rho).unwrap();
        prop_assert!(sum.im.abs() < 1e-14, "imaginary residue {:e}", sum.im);
    }

    #[test]
    fn linear_relations_hold_for_random_lattices(
        n_points in odd_lattice(),
        rho in 0.0_f64..45.0,
    ) {
        let res = linear_relation_residuals(n_points, rho).unwrap();
        prop_assert!(res.even < 1e-12, "even residual {:e}", res.even);
        prop_assert!(res.odd < 1e-12, "odd residual {:e}", res.odd);
    }

    #[test]
    fn plane_wave_reconstructs_for_random_lattices(
        n_points in odd_lattice(),
        rho in 0.0_f64..30.0,
        m in 0_i64..64,
    ) {
        let phi = std::f64::consts::TAU
            * (m.rem_euclid(n_points as i64)) as f64
            / n_points as f64;
        let want = Complex64::from_polar(1.0, rho * phi.sin());
        let got = plane_wave_expand(n_points, rho, m).unwrap();
        prop_assert!((got - want).norm() < 1e-12, "error {:e}", (got - want).norm());
    }

    #[test]
    fn graf_convolution_collapses_for_random_orders(
        n_points in odd_lattice(),
        n_prime in -40_i64..40,
        rho in 0.0_f64..6.0,
        rho_prime in 0.0_f64..6.0,
    ) {
        let sum = graf_sum(n_points, n_prime, rho, rho_prime).unwrap();
        let direct = discrete_bessel(n_points, n_prime, rho + rho_prime).unwrap();
        prop_assert!((sum - direct).abs() < 1e-12, "residual {:e}", (sum - direct).abs());
    }

    #[test]
    fn transform_round_trip_and_parseval(
        n_points in 1_usize..24,
        seed in any::<u64>(),
    ) {
        let mut state = seed | 1;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let circle = DiscreteCircle::new(n_points);
        let f = CyclicSignal::from_fn(circle, |_, _| Complex64::new(next(), next()));
        let spec = f.dft();
        let back = spec.idft();
        for m in 0..n_points as i64 {
            prop_assert!((f.get(m) - back.get(m)).norm() < 1e-12);
        }
        // unitary transform preserves the inner product
        let norm_direct = f.inner_product(&f).unwrap().re;
        let norm_spectral = spec.inner_product(&spec).unwrap().re;
        prop_assert!((norm_direct - norm_spectral).abs() < 1e-11 * norm_direct.max(1.0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mathieu_norm_and_parity_conventions(
        kind_is_ce in any::<bool>(),
        order in 1_usize..8,
        q in 0.0_f64..5.0,
    ) {
        let kind = if kind_is_ce { AngularKind::Ce } else { AngularKind::Se };
        let sol = MathieuSolution::solve_order(kind, order, q).unwrap();
        // π-normalization in coefficient form
        let mut norm2: f64 = sol.coefficients().iter().map(|c| c * c).sum();
        if kind_is_ce && order % 2 == 0 {
            norm2 += sol.coefficients()[0] * sol.coefficients()[0];
        }
        prop_assert!((norm2 - 1.0).abs() < 1e-12, "norm² = {norm2}");
        // dominant-coefficient sign
        prop_assert!(sol.fourier_coefficient(order as i64) > 0.0);
        // termwise parity
        for &psi in &[0.3, 1.7] {
            match kind {
                AngularKind::Ce => prop_assert_eq!(sol.ce(psi), sol.ce(-psi)),
                AngularKind::Se => prop_assert_eq!(sol.se(psi), -sol.se(-psi)),
            }
        }
    }

    #[test]
    fn resolved_lattices_carry_the_discrete_norm(
        kind_is_ce in any::<bool>(),
        order in 1_usize..7,
        q in 0.0_f64..5.0,
    ) {
        let kind = if kind_is_ce { AngularKind::Ce } else { AngularKind::Se };
        let n_points = 61;
        let d = DiscreteMathieu::new(kind, order, q, n_points).unwrap();
        let norm = d.inner_product(&d).unwrap();
        prop_assert!(
            (norm - n_points as f64 / 2.0).abs() < 1e-10,
            "⟨f, f⟩ = {norm}"
        );
    }
}
